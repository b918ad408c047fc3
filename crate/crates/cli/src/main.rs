//! `reflex` — exact analysis of reflection representations and their
//! exterior powers: validation, digraphs, irreducibility certificates,
//! cross-representation isomorphism tests, and explicit degree-1 lifts.

mod input;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use reflex_core::digraph::{associated_digraph, connected_basis_subset};
use reflex_core::exterior::{binomial, exterior_power};
use reflex_core::families::{affine_an_vx, quotient_rep};
use reflex_core::lifting::{lift_isomorphism, LiftError};
use reflex_core::modtheory::{
    check_theorem1, check_theorem2, finite_group_character_oracle, hom_space,
    is_simple_reflection, MatrixRep, ModError, SimplicityCertificate, Theorem2Outcome,
};
use reflex_core::reflection::validate_reflection;
use reflex_core::report::{Report, Verdict};
use reflex_core::{Matrix, Scalar};

use input::{resolve, resolve_str, FamilyFlags, InputError, ResolvedInput};

#[derive(Parser)]
#[command(
    name = "reflex",
    version,
    about = "Exact analysis of reflection representations and their exterior powers"
)]
struct Cli {
    /// Emit the machine-readable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed recorded in the report (conjugate families carry their own)
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// A reflex-rep v1 file, a family file, or a compact spec like
    /// "affineA:n=2,x=2"
    input: Option<String>,
    /// Family name: symmetric, dihedral, affineA, section4, conjugate
    #[arg(long)]
    family: Option<String>,
    /// Rank parameter for symmetric/affineA
    #[arg(long)]
    n: Option<usize>,
    /// Order parameter for dihedral (3, 4, 5 or 6)
    #[arg(long)]
    m: Option<usize>,
    /// Parameter x for affineA, in scalar syntax (e.g. 2, -1, 1/2)
    #[arg(long)]
    x: Option<String>,
    /// Base family tag for --family conjugate
    #[arg(long)]
    base: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every generator is a generalized reflection and report
    /// the extracted reflection data
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Digraph, connectivity, simplicity and eigenspace dimensions
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Report the associated digraph and its connectivity
        #[arg(long)]
        digraph: bool,
        /// Emit the digraph as DOT text
        #[arg(long)]
        dot: bool,
        /// Decide simplicity with a certificate
        #[arg(long)]
        simple: bool,
        /// Eigenspace dimension table for this exterior degree
        #[arg(long)]
        exterior: Option<usize>,
    },
    /// Certify that all exterior powers are simple and pairwise distinct
    Theorem1 {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide whether two exterior powers are isomorphic; on success lift
    /// the isomorphism to degree 1
    Theorem2 {
        /// First input (file or compact family spec)
        input1: String,
        /// Second input (file or compact family spec)
        input2: String,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
    },
    /// Lift an exterior-power isomorphism to degree 1 and print the map,
    /// the z-tables and the verification transcript
    Lift {
        input1: String,
        input2: String,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
    },
    /// Sweep the affine family over a list of parameters and inventory the
    /// resulting pairwise-distinct simple modules
    Catalog {
        /// Family to sweep (only affineA is parametrized)
        #[arg(long, default_value = "affineA")]
        family: String,
        /// Rank parameter
        #[arg(long)]
        n: usize,
        /// Comma-separated list of x values in scalar syntax
        #[arg(long = "x-list", value_delimiter = ',')]
        x_list: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let seed = cli.seed;
    let started = Instant::now();
    let outcome = run(cli.command, seed);
    match outcome {
        Ok((mut report, extra_text)) => {
            report.timing_ms = started.elapsed().as_millis() as u64;
            report.seed = seed;
            if json {
                println!("{}", report.to_json_string());
            } else {
                print!("{}", report.render_text());
                if let Some(extra) = extra_text {
                    println!("{extra}");
                }
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Usage-level failure: bad input, bad range, unreadable file. Exits 2.
type UsageError = Box<dyn std::error::Error>;

fn run(command: Command, seed: Option<u64>) -> Result<(Report, Option<String>), UsageError> {
    match command {
        Command::Validate { input } => cmd_validate(&input),
        Command::Analyze { input, digraph, dot, simple, exterior } => {
            cmd_analyze(&input, digraph, dot, simple, exterior)
        }
        Command::Theorem1 { input } => cmd_theorem1(&input),
        Command::Theorem2 { input1, input2, d1, d2 } => cmd_theorem2(&input1, &input2, d1, d2),
        Command::Lift { input1, input2, d1, d2 } => cmd_lift(&input1, &input2, d1, d2),
        Command::Catalog { family, n, x_list } => cmd_catalog(&family, n, &x_list, seed),
    }
}

fn flags_of(input: &InputArgs) -> FamilyFlags {
    FamilyFlags {
        family: input.family.clone(),
        n: input.n,
        m: input.m,
        x: input.x.clone(),
        base: input.base.clone(),
        seed: None,
    }
}

fn resolve_input(input: &InputArgs) -> Result<ResolvedInput, InputError> {
    resolve(&input.input, &flags_of(input))
}

fn scalar_vec_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn matrix_rows_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

fn certificate_evidence(cert: &SimplicityCertificate) -> serde_json::Value {
    match cert {
        SimplicityCertificate::Simple { enveloping_dim, endomorphism_dim } => json!({
            "verdict": "simple",
            "enveloping_dim": enveloping_dim,
            "endomorphism_dim": endomorphism_dim,
        }),
        SimplicityCertificate::NotSimple { enveloping_dim, invariant_subspace } => json!({
            "verdict": "not simple",
            "enveloping_dim": enveloping_dim,
            "invariant_subspace": invariant_subspace
                .iter()
                .map(|v| scalar_vec_strings(v))
                .collect::<Vec<_>>(),
        }),
    }
}

fn cmd_validate(input: &InputArgs) -> Result<(Report, Option<String>), UsageError> {
    let resolved = input::resolve_for_validation(&input.input, &flags_of(input))?;
    let mut report = Report::new("validate", &resolved.digest);
    report.push("input", Verdict::Pass, json!(resolved.description));
    for (name, matrix) in &resolved.named {
        match validate_reflection(name, matrix) {
            Ok(g) => report.push(
                format!("validate/{name}"),
                Verdict::Pass,
                json!({
                    "alpha": scalar_vec_strings(g.alpha()),
                    "lambda": g.lambda().to_string(),
                }),
            ),
            Err(e) => report.push(format!("validate/{name}"), Verdict::Fail, json!(e.to_string())),
        }
    }
    Ok((report, None))
}

fn cmd_analyze(
    input: &InputArgs,
    digraph: bool,
    dot: bool,
    simple: bool,
    exterior: Option<usize>,
) -> Result<(Report, Option<String>), UsageError> {
    let resolved = resolve_input(input)?;
    let rep = &resolved.rep;
    let mut report = Report::new("analyze", &resolved.digest);
    report.push("input", Verdict::Pass, json!(resolved.description));
    let mut extra = None;

    // Default to the digraph and simplicity sections when nothing is asked.
    let all_default = !digraph && !dot && !simple && exterior.is_none();
    let (digraph, simple) = (digraph || dot || all_default, simple || all_default);

    if digraph {
        let indices: BTreeSet<usize> = (0..rep.k()).collect();
        let g = associated_digraph(rep, &indices)?;
        report.push(
            "digraph",
            Verdict::Pass,
            json!({
                "vertices": g.vertices().iter().collect::<Vec<_>>(),
                "arrows": g.arrows().iter().collect::<Vec<_>>(),
                "weakly_connected": g.is_weakly_connected(),
                "strongly_connected": g.is_strongly_connected(),
            }),
        );
        if dot {
            let dot_text = g.to_dot_with(|i| rep.generator(i).name().to_string());
            report.push("digraph/dot", Verdict::Pass, json!(dot_text.clone()));
            extra = Some(dot_text);
        }
    }

    if simple {
        match is_simple_reflection(rep) {
            Ok(cert) => {
                let verdict = if cert.is_simple() { Verdict::Pass } else { Verdict::Fail };
                report.push("simple", verdict, certificate_evidence(&cert));
                if cert.is_simple() {
                    // The reflection vectors of a simple representation span.
                    let rank = rep.alpha_matrix().rank();
                    let verdict = if rank == rep.dim() { Verdict::Pass } else { Verdict::Fail };
                    report.push(
                        "reflection-vectors-span",
                        verdict,
                        json!({"rank": rank, "dim": rep.dim()}),
                    );
                    match connected_basis_subset(rep) {
                        Ok(subset) => report.push(
                            "connected-basis-subset",
                            Verdict::Pass,
                            json!(subset.iter().collect::<Vec<_>>()),
                        ),
                        Err(e) => report.push(
                            "connected-basis-subset",
                            Verdict::Fail,
                            json!(e.to_string()),
                        ),
                    }
                }
            }
            Err(e) => report.push("simple", Verdict::Inconclusive, json!(e.to_string())),
        }
    }

    if let Some(d) = exterior {
        if d > rep.dim() {
            return Err(Box::new(InputError(format!(
                "exterior degree {d} out of range for dimension {}",
                rep.dim()
            ))));
        }
        let ext = exterior_power(rep, d)?;
        let n = rep.dim();
        let mut rows = Vec::new();
        let mut all_match = true;
        for i in 0..rep.k() {
            let plus = ext.eigenspace_plus(i).len();
            let minus = ext.eigenspace_minus(i).len();
            let expected_plus = binomial(n - 1, d) as usize;
            let expected_minus = if d == 0 { 0 } else { binomial(n - 1, d - 1) as usize };
            all_match &= plus == expected_plus && minus == expected_minus;
            rows.push(json!({
                "generator": rep.generator(i).name(),
                "fixed_dim": plus,
                "moved_dim": minus,
                "expected": [expected_plus, expected_minus],
            }));
        }
        report.push(
            format!("exterior/{d}/eigenspace-dims"),
            if all_match { Verdict::Pass } else { Verdict::Fail },
            json!(rows),
        );
    }

    Ok((report, extra))
}

fn cmd_theorem1(input: &InputArgs) -> Result<(Report, Option<String>), UsageError> {
    let resolved = resolve_input(input)?;
    let rep = &resolved.rep;
    let mut report = Report::new("theorem1", &resolved.digest);
    report.push("input", Verdict::Pass, json!(resolved.description));
    match check_theorem1(rep) {
        Ok(t1) => {
            for (d, dim, cert) in &t1.degrees {
                let verdict = if cert.is_simple() { Verdict::Pass } else { Verdict::Fail };
                report.push(
                    format!("theorem1/simple/degree-{d}"),
                    verdict,
                    json!({"dim": dim, "certificate": certificate_evidence(cert)}),
                );
            }
            for (d, dp, dim) in &t1.cross_hom_dims {
                let verdict = if *dim == 0 { Verdict::Pass } else { Verdict::Fail };
                report.push(
                    format!("theorem1/distinct/{d}-vs-{dp}"),
                    verdict,
                    json!({"hom_dim": dim}),
                );
            }
            match finite_group_character_oracle(rep, 2000)? {
                Some(oracle) => report.push(
                    "theorem1/character-oracle",
                    if oracle.linear_algebra_agrees { Verdict::Pass } else { Verdict::Fail },
                    json!({
                        "group_order": oracle.group_order,
                        "inner_products": oracle.inner_products,
                    }),
                ),
                None => report.push(
                    "theorem1/character-oracle",
                    Verdict::Inconclusive,
                    json!("group did not close within the element cap"),
                ),
            }
        }
        Err(ModError::TheoremInapplicable { certificate }) => {
            report.push(
                "theorem1/applicability",
                Verdict::Inapplicable,
                json!({
                    "reason": "base representation is not simple",
                    "certificate": certificate_evidence(&certificate),
                }),
            );
        }
        Err(e) => return Err(Box::new(e)),
    }
    Ok((report, None))
}

fn two_input_report(
    command: &str,
    in1: &ResolvedInput,
    in2: &ResolvedInput,
) -> Report {
    let mut report = Report::new(command, format!("{}+{}", in1.digest, in2.digest));
    report.push(
        "input",
        Verdict::Pass,
        json!({"first": in1.description, "second": in2.description}),
    );
    report
}

fn cmd_theorem2(
    input1: &str,
    input2: &str,
    d1: usize,
    d2: usize,
) -> Result<(Report, Option<String>), UsageError> {
    let in1 = resolve_str(input1)?;
    let in2 = resolve_str(input2)?;
    let mut report = two_input_report("theorem2", &in1, &in2);
    let mut extra = None;
    match check_theorem2(&in1.rep, d1, &in2.rep, d2) {
        Ok(t2) => {
            report.push(
                "theorem2/hom-dimension",
                Verdict::Pass,
                json!({"hom_dim": t2.hom_dim, "base_hom_dim": t2.base_hom_dim}),
            );
            match &t2.outcome {
                Theorem2Outcome::NotIsomorphic => {
                    report.push(
                        "theorem2/outcome",
                        Verdict::Pass,
                        json!("not isomorphic: the hom-space between the exterior powers is zero"),
                    );
                }
                Theorem2Outcome::Isomorphic { psi, lift } => {
                    report.push(
                        "theorem2/outcome",
                        Verdict::Pass,
                        json!({
                            "isomorphic": true,
                            "d": t2.d1,
                            "n": t2.n1,
                            "eigenvalues_agree": t2.eigenvalues_agree,
                            "psi": matrix_rows_strings(psi),
                            "f": matrix_rows_strings(&lift.f),
                        }),
                    );
                    extra = Some(format!("lifted degree-1 isomorphism f:\n{}", lift.f));
                }
            }
        }
        Err(ModError::RangeViolation { d, n }) => {
            return Err(Box::new(InputError(format!(
                "degree {d} out of range 1..{n}"
            ))));
        }
        Err(ModError::TheoremInapplicable { certificate }) => {
            report.push(
                "theorem2/applicability",
                Verdict::Inapplicable,
                json!({
                    "reason": "a base representation is not simple",
                    "certificate": certificate_evidence(&certificate),
                }),
            );
        }
        Err(e) => {
            report.push("theorem2/error", Verdict::Fail, json!(e.to_string()));
        }
    }
    Ok((report, extra))
}

fn cmd_lift(
    input1: &str,
    input2: &str,
    d1: usize,
    d2: usize,
) -> Result<(Report, Option<String>), UsageError> {
    let in1 = resolve_str(input1)?;
    let in2 = resolve_str(input2)?;
    let mut report = two_input_report("lift", &in1, &in2);
    let (rep1, rep2) = (&in1.rep, &in2.rep);
    for (d, rep, which) in [(d1, rep1, "first"), (d2, rep2, "second")] {
        if d == 0 || d >= rep.dim() {
            return Err(Box::new(InputError(format!(
                "degree {d} out of range 1..{} for the {which} input",
                rep.dim()
            ))));
        }
    }

    let e1 = MatrixRep::from_exterior(&exterior_power(rep1, d1)?);
    let e2 = MatrixRep::from_exterior(&exterior_power(rep2, d2)?);
    let hom = hom_space(&e1, &e2)?;
    report.push("lift/hom-dimension", Verdict::Pass, json!(hom.dim()));
    if hom.dim() == 0 {
        report.push(
            "lift/outcome",
            Verdict::Fail,
            json!("no isomorphism exists between the chosen exterior powers"),
        );
        return Ok((report, None));
    }
    let psi = hom.basis[0].clone();
    match lift_isomorphism(rep1, rep2, d1, d2, &psi) {
        Ok(lift) => {
            report.push(
                "lift/outcome",
                Verdict::Pass,
                json!({
                    "degree": lift.degree,
                    "psi": matrix_rows_strings(&psi),
                    "f": matrix_rows_strings(&lift.f),
                    "context": lift.context.as_ref().map(|c| c.to_json()),
                }),
            );
            let mut text = format!("lifted degree-1 isomorphism f:\n{}", lift.f);
            if let Some(ctx) = &lift.context {
                text.push_str(&format!(
                    "z-tables and wedge ratios:\n{}\n",
                    serde_json::to_string_pretty(&ctx.to_json()).expect("context serializes")
                ));
            }
            Ok((report, Some(text)))
        }
        Err(e @ LiftError::Input(_)) => Err(Box::new(e)),
        Err(e) => {
            report.push("lift/outcome", Verdict::Fail, json!(e.to_string()));
            Ok((report, None))
        }
    }
}

fn cmd_catalog(
    family: &str,
    n: usize,
    x_list: &[String],
    _seed: Option<u64>,
) -> Result<(Report, Option<String>), UsageError> {
    if family != "affineA" {
        return Err(Box::new(InputError(format!(
            "only the affineA family is parametrized for sweeps, got {family}"
        ))));
    }
    let mut xs = Vec::new();
    for raw in x_list {
        xs.push(Scalar::parse(raw).map_err(|e| InputError(e.to_string()))?);
    }
    let mut report = Report::new("catalog", format!("affineA:n={n}:sweep-size={}", xs.len()));
    if xs.is_empty() {
        report.push("catalog/inventory", Verdict::Pass, json!({"entries": [], "note": "empty sweep"}));
        return Ok((report, None));
    }

    // Inventory: for each parameter, the exterior powers of the simple
    // representation (or of its simple quotient when reducible).
    let mut entries: Vec<(String, MatrixRep)> = Vec::new();
    let mut inventory_meta = Vec::new();
    for x in &xs {
        eprintln!("catalog: building affineA n={n} x={x}");
        let rep = affine_an_vx(n, x)?;
        let cert = is_simple_reflection(&rep)?;
        if cert.is_simple() {
            for d in 1..rep.dim() {
                let ext = exterior_power(&rep, d)?;
                let label = format!("x={x} d={d}");
                inventory_meta.push(json!({"x": x.to_string(), "d": d, "dim": ext.dim()}));
                entries.push((label, MatrixRep::from_exterior(&ext)));
            }
            report.push(format!("catalog/simple/x={x}"), Verdict::Pass, json!("simple"));
        } else {
            // Reducible member: route through its simple quotient.
            let SimplicityCertificate::NotSimple { invariant_subspace, .. } = &cert else {
                unreachable!()
            };
            let q = quotient_rep(&rep, invariant_subspace)?;
            let qcert = is_simple_reflection(&q)?;
            report.push(
                format!("catalog/simple/x={x}"),
                if qcert.is_simple() { Verdict::Pass } else { Verdict::Fail },
                json!({
                    "note": "reducible; quotient by the invariant subspace taken",
                    "quotient_dim": q.dim(),
                    "quotient_simple": qcert.is_simple(),
                }),
            );
            for d in 1..q.dim() {
                let ext = exterior_power(&q, d)?;
                let label = format!("x={x} quotient d={d}");
                inventory_meta
                    .push(json!({"x": x.to_string(), "quotient": true, "d": d, "dim": ext.dim()}));
                entries.push((label, MatrixRep::from_exterior(&ext)));
            }
        }
    }

    let mut all_distinct = true;
    let mut collisions = Vec::new();
    for a in 0..entries.len() {
        for b in (a + 1)..entries.len() {
            eprintln!("catalog: hom {} vs {}", entries[a].0, entries[b].0);
            let dim = hom_space(&entries[a].1, &entries[b].1)?.dim();
            if dim != 0 {
                all_distinct = false;
                collisions.push(json!({
                    "first": entries[a].0,
                    "second": entries[b].0,
                    "hom_dim": dim,
                }));
            }
        }
    }
    report.push(
        "catalog/inventory",
        Verdict::Pass,
        json!({"entries": inventory_meta, "count": entries.len()}),
    );
    report.push(
        "catalog/pairwise-distinct",
        if all_distinct { Verdict::Pass } else { Verdict::Fail },
        if collisions.is_empty() { json!("all pairwise hom-spaces vanish") } else { json!(collisions) },
    );
    Ok((report, None))
}
