//! Reconstruction of a degree-1 isomorphism from an isomorphism of
//! exterior powers.
//!
//! Given reflection representations V1, V2 and an invertible intertwiner
//! `psi` between their d-th exterior powers, the pipeline:
//!
//! 1. prechecks `psi` and derives equal degrees, equal dimensions and
//!    matching generator eigenvalues from the eigenspace dimension counts;
//! 2. records, for every d-subset of generators, the ratio `zeta` by which
//!    `psi` maps the wedge of reflection vectors of V1 onto the wedge of
//!    the corresponding vectors of V2 (zero for dependent wedges);
//! 3. on a weakly connected basis subset I, forms edge ratios
//!    `z_ij = y_ij / x_ij` from the interaction coefficients of the two
//!    representations and multiplies them along walks from a base vertex
//!    to get vertex scalars `z_i`, whose walk-independence is re-verified
//!    rather than assumed;
//! 4. defines `f(alpha_i) = z_i * beta_i` on the basis, then verifies
//!    exactly that `f` intertwines every generator (including those outside
//!    I) and that its d-th compound is proportional to `psi`.
//!
//! Situations the underlying theory rules out (mismatched zero patterns,
//! disagreeing walk products, non-proportional wedge images) surface as
//! `StructureViolation` errors carrying their context: any occurrence
//! signals an invalid `psi` or an upstream bug, never a silent wrong answer.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde_json::json;
use thiserror::Error;

use crate::digraph::{associated_digraph, connected_basis_subset, Digraph, DigraphError};
use crate::exterior::{binom_rigidity, compound_matrix, exterior_power, ExteriorError, SubsetIndex};
use crate::matrix::{proportionality_ratio, vec_is_zero, Matrix};
use crate::reflection::{ReflectionError, ReflectionRep};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("input error: {0}")]
    Input(String),
    #[error("psi is not a valid exterior-power isomorphism: {0}")]
    PsiNotIntertwining(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Reflection(#[from] ReflectionError),
}

/// All intermediate data of one lifting run, exposed for reports.
#[derive(Debug, Clone)]
pub struct LiftingContext {
    /// The weakly connected basis subset I, sorted.
    pub subset: Vec<usize>,
    /// The fixed base vertex with `z = 1`.
    pub base_vertex: usize,
    /// Wedge ratios per sorted d-subset of generator indices; zero for
    /// dependent wedges.
    pub zeta: BTreeMap<Vec<usize>, Scalar>,
    /// Interaction coefficients of the two representations.
    pub x_table: InteractionTable,
    pub y_table: InteractionTable,
    /// Edge ratios on adjacent pairs of I, both orientations.
    pub z_edge: BTreeMap<(usize, usize), Scalar>,
    /// Walk products from the base vertex.
    pub z_vertex: BTreeMap<usize, Scalar>,
    /// Coordinates of out-of-subset reflection vectors in the I-bases.
    pub a_coords: BTreeMap<usize, Vec<Scalar>>,
    pub b_coords: BTreeMap<usize, Vec<Scalar>>,
}

impl LiftingContext {
    pub fn zeta(&self, subset: &[usize]) -> Result<&Scalar, LiftError> {
        let mut key = subset.to_vec();
        key.sort_unstable();
        self.zeta
            .get(&key)
            .ok_or_else(|| LiftError::Input(format!("no zeta entry for subset {key:?}")))
    }

    pub fn z_edge(&self, i: usize, j: usize) -> Result<&Scalar, LiftError> {
        self.z_edge.get(&(i, j)).ok_or_else(|| {
            LiftError::Input(format!("vertices {i} and {j} are not adjacent in the subset digraph"))
        })
    }

    pub fn z_vertex(&self, i: usize) -> Result<&Scalar, LiftError> {
        self.z_vertex
            .get(&i)
            .ok_or_else(|| LiftError::Input(format!("vertex {i} is not in the basis subset")))
    }

    /// JSON form mirroring the context; scalars in canonical text syntax.
    pub fn to_json(&self) -> serde_json::Value {
        let key = |t: &[usize]| {
            t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        let table = |t: &InteractionTable| {
            t.iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Some(s) => json!(s.to_string()),
                            None => serde_json::Value::Null,
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        };
        json!({
            "subset": self.subset,
            "base_vertex": self.base_vertex,
            "zeta": self.zeta.iter().map(|(k, v)| (key(k), v.to_string())).collect::<BTreeMap<_, _>>(),
            "x_table": table(&self.x_table),
            "y_table": table(&self.y_table),
            "z_edge": self.z_edge.iter().map(|(&(i, j), v)| (format!("{i},{j}"), v.to_string())).collect::<BTreeMap<_, _>>(),
            "z_vertex": self.z_vertex.iter().map(|(i, v)| (i.to_string(), v.to_string())).collect::<BTreeMap<_, _>>(),
            "a_coords": self.a_coords.iter().map(|(h, v)| (h.to_string(), v.iter().map(|s| s.to_string()).collect::<Vec<_>>())).collect::<BTreeMap<_, _>>(),
            "b_coords": self.b_coords.iter().map(|(h, v)| (h.to_string(), v.iter().map(|s| s.to_string()).collect::<Vec<_>>())).collect::<BTreeMap<_, _>>(),
        })
    }
}

/// Result of a lifting run: the degree-1 intertwiner and, except in the
/// trivial degree-1 case, the full context.
#[derive(Debug, Clone)]
pub struct Lift {
    pub f: Matrix,
    pub degree: usize,
    pub context: Option<LiftingContext>,
}

fn check_generator_compat(rep1: &ReflectionRep, rep2: &ReflectionRep) -> Result<(), LiftError> {
    if rep1.k() != rep2.k() {
        return Err(LiftError::Input(format!(
            "representations have {} and {} generators",
            rep1.k(),
            rep2.k()
        )));
    }
    if rep1.context() != rep2.context() {
        return Err(LiftError::Input("representations live in different field contexts".into()));
    }
    Ok(())
}

/// Verify that `psi` is an invertible intertwiner between the two exterior
/// powers and derive `(d, n)`: the eigenspace dimension counts force equal
/// degrees and dimensions, and every generator eigenvalue must agree.
pub fn precheck(
    rep1: &ReflectionRep,
    d1: usize,
    rep2: &ReflectionRep,
    d2: usize,
    psi: &Matrix,
) -> Result<(usize, usize), LiftError> {
    check_generator_compat(rep1, rep2)?;
    let (n1, n2) = (rep1.dim(), rep2.dim());
    for (d, n) in [(d1, n1), (d2, n2)] {
        if d == 0 || d >= n {
            return Err(LiftError::Input(format!(
                "degree {d} out of range 1..{n} for an {n}-dimensional representation"
            )));
        }
    }
    let ext1 = exterior_power(rep1, d1)?;
    let ext2 = exterior_power(rep2, d2)?;
    if psi.rows() != ext2.dim() || psi.cols() != ext1.dim() {
        return Err(LiftError::PsiNotIntertwining(format!(
            "psi is {}x{}, expected {}x{}",
            psi.rows(),
            psi.cols(),
            ext2.dim(),
            ext1.dim()
        )));
    }
    if psi.rows() != psi.cols() || !psi.is_invertible() {
        return Err(LiftError::PsiNotIntertwining("psi is not invertible".into()));
    }
    for i in 0..rep1.k() {
        if psi.mul(ext1.matrix(i)) != ext2.matrix(i).mul(psi) {
            return Err(LiftError::PsiNotIntertwining(format!(
                "psi does not intertwine generator {i}"
            )));
        }
    }
    for i in 0..rep1.k() {
        let plus1 = ext1.eigenspace_plus(i).len();
        let plus2 = ext2.eigenspace_plus(i).len();
        let minus1 = ext1.eigenspace_minus(i).len();
        let minus2 = ext2.eigenspace_minus(i).len();
        if plus1 != plus2 || minus1 != minus2 {
            return Err(LiftError::PsiNotIntertwining(format!(
                "eigenspace dimensions differ at generator {i}: ({plus1},{minus1}) vs ({plus2},{minus2})"
            )));
        }
    }
    if !binom_rigidity(n1, d1, n2, d2)? {
        return Err(LiftError::PsiNotIntertwining(
            "eigenspace dimension counts are incompatible".into(),
        ));
    }
    if n1 != n2 || d1 != d2 {
        // binom_rigidity returning true forces these equalities; the
        // implication is covered by an exhaustive test, not assumed here.
        return Err(LiftError::StructureViolation(format!(
            "rigidity accepted mismatched shapes (n1={n1}, d1={d1}) vs (n2={n2}, d2={d2})"
        )));
    }
    for i in 0..rep1.k() {
        let (l, m) = (rep1.generator(i).lambda(), rep2.generator(i).lambda());
        if l != m {
            return Err(LiftError::PsiNotIntertwining(format!(
                "generator {i} has eigenvalue {l} in V1 but {m} in V2"
            )));
        }
    }
    Ok((d1, n1))
}

/// The associated digraphs of the two representations on the full
/// generator set must coincide once an exterior-power isomorphism exists.
pub fn digraph_coincidence(
    rep1: &ReflectionRep,
    d1: usize,
    rep2: &ReflectionRep,
    d2: usize,
    psi: &Matrix,
) -> Result<bool, LiftError> {
    precheck(rep1, d1, rep2, d2, psi)?;
    let all: BTreeSet<usize> = (0..rep1.k()).collect();
    let g1 = associated_digraph(rep1, &all)?;
    let g2 = associated_digraph(rep2, &all)?;
    if g1 != g2 {
        let only1: Vec<_> = g1.arrows().difference(g2.arrows()).collect();
        let only2: Vec<_> = g2.arrows().difference(g1.arrows()).collect();
        return Err(LiftError::StructureViolation(format!(
            "associated digraphs differ: arrows only in V1 {only1:?}, only in V2 {only2:?}"
        )));
    }
    Ok(true)
}

/// Wedge of the reflection vectors of `rep` over the index tuple.
fn wedge_of_alphas(rep: &ReflectionRep, tuple: &[usize]) -> Result<Vec<Scalar>, ExteriorError> {
    let vectors: Vec<Vec<Scalar>> =
        tuple.iter().map(|&i| rep.generator(i).alpha().to_vec()).collect();
    crate::exterior::wedge_vector(&vectors)
}

/// For every d-subset of generator indices, the ratio by which `psi` maps
/// the wedge of V1 reflection vectors onto the wedge of V2 reflection
/// vectors; zero for dependent wedges. Dependence must agree between the
/// two sides, and images must be exactly proportional to the target wedge.
pub fn zeta_coefficients(
    rep1: &ReflectionRep,
    rep2: &ReflectionRep,
    d: usize,
    psi: &Matrix,
) -> Result<BTreeMap<Vec<usize>, Scalar>, LiftError> {
    check_generator_compat(rep1, rep2)?;
    let mut zeta = BTreeMap::new();
    for subset in SubsetIndex::all(rep1.k(), d) {
        let tuple = subset.tuple().to_vec();
        let w_alpha = wedge_of_alphas(rep1, &tuple)?;
        let w_beta = wedge_of_alphas(rep2, &tuple)?;
        let alpha_zero = vec_is_zero(&w_alpha);
        let beta_zero = vec_is_zero(&w_beta);
        if alpha_zero != beta_zero {
            return Err(LiftError::StructureViolation(format!(
                "linear independence of reflection vectors differs between the two sides on {tuple:?}"
            )));
        }
        if alpha_zero {
            zeta.insert(tuple, Scalar::zero());
            continue;
        }
        let image = psi.mul_vec(&w_alpha);
        let Some(ratio) = proportionality_ratio(&image, &w_beta) else {
            return Err(LiftError::StructureViolation(format!(
                "psi maps the wedge over {tuple:?} outside the line of the target wedge"
            )));
        };
        if ratio.is_zero() {
            return Err(LiftError::StructureViolation(format!(
                "psi kills the nonzero wedge over {tuple:?}"
            )));
        }
        zeta.insert(tuple, ratio);
    }
    Ok(zeta)
}

/// Interaction coefficients on the full generator set; `None` on the diagonal.
pub type InteractionTable = Vec<Vec<Option<Scalar>>>;

/// Interaction tables of both representations on the full generator set.
fn interaction_tables(
    rep1: &ReflectionRep,
    rep2: &ReflectionRep,
) -> Result<(InteractionTable, InteractionTable), LiftError> {
    let k = rep1.k();
    let mut x = vec![vec![None; k]; k];
    let mut y = vec![vec![None; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                x[i][j] = Some(rep1.interaction_coefficient(i, j)?);
                y[i][j] = Some(rep2.interaction_coefficient(i, j)?);
            }
        }
    }
    Ok((x, y))
}

/// Edge ratio `z_ij` from the four interaction coefficients of the pair
/// `(i, j)`. Zero patterns must agree, and when both arrows exist the two
/// defining formulas must produce the same value.
fn edge_ratio(
    i: usize,
    j: usize,
    x_ij: &Scalar,
    y_ij: &Scalar,
    x_ji: &Scalar,
    y_ji: &Scalar,
) -> Result<Option<Scalar>, LiftError> {
    for (a, b, from, to) in [(x_ij, y_ij, i, j), (x_ji, y_ji, j, i)] {
        if a.is_zero() != b.is_zero() {
            return Err(LiftError::StructureViolation(format!(
                "interaction coefficient for {from} -> {to} vanishes on one side only \
                 (x = {a}, y = {b})"
            )));
        }
    }
    let via_forward = (!x_ij.is_zero())
        .then(|| y_ij * &x_ij.invert().expect("nonzero"));
    let via_backward = (!x_ji.is_zero())
        .then(|| x_ji * &y_ji.invert().expect("nonzero"));
    match (via_forward, via_backward) {
        (Some(a), Some(b)) => {
            if a != b {
                return Err(LiftError::StructureViolation(format!(
                    "edge ratio mismatch on pair ({i},{j}): y/x = {a} but reverse x/y = {b}"
                )));
            }
            Ok(Some(a))
        }
        (Some(a), None) => Ok(Some(a)),
        (None, Some(b)) => Ok(Some(b)),
        (None, None) => Ok(None),
    }
}

/// Breadth-first walk tree over the undirected shadow of `g`, visiting
/// neighbours in the given order; maps each vertex to its parent.
fn bfs_tree(g: &Digraph, root: usize, ascending: bool) -> BTreeMap<usize, usize> {
    let mut parent = BTreeMap::new();
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let neighbors: Vec<usize> = if ascending {
            g.undirected_neighbors(v).into_iter().collect()
        } else {
            g.undirected_neighbors(v).into_iter().rev().collect()
        };
        for w in neighbors {
            if seen.insert(w) {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    parent
}

fn walk_from_root(parent: &BTreeMap<usize, usize>, root: usize, v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut cur = v;
    while cur != root {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

struct ContextBuilder<'a> {
    rep1: &'a ReflectionRep,
    rep2: &'a ReflectionRep,
    degree: usize,
}

impl<'a> ContextBuilder<'a> {
    fn build(
        &self,
        psi: &Matrix,
        subset: &BTreeSet<usize>,
        base_vertex: usize,
    ) -> Result<LiftingContext, LiftError> {
        let (rep1, rep2, d) = (self.rep1, self.rep2, self.degree);
        let (x_table, y_table) = interaction_tables(rep1, rep2)?;
        let zeta = zeta_coefficients(rep1, rep2, d, psi)?;
        let g_subset = associated_digraph(rep1, subset)?;
        if !g_subset.is_weakly_connected() {
            return Err(LiftError::Input("basis subset digraph is not weakly connected".into()));
        }

        let mut z_edge: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for &i in subset {
            for &j in subset {
                if i >= j {
                    continue;
                }
                let (x_ij, y_ij) = (x_table[i][j].as_ref().unwrap(), y_table[i][j].as_ref().unwrap());
                let (x_ji, y_ji) = (x_table[j][i].as_ref().unwrap(), y_table[j][i].as_ref().unwrap());
                if let Some(z) = edge_ratio(i, j, x_ij, y_ij, x_ji, y_ji)? {
                    let z_inv = z.invert().expect("edge ratios are nonzero");
                    z_edge.insert((i, j), z);
                    z_edge.insert((j, i), z_inv);
                }
            }
        }

        // Walk products from the base vertex along a BFS tree; a second
        // tree with the opposite visiting order cross-checks independence
        // of the walk whenever the two walks differ.
        let primary = bfs_tree(&g_subset, base_vertex, true);
        let secondary = bfs_tree(&g_subset, base_vertex, false);
        let product_along = |path: &[usize]| -> Scalar {
            let mut acc = Scalar::one();
            for pair in path.windows(2) {
                acc = acc * &z_edge[&(pair[0], pair[1])];
            }
            acc
        };
        let mut z_vertex: BTreeMap<usize, Scalar> = BTreeMap::new();
        for &i in subset {
            let path1 = walk_from_root(&primary, base_vertex, i);
            let z = product_along(&path1);
            let path2 = walk_from_root(&secondary, base_vertex, i);
            if path2 != path1 {
                let alt = product_along(&path2);
                if alt != z {
                    return Err(LiftError::StructureViolation(format!(
                        "walk products to vertex {i} disagree: {z} along {path1:?}, {alt} along {path2:?}"
                    )));
                }
            }
            z_vertex.insert(i, z);
        }

        // Cross-check every walk product against the wedge-ratio identity
        // z_i = zeta({i} u J) / zeta({i0} u J) for a valid filler tuple J.
        let sorted: Vec<usize> = subset.iter().copied().collect();
        for &i in &sorted {
            if i == base_vertex {
                continue;
            }
            let filler: Vec<usize> = sorted
                .iter()
                .copied()
                .filter(|&v| v != i && v != base_vertex)
                .take(d - 1)
                .collect();
            let mut with_i = filler.clone();
            with_i.push(i);
            with_i.sort_unstable();
            let mut with_base = filler.clone();
            with_base.push(base_vertex);
            with_base.sort_unstable();
            let (num, den) = (&zeta[&with_i], &zeta[&with_base]);
            if num.is_zero() || den.is_zero() {
                return Err(LiftError::StructureViolation(format!(
                    "wedge ratio over the basis subset vanished on {with_i:?} or {with_base:?}"
                )));
            }
            let expected = num * &den.invert().expect("nonzero");
            if expected != z_vertex[&i] {
                return Err(LiftError::StructureViolation(format!(
                    "walk product z_{i} = {} disagrees with the wedge ratio {} (filler {filler:?})",
                    z_vertex[&i], expected
                )));
            }
        }

        // Coordinates of the remaining reflection vectors in the two bases.
        let a_basis = Matrix::from_cols(
            sorted.iter().map(|&i| rep1.generator(i).alpha().to_vec()).collect(),
        );
        let b_basis = Matrix::from_cols(
            sorted.iter().map(|&i| rep2.generator(i).alpha().to_vec()).collect(),
        );
        let mut a_coords = BTreeMap::new();
        let mut b_coords = BTreeMap::new();
        for h in 0..rep1.k() {
            if subset.contains(&h) {
                continue;
            }
            let a = a_basis
                .solve(rep1.generator(h).alpha())
                .map_err(|e| LiftError::Input(e.to_string()))?
                .ok_or_else(|| {
                    LiftError::StructureViolation(format!(
                        "reflection vector {h} is outside the span of the V1 basis subset"
                    ))
                })?;
            let b = b_basis
                .solve(rep2.generator(h).alpha())
                .map_err(|e| LiftError::Input(e.to_string()))?
                .ok_or_else(|| {
                    LiftError::StructureViolation(format!(
                        "reflection vector {h} is outside the span of the V2 basis subset"
                    ))
                })?;
            a_coords.insert(h, a);
            b_coords.insert(h, b);
        }

        Ok(LiftingContext {
            subset: sorted,
            base_vertex,
            zeta,
            x_table,
            y_table,
            z_edge,
            z_vertex,
            a_coords,
            b_coords,
        })
    }

    /// Assemble `f` from a context: `f(alpha_i) = z_i * beta_i` on the
    /// basis subset.
    fn assemble(&self, ctx: &LiftingContext) -> Matrix {
        let a_cols: Vec<Vec<Scalar>> =
            ctx.subset.iter().map(|&i| self.rep1.generator(i).alpha().to_vec()).collect();
        let b_cols: Vec<Vec<Scalar>> = ctx
            .subset
            .iter()
            .map(|&i| {
                crate::matrix::vec_scale(self.rep2.generator(i).alpha(), &ctx.z_vertex[&i])
            })
            .collect();
        let a = Matrix::from_cols(a_cols);
        let b = Matrix::from_cols(b_cols);
        b.mul(&a.inverse().expect("basis columns are invertible"))
    }
}

/// Lift an exterior-power isomorphism to an explicit, fully verified
/// degree-1 isomorphism. Degree 1 short-circuits: `psi` itself is the map.
pub fn lift_isomorphism(
    rep1: &ReflectionRep,
    rep2: &ReflectionRep,
    d1: usize,
    d2: usize,
    psi: &Matrix,
) -> Result<Lift, LiftError> {
    let (d, n) = precheck(rep1, d1, rep2, d2, psi)?;
    if d == 1 {
        return Ok(Lift { f: psi.clone(), degree: 1, context: None });
    }
    digraph_coincidence(rep1, d1, rep2, d2, psi)?;

    let subset = connected_basis_subset(rep1)?;
    // The corresponding V2 vectors must form a basis as well.
    let b_matrix = Matrix::from_cols(
        subset.iter().map(|&i| rep2.generator(i).alpha().to_vec()).collect(),
    );
    if !b_matrix.is_invertible() {
        return Err(LiftError::StructureViolation(
            "V2 reflection vectors over the basis subset are dependent".into(),
        ));
    }

    let builder = ContextBuilder { rep1, rep2, degree: d };
    let base_vertex = *subset.iter().next().expect("nonempty subset");
    let ctx = builder.build(psi, &subset, base_vertex)?;
    let f = builder.assemble(&ctx);
    verify_lift(rep1, rep2, d, psi, &f)?;

    // The decomposition of the target exterior power into the lines of
    // basis-subset wedges must be spanning.
    let wedges: Vec<Vec<Scalar>> = SubsetIndex::all(rep1.k(), d)
        .iter()
        .filter(|s| s.tuple().iter().all(|v| subset.contains(v)))
        .map(|s| wedge_of_alphas(rep2, s.tuple()))
        .collect::<Result<Vec<_>, _>>()?;
    let expected = crate::exterior::binomial(n, d) as usize;
    if wedges.len() != expected
        || crate::matrix::EchelonBasis::from_vectors(wedges[0].len(), &wedges).dim() != expected
    {
        return Err(LiftError::StructureViolation(
            "basis-subset wedges do not decompose the target exterior power".into(),
        ));
    }

    // The base vertex is an arbitrary choice; the resulting map may only
    // change by a global scalar. Re-run from another vertex and compare.
    if subset.len() > 1 {
        let other = *subset.iter().next_back().expect("nonempty subset");
        let ctx2 = builder.build(psi, &subset, other)?;
        let f2 = builder.assemble(&ctx2);
        let ratio = proportionality_ratio(f2.entries(), f.entries());
        if !ratio.is_some_and(|c| !c.is_zero()) {
            return Err(LiftError::StructureViolation(format!(
                "maps built from base vertices {base_vertex} and {other} are not proportional"
            )));
        }
    }

    Ok(Lift { f, degree: d, context: Some(ctx) })
}

/// Exact verification of a candidate degree-1 map: invertible, intertwines
/// every generator, and its d-th compound is a nonzero multiple of `psi`.
fn verify_lift(
    rep1: &ReflectionRep,
    rep2: &ReflectionRep,
    d: usize,
    psi: &Matrix,
    f: &Matrix,
) -> Result<(), LiftError> {
    if !f.is_invertible() {
        return Err(LiftError::StructureViolation("lifted map is singular".into()));
    }
    for i in 0..rep1.k() {
        let lhs = f.mul(rep1.generator(i).matrix());
        let rhs = rep2.generator(i).matrix().mul(f);
        if lhs != rhs {
            return Err(LiftError::StructureViolation(format!(
                "lifted map fails to intertwine generator {i} ({})",
                rep1.generator(i).name()
            )));
        }
    }
    let compound = compound_matrix(f, d)?;
    let ratio = proportionality_ratio(compound.entries(), psi.entries());
    if !ratio.is_some_and(|c| !c.is_zero()) {
        return Err(LiftError::StructureViolation(
            "compound of the lifted map is not a multiple of psi".into(),
        ));
    }
    Ok(())
}
