//! Text file format for representations, versioned `reflex-rep v1`:
//!
//! ```text
//! reflex-rep v1
//! field rational          # or: field quadratic 5
//! dim 3
//! gen s0
//! -1 0 2
//! 0 1 0
//! 0 0 1
//! gen s1
//! ...
//! ```
//!
//! Blank lines and `#`-comments are ignored. Scalar tokens are written in
//! the canonical syntax of the declared field context and contain no
//! whitespace; mixed field syntax (a `sqrt` token under `field rational`,
//! or a foreign radicand) is rejected.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::reflection::{validate_reflection, ReflectionError, ReflectionGenerator, ReflectionRep};
use crate::scalar::{FieldContext, Scalar, ScalarError};

pub const REP_HEADER: &str = "reflex-rep v1";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepFileError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Scalar { line: usize, source: ScalarError },
    #[error("generator {name} failed validation: {source}")]
    Validation { name: String, source: ReflectionError },
    #[error("{0}")]
    Rep(#[from] ReflectionError),
}

/// A parsed but not yet validated representation file.
#[derive(Debug, Clone)]
pub struct RawRepFile {
    pub context: FieldContext,
    pub dim: usize,
    pub generators: Vec<(String, Matrix)>,
}

impl RawRepFile {
    /// Run reflection validation on each generator independently.
    pub fn validate_generators(&self) -> Vec<(String, Result<ReflectionGenerator, ReflectionError>)> {
        self.generators
            .iter()
            .map(|(name, m)| (name.clone(), validate_reflection(name, m)))
            .collect()
    }

    /// Validate everything and assemble the representation.
    pub fn into_rep(self) -> Result<ReflectionRep, RepFileError> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for (name, m) in &self.generators {
            let g = validate_reflection(name, m)
                .map_err(|source| RepFileError::Validation { name: name.clone(), source })?;
            gens.push(g);
        }
        Ok(ReflectionRep::new(self.context, gens)?)
    }
}

pub fn parse_rep_file(text: &str) -> Result<RawRepFile, RepFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, message: &str| RepFileError::Malformed {
        line,
        message: message.to_string(),
    };

    let (hline, header) = lines.next().ok_or_else(|| err(0, "empty file"))?;
    if header != REP_HEADER {
        return Err(err(hline, &format!("expected header \"{REP_HEADER}\"")));
    }

    let (fline, field) = lines.next().ok_or_else(|| err(hline, "missing field line"))?;
    let context = match field.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["field", "rational"] => FieldContext::Rational,
        ["field", "quadratic", d] => {
            let d: u64 = d.parse().map_err(|_| err(fline, "bad radicand"))?;
            FieldContext::quadratic(d).map_err(|source| RepFileError::Scalar { line: fline, source })?
        }
        _ => return Err(err(fline, "expected \"field rational\" or \"field quadratic D\"")),
    };

    let (dline, dim_line) = lines.next().ok_or_else(|| err(fline, "missing dim line"))?;
    let dim: usize = match dim_line.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", n] => n.parse().map_err(|_| err(dline, "bad dimension"))?,
        _ => return Err(err(dline, "expected \"dim n\"")),
    };
    if dim == 0 {
        return Err(err(dline, "dimension must be positive"));
    }

    let mut generators: Vec<(String, Matrix)> = Vec::new();
    while let Some((gline, gen_line)) = lines.next() {
        let name = match gen_line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["gen", name] => name.to_string(),
            _ => return Err(err(gline, "expected \"gen <name>\"")),
        };
        if generators.iter().any(|(n, _)| n == &name) {
            return Err(err(gline, &format!("duplicate generator name {name}")));
        }
        let mut rows = Vec::with_capacity(dim);
        for _ in 0..dim {
            let (rline, row_line) =
                lines.next().ok_or_else(|| err(gline, &format!("generator {name}: missing rows")))?;
            let tokens: Vec<&str> = row_line.split_whitespace().collect();
            if tokens.len() != dim {
                return Err(err(
                    rline,
                    &format!("expected {dim} scalar tokens, found {}", tokens.len()),
                ));
            }
            let mut row = Vec::with_capacity(dim);
            for tok in tokens {
                let s = Scalar::parse_in_context(tok, &context)
                    .map_err(|source| RepFileError::Scalar { line: rline, source })?;
                row.push(s);
            }
            rows.push(row);
        }
        generators.push((name, Matrix::from_rows(rows)));
    }
    if generators.is_empty() {
        return Err(err(dline, "no generators"));
    }
    Ok(RawRepFile { context, dim, generators })
}

/// Canonical serialization; parsing it back yields the same matrices.
pub fn write_rep_file(rep: &ReflectionRep) -> String {
    let mut out = String::new();
    out.push_str(REP_HEADER);
    out.push('\n');
    out.push_str(&format!("field {}\n", rep.context()));
    out.push_str(&format!("dim {}\n", rep.dim()));
    for g in rep.generators() {
        out.push_str(&format!("gen {}\n", g.name()));
        for i in 0..rep.dim() {
            let row: Vec<String> =
                (0..rep.dim()).map(|j| rep.context().render(g.matrix().at(i, j))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CYCLE: &str = "\
reflex-rep v1
field rational
dim 2
gen s1
-1 0
0 1
gen s2
1 0
2 -1
gen s3
1 -2
0 -1
";

    #[test]
    fn parse_and_round_trip() {
        let raw = parse_rep_file(CYCLE).unwrap();
        assert_eq!(raw.dim, 2);
        assert_eq!(raw.generators.len(), 3);
        let rep = raw.into_rep().unwrap();
        let written = write_rep_file(&rep);
        let reparsed = parse_rep_file(&written).unwrap().into_rep().unwrap();
        for (a, b) in rep.generators().iter().zip(reparsed.generators()) {
            assert_eq!(a.matrix(), b.matrix());
            assert_eq!(a.name(), b.name());
        }
    }

    #[test]
    fn rejects_mixed_field_syntax() {
        let bad = CYCLE.replace("2 -1", "2 -1+0*sqrt(5)");
        assert!(matches!(parse_rep_file(&bad), Err(RepFileError::Scalar { .. })));
    }

    #[test]
    fn rejects_malformed_scalars_and_structure() {
        assert!(parse_rep_file("").is_err());
        assert!(parse_rep_file("reflex-rep v2\nfield rational\ndim 1\ngen a\n-1\n").is_err());
        let bad_tok = CYCLE.replace("0 1\ngen s2", "0 oops\ngen s2");
        assert!(matches!(parse_rep_file(&bad_tok), Err(RepFileError::Scalar { .. })));
        let bad_width = CYCLE.replace("-1 0\n0 1", "-1 0 3\n0 1");
        assert!(parse_rep_file(&bad_width).is_err());
    }

    #[test]
    fn quadratic_context_round_trip() {
        let rep = crate::families::dihedral(5).unwrap();
        let text = write_rep_file(&rep);
        assert!(text.contains("field quadratic 5"));
        assert!(text.contains("sqrt(5)"));
        let back = parse_rep_file(&text).unwrap().into_rep().unwrap();
        for (a, b) in rep.generators().iter().zip(back.generators()) {
            assert_eq!(a.matrix(), b.matrix());
        }
    }

    #[test]
    fn per_generator_validation_reports() {
        let with_identity = "\
reflex-rep v1
field rational
dim 2
gen good
-1 0
0 1
gen bad
1 0
0 1
";
        let raw = parse_rep_file(with_identity).unwrap();
        let verdicts = raw.validate_generators();
        assert!(verdicts[0].1.is_ok());
        assert!(verdicts[1].1.is_err());
        assert!(raw.into_rep().is_err());
    }
}
