//! Generalized reflections and reflection representations.
//!
//! A generator matrix `s` qualifies when it is invertible, diagonalizable
//! and `rank(s - I) = 1`. Validation extracts the reflection vector `alpha`
//! (a generator of `Im(s - I)`, normalized so its first nonzero entry is 1),
//! the eigenvalue `lambda` with `s*alpha = lambda*alpha`, the functional `f`
//! with `s*v = v + f(v)*alpha`, and a basis of the fixed hyperplane
//! `ker(s - I)`. The vector `alpha` is only canonical up to scale; every
//! exported predicate must be (and is, by test) invariant under rescaling.

use thiserror::Error;

use crate::matrix::{vec_is_zero, vec_scale, Matrix};
use crate::scalar::{FieldContext, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReflectionError {
    #[error("generator {name}: matrix is not square")]
    NotSquare { name: String },
    #[error("generator {name}: rank(s - I) = {rank}, expected 1")]
    NotRankOne { name: String, rank: usize },
    #[error("generator {name}: s - I is nilpotent on its image (transvection), not diagonalizable")]
    NotDiagonalizable { name: String },
    #[error("generator {name}: matrix is singular")]
    NotInvertible { name: String },
    #[error("generator {name}: supplied vector is not a reflection vector of this matrix")]
    AlphaNotReflectionVector { name: String },
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("interaction coefficient requires two distinct generator indices, got {0}")]
    SameIndex(usize),
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("representation needs at least one generator")]
    NoGenerators,
    #[error("generator {name}: expected a {dim}x{dim} matrix")]
    DimensionMismatch { name: String, dim: usize },
    #[error("generator {name}: entries do not lie in the {context} field context")]
    ContextMismatch { name: String, context: FieldContext },
    #[error("scaling list has length {got}, expected {expected}")]
    ScalingCount { got: usize, expected: usize },
}

/// A validated generalized reflection together with its extracted data.
#[derive(Debug, Clone)]
pub struct ReflectionGenerator {
    name: String,
    matrix: Matrix,
    alpha: Vec<Scalar>,
    lambda: Scalar,
    functional: Vec<Scalar>,
    hyperplane: Vec<Vec<Scalar>>,
}

impl ReflectionGenerator {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn alpha(&self) -> &[Scalar] {
        &self.alpha
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn functional(&self) -> &[Scalar] {
        &self.functional
    }

    pub fn hyperplane(&self) -> &[Vec<Scalar>] {
        &self.hyperplane
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `f(v)` for the functional of this reflection.
    pub fn apply_functional(&self, v: &[Scalar]) -> Scalar {
        assert_eq!(v.len(), self.functional.len());
        let mut acc = Scalar::zero();
        for (c, x) in self.functional.iter().zip(v) {
            if !c.is_zero() && !x.is_zero() {
                acc = acc + c * x;
            }
        }
        acc
    }
}

/// Validate a generator matrix as a generalized reflection and extract its
/// reflection data. The reflection vector is the first nonzero column of
/// `m - I` scaled so that its first nonzero entry is 1; the choice is fixed
/// for the lifetime of the returned value.
pub fn validate_reflection(name: &str, m: &Matrix) -> Result<ReflectionGenerator, ReflectionError> {
    if !m.is_square() {
        return Err(ReflectionError::NotSquare { name: name.to_string() });
    }
    let n = m.rows();
    let diff = m.sub(&Matrix::identity(n));
    let rank = diff.rank();
    if rank != 1 {
        return Err(ReflectionError::NotRankOne { name: name.to_string(), rank });
    }

    let col = (0..n)
        .map(|j| diff.col(j))
        .find(|c| !vec_is_zero(c))
        .expect("rank-one matrix has a nonzero column");
    let lead = col.iter().position(|x| !x.is_zero()).expect("nonzero column");
    let alpha = vec_scale(&col, &col[lead].invert().expect("nonzero leading entry"));

    // Rank one gives diff = alpha * f^T; read f off the row where alpha is 1.
    let functional = diff.row(lead);
    for (i, ai) in alpha.iter().enumerate() {
        for (j, fj) in functional.iter().enumerate() {
            if diff.at(i, j) != &(ai * fj) {
                // Cannot happen for a rank-one matrix; guards the extraction.
                return Err(ReflectionError::NotRankOne { name: name.to_string(), rank });
            }
        }
    }

    let f_alpha = functional.iter().zip(&alpha).fold(Scalar::zero(), |acc, (c, x)| acc + c * x);
    if f_alpha.is_zero() {
        return Err(ReflectionError::NotDiagonalizable { name: name.to_string() });
    }
    let lambda = Scalar::one() + &f_alpha;
    if lambda.is_zero() {
        return Err(ReflectionError::NotInvertible { name: name.to_string() });
    }

    let hyperplane = diff.kernel_basis();
    debug_assert_eq!(hyperplane.len(), n - 1);

    Ok(ReflectionGenerator {
        name: name.to_string(),
        matrix: m.clone(),
        alpha,
        lambda,
        functional,
        hyperplane,
    })
}

/// Like [`validate_reflection`], but record the caller's choice of
/// reflection vector (any nonzero multiple of the canonical one).
pub fn validate_reflection_with_alpha(
    name: &str,
    m: &Matrix,
    alpha: &[Scalar],
) -> Result<ReflectionGenerator, ReflectionError> {
    let canonical = validate_reflection(name, m)?;
    let Some(ratio) = crate::matrix::proportionality_ratio(alpha, canonical.alpha()) else {
        return Err(ReflectionError::AlphaNotReflectionVector { name: name.to_string() });
    };
    if ratio.is_zero() {
        return Err(ReflectionError::AlphaNotReflectionVector { name: name.to_string() });
    }
    rescale_reflection_vector(&canonical, &ratio)
}

/// Replace `alpha` by `c*alpha` (and `f` by `f/c`). The matrix, eigenvalue
/// and hyperplane are untouched.
pub fn rescale_reflection_vector(
    g: &ReflectionGenerator,
    c: &Scalar,
) -> Result<ReflectionGenerator, ReflectionError> {
    if c.is_zero() {
        return Err(ReflectionError::ZeroScale);
    }
    let cinv = c.invert().expect("nonzero scale");
    Ok(ReflectionGenerator {
        name: g.name.clone(),
        matrix: g.matrix.clone(),
        alpha: vec_scale(&g.alpha, c),
        lambda: g.lambda.clone(),
        functional: vec_scale(&g.functional, &cinv),
        hyperplane: g.hyperplane.clone(),
    })
}

/// A finite set of generalized reflections acting on one exact vector space.
#[derive(Debug, Clone)]
pub struct ReflectionRep {
    dim: usize,
    context: FieldContext,
    generators: Vec<ReflectionGenerator>,
}

impl ReflectionRep {
    pub fn new(
        context: FieldContext,
        generators: Vec<ReflectionGenerator>,
    ) -> Result<Self, ReflectionError> {
        let Some(first) = generators.first() else {
            return Err(ReflectionError::NoGenerators);
        };
        let dim = first.dim();
        for g in &generators {
            if g.dim() != dim {
                return Err(ReflectionError::DimensionMismatch {
                    name: g.name().to_string(),
                    dim,
                });
            }
            let mut scalars: Vec<&Scalar> = g.matrix.entries().iter().collect();
            scalars.extend(g.alpha.iter());
            scalars.extend(g.functional.iter());
            scalars.push(&g.lambda);
            if scalars.into_iter().any(|s| !context.contains(s)) {
                return Err(ReflectionError::ContextMismatch {
                    name: g.name().to_string(),
                    context,
                });
            }
        }
        Ok(ReflectionRep { dim, context, generators })
    }

    /// Validate a list of named matrices and assemble the representation.
    pub fn from_matrices(
        context: FieldContext,
        named: Vec<(String, Matrix)>,
    ) -> Result<Self, ReflectionError> {
        let mut generators = Vec::with_capacity(named.len());
        for (name, m) in named {
            generators.push(validate_reflection(&name, &m)?);
        }
        ReflectionRep::new(context, generators)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of generators.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn context(&self) -> &FieldContext {
        &self.context
    }

    pub fn generators(&self) -> &[ReflectionGenerator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &ReflectionGenerator {
        &self.generators[i]
    }

    pub fn check_index(&self, i: usize) -> Result<(), ReflectionError> {
        if i < self.k() {
            Ok(())
        } else {
            Err(ReflectionError::IndexOutOfRange { index: i, count: self.k() })
        }
    }

    /// The coefficient `x` in `s_i * alpha_j = alpha_j + x * alpha_i`;
    /// zero exactly when the generator `s_i` fixes `alpha_j`.
    pub fn interaction_coefficient(&self, j: usize, i: usize) -> Result<Scalar, ReflectionError> {
        if i == j {
            return Err(ReflectionError::SameIndex(i));
        }
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.generators[i].apply_functional(self.generators[j].alpha()))
    }

    /// Matrix whose columns are the reflection vectors.
    pub fn alpha_matrix(&self) -> Matrix {
        Matrix::from_cols(self.generators.iter().map(|g| g.alpha().to_vec()).collect())
    }

    /// Rescale every reflection vector; `scalings[i]` applies to generator `i`.
    pub fn rescale(&self, scalings: &[Scalar]) -> Result<ReflectionRep, ReflectionError> {
        if scalings.len() != self.k() {
            return Err(ReflectionError::ScalingCount { got: scalings.len(), expected: self.k() });
        }
        let generators = self
            .generators
            .iter()
            .zip(scalings)
            .map(|(g, c)| rescale_reflection_vector(g, c))
            .collect::<Result<Vec<_>, _>>()?;
        ReflectionRep::new(self.context, generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar as S;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(S::from_int).collect()).collect(),
        )
    }

    /// The three plane reflections whose move digraph is a directed triangle.
    fn cycle_rep() -> ReflectionRep {
        crate::families::section4_example()
    }

    #[test]
    fn identity_is_not_a_reflection() {
        let err = validate_reflection("id", &Matrix::identity(3)).unwrap_err();
        assert!(matches!(err, ReflectionError::NotRankOne { rank: 0, .. }));
    }

    #[test]
    fn transvection_is_rejected() {
        let err = validate_reflection("u", &m(vec![vec![1, 1], vec![0, 1]])).unwrap_err();
        assert!(matches!(err, ReflectionError::NotDiagonalizable { .. }));
    }

    #[test]
    fn singular_rank_one_shift_is_rejected() {
        // diag(0, 1): rank(s - I) = 1 but the matrix itself is singular.
        let err = validate_reflection("z", &m(vec![vec![0, 0], vec![0, 1]])).unwrap_err();
        assert!(matches!(err, ReflectionError::NotInvertible { .. }));
    }

    #[test]
    fn plane_reflection_extraction() {
        // s2: alpha_1 -> alpha_1 + 2 alpha_2, alpha_2 -> -alpha_2.
        let s2 = m(vec![vec![1, 0], vec![2, -1]]);
        let g = validate_reflection("s2", &s2).unwrap();
        assert_eq!(g.alpha(), &[S::zero(), S::one()]);
        assert_eq!(g.lambda(), &S::from_int(-1));
        assert_eq!(g.apply_functional(&[S::one(), S::zero()]), S::from_int(2));
        assert_eq!(g.hyperplane().len(), 1);

        // lambda = -1 eigenvector is alpha_2 itself.
        let eig = s2.eigenspace(&S::from_int(-1));
        assert!(crate::matrix::same_span(2, &eig, &[vec![S::zero(), S::one()]]));
    }

    #[test]
    fn rescaling_round_trips() {
        let g = validate_reflection("s2", &m(vec![vec![1, 0], vec![2, -1]])).unwrap();
        let same = rescale_reflection_vector(&g, &S::one()).unwrap();
        assert_eq!(same.alpha(), g.alpha());
        assert_eq!(same.functional(), g.functional());

        let up = rescale_reflection_vector(&g, &S::from_int(2)).unwrap();
        let back = rescale_reflection_vector(&up, &S::ratio(1, 2)).unwrap();
        assert_eq!(back.alpha(), g.alpha());
        assert_eq!(back.functional(), g.functional());

        let tripled = rescale_reflection_vector(&g, &S::from_int(3)).unwrap();
        assert_eq!(tripled.alpha(), &[S::zero(), S::from_int(3)]);
        assert_eq!(tripled.matrix(), g.matrix());
        assert_eq!(tripled.lambda(), g.lambda());
        // The defining identity still holds with the rescaled data.
        for v in [[S::one(), S::zero()], [S::one(), S::from_int(5)]] {
            let lhs = tripled.matrix().mul_vec(&v);
            let fv = tripled.apply_functional(&v);
            let rhs = crate::matrix::vec_add(&v, &vec_scale(tripled.alpha(), &fv));
            assert_eq!(lhs, rhs);
        }

        assert!(matches!(
            rescale_reflection_vector(&g, &S::zero()),
            Err(ReflectionError::ZeroScale)
        ));
    }

    #[test]
    fn interaction_coefficients_of_cycle_rep() {
        let rep = cycle_rep();
        // s2 moves alpha_1 by +2; s1 fixes alpha_2.
        assert_eq!(rep.interaction_coefficient(0, 1).unwrap(), S::from_int(2));
        assert_eq!(rep.interaction_coefficient(1, 0).unwrap(), S::zero());
        assert!(matches!(
            rep.interaction_coefficient(1, 1),
            Err(ReflectionError::SameIndex(1))
        ));
    }

    #[test]
    fn affine_boundary_coefficient_is_x() {
        let x = S::from_int(7);
        let rep = crate::families::affine_an_vx(2, &x).unwrap();
        // s_0 moves alpha_n by x alpha_0, s_n moves alpha_0 by (1/x) alpha_n.
        assert_eq!(rep.interaction_coefficient(2, 0).unwrap(), x);
        assert_eq!(rep.interaction_coefficient(0, 2).unwrap(), S::ratio(1, 7));
    }

    #[test]
    fn rep_construction_enforces_one_field_context() {
        // A quadratic entry cannot enter a rational-context representation.
        let m = Matrix::from_rows(vec![
            vec![S::from_int(-1), S::sqrt(5)],
            vec![S::zero(), S::one()],
        ]);
        let g = validate_reflection("q", &m).unwrap();
        assert!(matches!(
            ReflectionRep::new(crate::scalar::FieldContext::Rational, vec![g.clone()]),
            Err(ReflectionError::ContextMismatch { .. })
        ));
        assert!(ReflectionRep::new(crate::scalar::FieldContext::Quadratic(5), vec![g]).is_ok());
    }

    #[test]
    fn arrow_pattern_survives_rescaling() {
        let rep = cycle_rep();
        let scalings = vec![S::ratio(3, 2), S::from_int(-4), S::ratio(-1, 5)];
        let rescaled = rep.rescale(&scalings).unwrap();
        for i in 0..rep.k() {
            for j in 0..rep.k() {
                if i == j {
                    continue;
                }
                let before = rep.interaction_coefficient(i, j).unwrap().is_zero();
                let after = rescaled.interaction_coefficient(i, j).unwrap().is_zero();
                assert_eq!(before, after, "zero pattern changed at ({i},{j})");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        /// Random reflections built as I + alpha f^T satisfy the functional
        /// identity s*v = v + f(v) alpha on random vectors.
        #[test]
        fn functional_identity(
            raw_alpha in proptest::collection::vec(-4i64..=4, 3),
            raw_f in proptest::collection::vec(-4i64..=4, 3),
            raw_v in proptest::collection::vec(-6i64..=6, 3),
        ) {
            let alpha: Vec<S> = raw_alpha.into_iter().map(S::from_int).collect();
            let f: Vec<S> = raw_f.into_iter().map(S::from_int).collect();
            let fa = f.iter().zip(&alpha).fold(S::zero(), |acc, (c, x)| acc + c * x);
            // Need a genuine diagonalizable invertible reflection.
            prop_assume!(!fa.is_zero());
            prop_assume!(!(S::one() + &fa).is_zero());
            let n = alpha.len();
            let mat = Matrix::from_fn(n, n, |i, j| {
                let base = if i == j { S::one() } else { S::zero() };
                base + &alpha[i] * &f[j]
            });
            let g = validate_reflection("r", &mat).unwrap();
            let v: Vec<S> = raw_v.into_iter().map(S::from_int).collect();
            let lhs = g.matrix().mul_vec(&v);
            let fv = g.apply_functional(&v);
            let rhs = crate::matrix::vec_add(&v, &vec_scale(g.alpha(), &fv));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
