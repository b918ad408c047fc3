//! Exterior powers of representations as compound matrices.
//!
//! The d-th compound of an n x n matrix is indexed by the d-element subsets
//! of the column indices in lexicographic order; its (R, C) entry is the
//! minor on rows R and columns C. This realizes the induced action on the
//! d-th exterior power in the basis of wedges of standard basis vectors,
//! with all signs coming from the minor determinants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::reflection::ReflectionRep;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("wedge factors must all have length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("subset {tuple:?} is not a strictly increasing tuple below {n}")]
    BadSubset { tuple: Vec<usize>, n: usize },
    #[error("rank {rank} out of range: there are {count} subsets")]
    RankOutOfRange { rank: usize, count: usize },
    #[error("binomial arguments must satisfy 1 <= d <= n-1, got n={n}, d={d}")]
    BinomialRange { n: usize, d: usize },
}

/// Binomial coefficient as an exact machine integer. Desk scale: panics on
/// u128 overflow rather than approximating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

fn binomial_rational(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for i in 0..k.min(n - k) {
        acc *= BigRational::new(BigInt::from(n - i), BigInt::from(i + 1));
    }
    acc
}

/// A d-element subset of `{0, .., n-1}` as a strictly increasing tuple,
/// together with its position in the lexicographic enumeration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetIndex {
    n: usize,
    tuple: Vec<usize>,
}

impl SubsetIndex {
    pub fn new(n: usize, tuple: Vec<usize>) -> Result<Self, ExteriorError> {
        let increasing = tuple.windows(2).all(|w| w[0] < w[1]);
        if !increasing || tuple.iter().any(|&t| t >= n) {
            return Err(ExteriorError::BadSubset { tuple, n });
        }
        Ok(SubsetIndex { n, tuple })
    }

    pub fn tuple(&self) -> &[usize] {
        &self.tuple
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    /// Position in the lexicographic order of all d-subsets of `{0..n-1}`.
    pub fn rank(&self) -> usize {
        let d = self.tuple.len();
        let mut rank: u128 = 0;
        let mut prev: isize = -1;
        for (p, &t) in self.tuple.iter().enumerate() {
            for v in (prev + 1) as usize..t {
                rank += binomial(self.n - 1 - v, d - 1 - p);
            }
            prev = t as isize;
        }
        rank as usize
    }

    /// Inverse of [`SubsetIndex::rank`].
    pub fn from_rank(n: usize, d: usize, rank: usize) -> Result<Self, ExteriorError> {
        let count = binomial(n, d);
        if (rank as u128) >= count {
            return Err(ExteriorError::RankOutOfRange { rank, count: count as usize });
        }
        let mut remaining = rank as u128;
        let mut tuple = Vec::with_capacity(d);
        let mut v = 0usize;
        for p in 0..d {
            loop {
                let c = binomial(n - 1 - v, d - 1 - p);
                if remaining < c {
                    tuple.push(v);
                    v += 1;
                    break;
                }
                remaining -= c;
                v += 1;
            }
        }
        Ok(SubsetIndex { n, tuple })
    }

    /// All d-subsets in lexicographic order.
    pub fn all(n: usize, d: usize) -> Vec<SubsetIndex> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..d).collect();
        if d > n {
            return out;
        }
        loop {
            out.push(SubsetIndex { n, tuple: current.clone() });
            // Advance to the lexicographic successor.
            let mut i = d;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current[i] != n - d + i {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            current[i] += 1;
            for j in i + 1..d {
                current[j] = current[j - 1] + 1;
            }
        }
    }
}

/// The d-th compound: entry (R, C) is the minor of `m` on rows R, columns C.
/// Degree 0 gives the 1x1 identity, degree n the 1x1 determinant.
pub fn compound_matrix(m: &Matrix, d: usize) -> Result<Matrix, ExteriorError> {
    assert!(m.is_square(), "compound of a non-square matrix");
    let n = m.rows();
    if d > n {
        return Err(ExteriorError::DegreeOutOfRange { degree: d, dim: n });
    }
    let subsets = SubsetIndex::all(n, d);
    let size = subsets.len();
    Ok(Matrix::from_fn(size, size, |i, j| {
        m.minor(subsets[i].tuple(), subsets[j].tuple())
    }))
}

/// Wedge of `d` column vectors: coordinates are the d x d minors of the
/// stacked n x d matrix, indexed by row subsets in lexicographic order.
/// Zero exactly when the factors are linearly dependent.
pub fn wedge_vector(vectors: &[Vec<Scalar>]) -> Result<Vec<Scalar>, ExteriorError> {
    let d = vectors.len();
    if d == 0 {
        return Ok(vec![Scalar::one()]);
    }
    let n = vectors[0].len();
    for v in vectors {
        if v.len() != n {
            return Err(ExteriorError::LengthMismatch { expected: n, found: v.len() });
        }
    }
    if d > n {
        return Err(ExteriorError::DegreeOutOfRange { degree: d, dim: n });
    }
    let stacked = Matrix::from_cols(vectors.to_vec());
    let cols: Vec<usize> = (0..d).collect();
    Ok(SubsetIndex::all(n, d)
        .iter()
        .map(|rows| stacked.minor(rows.tuple(), &cols))
        .collect())
}

/// A reflection representation raised to an exterior power: each generator
/// is replaced by its d-th compound.
#[derive(Debug, Clone)]
pub struct ExteriorRep {
    base: ReflectionRep,
    degree: usize,
    matrices: Vec<Matrix>,
}

pub fn exterior_power(rep: &ReflectionRep, d: usize) -> Result<ExteriorRep, ExteriorError> {
    if d > rep.dim() {
        return Err(ExteriorError::DegreeOutOfRange { degree: d, dim: rep.dim() });
    }
    let matrices = rep
        .generators()
        .iter()
        .map(|g| compound_matrix(g.matrix(), d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExteriorRep { base: rep.clone(), degree: d, matrices })
}

impl ExteriorRep {
    pub fn base(&self) -> &ReflectionRep {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the exterior power, `C(n, d)`.
    pub fn dim(&self) -> usize {
        binomial(self.base.dim(), self.degree) as usize
    }

    pub fn k(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// Basis of the fixed space of generator `i` on the exterior power;
    /// its dimension is `C(n-1, d)`.
    pub fn eigenspace_plus(&self, i: usize) -> Vec<Vec<Scalar>> {
        self.matrices[i].eigenspace(&Scalar::one())
    }

    /// Basis of the `lambda_i`-eigenspace of generator `i`; its dimension
    /// is `C(n-1, d-1)`.
    pub fn eigenspace_minus(&self, i: usize) -> Vec<Vec<Scalar>> {
        self.matrices[i].eigenspace(self.base.generator(i).lambda())
    }

    /// Basis of the intersection of the `lambda_i`-eigenspaces over the
    /// given generators. For `m` generators with independent reflection
    /// vectors this is zero when `d < m` and, when `d = m`, the line
    /// spanned by the wedge of the reflection vectors; generators whose
    /// vector depends on the others do not cut the space down further.
    pub fn intersect_minus(&self, indices: &[usize]) -> Vec<Vec<Scalar>> {
        let dim = self.dim();
        if indices.is_empty() {
            // Intersection over nothing: the whole exterior power.
            return (0..dim)
                .map(|i| {
                    let mut v = vec![Scalar::zero(); dim];
                    v[i] = Scalar::one();
                    v
                })
                .collect();
        }
        let mut stacked: Option<Matrix> = None;
        for &i in indices {
            let shifted = self.matrices[i]
                .sub(&Matrix::identity(dim).scale(self.base.generator(i).lambda()));
            stacked = Some(match stacked {
                None => shifted,
                Some(prev) => Matrix::vstack(&prev, &shifted),
            });
        }
        stacked.expect("nonempty indices").kernel_basis()
    }
}

/// Do the two eigenspace-dimension equalities
/// `C(n1-1, d1) = C(n2-1, d2)` and `C(n1-1, d1-1) = C(n2-1, d2-1)` hold?
/// Over the valid range these force `n1 = n2` and `d1 = d2`; the
/// implication is enforced by an exhaustive test, not assumed.
pub fn binom_rigidity(
    n1: usize,
    d1: usize,
    n2: usize,
    d2: usize,
) -> Result<bool, ExteriorError> {
    for (n, d) in [(n1, d1), (n2, d2)] {
        if d == 0 || d + 1 > n {
            return Err(ExteriorError::BinomialRange { n, d });
        }
    }
    Ok(binomial(n1 - 1, d1) == binomial(n2 - 1, d2)
        && binomial(n1 - 1, d1 - 1) == binomial(n2 - 1, d2 - 1))
}

/// The exact rational identity
/// `C(n-1, d) - C(n-1, d-1) = C(n, d) * (1 - 2d/n)`
/// that links the two eigenspace dimensions to the full binomial.
pub fn binom_difference_identity(n: usize, d: usize) -> bool {
    assert!(n >= 1 && d <= n);
    let lhs = binomial_rational(n - 1, d)
        - if d == 0 { BigRational::zero() } else { binomial_rational(n - 1, d - 1) };
    let ratio = BigRational::new(BigInt::from(2 * d), BigInt::from(n));
    let rhs = binomial_rational(n, d) * (BigRational::one() - ratio);
    lhs == rhs
}

/// Which of the two eigenspace dimensions an equality search targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenDim {
    /// `C(n-1, d)`, the fixed-space dimension.
    Plus,
    /// `C(n-1, d-1)`, the moved-line dimension.
    Minus,
}

/// Group all pairs (n, d) with `2 <= n <= max_n`, `1 <= d <= n-1` by the
/// value of the selected eigenspace dimension. Entries sharing a value are
/// exactly the solutions of one of the two equalities.
pub fn equality_solutions(max_n: usize, which: EigenDim) -> BTreeMap<u128, Vec<(usize, usize)>> {
    let mut out: BTreeMap<u128, Vec<(usize, usize)>> = BTreeMap::new();
    for n in 2..=max_n {
        for d in 1..n {
            let value = match which {
                EigenDim::Plus => binomial(n - 1, d),
                EigenDim::Minus => binomial(n - 1, d - 1),
            };
            out.entry(value).or_default().push((n, d));
        }
    }
    out
}
