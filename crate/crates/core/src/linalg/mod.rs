//! Exact linear algebra over ℚ or GF(p).
//!
//! Everything here is dense Gaussian elimination on exact scalars. Subspaces
//! are kept in reduced row echelon form so that two subspaces are equal
//! exactly when their stored bases are.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::LinearMap;
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("malformed scalar {0:?}")]
    BadScalar(String),
    #[error("denominator of {value} vanishes modulo {modulus}")]
    DenominatorVanishes { value: String, modulus: u64 },
}

pub fn kernel(m: &LinearMap) -> Subspace {
    m.kernel()
}

pub fn rank(m: &LinearMap) -> usize {
    m.rank()
}

pub fn is_injective(m: &LinearMap) -> bool {
    m.is_injective()
}

pub fn is_surjective(m: &LinearMap) -> bool {
    m.is_surjective()
}

/// Common fixed vectors of a family of endomorphisms: the intersection of
/// the kernels of `m - id`. The empty family fixes everything.
pub fn simultaneous_fixed_space(
    field: Field,
    maps: &[LinearMap],
    ambient_dim: usize,
) -> Result<Subspace, LinalgError> {
    if maps.is_empty() {
        return Ok(Subspace::full(field, ambient_dim));
    }
    let id = LinearMap::identity(field, ambient_dim);
    let mut blocks = Vec::with_capacity(maps.len());
    for m in maps {
        if m.rows() != ambient_dim || m.cols() != ambient_dim {
            return Err(LinalgError::ShapeMismatch {
                left: (m.rows(), m.cols()),
                right: (ambient_dim, ambient_dim),
            });
        }
        blocks.push(m.sub(&id)?);
    }
    Ok(LinearMap::vstack(field, ambient_dim, &blocks)?.kernel())
}

/// Projection onto `field^n / sub` together with a linear section.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub proj: LinearMap,
    pub section: LinearMap,
}

impl QuotientMap {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }
}

/// Builds the quotient by `sub`. The quotient coordinates are indexed by
/// the non-pivot columns of the echelon basis of `sub`, and the section
/// sends each quotient coordinate to the matching standard basis vector.
pub fn quotient_map(ambient_dim: usize, sub: &Subspace) -> Result<QuotientMap, LinalgError> {
    if sub.ambient_dim() != ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient_dim,
            found: sub.ambient_dim(),
        });
    }
    let field = sub.field();
    let pivots = sub.pivots();
    let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut proj = LinearMap::zeros(field, q, ambient_dim);
    let mut section = LinearMap::zeros(field, ambient_dim, q);
    for (k, &c) in free.iter().enumerate() {
        proj.set(k, c, field.one());
        section.set(c, k, field.one());
    }
    // e_p = b - Σ_{free c} b[c] e_c for the basis row b with pivot p
    for (b, &p) in sub.basis().iter().zip(pivots) {
        for (k, &c) in free.iter().enumerate() {
            proj.set(k, p, -&b[c]);
        }
    }
    let qm = QuotientMap { proj, section };
    debug_assert_eq!(
        qm.proj.compose(&qm.section).expect("shapes"),
        LinearMap::identity(field, q)
    );
    debug_assert_eq!(qm.proj.kernel(), *sub);
    Ok(qm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn ints(f: Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    fn mat(f: Field, rows: &[&[i64]]) -> LinearMap {
        let cols = rows.first().map_or(0, |r| r.len());
        LinearMap::from_rows(f, cols, rows.iter().map(|r| ints(f, r)).collect()).unwrap()
    }

    /// Brute-force oracle: all vectors with entries in {-2..2} that `m` kills,
    /// used to check the kernel on tiny instances.
    fn brute_kernel_members(m: &LinearMap) -> Vec<Vec<Scalar>> {
        let n = m.cols();
        let f = m.field();
        let mut out = Vec::new();
        let mut idx = vec![-2i64; n];
        loop {
            let v = ints(f, &idx);
            if m.apply(&v).iter().all(Scalar::is_zero) {
                out.push(v);
            }
            let mut k = 0;
            while k < n && idx[k] == 2 {
                idx[k] = -2;
                k += 1;
            }
            if k == n {
                break;
            }
            idx[k] += 1;
        }
        out
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let z = LinearMap::zeros(q(), 2, 3);
        assert_eq!(kernel(&z), Subspace::full(q(), 3));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(kernel(&LinearMap::identity(q(), 4)).dim(), 0);
    }

    #[test]
    fn kernel_of_difference_map() {
        let m = mat(q(), &[&[1, -1]]);
        let k = kernel(&m);
        assert_eq!(k, Subspace::span(q(), 2, vec![ints(q(), &[1, 1])]));
        for v in brute_kernel_members(&m) {
            assert!(k.contains(&v));
        }
        assert!(!k.contains(&ints(q(), &[1, 0])));
    }

    #[test]
    fn fixed_space_examples() {
        let id = LinearMap::identity(q(), 2);
        let swap = mat(q(), &[&[0, 1], &[1, 0]]);
        let neg = mat(q(), &[&[-1, 0], &[0, -1]]);
        assert_eq!(
            simultaneous_fixed_space(q(), &[id], 2).unwrap(),
            Subspace::full(q(), 2)
        );
        assert_eq!(
            simultaneous_fixed_space(q(), std::slice::from_ref(&swap), 2).unwrap(),
            Subspace::span(q(), 2, vec![ints(q(), &[1, 1])])
        );
        assert_eq!(
            simultaneous_fixed_space(q(), &[swap, neg], 2)
                .unwrap()
                .dim(),
            0
        );
        assert_eq!(
            simultaneous_fixed_space(q(), &[], 3).unwrap(),
            Subspace::full(q(), 3)
        );
        assert!(simultaneous_fixed_space(q(), &[LinearMap::identity(q(), 3)], 2).is_err());
    }

    #[test]
    fn quotient_examples() {
        let zero = Subspace::zero(q(), 3);
        let qm = quotient_map(3, &zero).unwrap();
        assert_eq!(qm.proj, LinearMap::identity(q(), 3));

        let full = Subspace::full(q(), 3);
        assert_eq!(quotient_map(3, &full).unwrap().dim(), 0);

        let diag = Subspace::span(q(), 2, vec![ints(q(), &[1, 1])]);
        let qm = quotient_map(2, &diag).unwrap();
        assert_eq!(qm.dim(), 1);
        assert_eq!(
            qm.proj.compose(&qm.section).unwrap(),
            LinearMap::identity(q(), 1)
        );
        assert_eq!(qm.proj.kernel(), diag);
    }

    #[test]
    fn rank_and_injectivity() {
        let id = LinearMap::identity(q(), 3);
        assert_eq!(rank(&id), 3);
        assert!(is_injective(&id) && is_surjective(&id));
        assert_eq!(rank(&LinearMap::zeros(q(), 3, 3)), 0);
        let m = mat(q(), &[&[1, 2], &[2, 4], &[0, 0]]);
        assert_eq!(rank(&m), 1);
        assert!(!is_injective(&m));
    }

    #[test]
    fn rank_agrees_between_q_and_gf101() {
        let rows: &[&[i64]] = &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10], &[2, 4, 6]];
        let gf = Field::prime(101).unwrap();
        assert_eq!(rank(&mat(q(), rows)), rank(&mat(gf, rows)));
        assert_eq!(rank(&mat(q(), rows)), 3);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(q(), 3, vec![ints(q(), &[1, 0, 0]), ints(q(), &[0, 1, 0])]);
        let b = Subspace::span(q(), 3, vec![ints(q(), &[0, 1, 0]), ints(q(), &[0, 0, 1])]);
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::span(q(), 3, vec![ints(q(), &[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(q(), 3));
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::span(q(), 3, vec![ints(q(), &[1, 1, 0]), ints(q(), &[0, 1, 1])]);
        let v = ints(q(), &[2, 5, 3]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.vector(&c), v);
        assert!(s.coordinates(&ints(q(), &[1, 0, 0])).is_none());
    }

    #[test]
    fn inverse_of_invertible_and_singular() {
        let m = mat(q(), &[&[1, 1], &[0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, mat(q(), &[&[1, -1], &[0, 1]]));
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(q(), 2));
        assert!(mat(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
