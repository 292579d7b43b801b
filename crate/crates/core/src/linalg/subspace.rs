use super::{Field, LinalgError, LinearMap, Scalar};

/// A subspace of `field^ambient_dim`, held as its reduced row echelon basis.
/// The echelon basis is unique, so equality of subspaces is equality of
/// the stored bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        LinearMap::identity(field, ambient_dim).image()
    }

    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span(field: Field, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient_dim);
        }
        let m = LinearMap::from_rows(field, ambient_dim, vectors).expect("vector lengths");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in rebuilt.iter_mut().zip(b) {
                *slot = &*slot + &(c * x);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn vector(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let mut v = vec![self.field.zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in v.iter_mut().zip(b) {
                *slot = &*slot + &(c * x);
            }
        }
        v
    }

    /// The inclusion map into the ambient space (columns are basis vectors).
    pub fn inclusion(&self) -> LinearMap {
        LinearMap::from_columns(self.field, self.ambient_dim, &self.basis)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, vs)
    }

    /// Linear functionals vanishing on the subspace, as coordinate vectors.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient_dim);
        }
        LinearMap::from_rows(self.field, self.ambient_dim, self.basis.clone())
            .expect("basis lengths")
            .kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut eqs = self.annihilator().basis;
        eqs.extend(other.annihilator().basis);
        if eqs.is_empty() {
            return Ok(Subspace::full(self.field, self.ambient_dim));
        }
        Ok(LinearMap::from_rows(self.field, self.ambient_dim, eqs)?.kernel())
    }
}
