use std::fmt;

use super::{Field, LinalgError, Scalar, Subspace};

/// A linear map between coordinate spaces, stored as a dense row-major
/// matrix. Column `j` holds the image of the `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        LinearMap {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(
        field: Field,
        cols: usize,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(LinearMap {
            field,
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given coordinate vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| dot(self.field, self.row(i), v))
            .collect()
    }

    /// The composite `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinearMap) -> Result<LinearMap, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.check_same_shape(rhs)?;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(LinearMap {
            data,
            ..self.clone()
        })
    }

    pub fn add(&self, rhs: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.check_same_shape(rhs)?;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LinearMap {
            data,
            ..self.clone()
        })
    }

    fn check_same_shape(&self, rhs: &LinearMap) -> Result<(), LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> LinearMap {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Stacks maps with a common source vertically.
    pub fn vstack(
        field: Field,
        cols: usize,
        blocks: &[LinearMap],
    ) -> Result<LinearMap, LinalgError> {
        let mut rows = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: b.cols,
                });
            }
            rows.extend((0..b.rows).map(|i| b.row(i).to_vec()));
        }
        LinearMap::from_rows(field, cols, rows)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (LinearMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Null space in canonical echelon form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, fc);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, basis)
    }

    /// Two-sided inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<LinearMap> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = LinearMap::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = LinearMap::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Column space in canonical echelon form.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::span(self.field, self.rows, cols)
    }
}

pub(crate) fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc + &(x * y);
        }
    }
    acc
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
