use std::fmt;
use std::sync::Arc;

use super::AlgError;
use crate::linalg::{Field, LinearMap, Scalar, Subspace};
use crate::report::ValidationReport;

/// A finite-dimensional unital algebra given by structure constants:
/// `table[i * dim + j]` is the coordinate vector of `b_i · b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
}

impl FinAlgebra {
    pub fn new(
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgError> {
        let dim = labels.len();
        if table.len() != dim * dim {
            return Err(AlgError::Shape(format!(
                "structure table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        if let Some(bad) = table.iter().position(|v| v.len() != dim) {
            return Err(AlgError::Shape(format!(
                "product {} ⋅ {} has length {}",
                labels[bad / dim],
                labels[bad % dim],
                table[bad].len()
            )));
        }
        if unit.len() != dim {
            return Err(AlgError::Shape(format!("unit has length {}", unit.len())));
        }
        Ok(FinAlgebra {
            field,
            labels,
            table,
            unit,
        })
    }

    /// Builds the table from a closure giving `b_i · b_j`.
    pub fn from_fn(
        field: Field,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self, AlgError> {
        let dim = labels.len();
        let table = (0..dim * dim).map(|k| product(k / dim, k % dim)).collect();
        Self::new(field, labels, table, unit)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field(field: Field) -> Self {
        Self::product_of_fields(field, 1)
    }

    /// `k × ⋯ × k` with orthogonal idempotent basis `e1, …, en`.
    pub fn product_of_fields(field: Field, n: usize) -> Self {
        let labels = if n == 1 {
            vec!["1".to_string()]
        } else {
            (1..=n).map(|i| format!("e{i}")).collect()
        };
        Self::from_fn(field, labels, vec![field.one(); n], |i, j| {
            let mut v = vec![field.zero(); n];
            if i == j {
                v[i] = field.one();
            }
            v
        })
        .expect("product of fields")
    }

    /// `n × n` matrices with matrix-unit basis `E_ij` in row-major order.
    pub fn matrix_algebra(field: Field, n: usize) -> Self {
        let dim = n * n;
        let labels = (0..dim)
            .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
            .collect();
        let mut unit = vec![field.zero(); dim];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Self::from_fn(field, labels, unit, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut v = vec![field.zero(); dim];
            if j == k {
                v[i * n + l] = field.one();
            }
            v
        })
        .expect("matrix algebra")
    }

    /// The group algebra of the cyclic group of order `n`, basis `g^0, …`.
    pub fn cyclic_group_algebra(field: Field, n: usize) -> Self {
        let labels = (0..n).map(|i| format!("g^{i}")).collect();
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Self::from_fn(field, labels, unit, |i, j| {
            let mut v = vec![field.zero(); n];
            v[(i + j) % n] = field.one();
            v
        })
        .expect("group algebra")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    /// Overwrites one structure constant. Used to build deliberately broken
    /// algebras in tests.
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let dim = self.dim();
        self.table[i * dim + j][k] = v;
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let dim = self.dim();
        let mut out = self.zero_vector();
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (slot, c) in out.iter_mut().zip(&self.table[i * dim + j]) {
                    if !c.is_zero() {
                        *slot = &*slot + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Renders a coordinate vector as a combination of basis labels.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        format_combination(&self.labels, v)
    }

    /// The algebra obtained by restricting to a subspace that contains the
    /// unit and is closed under products. The basis is the echelon basis of
    /// the subspace.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<FinAlgebra, AlgError> {
        assert_eq!(sub.ambient_dim(), self.dim(), "subspace ambient dimension");
        let unit = sub
            .coordinates(&self.unit)
            .ok_or(AlgError::UnitNotInSubspace)?;
        let basis = sub.basis();
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for u in basis {
            for v in basis {
                let p = self.mul(u, v);
                let coords = sub.coordinates(&p).ok_or_else(|| AlgError::NotClosed {
                    left: self.format_element(u),
                    right: self.format_element(v),
                })?;
                table.push(coords);
            }
        }
        let labels = basis.iter().map(|b| self.format_element(b)).collect();
        FinAlgebra::new(self.field, labels, table, unit)
    }
}

pub(crate) fn format_combination(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (sign, mag) = match text.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", text),
        };
        if !out.is_empty() || sign == "-" {
            out.push_str(sign);
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('·');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

impl fmt::Display for FinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "algebra of dim {} on [{}]",
            self.dim(),
            self.labels.join(", ")
        )
    }
}

/// Associativity over all basis triples and both unit laws over all basis
/// elements.
pub fn validate_algebra(a: &FinAlgebra) -> ValidationReport {
    let mut report = ValidationReport::new();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let left = a.mul(ij, &a.basis_vector(k));
                let right = a.mul(&a.basis_vector(i), a.basis_product(j, k));
                if left != right {
                    report.push(
                        "associativity",
                        format!(
                            "({0}·{1})·{2} = {3} but {0}·({1}·{2}) = {4}",
                            a.label(i),
                            a.label(j),
                            a.label(k),
                            a.format_element(&left),
                            a.format_element(&right)
                        ),
                    );
                }
            }
        }
    }
    for i in 0..n {
        let b = a.basis_vector(i);
        if a.mul(a.unit(), &b) != b {
            report.push("left unit", format!("1·{} ≠ {}", a.label(i), a.label(i)));
        }
        if a.mul(&b, a.unit()) != b {
            report.push("right unit", format!("{}·1 ≠ {}", a.label(i), a.label(i)));
        }
    }
    report
}

/// An element of a specific algebra.
#[derive(Clone, Debug)]
pub struct AlgebraElement<'a> {
    pub algebra: &'a FinAlgebra,
    pub coords: Vec<Scalar>,
}

impl<'a> AlgebraElement<'a> {
    pub fn new(algebra: &'a FinAlgebra, coords: Vec<Scalar>) -> Result<Self, AlgError> {
        if coords.len() != algebra.dim() {
            return Err(AlgError::Shape(format!(
                "element has {} coordinates in an algebra of dim {}",
                coords.len(),
                algebra.dim()
            )));
        }
        Ok(AlgebraElement { algebra, coords })
    }

    pub fn basis(algebra: &'a FinAlgebra, i: usize) -> Self {
        AlgebraElement {
            algebra,
            coords: algebra.basis_vector(i),
        }
    }

    pub fn one(algebra: &'a FinAlgebra) -> Self {
        AlgebraElement {
            algebra,
            coords: algebra.unit().to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

impl PartialEq for AlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.algebra, other.algebra) && self.coords == other.coords
    }
}

impl fmt::Display for AlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.algebra.format_element(&self.coords))
    }
}

pub fn multiply<'a>(
    u: &AlgebraElement<'a>,
    v: &AlgebraElement<'a>,
) -> Result<AlgebraElement<'a>, AlgError> {
    if !std::ptr::eq(u.algebra, v.algebra) {
        return Err(AlgError::AlgebraMismatch);
    }
    Ok(AlgebraElement {
        algebra: u.algebra,
        coords: u.algebra.mul(&u.coords, &v.coords),
    })
}

/// A linear map between algebras claimed to be a unital homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    pub source: Arc<FinAlgebra>,
    pub target: Arc<FinAlgebra>,
    pub map: LinearMap,
}

impl AlgebraHom {
    pub fn new(
        source: Arc<FinAlgebra>,
        target: Arc<FinAlgebra>,
        map: LinearMap,
    ) -> Result<Self, AlgError> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(AlgError::Shape(format!(
                "hom matrix is {}×{}, expected {}×{}",
                map.rows(),
                map.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(a: Arc<FinAlgebra>) -> Self {
        let map = LinearMap::identity(a.field(), a.dim());
        AlgebraHom {
            source: a.clone(),
            target: a,
            map,
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(v)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &AlgebraHom) -> Result<AlgebraHom, AlgError> {
        let map = self.map.compose(&rhs.map)?;
        AlgebraHom::new(rhs.source.clone(), self.target.clone(), map)
    }
}

pub fn validate_hom(h: &AlgebraHom) -> ValidationReport {
    let mut report = ValidationReport::new();
    let (s, t) = (&*h.source, &*h.target);
    if h.map.rows() != t.dim() || h.map.cols() != s.dim() {
        report.push("hom shape", format!("{}×{}", h.map.rows(), h.map.cols()));
        return report;
    }
    let image_of_unit = h.apply(s.unit());
    if image_of_unit != t.unit() {
        report.push(
            "unital",
            format!("φ(1) = {} ≠ 1", t.format_element(&image_of_unit)),
        );
    }
    for i in 0..s.dim() {
        for j in 0..s.dim() {
            let left = h.apply(s.basis_product(i, j));
            let right = t.mul(&h.map.column(i), &h.map.column(j));
            if left != right {
                report.push(
                    "multiplicative",
                    format!(
                        "φ({0}·{1}) = {2} but φ({0})·φ({1}) = {3}",
                        s.label(i),
                        s.label(j),
                        t.format_element(&left),
                        t.format_element(&right)
                    ),
                );
            }
        }
    }
    report
}

/// Tensor product of algebras with basis `a_i ⊗ b_j` ordered `a`-major.
pub fn tensor_product(a: &FinAlgebra, b: &FinAlgebra) -> FinAlgebra {
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let labels = (0..da * db)
        .map(|k| format!("{}⊗{}", a.label(k / db), b.label(k % db)))
        .collect();
    let unit = kron(a.unit(), b.unit());
    FinAlgebra::from_fn(field, labels, unit, |x, y| {
        let (i, j) = (x / db, x % db);
        let (k, l) = (y / db, y % db);
        kron(a.basis_product(i, k), b.basis_product(j, l))
    })
    .expect("tensor product")
}

/// Kronecker product of coordinate vectors (first factor most significant).
pub fn kron(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a * b);
        }
    }
    out
}
