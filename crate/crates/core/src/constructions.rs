//! Category algebras, skew category algebras, the tensor product of the
//! object algebras of a precosheaf, twisting maps, twisted tensor products,
//! and the embedding of a skew category algebra into a twisted tensor
//! product.

use std::sync::Arc;

use thiserror::Error;

use crate::algstruct::{
    kron, tensor_product, validate_algebra, validate_hom, AlgError, AlgebraHom, FinAlgebra,
    GradedAlgebra, Precosheaf,
};
use crate::fincat::{FinCategory, MorId};
use crate::linalg::{Field, LinearMap, Scalar};
use crate::report::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("twisting map fails its axioms:\n{0}")]
    InvalidTwist(ValidationReport),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

type Sparse = Vec<(usize, Scalar)>;

fn sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// The convolution algebra: basis `Mor c`, `g·f = g∘f` when composable and
/// zero otherwise, unit `Σ_x 1_x`.
pub fn category_algebra(c: &FinCategory, field: Field) -> FinAlgebra {
    let n = c.num_morphisms();
    let labels = c
        .morphisms()
        .map(|f| c.morphism_name(f).to_string())
        .collect();
    let mut unit = vec![field.zero(); n];
    for x in c.objects() {
        unit[c.identity(x).0] = field.one();
    }
    FinAlgebra::from_fn(field, labels, unit, |g, f| {
        let (g, f) = (MorId(g), MorId(f));
        match c.comp(g, f).filter(|_| c.composable(g, f)) {
            Some(h) => unit_vector(field, n, h.0),
            None => vec![field.zero(); n],
        }
    })
    .expect("category algebra")
}

/// Start index of each morphism's block in the skew category algebra.
pub fn skew_offsets(r: &Precosheaf) -> Vec<usize> {
    let c = r.category();
    let mut offsets = Vec::with_capacity(c.num_morphisms());
    let mut acc = 0;
    for f in c.morphisms() {
        offsets.push(acc);
        acc += r.algebra(c.cod(f)).dim();
    }
    offsets
}

/// `R[C]` with basis `(f, r_i)`, `r_i` running over a basis of `R(cod f)`,
/// and product `(g, s) * (f, r) = (g∘f, s·R(g)(r))`, zero when `g` and `f`
/// do not compose.
pub fn skew_category_algebra(r: &Precosheaf) -> GradedAlgebra {
    let c = r.category().clone();
    let field = r.field();
    let offsets = skew_offsets(r);
    let mut labels = Vec::new();
    let mut degree = Vec::new();
    let mut index = Vec::new();
    for f in c.morphisms() {
        let a = r.algebra(c.cod(f));
        for i in 0..a.dim() {
            labels.push(format!("({}, {})", c.morphism_name(f), a.label(i)));
            degree.push(f);
            index.push(i);
        }
    }
    let dim = labels.len();
    let mut unit = vec![field.zero(); dim];
    for x in c.objects() {
        let start = offsets[c.identity(x).0];
        for (i, u) in r.algebra(x).unit().iter().enumerate() {
            unit[start + i] = u.clone();
        }
    }
    let alg = FinAlgebra::from_fn(field, labels, unit, |u, v| {
        let mut out = vec![field.zero(); dim];
        let (g, f) = (degree[u], degree[v]);
        if !c.composable(g, f) {
            return out;
        }
        let gf = c.comp(g, f).expect("composite of composable pair");
        let target = r.algebra(c.cod(g));
        let moved = r.hom(g).map.column(index[v]);
        let p = target.mul(&target.basis_vector(index[u]), &moved);
        for (k, coeff) in p.into_iter().enumerate() {
            out[offsets[gf.0] + k] = coeff;
        }
        out
    })
    .expect("skew category algebra");
    GradedAlgebra {
        algebra: Arc::new(alg),
        grading: c,
        degree,
    }
}

/// `⊗_x R(x)` in object order, first object most significant.
pub fn object_tensor_algebra(r: &Precosheaf) -> FinAlgebra {
    let mut algs = r.algebras().iter();
    let Some(first) = algs.next() else {
        return FinAlgebra::ground_field(r.field());
    };
    algs.fold((**first).clone(), |acc, a| tensor_product(&acc, a))
}

/// Splits an index of `⊗_x V_x` into per-factor indices.
fn mixed_radix(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

fn kron_all(field: Field, factors: &[Vec<Scalar>]) -> Vec<Scalar> {
    factors
        .iter()
        .fold(vec![field.one()], |acc, v| kron(&acc, v))
}

/// A linear map `B⊗A → A⊗B`; basis `b⊗a` has index `b·dim A + a` and
/// `a⊗b` has index `a·dim B + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingMap {
    pub alg_a: Arc<FinAlgebra>,
    pub alg_b: Arc<FinAlgebra>,
    pub map: LinearMap,
}

impl TwistingMap {
    /// `b ⊗ a ↦ a ⊗ b`.
    pub fn flip(alg_a: Arc<FinAlgebra>, alg_b: Arc<FinAlgebra>) -> Self {
        let field = alg_a.field();
        let (da, db) = (alg_a.dim(), alg_b.dim());
        let mut map = LinearMap::zeros(field, da * db, da * db);
        for b in 0..db {
            for a in 0..da {
                map.set(a * db + b, b * da + a, field.one());
            }
        }
        TwistingMap { alg_a, alg_b, map }
    }

    fn columns(&self) -> Vec<Sparse> {
        (0..self.map.cols())
            .map(|j| sparse(&self.map.column(j)))
            .collect()
    }
}

/// A basis of `a` that contains the unit and whose pairwise products are
/// again basis elements, so that `a` is the monoid algebra of that basis.
/// Recognises the declared basis when it already has this property and
/// replaces a complete set of orthogonal idempotents `e_1, …, e_n` by the
/// chain `e_1, e_1+e_2, …, e_1+…+e_n = 1`.
pub fn multiplicative_basis(a: &FinAlgebra) -> Option<Vec<Vec<Scalar>>> {
    let declared: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    if is_monoid_basis(a, &declared) {
        return Some(declared);
    }
    let field = a.field();
    let n = a.dim();
    let idempotents = (0..n).all(|i| {
        (0..n).all(|j| {
            let expected = if i == j {
                a.basis_vector(i)
            } else {
                vec![field.zero(); n]
            };
            a.basis_product(i, j) == &expected[..]
        })
    }) && a.unit().iter().all(Scalar::is_one);
    if idempotents {
        let chain: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| if i <= k { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        return Some(chain);
    }
    None
}

fn is_monoid_basis(a: &FinAlgebra, basis: &[Vec<Scalar>]) -> bool {
    basis.iter().any(|b| b == a.unit())
        && basis
            .iter()
            .all(|u| basis.iter().all(|v| basis.contains(&a.mul(u, v))))
}

/// The twist `τ(f ⊗ (⊗_x r_x)) = (⊗_t r'_t) ⊗ f` where `r'` agrees with `r`
/// except in the `cod f` slot, which becomes `R(f)(r_{dom f})`. Here `A` is
/// the object tensor algebra and `B` the category algebra.
///
/// The rule reads `r_{dom f}` twice and ignores `r_{cod f}`, so it is not
/// multilinear and only determines a linear map once a basis of each `R(x)`
/// is fixed. This uses [`multiplicative_basis`] where one is found and the
/// declared basis otherwise.
pub fn paper_twisting_map(r: &Precosheaf) -> TwistingMap {
    let bases: Vec<Vec<Vec<Scalar>>> = r
        .algebras()
        .iter()
        .map(|a| {
            multiplicative_basis(a)
                .unwrap_or_else(|| (0..a.dim()).map(|i| a.basis_vector(i)).collect())
        })
        .collect();
    paper_twisting_map_in_bases(r, &bases)
}

/// The twist of [`paper_twisting_map`] with the rule applied to tuples drawn
/// from the given bases (declared coordinates, one basis per object) and
/// extended linearly.
pub fn paper_twisting_map_in_bases(r: &Precosheaf, bases: &[Vec<Vec<Scalar>>]) -> TwistingMap {
    let c = r.category();
    let field = r.field();
    let alg_a = Arc::new(object_tensor_algebra(r));
    let alg_b = Arc::new(category_algebra(c, field));
    let dims: Vec<usize> = c.objects().map(|x| r.algebra(x).dim()).collect();
    // change of coordinates: declared basis vector i of R(x) in terms of bases[x]
    let to_chosen: Vec<LinearMap> = bases
        .iter()
        .zip(&dims)
        .map(|(b, &d)| {
            LinearMap::from_columns(field, d, b)
                .inverse()
                .expect("chosen vectors form a basis")
        })
        .collect();
    let (da, db) = (alg_a.dim(), alg_b.dim());
    let mut map = LinearMap::zeros(field, da * db, da * db);
    for f in c.morphisms() {
        let (d, cd) = (c.dom(f).0, c.cod(f).0);
        // image of each chosen basis tuple, in declared coordinates of A
        let mut chosen_image = Vec::with_capacity(da);
        for m in 0..da {
            let t = mixed_radix(m, &dims);
            let slots: Vec<Vec<Scalar>> = (0..dims.len())
                .map(|x| {
                    if x == cd {
                        r.hom(f).map.apply(&bases[d][t[d]])
                    } else {
                        bases[x][t[x]].clone()
                    }
                })
                .collect();
            chosen_image.push(kron_all(field, &slots));
        }
        for a in 0..da {
            let t = mixed_radix(a, &dims);
            let coords: Vec<Vec<Scalar>> =
                (0..dims.len()).map(|x| to_chosen[x].column(t[x])).collect();
            let coords = kron_all(field, &coords);
            let mut image = vec![field.zero(); da];
            for (m, cm) in coords.iter().enumerate() {
                if cm.is_zero() {
                    continue;
                }
                for (i, v) in chosen_image[m].iter().enumerate() {
                    if !v.is_zero() {
                        image[i] = &image[i] + &(cm * v);
                    }
                }
            }
            for (a2, coeff) in image.into_iter().enumerate() {
                if !coeff.is_zero() {
                    map.set(a2 * db + f.0, f.0 * da + a, coeff);
                }
            }
        }
    }
    TwistingMap { alg_a, alg_b, map }
}

/// Accumulates `coeff · (x ⊗ y)` into a vector on `X⊗Y` with `dim Y = dy`.
fn add_kron(out: &mut [Scalar], coeff: &Scalar, x: &[Scalar], y: &[Scalar], dy: usize) {
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let cx = coeff * xi;
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out[i * dy + j] = &out[i * dy + j] + &(&cx * yj);
            }
        }
    }
}

/// Checks `τ(b⊗1) = 1⊗b`, `τ(1⊗a) = a⊗1` and
/// `τ∘(μ_B⊗μ_A) = (μ_A⊗μ_B)∘(id⊗τ⊗id)∘(τ⊗τ)∘(id⊗τ⊗id)` on every basis
/// tuple `b1⊗b2⊗a1⊗a2`. Bilinearity extends the checks to all elements.
pub fn validate_twisting(t: &TwistingMap) -> ValidationReport {
    let (a, b) = (&*t.alg_a, &*t.alg_b);
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let mut report = ValidationReport::new();
    if t.map.rows() != n || t.map.cols() != n {
        report.push("twist shape", format!("{}×{}", t.map.rows(), t.map.cols()));
        return report;
    }
    let label = |v: &[Scalar]| {
        let labels: Vec<String> = (0..n)
            .map(|k| format!("{}⊗{}", a.label(k / db), b.label(k % db)))
            .collect();
        crate::algstruct::format_combination(&labels, v)
    };
    for j in 0..db {
        let lhs = t.map.apply(&kron(&b.basis_vector(j), a.unit()));
        if lhs != kron(a.unit(), &b.basis_vector(j)) {
            report.push(
                "twist unit in A",
                format!("τ({}⊗1) = {}", b.label(j), label(&lhs)),
            );
        }
    }
    for i in 0..da {
        let lhs = t.map.apply(&kron(b.unit(), &a.basis_vector(i)));
        if lhs != kron(&a.basis_vector(i), b.unit()) {
            report.push(
                "twist unit in B",
                format!("τ(1⊗{}) = {}", a.label(i), label(&lhs)),
            );
        }
    }
    let cols = t.columns();
    let a_prod: Vec<Sparse> = (0..da * da)
        .map(|k| sparse(a.basis_product(k / da, k % da)))
        .collect();
    let b_prod: Vec<Sparse> = (0..db * db)
        .map(|k| sparse(b.basis_product(k / db, k % db)))
        .collect();
    let apply_tau = |v: &[Scalar]| {
        let mut out = vec![field.zero(); n];
        for (k, ck) in v.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (i, c) in &cols[k] {
                out[*i] = &out[*i] + &(ck * c);
            }
        }
        out
    };
    for b1 in 0..db {
        for b2 in 0..db {
            for a1 in 0..da {
                for a2 in 0..da {
                    let lhs = apply_tau(&kron(b.basis_product(b1, b2), a.basis_product(a1, a2)));
                    let mut rhs = vec![field.zero(); n];
                    // b1 ⊗ τ(b2⊗a1) ⊗ a2
                    for (k1, c1) in &cols[b2 * da + a1] {
                        let (x1, y1) = (k1 / db, k1 % db);
                        // τ(b1⊗x1) ⊗ τ(y1⊗a2)
                        for (k2, c2) in &cols[b1 * da + x1] {
                            let (x2, y2) = (k2 / db, k2 % db);
                            for (k3, c3) in &cols[y1 * da + a2] {
                                let (x3, y3) = (k3 / db, k3 % db);
                                // x2 ⊗ τ(y2⊗x3) ⊗ y3
                                for (k4, c4) in &cols[y2 * da + x3] {
                                    let (x4, y4) = (k4 / db, k4 % db);
                                    let coeff = &(&(c1 * c2) * c3) * c4;
                                    let mut av = vec![field.zero(); da];
                                    for (i, c) in &a_prod[x2 * da + x4] {
                                        av[*i] = c.clone();
                                    }
                                    let mut bv = vec![field.zero(); db];
                                    for (i, c) in &b_prod[y4 * db + y3] {
                                        bv[*i] = c.clone();
                                    }
                                    add_kron(&mut rhs, &coeff, &av, &bv, db);
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        report.push(
                            "hexagon",
                            format!(
                                "on {}⊗{}⊗{}⊗{}: left {} but right {}",
                                b.label(b1),
                                b.label(b2),
                                a.label(a1),
                                a.label(a2),
                                label(&lhs),
                                label(&rhs)
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// `A⊗B` with `μ_τ = (μ_A⊗μ_B)∘(id⊗τ⊗id)`, without checking the twist.
fn twisted_product(t: &TwistingMap) -> FinAlgebra {
    let (a, b) = (&*t.alg_a, &*t.alg_b);
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let cols = t.columns();
    let labels = (0..n)
        .map(|k| format!("{}⊗{}", a.label(k / db), b.label(k % db)))
        .collect();
    let unit = kron(a.unit(), b.unit());
    FinAlgebra::from_fn(field, labels, unit, |u, v| {
        let (a1, b1) = (u / db, u % db);
        let (a2, b2) = (v / db, v % db);
        let mut out = vec![field.zero(); n];
        for (k, c) in &cols[b1 * da + a2] {
            let (x, y) = (k / db, k % db);
            add_kron(
                &mut out,
                c,
                a.basis_product(a1, x),
                b.basis_product(y, b2),
                db,
            );
        }
        out
    })
    .expect("twisted tensor product")
}

/// The twisted tensor product algebra; refuses a twist that fails its axioms.
pub fn twisted_tensor_product(t: &TwistingMap) -> Result<FinAlgebra, ConstructionError> {
    let report = validate_twisting(t);
    if !report.is_ok() {
        return Err(ConstructionError::InvalidTwist(report));
    }
    Ok(twisted_product(t))
}

/// The embedding `Ψ: R[C] → A⊗_τ kC` and its left inverse `Φ`.
#[derive(Clone, Debug)]
pub struct PsiEmbedding {
    pub skew: GradedAlgebra,
    pub twist: TwistingMap,
    /// `A⊗kC` with the product induced by the twist, built even when the
    /// twist is invalid so that the embedding can still be examined.
    pub twisted: Arc<FinAlgebra>,
    pub psi: LinearMap,
    pub phi: LinearMap,
}

/// The functional on an algebra that takes the value 1 on its unit: the
/// dual of the first basis vector with a nonzero unit coordinate, scaled.
fn unit_functional(a: &FinAlgebra) -> Vec<Scalar> {
    let field = a.field();
    let mut out = vec![field.zero(); a.dim()];
    if let Some((j, u)) = a.unit().iter().enumerate().find(|(_, u)| !u.is_zero()) {
        out[j] = u.inverse().expect("nonzero");
    }
    out
}

/// `Ψ(r f) = (⊗_x r_x) ⊗ f` with `r` in the `cod f` slot and units in the
/// others. `Φ((⊗_x r_x) ⊗ f) = Π_{x ≠ cod f} λ_x(r_x) · r_{cod f} f` where
/// `λ_x` is a fixed functional with `λ_x(1) = 1`, so that `Φ∘Ψ = id`.
pub fn psi_embedding(r: &Precosheaf) -> PsiEmbedding {
    let c = r.category();
    let field = r.field();
    let skew = skew_category_algebra(r);
    let twist = paper_twisting_map(r);
    let twisted = Arc::new(twisted_product(&twist));
    let dims: Vec<usize> = c.objects().map(|x| r.algebra(x).dim()).collect();
    let offsets = skew_offsets(r);
    let nm = c.num_morphisms();
    let (ds, dt) = (skew.algebra.dim(), twisted.dim());
    let mut psi = LinearMap::zeros(field, dt, ds);
    for f in c.morphisms() {
        let cd = c.cod(f).0;
        for i in 0..dims[cd] {
            let slots: Vec<Vec<Scalar>> = c
                .objects()
                .map(|x| {
                    if x.0 == cd {
                        unit_vector(field, dims[cd], i)
                    } else {
                        r.algebra(x).unit().to_vec()
                    }
                })
                .collect();
            let a = kron_all(field, &slots);
            for (ai, coeff) in a.into_iter().enumerate() {
                if !coeff.is_zero() {
                    psi.set(ai * nm + f.0, offsets[f.0] + i, coeff);
                }
            }
        }
    }
    let lambdas: Vec<Vec<Scalar>> = c.objects().map(|x| unit_functional(r.algebra(x))).collect();
    let da = twist.alg_a.dim();
    let mut phi = LinearMap::zeros(field, ds, dt);
    for ai in 0..da {
        let t = mixed_radix(ai, &dims);
        for f in c.morphisms() {
            let cd = c.cod(f).0;
            let mut coeff = field.one();
            for x in 0..dims.len() {
                if x != cd {
                    coeff = &coeff * &lambdas[x][t[x]];
                }
            }
            if !coeff.is_zero() {
                phi.set(offsets[f.0] + t[cd], ai * nm + f.0, coeff);
            }
        }
    }
    PsiEmbedding {
        skew,
        twist,
        twisted,
        psi,
        phi,
    }
}

/// Outcome of checking the embedding of a skew category algebra.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub twisting: ValidationReport,
    pub twisted_algebra: ValidationReport,
    /// `validate_hom` applied to `Ψ`.
    pub psi_hom: ValidationReport,
    pub phi_psi_identity: bool,
    /// `Φ` sends `(⊗r)⊗f` into the `f`-component of `R[C]`.
    pub phi_graded: bool,
    pub dim_skew: usize,
    pub dim_twisted: usize,
    pub rank_psi: usize,
    pub injective: bool,
    pub surjective: bool,
    pub one_object: bool,
}

impl EmbeddingReport {
    pub fn passes(&self) -> bool {
        self.twisting.is_ok()
            && self.twisted_algebra.is_ok()
            && self.psi_hom.is_ok()
            && self.phi_psi_identity
            && self.phi_graded
            && self.injective
            && (!self.one_object || self.surjective)
    }
}

pub fn check_embedding(r: &Precosheaf) -> EmbeddingReport {
    let e = psi_embedding(r);
    let c = r.category();
    let field = r.field();
    let twisting = validate_twisting(&e.twist);
    let twisted_algebra = validate_algebra(&e.twisted);
    let hom = AlgebraHom::new(e.skew.algebra.clone(), e.twisted.clone(), e.psi.clone())
        .expect("psi shape");
    let psi_hom = validate_hom(&hom);
    let dim_skew = e.skew.algebra.dim();
    let phi_psi_identity = e
        .phi
        .compose(&e.psi)
        .is_ok_and(|m| m == LinearMap::identity(field, dim_skew));
    let nm = c.num_morphisms();
    let phi_graded = (0..e.phi.cols()).all(|col| {
        let f = MorId(col % nm);
        e.phi
            .column(col)
            .iter()
            .enumerate()
            .all(|(row, v)| v.is_zero() || e.skew.degree[row] == f)
    });
    let rank_psi = e.psi.rank();
    EmbeddingReport {
        twisting,
        twisted_algebra,
        psi_hom,
        phi_psi_identity,
        phi_graded,
        dim_skew,
        dim_twisted: e.twisted.dim(),
        rank_psi,
        injective: rank_psi == dim_skew,
        surjective: rank_psi == e.twisted.dim(),
        one_object: c.num_objects() == 1,
    }
}

/// Result of testing `Δ(f) = f⊗f` as a bialgebra comultiplication on `kC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBialgebraReport {
    pub delta_multiplicative: bool,
    pub unit_axiom_holds: bool,
    pub witnesses: Vec<String>,
}

pub fn check_weak_bialgebra_unit_failure(c: &FinCategory, field: Field) -> WeakBialgebraReport {
    let kc = category_algebra(c, field);
    let kk = tensor_product(&kc, &kc);
    let n = kc.dim();
    let delta = |v: &[Scalar]| {
        let mut out = vec![field.zero(); n * n];
        for (i, ci) in v.iter().enumerate() {
            out[i * n + i] = ci.clone();
        }
        out
    };
    let mut witnesses = Vec::new();
    let mut delta_multiplicative = true;
    for g in 0..n {
        for f in 0..n {
            let lhs = delta(kc.basis_product(g, f));
            let rhs = kk.mul(&delta(&kc.basis_vector(g)), &delta(&kc.basis_vector(f)));
            if lhs != rhs {
                delta_multiplicative = false;
                witnesses.push(format!(
                    "Δ({}·{}) ≠ Δ({})Δ({})",
                    kc.label(g),
                    kc.label(f),
                    kc.label(g),
                    kc.label(f)
                ));
            }
        }
    }
    let lhs = delta(kc.unit());
    let rhs = kk.unit().to_vec();
    let unit_axiom_holds = lhs == rhs;
    if !unit_axiom_holds {
        witnesses.push(format!(
            "Δ(1) = {} but 1⊗1 = {}",
            kk.format_element(&lhs),
            kk.format_element(&rhs)
        ));
    }
    WeakBialgebraReport {
        delta_multiplicative,
        unit_axiom_holds,
        witnesses,
    }
}

/// Index of the basis element `(f, r_i)` of a skew category algebra.
pub fn skew_index(r: &Precosheaf, f: MorId, i: usize) -> usize {
    skew_offsets(r)[f.0] + i
}

/// Basis element `(⊗_x e_{t_x}) ⊗ f` of `A⊗kC` from per-object indices.
pub fn twisted_index(r: &Precosheaf, tuple: &[usize], f: MorId) -> usize {
    let c = r.category();
    let mut a = 0;
    for x in c.objects() {
        a = a * r.algebra(x).dim() + tuple[x.0];
    }
    a * c.num_morphisms() + f.0
}
