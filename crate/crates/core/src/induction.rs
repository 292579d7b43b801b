//! Induction along a functor `s: D → C` that is injective on objects and
//! surjective on morphisms: the subalgebras `M_S(x)`, Turull induction of a
//! precosheaf, the monoid `𝒮 ⊂ kD`, Puig induction of an interior
//! `kD`-algebra, and the comparison isomorphism between the two.

use std::sync::Arc;

use thiserror::Error;

use crate::algstruct::{
    validate_algebra, validate_hom, validate_module, validate_precosheaf, AlgError, AlgebraHom,
    CatModule, FinAlgebra, GradedAlgebra, InteriorAlgebra, Precosheaf,
};
use crate::constructions::{category_algebra, skew_category_algebra, skew_offsets};
use crate::fincat::{
    check_condition_423, id_class, sim_partition, validate_functor, Cond423Report, FinCategory,
    FincatError, Functor, MorId, MorPartition, ObjId,
};
use crate::linalg::{
    quotient_map, simultaneous_fixed_space, Field, LinalgError, LinearMap, QuotientMap, Scalar,
    Subspace,
};
use crate::report::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InductionError {
    #[error("functor is not valid:\n{0}")]
    InvalidFunctor(ValidationReport),
    #[error("precosheaf lives on {found}, functor starts at {expected}")]
    CategoryMismatch { expected: String, found: String },
    #[error("fiber condition fails: {0}")]
    ConditionFails(String),
    #[error("{axiom} fails: {witness}")]
    Assertion {
        axiom: &'static str,
        witness: String,
    },
    #[error(transparent)]
    Fincat(#[from] FincatError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn assertion(axiom: &'static str, witness: impl Into<String>) -> InductionError {
    InductionError::Assertion {
        axiom,
        witness: witness.into(),
    }
}

/// Functor, precosheaf on its source, and the derived fiber data.
#[derive(Clone, Debug)]
pub struct InductionContext {
    pub functor: Functor,
    pub precosheaf: Precosheaf,
    pub partition: MorPartition,
    pub id_classes: Vec<Vec<MorId>>,
    pub condition_423: Cond423Report,
}

impl InductionContext {
    pub fn new(functor: Functor, precosheaf: Precosheaf) -> Result<Self, InductionError> {
        let report = validate_functor(&functor);
        if !report.is_ok() {
            return Err(InductionError::InvalidFunctor(report));
        }
        if **precosheaf.category() != **functor.source() {
            return Err(InductionError::CategoryMismatch {
                expected: functor.source().name().to_string(),
                found: precosheaf.category().name().to_string(),
            });
        }
        let d = functor.source().clone();
        let id_classes = d
            .objects()
            .map(|x| id_class(&functor, x))
            .collect::<Result<Vec<_>, _>>()?;
        let partition = sim_partition(&functor)?;
        let condition_423 = check_condition_423(&functor)?;
        Ok(InductionContext {
            functor,
            precosheaf,
            partition,
            id_classes,
            condition_423,
        })
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        self.functor.source()
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        self.functor.target()
    }

    pub fn field(&self) -> Field {
        self.precosheaf.field()
    }

    /// The unique source object over `x'`.
    pub fn preimage_object(&self, x: ObjId) -> ObjId {
        self.functor
            .object_preimage(x)
            .expect("bijective on objects")
    }

    fn require_condition(&self) -> Result<(), InductionError> {
        if self.condition_423.holds {
            return Ok(());
        }
        let w: Vec<String> = self
            .condition_423
            .witnesses
            .iter()
            .map(|w| w.to_string())
            .collect();
        Err(InductionError::ConditionFails(w.join("; ")))
    }
}

/// `M_S(x)` as the kernel of all differences `S(f) − S(g)` with
/// `dom f = x` and `g` in the fiber of `f`.
pub fn ms_kernel(ctx: &InductionContext, x: ObjId) -> Subspace {
    let d = ctx.source();
    let s = &ctx.precosheaf;
    let field = ctx.field();
    let n = s.algebra(x).dim();
    let mut blocks = Vec::new();
    for f in d.morphisms().filter(|&f| d.dom(f) == x) {
        for &g in ctx.partition.class(f) {
            if g != f {
                blocks.push(s.hom(f).map.sub(&s.hom(g).map).expect("parallel maps"));
            }
        }
    }
    if blocks.is_empty() {
        return Subspace::full(field, n);
    }
    LinearMap::vstack(field, n, &blocks)
        .expect("stacked differences")
        .kernel()
}

/// `M_S(x)` as the common fixed points of `S(f)` for `f ∈ Id_x`.
pub fn ms_fixed(ctx: &InductionContext, x: ObjId) -> Subspace {
    let s = &ctx.precosheaf;
    let maps: Vec<LinearMap> = ctx.id_classes[x.0]
        .iter()
        .map(|&f| s.hom(f).map.clone())
        .collect();
    simultaneous_fixed_space(ctx.field(), &maps, s.algebra(x).dim()).expect("square maps")
}

/// `M_S(x)`; when the fiber condition holds the kernel and fixed-point
/// descriptions are both computed and must agree.
pub fn ms_subspace(ctx: &InductionContext, x: ObjId) -> Result<Subspace, InductionError> {
    let k = ms_kernel(ctx, x);
    if ctx.condition_423.holds {
        let f = ms_fixed(ctx, x);
        if f != k {
            return Err(assertion(
                "kernel and fixed-point descriptions agree",
                format!(
                    "at {}: dims {} and {}",
                    ctx.source().object_name(x),
                    k.dim(),
                    f.dim()
                ),
            ));
        }
    }
    Ok(k)
}

pub fn ms_algebra(ctx: &InductionContext, x: ObjId) -> Result<FinAlgebra, InductionError> {
    let sub = ms_subspace(ctx, x)?;
    Ok(ctx.precosheaf.algebra(x).subalgebra(&sub)?)
}

/// Matrix of `S(f)` restricted to `M_S(dom f) → M_S(cod f)` in echelon
/// bases, or the first basis vector that leaves the target.
fn restricted(
    ctx: &InductionContext,
    f: MorId,
    spaces: &[Subspace],
) -> Result<LinearMap, InductionError> {
    let d = ctx.source();
    let (src, dst) = (&spaces[d.dom(f).0], &spaces[d.cod(f).0]);
    let h = &ctx.precosheaf.hom(f).map;
    let cols = src
        .basis()
        .iter()
        .map(|b| {
            dst.coordinates(&h.apply(b)).ok_or_else(|| {
                assertion(
                    "restriction lands in M_S",
                    format!("S({}) moves a vector out of M_S", d.morphism_name(f)),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::from_columns(ctx.field(), dst.dim(), &cols))
}

/// The restriction of `S(f)` for every preimage `f` of `g`, checked to
/// agree.
fn induced_map(
    ctx: &InductionContext,
    g: MorId,
    spaces: &[Subspace],
) -> Result<LinearMap, InductionError> {
    let pre = ctx.functor.preimages(g);
    let first = restricted(ctx, pre[0], spaces)?;
    for &f in &pre[1..] {
        if restricted(ctx, f, spaces)? != first {
            return Err(assertion(
                "preimages act alike",
                format!(
                    "{} and {} differ on M_S",
                    ctx.source().morphism_name(pre[0]),
                    ctx.source().morphism_name(f)
                ),
            ));
        }
    }
    Ok(first)
}

fn all_ms(ctx: &InductionContext) -> Result<Vec<Subspace>, InductionError> {
    ctx.source()
        .objects()
        .map(|x| ms_subspace(ctx, x))
        .collect()
}

/// `⊕_x M_S(x)` as a module over `kC`, blocks in target object order.
pub fn mbar_module(ctx: &InductionContext) -> Result<CatModule, InductionError> {
    let c = ctx.target().clone();
    let spaces = all_ms(ctx)?;
    let field = ctx.field();
    let dims: Vec<usize> = c
        .objects()
        .map(|x| spaces[ctx.preimage_object(x).0].dim())
        .collect();
    let offsets = crate::algstruct::block_offsets(&dims);
    let dim = dims.iter().sum();
    let mut action = Vec::with_capacity(c.num_morphisms());
    for g in c.morphisms() {
        let m = induced_map(ctx, g, &spaces)?;
        let mut a = LinearMap::zeros(field, dim, dim);
        let (src, dst) = (offsets[c.dom(g).0], offsets[c.cod(g).0]);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                a.set(dst + i, src + j, m.get(i, j).clone());
            }
        }
        action.push(a);
    }
    let module = CatModule {
        category: c,
        field,
        dim,
        action,
    };
    let report = validate_module(&module);
    if !report.is_ok() {
        return Err(assertion("module axioms", report.to_string()));
    }
    Ok(module)
}

/// The induced precosheaf on the target category together with the
/// subspaces it was built from (indexed by target objects).
#[derive(Clone, Debug)]
pub struct TurullInduced {
    pub subspaces: Vec<Subspace>,
    pub precosheaf: Precosheaf,
    pub report: ValidationReport,
}

pub fn turull_induce(ctx: &InductionContext) -> Result<TurullInduced, InductionError> {
    let c = ctx.target().clone();
    let d_spaces = all_ms(ctx)?;
    let mut subspaces = Vec::new();
    let mut algebras = Vec::new();
    for x in c.objects() {
        let px = ctx.preimage_object(x);
        let sub = d_spaces[px.0].clone();
        algebras.push(Arc::new(ctx.precosheaf.algebra(px).subalgebra(&sub)?));
        subspaces.push(sub);
    }
    let mut homs = Vec::new();
    for g in c.morphisms() {
        let m = induced_map(ctx, g, &d_spaces)?;
        homs.push(AlgebraHom::new(
            algebras[c.dom(g).0].clone(),
            algebras[c.cod(g).0].clone(),
            m,
        )?);
    }
    let name = format!("IndT({})", ctx.precosheaf.name());
    let precosheaf = Precosheaf::new(name, c, algebras, homs)?;
    let report = validate_precosheaf(&precosheaf);
    Ok(TurullInduced {
        subspaces,
        precosheaf,
        report,
    })
}

/// The monoid of sums `Σ_x f_x` with `f_x ∈ Id_x`.
#[derive(Clone, Debug)]
pub struct SMonoid {
    /// For each element, the chosen `f_x` per source object.
    pub choices: Vec<Vec<MorId>>,
    /// Coordinates in `kD`.
    pub vectors: Vec<Vec<Scalar>>,
    pub labels: Vec<String>,
    /// `table[i * n + j]` is the index of `s_i · s_j`.
    pub table: Vec<usize>,
    pub neutral: usize,
}

impl SMonoid {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i * self.len() + j]
    }

    /// The augmentation, `ε(s) = 1` on every element.
    pub fn augmentation(&self, _i: usize, field: Field) -> Scalar {
        field.one()
    }

    pub fn index_of(&self, v: &[Scalar]) -> Option<usize> {
        self.vectors.iter().position(|w| w == v)
    }
}

pub fn s_monoid(ctx: &InductionContext) -> Result<SMonoid, InductionError> {
    let d = ctx.source();
    let field = ctx.field();
    let kd = category_algebra(d, field);
    let mut choices: Vec<Vec<MorId>> = vec![Vec::new()];
    for class in &ctx.id_classes {
        choices = choices
            .into_iter()
            .flat_map(|prefix| {
                class.iter().map(move |&f| {
                    let mut p = prefix.clone();
                    p.push(f);
                    p
                })
            })
            .collect();
    }
    let vectors: Vec<Vec<Scalar>> = choices
        .iter()
        .map(|ch| {
            let mut v = vec![field.zero(); kd.dim()];
            for f in ch {
                v[f.0] = &v[f.0] + &field.one();
            }
            v
        })
        .collect();
    let labels = choices
        .iter()
        .map(|ch| {
            ch.iter()
                .map(|&f| d.morphism_name(f))
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    let n = vectors.len();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let p = kd.mul(&vectors[i], &vectors[j]);
            let k = vectors.iter().position(|w| *w == p).ok_or_else(|| {
                assertion(
                    "monoid closed under products",
                    format!("product of elements {i} and {j} leaves the monoid"),
                )
            })?;
            table.push(k);
        }
    }
    let identities: Vec<MorId> = d.objects().map(|x| d.identity(x)).collect();
    let neutral = choices
        .iter()
        .position(|ch| *ch == identities)
        .ok_or_else(|| assertion("neutral element", "Σ 1_x missing"))?;
    for i in 0..n {
        if table[neutral * n + i] != i || table[i * n + neutral] != i {
            return Err(assertion(
                "neutral element",
                format!("fails at element {i}"),
            ));
        }
    }
    Ok(SMonoid {
        choices,
        vectors,
        labels,
        table,
        neutral,
    })
}

/// For one `(f, s)` pair, the elements `s'` with `s·f = f·s'` and `s''`
/// with `f·s = s''·f` found by search, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationWitness {
    pub morphism: String,
    pub element: String,
    pub right: Option<String>,
    pub left: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Lemma42Report {
    pub witnesses: Vec<CommutationWitness>,
    pub commutation_holds: bool,
    /// Per source object: kernel and fixed-point descriptions of `M_S(x)` agree.
    pub ms_agree: Vec<bool>,
}

impl Lemma42Report {
    pub fn holds(&self) -> bool {
        self.commutation_holds && self.ms_agree.iter().all(|&b| b)
    }
}

/// Exhaustive search for the commutation elements, and the comparison of
/// the two descriptions of `M_S(x)`.
pub fn verify_lemma42(ctx: &InductionContext) -> Result<Lemma42Report, InductionError> {
    let d = ctx.source();
    let field = ctx.field();
    let kd = category_algebra(d, field);
    let monoid = s_monoid(ctx)?;
    let mut witnesses = Vec::new();
    for f in d.morphisms() {
        let fv = kd.basis_vector(f.0);
        for (i, s) in monoid.vectors.iter().enumerate() {
            let sf = kd.mul(s, &fv);
            let fs = kd.mul(&fv, s);
            let right = monoid
                .vectors
                .iter()
                .position(|t| kd.mul(&fv, t) == sf)
                .map(|j| monoid.labels[j].clone());
            let left = monoid
                .vectors
                .iter()
                .position(|t| kd.mul(t, &fv) == fs)
                .map(|j| monoid.labels[j].clone());
            witnesses.push(CommutationWitness {
                morphism: d.morphism_name(f).to_string(),
                element: monoid.labels[i].clone(),
                right,
                left,
            });
        }
    }
    let commutation_holds = witnesses
        .iter()
        .all(|w| w.right.is_some() && w.left.is_some());
    let ms_agree = d
        .objects()
        .map(|x| ms_kernel(ctx, x) == ms_fixed(ctx, x))
        .collect();
    Ok(Lemma42Report {
        witnesses,
        commutation_holds,
        ms_agree,
    })
}

/// `S[D]` as an interior `kD`-algebra through `σ(f) = (f, 1_{S(cod f)})`.
pub fn skew_as_interior(s: &Precosheaf) -> InteriorAlgebra {
    skew_interior_graded(s).0
}

/// [`skew_as_interior`] together with the grading of `S[D]`.
pub fn skew_interior_graded(s: &Precosheaf) -> (InteriorAlgebra, GradedAlgebra) {
    let d = s.category();
    let field = s.field();
    let graded = skew_category_algebra(s);
    let base = Arc::new(category_algebra(d, field));
    let offsets = skew_offsets(s);
    let mut map = LinearMap::zeros(field, graded.algebra.dim(), base.dim());
    for f in d.morphisms() {
        for (i, u) in s.algebra(d.cod(f)).unit().iter().enumerate() {
            map.set(offsets[f.0] + i, f.0, u.clone());
        }
    }
    let structural =
        AlgebraHom::new(base.clone(), graded.algebra.clone(), map).expect("structural map shape");
    (
        InteriorAlgebra {
            algebra: graded.algebra.clone(),
            base,
            structural,
        },
        graded,
    )
}

/// Whether the structural map sends the line of each morphism `f` of the
/// base category algebra into the `f`-component.
pub fn structural_respects_grading(ia: &InteriorAlgebra, g: &GradedAlgebra) -> bool {
    (0..ia.base.dim()).all(|f| {
        ia.structural
            .map
            .column(f)
            .iter()
            .enumerate()
            .all(|(k, v)| v.is_zero() || g.degree[k] == MorId(f))
    })
}

fn right_mul(a: &FinAlgebra, w: &[Scalar]) -> LinearMap {
    let cols: Vec<Vec<Scalar>> = (0..a.dim()).map(|j| a.mul(&a.basis_vector(j), w)).collect();
    LinearMap::from_columns(a.field(), a.dim(), &cols)
}

/// `(k ⊗_{k𝒮} C)^𝒮` with its algebra structure and structural map from `kC`.
#[derive(Clone, Debug)]
pub struct PuigInduced {
    pub source: InteriorAlgebra,
    pub monoid: SMonoid,
    /// `N = span{σ(s)c − c}` inside `C`.
    pub relations: Subspace,
    pub quotient: QuotientMap,
    /// Right action of each monoid element on the quotient.
    pub right_actions: Vec<LinearMap>,
    /// Fixed points inside the quotient, in quotient coordinates.
    pub fixed: Subspace,
    pub algebra: Arc<FinAlgebra>,
    pub tau_bar: AlgebraHom,
    pub algebra_report: ValidationReport,
    pub tau_bar_report: ValidationReport,
}

impl PuigInduced {
    /// Coordinates in the induced algebra of the class of `c ∈ C`, if that
    /// class is fixed.
    pub fn class_coordinates(&self, c: &[Scalar]) -> Option<Vec<Scalar>> {
        self.fixed.coordinates(&self.quotient.proj.apply(c))
    }
}

pub fn puig_induce(
    ctx: &InductionContext,
    ia: &InteriorAlgebra,
) -> Result<PuigInduced, InductionError> {
    ctx.require_condition()?;
    let field = ctx.field();
    let c_alg = &*ia.algebra;
    let n = c_alg.dim();
    let monoid = s_monoid(ctx)?;
    let sigma_s: Vec<Vec<Scalar>> = monoid
        .vectors
        .iter()
        .map(|v| ia.structural.apply(v))
        .collect();

    let mut gens = Vec::new();
    for ss in &sigma_s {
        for j in 0..n {
            let b = c_alg.basis_vector(j);
            let left = c_alg.mul(ss, &b);
            gens.push(left.iter().zip(&b).map(|(x, y)| x - y).collect());
        }
    }
    let relations = Subspace::span(field, n, gens);

    for (i, ss) in sigma_s.iter().enumerate() {
        for v in relations.basis() {
            if !relations.contains(&c_alg.mul(v, ss)) {
                return Err(assertion(
                    "right action preserves relations",
                    format!("({})·σ({})", c_alg.format_element(v), monoid.labels[i]),
                ));
            }
        }
    }

    let quotient = quotient_map(n, &relations)?;
    let q = quotient.dim();
    let right_actions: Vec<LinearMap> = sigma_s
        .iter()
        .map(|ss| {
            quotient
                .proj
                .compose(&right_mul(c_alg, ss))
                .and_then(|m| m.compose(&quotient.section))
        })
        .collect::<Result<_, _>>()?;
    let fixed = simultaneous_fixed_space(field, &right_actions, q)?;

    let reps: Vec<Vec<Scalar>> = fixed
        .basis()
        .iter()
        .map(|v| quotient.section.apply(v))
        .collect();
    for (u, rep) in fixed.basis().iter().zip(&reps) {
        for r in relations.basis() {
            if !relations.contains(&c_alg.mul(rep, r)) || !relations.contains(&c_alg.mul(r, rep)) {
                return Err(assertion(
                    "product independent of representatives",
                    format!("class {:?} against relation {}", u, c_alg.format_element(r)),
                ));
            }
        }
    }
    let mut table = Vec::with_capacity(reps.len() * reps.len());
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            let p = quotient.proj.apply(&c_alg.mul(a, b));
            table.push(fixed.coordinates(&p).ok_or_else(|| {
                assertion(
                    "fixed classes closed under products",
                    format!("product of basis classes {i} and {j}"),
                )
            })?);
        }
    }
    let unit = fixed
        .coordinates(&quotient.proj.apply(c_alg.unit()))
        .ok_or_else(|| assertion("unit class is fixed", "[1_C]"))?;
    let labels = reps
        .iter()
        .map(|r| format!("[{}]", c_alg.format_element(r)))
        .collect();
    let algebra = Arc::new(FinAlgebra::new(field, labels, table, unit)?);
    let algebra_report = validate_algebra(&algebra);

    let c_cat = ctx.target();
    let kc = Arc::new(category_algebra(c_cat, field));
    let mut cols = Vec::new();
    for g in c_cat.morphisms() {
        let pre = ctx.functor.preimages(g);
        let classes: Vec<Vec<Scalar>> = pre
            .iter()
            .map(|&f| quotient.proj.apply(&ia.structural.map.column(f.0)))
            .collect();
        if let Some(k) = classes.iter().position(|v| *v != classes[0]) {
            return Err(assertion(
                "structural map independent of preimage",
                format!(
                    "[σ({})] ≠ [σ({})]",
                    ctx.source().morphism_name(pre[0]),
                    ctx.source().morphism_name(pre[k])
                ),
            ));
        }
        cols.push(fixed.coordinates(&classes[0]).ok_or_else(|| {
            assertion(
                "structural image is fixed",
                format!("[σ({})]", ctx.source().morphism_name(pre[0])),
            )
        })?);
    }
    let tau_bar = AlgebraHom::new(
        kc,
        algebra.clone(),
        LinearMap::from_columns(field, algebra.dim(), &cols),
    )?;
    let tau_bar_report = validate_hom(&tau_bar);
    Ok(PuigInduced {
        source: ia.clone(),
        monoid,
        relations,
        quotient,
        right_actions,
        fixed,
        algebra,
        tau_bar,
        algebra_report,
        tau_bar_report,
    })
}

/// Outcome of comparing `IndT(S)[C]` with `IndP(S[D])`.
#[derive(Clone, Debug)]
pub struct Thm13Report {
    pub psi: LinearMap,
    pub dim_turull_skew: usize,
    pub dim_puig: usize,
    /// `Σ_{f'} dim M_S(cod f')`.
    pub expected_dim: usize,
    pub is_unital: bool,
    pub is_multiplicative: bool,
    pub is_bijective: bool,
    pub is_graded: bool,
    pub is_interior_compatible: bool,
    pub violations: ValidationReport,
}

impl Thm13Report {
    pub fn is_algebra_iso(&self) -> bool {
        self.is_unital && self.is_multiplicative && self.is_bijective
    }

    pub fn passes(&self) -> bool {
        self.is_algebra_iso()
            && self.is_graded
            && self.is_interior_compatible
            && self.dim_puig == self.expected_dim
            && self.dim_turull_skew == self.expected_dim
    }
}

/// Builds both sides of the comparison and the map
/// `ψ(m f') = [(f, m)]` for any preimage `f` of `f'`.
pub fn thm13_isomorphism(ctx: &InductionContext) -> Result<Thm13Report, InductionError> {
    ctx.require_condition()?;
    let field = ctx.field();
    let c = ctx.target();
    let d = ctx.source();
    let turull = turull_induce(ctx)?;
    let (left_ia, left) = skew_interior_graded(&turull.precosheaf);
    let ia = skew_as_interior(&ctx.precosheaf);
    let puig = puig_induce(ctx, &ia)?;
    let d_offsets = skew_offsets(&ctx.precosheaf);
    let c_offsets = skew_offsets(&turull.precosheaf);
    let n_s = ia.algebra.dim();

    let mut cols = Vec::with_capacity(left.algebra.dim());
    for g in c.morphisms() {
        let sub = &turull.subspaces[c.cod(g).0];
        for (i, m) in sub.basis().iter().enumerate() {
            let pre = ctx.functor.preimages(g);
            let classes: Vec<Vec<Scalar>> = pre
                .iter()
                .map(|&f| {
                    let mut v = vec![field.zero(); n_s];
                    for (k, x) in m.iter().enumerate() {
                        v[d_offsets[f.0] + k] = x.clone();
                    }
                    puig.quotient.proj.apply(&v)
                })
                .collect();
            if let Some(k) = classes.iter().position(|v| *v != classes[0]) {
                return Err(assertion(
                    "ψ independent of preimage",
                    format!(
                        "basis element {} of degree {}: {} vs {}",
                        i,
                        c.morphism_name(g),
                        d.morphism_name(pre[0]),
                        d.morphism_name(pre[k])
                    ),
                ));
            }
            cols.push(puig.fixed.coordinates(&classes[0]).ok_or_else(|| {
                assertion(
                    "ψ lands in fixed classes",
                    format!(
                        "({}, {})",
                        c.morphism_name(g),
                        left.algebra.label(c_offsets[g.0] + i)
                    ),
                )
            })?);
        }
    }
    let psi = LinearMap::from_columns(field, puig.algebra.dim(), &cols);
    let hom = AlgebraHom::new(left.algebra.clone(), puig.algebra.clone(), psi.clone())?;
    let mut violations = validate_hom(&hom);
    violations.extend_with_context("IndP", puig.algebra_report.clone());
    violations.extend_with_context("τ̄", puig.tau_bar_report.clone());
    let is_unital = !violations.mentions("unital");
    let is_multiplicative = !violations.mentions("multiplicative");
    let rank = psi.rank();
    let is_bijective = rank == left.algebra.dim() && rank == puig.algebra.dim();
    if !is_bijective {
        violations.push(
            "bijective",
            format!(
                "rank {} for dims {} → {}",
                rank,
                left.algebra.dim(),
                puig.algebra.dim()
            ),
        );
    }

    // f'-homogeneous part of IndP: fixed classes inside the image of the fiber blocks.
    let q = puig.quotient.dim();
    let mut graded = true;
    let mut component_dims = 0;
    for g in c.morphisms() {
        let mut gens = Vec::new();
        for f in ctx.functor.preimages(g) {
            for k in 0..ctx.precosheaf.algebra(d.cod(f)).dim() {
                let mut v = vec![field.zero(); n_s];
                v[d_offsets[f.0] + k] = field.one();
                gens.push(puig.quotient.proj.apply(&v));
            }
        }
        let block = Subspace::span(field, q, gens);
        let component = puig.fixed.intersection(&block)?;
        component_dims += component.dim();
        for j in left.component(g) {
            let image = puig.fixed.vector(&psi.column(j));
            if !component.contains(&image) {
                graded = false;
                violations.push(
                    "graded",
                    format!(
                        "ψ{} leaves the {} component",
                        left.algebra.label(j),
                        c.morphism_name(g)
                    ),
                );
            }
        }
    }
    if component_dims != puig.algebra.dim() {
        graded = false;
        violations.push(
            "graded",
            format!(
                "components sum to dim {} but IndP has dim {}",
                component_dims,
                puig.algebra.dim()
            ),
        );
    }

    let composite = psi.compose(&left_ia.structural.map)?;
    let is_interior_compatible = composite == puig.tau_bar.map;
    if !is_interior_compatible {
        violations.push("interior compatible", "ψ∘σ ≠ τ̄");
    }
    let expected_dim = c
        .morphisms()
        .map(|g| turull.subspaces[c.cod(g).0].dim())
        .sum();
    Ok(Thm13Report {
        psi,
        dim_turull_skew: left.algebra.dim(),
        dim_puig: puig.algebra.dim(),
        expected_dim,
        is_unital,
        is_multiplicative,
        is_bijective,
        is_graded: graded,
        is_interior_compatible,
        violations,
    })
}

/// Outcome of examining `θ(m f) = m ⊗ s(f)` from `S[D]` into
/// `T = ⊕_{f'} S(cod f') ⊗ f'`.
#[derive(Clone, Debug)]
pub struct ThetaReport {
    /// `θ` kills the relations `σ(s)c − c`, i.e. descends to the quotient.
    pub well_defined: bool,
    pub well_defined_witness: Option<String>,
    /// `θ` kills the relations lying in `⊕_f M_S(cod f) f`.
    pub well_defined_on_invariants: bool,
    /// `θ(c·s) = θ(c)·s` for the right actions
    /// `(m f)·s = S(g_{cod f})(m) f∘g_{dom f}` and `(m⊗f')·s = S(g_{cod f'})(m)⊗f'`.
    pub equivariant: bool,
    pub fixed_dim: usize,
    pub puig_dim: usize,
}

impl ThetaReport {
    pub fn dims_agree(&self) -> bool {
        self.fixed_dim == self.puig_dim
    }
}

pub fn theta_check(ctx: &InductionContext) -> Result<ThetaReport, InductionError> {
    ctx.require_condition()?;
    let field = ctx.field();
    let c = ctx.target();
    let d = ctx.source();
    let s = &ctx.precosheaf;
    let ia = skew_as_interior(s);
    let puig = puig_induce(ctx, &ia)?;
    let monoid = &puig.monoid;
    let d_offsets = skew_offsets(s);
    let n_s = ia.algebra.dim();

    // T = ⊕_{f'} S(cod f') ⊗ f', block per target morphism
    let t_dims: Vec<usize> = c
        .morphisms()
        .map(|g| s.algebra(ctx.preimage_object(c.cod(g))).dim())
        .collect();
    let t_offsets = crate::algstruct::block_offsets(&t_dims);
    let n_t: usize = t_dims.iter().sum();

    let mut theta = LinearMap::zeros(field, n_t, n_s);
    let mut skew_basis = Vec::new();
    for f in d.morphisms() {
        for k in 0..s.algebra(d.cod(f)).dim() {
            let g = ctx.functor.on_morphism(f);
            theta.set(t_offsets[g.0] + k, d_offsets[f.0] + k, field.one());
            skew_basis.push((f, k));
        }
    }

    let mut well_defined_witness = None;
    for v in puig.relations.basis() {
        let image = theta.apply(v);
        if image.iter().any(|x| !x.is_zero()) {
            well_defined_witness = Some(format!("θ({}) ≠ 0", ia.algebra.format_element(v)));
            break;
        }
    }

    // W = ⊕_f M_S(cod f) f
    let ms: Vec<Subspace> = d
        .objects()
        .map(|x| ms_subspace(ctx, x))
        .collect::<Result<_, _>>()?;
    let mut w_gens = Vec::new();
    for f in d.morphisms() {
        for m in ms[d.cod(f).0].basis() {
            let mut v = vec![field.zero(); n_s];
            for (k, x) in m.iter().enumerate() {
                v[d_offsets[f.0] + k] = x.clone();
            }
            w_gens.push(v);
        }
    }
    let w = Subspace::span(field, n_s, w_gens);
    let w_rel = w.intersection(&puig.relations)?;
    let well_defined_on_invariants = w_rel
        .basis()
        .iter()
        .all(|v| theta.apply(v).iter().all(Scalar::is_zero));

    // right actions of every monoid element
    let mut equivariant = true;
    let mut t_actions = Vec::new();
    for ch in &monoid.choices {
        let mut on_skew = LinearMap::zeros(field, n_s, n_s);
        for (col, &(f, k)) in skew_basis.iter().enumerate() {
            let g_cod = ch[d.cod(f).0];
            let g_dom = ch[d.dom(f).0];
            let m = s.hom(g_cod).map.column(k);
            let fg = d
                .comp(f, g_dom)
                .expect("composable with an element of Id_dom");
            for (i, x) in m.into_iter().enumerate() {
                on_skew.set(d_offsets[fg.0] + i, col, x);
            }
        }
        let mut on_t = LinearMap::zeros(field, n_t, n_t);
        for g in c.morphisms() {
            let x = ctx.preimage_object(c.cod(g));
            let h = &s.hom(ch[x.0]).map;
            for i in 0..h.rows() {
                for j in 0..h.cols() {
                    on_t.set(t_offsets[g.0] + i, t_offsets[g.0] + j, h.get(i, j).clone());
                }
            }
        }
        if theta.compose(&on_skew)? != on_t.compose(&theta)? {
            equivariant = false;
        }
        t_actions.push(on_t);
    }
    let fixed_dim = simultaneous_fixed_space(field, &t_actions, n_t)?.dim();
    Ok(ThetaReport {
        well_defined: well_defined_witness.is_none(),
        well_defined_witness,
        well_defined_on_invariants,
        equivariant,
        fixed_dim,
        puig_dim: puig.algebra.dim(),
    })
}
