//! Finite categories given by explicit composition tables, functors between
//! them, and the fiber relation a functor induces on morphisms.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FincatError {
    #[error("duplicate object id {0:?}")]
    DuplicateObject(String),
    #[error("duplicate morphism id {0:?}")]
    DuplicateMorphism(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("composite of ({g}, {f}) declared twice")]
    ConflictingComposite { g: String, f: String },
    #[error("object {0:?} has no identity morphism")]
    MissingIdentity(String),
    #[error("functor does not assign {0:?}")]
    Unassigned(String),
    #[error("functor must be {0}")]
    TraitsRequired(&'static str),
    #[error("fiber class {class} mixes domains or codomains although the functor is injective on objects")]
    FiberEndpoints { class: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category. Object and morphism order is the declaration order
/// and fixes every downstream basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    // comp[g * n + f] = g ∘ f
    comp: Vec<Option<MorId>>,
}

impl FinCategory {
    /// Builds a category from declared ids. Structural problems (unknown or
    /// duplicate ids) are errors; axiom failures are left for
    /// [`validate_category`] to report.
    pub fn new(
        name: impl Into<String>,
        objects: &[&str],
        morphisms: &[(&str, &str, &str)],
        identities: &[(&str, &str)],
        compositions: &[(&str, &str, &str)],
    ) -> Result<Self, FincatError> {
        let mut obj_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(*o, ObjId(i)).is_some() {
                return Err(FincatError::DuplicateObject(o.to_string()));
            }
        }
        let obj = |s: &str| {
            obj_index
                .get(s)
                .copied()
                .ok_or_else(|| FincatError::UnknownObject(s.to_string()))
        };
        let mut mor_index = HashMap::new();
        let mut mors = Vec::with_capacity(morphisms.len());
        for (i, (id, dom, cod)) in morphisms.iter().enumerate() {
            if mor_index.insert(*id, MorId(i)).is_some() {
                return Err(FincatError::DuplicateMorphism(id.to_string()));
            }
            mors.push(Morphism {
                id: id.to_string(),
                dom: obj(dom)?,
                cod: obj(cod)?,
            });
        }
        let mor = |s: &str| {
            mor_index
                .get(s)
                .copied()
                .ok_or_else(|| FincatError::UnknownMorphism(s.to_string()))
        };
        let mut ids = vec![None; objects.len()];
        for (o, m) in identities {
            ids[obj(o)?.0] = Some(mor(m)?);
        }
        let identities = ids
            .into_iter()
            .zip(objects)
            .map(|(m, o)| m.ok_or_else(|| FincatError::MissingIdentity(o.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let n = mors.len();
        let mut comp = vec![None; n * n];
        for (g, f, h) in compositions {
            let (gi, fi, hi) = (mor(g)?, mor(f)?, mor(h)?);
            let slot = &mut comp[gi.0 * n + fi.0];
            if slot.is_some_and(|old| old != hi) {
                return Err(FincatError::ConflictingComposite {
                    g: g.to_string(),
                    f: f.to_string(),
                });
            }
            *slot = Some(hi);
        }
        Ok(FinCategory {
            name: name.into(),
            objects: objects.iter().map(|s| s.to_string()).collect(),
            morphisms: mors,
            identities,
            comp,
        })
    }

    /// A one-object category from a finite monoid multiplication table over
    /// the given element names; `elements[0]` is the identity.
    pub fn monoid(
        name: impl Into<String>,
        object: &str,
        elements: &[&str],
        product: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, FincatError> {
        let morphisms: Vec<_> = elements.iter().map(|e| (*e, object, object)).collect();
        let mut comps = Vec::new();
        for g in 0..elements.len() {
            for f in 0..elements.len() {
                comps.push((elements[g], elements[f], elements[product(g, f)]));
            }
        }
        Self::new(
            name,
            &[object],
            &morphisms,
            &[(object, elements[0])],
            &comps,
        )
    }

    /// The category with one object and only its identity.
    pub fn point(name: impl Into<String>) -> Self {
        Self::new(
            name,
            &["*"],
            &[("1_*", "*", "*")],
            &[("*", "1_*")],
            &[("1_*", "1_*", "1_*")],
        )
        .expect("point category")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].id
    }

    pub fn object_index(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn morphism_index(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.id == name).map(MorId)
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities.contains(&f)
    }

    /// The stored composite `g ∘ f`, if any.
    pub fn comp(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g.0 * self.morphisms.len() + f.0]
    }

    /// Overwrites one composition table entry. Used to build deliberately
    /// broken tables in tests.
    pub fn set_composite(&mut self, g: MorId, f: MorId, h: Option<MorId>) {
        let n = self.morphisms.len();
        self.comp[g.0 * n + f.0] = h;
    }

    pub fn composable(&self, g: MorId, f: MorId) -> bool {
        self.dom(g) == self.cod(f)
    }

    /// Morphisms with domain `x` and codomain `y`, in declaration order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.morphisms()
            .filter(|&f| self.dom(f) == x && self.cod(f) == y)
            .collect()
    }

    fn describe(&self, f: MorId) -> String {
        let m = &self.morphisms[f.0];
        format!(
            "{}: {}→{}",
            m.id, self.objects[m.dom.0], self.objects[m.cod.0]
        )
    }
}

/// Scans every axiom of a category and reports each failure with the
/// morphisms that witness it.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    for x in c.objects() {
        let id = c.identity(x);
        if c.dom(id) != x || c.cod(id) != x {
            report.push(
                "identity endpoints",
                format!("identity of {} is {}", c.object_name(x), c.describe(id)),
            );
        }
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            match (c.composable(g, f), c.comp(g, f)) {
                (true, None) => report.push(
                    "composition total",
                    format!("missing {} ∘ {}", c.morphism_name(g), c.morphism_name(f)),
                ),
                (false, Some(h)) => report.push(
                    "composition domain",
                    format!(
                        "{} ∘ {} = {} declared for non-composable pair",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        c.morphism_name(h)
                    ),
                ),
                (true, Some(h)) => {
                    if c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g) {
                        report.push(
                            "composite endpoints",
                            format!(
                                "{} ∘ {} = {}",
                                c.morphism_name(g),
                                c.morphism_name(f),
                                c.describe(h)
                            ),
                        );
                    }
                }
                (false, None) => {}
            }
        }
    }
    for f in c.morphisms() {
        let right = c.comp(f, c.identity(c.dom(f)));
        if right.is_some() && right != Some(f) {
            report.push(
                "identity law",
                format!(
                    "{} ∘ {} ≠ {}",
                    c.morphism_name(f),
                    c.morphism_name(c.identity(c.dom(f))),
                    c.morphism_name(f)
                ),
            );
        }
        let left = c.comp(c.identity(c.cod(f)), f);
        if left.is_some() && left != Some(f) {
            report.push(
                "identity law",
                format!(
                    "{} ∘ {} ≠ {}",
                    c.morphism_name(c.identity(c.cod(f))),
                    c.morphism_name(f),
                    c.morphism_name(f)
                ),
            );
        }
    }
    for h in c.morphisms() {
        for g in c.morphisms().filter(|&g| c.composable(h, g)) {
            for f in c.morphisms().filter(|&f| c.composable(g, f)) {
                let left = c.comp(g, f).and_then(|gf| c.comp(h, gf));
                let right = c.comp(h, g).and_then(|hg| c.comp(hg, f));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        report.push(
                            "associativity",
                            format!(
                                "({0} ∘ {1}) ∘ {2} = {4} but {0} ∘ ({1} ∘ {2}) = {3}",
                                c.morphism_name(h),
                                c.morphism_name(g),
                                c.morphism_name(f),
                                c.morphism_name(l),
                                c.morphism_name(r)
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// The opposite category. Morphism ids are kept, so `f` in the result
/// denotes `f^op`; applying this twice returns the original category.
pub fn opposite_category(c: &FinCategory) -> FinCategory {
    let n = c.num_morphisms();
    let morphisms = c
        .morphisms
        .iter()
        .map(|m| Morphism {
            id: m.id.clone(),
            dom: m.cod,
            cod: m.dom,
        })
        .collect();
    let mut comp = vec![None; n * n];
    for g in c.morphisms() {
        for f in c.morphisms() {
            // f^op ∘ g^op = (g ∘ f)^op
            comp[f.0 * n + g.0] = c.comp(g, f);
        }
    }
    let name = match c.name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", c.name),
    };
    FinCategory {
        name,
        objects: c.objects.clone(),
        morphisms,
        identities: c.identities.clone(),
        comp,
    }
}

/// A functor between finite categories, stored as index maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    name: String,
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl Functor {
    pub fn new(
        name: impl Into<String>,
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: &[(&str, &str)],
        morphisms: &[(&str, &str)],
    ) -> Result<Self, FincatError> {
        let mut obj_map = vec![None; source.num_objects()];
        for (a, b) in objects {
            let a_i = source
                .object_index(a)
                .ok_or_else(|| FincatError::UnknownObject(a.to_string()))?;
            let b_i = target
                .object_index(b)
                .ok_or_else(|| FincatError::UnknownObject(b.to_string()))?;
            obj_map[a_i.0] = Some(b_i);
        }
        let mut mor_map = vec![None; source.num_morphisms()];
        for (a, b) in morphisms {
            let a_i = source
                .morphism_index(a)
                .ok_or_else(|| FincatError::UnknownMorphism(a.to_string()))?;
            let b_i = target
                .morphism_index(b)
                .ok_or_else(|| FincatError::UnknownMorphism(b.to_string()))?;
            mor_map[a_i.0] = Some(b_i);
        }
        let obj_map = obj_map
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| FincatError::Unassigned(source.objects[i].clone())))
            .collect::<Result<_, _>>()?;
        let mor_map = mor_map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| FincatError::Unassigned(source.morphisms[i].id.clone())))
            .collect::<Result<_, _>>()?;
        Ok(Functor {
            name: name.into(),
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        Functor {
            name: format!("id_{}", c.name()),
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
            source: c.clone(),
            target: c,
        }
    }

    /// The functor sending everything to the point category.
    pub fn to_point(c: Arc<FinCategory>) -> Self {
        let point = Arc::new(FinCategory::point("pt"));
        Functor {
            name: format!("{}→pt", c.name()),
            obj_map: vec![ObjId(0); c.num_objects()],
            mor_map: vec![MorId(0); c.num_morphisms()],
            source: c,
            target: point,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn on_object(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn on_morphism(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    /// Source morphisms mapped to `g`, in declaration order.
    pub fn preimages(&self, g: MorId) -> Vec<MorId> {
        self.source
            .morphisms()
            .filter(|&f| self.on_morphism(f) == g)
            .collect()
    }

    /// The unique source object over `y`, for functors bijective on objects.
    pub fn object_preimage(&self, y: ObjId) -> Option<ObjId> {
        self.source.objects().find(|&x| self.on_object(x) == y)
    }

    /// Overwrites the image of one morphism. Used to build deliberately
    /// broken functors in tests.
    pub fn set_morphism_image(&mut self, f: MorId, g: MorId) {
        self.mor_map[f.0] = g;
    }
}

pub fn validate_functor(func: &Functor) -> ValidationReport {
    let (s, t) = (&*func.source, &*func.target);
    let mut report = ValidationReport::new();
    for f in s.morphisms() {
        let g = func.on_morphism(f);
        if t.dom(g) != func.on_object(s.dom(f)) {
            report.push(
                "preserves domain",
                format!(
                    "F({}) = {} but F(dom) = {}",
                    s.describe(f),
                    t.describe(g),
                    t.object_name(func.on_object(s.dom(f)))
                ),
            );
        }
        if t.cod(g) != func.on_object(s.cod(f)) {
            report.push(
                "preserves codomain",
                format!(
                    "F({}) = {} but F(cod) = {}",
                    s.describe(f),
                    t.describe(g),
                    t.object_name(func.on_object(s.cod(f)))
                ),
            );
        }
    }
    for x in s.objects() {
        let img = func.on_morphism(s.identity(x));
        if img != t.identity(func.on_object(x)) {
            report.push(
                "preserves identities",
                format!(
                    "F({}) = {}",
                    s.morphism_name(s.identity(x)),
                    t.morphism_name(img)
                ),
            );
        }
    }
    for g in s.morphisms() {
        for f in s.morphisms().filter(|&f| s.composable(g, f)) {
            let Some(gf) = s.comp(g, f) else { continue };
            let lhs = func.on_morphism(gf);
            let (fg, ff) = (func.on_morphism(g), func.on_morphism(f));
            let rhs = if t.composable(fg, ff) {
                t.comp(fg, ff)
            } else {
                None
            };
            if rhs != Some(lhs) {
                report.push(
                    "preserves composition",
                    format!(
                        "F({} ∘ {}) = {} but F({}) ∘ F({}) = {}",
                        s.morphism_name(g),
                        s.morphism_name(f),
                        t.morphism_name(lhs),
                        s.morphism_name(g),
                        s.morphism_name(f),
                        rhs.map_or("undefined".to_string(), |h| t.morphism_name(h).to_string())
                    ),
                );
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctorTraits {
    pub injective_on_objects: bool,
    pub surjective_on_objects: bool,
    pub injective_on_morphisms: bool,
    pub surjective_on_morphisms: bool,
}

impl FunctorTraits {
    /// The standing hypothesis for both inductions.
    pub fn is_induction_ready(&self) -> bool {
        self.injective_on_objects && self.surjective_on_morphisms
    }
}

pub fn functor_traits(func: &Functor) -> FunctorTraits {
    fn injective<T: Ord + Copy>(v: &[T]) -> bool {
        v.iter().collect::<BTreeSet<_>>().len() == v.len()
    }
    fn covers<T: Ord + Copy>(v: &[T], n: usize) -> bool {
        v.iter().collect::<BTreeSet<_>>().len() == n
    }
    let traits = FunctorTraits {
        injective_on_objects: injective(&func.obj_map),
        surjective_on_objects: covers(&func.obj_map, func.target.num_objects()),
        injective_on_morphisms: injective(&func.mor_map),
        surjective_on_morphisms: covers(&func.mor_map, func.target.num_morphisms()),
    };
    debug_assert!(!traits.is_induction_ready() || traits.surjective_on_objects);
    traits
}

/// A partition of the morphisms of a category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorPartition {
    pub classes: Vec<Vec<MorId>>,
    pub class_of: Vec<usize>,
}

impl MorPartition {
    pub fn class(&self, f: MorId) -> &[MorId] {
        &self.classes[self.class_of[f.0]]
    }

    pub fn same_class(&self, f: MorId, g: MorId) -> bool {
        self.class_of[f.0] == self.class_of[g.0]
    }
}

/// The fibers of a functor on morphisms, classes ordered by their first
/// member. For functors injective on objects every class has a single
/// domain and a single codomain; a violation is reported as an error.
pub fn sim_partition(func: &Functor) -> Result<MorPartition, FincatError> {
    let s = &*func.source;
    let mut classes: Vec<Vec<MorId>> = Vec::new();
    let mut class_of = vec![usize::MAX; s.num_morphisms()];
    let mut by_image: HashMap<MorId, usize> = HashMap::new();
    for f in s.morphisms() {
        let idx = *by_image.entry(func.on_morphism(f)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(f);
        class_of[f.0] = idx;
    }
    if functor_traits(func).injective_on_objects {
        for class in &classes {
            let doms: BTreeSet<_> = class.iter().map(|&f| s.dom(f)).collect();
            let cods: BTreeSet<_> = class.iter().map(|&f| s.cod(f)).collect();
            if doms.len() > 1 || cods.len() > 1 {
                return Err(FincatError::FiberEndpoints {
                    class: names(s, class),
                });
            }
        }
    }
    Ok(MorPartition { classes, class_of })
}

fn names(c: &FinCategory, ms: &[MorId]) -> String {
    let v: Vec<&str> = ms.iter().map(|&m| c.morphism_name(m)).collect();
    format!("{{{}}}", v.join(", "))
}

fn require_induction_traits(func: &Functor) -> Result<(), FincatError> {
    if functor_traits(func).is_induction_ready() {
        Ok(())
    } else {
        Err(FincatError::TraitsRequired(
            "injective on objects and surjective on morphisms",
        ))
    }
}

/// The class of `1_x`: every morphism sent to the identity of `F(x)`.
pub fn id_class(func: &Functor, x: ObjId) -> Result<Vec<MorId>, FincatError> {
    require_induction_traits(func)?;
    let target_id = func.target.identity(func.on_object(x));
    Ok(func.preimages(target_id))
}

/// A morphism `f` whose fiber differs from `Id_y ∘ f` or `f ∘ Id_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cond423Witness {
    pub morphism: String,
    pub side: &'static str,
    pub fiber: Vec<String>,
    pub composites: Vec<String>,
}

impl fmt::Display for Cond423Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: fiber {{{}}} ≠ {} = {{{}}}",
            self.morphism,
            self.fiber.join(", "),
            self.side,
            self.composites.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cond423Report {
    pub holds: bool,
    pub witnesses: Vec<Cond423Witness>,
}

/// Checks that for every `f: x → y` the fiber of `f` equals both
/// `Id_y ∘ f` and `f ∘ Id_x` as sets.
pub fn check_condition_423(func: &Functor) -> Result<Cond423Report, FincatError> {
    require_induction_traits(func)?;
    let s = &*func.source;
    let partition = sim_partition(func)?;
    let id_classes: Vec<Vec<MorId>> = s
        .objects()
        .map(|x| id_class(func, x))
        .collect::<Result<_, _>>()?;
    let to_names = |set: &BTreeSet<MorId>| -> Vec<String> {
        set.iter()
            .map(|&m| s.morphism_name(m).to_string())
            .collect()
    };
    let mut witnesses = Vec::new();
    for f in s.morphisms() {
        let fiber: BTreeSet<MorId> = partition.class(f).iter().copied().collect();
        let left: BTreeSet<MorId> = id_classes[s.cod(f).0]
            .iter()
            .filter_map(|&h| s.comp(h, f))
            .collect();
        let right: BTreeSet<MorId> = id_classes[s.dom(f).0]
            .iter()
            .filter_map(|&h| s.comp(f, h))
            .collect();
        for (side, set) in [("Id_cod ∘ f", &left), ("f ∘ Id_dom", &right)] {
            if *set != fiber {
                witnesses.push(Cond423Witness {
                    morphism: s.morphism_name(f).to_string(),
                    side,
                    fiber: to_names(&fiber),
                    composites: to_names(set),
                });
            }
        }
    }
    Ok(Cond423Report {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// Fibers are compatible with composition: related composable pairs have
/// related composites.
pub fn check_partition_compatibility(func: &Functor, p: &MorPartition) -> ValidationReport {
    let s = &*func.source;
    let mut report = ValidationReport::new();
    for g1 in s.morphisms() {
        for f1 in s.morphisms() {
            let Some(c1) = s.comp(g1, f1).filter(|_| s.composable(g1, f1)) else {
                continue;
            };
            for &g2 in p.class(g1) {
                for &f2 in p.class(f1) {
                    let Some(c2) = s.comp(g2, f2).filter(|_| s.composable(g2, f2)) else {
                        continue;
                    };
                    if !p.same_class(c1, c2) {
                        report.push(
                            "fiber compatibility",
                            format!(
                                "{}∘{} and {}∘{}",
                                s.morphism_name(g1),
                                s.morphism_name(f1),
                                s.morphism_name(g2),
                                s.morphism_name(f2)
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// The image of the functor is closed under identities and composition.
pub fn check_image_is_subcategory(func: &Functor) -> ValidationReport {
    let t = &*func.target;
    let image: BTreeSet<MorId> = func.mor_map.iter().copied().collect();
    let objs: BTreeSet<ObjId> = func.obj_map.iter().copied().collect();
    let mut report = ValidationReport::new();
    for &x in &objs {
        if !image.contains(&t.identity(x)) {
            report.push("image identities", t.object_name(x).to_string());
        }
    }
    for &g in &image {
        for &f in &image {
            if t.composable(g, f) {
                if let Some(h) = t.comp(g, f) {
                    if !image.contains(&h) {
                        report.push(
                            "image composition",
                            format!("{} ∘ {}", t.morphism_name(g), t.morphism_name(f)),
                        );
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> FinCategory {
        FinCategory::new(
            "D",
            &["x", "y"],
            &[
                ("1_x", "x", "x"),
                ("1_y", "y", "y"),
                ("f1", "x", "y"),
                ("f2", "y", "y"),
            ],
            &[("x", "1_x"), ("y", "1_y")],
            &[
                ("1_x", "1_x", "1_x"),
                ("1_y", "1_y", "1_y"),
                ("f1", "1_x", "f1"),
                ("1_y", "f1", "f1"),
                ("f2", "f1", "f1"),
                ("f2", "1_y", "f2"),
                ("1_y", "f2", "f2"),
                ("f2", "f2", "1_y"),
            ],
        )
        .unwrap()
    }

    fn c() -> FinCategory {
        FinCategory::new(
            "C",
            &["x'", "y'"],
            &[
                ("1_x'", "x'", "x'"),
                ("1_y'", "y'", "y'"),
                ("f1'", "x'", "y'"),
            ],
            &[("x'", "1_x'"), ("y'", "1_y'")],
            &[
                ("1_x'", "1_x'", "1_x'"),
                ("1_y'", "1_y'", "1_y'"),
                ("f1'", "1_x'", "f1'"),
                ("1_y'", "f1'", "f1'"),
            ],
        )
        .unwrap()
    }

    fn s_functor() -> Functor {
        Functor::new(
            "s",
            Arc::new(d()),
            Arc::new(c()),
            &[("x", "x'"), ("y", "y'")],
            &[
                ("1_x", "1_x'"),
                ("1_y", "1_y'"),
                ("f1", "f1'"),
                ("f2", "1_y'"),
            ],
        )
        .unwrap()
    }

    fn m(c: &FinCategory, n: &str) -> MorId {
        c.morphism_index(n).unwrap()
    }

    fn names_of(c: &FinCategory, v: &[MorId]) -> Vec<String> {
        v.iter().map(|&f| c.morphism_name(f).to_string()).collect()
    }

    #[test]
    fn two_object_category_is_valid() {
        assert!(
            validate_category(&d()).is_ok(),
            "{}",
            validate_category(&d())
        );
        assert!(validate_category(&c()).is_ok());
        assert!(validate_category(&FinCategory::point("p")).is_ok());
    }

    #[test]
    fn idempotent_f2_is_still_a_category() {
        // Exhaustive scan: making f2 idempotent leaves every axiom intact.
        let mut cat = d();
        let f2 = m(&cat, "f2");
        cat.set_composite(f2, f2, Some(f2));
        assert!(validate_category(&cat).is_ok());
    }

    #[test]
    fn broken_identity_law_is_reported() {
        let mut cat = d();
        let (f2, one_y) = (m(&cat, "f2"), m(&cat, "1_y"));
        cat.set_composite(f2, one_y, Some(one_y));
        let r = validate_category(&cat);
        assert!(r.mentions("identity law"), "{r}");
    }

    #[test]
    fn wrong_endpoints_and_missing_entries_are_reported() {
        let mut cat = d();
        let (f1, f2) = (m(&cat, "f1"), m(&cat, "f2"));
        cat.set_composite(f2, f2, Some(f1));
        assert!(validate_category(&cat).mentions("composite endpoints"));
        cat.set_composite(f2, f2, None);
        assert!(validate_category(&cat).mentions("composition total"));
        cat.set_composite(f1, f1, Some(f1));
        assert!(validate_category(&cat).mentions("composition domain"));
    }

    #[test]
    fn associativity_failure_is_reported() {
        // One-object category with a non-associative table on {1, a, b}.
        let cat = FinCategory::monoid("bad", "*", &["1", "a", "b"], |g, f| match (g, f) {
            (0, x) | (x, 0) => x,
            (1, 1) => 2,
            (1, 2) => 1,
            (2, 1) => 2,
            _ => 2,
        })
        .unwrap();
        let r = validate_category(&cat);
        assert!(r.mentions("associativity"), "{r}");
    }

    #[test]
    fn structural_errors() {
        assert_eq!(
            FinCategory::new("e", &["x", "x"], &[], &[], &[]).unwrap_err(),
            FincatError::DuplicateObject("x".into())
        );
        assert!(matches!(
            FinCategory::new("e", &["x"], &[("1", "x", "z")], &[("x", "1")], &[]),
            Err(FincatError::UnknownObject(_))
        ));
        assert!(matches!(
            FinCategory::new("e", &["x"], &[("1", "x", "x")], &[], &[]),
            Err(FincatError::MissingIdentity(_))
        ));
    }

    #[test]
    fn collapse_functor_is_valid() {
        assert!(validate_functor(&s_functor()).is_ok());
        assert!(validate_functor(&Functor::identity(Arc::new(d()))).is_ok());
    }

    #[test]
    fn functor_sending_f2_to_f1_prime_breaks_composition() {
        let mut s = s_functor();
        let f2 = m(s.source(), "f2");
        let f1p = m(s.target(), "f1'");
        s.set_morphism_image(f2, f1p);
        let r = validate_functor(&s);
        assert!(r.mentions("preserves composition"), "{r}");
        assert!(r.mentions("preserves domain"));
    }

    #[test]
    fn traits_of_example_functors() {
        let t = functor_traits(&s_functor());
        assert_eq!(
            (
                t.injective_on_objects,
                t.surjective_on_objects,
                t.injective_on_morphisms,
                t.surjective_on_morphisms
            ),
            (true, true, false, true)
        );
        let id = functor_traits(&Functor::identity(Arc::new(d())));
        assert!(id.injective_on_objects && id.surjective_on_objects);
        assert!(id.injective_on_morphisms && id.surjective_on_morphisms);
        let pt = functor_traits(&Functor::to_point(Arc::new(d())));
        assert_eq!(
            (
                pt.injective_on_objects,
                pt.surjective_on_objects,
                pt.injective_on_morphisms,
                pt.surjective_on_morphisms
            ),
            (false, true, false, true)
        );
    }

    #[test]
    fn fibers_of_example_functors() {
        let s = s_functor();
        let p = sim_partition(&s).unwrap();
        let classes: Vec<Vec<String>> = p.classes.iter().map(|c| names_of(s.source(), c)).collect();
        assert_eq!(classes, vec![vec!["1_x"], vec!["1_y", "f2"], vec!["f1"]]);
        assert!(check_partition_compatibility(&s, &p).is_ok());

        let id = Functor::identity(Arc::new(d()));
        assert!(sim_partition(&id)
            .unwrap()
            .classes
            .iter()
            .all(|c| c.len() == 1));

        let pt = Functor::to_point(Arc::new(d()));
        assert_eq!(sim_partition(&pt).unwrap().classes.len(), 1);
    }

    #[test]
    fn id_classes() {
        let s = s_functor();
        let src = s.source().clone();
        let x = src.object_index("x").unwrap();
        let y = src.object_index("y").unwrap();
        assert_eq!(names_of(&src, &id_class(&s, x).unwrap()), vec!["1_x"]);
        assert_eq!(names_of(&src, &id_class(&s, y).unwrap()), vec!["1_y", "f2"]);
        let id = Functor::identity(src.clone());
        assert_eq!(names_of(&src, &id_class(&id, y).unwrap()), vec!["1_y"]);
        assert!(id_class(&Functor::to_point(src), x).is_err());
    }

    #[test]
    fn condition_423() {
        assert!(check_condition_423(&s_functor()).unwrap().holds);
        assert!(
            check_condition_423(&Functor::identity(Arc::new(d())))
                .unwrap()
                .holds
        );

        let par = Arc::new(
            FinCategory::new(
                "P",
                &["x", "y"],
                &[
                    ("1_x", "x", "x"),
                    ("1_y", "y", "y"),
                    ("f", "x", "y"),
                    ("g", "x", "y"),
                ],
                &[("x", "1_x"), ("y", "1_y")],
                &[
                    ("1_x", "1_x", "1_x"),
                    ("1_y", "1_y", "1_y"),
                    ("f", "1_x", "f"),
                    ("g", "1_x", "g"),
                    ("1_y", "f", "f"),
                    ("1_y", "g", "g"),
                ],
            )
            .unwrap(),
        );
        let collapse = Functor::new(
            "collapse",
            par,
            Arc::new(c()),
            &[("x", "x'"), ("y", "y'")],
            &[("1_x", "1_x'"), ("1_y", "1_y'"), ("f", "f1'"), ("g", "f1'")],
        )
        .unwrap();
        assert!(validate_functor(&collapse).is_ok());
        let r = check_condition_423(&collapse).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witnesses[0].morphism, "f");
        assert_eq!(r.witnesses[0].fiber, vec!["f", "g"]);
        assert_eq!(r.witnesses[0].composites, vec!["f"]);
    }

    #[test]
    fn opposite_is_an_involution() {
        let cat = d();
        let op = opposite_category(&cat);
        assert!(validate_category(&op).is_ok());
        let f1 = m(&op, "f1");
        assert_eq!(op.object_name(op.dom(f1)), "y");
        assert_eq!(op.object_name(op.cod(f1)), "x");
        // f1^op ∘ f2^op = (f2 ∘ f1)^op = f1^op
        assert_eq!(op.comp(f1, m(&op, "f2")), Some(f1));
        assert_eq!(opposite_category(&op), cat);
    }

    #[test]
    fn image_of_surjective_functor_is_subcategory() {
        assert!(check_image_is_subcategory(&s_functor()).is_ok());
    }
}
