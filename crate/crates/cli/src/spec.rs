//! The TOML input format and its resolution into core objects.
//!
//! A document has an optional `field`, named `categories`, `functors`,
//! `algebras` and `precosheaves`, and an ordered `tasks` array. Every
//! reference is checked while resolving, and errors carry the line and
//! column of the offending value.

use std::ops::Range;
use std::sync::Arc;

use catalg_core::algstruct::{AlgebraHom, FinAlgebra, Precosheaf};
use catalg_core::fincat::{FinCategory, Functor};
use catalg_core::linalg::{Field, LinearMap, Scalar};
use indexmap::IndexMap;
use serde::Deserialize;
use thiserror::Error;
use toml::Spanned;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecErrorKind {
    #[error("syntax: {0}")]
    Syntax(String),
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error("duplicate {kind} {name:?}")]
    Duplicate { kind: &'static str, name: String },
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub kind: SpecErrorKind,
}

/// What a task does, parsed from its `command` string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Check,
    BuildKc,
    BuildSkew,
    BuildTensor,
    BuildTtp,
    InductTurull,
    InductPuig,
    VerifyTwisting,
    VerifyThm11,
    VerifyThm13,
    VerifyLemma42,
    VerifyCond423,
    VerifyWeakBialg,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::Check,
        Command::BuildKc,
        Command::BuildSkew,
        Command::BuildTensor,
        Command::BuildTtp,
        Command::InductTurull,
        Command::InductPuig,
        Command::VerifyTwisting,
        Command::VerifyThm11,
        Command::VerifyThm13,
        Command::VerifyLemma42,
        Command::VerifyCond423,
        Command::VerifyWeakBialg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::BuildKc => "build kc",
            Command::BuildSkew => "build skew",
            Command::BuildTensor => "build tensor",
            Command::BuildTtp => "build ttp",
            Command::InductTurull => "induct turull",
            Command::InductPuig => "induct puig",
            Command::VerifyTwisting => "verify twisting",
            Command::VerifyThm11 => "verify thm11",
            Command::VerifyThm13 => "verify thm13",
            Command::VerifyLemma42 => "verify lemma42",
            Command::VerifyCond423 => "verify cond423",
            Command::VerifyWeakBialg => "verify weakbialg",
        }
    }

    pub fn parse(text: &str) -> Option<Command> {
        let norm = text.split_whitespace().collect::<Vec<_>>().join(" ");
        Command::ALL.into_iter().find(|c| c.as_str() == norm)
    }

    fn needs(self) -> Needs {
        use Command::*;
        match self {
            Check => Needs::Nothing,
            BuildKc | VerifyWeakBialg => Needs::Category,
            BuildSkew | BuildTensor | BuildTtp | VerifyTwisting | VerifyThm11 => Needs::Precosheaf,
            VerifyCond423 => Needs::Functor,
            InductTurull | InductPuig | VerifyThm13 | VerifyLemma42 => Needs::Induction,
        }
    }
}

enum Needs {
    Nothing,
    Category,
    Precosheaf,
    Functor,
    Induction,
}

/// A task with all references resolved.
#[derive(Clone, Debug)]
pub enum Target {
    Everything,
    Category(String, Arc<FinCategory>),
    Precosheaf(String, Precosheaf),
    Functor(String, Functor),
    Induction {
        functor: (String, Functor),
        precosheaf: (String, Precosheaf),
    },
}

#[derive(Clone, Debug)]
pub struct Task {
    pub command: Command,
    pub target: Target,
}

impl Task {
    /// `key = value` pairs naming the resolved arguments.
    pub fn arguments(&self) -> Vec<(&'static str, String)> {
        match &self.target {
            Target::Everything => vec![],
            Target::Category(n, _) => vec![("category", n.clone())],
            Target::Precosheaf(n, _) => vec![("precosheaf", n.clone())],
            Target::Functor(n, _) => vec![("functor", n.clone())],
            Target::Induction {
                functor,
                precosheaf,
            } => vec![
                ("functor", functor.0.clone()),
                ("precosheaf", precosheaf.0.clone()),
            ],
        }
    }
}

/// A fully resolved document.
#[derive(Clone, Debug)]
pub struct WorkbenchSpec {
    pub field: Field,
    pub categories: IndexMap<String, Arc<FinCategory>>,
    pub functors: IndexMap<String, Functor>,
    pub algebras: IndexMap<String, Arc<FinAlgebra>>,
    pub precosheaves: IndexMap<String, Precosheaf>,
    pub tasks: Vec<Task>,
}

/// Optional task arguments, used when a task is requested from outside
/// the document (for example from the command line).
#[derive(Clone, Debug, Default)]
pub struct TaskArgs {
    pub category: Option<String>,
    pub functor: Option<String>,
    pub precosheaf: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    field: Option<Spanned<String>>,
    #[serde(default)]
    categories: IndexMap<String, Spanned<RawCategory>>,
    #[serde(default)]
    functors: IndexMap<String, Spanned<RawFunctor>>,
    #[serde(default)]
    algebras: IndexMap<String, Spanned<RawAlgebra>>,
    #[serde(default)]
    precosheaves: IndexMap<String, Spanned<RawPrecosheaf>>,
    #[serde(default)]
    tasks: Vec<Spanned<RawTask>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCategory {
    objects: Vec<Spanned<String>>,
    morphisms: Vec<Spanned<(String, String, String)>>,
    /// Defaults to `1_<object>` for every object.
    #[serde(default)]
    identities: IndexMap<String, Spanned<String>>,
    /// Entries `[g, f, g∘f]`.
    #[serde(default)]
    compositions: Vec<Spanned<(String, String, String)>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunctor {
    source: Spanned<String>,
    target: Spanned<String>,
    objects: IndexMap<String, Spanned<String>>,
    morphisms: IndexMap<String, Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    preset: Option<Spanned<String>>,
    basis: Option<Vec<String>>,
    unit: Option<Spanned<Vec<Entry>>>,
    /// Entries `[left, right, coordinates]`; missing products are zero.
    #[serde(default)]
    products: Vec<Spanned<(String, String, Vec<Entry>)>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPrecosheaf {
    category: Spanned<String>,
    algebras: IndexMap<String, Spanned<String>>,
    /// Matrices as rows; omitted identity morphisms get identity maps.
    #[serde(default)]
    homs: IndexMap<String, Spanned<Vec<Vec<Entry>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTask {
    command: Spanned<String>,
    category: Option<Spanned<String>>,
    functor: Option<Spanned<String>>,
    precosheaf: Option<Spanned<String>>,
}

/// A matrix or vector entry: an integer or a fraction string like `"-3/2"`.
#[derive(Deserialize, Clone)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn scalar(&self, field: Field) -> Option<Scalar> {
        match self {
            Entry::Int(n) => Some(field.from_int(*n)),
            Entry::Text(t) => field.parse(t).ok(),
        }
    }
}

struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn error(&self, span: Range<usize>, kind: SpecErrorKind) -> SpecError {
        let upto = &self.text[..span.start.min(self.text.len())];
        let line = upto.matches('\n').count() + 1;
        let column = upto.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        SpecError { line, column, kind }
    }

    fn unknown(&self, span: Range<usize>, kind: &'static str, name: &str) -> SpecError {
        self.error(
            span,
            SpecErrorKind::UnknownName {
                kind,
                name: name.to_string(),
            },
        )
    }

    fn invalid(&self, span: Range<usize>, msg: impl Into<String>) -> SpecError {
        self.error(span, SpecErrorKind::Invalid(msg.into()))
    }
}

/// Parses `field = "rationals"` or `"gf:<p>"`.
pub fn parse_field(text: &str) -> Result<Field, SpecErrorKind> {
    let t = text.trim();
    if t == "rationals" || t == "Q" {
        return Ok(Field::Rationals);
    }
    let p = t
        .strip_prefix("gf:")
        .and_then(|p| p.trim().parse::<u64>().ok())
        .ok_or_else(|| SpecErrorKind::Invalid(format!("unknown field {t:?}")))?;
    Field::prime(p).map_err(|_| SpecErrorKind::NotPrime(p))
}

/// Parses a document. `field_override` replaces the declared field.
pub fn parse_spec(text: &str, field_override: Option<Field>) -> Result<WorkbenchSpec, SpecError> {
    let loc = Locator { text };
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let span = e.span().unwrap_or(0..0);
        loc.error(span, SpecErrorKind::Syntax(e.message().trim().to_string()))
    })?;
    let declared = match &raw.field {
        Some(f) => parse_field(f.get_ref()).map_err(|k| loc.error(f.span(), k))?,
        None => Field::Rationals,
    };
    let field = field_override.unwrap_or(declared);

    let mut categories = IndexMap::new();
    for (name, c) in &raw.categories {
        categories.insert(name.clone(), Arc::new(resolve_category(&loc, name, c)?));
    }
    let mut functors = IndexMap::new();
    for (name, f) in &raw.functors {
        functors.insert(name.clone(), resolve_functor(&loc, name, f, &categories)?);
    }
    let mut algebras = IndexMap::new();
    for (name, a) in &raw.algebras {
        algebras.insert(name.clone(), Arc::new(resolve_algebra(&loc, a, field)?));
    }
    let mut precosheaves = IndexMap::new();
    for (name, p) in &raw.precosheaves {
        let r = resolve_precosheaf(&loc, name, p, &categories, &algebras, field)?;
        precosheaves.insert(name.clone(), r);
    }
    let mut spec = WorkbenchSpec {
        field,
        categories,
        functors,
        algebras,
        precosheaves,
        tasks: Vec::new(),
    };
    for t in &raw.tasks {
        let command = Command::parse(t.get_ref().command.get_ref()).ok_or_else(|| {
            loc.unknown(
                t.get_ref().command.span(),
                "command",
                t.get_ref().command.get_ref(),
            )
        })?;
        let named = |s: &Option<Spanned<String>>, kind: &'static str, present: bool| match s {
            Some(v) if !present => Err(loc.unknown(v.span(), kind, v.get_ref())),
            _ => Ok(s.as_ref().map(|v| v.get_ref().clone())),
        };
        let raw_task = t.get_ref();
        let args = TaskArgs {
            category: named(
                &raw_task.category,
                "category",
                raw_task
                    .category
                    .as_ref()
                    .is_none_or(|v| spec.categories.contains_key(v.get_ref())),
            )?,
            functor: named(
                &raw_task.functor,
                "functor",
                raw_task
                    .functor
                    .as_ref()
                    .is_none_or(|v| spec.functors.contains_key(v.get_ref())),
            )?,
            precosheaf: named(
                &raw_task.precosheaf,
                "precosheaf",
                raw_task
                    .precosheaf
                    .as_ref()
                    .is_none_or(|v| spec.precosheaves.contains_key(v.get_ref())),
            )?,
        };
        let task = spec
            .task(command, &args)
            .map_err(|m| loc.invalid(t.span(), m))?;
        spec.tasks.push(task);
    }
    Ok(spec)
}

fn check_unique<'a>(
    loc: &Locator,
    kind: &'static str,
    items: impl Iterator<Item = (&'a str, Range<usize>)>,
) -> Result<(), SpecError> {
    let mut seen = std::collections::HashSet::new();
    for (name, span) in items {
        if !seen.insert(name) {
            return Err(loc.error(
                span,
                SpecErrorKind::Duplicate {
                    kind,
                    name: name.to_string(),
                },
            ));
        }
    }
    Ok(())
}

fn resolve_category(
    loc: &Locator,
    name: &str,
    c: &Spanned<RawCategory>,
) -> Result<FinCategory, SpecError> {
    let raw = c.get_ref();
    check_unique(
        loc,
        "object",
        raw.objects.iter().map(|o| (o.get_ref().as_str(), o.span())),
    )?;
    check_unique(
        loc,
        "morphism",
        raw.morphisms
            .iter()
            .map(|m| (m.get_ref().0.as_str(), m.span())),
    )?;
    let objects: Vec<&str> = raw.objects.iter().map(|o| o.get_ref().as_str()).collect();
    let has_obj = |s: &str| objects.contains(&s);
    let morphisms: Vec<(&str, &str, &str)> = raw
        .morphisms
        .iter()
        .map(|m| {
            let (id, d, c) = m.get_ref();
            for o in [d, c] {
                if !has_obj(o) {
                    return Err(loc.unknown(m.span(), "object", o));
                }
            }
            Ok((id.as_str(), d.as_str(), c.as_str()))
        })
        .collect::<Result<_, _>>()?;
    let has_mor = |s: &str| morphisms.iter().any(|m| m.0 == s);
    for (o, m) in &raw.identities {
        if !has_obj(o) {
            return Err(loc.unknown(m.span(), "object", o));
        }
        if !has_mor(m.get_ref()) {
            return Err(loc.unknown(m.span(), "morphism", m.get_ref()));
        }
    }
    let default_ids: Vec<String> = objects.iter().map(|o| format!("1_{o}")).collect();
    let identities: Vec<(&str, &str)> = objects
        .iter()
        .zip(&default_ids)
        .map(|(o, d)| {
            let m = raw
                .identities
                .get(*o)
                .map_or(d.as_str(), |m| m.get_ref().as_str());
            if has_mor(m) {
                Ok((*o, m))
            } else {
                Err(loc.invalid(
                    c.span(),
                    format!("object {o:?} has no identity morphism {m:?}"),
                ))
            }
        })
        .collect::<Result<_, _>>()?;
    let mut seen = std::collections::HashMap::new();
    let compositions: Vec<(&str, &str, &str)> = raw
        .compositions
        .iter()
        .map(|e| {
            let (g, f, h) = e.get_ref();
            for m in [g, f, h] {
                if !has_mor(m) {
                    return Err(loc.unknown(e.span(), "morphism", m));
                }
            }
            if seen.insert((g, f), h).is_some_and(|old| old != h) {
                return Err(loc.error(
                    e.span(),
                    SpecErrorKind::Duplicate {
                        kind: "composite",
                        name: format!("{g} ∘ {f}"),
                    },
                ));
            }
            Ok((g.as_str(), f.as_str(), h.as_str()))
        })
        .collect::<Result<_, _>>()?;
    FinCategory::new(name, &objects, &morphisms, &identities, &compositions)
        .map_err(|e| loc.invalid(c.span(), e.to_string()))
}

fn lookup<'a, T>(
    loc: &Locator,
    map: &'a IndexMap<String, T>,
    kind: &'static str,
    name: &Spanned<String>,
) -> Result<&'a T, SpecError> {
    map.get(name.get_ref())
        .ok_or_else(|| loc.unknown(name.span(), kind, name.get_ref()))
}

fn resolve_functor(
    loc: &Locator,
    name: &str,
    f: &Spanned<RawFunctor>,
    categories: &IndexMap<String, Arc<FinCategory>>,
) -> Result<Functor, SpecError> {
    let raw = f.get_ref();
    let src = lookup(loc, categories, "category", &raw.source)?.clone();
    let tgt = lookup(loc, categories, "category", &raw.target)?.clone();
    for (o, img) in &raw.objects {
        if src.object_index(o).is_none() {
            return Err(loc.unknown(img.span(), "object", o));
        }
        if tgt.object_index(img.get_ref()).is_none() {
            return Err(loc.unknown(img.span(), "object", img.get_ref()));
        }
    }
    for (m, img) in &raw.morphisms {
        if src.morphism_index(m).is_none() {
            return Err(loc.unknown(img.span(), "morphism", m));
        }
        if tgt.morphism_index(img.get_ref()).is_none() {
            return Err(loc.unknown(img.span(), "morphism", img.get_ref()));
        }
    }
    let objs: Vec<(&str, &str)> = raw
        .objects
        .iter()
        .map(|(o, i)| (o.as_str(), i.get_ref().as_str()))
        .collect();
    let mors: Vec<(&str, &str)> = raw
        .morphisms
        .iter()
        .map(|(m, i)| (m.as_str(), i.get_ref().as_str()))
        .collect();
    Functor::new(name, src, tgt, &objs, &mors).map_err(|e| loc.invalid(f.span(), e.to_string()))
}

fn scalars(
    loc: &Locator,
    span: Range<usize>,
    entries: &[Entry],
    field: Field,
) -> Result<Vec<Scalar>, SpecError> {
    entries
        .iter()
        .map(|e| {
            e.scalar(field).ok_or_else(|| {
                let shown = match e {
                    Entry::Int(n) => n.to_string(),
                    Entry::Text(t) => t.clone(),
                };
                loc.error(
                    span.clone(),
                    SpecErrorKind::MalformedMatrix(format!(
                        "entry {shown:?} is not a scalar of {field}"
                    )),
                )
            })
        })
        .collect()
}

fn preset(text: &str, field: Field) -> Option<FinAlgebra> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["field"] => Some(FinAlgebra::ground_field(field)),
        ["product_of_fields", n] => n
            .parse()
            .ok()
            .map(|n| FinAlgebra::product_of_fields(field, n)),
        ["matrix", n] => n.parse().ok().map(|n| FinAlgebra::matrix_algebra(field, n)),
        ["group_algebra", c] => c
            .strip_prefix('C')
            .and_then(|n| n.parse().ok())
            .filter(|&n: &usize| n > 0)
            .map(|n| FinAlgebra::cyclic_group_algebra(field, n)),
        _ => None,
    }
}

fn resolve_algebra(
    loc: &Locator,
    a: &Spanned<RawAlgebra>,
    field: Field,
) -> Result<FinAlgebra, SpecError> {
    let raw = a.get_ref();
    if let Some(p) = &raw.preset {
        if raw.basis.is_some() || raw.unit.is_some() || !raw.products.is_empty() {
            return Err(loc.invalid(
                p.span(),
                "a preset cannot be combined with structure constants",
            ));
        }
        return preset(p.get_ref(), field)
            .ok_or_else(|| loc.unknown(p.span(), "preset", p.get_ref()));
    }
    let (Some(basis), Some(unit)) = (&raw.basis, &raw.unit) else {
        return Err(loc.invalid(
            a.span(),
            "an algebra needs either a preset or basis, unit and products",
        ));
    };
    let dim = basis.len();
    let index = |s: &str| basis.iter().position(|b| b == s);
    let unit_v = scalars(loc, unit.span(), unit.get_ref(), field)?;
    if unit_v.len() != dim {
        return Err(loc.error(
            unit.span(),
            SpecErrorKind::MalformedMatrix(format!(
                "unit has {} entries for dimension {dim}",
                unit_v.len()
            )),
        ));
    }
    let mut table = vec![vec![field.zero(); dim]; dim * dim];
    let mut seen = std::collections::HashSet::new();
    for p in &raw.products {
        let (l, r, v) = p.get_ref();
        let i = index(l).ok_or_else(|| loc.unknown(p.span(), "basis element", l))?;
        let j = index(r).ok_or_else(|| loc.unknown(p.span(), "basis element", r))?;
        if !seen.insert((i, j)) {
            return Err(loc.error(
                p.span(),
                SpecErrorKind::Duplicate {
                    kind: "product",
                    name: format!("{l}·{r}"),
                },
            ));
        }
        let v = scalars(loc, p.span(), v, field)?;
        if v.len() != dim {
            return Err(loc.error(
                p.span(),
                SpecErrorKind::MalformedMatrix(format!(
                    "product has {} entries for dimension {dim}",
                    v.len()
                )),
            ));
        }
        table[i * dim + j] = v;
    }
    FinAlgebra::new(field, basis.clone(), table, unit_v)
        .map_err(|e| loc.invalid(a.span(), e.to_string()))
}

fn resolve_precosheaf(
    loc: &Locator,
    name: &str,
    p: &Spanned<RawPrecosheaf>,
    categories: &IndexMap<String, Arc<FinCategory>>,
    algebras: &IndexMap<String, Arc<FinAlgebra>>,
    field: Field,
) -> Result<Precosheaf, SpecError> {
    let raw = p.get_ref();
    let c = lookup(loc, categories, "category", &raw.category)?.clone();
    for (o, a) in &raw.algebras {
        if c.object_index(o).is_none() {
            return Err(loc.unknown(a.span(), "object", o));
        }
    }
    let obj_alg: Vec<Arc<FinAlgebra>> = c
        .objects()
        .map(|x| {
            let o = c.object_name(x);
            let a = raw.algebras.get(o).ok_or_else(|| {
                loc.invalid(raw.category.span(), format!("no algebra for object {o:?}"))
            })?;
            lookup(loc, algebras, "algebra", a).cloned()
        })
        .collect::<Result<_, _>>()?;
    for (m, rows) in &raw.homs {
        if c.morphism_index(m).is_none() {
            return Err(loc.unknown(rows.span(), "morphism", m));
        }
    }
    let mut homs = Vec::with_capacity(c.num_morphisms());
    for f in c.morphisms() {
        let (a, b) = (&obj_alg[c.dom(f).0], &obj_alg[c.cod(f).0]);
        let m = match raw.homs.get(c.morphism_name(f)) {
            Some(rows) => {
                let span = rows.span();
                let malformed =
                    |msg: String| loc.error(span.clone(), SpecErrorKind::MalformedMatrix(msg));
                if rows.get_ref().len() != b.dim() {
                    return Err(malformed(format!(
                        "{} needs {} rows, found {}",
                        c.morphism_name(f),
                        b.dim(),
                        rows.get_ref().len()
                    )));
                }
                let parsed = rows
                    .get_ref()
                    .iter()
                    .map(|r| {
                        if r.len() != a.dim() {
                            return Err(malformed(format!(
                                "{} needs {} columns, found {}",
                                c.morphism_name(f),
                                a.dim(),
                                r.len()
                            )));
                        }
                        scalars(loc, span.clone(), r, field)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                LinearMap::from_rows(field, a.dim(), parsed)
                    .map_err(|e| malformed(e.to_string()))?
            }
            None if c.is_identity(f) => LinearMap::identity(field, a.dim()),
            None => {
                return Err(loc.invalid(
                    p.span(),
                    format!("no hom for non-identity morphism {:?}", c.morphism_name(f)),
                ))
            }
        };
        homs.push(
            AlgebraHom::new(a.clone(), b.clone(), m)
                .map_err(|e| loc.invalid(p.span(), e.to_string()))?,
        );
    }
    Precosheaf::new(name, c, obj_alg, homs).map_err(|e| loc.invalid(p.span(), e.to_string()))
}

impl WorkbenchSpec {
    fn default_precosheaf(
        &self,
        functor: Option<&Functor>,
    ) -> Result<(String, Precosheaf), String> {
        let candidates: Vec<_> = self
            .precosheaves
            .iter()
            .filter(|(_, p)| functor.is_none_or(|f| **p.category() == **f.source()))
            .collect();
        match candidates.as_slice() {
            [(n, p)] => Ok(((*n).clone(), (*p).clone())),
            [] => Err("no precosheaf to use".into()),
            _ => Err("several precosheaves fit; name one".into()),
        }
    }

    fn default_functor(&self) -> Result<(String, Functor), String> {
        match self.functors.len() {
            1 => {
                let (n, f) = self.functors.first().expect("one functor");
                Ok((n.clone(), f.clone()))
            }
            0 => Err("no functor to use".into()),
            _ => Err("several functors declared; name one".into()),
        }
    }

    fn get<T: Clone>(
        map: &IndexMap<String, T>,
        kind: &str,
        name: &str,
    ) -> Result<(String, T), String> {
        map.get(name)
            .map(|v| (name.to_string(), v.clone()))
            .ok_or_else(|| format!("unknown {kind} {name:?}"))
    }

    /// Resolves a task, filling in unnamed arguments when the choice is
    /// unambiguous.
    pub fn task(&self, command: Command, args: &TaskArgs) -> Result<Task, String> {
        let functor = || match &args.functor {
            Some(n) => Self::get(&self.functors, "functor", n),
            None => self.default_functor(),
        };
        let precosheaf = |f: Option<&Functor>| match &args.precosheaf {
            Some(n) => Self::get(&self.precosheaves, "precosheaf", n),
            None => self.default_precosheaf(f),
        };
        let target = match command.needs() {
            Needs::Nothing => Target::Everything,
            Needs::Category => {
                let (n, c) = match &args.category {
                    Some(n) => Self::get(&self.categories, "category", n)?,
                    None if self.categories.len() == 1 => {
                        let (n, c) = self.categories.first().expect("one category");
                        (n.clone(), c.clone())
                    }
                    None => {
                        let (_, p) = precosheaf(None)?;
                        let c = p.category().clone();
                        let n = self
                            .categories
                            .iter()
                            .find(|(_, d)| ***d == *c)
                            .map(|(n, _)| n.clone())
                            .ok_or("precosheaf category is not declared")?;
                        (n, c)
                    }
                };
                Target::Category(n, c)
            }
            Needs::Precosheaf => {
                let (n, p) = precosheaf(None)?;
                Target::Precosheaf(n, p)
            }
            Needs::Functor => {
                let (n, f) = functor()?;
                Target::Functor(n, f)
            }
            Needs::Induction => {
                let f = functor()?;
                let p = precosheaf(Some(&f.1))?;
                Target::Induction {
                    functor: f,
                    precosheaf: p,
                }
            }
        };
        Ok(Task { command, target })
    }
}
