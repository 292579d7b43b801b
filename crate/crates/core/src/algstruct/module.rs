//! Modules over category algebras and the correspondence with functors into
//! vector spaces.

use std::sync::Arc;

use super::Precosheaf;
use crate::fincat::{FinCategory, ObjId};
use crate::linalg::{Field, LinearMap, Subspace};
use crate::report::ValidationReport;

/// A left module over the category algebra of `category`: one square
/// matrix per morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatModule {
    pub category: Arc<FinCategory>,
    pub field: Field,
    pub dim: usize,
    pub action: Vec<LinearMap>,
}

pub fn validate_module(m: &CatModule) -> ValidationReport {
    let c = &*m.category;
    let mut report = ValidationReport::new();
    let mut unit = LinearMap::zeros(m.field, m.dim, m.dim);
    for x in c.objects() {
        unit = unit
            .add(&m.action[c.identity(x).0])
            .expect("square actions");
    }
    if unit != LinearMap::identity(m.field, m.dim) {
        report.push("unit acts as identity", "Σ_x 1_x ≠ id");
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            let prod = m.action[g.0]
                .compose(&m.action[f.0])
                .expect("square actions");
            match c.comp(g, f).filter(|_| c.composable(g, f)) {
                Some(gf) if prod != m.action[gf.0] => report.push(
                    "action compatible with composition",
                    format!("{} · {}", c.morphism_name(g), c.morphism_name(f)),
                ),
                None if !prod.is_zero() => report.push(
                    "non-composable product acts as zero",
                    format!("{} · {}", c.morphism_name(g), c.morphism_name(f)),
                ),
                _ => {}
            }
        }
    }
    report
}

/// Block offsets of `⊕_x dims[x]` in object order.
pub(crate) fn block_offsets(dims: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for d in dims {
        offsets.push(acc);
        acc += d;
    }
    offsets
}

/// `M_S = ⊕_x S(x)` with `f` acting by `S(f)` from the `dom f` block into
/// the `cod f` block and by zero on every other block.
pub fn precosheaf_to_module(s: &Precosheaf) -> CatModule {
    let c = s.category().clone();
    let field = s.field();
    let dims: Vec<usize> = c.objects().map(|x| s.algebra(x).dim()).collect();
    let offsets = block_offsets(&dims);
    let dim = dims.iter().sum();
    let action = c
        .morphisms()
        .map(|f| {
            let mut a = LinearMap::zeros(field, dim, dim);
            let (d, cd) = (c.dom(f).0, c.cod(f).0);
            let m = &s.hom(f).map;
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    a.set(offsets[cd] + i, offsets[d] + j, m.get(i, j).clone());
                }
            }
            a
        })
        .collect();
    CatModule {
        category: c,
        field,
        dim,
        action,
    }
}

/// Functor data into vector spaces: a subspace per object with its
/// echelon basis, and a matrix per morphism in those bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectFunctor {
    pub category: Arc<FinCategory>,
    pub spaces: Vec<Subspace>,
    pub maps: Vec<LinearMap>,
}

impl VectFunctor {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn map(&self, f: crate::fincat::MorId) -> &LinearMap {
        &self.maps[f.0]
    }

    pub fn space(&self, x: ObjId) -> &Subspace {
        &self.spaces[x.0]
    }
}

/// `x ↦ 1_x · M`, with `f` acting by restriction of the module action.
pub fn module_to_precosheaf(m: &CatModule) -> VectFunctor {
    let c = m.category.clone();
    let spaces: Vec<Subspace> = c
        .objects()
        .map(|x| m.action[c.identity(x).0].image())
        .collect();
    let maps = c
        .morphisms()
        .map(|f| {
            let (src, dst) = (&spaces[c.dom(f).0], &spaces[c.cod(f).0]);
            let cols: Vec<_> = src
                .basis()
                .iter()
                .map(|b| {
                    let img = m.action[f.0].apply(b);
                    dst.coordinates(&img)
                        .expect("module action lands in the codomain block")
                })
                .collect();
            LinearMap::from_columns(m.field, dst.dim(), &cols)
        })
        .collect();
    VectFunctor {
        category: c,
        spaces,
        maps,
    }
}
