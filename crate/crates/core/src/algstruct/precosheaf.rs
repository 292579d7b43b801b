use std::sync::Arc;

use super::{validate_hom, AlgError, AlgebraHom, FinAlgebra};
use crate::fincat::{FinCategory, MorId, ObjId};
use crate::report::ValidationReport;

/// A covariant functor from a finite category to algebras: one algebra per
/// object and one homomorphism per morphism, both indexed in category order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precosheaf {
    name: String,
    category: Arc<FinCategory>,
    obj_alg: Vec<Arc<FinAlgebra>>,
    mor_hom: Vec<AlgebraHom>,
}

impl Precosheaf {
    pub fn new(
        name: impl Into<String>,
        category: Arc<FinCategory>,
        obj_alg: Vec<Arc<FinAlgebra>>,
        mor_hom: Vec<AlgebraHom>,
    ) -> Result<Self, AlgError> {
        if obj_alg.len() != category.num_objects() || mor_hom.len() != category.num_morphisms() {
            return Err(AlgError::Shape(format!(
                "precosheaf on {} needs {} algebras and {} homs",
                category.name(),
                category.num_objects(),
                category.num_morphisms()
            )));
        }
        Ok(Precosheaf {
            name: name.into(),
            category,
            obj_alg,
            mor_hom,
        })
    }

    /// The functor with value `alg` everywhere and identity maps.
    pub fn constant(
        name: impl Into<String>,
        category: Arc<FinCategory>,
        alg: Arc<FinAlgebra>,
    ) -> Self {
        let obj_alg = vec![alg.clone(); category.num_objects()];
        let mor_hom = vec![AlgebraHom::identity(alg); category.num_morphisms()];
        Precosheaf {
            name: name.into(),
            category,
            obj_alg,
            mor_hom,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    pub fn algebra(&self, x: ObjId) -> &Arc<FinAlgebra> {
        &self.obj_alg[x.0]
    }

    pub fn hom(&self, f: MorId) -> &AlgebraHom {
        &self.mor_hom[f.0]
    }

    pub fn algebras(&self) -> &[Arc<FinAlgebra>] {
        &self.obj_alg
    }

    pub fn field(&self) -> crate::linalg::Field {
        self.obj_alg
            .first()
            .map(|a| a.field())
            .unwrap_or(crate::linalg::Field::Rationals)
    }

    /// Substitutes `new` for every object algebra equal to `old`, including
    /// the endpoints of the homs. Used to build broken fixtures in tests.
    pub fn replace_algebra(&self, old: &FinAlgebra, new: Arc<FinAlgebra>) -> Precosheaf {
        let mut out = self.clone();
        for a in out.obj_alg.iter_mut().filter(|a| ***a == *old) {
            *a = new.clone();
        }
        for h in &mut out.mor_hom {
            if *h.source == *old {
                h.source = new.clone();
            }
            if *h.target == *old {
                h.target = new.clone();
            }
        }
        out
    }

    pub fn set_hom(&mut self, f: MorId, h: AlgebraHom) {
        self.mor_hom[f.0] = h;
    }
}

/// Checks endpoints, identities, composition and that every map is a unital
/// algebra homomorphism.
pub fn validate_precosheaf(r: &Precosheaf) -> ValidationReport {
    let c = &*r.category;
    let mut report = ValidationReport::new();
    for f in c.morphisms() {
        let h = r.hom(f);
        let name = c.morphism_name(f);
        if *h.source != **r.algebra(c.dom(f)) {
            report.push(
                "hom source",
                format!("R({name}) does not start at R(dom {name})"),
            );
        }
        if *h.target != **r.algebra(c.cod(f)) {
            report.push(
                "hom target",
                format!("R({name}) does not end at R(cod {name})"),
            );
        }
        report.extend_with_context(&format!("R({name})"), validate_hom(h));
    }
    for x in c.objects() {
        let id = c.identity(x);
        let h = r.hom(id);
        let a = r.algebra(x);
        if h.map != crate::linalg::LinearMap::identity(a.field(), a.dim()) {
            report.push(
                "preserves identities",
                format!("R({}) is not the identity", c.morphism_name(id)),
            );
        }
    }
    for g in c.morphisms() {
        for f in c.morphisms().filter(|&f| c.composable(g, f)) {
            let Some(gf) = c.comp(g, f) else { continue };
            match r.hom(g).map.compose(&r.hom(f).map) {
                Ok(m) if m == r.hom(gf).map => {}
                _ => report.push(
                    "preserves composition",
                    format!(
                        "R({0} ∘ {1}) ≠ R({0}) ∘ R({1}) at {0} ∘ {1} = {2}",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        c.morphism_name(gf)
                    ),
                ),
            }
        }
    }
    report
}
