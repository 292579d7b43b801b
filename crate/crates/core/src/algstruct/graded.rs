use std::sync::Arc;

use super::{validate_algebra, validate_hom, AlgebraHom, FinAlgebra};
use crate::fincat::{FinCategory, MorId};
use crate::report::ValidationReport;

/// An algebra whose basis is partitioned by the morphisms of a category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub algebra: Arc<FinAlgebra>,
    pub grading: Arc<FinCategory>,
    pub degree: Vec<MorId>,
}

impl GradedAlgebra {
    /// Basis indices of the homogeneous component of degree `f`.
    pub fn component(&self, f: MorId) -> Vec<usize> {
        (0..self.degree.len())
            .filter(|&i| self.degree[i] == f)
            .collect()
    }
}

/// Checks the homogeneous product rule on every basis pair: products of
/// non-composable degrees vanish and composable ones land in the degree of
/// the composite.
pub fn validate_graded(g: &GradedAlgebra) -> ValidationReport {
    let a = &*g.algebra;
    let c = &*g.grading;
    let mut report = ValidationReport::new();
    if g.degree.len() != a.dim() {
        report.push(
            "grading shape",
            format!("{} degrees for dim {}", g.degree.len(), a.dim()),
        );
        return report;
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (du, dv) = (g.degree[i], g.degree[j]);
            let p = a.basis_product(i, j);
            let expected = if c.composable(du, dv) {
                c.comp(du, dv)
            } else {
                None
            };
            for (k, coeff) in p.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                if Some(g.degree[k]) != expected {
                    report.push(
                        "homogeneous product",
                        format!(
                            "{}·{} has {} in degree {} (degrees {} and {})",
                            a.label(i),
                            a.label(j),
                            a.label(k),
                            c.morphism_name(g.degree[k]),
                            c.morphism_name(du),
                            c.morphism_name(dv)
                        ),
                    );
                }
            }
        }
    }
    report
}

/// An algebra together with a structural homomorphism from a base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteriorAlgebra {
    pub algebra: Arc<FinAlgebra>,
    pub base: Arc<FinAlgebra>,
    pub structural: AlgebraHom,
}

pub fn validate_interior(ia: &InteriorAlgebra) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.extend_with_context("algebra", validate_algebra(&ia.algebra));
    if *ia.structural.source != *ia.base || *ia.structural.target != *ia.algebra {
        report.push(
            "structural endpoints",
            "structural map does not go from base to algebra",
        );
    }
    report.extend_with_context("structural", validate_hom(&ia.structural));
    report
}
