//! Executes resolved tasks against the core library.

use std::time::Instant;

use catalg_core::algstruct::{validate_algebra, validate_graded, validate_precosheaf};
use catalg_core::constructions::{
    category_algebra, check_embedding, check_weak_bialgebra_unit_failure, object_tensor_algebra,
    paper_twisting_map, skew_category_algebra, twisted_tensor_product, validate_twisting,
};
use catalg_core::fincat::{check_condition_423, validate_category, validate_functor};
use catalg_core::induction::{
    puig_induce, skew_as_interior, theta_check, thm13_isomorphism, turull_induce, verify_lemma42,
    InductionContext, InductionError,
};
use catalg_core::report::ValidationReport;
use indexmap::IndexMap;
use rayon::prelude::*;

use crate::report::{Report, Status, TaskResult};
use crate::spec::{Command, Target, Task, WorkbenchSpec};

/// Collects metrics and witnesses while a task runs.
#[derive(Default)]
struct Outcome {
    metrics: IndexMap<String, String>,
    witnesses: Vec<String>,
    failed: bool,
}

impl Outcome {
    fn metric(&mut self, key: &str, value: impl ToString) {
        self.metrics.insert(key.to_string(), value.to_string());
    }

    fn require(&mut self, ok: bool, what: &str) {
        self.metric(what, ok);
        if !ok {
            self.failed = true;
        }
    }

    fn absorb(&mut self, context: &str, r: &ValidationReport) {
        if !r.is_ok() {
            self.failed = true;
        }
        for v in &r.violations {
            self.witnesses.push(format!("{context}: {v}"));
        }
    }
}

/// Runs every task in order, or concurrently with `parallel`; results keep
/// the task order either way.
pub fn run(spec: &WorkbenchSpec, parallel: bool) -> Report {
    let one = |(i, t): (usize, &Task)| run_task(spec, i + 1, t);
    let tasks = if parallel {
        spec.tasks.par_iter().enumerate().map(one).collect()
    } else {
        spec.tasks.iter().enumerate().map(one).collect()
    };
    Report { tasks }
}

pub fn run_task(spec: &WorkbenchSpec, index: usize, task: &Task) -> TaskResult {
    let start = Instant::now();
    let mut out = Outcome::default();
    let result = execute(spec, task, &mut out);
    let (status, error) = match result {
        Ok(()) if out.failed => (Status::Fail, None),
        Ok(()) => (Status::Pass, None),
        Err(e) => (Status::Error, Some(e)),
    };
    TaskResult {
        index,
        command: task.command.as_str().to_string(),
        arguments: task
            .arguments()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        status,
        metrics: out.metrics,
        witnesses: out.witnesses,
        error,
        duration: start.elapsed(),
    }
}

fn context(
    functor: &catalg_core::fincat::Functor,
    precosheaf: &catalg_core::algstruct::Precosheaf,
) -> Result<InductionContext, String> {
    InductionContext::new(functor.clone(), precosheaf.clone()).map_err(|e| e.to_string())
}

fn execute(spec: &WorkbenchSpec, task: &Task, out: &mut Outcome) -> Result<(), String> {
    let field = spec.field;
    match (&task.command, &task.target) {
        (Command::Check, _) => {
            for (n, c) in &spec.categories {
                out.absorb(&format!("category {n}"), &validate_category(c));
            }
            for (n, f) in &spec.functors {
                out.absorb(&format!("functor {n}"), &validate_functor(f));
            }
            for (n, a) in &spec.algebras {
                out.absorb(&format!("algebra {n}"), &validate_algebra(a));
            }
            for (n, p) in &spec.precosheaves {
                out.absorb(&format!("precosheaf {n}"), &validate_precosheaf(p));
            }
            out.metric("categories", spec.categories.len());
            out.metric("functors", spec.functors.len());
            out.metric("algebras", spec.algebras.len());
            out.metric("precosheaves", spec.precosheaves.len());
        }
        (Command::BuildKc, Target::Category(_, c)) => {
            let a = category_algebra(c, field);
            out.metric("dim", a.dim());
            out.absorb("kC", &validate_algebra(&a));
        }
        (Command::BuildSkew, Target::Precosheaf(_, p)) => {
            let g = skew_category_algebra(p);
            let c = p.category();
            let expected: usize = c.morphisms().map(|f| p.algebra(c.cod(f)).dim()).sum();
            out.metric("dim", g.algebra.dim());
            out.require(g.algebra.dim() == expected, "dim_matches_sum");
            out.absorb("skew algebra", &validate_algebra(&g.algebra));
            out.absorb("grading", &validate_graded(&g));
        }
        (Command::BuildTensor, Target::Precosheaf(_, p)) => {
            let a = object_tensor_algebra(p);
            out.metric("dim", a.dim());
            out.absorb("tensor algebra", &validate_algebra(&a));
        }
        (Command::BuildTtp, Target::Precosheaf(_, p)) => {
            let t = paper_twisting_map(p);
            match twisted_tensor_product(&t) {
                Ok(a) => {
                    out.metric("dim", a.dim());
                    out.absorb("twisted tensor product", &validate_algebra(&a));
                }
                Err(e) => {
                    out.failed = true;
                    out.witnesses.push(e.to_string());
                }
            }
        }
        (Command::VerifyTwisting, Target::Precosheaf(_, p)) => {
            let t = paper_twisting_map(p);
            out.metric("dim_a", t.alg_a.dim());
            out.metric("dim_b", t.alg_b.dim());
            out.absorb("twisting", &validate_twisting(&t));
        }
        (Command::VerifyThm11, Target::Precosheaf(_, p)) => {
            let r = check_embedding(p);
            out.metric("dim_skew", r.dim_skew);
            out.metric("dim_twisted", r.dim_twisted);
            out.metric("rank_psi", r.rank_psi);
            out.absorb("twisting", &r.twisting);
            out.absorb("twisted algebra", &r.twisted_algebra);
            out.absorb("Ψ", &r.psi_hom);
            out.require(r.phi_psi_identity, "phi_psi_identity");
            out.require(r.phi_graded, "phi_graded");
            out.require(r.injective, "injective");
            if r.one_object {
                out.require(r.surjective, "surjective");
            } else {
                out.metric("surjective", r.surjective);
            }
        }
        (Command::VerifyCond423, Target::Functor(_, f)) => {
            let r = check_condition_423(f).map_err(|e| e.to_string())?;
            out.require(r.holds, "holds");
            out.witnesses
                .extend(r.witnesses.iter().map(|w| w.to_string()));
        }
        (
            Command::VerifyLemma42,
            Target::Induction {
                functor,
                precosheaf,
            },
        ) => {
            let ctx = context(&functor.1, &precosheaf.1)?;
            out.metric("condition_423", ctx.condition_423.holds);
            let r = verify_lemma42(&ctx).map_err(|e| e.to_string())?;
            out.metric(
                "monoid_size",
                r.witnesses.len() / ctx.source().num_morphisms().max(1),
            );
            out.require(r.commutation_holds, "commutation");
            out.require(r.ms_agree.iter().all(|&b| b), "ms_descriptions_agree");
            for w in r
                .witnesses
                .iter()
                .filter(|w| w.right.is_none() || w.left.is_none())
            {
                out.witnesses.push(format!(
                    "no commuting partner for {} with {}",
                    w.element, w.morphism
                ));
            }
        }
        (
            Command::InductTurull,
            Target::Induction {
                functor,
                precosheaf,
            },
        ) => {
            let ctx = context(&functor.1, &precosheaf.1)?;
            let t = turull_induce(&ctx).map_err(|e| e.to_string())?;
            let c = ctx.target();
            let dims: Vec<String> = c
                .objects()
                .map(|x| format!("{}:{}", c.object_name(x), t.subspaces[x.0].dim()))
                .collect();
            out.metric("ms_dims", dims.join(","));
            out.absorb("IndT", &t.report);
        }
        (
            Command::InductPuig,
            Target::Induction {
                functor,
                precosheaf,
            },
        ) => {
            let ctx = context(&functor.1, &precosheaf.1)?;
            let ia = skew_as_interior(&ctx.precosheaf);
            let p = puig_induce(&ctx, &ia).map_err(|e| e.to_string())?;
            out.metric("dim_source", ia.algebra.dim());
            out.metric("monoid_size", p.monoid.len());
            out.metric("dim_relations", p.relations.dim());
            out.metric("dim_quotient", p.quotient.dim());
            out.metric("dim_induced", p.algebra.dim());
            out.absorb("IndP", &p.algebra_report);
            out.absorb("τ̄", &p.tau_bar_report);
        }
        (
            Command::VerifyThm13,
            Target::Induction {
                functor,
                precosheaf,
            },
        ) => {
            let ctx = context(&functor.1, &precosheaf.1)?;
            let r = match thm13_isomorphism(&ctx) {
                Ok(r) => r,
                Err(InductionError::ConditionFails(w)) => {
                    out.failed = true;
                    out.witnesses.push(format!("fiber condition fails: {w}"));
                    return Ok(());
                }
                Err(e) => return Err(e.to_string()),
            };
            out.metric("dims", format!("{}={}", r.dim_turull_skew, r.dim_puig));
            out.require(r.dim_puig == r.expected_dim, "dim_crosscheck");
            out.require(r.is_unital, "unital");
            out.require(r.is_multiplicative, "multiplicative");
            out.require(r.is_bijective, "bijective");
            out.require(r.is_graded, "graded");
            out.require(r.is_interior_compatible, "interior_compatible");
            out.absorb("ψ", &r.violations);
            // θ is reported but does not decide the status.
            let t = theta_check(&ctx).map_err(|e| e.to_string())?;
            out.metric("theta_well_defined", t.well_defined);
            out.metric(
                "theta_well_defined_on_invariants",
                t.well_defined_on_invariants,
            );
            out.metric("theta_equivariant", t.equivariant);
            out.metric("theta_fixed_dim", t.fixed_dim);
        }
        (Command::VerifyWeakBialg, Target::Category(_, c)) => {
            let r = check_weak_bialgebra_unit_failure(c, field);
            out.require(r.delta_multiplicative, "delta_multiplicative");
            // Δ(1) = 1⊗1 exactly when the category has a single object.
            out.metric("unit_axiom_holds", r.unit_axiom_holds);
            out.require(
                r.unit_axiom_holds == (c.num_objects() == 1),
                "unit_behaviour_as_expected",
            );
            out.witnesses.extend(r.witnesses);
        }
        (cmd, _) => return Err(format!("{} got the wrong kind of target", cmd.as_str())),
    }
    Ok(())
}
