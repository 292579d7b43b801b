//! Small named categories, functors and precosheaves used across tests,
//! the acceptance suite and the command-line tool.

use std::sync::Arc;

use crate::algstruct::{AlgebraHom, FinAlgebra, Precosheaf};
use crate::fincat::{FinCategory, Functor};
use crate::linalg::{Field, LinearMap};

/// A complete induction setup: functor `s: D → C` and a precosheaf on `D`.
#[derive(Clone, Debug)]
pub struct InductionFixture {
    pub functor: Functor,
    pub precosheaf: Precosheaf,
}

fn matrix(field: Field, rows: &[&[i64]]) -> LinearMap {
    let cols = rows.first().map_or(0, |r| r.len());
    LinearMap::from_rows(
        field,
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect(),
    )
    .expect("fixture matrix")
}

fn hom(a: &Arc<FinAlgebra>, b: &Arc<FinAlgebra>, m: LinearMap) -> AlgebraHom {
    AlgebraHom::new(a.clone(), b.clone(), m).expect("fixture hom")
}

/// The swap `e1 ↔ e2` on `k×k`.
pub fn swap(field: Field) -> LinearMap {
    matrix(field, &[&[0, 1], &[1, 0]])
}

/// The unital map `k×k → k×k` with `e1 ↦ 1`, `e2 ↦ 0`.
pub fn collapse_to_first(field: Field) -> LinearMap {
    matrix(field, &[&[1, 0], &[1, 0]])
}

/// Two objects `x, y`, morphisms `1_x, 1_y, f1: x → y, f2: y → y` with
/// `f2 ∘ f2 = 1_y` and `f2 ∘ f1 = f1`.
pub fn two_object_d() -> FinCategory {
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
    .expect("D")
}

/// The arrow category `x' → y'`.
pub fn two_object_c() -> FinCategory {
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
    .expect("C")
}

/// `D → C` collapsing `f2` onto `1_y'`.
pub fn collapse_functor() -> Functor {
    Functor::new(
        "s",
        Arc::new(two_object_d()),
        Arc::new(two_object_c()),
        &[("x", "x'"), ("y", "y'")],
        &[
            ("1_x", "1_x'"),
            ("1_y", "1_y'"),
            ("f1", "f1'"),
            ("f2", "1_y'"),
        ],
    )
    .expect("s")
}

/// `S(x) = S(y) = k×k`, `S(f1) = (e1 ↦ 1, e2 ↦ 0)`, `S(f2) = swap`.
pub fn swap_precosheaf(field: Field) -> Precosheaf {
    let d = Arc::new(two_object_d());
    let kk = Arc::new(FinAlgebra::product_of_fields(field, 2));
    let id = LinearMap::identity(field, 2);
    Precosheaf::new(
        "S",
        d,
        vec![kk.clone(), kk.clone()],
        vec![
            hom(&kk, &kk, id.clone()),
            hom(&kk, &kk, id),
            hom(&kk, &kk, collapse_to_first(field)),
            hom(&kk, &kk, swap(field)),
        ],
    )
    .expect("S")
}

pub fn example43b(field: Field) -> InductionFixture {
    InductionFixture {
        functor: collapse_functor(),
        precosheaf: swap_precosheaf(field),
    }
}

/// The cyclic group of order 2 as a one-object category `{1, t}`.
pub fn cyclic2() -> FinCategory {
    FinCategory::monoid("C2", "*", &["1", "t"], |a, b| (a + b) % 2).expect("C2")
}

/// `k×k` on the one object of C2 with `t` acting by the swap.
pub fn c2_swap_precosheaf(field: Field) -> Precosheaf {
    let c = Arc::new(cyclic2());
    let kk = Arc::new(FinAlgebra::product_of_fields(field, 2));
    Precosheaf::new(
        "R",
        c,
        vec![kk.clone()],
        vec![
            hom(&kk, &kk, LinearMap::identity(field, 2)),
            hom(&kk, &kk, swap(field)),
        ],
    )
    .expect("R on C2")
}

/// Identity functor on C2 with the swap precosheaf.
pub fn monoid_c2(field: Field) -> InductionFixture {
    let p = c2_swap_precosheaf(field);
    InductionFixture {
        functor: Functor::identity(p.category().clone()),
        precosheaf: p,
    }
}

/// The poset `x < y < z` with arrows `a: x → y`, `b: y → z`, `ba: x → z`.
pub fn chain3() -> FinCategory {
    FinCategory::new(
        "chain3",
        &["x", "y", "z"],
        &[
            ("1_x", "x", "x"),
            ("1_y", "y", "y"),
            ("1_z", "z", "z"),
            ("a", "x", "y"),
            ("b", "y", "z"),
            ("ba", "x", "z"),
        ],
        &[("x", "1_x"), ("y", "1_y"), ("z", "1_z")],
        &[
            ("1_x", "1_x", "1_x"),
            ("1_y", "1_y", "1_y"),
            ("1_z", "1_z", "1_z"),
            ("a", "1_x", "a"),
            ("1_y", "a", "a"),
            ("b", "1_y", "b"),
            ("1_z", "b", "b"),
            ("ba", "1_x", "ba"),
            ("1_z", "ba", "ba"),
            ("b", "a", "ba"),
        ],
    )
    .expect("chain3")
}

/// `R(x) = R(y) = k`, `R(z) = k×k`; `b` and `ba` are the unit map of
/// `k×k`, `a` is the identity of `k`.
pub fn chain3_precosheaf(field: Field) -> Precosheaf {
    let c = Arc::new(chain3());
    let kk = Arc::new(FinAlgebra::product_of_fields(field, 2));
    let k = Arc::new(FinAlgebra::ground_field(field));
    let unit = matrix(field, &[&[1], &[1]]);
    let id1 = LinearMap::identity(field, 1);
    Precosheaf::new(
        "R",
        c,
        vec![k.clone(), k.clone(), kk.clone()],
        vec![
            hom(&k, &k, id1.clone()),
            hom(&k, &k, id1.clone()),
            hom(&kk, &kk, LinearMap::identity(field, 2)),
            hom(&k, &k, id1),
            hom(&k, &kk, unit.clone()),
            hom(&k, &kk, unit),
        ],
    )
    .expect("R on chain3")
}

pub fn poset_chain3(field: Field) -> InductionFixture {
    let p = chain3_precosheaf(field);
    InductionFixture {
        functor: Functor::identity(p.category().clone()),
        precosheaf: p,
    }
}

/// C2 collapsed onto the trivial group, with the swap action on `k×k`.
pub fn groupoid_c2_to_triv(field: Field) -> InductionFixture {
    let p = c2_swap_precosheaf(field);
    InductionFixture {
        functor: Functor::to_point(p.category().clone()),
        precosheaf: p,
    }
}

/// Two parallel arrows `f, g: x → y`.
pub fn parallel_pair() -> FinCategory {
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
    .expect("parallel pair")
}

/// Parallel arrows identified by a functor onto the arrow category, with
/// `S = k` everywhere.
pub fn parallel_collapse(field: Field) -> InductionFixture {
    let p = Arc::new(parallel_pair());
    let functor = Functor::new(
        "collapse",
        p.clone(),
        Arc::new(two_object_c()),
        &[("x", "x'"), ("y", "y'")],
        &[("1_x", "1_x'"), ("1_y", "1_y'"), ("f", "f1'"), ("g", "f1'")],
    )
    .expect("collapse");
    let k = Arc::new(FinAlgebra::ground_field(field));
    InductionFixture {
        functor,
        precosheaf: Precosheaf::constant("k", p, k),
    }
}

/// Every bundled fixture with its name.
pub fn all(field: Field) -> Vec<(&'static str, InductionFixture)> {
    vec![
        ("example43b", example43b(field)),
        ("monoid_c2", monoid_c2(field)),
        ("poset_chain3", poset_chain3(field)),
        ("groupoid_c2_to_triv", groupoid_c2_to_triv(field)),
        ("parallel_collapse", parallel_collapse(field)),
    ]
}
