use std::sync::Arc;

use catalg_core::algstruct::{
    module_to_precosheaf, precosheaf_to_module, validate_algebra, FinAlgebra, Precosheaf,
};
use catalg_core::constructions::{category_algebra, object_tensor_algebra, skew_category_algebra};
use catalg_core::fincat::{validate_category, FinCategory};
use catalg_core::fixtures;
use catalg_core::induction::{thm13_isomorphism, InductionContext};
use catalg_core::linalg::{quotient_map, Field, LinearMap, Scalar, Subspace};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::Prime(3)),
        Just(Field::Prime(7)),
        Just(Field::Prime(101)),
    ]
}

fn matrix(field: Field, rows: usize, cols: usize, entries: &[i64]) -> LinearMap {
    LinearMap::from_rows(
        field,
        cols,
        (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| field.from_int(entries[i * cols + j]))
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

fn small_matrix() -> impl Strategy<Value = (Field, usize, usize, Vec<i64>)> {
    (field_strategy(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| {
        (
            Just(f),
            Just(r),
            Just(c),
            prop::collection::vec(-3i64..4, r * c),
        )
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_width((field, r, c, e) in small_matrix()) {
        let m = matrix(field, r, c, &e);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), c);
        for v in k.basis() {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
    }

    #[test]
    fn spans_are_canonical((field, r, c, e) in small_matrix(), scale in 1i64..5) {
        let m = matrix(field, r, c, &e);
        let rows: Vec<Vec<Scalar>> = (0..r).map(|i| (0..c).map(|j| m.get(i, j).clone()).collect()).collect();
        let a = Subspace::span(field, c, rows.clone());
        let mut shuffled: Vec<Vec<Scalar>> = rows.iter().rev().cloned().collect();
        let s = field.from_int(scale);
        if !s.is_zero() {
            shuffled[0] = shuffled[0].iter().map(|x| x * &s).collect();
        }
        let sum: Vec<Scalar> = rows[0].iter().zip(rows.last().unwrap()).map(|(x, y)| x + y).collect();
        shuffled.push(sum);
        prop_assert_eq!(a, Subspace::span(field, c, shuffled));
    }

    #[test]
    fn quotient_section_splits((field, r, c, e) in small_matrix()) {
        let m = matrix(field, r, c, &e);
        let n = m.kernel();
        let q = quotient_map(c, &n).unwrap();
        prop_assert_eq!(q.dim(), c - n.dim());
        prop_assert_eq!(q.proj.compose(&q.section).unwrap(), LinearMap::identity(field, q.dim()));
        for v in n.basis() {
            prop_assert!(q.proj.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_when_full_rank((field, n, _, e) in small_matrix().prop_filter("square", |(_, r, c, _)| r == c)) {
        let m = matrix(field, n, n, &e);
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(field, n)),
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn mitchell_round_trip(field in field_strategy(), which in 0usize..5) {
        let (_, fx) = fixtures::all(field).swap_remove(which);
        let s = &fx.precosheaf;
        let back = module_to_precosheaf(&precosheaf_to_module(s));
        for f in s.category().morphisms() {
            prop_assert_eq!(back.map(f), &s.hom(f).map);
        }
    }

    /// Cyclic monoids `t^m = t^(m - period)` give valid categories whose
    /// category algebras are associative and unital.
    #[test]
    fn cyclic_monoid_algebras(field in field_strategy(), size in 1usize..6, period in 1usize..6) {
        let period = period.min(size);
        let names: Vec<String> = (0..size).map(|i| format!("t{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let reduce = move |k: usize| if k < size { k } else { size - period + (k - size) % period };
        let c = FinCategory::monoid("M", "*", &refs, move |a, b| reduce(a + b)).unwrap();
        prop_assert!(validate_category(&c).is_ok());
        prop_assert!(validate_algebra(&category_algebra(&c, field)).is_ok());
    }

    /// Constant precosheaves with a matrix algebra value: dimensions of the
    /// skew algebra and of the object tensor algebra.
    #[test]
    fn dimension_identities(field in field_strategy(), n in 1usize..3, which in 0usize..5) {
        let (_, fx) = fixtures::all(field).swap_remove(which);
        let c = fx.precosheaf.category().clone();
        let a = Arc::new(FinAlgebra::matrix_algebra(field, n));
        let p = Precosheaf::constant("M", c.clone(), a);
        prop_assert_eq!(skew_category_algebra(&p).algebra.dim(), n * n * c.num_morphisms());
        prop_assert_eq!(object_tensor_algebra(&p).dim(), (n * n).pow(c.num_objects() as u32));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Away from characteristic two the comparison is an isomorphism on
    /// every fixture satisfying the fiber condition.
    #[test]
    fn comparison_is_iso_in_odd_characteristic(field in field_strategy(), which in 0usize..4) {
        let (_, fx) = fixtures::all(field).swap_remove(which);
        let cx = InductionContext::new(fx.functor, fx.precosheaf).unwrap();
        let r = thm13_isomorphism(&cx).unwrap();
        prop_assert!(r.passes(), "{}", r.violations);
    }
}
