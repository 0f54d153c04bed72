use std::collections::BTreeSet;

use proptest::prelude::*;
use sbgroups::boolean::{iterate, op_d, op_i, op_r, op_v, ring_closure, symmetrize, BoolFamily};
use sbgroups::catalog;
use sbgroups::monomial::{evaluate, is_homogeneous, Letter, Monomial};
use sbgroups::product::{group_closure_step, PowerGroup, ProductElement};
use sbgroups::series::{central_series, normal_closure};
use sbgroups::{ElementSet, FiniteGroup};

fn small_groups() -> Vec<FiniteGroup> {
    catalog::all().into_iter().filter(|g| g.order() <= 24).collect()
}

fn family(universe: usize) -> impl Strategy<Value = BoolFamily> {
    prop::collection::vec(0u32..(1 << universe), 0..12)
        .prop_map(move |masks| BoolFamily::from_masks(universe, masks).unwrap())
}

fn word(order: usize, arity: usize) -> impl Strategy<Value = Vec<Letter>> {
    let letter = prop_oneof![
        (0..order).prop_map(Letter::Const),
        (0..arity, prop::bool::ANY).prop_map(|(pos, pos_exp)| Letter::Var { pos, exp: if pos_exp { 1 } else { -1 } }),
    ];
    prop::collection::vec(letter, 0..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operators_are_extensive_and_monotone(f in family(4), g in family(4)) {
        let g = f.union(&g);
        for op in [op_r, op_d, ring_closure] {
            prop_assert!(f.is_subset(&op(&f)));
            prop_assert!(op(&f).is_subset(&op(&g)));
        }
        for k in 1..=3 {
            prop_assert!(f.is_subset(&op_v(k, &f).unwrap()) || !f.contains(0) && k > 1);
            prop_assert!(op_i(k, &f).unwrap().is_subset(&op_i(k, &g).unwrap()));
            prop_assert!(op_v(k, &f).unwrap().is_subset(&op_v(k, &g).unwrap()));
            prop_assert!(op_i(k, &f).unwrap().is_subset(&op_i(k + 1, &f).unwrap()));
        }
    }

    #[test]
    fn disjoint_sums_within_ring_operator(f in family(5)) {
        prop_assert!(op_d(&f).is_subset(&op_r(&f)));
        prop_assert!(iterate(op_r, &f, 4).is_subset(&ring_closure(&f)));
    }

    #[test]
    fn symmetrize_is_idempotent(f in family(5)) {
        let s = symmetrize(&f);
        prop_assert!(s.is_symmetric_with_zero());
        prop_assert_eq!(symmetrize(&s), s);
    }

    #[test]
    fn evaluation_respects_concatenation(gi in 0usize..1000, u in word(24, 2), v in word(24, 2), x in 0usize..24, y in 0usize..24) {
        let groups = small_groups();
        let g = &groups[gi % groups.len()];
        let clip = |w: Vec<Letter>| -> Vec<Letter> {
            w.into_iter().map(|l| match l { Letter::Const(c) => Letter::Const(c % g.order()), v => v }).collect()
        };
        let u = Monomial::new(2, clip(u)).unwrap();
        let v = Monomial::new(2, clip(v)).unwrap();
        let args = [x % g.order(), y % g.order()];
        let lhs = evaluate(g, &u.concat(&v).unwrap(), &args).unwrap();
        let rhs = g.mul(evaluate(g, &u, &args).unwrap(), evaluate(g, &v, &args).unwrap());
        prop_assert_eq!(lhs, rhs);
        let inv = evaluate(g, &u.inverse(g), &args).unwrap();
        prop_assert_eq!(g.mul(inv, evaluate(g, &u, &args).unwrap()), 0);
        prop_assert_eq!(evaluate(g, &u.reduced(g), &args).unwrap(), evaluate(g, &u, &args).unwrap());
    }

    #[test]
    fn commutator_with_homogeneous_is_homogeneous(gi in 0usize..1000, u in word(24, 2)) {
        let groups = small_groups();
        let g = &groups[gi % groups.len()];
        let u: Vec<Letter> = u.into_iter().filter(|l| matches!(l, Letter::Var { .. })).collect();
        let u = Monomial::new(2, u).unwrap();
        let c = Monomial::projection(2, 0).commutator(&Monomial::projection(2, 1), g).unwrap();
        prop_assert!(is_homogeneous(g, &c));
        let nested = u.commutator(&c, g).unwrap();
        prop_assert!(is_homogeneous(g, &nested));
    }

    #[test]
    fn closure_step_is_extensive_and_monotone(seed in prop::collection::vec((0usize..6, 0usize..6), 0..6), extra in prop::collection::vec((0usize..6, 0usize..6), 0..4)) {
        let g = catalog::s3();
        let x: BTreeSet<ProductElement> = seed.iter().map(|&(a, b)| ProductElement(vec![a, b])).collect();
        let mut y = x.clone();
        y.extend(extra.iter().map(|&(a, b)| ProductElement(vec![a, b])));
        let gx = group_closure_step(&g, 2, &x, 1 << 10).unwrap();
        let gy = group_closure_step(&g, 2, &y, 1 << 10).unwrap();
        prop_assert!(x.is_subset(&gx));
        prop_assert!(gx.is_subset(&gy));
    }

    #[test]
    fn normal_closure_is_normal(gi in 0usize..1000, elems in prop::collection::vec(0usize..60, 1..3)) {
        let groups = catalog::all();
        let g = &groups[gi % groups.len()];
        let seed = ElementSet::from_elems(g.order(), elems.iter().map(|&e| e % g.order()));
        let n = normal_closure(g, &seed);
        prop_assert!(seed.is_subset(&n));
        prop_assert!(n.is_subgroup(g));
        prop_assert!(n.is_normal(g));
    }
}

#[test]
fn closure_fixed_point_is_whole_power() {
    let g = catalog::s3();
    let power = PowerGroup::new(&g, 2);
    let mut x: BTreeSet<ProductElement> =
        g.generators().iter().flat_map(|&s| [ProductElement(vec![s, 0]), ProductElement(vec![0, s])]).collect();
    loop {
        let next = group_closure_step(&g, 2, &x, 1 << 10).unwrap();
        if next == x {
            break;
        }
        x = next;
    }
    assert_eq!(x.len() as u128, power.order());
}

#[test]
fn series_shape_on_catalog() {
    for g in catalog::all() {
        let s = central_series(&g);
        let d = &s.descending;
        let a = &s.ascending;
        assert!(d.windows(2).all(|w| w[1].is_subset(&w[0])));
        assert!(a.windows(2).all(|w| w[0].is_subset(&w[1])));
        assert_eq!(d[d.len() - 1], d[d.len().saturating_sub(2)]);
        assert_eq!(a[a.len() - 1], a[a.len().saturating_sub(2)]);
        assert_eq!(s.nilpotent, s.last_term.len() == 1);
        assert_eq!(s.nilpotent, s.hypercenter.len() == g.order());
        assert_eq!(s.perfect, s.derived.len() == g.order());
    }
}
