//! Weight products, AM-algebra classification, roots, and the center.

mod common;

use amalg::falgebra::{
    am_product, classify_am_algebra, decide_central, mult_operator, nth_root, verify_falgebra_axioms, wx_membership,
    CentralSymbol, Product, Weight, WeightProduct,
};
use amalg::scalar::{int, one, q, zero};
use amalg::spectrum::{depth_for, dual_atoms_with_depth, evaluate_unit, norm_weakstar_continuous};
use amalg::{Element, ModelSpace, Rational};
use common::*;
use proptest::prelude::*;

/// A nonnegative weight in `W_X`: on sequences the tail is θ times the limit.
fn admissible_weight(space: &ModelSpace) -> BoxedStrategy<Weight> {
    match space {
        ModelSpace::FiniteSup { dual_weights } => {
            prop::collection::vec(nonnegative(), dual_weights.len()).prop_map(Weight::Finite).boxed()
        }
        ModelSpace::SeqLim { theta } => {
            let theta = theta.clone();
            (prop::collection::vec(nonnegative(), 0..=3), nonnegative())
                .prop_map(move |(p, s)| Weight::seq(p, &theta * &s, s))
                .boxed()
        }
        ModelSpace::SupDirectSum { left, right } => {
            (admissible_weight(left), admissible_weight(right)).prop_map(|(a, b)| Weight::pair(a, b)).boxed()
        }
        ModelSpace::FiniteAl { .. } => unreachable!(),
    }
}

fn space_weight_elements(k: usize) -> BoxedStrategy<(ModelSpace, Weight, Vec<Element>)> {
    am_space()
        .prop_flat_map(move |s| {
            let w = admissible_weight(&s);
            let xs = prop::collection::vec(element(&s), k);
            (Just(s), w, xs)
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn admissible_weights_give_f_algebra_products((s, w, _) in space_weight_elements(0)) {
        prop_assert!(wx_membership(&s, &w).unwrap().member);
        let p = WeightProduct::new(&s, w.clone()).unwrap();
        let report = verify_falgebra_axioms(&p, w.depth() + 1).unwrap();
        prop_assert!(report.accepted(), "{:?}", report.violations.first());
    }

    #[test]
    fn scaling_equivariance((s, w, v) in space_weight_elements(2), lambda in positive()) {
        let p = WeightProduct::new(&s, w.clone()).unwrap();
        let scaled = WeightProduct::new(&s, w.scale(&lambda)).unwrap();
        let base = p.mul(&v[0], &v[1]).unwrap();
        prop_assert_eq!(scaled.mul(&v[0], &v[1]).unwrap(), s.scale(&lambda, &base).unwrap());
    }

    #[test]
    fn classification_routes_agree(s in am_space()) {
        let c = classify_am_algebra(&s).unwrap();
        let one_weight = Weight::constant(&s, one()).unwrap();
        prop_assert_eq!(c.is_am_algebra, wx_membership(&s, &one_weight).unwrap().member);
        prop_assert_eq!(c.is_am_algebra, norm_weakstar_continuous(&s).unwrap().continuous);
    }

    #[test]
    fn unit_functionals_are_multiplicative((s, v) in with_elements(am_space(), 2)) {
        prop_assume!(classify_am_algebra(&s).unwrap().is_am_algebra);
        let p = am_product(&s).unwrap();
        let (x, y) = (&v[0], &v[1]);
        let xy = p.mul(x, y).unwrap();
        for u in dual_atoms_with_depth(&s, depth_for([x, y]) + 1) {
            let lhs = evaluate_unit(&s, &u, &xy).unwrap();
            prop_assert_eq!(lhs, evaluate_unit(&s, &u, x).unwrap() * evaluate_unit(&s, &u, y).unwrap());
        }
    }

    #[test]
    fn center_round_trip((s, h) in am_space().prop_flat_map(|s| {
        let h = admissible_weight(&s);
        (Just(s), h)
    })) {
        // Continuous symbols: make tails equal limits.
        let h = continuous(&h);
        let symbol = CentralSymbol::new(&s, h.clone()).unwrap();
        let d = decide_central(&mult_operator(&s, &symbol).unwrap()).unwrap().unwrap();
        prop_assert_eq!(d.symbol, symbol.clone());
        prop_assert_eq!(d.norm, symbol.sup_norm());
    }
}

fn continuous(h: &Weight) -> Weight {
    match h {
        Weight::Finite(v) => Weight::Finite(v.clone()),
        Weight::Seq { prefix, limit, .. } => Weight::seq(prefix.clone(), limit.clone(), limit.clone()),
        Weight::Pair(a, b) => Weight::pair(continuous(a), continuous(b)),
    }
}

/// Every grid point g ≥ 0 with `P(g, g) = x`, searching coordinates k/4.
fn grid_square_roots(s: &ModelSpace, x: &Element) -> Vec<Element> {
    let p = am_product(s).unwrap();
    let grid: Vec<Rational> = (0..=24).map(|k| q(k, 4)).collect();
    let mut out = Vec::new();
    for a in &grid {
        for b in &grid {
            let g = Element::finite(vec![a.clone(), b.clone()]);
            if p.mul(&g, &g).unwrap() == *x {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn square_roots_are_unique_on_the_grid() {
    let s = ModelSpace::finite_sup(vec![int(1), int(2)]).unwrap();
    let p = am_product(&s).unwrap();
    let cases = [(q(3, 4), q(5, 2)), (zero(), int(1)), (q(1, 4), zero()), (int(2), q(7, 4))];
    for (a, b) in cases {
        let g0 = Element::finite(vec![a, b]);
        let x = p.mul(&g0, &g0).unwrap();
        let root = nth_root(&s, &x, 2).unwrap();
        assert_eq!(root.exact.as_ref(), Some(&g0));
        assert_eq!(grid_square_roots(&s, &x), vec![g0]);
    }
    // An irrational root has no grid point at all.
    let x = Element::finite(vec![int(2), int(1)]);
    assert!(nth_root(&s, &x, 2).unwrap().exact.is_none());
    assert!(grid_square_roots(&s, &x).is_empty());
}
