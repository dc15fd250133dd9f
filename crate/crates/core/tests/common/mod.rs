//! Strategies shared by the property suites.
#![allow(dead_code)]

use amalg::scalar::q;
use amalg::{Element, ModelSpace, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> + Clone {
    (-8i64..=8, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn nonnegative() -> impl Strategy<Value = Rational> + Clone {
    (0i64..=8, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn positive() -> impl Strategy<Value = Rational> + Clone {
    (1i64..=8, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn dual_weight() -> impl Strategy<Value = Rational> + Clone {
    prop::sample::select(vec![q(1, 1), q(2, 1), q(4, 1), q(1, 2), q(3, 2)])
}

fn theta() -> impl Strategy<Value = Rational> + Clone {
    prop::sample::select(vec![q(1, 1), q(3, 2), q(2, 1), q(3, 1)])
}

pub fn finite_sup() -> BoxedStrategy<ModelSpace> {
    prop::collection::vec(dual_weight(), 1..=4).prop_map(|c| ModelSpace::finite_sup(c).unwrap()).boxed()
}

pub fn seq_lim() -> BoxedStrategy<ModelSpace> {
    theta().prop_map(|t| ModelSpace::seq_lim(t).unwrap()).boxed()
}

pub fn finite_al() -> BoxedStrategy<ModelSpace> {
    (0usize..=3, any::<bool>()).prop_map(|(a, band)| ModelSpace::finite_al(a, band || a == 0).unwrap()).boxed()
}

/// `FiniteSup`, `SeqLim`, and binary sums of those.
pub fn am_space() -> BoxedStrategy<ModelSpace> {
    let leaf = prop_oneof![finite_sup(), seq_lim()];
    prop_oneof![
        3 => leaf.clone(),
        1 => (leaf.clone(), leaf).prop_map(|(a, b)| ModelSpace::sup_sum(a, b).unwrap()),
    ]
    .boxed()
}

pub fn any_space() -> BoxedStrategy<ModelSpace> {
    prop_oneof![3 => am_space(), 1 => finite_al()].boxed()
}

pub fn element(space: &ModelSpace) -> BoxedStrategy<Element> {
    element_from(space, rational())
}

pub fn positive_element(space: &ModelSpace) -> BoxedStrategy<Element> {
    element_from(space, nonnegative())
}

fn element_from(
    space: &ModelSpace,
    scalar: impl Strategy<Value = Rational> + Clone + 'static,
) -> BoxedStrategy<Element> {
    match space {
        ModelSpace::FiniteSup { dual_weights } => {
            prop::collection::vec(scalar, dual_weights.len()).prop_map(Element::finite).boxed()
        }
        ModelSpace::SeqLim { .. } => {
            (prop::collection::vec(scalar.clone(), 0..=4), scalar).prop_map(|(p, t)| Element::seq(p, t)).boxed()
        }
        ModelSpace::FiniteAl { atoms, nonatomic_band } => {
            let band = *nonatomic_band;
            (prop::collection::vec(scalar.clone(), *atoms), scalar)
                .prop_map(move |(a, m)| Element::al(a, if band { m } else { Rational::from_integer(0.into()) }))
                .boxed()
        }
        ModelSpace::SupDirectSum { left, right } => (element_from(left, scalar.clone()), element_from(right, scalar))
            .prop_map(|(a, b)| Element::pair(a, b))
            .boxed(),
    }
}

/// A space from `spaces` together with `k` elements of it.
pub fn with_elements(spaces: BoxedStrategy<ModelSpace>, k: usize) -> BoxedStrategy<(ModelSpace, Vec<Element>)> {
    spaces
        .prop_flat_map(move |s| {
            let xs = prop::collection::vec(element(&s), k);
            (Just(s), xs)
        })
        .boxed()
}

pub fn with_positive_elements(
    spaces: BoxedStrategy<ModelSpace>,
    k: usize,
) -> BoxedStrategy<(ModelSpace, Vec<Element>)> {
    spaces
        .prop_flat_map(move |s| {
            let xs = prop::collection::vec(positive_element(&s), k);
            (Just(s), xs)
        })
        .boxed()
}
