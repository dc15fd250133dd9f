//! Atomic products on AL models.

mod common;

use amalg::al::{al_is_submultiplicative, al_submultiplicativity_witness, only_zero_product, AlProduct, AlWeight};
use amalg::falgebra::Product;
use amalg::scalar::{int, q, zero};
use amalg::sweep::tensor_sweep;
use amalg::{Element, ModelSpace, Rational};
use common::*;
use proptest::prelude::*;

fn al_with_weight() -> BoxedStrategy<(ModelSpace, AlWeight, Element)> {
    (1usize..=3, any::<bool>())
        .prop_flat_map(|(atoms, band)| {
            let s = ModelSpace::finite_al(atoms, band).unwrap();
            let w = prop::collection::vec(nonnegative(), atoms).prop_map(|v| AlWeight::new(v).unwrap());
            let z = element(&s);
            (Just(s), w, z)
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn disjoint_elements_multiply_to_zero((s, w, z) in al_with_weight()) {
        // z⁺ and z⁻ are disjoint.
        let (x, y) = (s.pos_part(&z).unwrap(), s.neg_part(&z).unwrap());
        prop_assert!(s.disjoint(&x, &y).unwrap());
        let p = AlProduct::new(&s, w).unwrap();
        prop_assert!(s.is_zero(&p.mul(&x, &y).unwrap()).unwrap());
        prop_assert!(s.is_zero(&p.mul(&y, &x).unwrap()).unwrap());
    }

    #[test]
    fn submultiplicativity_against_l1_grid((s, w, _) in al_with_weight()) {
        let p = AlProduct::new(&s, w.clone()).unwrap();
        let ModelSpace::FiniteAl { atoms, nonatomic_band } = &s else { unreachable!() };
        // Positive directions with entries in {0, 1, 2}, band included.
        let dim = atoms + usize::from(*nonatomic_band);
        let grid: Vec<Element> = (1..3usize.pow(dim as u32))
            .map(|mut code| {
                let coords: Vec<Rational> = (0..dim).map(|_| { let v = int((code % 3) as i64); code /= 3; v }).collect();
                s.unflatten(&coords).unwrap()
            })
            .collect();
        let violated = grid.iter().any(|x| grid.iter().any(|y| {
            s.norm(&p.mul(x, y).unwrap()).unwrap() > s.norm(x).unwrap() * s.norm(y).unwrap()
        }));
        prop_assert_eq!(al_is_submultiplicative(&w), !violated);
        match al_submultiplicativity_witness(&s, &w).unwrap() {
            None => prop_assert!(!violated),
            Some((x, y)) => {
                let lhs = s.norm(&p.mul(&x, &y).unwrap()).unwrap();
                prop_assert!(lhs > s.norm(&x).unwrap() * s.norm(&y).unwrap());
            }
        }
    }
}

#[test]
fn sum_of_atomless_spaces_carries_only_the_zero_product() {
    let atomless = ModelSpace::finite_al(0, true).unwrap();
    assert!(only_zero_product(&atomless));
    let sum = ModelSpace::sup_sum(atomless.clone(), atomless).unwrap();
    assert!(only_zero_product(&sum));
    let report = tensor_sweep(&sum, &[zero(), q(1, 2), int(1)], Some(2)).unwrap();
    assert_eq!(report.cases, 6561);
    assert_eq!(report.accepted, 1, "only the zero tensor survives");
    assert!(report.clean(), "{report:?}");
    assert!(report.examples.is_empty());
}
