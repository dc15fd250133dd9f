//! Homomorphism criteria on finite and sequence models.

mod common;

use amalg::falgebra::{am_product, Product};
use amalg::hom::{
    ball_square_condition, composition_form, is_am_algebra_hom, is_lattice_hom, satisfies_row_rule, sup_matrix,
};
use amalg::operator::Operator;
use amalg::scalar::{int, q, zero};
use amalg::{Element, ModelSpace, Rational};
use proptest::prelude::*;

fn weights(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(prop::sample::select(vec![int(1), int(2), int(4)]), n)
}

/// Matrices biased towards homomorphisms: each row is zero, a pulled-back
/// atom with the right scale, or arbitrary.
type Case = (Vec<Rational>, Vec<Rational>, Vec<Vec<Rational>>);

fn candidate() -> BoxedStrategy<Case> {
    (1usize..=3, 1usize..=3)
        .prop_flat_map(|(n, m)| {
            (
                weights(n),
                weights(m),
                prop::collection::vec(
                    (
                        0usize..3,
                        0..n,
                        prop::collection::vec(prop::sample::select(vec![zero(), q(1, 2), int(1), int(2), int(-1)]), n),
                    ),
                    m,
                ),
            )
        })
        .prop_map(|(c, d, rows)| {
            let rows = rows
                .into_iter()
                .enumerate()
                .map(|(k, (kind, i, free))| match kind {
                    0 => vec![zero(); c.len()],
                    1 => (0..c.len()).map(|j| if j == i { &c[i] / &d[k] } else { zero() }).collect(),
                    _ => free,
                })
                .collect();
            (c, d, rows)
        })
        .boxed()
}

fn grid(c: &[Rational]) -> Vec<Element> {
    let vals = [int(-1), zero(), q(1, 2), int(2)];
    (0..vals.len().pow(c.len() as u32))
        .map(|mut code| {
            Element::finite(
                (0..c.len())
                    .map(|_| {
                        let v = vals[code % vals.len()].clone();
                        code /= vals.len();
                        v
                    })
                    .collect(),
            )
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fast_and_generic_predicates_agree((c, d, rows) in candidate()) {
        let op = Operator::matrix(ModelSpace::finite_sup(c.clone()).unwrap(), ModelSpace::finite_sup(d.clone()).unwrap(), rows.clone()).unwrap();
        let alg = is_am_algebra_hom(&op).unwrap().holds;
        prop_assert_eq!(alg, sup_matrix::is_algebra_hom(&c, &d, &rows));
        let lat = is_lattice_hom(&op).unwrap();
        prop_assert_eq!(lat.holds, sup_matrix::is_lattice_hom(&rows));
        if let Some(w) = &lat.witness {
            // The witness breaks T|x| = |Tx|.
            let s = op.domain();
            prop_assert_ne!(op.apply(&s.abs(w).unwrap()).unwrap(), op.codomain().abs(&op.apply(w).unwrap()).unwrap());
        }
        prop_assert_eq!(ball_square_condition(&op).unwrap().holds, sup_matrix::ball_square(&c, &d, &rows));
        prop_assert_eq!(satisfies_row_rule(&op).unwrap(), alg);
        match (composition_form(&op), sup_matrix::composition_form(&c, &d, &rows)) {
            (Ok(form), Ok(phi)) => {
                prop_assert!(form.reproduces(&op).unwrap());
                prop_assert_eq!(sup_matrix::reconstruct(&c, &d, &phi), rows.clone());
            }
            (Err(_), Err(())) => {}
            (a, b) => prop_assert!(false, "composition forms disagree: {:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
    }

    #[test]
    fn algebra_homs_preserve_modulus_and_lattice_ops((c, d, rows) in candidate()) {
        let dom = ModelSpace::finite_sup(c.clone()).unwrap();
        let cod = ModelSpace::finite_sup(d.clone()).unwrap();
        let op = Operator::matrix(dom.clone(), cod.clone(), rows).unwrap();
        prop_assume!(is_am_algebra_hom(&op).unwrap().holds);
        let g = grid(&c);
        for x in &g {
            prop_assert_eq!(op.apply(&dom.abs(x).unwrap()).unwrap(), cod.abs(&op.apply(x).unwrap()).unwrap());
        }
        // The range is closed under ∨ and ∧: Tx ∨ Ty = T(x ∨ y).
        for x in g.iter().step_by(3) {
            for y in g.iter().step_by(5) {
                let (tx, ty) = (op.apply(x).unwrap(), op.apply(y).unwrap());
                prop_assert_eq!(cod.join(&tx, &ty).unwrap(), op.apply(&dom.join(x, y).unwrap()).unwrap());
                prop_assert_eq!(cod.meet(&tx, &ty).unwrap(), op.apply(&dom.meet(x, y).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn swap_on_the_plane() {
    let s = ModelSpace::unit_sup(2).unwrap();
    let t = Operator::matrix(s.clone(), s.clone(), vec![vec![zero(), int(1)], vec![int(1), zero()]]).unwrap();
    assert!(is_lattice_hom(&t).unwrap().holds);
    assert!(ball_square_condition(&t).unwrap().holds);
    assert!(is_am_algebra_hom(&t).unwrap().holds);
    assert_eq!(composition_form(&t).unwrap().to_string(), "delta_1 -> delta_2, delta_2 -> delta_1");
    let p = am_product(&s).unwrap();
    let x = Element::finite(vec![int(3), q(-1, 2)]);
    assert_eq!(t.apply(&p.mul(&x, &x).unwrap()).unwrap(), p.mul(&t.apply(&x).unwrap(), &t.apply(&x).unwrap()).unwrap());
}
