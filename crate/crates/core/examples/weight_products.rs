//! f-algebra products from weights, admissibility, and submultiplicativity.

use amalg::falgebra::{
    is_submultiplicative, submultiplicativity_witness, verify_falgebra_axioms, wx_membership, Product, Weight,
    WeightProduct,
};
use amalg::scalar::{int, q};
use amalg::{Element, ModelSpace};

fn main() -> amalg::Result<()> {
    let s = ModelSpace::finite_sup(vec![int(2), int(1)])?;
    let w = Weight::Finite(vec![q(1, 2), int(3)]);
    let p = WeightProduct::new(&s, w.clone())?;
    let (x, y) = (Element::finite(vec![int(1), int(2)]), Element::finite(vec![int(3), q(-1, 2)]));
    println!("P_w(x, y) = {}", p.mul(&x, &y)?);
    let report = verify_falgebra_axioms(&p, 0)?;
    println!("axioms: {} checks, accepted {}", report.checks, report.accepted());
    println!("submultiplicative: {}", is_submultiplicative(&s, &w)?);
    if let Some((a, b)) = submultiplicativity_witness(&s, &w)? {
        println!("  witness: norm P(a,b) = {} > {}", s.norm(&p.mul(&a, &b)?)?, s.norm(&a)? * s.norm(&b)?);
    }

    // On sequences the weight must satisfy tail = θ·limit.
    let c = ModelSpace::seq_lim(int(2))?;
    for w in [Weight::seq(vec![], int(1), int(1)), Weight::seq(vec![int(5)], int(1), q(1, 2))] {
        let m = wx_membership(&c, &w)?;
        println!("{w} on {c}: admissible {}", m.member);
        if m.member {
            let p = WeightProduct::new(&c, w)?;
            let z = Element::seq(vec![int(1)], int(2));
            println!("  P(z, z) = {}", p.mul(&z, &z)?);
        }
    }
    Ok(())
}
