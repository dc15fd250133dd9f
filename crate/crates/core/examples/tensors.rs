//! Deciding whether a structure tensor is an f-algebra product.

use amalg::al::al_decide_tensor;
use amalg::falgebra::{decide_tensor, verify_falgebra_axioms, ProductTensor, TensorProduct};
use amalg::scalar::{int, q, zero};
use amalg::ModelSpace;

fn main() -> amalg::Result<()> {
    let s = ModelSpace::unit_sup(2)?;
    let mut diagonal = ProductTensor::zeros(2);
    diagonal.set(0, 0, 0, int(1));
    diagonal.set(1, 1, 1, q(1, 2));
    let mut mixed = diagonal.clone();
    mixed.set(0, 1, 1, int(1));

    for t in [&diagonal, &mixed] {
        let report = verify_falgebra_axioms(&TensorProduct::new(&s, t.clone())?, 0)?;
        let decided = decide_tensor(&s, t)?;
        println!(
            "{:?}",
            t.to_nested()
                .iter()
                .map(|m| m.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
        println!("  weight {:?}, verifier accepts {}", decided.map(|w| w.to_string()), report.accepted());
        if let Some(v) = report.violations.first() {
            println!("  first violation: {v}");
        }
    }

    let al = ModelSpace::finite_al(2, true)?;
    let mut t = ProductTensor::zeros(3);
    t.set(0, 0, 0, int(2));
    t.set(1, 1, 1, zero());
    println!("AL decision: {:?}", al_decide_tensor(&al, &t)?.map(|w| w.to_string()));
    t.set(2, 2, 2, int(1));
    println!("with a product on the nonatomic band: {:?}", al_decide_tensor(&al, &t)?.map(|w| w.to_string()));
    Ok(())
}
