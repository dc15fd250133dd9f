//! Exhaustive sweeps that cross-check the structural decisions, in parallel.

use amalg::falgebra::am_product_is_unique;
use amalg::scalar::{int, q, zero};
use amalg::sweep::{hom_sweep, tensor_sweep};
use amalg::ModelSpace;

fn main() -> amalg::Result<()> {
    let workers = std::env::args().nth(1).and_then(|a| a.parse().ok());
    let values = [zero(), q(1, 2), int(1)];
    for s in [ModelSpace::unit_sup(2)?, ModelSpace::finite_al(2, false)?] {
        let r = tensor_sweep(&s, &values, workers)?;
        println!("{s}: {} tensors, {} products, {} discrepancies", r.cases, r.accepted, r.discrepancies);
    }

    let r = hom_sweep(2, 2, &[int(1), int(2)], &[zero(), q(1, 2), int(1), int(2)], workers)?;
    println!("homomorphisms: {} matrices, {} algebra homs, {} discrepancies", r.cases, r.algebra_homs, r.discrepancies);

    let s = ModelSpace::finite_sup(vec![int(4), int(1)])?;
    let u = am_product_is_unique(&s, &[zero(), q(1, 2), int(1), int(2)])?;
    println!(
        "{s}: {} weights, identity-bearing {:?}",
        u.weights_checked,
        u.identity_weights.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    Ok(())
}
