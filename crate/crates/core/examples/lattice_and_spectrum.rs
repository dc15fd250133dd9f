//! Model spaces, their lattice operations, and the dual atoms that norm them.

use amalg::scalar::{int, q};
use amalg::spectrum::{dual_atoms_with_depth, evaluate_unit, norm_weakstar_continuous};
use amalg::{Element, ModelSpace};

fn main() -> amalg::Result<()> {
    let s = ModelSpace::finite_sup(vec![int(4), int(1)])?;
    let x = Element::finite(vec![q(1, 2), int(-3)]);
    let y = Element::finite(vec![int(1), int(1)]);
    println!("space {s}");
    println!("x v y = {}, x ^ y = {}, |x| = {}", s.join(&x, &y)?, s.meet(&x, &y)?, s.abs(&x)?);
    println!("norm x = {}", s.norm(&x)?);
    for a in dual_atoms_with_depth(&s, 0) {
        println!("  unit functional at {}: {}", a.id, evaluate_unit(&s, &a, &x)?);
    }

    // Convergent sequences with norm θ|lim x| ∨ sup|x|.
    for theta in [int(1), int(2)] {
        let c = ModelSpace::seq_lim(theta)?;
        let z = Element::seq(vec![int(3), int(-1)], q(1, 2));
        let cont = norm_weakstar_continuous(&c)?;
        println!("{c}: norm of {z} = {}, norm weak* continuous: {}", c.norm(&z)?, cont.continuous);
        if let Some(w) = cont.witness {
            println!("  along {}: {} vs {}", w.datum, w.along_net, w.at_limit);
        }
    }
    Ok(())
}
