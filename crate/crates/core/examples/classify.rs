//! Which models are AM-algebras, and the norm-of-suprema witness when not.

use amalg::falgebra::{classify_am_algebra, nakano_witness, Family};
use amalg::scalar::int;
use amalg::ModelSpace;

fn main() -> amalg::Result<()> {
    let spaces = [
        ModelSpace::finite_sup(vec![int(4), int(1)])?,
        ModelSpace::seq_lim(int(1))?,
        ModelSpace::seq_lim(int(2))?,
        ModelSpace::sup_sum(ModelSpace::unit_sup(1)?, ModelSpace::seq_lim(int(3))?)?,
    ];
    for s in &spaces {
        let c = classify_am_algebra(s)?;
        print!("{s}: AM-algebra {}", c.is_am_algebra);
        match &c.unit_weight.witness {
            Some(w) => println!(" (constant one fails along {}: {} vs {})", w.datum, w.along_net, w.at_limit),
            None => println!(" (product weight {})", c.am_weight.expect("AM-algebras carry the unit weight")),
        }
    }

    let family = [Family::initial_indicators()];
    for theta in [int(1), int(2)] {
        let s = ModelSpace::seq_lim(theta)?;
        let w = nakano_witness(&s, &family)?;
        println!(
            "{s}: sup of norms {} vs least bound norm {} (bound {})",
            w.sup_norms, w.inf_bound_norms, w.least_bound
        );
    }
    Ok(())
}
