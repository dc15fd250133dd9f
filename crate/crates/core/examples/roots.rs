//! Positive n-th roots in AM-algebras: exact when rational, binary64 otherwise.

use amalg::falgebra::{nth_root, root_residuals};
use amalg::scalar::int;
use amalg::{Element, ModelSpace};

fn main() -> amalg::Result<()> {
    let s = ModelSpace::finite_sup(vec![int(1), int(2)])?;
    for (x, n) in [(vec![int(4), int(18)], 2), (vec![int(2), int(3)], 2), (vec![int(8), int(32)], 3)] {
        let x = Element::finite(x);
        let r = nth_root(&s, &x, n)?;
        let res = root_residuals(&s, &x, &r.approx, n)?;
        match &r.exact {
            Some(g) => println!("root {n} of {x} = {g}"),
            None => {
                println!("root {n} of {x} ~ {} (residual {:e}, tolerance {:e})", r.approx, res.power, res.tolerance)
            }
        }
    }
    let c = ModelSpace::seq_lim(int(1))?;
    let x = Element::seq(vec![int(9)], int(16));
    println!("on {c}: root of {x} = {}", nth_root(&c, &x, 2)?.exact.expect("rational"));
    Ok(())
}
