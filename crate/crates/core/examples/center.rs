//! Central operators are multiplication operators, with norm the sup of the symbol.

use amalg::falgebra::{decide_central, mult_operator, CentralSymbol, Weight};
use amalg::operator::Operator;
use amalg::scalar::{int, q, zero};
use amalg::{Element, ModelSpace};

fn main() -> amalg::Result<()> {
    let s = ModelSpace::finite_sup(vec![int(1), int(3)])?;
    let diag = Operator::matrix(s.clone(), s.clone(), vec![vec![int(2), zero()], vec![zero(), q(-1, 2)]])?;
    let shear = Operator::matrix(s.clone(), s.clone(), vec![vec![int(1), int(1)], vec![zero(), int(1)]])?;
    for op in [&diag, &shear] {
        match decide_central(op)? {
            Some(d) => println!("{} is central: symbol {}, norm {}", op.spec(), d.symbol, d.norm),
            None => println!("{} is not central", op.spec()),
        }
    }

    let c = ModelSpace::seq_lim(int(1))?;
    let h = CentralSymbol::new(&c, Weight::seq(vec![int(3), int(-1)], q(1, 2), q(1, 2)))?;
    let m = mult_operator(&c, &h)?;
    println!("M_h on {c}: norm {}", decide_central(&m)?.expect("multiplication is central").norm);
    println!("M_h({}) = {}", Element::seq(vec![int(1)], int(4)), m.apply(&Element::seq(vec![int(1)], int(4)))?);
    let broken = Operator::multiply(c, Weight::seq(vec![], int(1), int(2)))?;
    println!("discontinuous symbol central: {}", decide_central(&broken)?.is_some());
    Ok(())
}
