//! Products on AL models live on the atoms; atomless models carry only zero.

use amalg::al::{
    al_is_submultiplicative, atom_product, band_space, lift_band_product, only_zero_product, AlProduct, AlWeight, Band,
};
use amalg::falgebra::{am_product, verify_falgebra_axioms, Product};
use amalg::scalar::{int, q};
use amalg::{Element, ModelSpace, Side};

fn main() -> amalg::Result<()> {
    let s = ModelSpace::finite_al(2, true)?;
    let w = AlWeight::new(vec![int(1), q(1, 3)])?;
    let p = AlProduct::new(&s, w.clone())?;
    let (x, y) = (Element::al(vec![int(2), int(3)], int(5)), Element::al(vec![int(1), int(6)], int(7)));
    println!("{s}: P(x, y) = {}  (nonatomic mass is annihilated)", p.mul(&x, &y)?);
    println!("weight {w}: submultiplicative {}", al_is_submultiplicative(&w));

    for space in [ModelSpace::finite_al(0, true)?, s.clone()] {
        println!("{space}: only the zero product {}", only_zero_product(&space));
        if let Some(lifted) = atom_product(&space)? {
            println!(
                "  product on {} passes the axioms: {}",
                lifted.band(),
                verify_falgebra_axioms(&lifted, 0)?.accepted()
            );
        }
    }

    // A sup sum of an AM-algebra and an AL model: lift the AM product.
    let sum = ModelSpace::sup_sum(ModelSpace::unit_sup(2)?, s)?;
    let band = Band::Summand(Side::Left);
    let inner = am_product(&band_space(&sum, &band)?)?;
    let lifted = lift_band_product(&sum, band, Box::new(inner))?;
    let z = Element::pair(Element::finite(vec![int(2), int(-1)]), Element::al(vec![int(1), int(1)], int(1)));
    println!("{sum}: P(z, z) = {}", lifted.mul(&z, &z)?);
    Ok(())
}
