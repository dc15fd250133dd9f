//! Algebra homomorphisms between AM-algebras are composition operators.

use amalg::hom::{ball_square_condition, composition_form, is_am_algebra_hom, is_lattice_hom};
use amalg::operator::{IndexEntry, Operator};
use amalg::scalar::{int, q, zero};
use amalg::{AtomId, ModelSpace};

fn report(op: &Operator) -> amalg::Result<()> {
    let alg = is_am_algebra_hom(op)?;
    println!("{}", op.spec());
    println!("  lattice hom {}, algebra hom {}", is_lattice_hom(op)?.holds, alg.holds);
    if let Ok(b) = ball_square_condition(op) {
        println!("  Te = {}, (Te)^2 = {}", b.image_of_unit, b.square);
    }
    match composition_form(op) {
        Ok(phi) => println!("  phi: {phi}"),
        Err(e) => println!("  no composition form: {e}"),
    }
    Ok(())
}

fn main() -> amalg::Result<()> {
    let c = ModelSpace::finite_sup(vec![int(1), int(2)])?;
    let d = ModelSpace::finite_sup(vec![int(4), int(1), int(2)])?;
    // Row k pulls back coordinate φ(k) with scale c_φ(k)/d_k.
    report(&Operator::matrix(
        c.clone(),
        d.clone(),
        vec![vec![q(1, 4), zero()], vec![int(1), zero()], vec![zero(), int(1)]],
    )?)?;
    report(&Operator::matrix(c, d, vec![vec![q(1, 2), zero()], vec![int(1), int(1)], vec![zero(), zero()]])?)?;

    // A composition operator on convergent sequences: x ↦ (x₂, x₂, x₃, …).
    let s = ModelSpace::seq_lim(int(1))?;
    let entries = vec![
        IndexEntry { target: AtomId::Coord(0), source: Some((AtomId::Coord(1), int(1))) },
        IndexEntry { target: AtomId::Tail, source: Some((AtomId::Tail, int(1))) },
        IndexEntry { target: AtomId::Limit, source: Some((AtomId::Limit, int(1))) },
    ];
    report(&Operator::index_map(s.clone(), s, entries)?)
}
