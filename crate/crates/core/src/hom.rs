//! Lattice and algebra homomorphisms between AM-algebra models.
//!
//! A lattice homomorphism `T` between AM-algebras is an algebra
//! homomorphism exactly when `T` maps the order unit to an idempotent, and
//! then `Tf = f∘φ` for a positively homogeneous `φ` sending each unit dual
//! atom of the codomain to a unit dual atom of the domain or to zero.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::falgebra::am::am_product;
use crate::falgebra::product::{peak_element, Product};
use crate::operator::{IndexEntry, Operator, OperatorSpec};
use crate::scalar::{self, Rational};
use crate::space::{Element, ModelSpace};
use crate::spectrum::{self, AtomId, DualAtom};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHomCheck {
    pub holds: bool,
    /// An element with `|Tx| ≠ T|x|`.
    pub witness: Option<Element>,
}

/// Decides whether `T` preserves moduli.
///
/// Matrices between finite models are lattice homomorphisms iff every row
/// is nonnegative with at most one nonzero entry; index maps always are;
/// multiplication operators iff the symbol is nonnegative.
pub fn is_lattice_hom(op: &Operator) -> Result<LatticeHomCheck> {
    let dom = op.domain();
    let witness = match op.spec() {
        OperatorSpec::Matrix(rows) => row_witness(dom, rows)?,
        OperatorSpec::IndexMap(_) => None,
        OperatorSpec::Multiply(h) => {
            let depth = op.depth();
            let mut found = None;
            for atom in spectrum::dual_atoms_with_depth(dom, depth) {
                if h.at(&atom.id)?.is_negative() {
                    found = Some(peak_element(dom, &atom.id, depth)?);
                    break;
                }
            }
            found
        }
    };
    if let Some(x) = &witness {
        if modulus_preserved(op, x)? {
            return Err(Error::InvariantBreach(format!("lattice-homomorphism witness {x} preserves the modulus")));
        }
        return Ok(LatticeHomCheck { holds: false, witness });
    }
    for x in signed_probes(dom, op.depth() + 1) {
        if !modulus_preserved(op, &x)? {
            return Err(Error::InvariantBreach(format!("{} fails to preserve the modulus of {x}", op.spec())));
        }
    }
    Ok(LatticeHomCheck { holds: true, witness: None })
}

fn modulus_preserved(op: &Operator, x: &Element) -> Result<bool> {
    let lhs = op.codomain().abs(&op.apply(x)?)?;
    let rhs = op.apply(&op.domain().abs(x)?)?;
    Ok(lhs == rhs)
}

/// `bᵢ − bⱼ` and `bᵢ − 2bⱼ` over the basis probes.
pub(crate) fn signed_probes(space: &ModelSpace, depth: usize) -> Vec<Element> {
    let basis = space.basis_probes(depth);
    let mut out = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if i != j {
                let two = scalar::int(2);
                out.push(space.sub(a, b).expect("probes belong to the space"));
                out.push(space.sub(a, &space.scale(&two, b).expect("probe")).expect("probe"));
            }
        }
    }
    out
}

fn row_witness(dom: &ModelSpace, rows: &[Vec<Rational>]) -> Result<Option<Element>> {
    let n = dom.dimension().unwrap_or(0);
    for row in rows {
        if let Some(i) = row.iter().position(Signed::is_negative) {
            return dom.unflatten(&crate::space::indicator(n, i)).map(Some);
        }
        let nonzero: Vec<usize> = (0..row.len()).filter(|&i| !row[i].is_zero()).collect();
        if let [i, j, ..] = nonzero[..] {
            let mut v = vec![scalar::zero(); n];
            v[i] = row[i].recip();
            v[j] = -row[j].recip();
            return dom.unflatten(&v).map(Some);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHomCheck {
    pub holds: bool,
    /// A pair with `T P(x,y) ≠ P(Tx,Ty)`.
    pub witness: Option<(Element, Element)>,
}

/// Decides `T P(x,y) = P'(Tx,Ty)` by bilinearity on pairs of basis probes.
///
/// On finite models the probes are a basis, so the check is exact. On
/// `SeqLim` the probes reach one coordinate past every explicit index of the
/// operator and the products, beyond which everything acts on the tail class.
pub fn is_algebra_hom(op: &Operator, dom: &dyn Product, cod: &dyn Product) -> Result<AlgebraHomCheck> {
    if dom.space() != op.domain() || cod.space() != op.codomain() {
        return Err(Error::ShapeMismatch("products do not live on the operator's spaces".into()));
    }
    let probes = match op.domain().dimension() {
        Some(_) => op.domain().unit_vectors()?,
        None => op.domain().basis_probes(op.depth() + 2),
    };
    for x in &probes {
        let tx = op.apply(x)?;
        for y in &probes {
            let ty = op.apply(y)?;
            if op.apply(&dom.mul(x, y)?)? != cod.mul(&tx, &ty)? {
                return Ok(AlgebraHomCheck { holds: false, witness: Some((x.clone(), y.clone())) });
            }
        }
    }
    Ok(AlgebraHomCheck { holds: true, witness: None })
}

/// [`is_algebra_hom`] for the AM-algebra products of both spaces.
pub fn is_am_algebra_hom(op: &Operator) -> Result<AlgebraHomCheck> {
    is_algebra_hom(op, &am_product(op.domain())?, &am_product(op.codomain())?)
}

/// `FiniteSup → FiniteSup`: every row has at most one nonzero entry, and an
/// entry in column `i` of row `k` equals `cᵢ/d_k`.
pub fn satisfies_row_rule(op: &Operator) -> Result<bool> {
    let (ModelSpace::FiniteSup { dual_weights: c }, ModelSpace::FiniteSup { dual_weights: d }) =
        (op.domain(), op.codomain())
    else {
        return Err(Error::Unsupported("the row rule is stated for FiniteSup spaces".into()));
    };
    Ok(op.to_matrix()?.iter().zip(d).all(|(row, dk)| {
        let mut nonzero = row.iter().enumerate().filter(|(_, a)| !a.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (None, _) => true,
            (Some((i, a)), None) => *a == &c[i] / dk,
            _ => false,
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallSquare {
    pub holds: bool,
    /// `Te` for the order unit `e` of the domain.
    pub image_of_unit: Element,
    /// `(Te)²` in the codomain AM-algebra.
    pub square: Element,
}

/// `(Te)² = Te` for the order unit `e` of a finite-dimensional domain.
pub fn ball_square_condition(op: &Operator) -> Result<BallSquare> {
    let e = op
        .domain()
        .order_unit()
        .ok_or_else(|| Error::Unsupported("the ball-square condition needs a domain with an order unit".into()))?;
    am_product(op.domain())?;
    let image_of_unit = op.apply(&e)?;
    let square = am_product(op.codomain())?.mul(&image_of_unit, &image_of_unit)?;
    Ok(BallSquare { holds: square == image_of_unit, image_of_unit, square })
}

/// `φ` on the unit dual atoms of the codomain: `None` for zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionForm {
    domain: ModelSpace,
    codomain: ModelSpace,
    pub phi: Vec<(DualAtom, Option<DualAtom>)>,
}

/// `δ_b∘T = coefficient·δ_a`, or `None` when `δ_b∘T = 0`.
fn pullback(op: &Operator, b: &DualAtom) -> Result<Option<(AtomId, Rational)>> {
    match op.spec() {
        OperatorSpec::Matrix(rows) => {
            let k = spectrum::dual_atoms(op.codomain())
                .iter()
                .position(|a| a.id == b.id)
                .ok_or_else(|| Error::SpaceMismatch(format!("{} is not a codomain atom", b.id)))?;
            let atoms = spectrum::dual_atoms(op.domain());
            let mut nonzero = rows[k].iter().zip(&atoms).filter(|(a, _)| !a.is_zero());
            match (nonzero.next(), nonzero.next()) {
                (None, _) => Ok(None),
                (Some((a, atom)), None) => Ok(Some((atom.id.clone(), a.clone()))),
                _ => Err(Error::NotAlgebraHom),
            }
        }
        OperatorSpec::IndexMap(_) => Ok(op.index_source(&b.id).filter(|(_, s)| !s.is_zero())),
        OperatorSpec::Multiply(h) => {
            let v = h.at(&b.id)?;
            Ok((!v.is_zero()).then(|| (b.id.clone(), v)))
        }
    }
}

/// The map `φ` with `Tf = f∘φ` of an AM-algebra homomorphism.
pub fn composition_form(op: &Operator) -> Result<CompositionForm> {
    if !is_am_algebra_hom(op)?.holds {
        return Err(Error::NotAlgebraHom);
    }
    let mut phi = Vec::new();
    for b in spectrum::dual_atoms_with_depth(op.codomain(), op.depth()) {
        let image = match pullback(op, &b)
            .map_err(|_| Error::InvariantBreach(format!("{} pulls back to several atoms", b.id)))?
        {
            None => None,
            Some((src, coefficient)) => {
                let a = spectrum::find_atom(op.domain(), &src)?;
                // u_b∘T = (coefficient·‖a‖/‖b‖) u_a must have norm one
                if &coefficient * &a.dual_norm / &b.dual_norm != scalar::one() {
                    return Err(Error::InvariantBreach(format!("phi does not preserve the norm at {}", b.id)));
                }
                Some(a)
            }
        };
        phi.push((b, image));
    }
    Ok(CompositionForm { domain: op.domain().clone(), codomain: op.codomain().clone(), phi })
}

impl CompositionForm {
    pub fn is_zero(&self) -> bool {
        self.phi.iter().all(|(_, a)| a.is_none())
    }

    /// `f ↦ f∘φ` as an index map: `δ_b ← (‖b‖/‖a‖)·δ_a`.
    pub fn reconstruct(&self) -> Result<Operator> {
        let entries = self
            .phi
            .iter()
            .map(|(b, a)| IndexEntry {
                target: b.id.clone(),
                source: a.as_ref().map(|a| (a.id.clone(), &b.dual_norm / &a.dual_norm)),
            })
            .collect();
        Operator::index_map(self.domain.clone(), self.codomain.clone(), entries)
    }

    /// Whether the reconstruction agrees with `op`.
    pub fn reproduces(&self, op: &Operator) -> Result<bool> {
        let rebuilt = self.reconstruct()?;
        if op.domain().dimension().is_some() && op.codomain().dimension().is_some() {
            return Ok(rebuilt.to_matrix()? == op.to_matrix()?);
        }
        let depth = op.depth().max(rebuilt.depth()) + 2;
        let mut probes = op.domain().basis_probes(depth);
        probes.extend(signed_probes(op.domain(), depth));
        for x in &probes {
            if rebuilt.apply(x)? != op.apply(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for CompositionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .phi
            .iter()
            .map(|(b, a)| match a {
                Some(a) => format!("{} -> {}", unit_name(b), unit_name(a)),
                None => format!("{} -> 0", unit_name(b)),
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `s·δ` for the unit representative of an atom, omitting `s = 1`.
pub fn unit_name(a: &DualAtom) -> String {
    let s = a.unit_scale();
    if s == scalar::one() {
        a.id.to_string()
    } else {
        format!("{}*{}", scalar::format(&s), a.id)
    }
}

/// Fast exact predicates for matrices between `FiniteSup` spaces with their
/// AM-algebra products, used by exhaustive sweeps. Each predicate works on
/// the coefficients directly and avoids building elements.
pub mod sup_matrix {
    use num_traits::{Signed, Zero};

    use crate::scalar::Rational;

    /// `T P(eᵢ,eⱼ) = P(Teᵢ,Teⱼ)` coordinatewise for all basis pairs:
    /// `d_k a_ki a_kj = [i = j] cᵢ a_ki`.
    pub fn is_algebra_hom(c: &[Rational], d: &[Rational], rows: &[Vec<Rational>]) -> bool {
        rows.iter().zip(d).all(|(row, dk)| {
            (0..c.len()).all(|i| {
                if row[i].is_zero() {
                    return true;
                }
                let lhs_diag = dk * &row[i] * &row[i];
                lhs_diag == &c[i] * &row[i] && (0..c.len()).all(|j| j == i || row[j].is_zero())
            })
        })
    }

    /// Nonnegative rows with at most one nonzero entry.
    pub fn is_lattice_hom(rows: &[Vec<Rational>]) -> bool {
        rows.iter().all(|row| !row.iter().any(Signed::is_negative) && row.iter().filter(|a| !a.is_zero()).count() <= 1)
    }

    /// `d_k (Te)_k² = (Te)_k` with `(Te)_k = Σᵢ a_ki / cᵢ`.
    pub fn ball_square(c: &[Rational], d: &[Rational], rows: &[Vec<Rational>]) -> bool {
        rows.iter().zip(d).all(|(row, dk)| {
            let te =
                row.iter().zip(c).fold(Rational::zero(), |acc, (a, ci)| if a.is_zero() { acc } else { acc + a / ci });
            dk * &te * &te == te
        })
    }

    /// `φ(u_k)` as a column index, or `None` for zero; `Err(())` when some row
    /// is not a norm-preserving pullback of a single atom.
    #[allow(clippy::result_unit_err)]
    pub fn composition_form(c: &[Rational], d: &[Rational], rows: &[Vec<Rational>]) -> Result<Vec<Option<usize>>, ()> {
        rows.iter()
            .zip(d)
            .map(|(row, dk)| {
                let mut nonzero = row.iter().enumerate().filter(|(_, a)| !a.is_zero());
                match (nonzero.next(), nonzero.next()) {
                    (None, _) => Ok(None),
                    (Some((i, a)), None) if a * dk == c[i] => Ok(Some(i)),
                    _ => Err(()),
                }
            })
            .collect()
    }

    /// The matrix of `f ↦ f∘φ`: entry `cᵢ/d_k` at `(k, φ(k))`.
    pub fn reconstruct(c: &[Rational], d: &[Rational], phi: &[Option<usize>]) -> Vec<Vec<Rational>> {
        phi.iter()
            .zip(d)
            .map(|(p, dk)| (0..c.len()).map(|i| if *p == Some(i) { &c[i] / dk } else { Rational::zero() }).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn swap_is_an_algebra_automorphism() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let t = Operator::matrix(s.clone(), s, m(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(is_lattice_hom(&t).unwrap().holds);
        assert!(is_am_algebra_hom(&t).unwrap().holds);
        assert!(ball_square_condition(&t).unwrap().holds);
        let phi = composition_form(&t).unwrap();
        assert_eq!(phi.to_string(), "delta_1 -> delta_2, delta_2 -> delta_1");
        assert!(phi.reproduces(&t).unwrap());
    }

    #[test]
    fn doubling_is_not() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let t = Operator::matrix(s.clone(), s.clone(), m(&[&[2, 0], &[0, 2]])).unwrap();
        assert!(is_lattice_hom(&t).unwrap().holds);
        let check = is_am_algebra_hom(&t).unwrap();
        let e1 = Element::finite(vec![int(1), int(0)]);
        assert_eq!(check.witness, Some((e1.clone(), e1)));
        let b = ball_square_condition(&t).unwrap();
        assert!(!b.holds);
        assert_eq!(b.square, Element::finite(vec![int(4), int(4)]));
        assert!(matches!(composition_form(&t), Err(Error::NotAlgebraHom)));
    }

    #[test]
    fn weighted_projection() {
        let c = ModelSpace::finite_sup(vec![int(4), int(1)]).unwrap();
        let d = ModelSpace::unit_sup(2).unwrap();
        let t = Operator::matrix(c, d, m(&[&[4, 0], &[0, 0]])).unwrap();
        assert!(is_am_algebra_hom(&t).unwrap().holds);
        assert!(satisfies_row_rule(&t).unwrap());
        let b = ball_square_condition(&t).unwrap();
        assert_eq!(b.image_of_unit, Element::finite(vec![int(1), int(0)]));
        assert!(b.holds);
        let phi = composition_form(&t).unwrap();
        assert_eq!(phi.to_string(), "delta_1 -> 4*delta_1, delta_2 -> 0");
        assert!(phi.reproduces(&t).unwrap());
    }

    #[test]
    fn non_lattice_hom_witness() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let t = Operator::matrix(s.clone(), s, m(&[&[1, 1], &[0, 1]])).unwrap();
        let check = is_lattice_hom(&t).unwrap();
        assert!(!check.holds);
        assert_eq!(check.witness, Some(Element::finite(vec![int(1), int(-1)])));
    }

    #[test]
    fn zero_operator_has_zero_phi() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let t = Operator::matrix(s.clone(), s, m(&[&[0, 0], &[0, 0]])).unwrap();
        let phi = composition_form(&t).unwrap();
        assert!(phi.is_zero());
        assert!(phi.reproduces(&t).unwrap());
    }

    #[test]
    fn sequence_composition_operator() {
        let s = ModelSpace::seq_lim(int(1)).unwrap();
        let e = |t: AtomId, a: AtomId| IndexEntry { target: t, source: Some((a, int(1))) };
        let t = Operator::index_map(
            s.clone(),
            s,
            vec![
                e(AtomId::Coord(0), AtomId::Coord(1)),
                e(AtomId::Coord(1), AtomId::Coord(0)),
                e(AtomId::Tail, AtomId::Tail),
                e(AtomId::Limit, AtomId::Limit),
            ],
        )
        .unwrap();
        assert!(is_lattice_hom(&t).unwrap().holds);
        assert!(is_am_algebra_hom(&t).unwrap().holds);
        let phi = composition_form(&t).unwrap();
        assert!(phi.reproduces(&t).unwrap());
        assert!(matches!(ball_square_condition(&t), Err(Error::Unsupported(_))));
    }

    #[test]
    fn fast_predicates_agree() {
        let c = [int(4), int(1)];
        let d = [int(1), int(2)];
        let good = vec![vec![int(4), int(0)], vec![int(0), q(1, 2)]];
        assert!(sup_matrix::is_algebra_hom(&c, &d, &good));
        assert!(sup_matrix::ball_square(&c, &d, &good));
        let phi = sup_matrix::composition_form(&c, &d, &good).unwrap();
        assert_eq!(sup_matrix::reconstruct(&c, &d, &phi), good);
        let bad = vec![vec![int(2), int(0)], vec![int(0), q(1, 2)]];
        assert!(!sup_matrix::is_algebra_hom(&c, &d, &bad));
        assert!(!sup_matrix::ball_square(&c, &d, &bad));
        assert!(sup_matrix::composition_form(&c, &d, &bad).is_err());
    }
}
