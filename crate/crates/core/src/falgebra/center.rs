//! The center `Z(X)`: operators with `±T ≤ λI`, which on the model spaces are
//! exactly the multiplication operators `M_h` by 0-homogeneous symbols.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::falgebra::product::peak_element;
use crate::falgebra::weight::Weight;
use crate::operator::{Operator, OperatorSpec};
use crate::scalar::{self, Rational};
use crate::space::ModelSpace;
use crate::spectrum;

/// A symbol `h` on `K_X*`, constant along rays, so only its values on the
/// atoms matter. On `SeqLim` continuity at δ_∞ forces `tail = limit`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CentralSymbol(Weight);

impl CentralSymbol {
    pub fn new(space: &ModelSpace, h: Weight) -> Result<Self> {
        h.check(space)?;
        if !continuous(&h) {
            return Err(Error::InvalidArgument(format!("symbol {h} is discontinuous at the limit functional")));
        }
        Ok(CentralSymbol(h))
    }

    pub fn values(&self) -> &Weight {
        &self.0
    }

    pub fn sup_norm(&self) -> Rational {
        self.0.sup_norm()
    }

    /// The pointwise product `h·h'`.
    pub fn mul(&self, other: &CentralSymbol) -> Result<CentralSymbol> {
        self.0
            .zip_with(&other.0, &|a, b| a * b)
            .map(CentralSymbol)
            .ok_or_else(|| Error::SpaceMismatch("symbols have different shapes".into()))
    }
}

impl fmt::Display for CentralSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn continuous(h: &Weight) -> bool {
    match h {
        Weight::Finite(_) => true,
        Weight::Seq { tail, limit, .. } => tail == limit,
        Weight::Pair(a, b) => continuous(a) && continuous(b),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralDecision {
    pub symbol: CentralSymbol,
    /// `‖T‖`, equal to `‖h‖∞`.
    pub norm: Rational,
}

/// Decides whether an endomorphism of an AM model lies in the center and
/// returns its symbol together with its operator norm.
pub fn decide_central(op: &Operator) -> Result<Option<CentralDecision>> {
    let space = op.domain();
    space.require_am_family()?;
    if !op.is_endomorphism() {
        return Err(Error::ShapeMismatch("the center consists of endomorphisms".into()));
    }
    let h = match op.spec() {
        OperatorSpec::Multiply(h) => Some(h.clone()),
        OperatorSpec::Matrix(_) => diagonal_symbol(op)?,
        OperatorSpec::IndexMap(_) => index_map_symbol(op)?,
    };
    let Some(h) = h.filter(continuous) else { return Ok(None) };
    let symbol = CentralSymbol::new(space, h)?;
    let norm = operator_norm(op)?;
    if norm != symbol.sup_norm() {
        return Err(Error::InvariantBreach(format!(
            "central operator has norm {} but its symbol has sup norm {}",
            scalar::format(&norm),
            scalar::format(&symbol.sup_norm())
        )));
    }
    Ok(Some(CentralDecision { symbol, norm }))
}

fn diagonal_symbol(op: &Operator) -> Result<Option<Weight>> {
    let m = op.to_matrix()?;
    let off_diagonal = m.iter().enumerate().any(|(k, row)| row.iter().enumerate().any(|(i, a)| i != k && !a.is_zero()));
    if off_diagonal {
        return Ok(None);
    }
    let mut diag = m.iter().enumerate().map(|(k, row)| row[k].clone());
    Weight::from_atoms(op.domain(), 0, &mut |_| Ok(diag.next().expect("one diagonal entry per atom"))).map(Some)
}

/// An index map is central when every atom pulls back a multiple of itself.
fn index_map_symbol(op: &Operator) -> Result<Option<Weight>> {
    let space = op.domain();
    let mut central = true;
    let h = Weight::from_atoms(space, op.depth(), &mut |atom| {
        Ok(match op.index_source(&atom.id) {
            None => scalar::zero(),
            Some((_, s)) if s.is_zero() => scalar::zero(),
            Some((src, s)) => {
                central &= src == atom.id;
                s
            }
        })
    })?;
    Ok(central.then_some(h))
}

/// `M_h`.
pub fn mult_operator(space: &ModelSpace, h: &CentralSymbol) -> Result<Operator> {
    Operator::multiply(space.clone(), h.values().clone())
}

/// Exact operator norm between AM models.
///
/// Matrices use `‖T‖ = max_k ‖δ_k‖⁻¹ Σᵢ |a_ki| ‖δᵢ‖`, the supremum being
/// attained at a sign vector of the unit ball. Index maps use
/// `max s·‖a‖/‖b‖` over pulled-back pairs `b ← s·a`. Multiplication operators
/// on infinite models are evaluated on the peak elements of the atoms, where
/// their norm is attained.
pub fn operator_norm(op: &Operator) -> Result<Rational> {
    op.domain().require_am_family()?;
    op.codomain().require_am_family()?;
    if let (Some(_), Some(_)) = (op.domain().dimension(), op.codomain().dimension()) {
        if !matches!(op.spec(), OperatorSpec::IndexMap(_)) {
            let m = op.to_matrix()?;
            let dom = spectrum::dual_atoms(op.domain());
            let cod = spectrum::dual_atoms(op.codomain());
            return Ok(m
                .iter()
                .zip(&cod)
                .map(|(row, b)| {
                    row.iter().zip(&dom).fold(scalar::zero(), |acc, (a, at)| acc + a.abs() * &at.dual_norm)
                        / &b.dual_norm
                })
                .max()
                .unwrap_or_else(scalar::zero));
        }
    }
    match op.spec() {
        OperatorSpec::IndexMap(_) => {
            let mut best = scalar::zero();
            for b in spectrum::dual_atoms_with_depth(op.codomain(), op.depth()) {
                if let Some((src, s)) = op.index_source(&b.id) {
                    let a = spectrum::find_atom(op.domain(), &src)?;
                    best = best.max(s * &a.dual_norm / &b.dual_norm);
                }
            }
            Ok(best)
        }
        OperatorSpec::Multiply(_) => {
            let depth = op.depth();
            let mut best = scalar::zero();
            for atom in spectrum::dual_atoms_with_depth(op.domain(), depth) {
                let p = peak_element(op.domain(), &atom.id, depth)?;
                best = best.max(op.codomain().norm(&op.apply(&p)?)? / op.domain().norm(&p)?);
            }
            Ok(best)
        }
        OperatorSpec::Matrix(_) => Err(Error::Unsupported("matrix on an infinite-dimensional space".into())),
    }
}
