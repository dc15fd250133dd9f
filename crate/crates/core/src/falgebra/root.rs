//! Positive n-th roots in AM-algebras.
//!
//! For the AM-algebra product the n-th power of `g` is
//! `gⁿ(x*) = g(x*)ⁿ / ‖x*‖ⁿ⁻¹`, so the unique positive root of `x ≥ 0` is
//! `g(x*) = ‖x*‖^{1-1/n} x(x*)^{1/n} = (‖x*‖ⁿ⁻¹ x(x*))^{1/n}`.
//! The result is exact when every radical is rational and binary64 otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::falgebra::am::classify_am_algebra;
use crate::scalar::{self, Rational};
use crate::space::{Element, ModelSpace};
use crate::spectrum::{self, AtomId, DualAtom};

/// Relative tolerance of the binary64 fallback.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Binary64 counterpart of [`Element`] for AM families.
#[derive(Debug, Clone, PartialEq)]
pub enum FloatElement {
    Finite(Vec<f64>),
    Seq { prefix: Vec<f64>, tail: f64 },
    Pair(Box<FloatElement>, Box<FloatElement>),
}

impl FloatElement {
    pub fn from_exact(x: &Element) -> Result<Self> {
        Ok(match x {
            Element::Finite(v) => FloatElement::Finite(v.iter().map(scalar::to_f64).collect()),
            Element::Seq { prefix, tail } => {
                FloatElement::Seq { prefix: prefix.iter().map(scalar::to_f64).collect(), tail: scalar::to_f64(tail) }
            }
            Element::Pair(a, b) => FloatElement::Pair(Box::new(Self::from_exact(a)?), Box::new(Self::from_exact(b)?)),
            Element::Al { .. } => return Err(Error::NotAmFamily("FiniteAL".into())),
        })
    }

    fn value(&self, id: &AtomId) -> Option<f64> {
        match (self, id) {
            (FloatElement::Finite(v), AtomId::Coord(i)) => v.get(*i).copied(),
            (FloatElement::Seq { prefix, tail }, AtomId::Coord(j)) => Some(*prefix.get(*j).unwrap_or(tail)),
            (FloatElement::Seq { tail, .. }, AtomId::Tail | AtomId::Limit) => Some(*tail),
            (FloatElement::Pair(a, _), AtomId::Summand(crate::space::Side::Left, inner)) => a.value(inner),
            (FloatElement::Pair(_, b), AtomId::Summand(crate::space::Side::Right, inner)) => b.value(inner),
            _ => None,
        }
    }

    fn depth(&self) -> usize {
        match self {
            FloatElement::Finite(_) => 0,
            FloatElement::Seq { prefix, .. } => prefix.len(),
            FloatElement::Pair(a, b) => a.depth().max(b.depth()),
        }
    }
}

impl fmt::Display for FloatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[f64]| v.iter().map(|a| format!("{a:e}")).collect::<Vec<_>>().join(", ");
        match self {
            FloatElement::Finite(v) => write!(f, "({})", list(v)),
            FloatElement::Seq { prefix, tail } if prefix.is_empty() => write!(f, "({tail:e}, ...)"),
            FloatElement::Seq { prefix, tail } => write!(f, "({}, {tail:e}, ...)", list(prefix)),
            FloatElement::Pair(a, b) => write!(f, "<{a}, {b}>"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub degree: u32,
    /// The root, when all radicals are rational.
    pub exact: Option<Element>,
    pub approx: FloatElement,
}

/// `g ≥ 0` with `gⁿ = x` for the AM-algebra product.
pub fn nth_root(space: &ModelSpace, x: &Element, n: u32) -> Result<Root> {
    if n == 0 {
        return Err(Error::InvalidArgument("root degree must be at least 1".into()));
    }
    if !space.is_positive(x)? {
        return Err(Error::NotPositive(format!("{x} has a negative coordinate")));
    }
    if !classify_am_algebra(space)?.is_am_algebra {
        return Err(Error::NotAmAlgebra);
    }
    let depth = spectrum::depth_for([x]);
    let radicand = |atom: &DualAtom| -> Result<Rational> {
        Ok(spectrum::evaluate(space, atom, x)? * scalar::pow(&atom.dual_norm, n - 1))
    };
    let exact = spectrum::from_atom_values(space, depth, &mut |atom| {
        scalar::exact_nth_root(&radicand(atom)?, n).ok_or_else(|| Error::Unsupported("irrational radical".into()))
    });
    let exact = match exact {
        Ok(g) => Some(g),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let approx = match &exact {
        Some(g) => FloatElement::from_exact(g)?,
        None => float_from_atoms(space, depth, &mut |atom| Ok(scalar::approx_nth_root(&radicand(atom)?, n)))?,
    };
    Ok(Root { degree: n, exact, approx })
}

fn float_from_atoms(
    space: &ModelSpace,
    depth: usize,
    value: &mut dyn FnMut(&DualAtom) -> Result<f64>,
) -> Result<FloatElement> {
    Ok(match space {
        ModelSpace::FiniteSup { .. } => FloatElement::Finite(
            spectrum::dual_atoms_with_depth(space, depth).iter().map(&mut *value).collect::<Result<_>>()?,
        ),
        ModelSpace::SeqLim { .. } => {
            let prefix = (0..depth)
                .map(|j| value(&spectrum::find_atom(space, &AtomId::Coord(j))?))
                .collect::<Result<Vec<_>>>()?;
            let tail = value(&spectrum::find_atom(space, &AtomId::Tail)?)?;
            FloatElement::Seq { prefix, tail }
        }
        ModelSpace::SupDirectSum { left, right } => FloatElement::Pair(
            Box::new(float_from_atoms(left, depth, &mut |a| {
                value(&DualAtom {
                    id: AtomId::Summand(crate::space::Side::Left, Box::new(a.id.clone())),
                    dual_norm: a.dual_norm.clone(),
                })
            })?),
            Box::new(float_from_atoms(right, depth, &mut |a| {
                value(&DualAtom {
                    id: AtomId::Summand(crate::space::Side::Right, Box::new(a.id.clone())),
                    dual_norm: a.dual_norm.clone(),
                })
            })?),
        ),
        ModelSpace::FiniteAl { .. } => return Err(Error::NotAmFamily(space.kind_name().into())),
    })
}

/// Binary64 residuals of a computed root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResiduals {
    /// `sup |gⁿ − x|` over the coordinates (tail and limit included).
    pub power: f64,
    /// `|‖g‖ⁿ − ‖x‖|`.
    pub norm: f64,
    /// `1e-12 · (1 + ‖x‖)`.
    pub tolerance: f64,
}

impl RootResiduals {
    pub fn within_tolerance(&self) -> bool {
        self.power <= self.tolerance && self.norm <= self.tolerance
    }
}

/// Evaluates `gⁿ` for the AM-algebra product in binary64 and compares it
/// with `x`, together with the norm identity `‖g‖ⁿ = ‖x‖`.
pub fn root_residuals(space: &ModelSpace, x: &Element, g: &FloatElement, n: u32) -> Result<RootResiduals> {
    let depth = spectrum::depth_for([x]).max(g.depth());
    let x_norm = scalar::to_f64(&space.norm(x)?);
    let mut power = 0.0_f64;
    let mut g_norm = 0.0_f64;
    for atom in spectrum::dual_atoms_with_depth(space, depth) {
        let nu = scalar::to_f64(&atom.dual_norm);
        let gv = g.value(&atom.id).ok_or_else(|| Error::SpaceMismatch(format!("root has no value at {}", atom.id)))?;
        let xv = scalar::to_f64(&spectrum::evaluate(space, &atom, x)?);
        let pow = gv.powi(n as i32) / nu.powi(n as i32 - 1);
        power = power.max((pow - xv).abs());
        g_norm = g_norm.max(gv.abs() / nu);
    }
    let norm = (g_norm.powi(n as i32) - x_norm).abs();
    Ok(RootResiduals { power, norm, tolerance: ROOT_TOLERANCE * (1.0 + x_norm) })
}
