//! Weights on `K_X¹` and the space `W_X`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};
use crate::space::{fmt_list, ModelSpace, Side};
use crate::spectrum::{self, AtomId, ConvergenceDatum, DualAtom};

/// A bounded function on the unit representatives of the dual atoms.
///
/// `Seq` stores `w(δⱼ)` for the first coordinates, the common value `tail`
/// for all later `δⱼ`, and `limit = w(θ·δ_∞)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Weight {
    Finite(Vec<Rational>),
    Seq { prefix: Vec<Rational>, tail: Rational, limit: Rational },
    Pair(Box<Weight>, Box<Weight>),
}

impl Weight {
    pub fn seq(prefix: Vec<Rational>, tail: Rational, limit: Rational) -> Self {
        let mut prefix = prefix;
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Weight::Seq { prefix, tail, limit }
    }

    pub fn pair(left: Weight, right: Weight) -> Self {
        Weight::Pair(Box::new(left), Box::new(right))
    }

    /// The constant function `value` on `K_X¹`.
    pub fn constant(space: &ModelSpace, value: Rational) -> Result<Self> {
        match space {
            ModelSpace::FiniteSup { dual_weights } => Ok(Weight::Finite(vec![value; dual_weights.len()])),
            ModelSpace::SeqLim { .. } => Ok(Weight::Seq { prefix: Vec::new(), tail: value.clone(), limit: value }),
            ModelSpace::SupDirectSum { left, right } => {
                Ok(Weight::pair(Weight::constant(left, value.clone())?, Weight::constant(right, value)?))
            }
            ModelSpace::FiniteAl { .. } => Err(Error::NotAmFamily(space.kind_name().into())),
        }
    }

    pub fn check(&self, space: &ModelSpace) -> Result<()> {
        match (space, self) {
            (ModelSpace::FiniteSup { dual_weights }, Weight::Finite(w)) if w.len() == dual_weights.len() => Ok(()),
            (ModelSpace::SeqLim { .. }, Weight::Seq { .. }) => Ok(()),
            (ModelSpace::SupDirectSum { left, right }, Weight::Pair(a, b)) => {
                a.check(left)?;
                b.check(right)
            }
            (ModelSpace::FiniteAl { .. }, _) => Err(Error::NotAmFamily(space.kind_name().into())),
            _ => Err(Error::SpaceMismatch(format!("weight shape does not match {}", space.kind_name()))),
        }
    }

    /// `w(u)` where `u` is the unit representative of the atom `id`.
    pub fn at(&self, id: &AtomId) -> Result<Rational> {
        match (self, id) {
            (Weight::Finite(w), AtomId::Coord(i)) => {
                w.get(*i).cloned().ok_or_else(|| Error::SpaceMismatch(format!("no weight value for {id}")))
            }
            (Weight::Seq { prefix, tail, .. }, AtomId::Coord(j)) => Ok(prefix.get(*j).unwrap_or(tail).clone()),
            (Weight::Seq { tail, .. }, AtomId::Tail) => Ok(tail.clone()),
            (Weight::Seq { limit, .. }, AtomId::Limit) => Ok(limit.clone()),
            (Weight::Pair(a, _), AtomId::Summand(Side::Left, inner)) => a.at(inner),
            (Weight::Pair(_, b), AtomId::Summand(Side::Right, inner)) => b.at(inner),
            _ => Err(Error::SpaceMismatch(format!("no weight value for {id}"))),
        }
    }

    /// `w₋₁(a) = w(a/‖a‖)/‖a‖`.
    pub fn rescaled(&self, atom: &DualAtom) -> Result<Rational> {
        Ok(self.at(&atom.id)? / &atom.dual_norm)
    }

    /// Number of explicit `SeqLim` prefix entries.
    pub fn depth(&self) -> usize {
        match self {
            Weight::Finite(_) => 0,
            Weight::Seq { prefix, .. } => prefix.len(),
            Weight::Pair(a, b) => a.depth().max(b.depth()),
        }
    }

    pub fn values(&self) -> Box<dyn Iterator<Item = &Rational> + '_> {
        match self {
            Weight::Finite(w) => Box::new(w.iter()),
            Weight::Seq { prefix, tail, limit } => Box::new(prefix.iter().chain([tail, limit])),
            Weight::Pair(a, b) => Box::new(a.values().chain(b.values())),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values().all(|v| !v.is_negative())
    }

    /// `‖w‖∞` over `K_X¹`.
    pub fn sup_norm(&self) -> Rational {
        self.values().map(Signed::abs).max().unwrap_or_else(scalar::zero)
    }

    pub fn map(&self, f: &dyn Fn(&Rational) -> Rational) -> Weight {
        match self {
            Weight::Finite(w) => Weight::Finite(w.iter().map(f).collect()),
            Weight::Seq { prefix, tail, limit } => Weight::seq(prefix.iter().map(f).collect(), f(tail), f(limit)),
            Weight::Pair(a, b) => Weight::pair(a.map(f), b.map(f)),
        }
    }

    /// Pointwise combination; `None` when the shapes differ.
    pub fn zip_with(&self, other: &Weight, f: &dyn Fn(&Rational, &Rational) -> Rational) -> Option<Weight> {
        match (self, other) {
            (Weight::Finite(a), Weight::Finite(b)) if a.len() == b.len() => {
                Some(Weight::Finite(a.iter().zip(b).map(|(s, t)| f(s, t)).collect()))
            }
            (Weight::Seq { prefix: pa, tail: ta, limit: la }, Weight::Seq { prefix: pb, tail: tb, limit: lb }) => {
                let len = pa.len().max(pb.len());
                let prefix = (0..len).map(|j| f(pa.get(j).unwrap_or(ta), pb.get(j).unwrap_or(tb))).collect();
                Some(Weight::seq(prefix, f(ta, tb), f(la, lb)))
            }
            (Weight::Pair(a1, b1), Weight::Pair(a2, b2)) => {
                Some(Weight::pair(a1.zip_with(a2, f)?, b1.zip_with(b2, f)?))
            }
            _ => None,
        }
    }

    pub fn abs(&self) -> Weight {
        self.map(&Signed::abs)
    }

    pub fn scale(&self, lambda: &Rational) -> Weight {
        self.map(&|v| lambda * v)
    }

    pub fn join(&self, other: &Weight) -> Option<Weight> {
        self.zip_with(other, &|a, b| a.max(b).clone())
    }

    pub fn meet(&self, other: &Weight) -> Option<Weight> {
        self.zip_with(other, &|a, b| a.min(b).clone())
    }

    pub fn add(&self, other: &Weight) -> Option<Weight> {
        self.zip_with(other, &|a, b| a + b)
    }

    pub fn is_zero(&self) -> bool {
        self.values().all(Zero::is_zero)
    }

    /// Builds a weight from its values on the atoms at `depth`.
    pub fn from_atoms(
        space: &ModelSpace,
        depth: usize,
        value: &mut dyn FnMut(&DualAtom) -> Result<Rational>,
    ) -> Result<Weight> {
        match space {
            ModelSpace::FiniteSup { .. } => Ok(Weight::Finite(
                spectrum::dual_atoms_with_depth(space, depth).iter().map(&mut *value).collect::<Result<_>>()?,
            )),
            ModelSpace::SeqLim { .. } => {
                let prefix = (0..depth)
                    .map(|j| value(&spectrum::find_atom(space, &AtomId::Coord(j))?))
                    .collect::<Result<Vec<_>>>()?;
                let tail = value(&spectrum::find_atom(space, &AtomId::Tail)?)?;
                let limit = value(&spectrum::find_atom(space, &AtomId::Limit)?)?;
                Ok(Weight::seq(prefix, tail, limit))
            }
            ModelSpace::SupDirectSum { left, right } => Ok(Weight::pair(
                Weight::from_atoms(left, depth, &mut |a| value(&a.clone().lift(Side::Left)))?,
                Weight::from_atoms(right, depth, &mut |a| value(&a.clone().lift(Side::Right)))?,
            )),
            ModelSpace::FiniteAl { .. } => Err(Error::NotAmFamily(space.kind_name().into())),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(w) => write!(f, "({})", fmt_list(w)),
            Weight::Seq { prefix, tail, limit } => write!(
                f,
                "(prefix ({}), tail {}, limit {})",
                fmt_list(prefix),
                scalar::format(tail),
                scalar::format(limit)
            ),
            Weight::Pair(a, b) => write!(f, "<{a}, {b}>"),
        }
    }
}

/// Failure of continuity of `w₋₁` along one convergent net.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WxWitness {
    pub datum: ConvergenceDatum,
    /// Limit of `w₋₁` along the net.
    pub along_net: Rational,
    /// `w₋₁` at the limit point.
    pub at_limit: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WxMembership {
    pub member: bool,
    pub witness: Option<WxWitness>,
}

/// Decides `w ∈ W_X`: continuity of `w₋₁` on `K_X*`.
///
/// Continuity is checked along the declared convergence data of the space,
/// which are exhaustive for the built-in families. On `SeqLim` the condition
/// reads `tail = θ·limit`.
pub fn wx_membership(space: &ModelSpace, w: &Weight) -> Result<WxMembership> {
    space.require_am_family()?;
    w.check(space)?;
    for datum in spectrum::convergence_data(space) {
        let along_net = w.at(&datum.net.id)? / &datum.net_norm;
        let at_limit = w.rescaled(&datum.limit)?;
        if along_net != at_limit {
            return Ok(WxMembership { member: false, witness: Some(WxWitness { datum, along_net, at_limit }) });
        }
    }
    Ok(WxMembership { member: true, witness: None })
}
