//! Norms of suprema: `sup ‖a‖` over a positive set versus the least norm of
//! an upper bound. AM-algebras have the two equal for every bounded set.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};
use crate::space::{fmt_list, Element, ModelSpace};

/// A member of a positive set, either one element or the infinite family
/// `{(p₁, …, pₘ, a, …, a, b, b, …) : a repeated k ≥ 1 times}` of a `SeqLim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Member(Element),
    Block { prefix: Vec<Rational>, block: Rational, tail: Rational },
}

impl Family {
    /// `{1 on the first k coordinates, 0 after : k ≥ 1}`.
    pub fn initial_indicators() -> Self {
        Family::Block { prefix: Vec::new(), block: scalar::one(), tail: scalar::zero() }
    }

    /// The `k`-th member of the family (`k ≥ 1`).
    pub fn member(&self, k: usize) -> Element {
        match self {
            Family::Member(x) => x.clone(),
            Family::Block { prefix, block, tail } => {
                let mut p = prefix.clone();
                p.extend(std::iter::repeat_n(block.clone(), k.max(1)));
                Element::seq(p, tail.clone())
            }
        }
    }

    fn check(&self, space: &ModelSpace) -> Result<()> {
        match self {
            Family::Member(x) => {
                if !space.is_positive(x)? {
                    return Err(Error::NotPositive(format!("{x}")));
                }
                Ok(())
            }
            Family::Block { prefix, block, tail } => {
                if !matches!(space, ModelSpace::SeqLim { .. }) {
                    return Err(Error::SpaceMismatch("block families live in SeqLim".into()));
                }
                if prefix.iter().chain([block, tail]).any(Signed::is_negative) {
                    return Err(Error::NotPositive(format!("{self}")));
                }
                Ok(())
            }
        }
    }

    /// `sup_k ‖member(k)‖`, which does not depend on `k` for a block.
    fn sup_norm(&self, space: &ModelSpace) -> Result<Rational> {
        match self {
            Family::Member(x) => space.norm(x),
            Family::Block { .. } => space.norm(&self.member(1)),
        }
    }

    /// Coordinatewise supremum of the family.
    fn pointwise_sup(&self) -> Element {
        match self {
            Family::Member(x) => x.clone(),
            Family::Block { prefix, block, tail } => {
                let mut p = prefix.clone();
                p.push(block.clone());
                Element::seq(p, block.max(tail).clone())
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Member(x) => x.fmt(f),
            Family::Block { prefix, block, tail } => write!(
                f,
                "{{({}{}{} x k, {}, ...) : k >= 1}}",
                fmt_list(prefix),
                if prefix.is_empty() { "" } else { ", " },
                scalar::format(block),
                scalar::format(tail)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakanoWitness {
    /// `sup {‖a‖ : a ∈ A}`.
    pub sup_norms: Rational,
    /// `inf {‖b‖ : b ≥ A}`.
    pub inf_bound_norms: Rational,
    /// The least upper bound, which attains the infimum.
    pub least_bound: Element,
    pub equal: bool,
}

/// Compares `sup ‖a‖` with the least norm of an upper bound of `A ⊆ X₊`.
///
/// The coordinatewise supremum of a positive set is its least upper bound,
/// and the norm is monotone on `X₊`, so the infimum is attained there.
pub fn nakano_witness(space: &ModelSpace, set: &[Family]) -> Result<NakanoWitness> {
    space.require_am_family()?;
    if set.is_empty() {
        return Err(Error::InvalidArgument("the set must be nonempty".into()));
    }
    let mut sup_norms = scalar::zero();
    let mut least_bound = space.zero();
    for a in set {
        a.check(space)?;
        sup_norms = sup_norms.max(a.sup_norm(space)?);
        least_bound = space.join(&least_bound, &a.pointwise_sup())?;
    }
    let inf_bound_norms = space.norm(&least_bound)?;
    let equal = sup_norms == inf_bound_norms;
    Ok(NakanoWitness { sup_norms, inf_bound_norms, least_bound, equal })
}
