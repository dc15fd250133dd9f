//! AM-algebras: the spaces whose constant-one weight lies in `W_X`, and their
//! unique AM-algebra product `P(f,g)(x*) = f(x*) g(x*) / ‖x*‖`.

use crate::error::{Error, Result};
use crate::falgebra::product::{Product, WeightProduct};
use crate::falgebra::weight::{wx_membership, Weight, WxMembership};
use crate::scalar::{self, Rational};
use crate::space::ModelSpace;
use crate::spectrum::{norm_weakstar_continuous, Continuity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmClassification {
    pub is_am_algebra: bool,
    /// Weak* continuity of the norm on `K_X*`.
    pub norm_continuity: Continuity,
    /// Membership of the constant-one weight in `W_X`.
    pub unit_weight: WxMembership,
    /// The constant-one weight, when it defines the AM-algebra product.
    pub am_weight: Option<Weight>,
}

/// Decides whether the space is an AM-algebra by two independent routes
/// (norm continuity and `𝟙 ∈ W_X`) and fails loudly if they disagree.
pub fn classify_am_algebra(space: &ModelSpace) -> Result<AmClassification> {
    space.require_am_family()?;
    let norm_continuity = norm_weakstar_continuous(space)?;
    let one = Weight::constant(space, scalar::one())?;
    let unit_weight = wx_membership(space, &one)?;
    if norm_continuity.continuous != unit_weight.member {
        return Err(Error::InvariantBreach(format!(
            "norm continuity ({}) and unit-weight membership ({}) disagree on {space}",
            norm_continuity.continuous, unit_weight.member
        )));
    }
    let is_am_algebra = unit_weight.member;
    Ok(AmClassification { is_am_algebra, norm_continuity, unit_weight, am_weight: is_am_algebra.then_some(one) })
}

/// The AM-algebra product, or [`Error::NotAmAlgebra`].
pub fn am_product(space: &ModelSpace) -> Result<WeightProduct> {
    match classify_am_algebra(space)?.am_weight {
        Some(w) => WeightProduct::new(space, w),
        None => Err(Error::NotAmAlgebra),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySweep {
    /// Grid weights for which the order unit is an algebraic identity.
    pub identity_weights: Vec<Weight>,
    pub weights_checked: usize,
    /// Exactly one identity-bearing weight, and it is constant one.
    pub unique: bool,
}

/// Sweeps every weight in `gridⁿ` and records which ones make the order unit
/// `e = (1/c₁, …, 1/cₙ)` a two-sided identity for the weight product.
pub fn am_product_is_unique(space: &ModelSpace, grid: &[Rational]) -> Result<IdentitySweep> {
    let ModelSpace::FiniteSup { dual_weights } = space else {
        return Err(Error::Unsupported(format!("identity sweep on {}", space.kind_name())));
    };
    if grid.is_empty() || grid.iter().any(|g| *g < scalar::zero()) {
        return Err(Error::InvalidArgument("grid must be non-empty and non-negative".into()));
    }
    let n = dual_weights.len();
    let unit = space.order_unit().expect("FiniteSup has an order unit");
    let basis = space.unit_vectors()?;
    let total =
        grid.len().checked_pow(n as u32).ok_or_else(|| Error::InvalidArgument("grid sweep too large".into()))?;

    let mut identity_weights = Vec::new();
    for mut code in 0..total {
        let mut values = vec![scalar::zero(); n];
        for slot in values.iter_mut().rev() {
            *slot = grid[code % grid.len()].clone();
            code /= grid.len();
        }
        let w = Weight::Finite(values);
        let p = WeightProduct::new(space, w.clone())?;
        let mut is_identity = true;
        for b in &basis {
            if p.mul(&unit, b)? != *b || p.mul(b, &unit)? != *b {
                is_identity = false;
                break;
            }
        }
        if is_identity {
            identity_weights.push(w);
        }
    }
    let one = Weight::constant(space, scalar::one())?;
    let unique = identity_weights.len() == 1 && identity_weights[0] == one;
    Ok(IdentitySweep { identity_weights, weights_checked: total, unique })
}
