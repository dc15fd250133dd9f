//! Model Banach lattices and their elements.
//!
//! Four families are representable exactly:
//!
//! * `FiniteSup`: ℝⁿ with the weighted sup norm `max cᵢ|xᵢ|`.
//! * `SeqLim`: the convergent sequences `c` with norm `θ·|lim x| ∨ ‖x‖∞`,
//!   restricted to eventually constant sequences.
//! * `FiniteAl`: ℓ¹ on finitely many atoms, optionally with a formal
//!   nonatomic band carried as one signed mass coordinate.
//! * `SupDirectSum`: the ∞-sum of two models.
//!
//! All lattice operations are coordinatewise.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModelSpace {
    FiniteSup { dual_weights: Vec<Rational> },
    SeqLim { theta: Rational },
    FiniteAl { atoms: usize, nonatomic_band: bool },
    SupDirectSum { left: Box<ModelSpace>, right: Box<ModelSpace> },
}

/// Which summand of a [`ModelSpace::SupDirectSum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl ModelSpace {
    pub fn finite_sup(dual_weights: Vec<Rational>) -> Result<Self> {
        let space = ModelSpace::FiniteSup { dual_weights };
        space.validate()?;
        Ok(space)
    }

    /// `FiniteSup` with every dual weight equal to one, i.e. `C({1..n})`.
    pub fn unit_sup(n: usize) -> Result<Self> {
        Self::finite_sup(vec![scalar::one(); n])
    }

    pub fn seq_lim(theta: Rational) -> Result<Self> {
        let space = ModelSpace::SeqLim { theta };
        space.validate()?;
        Ok(space)
    }

    pub fn finite_al(atoms: usize, nonatomic_band: bool) -> Result<Self> {
        let space = ModelSpace::FiniteAl { atoms, nonatomic_band };
        space.validate()?;
        Ok(space)
    }

    pub fn sup_sum(left: ModelSpace, right: ModelSpace) -> Result<Self> {
        let space = ModelSpace::SupDirectSum { left: Box::new(left), right: Box::new(right) };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ModelSpace::FiniteSup { dual_weights } => {
                if dual_weights.is_empty() {
                    return Err(Error::InvalidSpace("FiniteSup needs n >= 1".into()));
                }
                if dual_weights.iter().any(|c| !c.is_positive()) {
                    return Err(Error::InvalidSpace("dual weights must be positive".into()));
                }
                Ok(())
            }
            ModelSpace::SeqLim { theta } => {
                if *theta < scalar::one() {
                    return Err(Error::InvalidSpace("SeqLim needs theta >= 1".into()));
                }
                Ok(())
            }
            ModelSpace::FiniteAl { atoms, nonatomic_band } => {
                if *atoms == 0 && !nonatomic_band {
                    return Err(Error::InvalidSpace("FiniteAl with no atoms must carry the nonatomic band".into()));
                }
                Ok(())
            }
            ModelSpace::SupDirectSum { left, right } => {
                left.validate()?;
                right.validate()
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ModelSpace::FiniteSup { .. } => "FiniteSup",
            ModelSpace::SeqLim { .. } => "SeqLim",
            ModelSpace::FiniteAl { .. } => "FiniteAL",
            ModelSpace::SupDirectSum { .. } => "SupDirectSum",
        }
    }

    /// True for the AM families: `FiniteSup`, `SeqLim`, and sums of those.
    pub fn is_am_family(&self) -> bool {
        match self {
            ModelSpace::FiniteSup { .. } | ModelSpace::SeqLim { .. } => true,
            ModelSpace::FiniteAl { .. } => false,
            ModelSpace::SupDirectSum { left, right } => left.is_am_family() && right.is_am_family(),
        }
    }

    pub fn require_am_family(&self) -> Result<()> {
        if self.is_am_family() {
            Ok(())
        } else {
            Err(Error::NotAmFamily(self.kind_name().into()))
        }
    }

    /// Finite dimension, or `None` for spaces containing a `SeqLim` summand.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            ModelSpace::FiniteSup { dual_weights } => Some(dual_weights.len()),
            ModelSpace::SeqLim { .. } => None,
            ModelSpace::FiniteAl { atoms, nonatomic_band } => Some(atoms + usize::from(*nonatomic_band)),
            ModelSpace::SupDirectSum { left, right } => Some(left.dimension()? + right.dimension()?),
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            ModelSpace::FiniteSup { dual_weights } => Element::Finite(vec![scalar::zero(); dual_weights.len()]),
            ModelSpace::SeqLim { .. } => Element::constant_seq(scalar::zero()),
            ModelSpace::FiniteAl { atoms, .. } => {
                Element::Al { atoms: vec![scalar::zero(); *atoms], nonatomic: scalar::zero() }
            }
            ModelSpace::SupDirectSum { left, right } => Element::pair(left.zero(), right.zero()),
        }
    }

    /// Checks that `x` is a well-formed element of this space.
    pub fn check(&self, x: &Element) -> Result<()> {
        match (self, x) {
            (ModelSpace::FiniteSup { dual_weights }, Element::Finite(v)) => {
                if v.len() != dual_weights.len() {
                    return Err(Error::SpaceMismatch(format!(
                        "expected {} coordinates, got {}",
                        dual_weights.len(),
                        v.len()
                    )));
                }
                Ok(())
            }
            (ModelSpace::SeqLim { .. }, Element::Seq { prefix, tail }) => {
                if prefix.last() == Some(tail) {
                    return Err(Error::SpaceMismatch("sequence is not in canonical form".into()));
                }
                Ok(())
            }
            (ModelSpace::FiniteAl { atoms, nonatomic_band }, Element::Al { atoms: v, nonatomic }) => {
                if v.len() != *atoms {
                    return Err(Error::SpaceMismatch(format!("expected {} atoms, got {}", atoms, v.len())));
                }
                if !nonatomic_band && !nonatomic.is_zero() {
                    return Err(Error::SpaceMismatch("nonatomic mass on a space without the band".into()));
                }
                Ok(())
            }
            (ModelSpace::SupDirectSum { left, right }, Element::Pair(a, b)) => {
                left.check(a)?;
                right.check(b)
            }
            (space, _) => Err(Error::SpaceMismatch(format!("element shape does not match {}", space.kind_name()))),
        }
    }

    fn check2(&self, x: &Element, y: &Element) -> Result<()> {
        self.check(x)?;
        self.check(y)
    }

    /// Applies `f` coordinatewise. The nonatomic mass is one more coordinate.
    pub fn zip_with(&self, x: &Element, y: &Element, f: &dyn Fn(&Rational, &Rational) -> Rational) -> Result<Element> {
        self.check2(x, y)?;
        Ok(zip_unchecked(x, y, f))
    }

    pub fn map(&self, x: &Element, f: &dyn Fn(&Rational) -> Rational) -> Result<Element> {
        self.check(x)?;
        Ok(map_unchecked(x, f))
    }

    pub fn join(&self, x: &Element, y: &Element) -> Result<Element> {
        self.zip_with(x, y, &|a, b| a.max(b).clone())
    }

    pub fn meet(&self, x: &Element, y: &Element) -> Result<Element> {
        self.zip_with(x, y, &|a, b| a.min(b).clone())
    }

    pub fn abs(&self, x: &Element) -> Result<Element> {
        self.map(x, &|a| a.abs())
    }

    pub fn pos_part(&self, x: &Element) -> Result<Element> {
        self.map(x, &|a| if a.is_positive() { a.clone() } else { scalar::zero() })
    }

    pub fn neg_part(&self, x: &Element) -> Result<Element> {
        self.map(x, &|a| if a.is_negative() { -a } else { scalar::zero() })
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.zip_with(x, y, &|a, b| a + b)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.zip_with(x, y, &|a, b| a - b)
    }

    pub fn scale(&self, lambda: &Rational, x: &Element) -> Result<Element> {
        self.map(x, &|a| lambda * a)
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.map(x, &|a| -a)
    }

    pub fn is_positive(&self, x: &Element) -> Result<bool> {
        self.check(x)?;
        Ok(x.coordinates().all(|a| !a.is_negative()))
    }

    pub fn is_zero(&self, x: &Element) -> Result<bool> {
        self.check(x)?;
        Ok(x.coordinates().all(Zero::is_zero))
    }

    /// `x ≤ y` in the coordinatewise order.
    pub fn le(&self, x: &Element, y: &Element) -> Result<bool> {
        let d = self.sub(y, x)?;
        let ok = d.coordinates().all(|a| !a.is_negative());
        Ok(ok)
    }

    pub fn norm(&self, x: &Element) -> Result<Rational> {
        self.check(x)?;
        Ok(norm_unchecked(self, x))
    }

    /// `x ∧ y = 0` for positive `x`, `y`.
    pub fn disjoint(&self, x: &Element, y: &Element) -> Result<bool> {
        if !self.is_positive(x)? || !self.is_positive(y)? {
            return Err(Error::NotPositive("disjointness is tested on positive elements".into()));
        }
        let m = self.meet(x, y)?;
        let ok = m.coordinates().all(Zero::is_zero);
        Ok(ok)
    }

    /// The order unit `e` with `eᵢ = 1/cᵢ`, for finite-dimensional AM families.
    pub fn order_unit(&self) -> Option<Element> {
        match self {
            ModelSpace::FiniteSup { dual_weights } => {
                Some(Element::Finite(dual_weights.iter().map(|c| c.recip()).collect()))
            }
            ModelSpace::SupDirectSum { left, right } => Some(Element::pair(left.order_unit()?, right.order_unit()?)),
            _ => None,
        }
    }

    /// Positive indicator-like elements that generate the space's lattice.
    ///
    /// For `SeqLim` these are the first `depth` unit sequences followed by the
    /// indicator of `{depth, depth+1, …}`.
    pub fn basis_probes(&self, depth: usize) -> Vec<Element> {
        match self {
            ModelSpace::FiniteSup { dual_weights } => {
                (0..dual_weights.len()).map(|i| Element::Finite(indicator(dual_weights.len(), i))).collect()
            }
            ModelSpace::SeqLim { .. } => {
                let mut out: Vec<Element> =
                    (0..depth).map(|j| Element::seq(indicator(j + 1, j), scalar::zero())).collect();
                out.push(Element::seq(vec![scalar::zero(); depth], scalar::one()));
                out
            }
            ModelSpace::FiniteAl { atoms, nonatomic_band } => {
                let mut out: Vec<Element> = (0..*atoms)
                    .map(|i| Element::Al { atoms: indicator(*atoms, i), nonatomic: scalar::zero() })
                    .collect();
                if *nonatomic_band {
                    out.push(Element::Al { atoms: vec![scalar::zero(); *atoms], nonatomic: scalar::one() });
                }
                out
            }
            ModelSpace::SupDirectSum { left, right } => {
                let mut out: Vec<Element> =
                    left.basis_probes(depth).into_iter().map(|a| Element::pair(a, right.zero())).collect();
                out.extend(right.basis_probes(depth).into_iter().map(|b| Element::pair(left.zero(), b)));
                out
            }
        }
    }
}

impl ModelSpace {
    /// Coordinates of `x` in a finite-dimensional space, in the order used by
    /// matrices and tensors. The `FiniteAl` nonatomic mass comes last.
    pub fn flatten(&self, x: &Element) -> Result<Vec<Rational>> {
        self.check(x)?;
        match (self, x) {
            (ModelSpace::SeqLim { .. }, _) => Err(Error::Unsupported("SeqLim has no finite coordinate vector".into())),
            (ModelSpace::FiniteSup { .. }, Element::Finite(v)) => Ok(v.clone()),
            (ModelSpace::FiniteAl { nonatomic_band, .. }, Element::Al { atoms, nonatomic }) => {
                let mut v = atoms.clone();
                if *nonatomic_band {
                    v.push(nonatomic.clone());
                }
                Ok(v)
            }
            (ModelSpace::SupDirectSum { left, right }, Element::Pair(a, b)) => {
                let mut v = left.flatten(a)?;
                v.extend(right.flatten(b)?);
                Ok(v)
            }
            _ => unreachable!("shape is checked before flattening"),
        }
    }

    pub fn unflatten(&self, coords: &[Rational]) -> Result<Element> {
        let dim =
            self.dimension().ok_or_else(|| Error::Unsupported("SeqLim has no finite coordinate vector".into()))?;
        if coords.len() != dim {
            return Err(Error::SpaceMismatch(format!("expected {dim} coordinates, got {}", coords.len())));
        }
        Ok(match self {
            ModelSpace::FiniteSup { .. } => Element::Finite(coords.to_vec()),
            ModelSpace::FiniteAl { atoms, nonatomic_band } => Element::Al {
                atoms: coords[..*atoms].to_vec(),
                nonatomic: if *nonatomic_band { coords[*atoms].clone() } else { scalar::zero() },
            },
            ModelSpace::SupDirectSum { left, right } => {
                let split = left.dimension().unwrap_or(0);
                Element::pair(left.unflatten(&coords[..split])?, right.unflatten(&coords[split..])?)
            }
            ModelSpace::SeqLim { .. } => unreachable!("dimension is None for SeqLim"),
        })
    }

    /// Unit vectors of a finite-dimensional space, in flattening order.
    pub fn unit_vectors(&self) -> Result<Vec<Element>> {
        let dim = self.dimension().ok_or_else(|| Error::Unsupported("SeqLim has no finite basis".into()))?;
        (0..dim).map(|i| self.unflatten(&indicator(dim, i))).collect()
    }
}

impl fmt::Display for ModelSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpace::FiniteSup { dual_weights } => write!(f, "FiniteSup(c = {})", fmt_list(dual_weights)),
            ModelSpace::SeqLim { theta } => write!(f, "SeqLim(theta = {})", scalar::format(theta)),
            ModelSpace::FiniteAl { atoms, nonatomic_band } => {
                write!(f, "FiniteAL(atoms = {atoms}{})", if *nonatomic_band { ", nonatomic band" } else { "" })
            }
            ModelSpace::SupDirectSum { left, right } => write!(f, "({left}) (+)inf ({right})"),
        }
    }
}

/// An element of a [`ModelSpace`].
///
/// `Seq` holds the eventually constant sequence `(p₁, …, pₘ, ℓ, ℓ, …)`; the
/// constructor trims the prefix so that its last entry differs from `ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Finite(Vec<Rational>),
    Seq { prefix: Vec<Rational>, tail: Rational },
    Al { atoms: Vec<Rational>, nonatomic: Rational },
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn finite(coords: Vec<Rational>) -> Self {
        Element::Finite(coords)
    }

    pub fn seq(prefix: Vec<Rational>, tail: Rational) -> Self {
        let mut prefix = prefix;
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Element::Seq { prefix, tail }
    }

    pub fn constant_seq(value: Rational) -> Self {
        Element::Seq { prefix: Vec::new(), tail: value }
    }

    pub fn al(atoms: Vec<Rational>, nonatomic: Rational) -> Self {
        Element::Al { atoms, nonatomic }
    }

    pub fn pair(left: Element, right: Element) -> Self {
        Element::Pair(Box::new(left), Box::new(right))
    }

    /// Re-trims a `Seq` representation; identity on the other shapes.
    pub fn canonical(&self) -> Element {
        match self {
            Element::Seq { prefix, tail } => Element::seq(prefix.clone(), tail.clone()),
            Element::Pair(a, b) => Element::pair(a.canonical(), b.canonical()),
            other => other.clone(),
        }
    }

    /// Value of coordinate `j` of a sequence (zero-based).
    pub fn seq_coord(prefix: &[Rational], tail: &Rational, j: usize) -> Rational {
        prefix.get(j).unwrap_or(tail).clone()
    }

    /// Every stored scalar, including sequence tails and nonatomic masses.
    pub fn coordinates(&self) -> Box<dyn Iterator<Item = &Rational> + '_> {
        match self {
            Element::Finite(v) => Box::new(v.iter()),
            Element::Seq { prefix, tail } => Box::new(prefix.iter().chain(std::iter::once(tail))),
            Element::Al { atoms, nonatomic } => Box::new(atoms.iter().chain(std::iter::once(nonatomic))),
            Element::Pair(a, b) => Box::new(a.coordinates().chain(b.coordinates())),
        }
    }

    pub fn left(&self) -> Option<&Element> {
        match self {
            Element::Pair(a, _) => Some(a),
            _ => None,
        }
    }

    pub fn right(&self) -> Option<&Element> {
        match self {
            Element::Pair(_, b) => Some(b),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Finite(v) => write!(f, "({})", fmt_list(v)),
            Element::Seq { prefix, tail } => {
                if prefix.is_empty() {
                    write!(f, "({}, ...)", scalar::format(tail))
                } else {
                    write!(f, "({}, {}, ...)", fmt_list(prefix), scalar::format(tail))
                }
            }
            Element::Al { atoms, nonatomic } => {
                write!(f, "(atoms ({}), nu = {})", fmt_list(atoms), scalar::format(nonatomic))
            }
            Element::Pair(a, b) => write!(f, "<{a}, {b}>"),
        }
    }
}

pub(crate) fn fmt_list(v: &[Rational]) -> String {
    v.iter().map(scalar::format).collect::<Vec<_>>().join(", ")
}

pub(crate) fn indicator(len: usize, at: usize) -> Vec<Rational> {
    (0..len).map(|i| if i == at { scalar::one() } else { scalar::zero() }).collect()
}

fn zip_unchecked(x: &Element, y: &Element, f: &dyn Fn(&Rational, &Rational) -> Rational) -> Element {
    match (x, y) {
        (Element::Finite(a), Element::Finite(b)) => Element::Finite(a.iter().zip(b).map(|(s, t)| f(s, t)).collect()),
        (Element::Seq { prefix: pa, tail: ta }, Element::Seq { prefix: pb, tail: tb }) => {
            let len = pa.len().max(pb.len());
            let prefix = (0..len).map(|j| f(&Element::seq_coord(pa, ta, j), &Element::seq_coord(pb, tb, j))).collect();
            Element::seq(prefix, f(ta, tb))
        }
        (Element::Al { atoms: a, nonatomic: na }, Element::Al { atoms: b, nonatomic: nb }) => {
            Element::Al { atoms: a.iter().zip(b).map(|(s, t)| f(s, t)).collect(), nonatomic: f(na, nb) }
        }
        (Element::Pair(a1, b1), Element::Pair(a2, b2)) => {
            Element::pair(zip_unchecked(a1, a2, f), zip_unchecked(b1, b2, f))
        }
        _ => unreachable!("shapes are checked before zipping"),
    }
}

fn map_unchecked(x: &Element, f: &dyn Fn(&Rational) -> Rational) -> Element {
    match x {
        Element::Finite(a) => Element::Finite(a.iter().map(f).collect()),
        Element::Seq { prefix, tail } => Element::seq(prefix.iter().map(f).collect(), f(tail)),
        Element::Al { atoms, nonatomic } => {
            Element::Al { atoms: atoms.iter().map(f).collect(), nonatomic: f(nonatomic) }
        }
        Element::Pair(a, b) => Element::pair(map_unchecked(a, f), map_unchecked(b, f)),
    }
}

fn norm_unchecked(space: &ModelSpace, x: &Element) -> Rational {
    match (space, x) {
        (ModelSpace::FiniteSup { dual_weights }, Element::Finite(v)) => {
            dual_weights.iter().zip(v).map(|(c, a)| c * a.abs()).max().unwrap_or_else(scalar::zero)
        }
        (ModelSpace::SeqLim { theta }, Element::Seq { prefix, tail }) => {
            let sup = prefix.iter().chain(std::iter::once(tail)).map(Signed::abs).max().unwrap_or_else(scalar::zero);
            sup.max(theta * tail.abs())
        }
        (ModelSpace::FiniteAl { .. }, Element::Al { atoms, nonatomic }) => {
            atoms.iter().map(Signed::abs).sum::<Rational>() + nonatomic.abs()
        }
        (ModelSpace::SupDirectSum { left, right }, Element::Pair(a, b)) => {
            norm_unchecked(left, a).max(norm_unchecked(right, b))
        }
        _ => unreachable!("shape is checked before taking the norm"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn finite_join() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let j = s.join(&Element::finite(ints(&[1, -3])), &Element::finite(ints(&[0, 4]))).unwrap();
        assert_eq!(j, Element::finite(ints(&[1, 4])));
    }

    #[test]
    fn seq_join_is_canonical() {
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        let x = Element::seq(ints(&[3]), int(0));
        let y = Element::constant_seq(int(1));
        assert_eq!(s.join(&x, &y).unwrap(), Element::seq(ints(&[3]), int(1)));
        // (3, 1, 1, ...) ∨ (0, 5, ...) needs the common refinement of prefixes
        let z = Element::seq(ints(&[0]), int(5));
        assert_eq!(s.join(&x, &z).unwrap(), Element::Seq { prefix: ints(&[3]), tail: int(5) });
        let w = Element::seq(ints(&[1, 1]), int(0));
        assert_eq!(s.join(&w, &y).unwrap(), Element::constant_seq(int(1)));
    }

    #[test]
    fn al_join_with_zero_is_positive_part() {
        let s = ModelSpace::finite_al(1, true).unwrap();
        let x = Element::al(ints(&[2]), int(-1));
        assert_eq!(s.join(&x, &s.zero()).unwrap(), Element::al(ints(&[2]), int(0)));
        assert_eq!(s.pos_part(&x).unwrap(), Element::al(ints(&[2]), int(0)));
        assert_eq!(s.neg_part(&x).unwrap(), Element::al(ints(&[0]), int(1)));
    }

    #[test]
    fn norms() {
        let seq = ModelSpace::seq_lim(int(2)).unwrap();
        assert_eq!(seq.norm(&Element::constant_seq(int(1))).unwrap(), int(2));
        assert_eq!(seq.norm(&Element::seq(ints(&[1]), int(0))).unwrap(), int(1));
        assert_eq!(seq.norm(&Element::constant_seq(int(-1))).unwrap(), int(2));
        let fin = ModelSpace::finite_sup(ints(&[4, 1])).unwrap();
        assert_eq!(fin.norm(&Element::finite(ints(&[1, 1]))).unwrap(), int(4));
        let al = ModelSpace::finite_al(2, true).unwrap();
        assert_eq!(al.norm(&Element::al(ints(&[1, -2]), q(1, 2))).unwrap(), q(7, 2));
        let sum = ModelSpace::sup_sum(fin.clone(), al.clone()).unwrap();
        let x = Element::pair(Element::finite(ints(&[1, 1])), Element::al(ints(&[3, 3]), int(0)));
        assert_eq!(sum.norm(&x).unwrap(), int(6));
    }

    #[test]
    fn disjointness() {
        let fin = ModelSpace::unit_sup(2).unwrap();
        assert!(fin.disjoint(&Element::finite(ints(&[1, 0])), &Element::finite(ints(&[0, 2]))).unwrap());
        let seq = ModelSpace::seq_lim(int(2)).unwrap();
        assert!(!seq.disjoint(&Element::seq(ints(&[1]), int(0)), &Element::constant_seq(int(1))).unwrap());
        let al = ModelSpace::finite_al(1, true).unwrap();
        assert!(al.disjoint(&Element::al(ints(&[1]), int(0)), &Element::al(ints(&[0]), int(1))).unwrap());
        assert!(matches!(
            fin.disjoint(&Element::finite(ints(&[-1, 0])), &Element::finite(ints(&[0, 2]))),
            Err(Error::NotPositive(_))
        ));
    }

    #[test]
    fn invalid_spaces_and_mismatches() {
        assert!(ModelSpace::finite_sup(vec![]).is_err());
        assert!(ModelSpace::finite_sup(ints(&[1, 0])).is_err());
        assert!(ModelSpace::seq_lim(q(1, 2)).is_err());
        assert!(ModelSpace::finite_al(0, false).is_err());
        assert!(ModelSpace::finite_al(0, true).is_ok());
        let fin = ModelSpace::unit_sup(2).unwrap();
        assert!(matches!(fin.join(&Element::finite(ints(&[1])), &fin.zero()), Err(Error::SpaceMismatch(_))));
        let al = ModelSpace::finite_al(1, false).unwrap();
        assert!(al.check(&Element::al(ints(&[1]), int(1))).is_err());
        let seq = ModelSpace::seq_lim(int(1)).unwrap();
        assert!(seq.check(&Element::Seq { prefix: ints(&[1]), tail: int(1) }).is_err());
    }

    #[test]
    fn order_unit_of_weighted_sup() {
        let fin = ModelSpace::finite_sup(ints(&[4, 1])).unwrap();
        let e = fin.order_unit().unwrap();
        assert_eq!(e, Element::finite(vec![q(1, 4), int(1)]));
        assert_eq!(fin.norm(&e).unwrap(), int(1));
    }
}
