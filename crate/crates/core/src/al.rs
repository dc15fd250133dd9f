//! f-algebra products on AL models.
//!
//! Every f-algebra product on a `FiniteAl` space is
//! `P(f,g) = Σᵢ wᵢ eᵢ*(f) eᵢ*(g) eᵢ` for a weight `w ≥ 0` on the atoms; the
//! nonatomic band carries no lattice-homomorphism functional and is
//! annihilated. Nonzero products therefore exist exactly when there is an
//! atom, and products on a projection band lift through the band projection.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::falgebra::am::am_product;
use crate::falgebra::product::Product;
use crate::falgebra::tensor::ProductTensor;
use crate::scalar::{self, Rational};
use crate::space::{fmt_list, indicator, Element, ModelSpace, Side};
use crate::spectrum::AtomId;

/// Nonnegative weights on the atoms of a `FiniteAl` space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlWeight(Vec<Rational>);

impl AlWeight {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.is_negative()) {
            return Err(Error::InadmissibleWeight(format!("atom weight {} is negative", scalar::format(v))));
        }
        Ok(AlWeight(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn sup_norm(&self) -> Rational {
        self.0.iter().max().cloned().unwrap_or_else(scalar::zero)
    }
}

impl fmt::Display for AlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_list(&self.0))
    }
}

#[derive(Debug, Clone)]
pub struct AlProduct {
    space: ModelSpace,
    weight: AlWeight,
}

impl AlProduct {
    pub fn new(space: &ModelSpace, weight: AlWeight) -> Result<Self> {
        let ModelSpace::FiniteAl { atoms, .. } = space else {
            return Err(Error::Unsupported(format!("atomic products on {}", space.kind_name())));
        };
        if weight.0.len() != *atoms {
            return Err(Error::ShapeMismatch(format!("{} atom weights for {atoms} atoms", weight.0.len())));
        }
        Ok(AlProduct { space: space.clone(), weight })
    }

    pub fn weight(&self) -> &AlWeight {
        &self.weight
    }
}

impl Product for AlProduct {
    fn space(&self) -> &ModelSpace {
        &self.space
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.space.check(x)?;
        self.space.check(y)?;
        let (Element::Al { atoms: a, .. }, Element::Al { atoms: b, .. }) = (x, y) else {
            unreachable!("checked against a FiniteAl space")
        };
        let atoms = self.weight.0.iter().zip(a).zip(b).map(|((w, s), t)| w * s * t).collect();
        Ok(Element::Al { atoms, nonatomic: scalar::zero() })
    }
}

pub fn al_product(space: &ModelSpace, w: &AlWeight, x: &Element, y: &Element) -> Result<Element> {
    AlProduct::new(space, w.clone())?.mul(x, y)
}

/// Which flattened coordinates of a finite-dimensional space are atoms.
/// The formal nonatomic coordinate of a `FiniteAl` is not.
pub fn atom_mask(space: &ModelSpace) -> Result<Vec<bool>> {
    Ok(match space {
        ModelSpace::FiniteSup { dual_weights } => vec![true; dual_weights.len()],
        ModelSpace::FiniteAl { atoms, nonatomic_band } => {
            let mut m = vec![true; *atoms];
            if *nonatomic_band {
                m.push(false);
            }
            m
        }
        ModelSpace::SupDirectSum { left, right } => {
            let mut m = atom_mask(left)?;
            m.extend(atom_mask(right)?);
            m
        }
        ModelSpace::SeqLim { .. } => return Err(Error::Unsupported("SeqLim has no finite coordinate vector".into())),
    })
}

/// The diagonal `B[k][k][k]` over the flattened coordinates, if the tensor
/// is an f-algebra product in which nonatomic coordinates are annihilated.
pub fn decide_atomic_tensor(space: &ModelSpace, tensor: &ProductTensor) -> Result<Option<Vec<Rational>>> {
    let mask = atom_mask(space)?;
    if tensor.dim() != mask.len() {
        return Err(Error::ShapeMismatch(format!(
            "tensor of size {} on a space of dimension {}",
            tensor.dim(),
            mask.len()
        )));
    }
    let Some(diag) = tensor.f_algebra_diagonal() else { return Ok(None) };
    let annihilates = diag.iter().zip(&mask).all(|(b, atom)| *atom || b.is_zero());
    Ok(annihilates.then_some(diag))
}

/// The atom weight of a tensor on `FiniteAl`, if the tensor is an
/// f-algebra product. The coordinate functionals have norm one, so
/// `wᵢ = B[i][i][i]`.
pub fn al_decide_tensor(space: &ModelSpace, tensor: &ProductTensor) -> Result<Option<AlWeight>> {
    let ModelSpace::FiniteAl { atoms, .. } = space else {
        return Err(Error::Unsupported(format!("AL tensor decision on {}", space.kind_name())));
    };
    Ok(decide_atomic_tensor(space, tensor)?.map(|diag| AlWeight(diag[..*atoms].to_vec())))
}

/// `‖P(x,y)‖₁ ≤ ‖x‖₁‖y‖₁` for all `x`, `y` iff `max wᵢ ≤ 1`.
pub fn al_is_submultiplicative(w: &AlWeight) -> bool {
    w.sup_norm() <= scalar::one()
}

/// `(eᵢ, eᵢ)` at an atom with `wᵢ > 1`: `‖P(eᵢ,eᵢ)‖ = wᵢ > 1`.
pub fn al_submultiplicativity_witness(space: &ModelSpace, w: &AlWeight) -> Result<Option<(Element, Element)>> {
    let ModelSpace::FiniteAl { atoms, .. } = space else {
        return Err(Error::Unsupported(format!("atomic products on {}", space.kind_name())));
    };
    let max = w.sup_norm();
    if max <= scalar::one() {
        return Ok(None);
    }
    let i = w.0.iter().position(|v| *v == max).expect("the maximum is attained");
    let e = Element::Al { atoms: indicator(*atoms, i), nonatomic: scalar::zero() };
    Ok(Some((e.clone(), e)))
}

/// Whether the space has an atom.
pub fn has_atom(space: &ModelSpace) -> bool {
    first_atom(space).is_some()
}

fn first_atom(space: &ModelSpace) -> Option<AtomId> {
    match space {
        ModelSpace::FiniteSup { .. } | ModelSpace::SeqLim { .. } => Some(AtomId::Coord(0)),
        ModelSpace::FiniteAl { atoms, .. } => (*atoms > 0).then_some(AtomId::Atom(0)),
        ModelSpace::SupDirectSum { left, right } => first_atom(left)
            .map(|a| AtomId::Summand(Side::Left, Box::new(a)))
            .or_else(|| first_atom(right).map(|a| AtomId::Summand(Side::Right, Box::new(a)))),
    }
}

/// The zero product is the only f-algebra product iff there is no atom.
pub fn only_zero_product(space: &ModelSpace) -> bool {
    !has_atom(space)
}

/// A projection band of a model space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Band {
    /// One summand of a sup direct sum.
    Summand(Side),
    /// The atomic part of a `FiniteAl`.
    AtomicPart,
    /// The nonatomic band of a `FiniteAl`.
    Nonatomic,
    /// The span of one atom.
    AtomSpan(AtomId),
    /// A band of one summand.
    Within(Side, Box<Band>),
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Band::Summand(Side::Left) => write!(f, "left"),
            Band::Summand(Side::Right) => write!(f, "right"),
            Band::AtomicPart => write!(f, "atomic part"),
            Band::Nonatomic => write!(f, "nonatomic band"),
            Band::AtomSpan(id) => write!(f, "span of {id}"),
            Band::Within(Side::Left, b) => write!(f, "left:{b}"),
            Band::Within(Side::Right, b) => write!(f, "right:{b}"),
        }
    }
}

fn side_of(space: &ModelSpace, side: Side) -> Result<&ModelSpace> {
    match (space, side) {
        (ModelSpace::SupDirectSum { left, .. }, Side::Left) => Ok(left),
        (ModelSpace::SupDirectSum { right, .. }, Side::Right) => Ok(right),
        _ => Err(Error::InvalidBand(format!("{} has no summands", space.kind_name()))),
    }
}

/// The band as a model space of its own.
pub fn band_space(space: &ModelSpace, band: &Band) -> Result<ModelSpace> {
    match (space, band) {
        (_, Band::Summand(side)) => Ok(side_of(space, *side)?.clone()),
        (_, Band::Within(side, inner)) => band_space(side_of(space, *side)?, inner),
        (ModelSpace::FiniteAl { atoms, .. }, Band::AtomicPart) if *atoms > 0 => ModelSpace::finite_al(*atoms, false),
        (ModelSpace::FiniteAl { nonatomic_band: true, .. }, Band::Nonatomic) => ModelSpace::finite_al(0, true),
        (ModelSpace::FiniteSup { dual_weights }, Band::AtomSpan(AtomId::Coord(i))) if *i < dual_weights.len() => {
            ModelSpace::finite_sup(vec![dual_weights[*i].clone()])
        }
        (ModelSpace::SeqLim { .. }, Band::AtomSpan(AtomId::Coord(_))) => ModelSpace::unit_sup(1),
        (ModelSpace::FiniteAl { atoms, .. }, Band::AtomSpan(AtomId::Atom(i))) if i < atoms => {
            ModelSpace::finite_al(1, false)
        }
        (_, Band::AtomSpan(AtomId::Summand(side, inner))) => {
            band_space(side_of(space, *side)?, &Band::AtomSpan((**inner).clone()))
        }
        _ => Err(Error::InvalidBand(format!("{band} is not a band of {space}"))),
    }
}

/// `Qx` as an element of the band space.
pub fn project(space: &ModelSpace, band: &Band, x: &Element) -> Result<Element> {
    band_space(space, band)?;
    space.check(x)?;
    project_unchecked(space, band, x)
}

fn project_unchecked(space: &ModelSpace, band: &Band, x: &Element) -> Result<Element> {
    Ok(match (band, x) {
        (Band::Summand(Side::Left), Element::Pair(a, _)) => (**a).clone(),
        (Band::Summand(Side::Right), Element::Pair(_, b)) => (**b).clone(),
        (Band::Within(side, inner), Element::Pair(a, b)) => {
            let (s, v) =
                if *side == Side::Left { (side_of(space, Side::Left)?, a) } else { (side_of(space, Side::Right)?, b) };
            project_unchecked(s, inner, v)?
        }
        (Band::AtomSpan(AtomId::Summand(side, inner)), Element::Pair(a, b)) => {
            let (s, v) =
                if *side == Side::Left { (side_of(space, Side::Left)?, a) } else { (side_of(space, Side::Right)?, b) };
            project_unchecked(s, &Band::AtomSpan((**inner).clone()), v)?
        }
        (Band::AtomicPart, Element::Al { atoms, .. }) => {
            Element::Al { atoms: atoms.clone(), nonatomic: scalar::zero() }
        }
        (Band::Nonatomic, Element::Al { nonatomic, .. }) => {
            Element::Al { atoms: Vec::new(), nonatomic: nonatomic.clone() }
        }
        (Band::AtomSpan(AtomId::Coord(i)), Element::Finite(v)) => Element::Finite(vec![v[*i].clone()]),
        (Band::AtomSpan(AtomId::Coord(j)), Element::Seq { prefix, tail }) => {
            Element::Finite(vec![Element::seq_coord(prefix, tail, *j)])
        }
        (Band::AtomSpan(AtomId::Atom(i)), Element::Al { atoms, .. }) => {
            Element::Al { atoms: vec![atoms[*i].clone()], nonatomic: scalar::zero() }
        }
        _ => return Err(Error::InvalidBand(format!("{band} is not a band of {space}"))),
    })
}

/// The band element `y` as an element of the whole space.
pub fn embed(space: &ModelSpace, band: &Band, y: &Element) -> Result<Element> {
    band_space(space, band)?.check(y)?;
    embed_unchecked(space, band, y)
}

fn embed_unchecked(space: &ModelSpace, band: &Band, y: &Element) -> Result<Element> {
    let lift = |side: Side, v: Element| -> Result<Element> {
        Ok(match side {
            Side::Left => Element::pair(v, side_of(space, Side::Right)?.zero()),
            Side::Right => Element::pair(side_of(space, Side::Left)?.zero(), v),
        })
    };
    Ok(match (space, band, y) {
        (_, Band::Summand(side), _) => lift(*side, y.clone())?,
        (_, Band::Within(side, inner), _) => lift(*side, embed_unchecked(side_of(space, *side)?, inner, y)?)?,
        (_, Band::AtomSpan(AtomId::Summand(side, inner)), _) => {
            lift(*side, embed_unchecked(side_of(space, *side)?, &Band::AtomSpan((**inner).clone()), y)?)?
        }
        (ModelSpace::FiniteAl { .. }, Band::AtomicPart, Element::Al { atoms, .. }) => {
            Element::Al { atoms: atoms.clone(), nonatomic: scalar::zero() }
        }
        (ModelSpace::FiniteAl { atoms, .. }, Band::Nonatomic, Element::Al { nonatomic, .. }) => {
            Element::Al { atoms: vec![scalar::zero(); *atoms], nonatomic: nonatomic.clone() }
        }
        (ModelSpace::FiniteSup { dual_weights }, Band::AtomSpan(AtomId::Coord(i)), Element::Finite(v)) => {
            let mut out = vec![scalar::zero(); dual_weights.len()];
            out[*i] = v[0].clone();
            Element::Finite(out)
        }
        (ModelSpace::SeqLim { .. }, Band::AtomSpan(AtomId::Coord(j)), Element::Finite(v)) => {
            let mut prefix = vec![scalar::zero(); j + 1];
            prefix[*j] = v[0].clone();
            Element::seq(prefix, scalar::zero())
        }
        (ModelSpace::FiniteAl { atoms, .. }, Band::AtomSpan(AtomId::Atom(i)), Element::Al { atoms: v, .. }) => {
            let mut out = vec![scalar::zero(); *atoms];
            out[*i] = v[0].clone();
            Element::Al { atoms: out, nonatomic: scalar::zero() }
        }
        _ => return Err(Error::InvalidBand(format!("{band} is not a band of {space}"))),
    })
}

/// `P̃(x,y) = P(Qx, Qy)` for a product `P` on a projection band.
pub struct LiftedProduct {
    space: ModelSpace,
    band: Band,
    inner: Box<dyn Product>,
}

impl LiftedProduct {
    pub fn band(&self) -> &Band {
        &self.band
    }
}

impl Product for LiftedProduct {
    fn space(&self) -> &ModelSpace {
        &self.space
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        let qx = project(&self.space, &self.band, x)?;
        let qy = project(&self.space, &self.band, y)?;
        embed_unchecked(&self.space, &self.band, &self.inner.mul(&qx, &qy)?)
    }
}

pub fn lift_band_product(space: &ModelSpace, band: Band, inner: Box<dyn Product>) -> Result<LiftedProduct> {
    let b = band_space(space, &band)?;
    if inner.space() != &b {
        return Err(Error::InvalidBand(format!("inner product lives on {}, the band is {b}", inner.space())));
    }
    Ok(LiftedProduct { space: space.clone(), band, inner })
}

/// A nonzero f-algebra product carried by the first atom, or `None` when the
/// space has no atom.
pub fn atom_product(space: &ModelSpace) -> Result<Option<LiftedProduct>> {
    let Some(atom) = first_atom(space) else { return Ok(None) };
    let band = Band::AtomSpan(atom);
    let b = band_space(space, &band)?;
    let inner: Box<dyn Product> = match &b {
        ModelSpace::FiniteAl { .. } => Box::new(AlProduct::new(&b, AlWeight(vec![scalar::one()]))?),
        _ => Box::new(am_product(&b)?),
    };
    lift_band_product(space, band, inner).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falgebra::product::ZeroProduct;
    use crate::falgebra::verify::verify_falgebra_axioms;
    use crate::scalar::{int, q};

    fn al(atoms: &[i64], nu: i64) -> Element {
        Element::al(atoms.iter().map(|&v| int(v)).collect(), int(nu))
    }

    #[test]
    fn atomic_formula() {
        let s = ModelSpace::finite_al(2, false).unwrap();
        let w = AlWeight::new(vec![int(1), int(1)]).unwrap();
        assert_eq!(al_product(&s, &w, &al(&[1, 2], 0), &al(&[3, 4], 0)).unwrap(), al(&[3, 8], 0));
        let z = AlWeight::new(vec![int(0), int(0)]).unwrap();
        assert_eq!(al_product(&s, &z, &al(&[1, 2], 0), &al(&[3, 4], 0)).unwrap(), s.zero());
    }

    #[test]
    fn nonatomic_part_is_annihilated() {
        let s = ModelSpace::finite_al(1, true).unwrap();
        let w = AlWeight::new(vec![int(1)]).unwrap();
        assert_eq!(al_product(&s, &w, &al(&[0], 1), &al(&[5], 3)).unwrap(), s.zero());
    }

    #[test]
    fn tensor_decision() {
        let s = ModelSpace::finite_al(2, false).unwrap();
        let mut t = ProductTensor::zeros(2);
        t.set(0, 0, 0, int(1));
        t.set(1, 1, 1, q(1, 2));
        assert_eq!(al_decide_tensor(&s, &t).unwrap(), Some(AlWeight(vec![int(1), q(1, 2)])));
        let mut u = ProductTensor::zeros(2);
        u.set(0, 0, 1, int(1));
        assert_eq!(al_decide_tensor(&s, &u).unwrap(), None);
        assert_eq!(al_decide_tensor(&s, &ProductTensor::zeros(2)).unwrap(), Some(AlWeight(vec![int(0), int(0)])));
        let b = ModelSpace::finite_al(1, true).unwrap();
        let mut v = ProductTensor::zeros(2);
        v.set(1, 1, 1, int(1));
        assert_eq!(al_decide_tensor(&b, &v).unwrap(), None);
    }

    #[test]
    fn zero_product_iff_atomless() {
        assert!(only_zero_product(&ModelSpace::finite_al(0, true).unwrap()));
        assert!(!only_zero_product(&ModelSpace::finite_al(1, false).unwrap()));
        assert!(!only_zero_product(&ModelSpace::finite_al(3, true).unwrap()));
        let atomless =
            ModelSpace::sup_sum(ModelSpace::finite_al(0, true).unwrap(), ModelSpace::finite_al(0, true).unwrap())
                .unwrap();
        assert!(only_zero_product(&atomless));
        assert!(atom_product(&atomless).unwrap().is_none());
    }

    #[test]
    fn lifted_atom_product() {
        let s = ModelSpace::finite_al(1, true).unwrap();
        let p = lift_band_product(
            &s,
            Band::AtomicPart,
            Box::new(AlProduct::new(&ModelSpace::finite_al(1, false).unwrap(), AlWeight(vec![int(1)])).unwrap()),
        )
        .unwrap();
        assert_eq!(p.mul(&al(&[2], 5), &al(&[3], -1)).unwrap(), al(&[6], 0));
        assert!(verify_falgebra_axioms(&p, 0).unwrap().accepted());
    }

    #[test]
    fn lifted_summand_product() {
        let l = ModelSpace::finite_sup(vec![int(2), int(1)]).unwrap();
        let r = ModelSpace::unit_sup(1).unwrap();
        let s = ModelSpace::sup_sum(l.clone(), r).unwrap();
        let p = lift_band_product(&s, Band::Summand(Side::Left), Box::new(am_product(&l).unwrap())).unwrap();
        let x = Element::pair(Element::finite(vec![int(1), int(2)]), Element::finite(vec![int(7)]));
        assert_eq!(
            p.mul(&x, &x).unwrap(),
            Element::pair(Element::finite(vec![int(2), int(4)]), Element::finite(vec![int(0)]))
        );
        assert!(verify_falgebra_axioms(&p, 0).unwrap().accepted());
        let z = lift_band_product(
            &s,
            Band::Summand(Side::Right),
            Box::new(ZeroProduct::new(&ModelSpace::unit_sup(1).unwrap())),
        )
        .unwrap();
        assert_eq!(z.mul(&x, &x).unwrap(), s.zero());
    }

    #[test]
    fn atom_products_are_nonzero_f_algebra_products() {
        let spaces = [
            ModelSpace::finite_sup(vec![int(3)]).unwrap(),
            ModelSpace::seq_lim(int(2)).unwrap(),
            ModelSpace::finite_al(2, true).unwrap(),
            ModelSpace::sup_sum(ModelSpace::finite_al(0, true).unwrap(), ModelSpace::finite_al(1, false).unwrap())
                .unwrap(),
        ];
        for s in &spaces {
            let p = atom_product(s).unwrap().unwrap();
            assert!(verify_falgebra_axioms(&p, 2).unwrap().accepted(), "{s}");
            let probes = s.basis_probes(2);
            assert!(probes.iter().any(|x| !s.is_zero(&p.mul(x, x).unwrap()).unwrap()), "{s}");
        }
    }

    #[test]
    fn invalid_bands() {
        let s = ModelSpace::unit_sup(2).unwrap();
        assert!(band_space(&s, &Band::Summand(Side::Left)).is_err());
        assert!(band_space(&s, &Band::Nonatomic).is_err());
        assert!(band_space(&ModelSpace::finite_al(0, true).unwrap(), &Band::AtomicPart).is_err());
        assert!(band_space(&ModelSpace::seq_lim(int(1)).unwrap(), &Band::AtomSpan(AtomId::Limit)).is_err());
    }

    #[test]
    fn submultiplicativity() {
        let s = ModelSpace::finite_al(2, false).unwrap();
        let w = AlWeight::new(vec![q(1, 2), int(2)]).unwrap();
        assert!(!al_is_submultiplicative(&w));
        let (x, y) = al_submultiplicativity_witness(&s, &w).unwrap().unwrap();
        let p = al_product(&s, &w, &x, &y).unwrap();
        assert!(s.norm(&p).unwrap() > s.norm(&x).unwrap() * s.norm(&y).unwrap());
        assert!(AlWeight::new(vec![int(-1)]).is_err());
    }
}
