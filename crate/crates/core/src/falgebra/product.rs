//! Bilinear products on model spaces.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::falgebra::tensor::ProductTensor;
use crate::falgebra::weight::{wx_membership, Weight};
use crate::scalar;
use crate::space::{indicator, Element, ModelSpace, Side};
use crate::spectrum::{self, AtomId};

/// A bilinear map `X × X → X` on a fixed model space.
pub trait Product: Send + Sync {
    fn space(&self) -> &ModelSpace;

    fn mul(&self, x: &Element, y: &Element) -> Result<Element>;
}

impl<P: Product + ?Sized> Product for Box<P> {
    fn space(&self) -> &ModelSpace {
        (**self).space()
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        (**self).mul(x, y)
    }
}

/// The f-algebra product `P(f,g)(x*) = w₋₁(x*) f(x*) g(x*)` of a weight
/// `w ∈ (W_X)₊`.
#[derive(Debug, Clone)]
pub struct WeightProduct {
    space: ModelSpace,
    weight: Weight,
}

impl WeightProduct {
    pub fn new(space: &ModelSpace, weight: Weight) -> Result<Self> {
        space.require_am_family()?;
        weight.check(space)?;
        if !weight.is_nonnegative() {
            return Err(Error::InadmissibleWeight(format!("weight {weight} has a negative value")));
        }
        let membership = wx_membership(space, &weight)?;
        if let Some(w) = membership.witness {
            return Err(Error::InadmissibleWeight(format!(
                "w_-1 is discontinuous along {}: {} vs {}",
                w.datum,
                scalar::format(&w.along_net),
                scalar::format(&w.at_limit)
            )));
        }
        Ok(WeightProduct { space: space.clone(), weight })
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }
}

impl Product for WeightProduct {
    fn space(&self) -> &ModelSpace {
        &self.space
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.space.check(x)?;
        self.space.check(y)?;
        let depth = spectrum::depth_for([x, y]).max(self.weight.depth());
        spectrum::from_atom_values(&self.space, depth, &mut |atom| {
            Ok(self.weight.rescaled(atom)?
                * spectrum::evaluate(&self.space, atom, x)?
                * spectrum::evaluate(&self.space, atom, y)?)
        })
        .map_err(|e| match e {
            Error::SpaceMismatch(msg) => Error::InvariantBreach(format!("weight product left the space: {msg}")),
            other => other,
        })
    }
}

/// Product given by structure constants on a finite-dimensional space.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    space: ModelSpace,
    tensor: ProductTensor,
}

impl TensorProduct {
    pub fn new(space: &ModelSpace, tensor: ProductTensor) -> Result<Self> {
        let dim = space
            .dimension()
            .ok_or_else(|| Error::Unsupported("tensor products need a finite-dimensional space".into()))?;
        if tensor.dim() != dim {
            return Err(Error::ShapeMismatch(format!("tensor of size {} on a space of dimension {dim}", tensor.dim())));
        }
        Ok(TensorProduct { space: space.clone(), tensor })
    }

    pub fn tensor(&self) -> &ProductTensor {
        &self.tensor
    }
}

impl Product for TensorProduct {
    fn space(&self) -> &ModelSpace {
        &self.space
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        let a = self.space.flatten(x)?;
        let b = self.space.flatten(y)?;
        let n = self.tensor.dim();
        let mut out = vec![scalar::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = ai * bj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let t = self.tensor.get(i, j, k);
                    if !t.is_zero() {
                        *slot += &coeff * t;
                    }
                }
            }
        }
        self.space.unflatten(&out)
    }
}

#[derive(Debug, Clone)]
pub struct ZeroProduct {
    space: ModelSpace,
}

impl ZeroProduct {
    pub fn new(space: &ModelSpace) -> Self {
        ZeroProduct { space: space.clone() }
    }
}

impl Product for ZeroProduct {
    fn space(&self) -> &ModelSpace {
        &self.space
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.space.check(x)?;
        self.space.check(y)?;
        Ok(self.space.zero())
    }
}

/// Wraps an arbitrary closure as a [`Product`].
pub struct FnProduct<F> {
    space: ModelSpace,
    f: F,
}

impl<F> FnProduct<F>
where
    F: Fn(&Element, &Element) -> Result<Element> + Send + Sync,
{
    pub fn new(space: &ModelSpace, f: F) -> Self {
        FnProduct { space: space.clone(), f }
    }
}

impl<F> Product for FnProduct<F>
where
    F: Fn(&Element, &Element) -> Result<Element> + Send + Sync,
{
    fn space(&self) -> &ModelSpace {
        &self.space
    }

    fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        (self.f)(x, y)
    }
}

/// `P(x, y)` for the weight product of `w`.
pub fn product(space: &ModelSpace, w: &Weight, x: &Element, y: &Element) -> Result<Element> {
    WeightProduct::new(space, w.clone())?.mul(x, y)
}

/// `‖P(x,y)‖ ≤ ‖x‖‖y‖` for all `x`, `y` holds iff `‖w‖∞ ≤ 1`.
pub fn is_submultiplicative(space: &ModelSpace, w: &Weight) -> Result<bool> {
    WeightProduct::new(space, w.clone())?;
    Ok(w.sup_norm() <= scalar::one())
}

/// A pair with `‖P(x,x)‖ > ‖x‖²`, or `None` when `‖w‖∞ ≤ 1`.
///
/// `x` is the norm-one peak element at an atom where `w` is maximal, so
/// `‖P(x,x)‖ = max w`.
pub fn submultiplicativity_witness(space: &ModelSpace, w: &Weight) -> Result<Option<(Element, Element)>> {
    if is_submultiplicative(space, w)? {
        return Ok(None);
    }
    let depth = w.depth();
    let max = w.sup_norm();
    let atom = spectrum::dual_atoms_with_depth(space, depth)
        .into_iter()
        .find(|a| w.at(&a.id).map(|v| v == max).unwrap_or(false))
        .ok_or_else(|| Error::InvariantBreach("no atom attains the weight maximum".into()))?;
    let x = peak_element(space, &atom.id, depth)?;
    Ok(Some((x.clone(), x)))
}

/// A positive norm-one element whose unit-representative value at `id` is 1.
///
/// `Tail` peaks at coordinate `depth`, the first coordinate of the tail class.
pub fn peak_element(space: &ModelSpace, id: &AtomId, depth: usize) -> Result<Element> {
    match (space, id) {
        (ModelSpace::FiniteSup { dual_weights }, AtomId::Coord(i)) if *i < dual_weights.len() => {
            let mut v = indicator(dual_weights.len(), *i);
            v[*i] = dual_weights[*i].recip();
            Ok(Element::Finite(v))
        }
        (ModelSpace::SeqLim { .. }, AtomId::Coord(j)) => Ok(Element::seq(indicator(j + 1, *j), scalar::zero())),
        (ModelSpace::SeqLim { .. }, AtomId::Tail) => Ok(Element::seq(indicator(depth + 1, depth), scalar::zero())),
        (ModelSpace::SeqLim { theta }, AtomId::Limit) => Ok(Element::constant_seq(theta.recip())),
        (ModelSpace::FiniteAl { atoms, .. }, AtomId::Atom(i)) if i < atoms => {
            Ok(Element::Al { atoms: indicator(*atoms, *i), nonatomic: scalar::zero() })
        }
        (ModelSpace::SupDirectSum { left, right }, AtomId::Summand(side, inner)) => Ok(match side {
            Side::Left => Element::pair(peak_element(left, inner, depth)?, right.zero()),
            Side::Right => Element::pair(left.zero(), peak_element(right, inner, depth)?),
        }),
        _ => Err(Error::SpaceMismatch(format!("{id} is not a dual atom of {}", space.kind_name()))),
    }
}

/// `x·…·x` (`n ≥ 1` factors), multiplied from the left.
pub fn power(p: &dyn Product, x: &Element, n: u32) -> Result<Element> {
    if n == 0 {
        return Err(Error::InvalidArgument("power needs n >= 1".into()));
    }
    let mut acc = x.clone();
    for _ in 1..n {
        acc = p.mul(x, &acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q, Rational};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn pointwise_product_on_unit_sup() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let p = product(
            &s,
            &Weight::Finite(ints(&[1, 1])),
            &Element::finite(ints(&[2, 3])),
            &Element::finite(ints(&[5, 7])),
        )
        .unwrap();
        assert_eq!(p, Element::finite(ints(&[10, 21])));
    }

    #[test]
    fn weighted_sup_product_scales_by_dual_weight() {
        let s = ModelSpace::finite_sup(ints(&[4, 1])).unwrap();
        let p = product(
            &s,
            &Weight::Finite(vec![q(1, 2), int(3)]),
            &Element::finite(ints(&[1, 2])),
            &Element::finite(ints(&[1, 1])),
        )
        .unwrap();
        assert_eq!(p, Element::finite(ints(&[2, 6])));
    }

    #[test]
    fn seq_lim_product_of_constants() {
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        let w = Weight::seq(vec![], int(1), q(1, 2));
        let one = Element::constant_seq(int(1));
        assert_eq!(product(&s, &w, &one, &one).unwrap(), one);
        let x = Element::seq(ints(&[3, 0]), int(2));
        let w2 = Weight::seq(vec![int(5)], int(1), q(1, 2));
        assert_eq!(product(&s, &w2, &x, &x).unwrap(), Element::seq(ints(&[45, 0]), int(4)));
    }

    #[test]
    fn zero_weight_gives_zero_product() {
        let s = ModelSpace::sup_sum(ModelSpace::unit_sup(2).unwrap(), ModelSpace::seq_lim(int(2)).unwrap()).unwrap();
        let w = Weight::constant(&s, int(0)).unwrap();
        let x = Element::pair(Element::finite(ints(&[1, 2])), Element::seq(ints(&[4]), int(1)));
        assert_eq!(product(&s, &w, &x, &x).unwrap(), s.zero());
    }

    #[test]
    fn product_rejects_inadmissible_weights() {
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        let one = Element::constant_seq(int(1));
        assert!(matches!(
            product(&s, &Weight::constant(&s, int(1)).unwrap(), &one, &one),
            Err(Error::InadmissibleWeight(_))
        ));
        let f = ModelSpace::unit_sup(1).unwrap();
        assert!(matches!(
            product(&f, &Weight::Finite(ints(&[-1])), &Element::finite(ints(&[1])), &Element::finite(ints(&[1]))),
            Err(Error::InadmissibleWeight(_))
        ));
    }

    #[test]
    fn submultiplicativity() {
        let f = ModelSpace::unit_sup(2).unwrap();
        assert!(is_submultiplicative(&f, &Weight::Finite(vec![q(1, 2), int(1)])).unwrap());
        assert!(!is_submultiplicative(&f, &Weight::Finite(ints(&[2, 0]))).unwrap());
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        assert!(is_submultiplicative(&s, &Weight::seq(vec![], int(1), q(1, 2))).unwrap());
    }

    #[test]
    fn witnesses_violate_the_norm_inequality() {
        let cases = vec![
            (ModelSpace::finite_sup(ints(&[4, 1])).unwrap(), Weight::Finite(vec![int(3), q(1, 2)])),
            (ModelSpace::seq_lim(int(2)).unwrap(), Weight::seq(vec![int(5)], int(1), q(1, 2))),
            (ModelSpace::seq_lim(int(2)).unwrap(), Weight::seq(vec![], int(4), int(2))),
            (ModelSpace::seq_lim(int(1)).unwrap(), Weight::seq(vec![], int(3), int(3))),
        ];
        for (space, w) in cases {
            let (x, y) = submultiplicativity_witness(&space, &w).unwrap().unwrap();
            let p = product(&space, &w, &x, &y).unwrap();
            assert!(space.norm(&p).unwrap() > space.norm(&x).unwrap() * space.norm(&y).unwrap(), "{space} {w}");
        }
    }

    #[test]
    fn tensor_product_on_finite_space() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let mut t = ProductTensor::zeros(2);
        t.set(0, 1, 0, int(1));
        let p = TensorProduct::new(&s, t).unwrap();
        assert_eq!(
            p.mul(&Element::finite(ints(&[1, 0])), &Element::finite(ints(&[0, 1]))).unwrap(),
            Element::finite(ints(&[1, 0]))
        );
        assert!(TensorProduct::new(&ModelSpace::unit_sup(3).unwrap(), ProductTensor::zeros(2)).is_err());
    }
}
