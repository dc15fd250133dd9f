//! Lattice-homomorphism functionals of the model spaces.
//!
//! For an AM model `X` the non-zero real lattice homomorphisms of norm at most
//! one form `K_X*`; their norm-one rescalings form `K_X¹`. Each [`DualAtom`]
//! names one unnormalized evaluation functional together with its dual norm,
//! so its unit representative is `atom / dual_norm`.
//!
//! `SeqLim` has infinitely many coordinate functionals δⱼ. They are listed
//! explicitly up to a requested depth; the remaining ones are folded into the
//! symbolic [`AtomId::Tail`] class, which evaluates every eventually constant
//! sequence to its tail value once the depth covers the sequence's prefix.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, Rational};
use crate::space::{Element, ModelSpace, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomId {
    /// Coordinate evaluation δᵢ (zero-based) of `FiniteSup` or `SeqLim`.
    Coord(usize),
    /// All δⱼ of a `SeqLim` beyond the explicitly listed coordinates.
    Tail,
    /// The limit functional δ_∞ of a `SeqLim`.
    Limit,
    /// Coordinate functional eᵢ* of a `FiniteAl` atom.
    Atom(usize),
    Summand(Side, Box<AtomId>),
}

impl fmt::Display for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomId::Coord(i) => write!(f, "delta_{}", i + 1),
            AtomId::Tail => write!(f, "delta_j(j->inf)"),
            AtomId::Limit => write!(f, "delta_inf"),
            AtomId::Atom(i) => write!(f, "e_{}*", i + 1),
            AtomId::Summand(Side::Left, a) => write!(f, "left:{a}"),
            AtomId::Summand(Side::Right, a) => write!(f, "right:{a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualAtom {
    pub id: AtomId,
    pub dual_norm: Rational,
}

impl DualAtom {
    fn new(id: AtomId, dual_norm: Rational) -> Self {
        DualAtom { id, dual_norm }
    }

    /// Factor taking the atom onto the unit sphere.
    pub fn unit_scale(&self) -> Rational {
        self.dual_norm.recip()
    }

    pub(crate) fn lift(self, side: Side) -> Self {
        DualAtom { id: AtomId::Summand(side, Box::new(self.id)), dual_norm: self.dual_norm }
    }
}

impl fmt::Display for DualAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (norm {})", self.id, scalar::format(&self.dual_norm))
    }
}

/// A convergent net in `K_X*`: the atoms of `net` converge weak* to `limit`,
/// while their dual norms converge to `net_norm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceDatum {
    pub net: DualAtom,
    pub net_norm: Rational,
    pub limit: DualAtom,
}

impl fmt::Display for ConvergenceDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.net.id, self.limit.id)
    }
}

/// Atoms with no explicit `SeqLim` coordinates: only the tail class and δ_∞.
pub fn dual_atoms(space: &ModelSpace) -> Vec<DualAtom> {
    dual_atoms_with_depth(space, 0)
}

/// Atoms with `SeqLim` coordinates `0..depth` listed explicitly.
pub fn dual_atoms_with_depth(space: &ModelSpace, depth: usize) -> Vec<DualAtom> {
    match space {
        ModelSpace::FiniteSup { dual_weights } => {
            dual_weights.iter().enumerate().map(|(i, c)| DualAtom::new(AtomId::Coord(i), c.recip())).collect()
        }
        ModelSpace::SeqLim { theta } => {
            let mut out: Vec<DualAtom> = (0..depth).map(|j| DualAtom::new(AtomId::Coord(j), scalar::one())).collect();
            out.push(DualAtom::new(AtomId::Tail, scalar::one()));
            out.push(DualAtom::new(AtomId::Limit, theta.recip()));
            out
        }
        ModelSpace::FiniteAl { atoms, .. } => {
            (0..*atoms).map(|i| DualAtom::new(AtomId::Atom(i), scalar::one())).collect()
        }
        ModelSpace::SupDirectSum { left, right } => {
            let mut out: Vec<DualAtom> =
                dual_atoms_with_depth(left, depth).into_iter().map(|a| a.lift(Side::Left)).collect();
            out.extend(dual_atoms_with_depth(right, depth).into_iter().map(|a| a.lift(Side::Right)));
            out
        }
    }
}

/// Longest `SeqLim` prefix among the given elements, i.e. the depth at which
/// the tail class evaluates all of them to their tails.
pub fn depth_for<'a>(elements: impl IntoIterator<Item = &'a Element>) -> usize {
    fn depth(x: &Element) -> usize {
        match x {
            Element::Seq { prefix, .. } => prefix.len(),
            Element::Pair(a, b) => depth(a).max(depth(b)),
            _ => 0,
        }
    }
    elements.into_iter().map(depth).max().unwrap_or(0)
}

/// Looks up the atom with the given id.
pub fn find_atom(space: &ModelSpace, id: &AtomId) -> Result<DualAtom> {
    match (space, id) {
        (ModelSpace::FiniteSup { dual_weights }, AtomId::Coord(i)) => dual_weights
            .get(*i)
            .map(|c| DualAtom::new(id.clone(), c.recip()))
            .ok_or_else(|| Error::SpaceMismatch(format!("no coordinate {id}"))),
        (ModelSpace::SeqLim { .. }, AtomId::Coord(_) | AtomId::Tail) => Ok(DualAtom::new(id.clone(), scalar::one())),
        (ModelSpace::SeqLim { theta }, AtomId::Limit) => Ok(DualAtom::new(AtomId::Limit, theta.recip())),
        (ModelSpace::FiniteAl { atoms, .. }, AtomId::Atom(i)) if i < atoms => {
            Ok(DualAtom::new(id.clone(), scalar::one()))
        }
        (ModelSpace::SupDirectSum { left, right }, AtomId::Summand(side, inner)) => {
            let s = if *side == Side::Left { left } else { right };
            Ok(find_atom(s, inner)?.lift(*side))
        }
        _ => Err(Error::SpaceMismatch(format!("{id} is not a dual atom of {}", space.kind_name()))),
    }
}

/// `a(x)` for the unnormalized functional `a`.
pub fn evaluate(space: &ModelSpace, atom: &DualAtom, x: &Element) -> Result<Rational> {
    space.check(x)?;
    eval_id(space, &atom.id, x)
}

fn eval_id(space: &ModelSpace, id: &AtomId, x: &Element) -> Result<Rational> {
    match (space, id, x) {
        (ModelSpace::FiniteSup { .. }, AtomId::Coord(i), Element::Finite(v)) => {
            v.get(*i).cloned().ok_or_else(|| Error::SpaceMismatch(format!("no coordinate {id}")))
        }
        (ModelSpace::SeqLim { .. }, AtomId::Coord(j), Element::Seq { prefix, tail }) => {
            Ok(Element::seq_coord(prefix, tail, *j))
        }
        (ModelSpace::SeqLim { .. }, AtomId::Tail | AtomId::Limit, Element::Seq { tail, .. }) => Ok(tail.clone()),
        (ModelSpace::FiniteAl { .. }, AtomId::Atom(i), Element::Al { atoms, .. }) => {
            atoms.get(*i).cloned().ok_or_else(|| Error::SpaceMismatch(format!("no atom {id}")))
        }
        (ModelSpace::SupDirectSum { left, .. }, AtomId::Summand(Side::Left, inner), Element::Pair(a, _)) => {
            eval_id(left, inner, a)
        }
        (ModelSpace::SupDirectSum { right, .. }, AtomId::Summand(Side::Right, inner), Element::Pair(_, b)) => {
            eval_id(right, inner, b)
        }
        _ => Err(Error::SpaceMismatch(format!("{id} is not a dual atom of {}", space.kind_name()))),
    }
}

/// `u(x)` for the unit representative `u = a / ‖a‖`.
pub fn evaluate_unit(space: &ModelSpace, atom: &DualAtom, x: &Element) -> Result<Rational> {
    Ok(evaluate(space, atom, x)? / &atom.dual_norm)
}

/// Reassembles an element from its values on the atoms at `depth`.
///
/// For `SeqLim` the value on δ_∞ must agree with the tail value, since an
/// element of `c` converges to its tail. `FiniteAl` nonatomic mass is set to
/// zero: the formal band carries no lattice-homomorphism functional.
pub fn from_atom_values(
    space: &ModelSpace,
    depth: usize,
    value: &mut dyn FnMut(&DualAtom) -> Result<Rational>,
) -> Result<Element> {
    match space {
        ModelSpace::FiniteSup { .. } => {
            Ok(Element::Finite(dual_atoms_with_depth(space, depth).iter().map(&mut *value).collect::<Result<_>>()?))
        }
        ModelSpace::SeqLim { theta } => {
            let prefix = (0..depth)
                .map(|j| value(&DualAtom::new(AtomId::Coord(j), scalar::one())))
                .collect::<Result<Vec<_>>>()?;
            let tail = value(&DualAtom::new(AtomId::Tail, scalar::one()))?;
            let limit = value(&DualAtom::new(AtomId::Limit, theta.recip()))?;
            if tail != limit {
                return Err(Error::SpaceMismatch(format!(
                    "tail value {} differs from limit value {}",
                    scalar::format(&tail),
                    scalar::format(&limit)
                )));
            }
            Ok(Element::seq(prefix, tail))
        }
        ModelSpace::FiniteAl { .. } => Ok(Element::Al {
            atoms: dual_atoms_with_depth(space, depth).iter().map(&mut *value).collect::<Result<_>>()?,
            nonatomic: scalar::zero(),
        }),
        ModelSpace::SupDirectSum { left, right } => {
            let a = from_atom_values(left, depth, &mut |atom| value(&atom.clone().lift(Side::Left)))?;
            let b = from_atom_values(right, depth, &mut |atom| value(&atom.clone().lift(Side::Right)))?;
            Ok(Element::pair(a, b))
        }
    }
}

/// The non-trivial convergent nets of `K_X*` for the built-in families.
///
/// Finite families have a discrete spectrum and contribute nothing; `SeqLim`
/// contributes δⱼ → δ_∞. A new family must declare its data here.
pub fn convergence_data(space: &ModelSpace) -> Vec<ConvergenceDatum> {
    match space {
        ModelSpace::FiniteSup { .. } | ModelSpace::FiniteAl { .. } => Vec::new(),
        ModelSpace::SeqLim { theta } => vec![ConvergenceDatum {
            net: DualAtom::new(AtomId::Tail, scalar::one()),
            net_norm: scalar::one(),
            limit: DualAtom::new(AtomId::Limit, theta.recip()),
        }],
        ModelSpace::SupDirectSum { left, right } => {
            let lift = |d: ConvergenceDatum, side| ConvergenceDatum {
                net: d.net.lift(side),
                net_norm: d.net_norm,
                limit: d.limit.lift(side),
            };
            let mut out: Vec<_> = convergence_data(left).into_iter().map(|d| lift(d, Side::Left)).collect();
            out.extend(convergence_data(right).into_iter().map(|d| lift(d, Side::Right)));
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityWitness {
    pub datum: ConvergenceDatum,
    pub along_net: Rational,
    pub at_limit: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Continuity {
    pub continuous: bool,
    pub witness: Option<ContinuityWitness>,
}

/// Whether `x* ↦ ‖x*‖` is weak* continuous on `K_X*`.
pub fn norm_weakstar_continuous(space: &ModelSpace) -> Result<Continuity> {
    space.require_am_family()?;
    for datum in convergence_data(space) {
        if datum.net_norm != datum.limit.dual_norm {
            return Ok(Continuity {
                continuous: false,
                witness: Some(ContinuityWitness {
                    along_net: datum.net_norm.clone(),
                    at_limit: datum.limit.dual_norm.clone(),
                    datum,
                }),
            });
        }
    }
    Ok(Continuity { continuous: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn weighted_sup_atoms() {
        let s = ModelSpace::finite_sup(vec![int(4), int(1)]).unwrap();
        let atoms = dual_atoms(&s);
        assert_eq!(atoms.len(), 2);
        assert_eq!(atoms[0].dual_norm, q(1, 4));
        assert_eq!(atoms[0].unit_scale(), int(4));
        assert_eq!(atoms[1].dual_norm, int(1));
    }

    #[test]
    fn seq_lim_atoms() {
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        let atoms = dual_atoms(&s);
        assert_eq!(atoms.iter().map(|a| a.id.clone()).collect::<Vec<_>>(), vec![AtomId::Tail, AtomId::Limit]);
        assert_eq!(atoms[0].dual_norm, int(1));
        assert_eq!(atoms[1].dual_norm, q(1, 2));
        assert_eq!(atoms[1].unit_scale(), int(2));
        assert_eq!(dual_atoms_with_depth(&s, 3).len(), 5);
    }

    #[test]
    fn al_atoms() {
        let s = ModelSpace::finite_al(2, true).unwrap();
        let atoms = dual_atoms(&s);
        assert_eq!(atoms.len(), 2);
        assert!(atoms.iter().all(|a| a.dual_norm == int(1)));
    }

    #[test]
    fn evaluation() {
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        let x = Element::seq(vec![int(5)], int(3));
        assert_eq!(evaluate(&s, &find_atom(&s, &AtomId::Limit).unwrap(), &x).unwrap(), int(3));
        assert_eq!(evaluate(&s, &find_atom(&s, &AtomId::Coord(0)).unwrap(), &x).unwrap(), int(5));
        assert_eq!(evaluate(&s, &find_atom(&s, &AtomId::Coord(7)).unwrap(), &x).unwrap(), int(3));
        let f = ModelSpace::unit_sup(2).unwrap();
        let y = Element::finite(vec![int(1), int(7)]);
        assert_eq!(evaluate(&f, &find_atom(&f, &AtomId::Coord(1)).unwrap(), &y).unwrap(), int(7));
        assert!(evaluate(&f, &find_atom(&s, &AtomId::Limit).unwrap(), &y).is_err());
    }

    #[test]
    fn norm_continuity() {
        let bad = norm_weakstar_continuous(&ModelSpace::seq_lim(int(2)).unwrap()).unwrap();
        assert!(!bad.continuous);
        let w = bad.witness.unwrap();
        assert_eq!(w.along_net, int(1));
        assert_eq!(w.at_limit, q(1, 2));
        assert!(norm_weakstar_continuous(&ModelSpace::seq_lim(int(1)).unwrap()).unwrap().continuous);
        assert!(norm_weakstar_continuous(&ModelSpace::finite_sup(vec![int(3), q(1, 2)]).unwrap()).unwrap().continuous);
        assert!(matches!(
            norm_weakstar_continuous(&ModelSpace::finite_al(1, false).unwrap()),
            Err(Error::NotAmFamily(_))
        ));
    }

    #[test]
    fn reassembly_rejects_inconsistent_limits() {
        let s = ModelSpace::seq_lim(int(1)).unwrap();
        let err = from_atom_values(&s, 0, &mut |a| Ok(if a.id == AtomId::Limit { int(0) } else { int(1) }));
        assert!(err.is_err());
        let ok = from_atom_values(&s, 1, &mut |a| Ok(if a.id == AtomId::Coord(0) { int(4) } else { int(1) })).unwrap();
        assert_eq!(ok, Element::seq(vec![int(4)], int(1)));
    }
}
