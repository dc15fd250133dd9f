//! Linear operators between model spaces.
//!
//! An operator is a matrix between finite-dimensional models, an index map
//! `Tx(b) = s·x(a)` pulling coordinates back along a map of dual atoms, or
//! multiplication by a 0-homogeneous symbol on the dual atoms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::falgebra::weight::Weight;
use crate::scalar::{self, Rational};
use crate::space::{fmt_list, Element, ModelSpace};
use crate::spectrum::{self, AtomId, DualAtom};

/// One entry of an index map: the codomain atom `target` pulls back
/// `scale · source` from the domain, or is identically zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexEntry {
    pub target: AtomId,
    pub source: Option<(AtomId, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OperatorSpec {
    /// `m × n` rows in flattening order.
    Matrix(Vec<Vec<Rational>>),
    /// Codomain atoms without an entry map to zero, except `SeqLim`
    /// coordinates, which follow the entry of the tail class (a tail entry
    /// sourced from the tail class pulls back the same coordinate).
    IndexMap(Vec<IndexEntry>),
    /// Multiplication by a symbol with the shape of a [`Weight`]; on `SeqLim`
    /// the `limit` value is the symbol at δ_∞.
    Multiply(Weight),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operator {
    domain: ModelSpace,
    codomain: ModelSpace,
    spec: OperatorSpec,
}

impl Operator {
    pub fn new(domain: ModelSpace, codomain: ModelSpace, spec: OperatorSpec) -> Result<Self> {
        match &spec {
            OperatorSpec::Matrix(rows) => {
                let (n, m) = match (domain.dimension(), codomain.dimension()) {
                    (Some(n), Some(m)) => (n, m),
                    _ => return Err(Error::ShapeMismatch("matrices need finite-dimensional spaces".into())),
                };
                if rows.len() != m || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::ShapeMismatch(format!("expected a {m}x{n} matrix")));
                }
            }
            OperatorSpec::IndexMap(entries) => {
                let mut seen = BTreeMap::new();
                for e in entries {
                    spectrum::find_atom(&codomain, &e.target)?;
                    if let Some((src, scale)) = &e.source {
                        spectrum::find_atom(&domain, src)?;
                        if scale.is_negative() {
                            return Err(Error::ShapeMismatch(format!(
                                "index map scale {} is negative",
                                scalar::format(scale)
                            )));
                        }
                    }
                    if seen.insert(e.target.clone(), ()).is_some() {
                        return Err(Error::ShapeMismatch(format!("duplicate index map target {}", e.target)));
                    }
                }
            }
            OperatorSpec::Multiply(h) => {
                if domain != codomain {
                    return Err(Error::ShapeMismatch("multiplication operators are endomorphisms".into()));
                }
                h.check(&domain)?;
            }
        }
        Ok(Operator { domain, codomain, spec })
    }

    pub fn matrix(domain: ModelSpace, codomain: ModelSpace, rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(domain, codomain, OperatorSpec::Matrix(rows))
    }

    pub fn index_map(domain: ModelSpace, codomain: ModelSpace, entries: Vec<IndexEntry>) -> Result<Self> {
        Self::new(domain, codomain, OperatorSpec::IndexMap(entries))
    }

    pub fn multiply(space: ModelSpace, h: Weight) -> Result<Self> {
        Self::new(space.clone(), space, OperatorSpec::Multiply(h))
    }

    pub fn identity(space: &ModelSpace) -> Result<Self> {
        Self::multiply(space.clone(), Weight::constant(space, scalar::one())?)
    }

    pub fn domain(&self) -> &ModelSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &ModelSpace {
        &self.codomain
    }

    pub fn spec(&self) -> &OperatorSpec {
        &self.spec
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.domain.check(x)?;
        let out = match &self.spec {
            OperatorSpec::Matrix(rows) => {
                let v = self.domain.flatten(x)?;
                let image: Vec<Rational> =
                    rows.iter().map(|r| r.iter().zip(&v).fold(scalar::zero(), |acc, (a, b)| acc + a * b)).collect();
                self.codomain.unflatten(&image)?
            }
            OperatorSpec::IndexMap(entries) => {
                let depth = spectrum::depth_for([x]).max(self.explicit_depth(entries));
                let lookup: BTreeMap<&AtomId, &Option<(AtomId, Rational)>> =
                    entries.iter().map(|e| (&e.target, &e.source)).collect();
                spectrum::from_atom_values(&self.codomain, depth, &mut |atom: &DualAtom| match resolve(
                    &lookup, &atom.id,
                ) {
                    Some((src, scale)) => {
                        Ok(scale * spectrum::evaluate(&self.domain, &spectrum::find_atom(&self.domain, &src)?, x)?)
                    }
                    None => Ok(scalar::zero()),
                })
                .map_err(leaves_space)?
            }
            OperatorSpec::Multiply(h) => {
                let depth = spectrum::depth_for([x]).max(h.depth());
                spectrum::from_atom_values(&self.domain, depth, &mut |atom| {
                    Ok(h.at(&atom.id)? * spectrum::evaluate(&self.domain, atom, x)?)
                })
                .map_err(leaves_space)?
            }
        };
        Ok(out)
    }

    /// Number of `SeqLim` coordinates the description mentions explicitly.
    pub fn depth(&self) -> usize {
        match &self.spec {
            OperatorSpec::Matrix(_) => 0,
            OperatorSpec::IndexMap(entries) => self.explicit_depth(entries),
            OperatorSpec::Multiply(h) => h.depth(),
        }
    }

    /// For an index map, the scaled domain atom pulled back to `target`
    /// (`None` when the target is identically zero).
    pub fn index_source(&self, target: &AtomId) -> Option<(AtomId, Rational)> {
        let OperatorSpec::IndexMap(entries) = &self.spec else { return None };
        let lookup: BTreeMap<&AtomId, &Option<(AtomId, Rational)>> =
            entries.iter().map(|e| (&e.target, &e.source)).collect();
        resolve(&lookup, target)
    }

    fn explicit_depth(&self, entries: &[IndexEntry]) -> usize {
        fn coord(id: &AtomId) -> usize {
            match id {
                AtomId::Coord(j) => j + 1,
                AtomId::Summand(_, inner) => coord(inner),
                _ => 0,
            }
        }
        entries
            .iter()
            .flat_map(|e| [Some(&e.target), e.source.as_ref().map(|s| &s.0)])
            .flatten()
            .map(coord)
            .max()
            .unwrap_or(0)
    }

    /// The matrix of the operator in flattening order.
    pub fn to_matrix(&self) -> Result<Vec<Vec<Rational>>> {
        if let OperatorSpec::Matrix(rows) = &self.spec {
            return Ok(rows.clone());
        }
        let columns = self
            .domain
            .unit_vectors()?
            .iter()
            .map(|e| self.codomain.flatten(&self.apply(e)?))
            .collect::<Result<Vec<_>>>()?;
        let m = self.codomain.dimension().unwrap_or(0);
        Ok((0..m).map(|k| columns.iter().map(|c| c[k].clone()).collect()).collect())
    }

    /// The same operator as a matrix, for finite-dimensional spaces.
    pub fn as_matrix_operator(&self) -> Result<Operator> {
        Operator::matrix(self.domain.clone(), self.codomain.clone(), self.to_matrix()?)
    }

    pub fn is_zero_on(&self, probes: &[Element]) -> Result<bool> {
        for p in probes {
            if !self.codomain.is_zero(&self.apply(p)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn leaves_space(e: Error) -> Error {
    match e {
        Error::SpaceMismatch(msg) => Error::LeavesSpace(msg),
        other => other,
    }
}

/// Source of a codomain atom, following the tail class for unlisted
/// `SeqLim` coordinates.
fn resolve(lookup: &BTreeMap<&AtomId, &Option<(AtomId, Rational)>>, id: &AtomId) -> Option<(AtomId, Rational)> {
    if let Some(src) = lookup.get(id) {
        return (*src).clone();
    }
    let (tail, j) = tail_class(id)?;
    let (src, scale) = (*lookup.get(&tail)?).clone()?;
    Some((same_index(&src, j), scale))
}

fn tail_class(id: &AtomId) -> Option<(AtomId, usize)> {
    match id {
        AtomId::Coord(j) => Some((AtomId::Tail, *j)),
        AtomId::Summand(side, inner) => tail_class(inner).map(|(t, j)| (AtomId::Summand(*side, Box::new(t)), j)),
        _ => None,
    }
}

fn same_index(src: &AtomId, j: usize) -> AtomId {
    match src {
        AtomId::Tail => AtomId::Coord(j),
        AtomId::Summand(side, inner) => AtomId::Summand(*side, Box::new(same_index(inner, j))),
        other => other.clone(),
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::Matrix(rows) => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", fmt_list(r))).collect();
                write!(f, "[{}]", rows.join(", "))
            }
            OperatorSpec::IndexMap(entries) => {
                let parts: Vec<String> = entries
                    .iter()
                    .map(|e| match &e.source {
                        Some((src, s)) if s.is_zero() => format!("{} <- 0 ({src})", e.target),
                        Some((src, s)) => format!("{} <- {}*{src}", e.target, scalar::format(s)),
                        None => format!("{} <- 0", e.target),
                    })
                    .collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            OperatorSpec::Multiply(h) => write!(f, "M_h, h = {h}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn e(target: AtomId, src: AtomId, s: i64) -> IndexEntry {
        IndexEntry { target, source: Some((src, int(s))) }
    }

    #[test]
    fn matrix_apply() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let swap = Operator::matrix(s.clone(), s.clone(), vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        assert_eq!(swap.apply(&Element::finite(vec![int(2), int(3)])).unwrap(), Element::finite(vec![int(3), int(2)]));
        let two = Operator::matrix(s.clone(), s.clone(), vec![vec![int(2), int(0)], vec![int(0), int(2)]]).unwrap();
        assert_eq!(two.apply(&Element::finite(vec![int(1), int(0)])).unwrap(), Element::finite(vec![int(2), int(0)]));
        assert!(Operator::matrix(s.clone(), s, vec![vec![int(1)]]).is_err());
    }

    #[test]
    fn identity_index_map() {
        let s = ModelSpace::unit_sup(3).unwrap();
        let id = Operator::index_map(
            s.clone(),
            s.clone(),
            (0..3).map(|i| e(AtomId::Coord(i), AtomId::Coord(i), 1)).collect(),
        )
        .unwrap();
        let x = Element::finite(vec![int(1), int(-2), int(5)]);
        assert_eq!(id.apply(&x).unwrap(), x);
        assert_eq!(id.to_matrix().unwrap(), Operator::identity(&s).unwrap().to_matrix().unwrap());
    }

    #[test]
    fn partial_shift_on_sequences() {
        let s = ModelSpace::seq_lim(int(1)).unwrap();
        let shift = Operator::index_map(
            s.clone(),
            s.clone(),
            vec![
                e(AtomId::Coord(0), AtomId::Coord(1), 1),
                e(AtomId::Coord(1), AtomId::Coord(2), 1),
                e(AtomId::Tail, AtomId::Tail, 1),
                e(AtomId::Limit, AtomId::Limit, 1),
            ],
        )
        .unwrap();
        let x = Element::seq(vec![int(1), int(2), int(3)], int(7));
        // coordinate 2 is unlisted and follows the tail class: it keeps its own value
        assert_eq!(shift.apply(&x).unwrap(), Element::seq(vec![int(2), int(3), int(3)], int(7)));
    }

    #[test]
    fn inconsistent_tail_leaves_the_space() {
        let s = ModelSpace::seq_lim(int(1)).unwrap();
        let t = Operator::index_map(s.clone(), s.clone(), vec![e(AtomId::Tail, AtomId::Tail, 1)]).unwrap();
        assert!(matches!(t.apply(&Element::constant_seq(int(1))), Err(Error::LeavesSpace(_))));
        assert_eq!(t.apply(&Element::seq(vec![int(4)], int(0))).unwrap(), Element::seq(vec![int(4)], int(0)));
        let m = Operator::multiply(s, Weight::seq(vec![], int(1), int(0))).unwrap();
        assert!(matches!(m.apply(&Element::constant_seq(int(1))), Err(Error::LeavesSpace(_))));
    }

    #[test]
    fn negative_scales_are_rejected() {
        let s = ModelSpace::unit_sup(1).unwrap();
        assert!(Operator::index_map(s.clone(), s, vec![e(AtomId::Coord(0), AtomId::Coord(0), -1)]).is_err());
    }
}
