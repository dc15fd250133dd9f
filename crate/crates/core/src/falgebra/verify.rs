//! Brute-force check of the f-algebra axioms on a structured sample.

use std::fmt;

use crate::error::Result;
use crate::falgebra::product::Product;
use crate::scalar;
use crate::space::{Element, ModelSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `P(a, b)` is not positive for positive `a`, `b`.
    NotPositive {
        a: Element,
        b: Element,
        product: Element,
    },
    NotCommutative {
        a: Element,
        b: Element,
    },
    NotAssociative {
        a: Element,
        b: Element,
        c: Element,
    },
    /// `a ∧ b = 0` but `P(c, a) ∧ b ≠ 0` (or `P(a, c) ∧ b ≠ 0` when
    /// `multiplier_on_left` is false).
    NotFAlgebra {
        a: Element,
        b: Element,
        c: Element,
        multiplier_on_left: bool,
        meet: Element,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotPositive { a, b, product } => write!(f, "P({a}, {b}) = {product} is not positive"),
            Violation::NotCommutative { a, b } => write!(f, "P({a}, {b}) != P({b}, {a})"),
            Violation::NotAssociative { a, b, c } => write!(f, "P(P({a}, {b}), {c}) != P({a}, P({b}, {c}))"),
            Violation::NotFAlgebra { a, b, c, multiplier_on_left, meet } => {
                if *multiplier_on_left {
                    write!(f, "{a} ^ {b} = 0 but P({c}, {a}) ^ {b} = {meet}")
                } else {
                    write!(f, "{a} ^ {b} = 0 but P({a}, {c}) ^ {b} = {meet}")
                }
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    /// Number of individual checks performed.
    pub checks: usize,
}

impl AxiomReport {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sample used by [`verify_falgebra_axioms`]: the basis probes of the space
/// (`SeqLim` probes down to `depth`), their pairwise sums, and the sum of all
/// of them. All sample elements are positive.
pub fn axiom_sample(space: &ModelSpace, depth: usize) -> Result<(Vec<Element>, Vec<Element>)> {
    let basis = space.basis_probes(depth);
    let mut combos = basis.clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            combos.push(space.add(&basis[i], &basis[j])?);
            combos.push(space.add(&basis[i], &space.scale(&scalar::int(2), &basis[j])?)?);
        }
    }
    if basis.len() > 2 {
        let mut total = space.zero();
        for b in &basis {
            total = space.add(&total, b)?;
        }
        combos.push(total);
    }
    let mut seen = std::collections::HashSet::new();
    combos.retain(|x| seen.insert(x.clone()));
    Ok((basis, combos))
}

/// Checks positivity, commutativity, associativity, and the f-algebra
/// property of `product` exactly on the sample from [`axiom_sample`].
///
/// Associativity is checked on basis triples; the other axioms on all sample
/// pairs. Every violated instance is reported.
pub fn verify_falgebra_axioms(product: &dyn Product, depth: usize) -> Result<AxiomReport> {
    let space = product.space().clone();
    let (basis, sample) = axiom_sample(&space, depth)?;
    let mut report = AxiomReport::default();

    let n = sample.len();
    let mut table: Vec<Vec<Element>> = Vec::with_capacity(n);
    for a in &sample {
        let row = sample.iter().map(|b| product.mul(a, b)).collect::<Result<Vec<_>>>()?;
        table.push(row);
    }

    for i in 0..n {
        for j in 0..n {
            report.checks += 1;
            if !space.is_positive(&table[i][j])? {
                report.violations.push(Violation::NotPositive {
                    a: sample[i].clone(),
                    b: sample[j].clone(),
                    product: table[i][j].clone(),
                });
            }
            if i < j {
                report.checks += 1;
                if table[i][j] != table[j][i] {
                    report.violations.push(Violation::NotCommutative { a: sample[i].clone(), b: sample[j].clone() });
                }
            }
        }
    }

    for a in &basis {
        for b in &basis {
            let ab = product.mul(a, b)?;
            for c in &basis {
                report.checks += 1;
                let left = product.mul(&ab, c)?;
                let right = product.mul(a, &product.mul(b, c)?)?;
                if left != right {
                    report.violations.push(Violation::NotAssociative { a: a.clone(), b: b.clone(), c: c.clone() });
                }
            }
        }
    }

    for ia in 0..n {
        for ib in 0..n {
            if ia == ib || !space.disjoint(&sample[ia], &sample[ib])? {
                continue;
            }
            let b = &sample[ib];
            for ic in 0..n {
                for multiplier_on_left in [true, false] {
                    report.checks += 1;
                    let prod = if multiplier_on_left { &table[ic][ia] } else { &table[ia][ic] };
                    let meet = space.meet(prod, b)?;
                    if !space.is_zero(&meet)? {
                        report.violations.push(Violation::NotFAlgebra {
                            a: sample[ia].clone(),
                            b: b.clone(),
                            c: sample[ic].clone(),
                            multiplier_on_left,
                            meet,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falgebra::product::{TensorProduct, WeightProduct};
    use crate::falgebra::tensor::ProductTensor;
    use crate::falgebra::weight::Weight;
    use crate::scalar::{int, q};

    #[test]
    fn pointwise_product_passes() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let p = WeightProduct::new(&s, Weight::Finite(vec![int(1), int(1)])).unwrap();
        let report = verify_falgebra_axioms(&p, 0).unwrap();
        assert!(report.accepted(), "{:?}", report.violations);
        assert!(report.checks > 0);
    }

    #[test]
    fn off_diagonal_tensor_violates_the_f_algebra_property() {
        let s = ModelSpace::unit_sup(2).unwrap();
        let mut t = ProductTensor::zeros(2);
        t.set(0, 1, 0, int(1));
        let report = verify_falgebra_axioms(&TensorProduct::new(&s, t).unwrap(), 0).unwrap();
        let e1 = Element::finite(vec![int(1), int(0)]);
        let e2 = Element::finite(vec![int(0), int(1)]);
        assert!(report.violations.contains(&Violation::NotFAlgebra {
            a: e2.clone(),
            b: e1.clone(),
            c: e1.clone(),
            multiplier_on_left: true,
            meet: e1.clone(),
        }));
        assert!(report.violations.iter().any(|v| matches!(v, Violation::NotCommutative { .. })));
    }

    #[test]
    fn seq_lim_weight_product_passes() {
        let s = ModelSpace::seq_lim(int(2)).unwrap();
        let p = WeightProduct::new(&s, Weight::seq(vec![], int(1), q(1, 2))).unwrap();
        let report = verify_falgebra_axioms(&p, 3).unwrap();
        assert!(report.accepted(), "{:?}", report.violations);
    }

    #[test]
    fn negative_tensor_is_not_positive() {
        let s = ModelSpace::unit_sup(1).unwrap();
        let mut t = ProductTensor::zeros(1);
        t.set(0, 0, 0, int(-1));
        let report = verify_falgebra_axioms(&TensorProduct::new(&s, t).unwrap(), 0).unwrap();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::NotPositive { .. })));
    }
}
