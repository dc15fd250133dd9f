//! Exhaustive sweeps comparing the structural decisions with independent
//! brute-force checks. Sweeps run on a rayon pool; results are collected in
//! enumeration order, so reports do not depend on the worker count.

use rayon::prelude::*;

use crate::al::{decide_atomic_tensor, AlProduct, AlWeight};
use crate::error::{Error, Result};
use crate::falgebra::product::{Product, TensorProduct, WeightProduct};
use crate::falgebra::tensor::{decide_tensor, ProductTensor};
use crate::falgebra::verify::verify_falgebra_axioms;
use crate::hom::sup_matrix;
use crate::scalar::{self, Rational};
use crate::space::ModelSpace;

/// Runs `f` on a pool of `workers` threads (rayon's default when `None`).
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        if n == 0 {
            return Err(Error::InvalidArgument("worker count must be at least 1".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| Error::InvalidArgument(format!("cannot start workers: {e}")))?;
    Ok(pool.install(f))
}

/// Number of example discrepancies kept in a report.
pub const MAX_EXAMPLES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCase {
    pub tensor: ProductTensor,
    pub decided: bool,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorSweepReport {
    pub cases: usize,
    /// Tensors the structural decision accepts.
    pub accepted: usize,
    /// Tensors where the decision and the axiom verifier disagree.
    pub discrepancies: usize,
    /// Accepted tensors whose decided weight product differs from the tensor
    /// on some basis pair.
    pub reproduction_failures: usize,
    /// Accepted tensors with a nonzero product against a nonatomic coordinate.
    pub annihilation_failures: usize,
    /// Tensors the verifier accepts but the decision rejects because they
    /// multiply a formal nonatomic coordinate; not counted as discrepancies.
    pub band_rejections: usize,
    pub examples: Vec<TensorCase>,
}

impl TensorSweepReport {
    pub fn clean(&self) -> bool {
        self.discrepancies == 0 && self.reproduction_failures == 0 && self.annihilation_failures == 0
    }
}

#[derive(Default)]
struct TensorOutcome {
    accepted: bool,
    discrepancy: bool,
    reproduction_failure: bool,
    annihilation_failure: bool,
    band_rejection: bool,
}

/// Decides one tensor structurally and compares with the axiom verifier.
///
/// On `FiniteSup` the decision yields a weight product, on `FiniteAl` an atom
/// weight product; either must reproduce the tensor on all basis pairs. On
/// spaces with nonatomic coordinates, accepted tensors must annihilate them.
pub fn check_tensor(space: &ModelSpace, tensor: &ProductTensor) -> Result<TensorCase> {
    Ok(check_tensor_outcome(space, tensor)?.0)
}

fn check_tensor_outcome(space: &ModelSpace, tensor: &ProductTensor) -> Result<(TensorCase, TensorOutcome)> {
    let product = TensorProduct::new(space, tensor.clone())?;
    let verified = verify_falgebra_axioms(&product, 0)?.accepted();
    let mut outcome = TensorOutcome::default();
    let decided = match space {
        ModelSpace::FiniteSup { .. } => match decide_tensor(space, tensor)? {
            Some(w) => {
                outcome.reproduction_failure = !reproduces(&WeightProduct::new(space, w)?, &product)?;
                true
            }
            None => false,
        },
        ModelSpace::FiniteAl { atoms, .. } => match decide_atomic_tensor(space, tensor)? {
            Some(diag) => {
                let w = AlWeight::new(diag[..*atoms].to_vec())?;
                outcome.reproduction_failure = !reproduces(&AlProduct::new(space, w)?, &product)?;
                true
            }
            None => false,
        },
        _ => decide_atomic_tensor(space, tensor)?.is_some(),
    };
    if decided {
        let mask = crate::al::atom_mask(space)?;
        let basis = space.unit_vectors()?;
        for (k, atom) in mask.iter().enumerate() {
            if *atom {
                continue;
            }
            for x in &basis {
                if !space.is_zero(&product.mul(x, &basis[k])?)? || !space.is_zero(&product.mul(&basis[k], x)?)? {
                    outcome.annihilation_failure = true;
                }
            }
        }
    }
    outcome.accepted = decided;
    // Nonatomic coordinates are formal: the verifier sees them as ordinary
    // coordinates, so agreement is only required on tensors that leave them
    // alone.
    outcome.band_rejection = !decided && verified && decide_atomic_tensor_ignoring_band(space, tensor)?;
    outcome.discrepancy = decided != verified && !outcome.band_rejection;
    Ok((TensorCase { tensor: tensor.clone(), decided, verified }, outcome))
}

/// Whether the tensor is diagonal and nonnegative once the formal
/// nonatomic coordinates are allowed to carry diagonal entries.
fn decide_atomic_tensor_ignoring_band(space: &ModelSpace, tensor: &ProductTensor) -> Result<bool> {
    let mask = crate::al::atom_mask(space)?;
    Ok(!mask.iter().all(|a| *a) && tensor.f_algebra_diagonal().is_some())
}

fn reproduces(p: &dyn Product, tensor: &TensorProduct) -> Result<bool> {
    let basis = p.space().unit_vectors()?;
    for x in &basis {
        for y in &basis {
            if p.mul(x, y)? != tensor.mul(x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every tensor on `space` with entries from `values`.
pub fn tensor_sweep(space: &ModelSpace, values: &[Rational], workers: Option<usize>) -> Result<TensorSweepReport> {
    let dim =
        space.dimension().ok_or_else(|| Error::Unsupported("tensor sweeps need a finite-dimensional space".into()))?;
    if values.is_empty() {
        return Err(Error::InvalidArgument("tensor sweep needs at least one entry value".into()));
    }
    let total = values
        .len()
        .checked_pow((dim * dim * dim) as u32)
        .filter(|t| *t <= 50_000_000)
        .ok_or_else(|| Error::InvalidArgument("tensor sweep too large".into()))?;
    let outcomes: Vec<(TensorCase, TensorOutcome)> = with_workers(workers, || {
        (0..total)
            .into_par_iter()
            .map(|code| check_tensor_outcome(space, &tensor_at(dim, values, code)))
            .collect::<Result<Vec<_>>>()
    })??;
    let mut report = TensorSweepReport { cases: total, ..Default::default() };
    for (case, o) in outcomes {
        report.accepted += usize::from(o.accepted);
        report.discrepancies += usize::from(o.discrepancy);
        report.reproduction_failures += usize::from(o.reproduction_failure);
        report.annihilation_failures += usize::from(o.annihilation_failure);
        report.band_rejections += usize::from(o.band_rejection);
        if (o.discrepancy || o.reproduction_failure || o.annihilation_failure) && report.examples.len() < MAX_EXAMPLES {
            report.examples.push(case);
        }
    }
    Ok(report)
}

fn tensor_at(dim: usize, values: &[Rational], mut code: usize) -> ProductTensor {
    let len = dim * dim * dim;
    let mut entries = vec![scalar::zero(); len];
    for slot in entries.iter_mut().rev() {
        *slot = values[code % values.len()].clone();
        code /= values.len();
    }
    ProductTensor::from_entries(dim, entries).expect("entry count matches the dimension")
}

/// A matrix between `FiniteSup` spaces together with the three verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCase {
    pub domain_weights: Vec<Rational>,
    pub codomain_weights: Vec<Rational>,
    pub rows: Vec<Vec<Rational>>,
    pub algebra_hom: bool,
    pub lattice_and_ball_square: bool,
    pub composition_reconstructs: bool,
}

impl HomCase {
    pub fn agrees(&self) -> bool {
        self.algebra_hom == self.lattice_and_ball_square && self.algebra_hom == self.composition_reconstructs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomSweepReport {
    pub cases: usize,
    pub algebra_homs: usize,
    pub discrepancies: usize,
    pub examples: Vec<HomCase>,
}

/// Evaluates the three homomorphism predicates on one matrix.
pub fn check_hom_matrix(c: &[Rational], d: &[Rational], rows: &[Vec<Rational>]) -> HomCase {
    let algebra_hom = sup_matrix::is_algebra_hom(c, d, rows);
    let lattice_and_ball_square = sup_matrix::is_lattice_hom(rows) && sup_matrix::ball_square(c, d, rows);
    let composition_reconstructs = sup_matrix::composition_form(c, d, rows)
        .map(|phi| sup_matrix::reconstruct(c, d, &phi) == rows)
        .unwrap_or(false);
    HomCase {
        domain_weights: c.to_vec(),
        codomain_weights: d.to_vec(),
        rows: rows.to_vec(),
        algebra_hom,
        lattice_and_ball_square,
        composition_reconstructs,
    }
}

fn tuples(values: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// All row-structured `m × n` matrices with nonzero entries from `values`.
pub fn row_structured_matrices(n: usize, m: usize, values: &[Rational]) -> Vec<Vec<Vec<Rational>>> {
    let mut rows = vec![vec![scalar::zero(); n]];
    for i in 0..n {
        for v in values.iter().filter(|v| **v != scalar::zero()) {
            let mut r = vec![scalar::zero(); n];
            r[i] = v.clone();
            rows.push(r);
        }
    }
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|mat: Vec<Vec<Rational>>| {
                rows.iter().map(move |r| {
                    let mut mat = mat.clone();
                    mat.push(r.clone());
                    mat
                })
            })
            .collect();
    }
    out
}

/// Every row-structured matrix between `FiniteSup` spaces of dimensions
/// `1..=max_n → 1..=max_m` with dual weights from `weights` and entries from
/// `entries`.
pub fn hom_sweep(
    max_n: usize,
    max_m: usize,
    weights: &[Rational],
    entries: &[Rational],
    workers: Option<usize>,
) -> Result<HomSweepReport> {
    if weights.is_empty() || weights.iter().any(|w| *w <= scalar::zero()) {
        return Err(Error::InvalidArgument("dual weights must be positive".into()));
    }
    if max_n == 0 || max_m == 0 || max_n > 4 || max_m > 4 {
        return Err(Error::InvalidArgument("dimensions must lie in 1..=4".into()));
    }
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for m in 1..=max_m {
            for c in tuples(weights, n) {
                for d in tuples(weights, m) {
                    jobs.push((n, m, c.clone(), d));
                }
            }
        }
    }
    let partial: Vec<HomSweepReport> = with_workers(workers, || {
        jobs.par_iter()
            .map(|(n, m, c, d)| {
                let mut r = HomSweepReport::default();
                for rows in row_structured_matrices(*n, *m, entries) {
                    let case = check_hom_matrix(c, d, &rows);
                    r.cases += 1;
                    r.algebra_homs += usize::from(case.algebra_hom);
                    if !case.agrees() {
                        r.discrepancies += 1;
                        if r.examples.len() < MAX_EXAMPLES {
                            r.examples.push(case);
                        }
                    }
                }
                r
            })
            .collect()
    })?;
    let mut report = HomSweepReport::default();
    for r in partial {
        report.cases += r.cases;
        report.algebra_homs += r.algebra_homs;
        report.discrepancies += r.discrepancies;
        for e in r.examples {
            if report.examples.len() < MAX_EXAMPLES {
                report.examples.push(e);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn small_tensor_sweep_is_clean() {
        let s = ModelSpace::unit_sup(1).unwrap();
        let r = tensor_sweep(&s, &[int(0), int(1), int(-1)], Some(1)).unwrap();
        assert_eq!((r.cases, r.accepted), (3, 2));
        assert!(r.clean());
    }

    #[test]
    fn band_tensors_are_rejected() {
        let s = ModelSpace::finite_al(0, true).unwrap();
        let r = tensor_sweep(&s, &[int(0), int(1)], Some(1)).unwrap();
        assert_eq!((r.cases, r.accepted, r.band_rejections), (2, 1, 1));
        assert!(r.clean());
    }

    #[test]
    fn matrix_enumeration_counts() {
        assert_eq!(row_structured_matrices(2, 2, &[int(0), int(1), int(2)]).len(), 25);
        assert_eq!(row_structured_matrices(3, 1, &[int(0), q(1, 2)]).len(), 4);
    }

    #[test]
    fn small_hom_sweep_agrees_across_worker_counts() {
        let w = [int(1), int(2)];
        let e = [int(0), q(1, 2), int(1), int(2)];
        let one = hom_sweep(2, 2, &w, &e, Some(1)).unwrap();
        let two = hom_sweep(2, 2, &w, &e, Some(2)).unwrap();
        assert_eq!(one, two);
        assert_eq!(one.discrepancies, 0);
        assert!(one.algebra_homs > 0);
    }
}
