//! Structure constants of candidate products and the exact decision of which
//! of them are f-algebra products.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::falgebra::weight::Weight;
use crate::scalar::{self, Rational};
use crate::space::ModelSpace;

/// `B[i][j][k]` with `P(eᵢ, eⱼ) = Σₖ B[i][j][k] eₖ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductTensor {
    dim: usize,
    entries: Vec<Rational>,
}

impl ProductTensor {
    pub fn zeros(dim: usize) -> Self {
        ProductTensor { dim, entries: vec![scalar::zero(); dim * dim * dim] }
    }

    /// Builds a tensor from its flat entries in `(i, j, k)` row-major order.
    pub fn from_entries(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != dim * dim * dim {
            return Err(Error::ShapeMismatch(format!("{} entries for a tensor of size {dim}", entries.len())));
        }
        Ok(ProductTensor { dim, entries })
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let dim = nested.len();
        let mut entries = Vec::with_capacity(dim * dim * dim);
        for plane in nested {
            if plane.len() != dim {
                return Err(Error::ShapeMismatch("tensor is not cubic".into()));
            }
            for row in plane {
                if row.len() != dim {
                    return Err(Error::ShapeMismatch("tensor is not cubic".into()));
                }
                entries.extend(row);
            }
        }
        Ok(ProductTensor { dim, entries })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let idx = self.index(i, j, k);
        self.entries[idx] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `Some(diagonal)` when every entry is non-negative and only `B[k][k][k]`
    /// may be non-zero.
    ///
    /// Positivity of `P` on the cone is equivalent to non-negative entries,
    /// since the cone is generated by the unit vectors. For `i ≠ j`, the
    /// f-algebra property applied to the disjoint pair `eᵢ ⊥ eⱼ` forces
    /// `P(eₗ, eᵢ)` and `P(eᵢ, eₗ)` to vanish on `eⱼ`, which leaves only the
    /// diagonal.
    pub fn f_algebra_diagonal(&self) -> Option<Vec<Rational>> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let b = self.get(i, j, k);
                    if b.is_negative() || (!(i == j && j == k) && !b.is_zero()) {
                        return None;
                    }
                }
            }
        }
        Some((0..n).map(|k| self.get(k, k, k).clone()).collect())
    }

    /// Every tensor of size `dim` with entries drawn from `values`, in
    /// lexicographic order of the flat entry list.
    pub fn enumerate(dim: usize, values: &[Rational]) -> impl Iterator<Item = ProductTensor> + '_ {
        let len = dim * dim * dim;
        let total = values.len().checked_pow(len as u32).unwrap_or(usize::MAX);
        (0..total).map(move |mut code| {
            let mut entries = vec![scalar::zero(); len];
            for slot in entries.iter_mut().rev() {
                *slot = values[code % values.len()].clone();
                code /= values.len();
            }
            ProductTensor { dim, entries }
        })
    }
}

/// The weight of a tensor on `FiniteSup`, if the tensor is an f-algebra product.
///
/// The weight product has `P(eₖ, eₖ) = cₖ wₖ eₖ`, so `wₖ = B[k][k][k] / cₖ`.
pub fn decide_tensor(space: &ModelSpace, tensor: &ProductTensor) -> Result<Option<Weight>> {
    let ModelSpace::FiniteSup { dual_weights } = space else {
        return Err(Error::Unsupported(format!("tensor decision on {}", space.kind_name())));
    };
    if tensor.dim() != dual_weights.len() {
        return Err(Error::ShapeMismatch(format!(
            "tensor of size {} on a space of dimension {}",
            tensor.dim(),
            dual_weights.len()
        )));
    }
    Ok(tensor
        .f_algebra_diagonal()
        .map(|diag| Weight::Finite(diag.iter().zip(dual_weights).map(|(b, c)| b / c).collect())))
}
