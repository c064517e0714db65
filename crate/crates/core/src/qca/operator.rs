use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use super::linalg::{Matrix, ZERO};
use super::QcaError;

/// Linear map between tensor products, `out = ⊗ out_dims`, `in = ⊗ in_dims`.
///
/// Basis indices are mixed-radix with the first factor most significant.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    pub matrix: Matrix,
    pub in_dims: Vec<usize>,
    pub out_dims: Vec<usize>,
}

impl DenseOperator {
    pub fn new(matrix: Matrix, in_dims: Vec<usize>, out_dims: Vec<usize>) -> Result<Self, QcaError> {
        let (i, o): (usize, usize) = (in_dims.iter().product(), out_dims.iter().product());
        if matrix.cols() != i || matrix.rows() != o {
            return Err(QcaError::Shape(alloc::format!(
                "matrix {}x{} does not match dims {:?} -> {:?}",
                matrix.rows(),
                matrix.cols(),
                in_dims,
                out_dims
            )));
        }
        Ok(DenseOperator { matrix, in_dims, out_dims })
    }

    /// Operator on `dims` with the same factors in and out.
    pub fn square(matrix: Matrix, dims: Vec<usize>) -> Result<Self, QcaError> {
        DenseOperator::new(matrix, dims.clone(), dims)
    }

    pub fn identity(dims: Vec<usize>) -> Self {
        let n = dims.iter().product();
        DenseOperator { matrix: Matrix::identity(n), in_dims: dims.clone(), out_dims: dims }
    }

    /// Exchange of two factors of dimensions `a`, `b`: `|x⟩|y⟩ ↦ |y⟩|x⟩`.
    pub fn swap(a: usize, b: usize) -> Self {
        let perm: Vec<usize> = (0..a * b).map(|j| (j % b) * a + j / b).collect();
        DenseOperator { matrix: Matrix::permutation(&perm), in_dims: alloc::vec![a, b], out_dims: alloc::vec![b, a] }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &DenseOperator) -> Result<DenseOperator, QcaError> {
        if self.in_dims != other.out_dims {
            return Err(QcaError::Shape(alloc::format!(
                "cannot compose: {:?} feeds {:?}",
                other.out_dims,
                self.in_dims
            )));
        }
        Ok(DenseOperator { matrix: self.matrix.mul(&other.matrix), in_dims: other.in_dims.clone(), out_dims: self.out_dims.clone() })
    }

    /// Inverse of a unitary: the adjoint with input and output swapped.
    pub fn inverse(&self) -> DenseOperator {
        DenseOperator { matrix: self.matrix.adjoint(), in_dims: self.out_dims.clone(), out_dims: self.in_dims.clone() }
    }

    pub fn kron(&self, other: &DenseOperator) -> DenseOperator {
        let cat = |a: &[usize], b: &[usize]| a.iter().chain(b).copied().collect::<Vec<_>>();
        DenseOperator {
            matrix: self.matrix.kron(&other.matrix),
            in_dims: cat(&self.in_dims, &other.in_dims),
            out_dims: cat(&self.out_dims, &other.out_dims),
        }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.matrix.is_unitary(tol)
    }

    /// Mirror image of a two-factor map: left and right are exchanged on both
    /// the input and the output side.
    pub fn spatial_reverse(&self) -> Result<DenseOperator, QcaError> {
        if self.in_dims.len() != 2 || self.out_dims.len() != 2 {
            return Err(QcaError::Shape("spatial reversal needs exactly two factors".into()));
        }
        let (i0, i1) = (self.in_dims[0], self.in_dims[1]);
        let (o0, o1) = (self.out_dims[0], self.out_dims[1]);
        let mut m = Matrix::zeros(self.dim(), self.matrix.cols());
        for a in 0..o0 {
            for b in 0..o1 {
                for x in 0..i0 {
                    for y in 0..i1 {
                        m[(b * o0 + a, y * i0 + x)] = self.matrix[(a * o1 + b, x * i1 + y)];
                    }
                }
            }
        }
        Ok(DenseOperator { matrix: m, in_dims: alloc::vec![i1, i0], out_dims: alloc::vec![o1, o0] })
    }

    /// Columns as `(row, value)` lists without exact zeros.
    pub fn sparse_columns(&self) -> Vec<Vec<(usize, C64)>> {
        (0..self.matrix.cols())
            .map(|c| (0..self.dim()).filter_map(|r| {
                let x = self.matrix[(r, c)];
                (x != ZERO).then_some((r, x))
            }).collect())
            .collect()
    }

    /// Same factors, same matrix up to a global phase, within `tol`.
    pub fn approx_eq_up_to_phase(&self, other: &DenseOperator, tol: f64) -> bool {
        self.in_dims == other.in_dims
            && self.out_dims == other.out_dims
            && self.matrix.phase_aligned_diff(&other.matrix) <= tol
    }
}
