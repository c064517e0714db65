//! A 2D shift on a strip of width `W`, periodic in the short direction, read
//! as a 1D QCA whose supersites are the columns (`W` qubits each).

use alloc::vec::Vec;

use super::linalg::Matrix;
use super::margolus::MargolusQca;
use super::QcaError;

pub const MAX_WIDTH: usize = 3;

/// Cyclic relabelling `y ↦ y + 1 (mod W)` of the qubits in a supersite.
/// Qubit `y` is bit `W-1-y` of the basis index.
pub fn column_translation(width: usize) -> Matrix {
    let dim = 1usize << width;
    let perm: Vec<usize> = (0..dim)
        .map(|j| {
            let mut out = 0;
            for y in 0..width {
                if j >> (width - 1 - y) & 1 == 1 {
                    let y2 = (y + 1) % width;
                    out |= 1 << (width - 1 - y2);
                }
            }
            out
        })
        .collect();
    Matrix::permutation(&perm)
}

/// `(x, y) ↦ (x + 1, y + 1)` when `diagonal`, else `(x, y) ↦ (x + 1, y)`.
/// Same packing as the 1D shift; the unpacking gate also relabels both
/// outgoing columns.
pub fn compactify_2d_shift(width: usize, diagonal: bool) -> Result<MargolusQca, QcaError> {
    if width == 0 || width > MAX_WIDTH {
        return Err(QcaError::Budget(alloc::format!("strip width {width} outside 1..={MAX_WIDTH}")));
    }
    let d = 1usize << width;
    let t = if diagonal { column_translation(width) } else { Matrix::identity(d) };
    MargolusQca::new(d, 1, d * d, Matrix::identity(d * d), t.kron(&t))
}
