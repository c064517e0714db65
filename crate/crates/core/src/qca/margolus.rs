use alloc::vec;

use rand_core::RngCore;

use super::circuit::Circuit;
use super::linalg::{random_phases, random_unitary, Matrix, ONE, ZERO};
use super::operator::DenseOperator;
use super::QcaError;

pub const UNITARY_TOL: f64 = 1e-10;

/// Two-layer form `Q = (∏ v_{2i+1,2i+2}) (∏ u_{2i,2i+1})` of a 1D QCA with
/// `u: d⊗d → ℓ⊗r` and `v: r⊗ℓ → d⊗d`.
#[derive(Debug, Clone, PartialEq)]
pub struct MargolusQca {
    pub d: usize,
    pub l: usize,
    pub r: usize,
    pub u: DenseOperator,
    pub v: DenseOperator,
}

impl MargolusQca {
    pub fn new(d: usize, l: usize, r: usize, u: Matrix, v: Matrix) -> Result<Self, QcaError> {
        if l * r != d * d {
            return Err(QcaError::Invalid(alloc::format!("l*r = {} but d^2 = {}", l * r, d * d)));
        }
        let u = DenseOperator::new(u, vec![d, d], vec![l, r])?;
        let v = DenseOperator::new(v, vec![r, l], vec![d, d])?;
        if !u.is_unitary(UNITARY_TOL) || !v.is_unitary(UNITARY_TOL) {
            return Err(QcaError::NotUnitary("Margolus gates must be unitary".into()));
        }
        Ok(MargolusQca { d, l, r, u, v })
    }

    /// Translation by one site to the right: each pair is packed into its
    /// right-hand site and unpacked one step further on.
    pub fn shift(d: usize) -> Self {
        let n = d * d;
        MargolusQca::new(d, 1, n, Matrix::identity(n), Matrix::identity(n)).expect("shift data is valid")
    }

    /// `u = v = 1` with `ℓ = r = d`: the identity QCA.
    pub fn identity(d: usize) -> Self {
        let n = d * d;
        MargolusQca::new(d, d, d, Matrix::identity(n), Matrix::identity(n)).expect("identity data is valid")
    }

    /// Brickwork circuit of two-site gates, `ℓ = r = d`.
    pub fn from_two_site(d: usize, u: Matrix, v: Matrix) -> Result<Self, QcaError> {
        MargolusQca::new(d, d, d, u, v)
    }

    /// Cluster-state entangler: CZ on every bond.
    pub fn cluster() -> Self {
        let cz = Matrix::diagonal(&[ONE, ONE, ONE, -ONE]);
        MargolusQca::from_two_site(2, cz.clone(), cz).expect("CZ is unitary")
    }

    pub fn random_fdqc(d: usize, rng: &mut impl RngCore) -> Self {
        let n = d * d;
        MargolusQca::from_two_site(d, random_unitary(n, rng), random_unitary(n, rng)).expect("random unitaries")
    }

    pub fn random_diagonal(d: usize, rng: &mut impl RngCore) -> Self {
        let n = d * d;
        MargolusQca::from_two_site(d, random_phases(n, rng), random_phases(n, rng)).expect("random phases")
    }

    /// The shift dressed with random two-site unitaries on both layers.
    pub fn random_shifted(d: usize, rng: &mut impl RngCore) -> Self {
        let n = d * d;
        MargolusQca::new(d, 1, n, random_unitary(n, rng), random_unitary(n, rng)).expect("random unitaries")
    }

    /// Representation of the mirror image `j ↦ m-1-j` of the QCA:
    /// `(d, r, ℓ, ū, v̄)` on the same pairing.
    pub fn reversed(&self) -> Result<Self, QcaError> {
        Ok(MargolusQca { d: self.d, l: self.r, r: self.l, u: self.u.spatial_reverse()?, v: self.v.spatial_reverse()? })
    }

    /// `(∏ v)(∏ u)` on a periodic chain of `m` sites. The `u` layer acts on
    /// `(o + 2i, o + 2i + 1)` and the `v` layer on `(o + 2i + 1, o + 2i + 2)`,
    /// indices mod `m`, with `o = offset`.
    pub fn ring_circuit(&self, m: usize, offset: usize) -> Result<Circuit, QcaError> {
        if m < 2 || m % 2 != 0 {
            return Err(QcaError::Invalid(alloc::format!("ring length {m} must be even")));
        }
        let mut c = Circuit::new(vec![self.d; m])?;
        for i in 0..m / 2 {
            c.push(&self.u, &[(offset + 2 * i) % m, (offset + 2 * i + 1) % m])?;
        }
        for i in 0..m / 2 {
            c.push(&self.v, &[(offset + 2 * i + 1) % m, (offset + 2 * i + 2) % m])?;
        }
        Ok(c)
    }
}

/// Dense matrix of `Q` on a periodic chain of `m` sites.
pub fn apply_margolus_on_ring(q: &MargolusQca, m: usize) -> Result<DenseOperator, QcaError> {
    q.ring_circuit(m, 0)?.to_dense()
}

/// `s^{⊗m}` for a single-site matrix `s`.
pub fn tensor_power(s: &Matrix, m: usize) -> Matrix {
    let mut acc = Matrix::identity(1);
    for _ in 0..m {
        acc = acc.kron(s);
    }
    acc
}

/// `X` as a `2 x 2` matrix.
pub fn pauli_x() -> Matrix {
    Matrix::from_rows(2, 2, vec![ZERO, ONE, ONE, ZERO])
}
