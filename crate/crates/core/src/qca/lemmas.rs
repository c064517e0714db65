//! Numerical checks on `w` and `V_R`: operator Schmidt factors, symmetry of
//! `w` under an on-site symmetry, covariance under the internal translation
//! of compactified QCA.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C64;
use rand_core::RngCore;

use super::circuit::{compare_exact, Circuit};
use super::folded::build_w;
use super::linalg::{pauli, random_hermitian, random_unitary, Matrix, ZERO};
use super::margolus::{tensor_power, MargolusQca};
use super::operator::DenseOperator;
use super::QcaError;

/// Singular values below this are dropped from a Schmidt expansion.
pub const SCHMIDT_CUTOFF: f64 = 1e-12;
pub const PRECONDITION_TOL: f64 = 1e-10;
pub const W_TOL: f64 = 1e-9;

fn digits(mut x: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = x % dims[k];
        x /= dims[k];
    }
    out
}

fn radix(ds: impl Iterator<Item = (usize, usize)>) -> usize {
    ds.fold(0, |acc, (digit, dim)| acc * dim + digit)
}

fn split(dims: &[usize], part_a: &[usize]) -> Result<Vec<usize>, QcaError> {
    let mut seen = vec![false; dims.len()];
    for &k in part_a {
        if k >= dims.len() || seen[k] {
            return Err(QcaError::Invalid(alloc::format!("bad bipartition {part_a:?}")));
        }
        seen[k] = true;
    }
    Ok((0..dims.len()).filter(|k| !seen[*k]).collect())
}

/// `O = Σ_k A_k ⊗ B_k` with `A_k` on the factors listed in `part_a` (in that
/// order) and `B_k` on the rest (in register order).
pub fn schmidt_operator_decompose(op: &DenseOperator, part_a: &[usize]) -> Result<Vec<(Matrix, Matrix)>, QcaError> {
    if op.in_dims != op.out_dims {
        return Err(QcaError::Shape("Schmidt split needs matching input and output factors".into()));
    }
    let dims = &op.in_dims;
    let part_b = split(dims, part_a)?;
    let da: usize = part_a.iter().map(|&k| dims[k]).product();
    let db: usize = part_b.iter().map(|&k| dims[k]).product();
    let n = op.dim();
    let mut realigned = Matrix::zeros(da * da, db * db);
    for r in 0..n {
        let rd = digits(r, dims);
        for c in 0..n {
            let cd = digits(c, dims);
            let idx = |part: &[usize], d: &[usize]| radix(part.iter().map(|&k| (d[k], dims[k])));
            let (ar, ac) = (idx(part_a, &rd), idx(part_a, &cd));
            let (br, bc) = (idx(&part_b, &rd), idx(&part_b, &cd));
            realigned[(ar * da + ac, br * db + bc)] = op.matrix[(r, c)];
        }
    }
    let svd = realigned.svd();
    let mut terms = Vec::new();
    for (k, &s) in svd.s.iter().enumerate() {
        if s < SCHMIDT_CUTOFF {
            break;
        }
        let root = C64::new(libm::sqrt(s), 0.0);
        let a = Matrix::from_fn(da, da, |i, j| svd.u[(i * da + j, k)] * root);
        let b = Matrix::from_fn(db, db, |i, j| svd.v[(i * db + j, k)].conj() * root);
        terms.push((a, b));
    }
    Ok(terms)
}

/// Inverse of [`schmidt_operator_decompose`].
pub fn schmidt_reconstruct(terms: &[(Matrix, Matrix)], dims: &[usize], part_a: &[usize]) -> Result<Matrix, QcaError> {
    let part_b = split(dims, part_a)?;
    let n: usize = dims.iter().product();
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        let rd = digits(r, dims);
        for c in 0..n {
            let cd = digits(c, dims);
            let idx = |part: &[usize], d: &[usize]| radix(part.iter().map(|&k| (d[k], dims[k])));
            let (ar, ac) = (idx(part_a, &rd), idx(part_a, &cd));
            let (br, bc) = (idx(&part_b, &rd), idx(&part_b, &cd));
            m[(r, c)] = terms.iter().map(|(a, b)| a[(ar, ac)] * b[(br, bc)]).sum();
        }
    }
    Ok(m)
}

/// Largest entry of `M - tr_j(M)/d_j ⊗ 1_j`; zero iff `M` acts trivially on
/// factor `j`.
pub fn trivial_action_deviation(m: &Matrix, dims: &[usize], j: usize) -> f64 {
    let n = m.rows();
    let dj = dims[j];
    let mut worst: f64 = 0.0;
    for r in 0..n {
        let rd = digits(r, dims);
        for c in 0..n {
            let cd = digits(c, dims);
            let expected = if rd[j] != cd[j] {
                ZERO
            } else {
                let mut acc = ZERO;
                let (mut rr, mut cc) = (rd.clone(), cd.clone());
                for t in 0..dj {
                    rr[j] = t;
                    cc[j] = t;
                    acc += m[(radix(rr.iter().copied().zip(dims.iter().copied())), radix(cc.iter().copied().zip(dims.iter().copied())))];
                }
                acc / dj as f64
            };
            worst = worst.max((m[(r, c)] - expected).norm());
        }
    }
    worst
}

/// Outcome of the `w` symmetry check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryCheck {
    /// Largest entry of `[Q, s^{⊗M}]` on a ring of four sites.
    pub precondition: f64,
    /// `‖[w, s⊗s]‖`, present only when the precondition holds.
    pub commutator: Option<f64>,
}

impl SymmetryCheck {
    pub fn holds(&self) -> bool {
        self.commutator.is_some_and(|c| c <= W_TOL)
    }

    pub fn skipped(&self) -> bool {
        self.commutator.is_none()
    }
}

fn site_layer(dims: &[usize], s: &DenseOperator) -> Result<Circuit, QcaError> {
    let mut c = Circuit::new(dims.to_vec())?;
    for k in 0..dims.len() {
        c.push(s, &[k])?;
    }
    Ok(c)
}

/// Largest entry of `[C, s^{⊗n}]` for a circuit with all sites of dimension
/// `d` at both ends.
pub fn circuit_commutator(c: &Circuit, s: &Matrix) -> Result<f64, QcaError> {
    let d = s.rows();
    let s_op = DenseOperator::square(s.clone(), vec![d])?;
    let layer = site_layer(c.in_dims(), &s_op)?;
    let mut sc = layer.clone();
    sc.extend(c)?;
    let mut cs = c.clone();
    cs.extend(&layer)?;
    Ok(compare_exact(&cs, &sc)?.max_entry)
}

/// Check `[w, s⊗s] = 0`, provided `Q` commutes with `s` on every site.
pub fn check_w_symmetry(q: &MargolusQca, s: &Matrix) -> Result<SymmetryCheck, QcaError> {
    if s.rows() != q.d || !s.is_unitary(1e-10) {
        return Err(QcaError::Invalid("symmetry must be a unitary on one site".into()));
    }
    let precondition = circuit_commutator(&q.ring_circuit(4, 0)?, s)?;
    if precondition > PRECONDITION_TOL {
        return Ok(SymmetryCheck { precondition, commutator: None });
    }
    let w = build_w(q)?;
    let ss = s.kron(s);
    let commutator = w.matrix.commutator(&ss).spectral_norm();
    Ok(SymmetryCheck { precondition, commutator: Some(commutator) })
}

/// Largest commutator of a `V_R` gate with `s` on its support: the swaps
/// `S_i` and `Q_A⁻¹ S_i Q_A` for both parities of `i`.
pub fn vr_gate_symmetry(q: &MargolusQca, s: &Matrix) -> Result<f64, QcaError> {
    let d = q.d;
    let swap = DenseOperator::swap(d, d);
    let mut worst = circuit_commutator(&{
        let mut c = Circuit::new(vec![d, d])?;
        c.push(&swap, &[0, 1])?;
        c
    }, s)?;
    // Window: four A sites then B_i. The swapped A site sits at window
    // position 1 for odd i and 2 for even i.
    for pos in [1, 2] {
        let mut qa = Circuit::new(vec![d; 5])?;
        qa.push(&q.u, &[0, 1])?;
        qa.push(&q.u, &[2, 3])?;
        qa.push(&q.v, &[1, 2])?;
        let mut g = qa.clone();
        let mut sw = Circuit::new(qa.out_dims().to_vec())?;
        sw.push(&swap, &[pos, 4])?;
        g.extend(&sw)?;
        g.extend(&qa.inverse())?;
        worst = worst.max(circuit_commutator(&g, s)?);
    }
    Ok(worst)
}

/// Largest spectral norm of
/// `w T₂ O T₂† w† - T₂ w O w† T₂†` with `T₂ = T⊗T`, over single-qubit `X`, `Z`
/// on both supersites. The supersite dimension must be a power of two.
pub fn check_w_translation(q: &MargolusQca, t: &Matrix) -> Result<f64, QcaError> {
    let d = q.d;
    if !d.is_power_of_two() || t.rows() != d || t.cols() != d {
        return Err(QcaError::Invalid("translation must act on a qubit supersite".into()));
    }
    let qubits = 2 * d.trailing_zeros() as usize;
    let w = build_w(q)?.matrix;
    let tt = t.kron(t);
    let (wd, ttd) = (w.adjoint(), tt.adjoint());
    let mut worst: f64 = 0.0;
    for k in 0..qubits {
        for p in [1u8, 3] {
            let mut o = Matrix::identity(1);
            for j in 0..qubits {
                o = o.kron(&if j == k { pauli(p) } else { Matrix::identity(2) });
            }
            let lhs = w.mul(&tt).mul(&o).mul(&ttd).mul(&wd);
            let rhs = tt.mul(&w).mul(&o).mul(&wd).mul(&ttd);
            worst = worst.max(lhs.sub(&rhs).spectral_norm());
        }
    }
    Ok(worst)
}

fn symmetric_unitary(s2: &Matrix, rng: &mut impl RngCore) -> Matrix {
    let h = random_hermitian(s2.rows(), rng);
    let hs = h.add(&s2.mul(&h).mul(&s2.adjoint())).scale(C64::new(0.5, 0.0));
    Matrix::exp_i_hermitian(&hs)
}

/// Random Margolus QCA with `[Q, s^{⊗M}] = 0` for an involution `s`: the
/// gates are exponentials of `s⊗s`-averaged Hermitian matrices, then dressed
/// by a random gauge `u ↦ (g⊗h)u`, `v ↦ v(h†⊗g†)` that leaves `Q` unchanged.
/// With `shifted`, the unpacking gate follows the shift.
pub fn random_symmetric_qca(s: &Matrix, shifted: bool, rng: &mut impl RngCore) -> Result<MargolusQca, QcaError> {
    let d = s.rows();
    if s.mul(s).max_abs_diff(&Matrix::identity(d)) > 1e-12 {
        return Err(QcaError::Invalid("symmetry generator must square to one".into()));
    }
    let s2 = s.kron(s);
    if shifted {
        let v = symmetric_unitary(&s2, rng);
        return MargolusQca::new(d, 1, d * d, Matrix::identity(d * d), v);
    }
    let (u, v) = (symmetric_unitary(&s2, rng), symmetric_unitary(&s2, rng));
    let (g, h) = (random_unitary(d, rng), random_unitary(d, rng));
    let u = g.kron(&h).mul(&u);
    let v = v.mul(&h.adjoint().kron(&g.adjoint()));
    MargolusQca::from_two_site(d, u, v)
}

/// Sanity helper for tests: `s^{⊗m}` commutes with the dense ring operator.
pub fn dense_ring_commutator(q: &MargolusQca, s: &Matrix, m: usize) -> Result<f64, QcaError> {
    let u = q.ring_circuit(m, 0)?.to_dense()?.matrix;
    Ok(u.commutator(&tensor_power(s, m)).max_abs())
}
