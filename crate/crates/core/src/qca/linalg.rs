//! Small dense complex matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64 as C64;
use rand_core::RngCore;

pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// Row-major `rows x cols` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = C64;
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> C64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Row-major data, e.g. from a literal.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<C64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Permutation matrix sending basis state `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Matrix::zeros(perm.len(), perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = ONE;
        }
        m
    }

    pub fn diagonal(d: &[C64]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<C64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            self[(r / other.rows, c / other.cols)] * other[(r % other.rows, c % other.cols)]
        })
    }

    pub fn scale(&self, s: C64) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(-ONE))
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x.norm_sqr()).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.rows == self.cols && self.adjoint().mul(self).max_abs_diff(&Matrix::identity(self.rows)) <= tol
    }

    /// `A B - B A`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Position of the first entry of largest modulus (row-major scan).
    pub fn argmax_abs(&self) -> (usize, usize) {
        let mut best = (0, 0.0);
        for (i, x) in self.data.iter().enumerate() {
            let a = x.norm();
            if a > best.1 {
                best = (i, a);
            }
        }
        (best.0 / self.cols, best.0 % self.cols)
    }

    /// `max |A - e^{iθ} B|` with `θ` fixed by the largest entry of `B`.
    pub fn phase_aligned_diff(&self, reference: &Matrix) -> f64 {
        let k = reference.argmax_abs();
        let ph = phase_between(self[k], reference[k]);
        self.max_abs_diff(&reference.scale(ph))
    }

    /// Largest singular value by power iteration on `A†A`.
    pub fn spectral_norm(&self) -> f64 {
        let n = self.cols;
        if n == 0 || self.max_abs() == 0.0 {
            return 0.0;
        }
        let ah = self.adjoint();
        // Deterministic start with no special alignment.
        let mut x: Vec<C64> = (0..n).map(|i| C64::new(1.0 + (i as f64) * 0.618_033_988_7, 0.5)).collect();
        let mut lambda = 0.0;
        for _ in 0..500 {
            let y = ah.mul_vec(&self.mul_vec(&x));
            let norm = libm::sqrt(y.iter().map(|z| z.norm_sqr()).sum());
            if norm == 0.0 {
                return 0.0;
            }
            x = y.iter().map(|z| z / norm).collect();
            if (norm - lambda).abs() <= 1e-14 * norm {
                lambda = norm;
                break;
            }
            lambda = norm;
        }
        libm::sqrt(lambda)
    }

    /// Thin SVD `A = U diag(s) V†` by one-sided Jacobi. Singular values are
    /// returned in non-increasing order.
    pub fn svd(&self) -> Svd {
        if self.rows < self.cols {
            let t = self.adjoint().svd();
            return Svd { u: t.v, s: t.s, v: t.u };
        }
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut v = Matrix::identity(n);
        for _sweep in 0..100 {
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, ZERO);
                    for r in 0..m {
                        let (ap, aq) = (a[(r, p)], a[(r, q)]);
                        alpha += ap.norm_sqr();
                        beta += aq.norm_sqr();
                        gamma += ap.conj() * aq;
                    }
                    let g = gamma.norm();
                    if g <= 1e-15 * libm::sqrt(alpha * beta) || g == 0.0 {
                        continue;
                    }
                    rotated = true;
                    let ph = gamma.conj() / g;
                    let zeta = (beta - alpha) / (2.0 * g);
                    let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                    let c = 1.0 / libm::sqrt(1.0 + t * t);
                    let s = c * t;
                    for mat in [&mut a, &mut v] {
                        for r in 0..mat.rows {
                            let xp = mat[(r, p)];
                            let xq = mat[(r, q)] * ph;
                            mat[(r, p)] = xp * c - xq * s;
                            mat[(r, q)] = xp * s + xq * c;
                        }
                    }
                }
            }
            if !rotated {
                break;
            }
        }
        let mut order: Vec<(f64, usize)> =
            (0..n).map(|j| (libm::sqrt((0..m).map(|r| a[(r, j)].norm_sqr()).sum()), j)).collect();
        order.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap_or(core::cmp::Ordering::Equal).then(x.1.cmp(&y.1)));
        let mut u = Matrix::zeros(m, n);
        let mut vs = Matrix::zeros(n, n);
        let mut s = Vec::with_capacity(n);
        for (k, &(sv, j)) in order.iter().enumerate() {
            s.push(sv);
            for r in 0..m {
                u[(r, k)] = if sv > 0.0 { a[(r, j)] / sv } else { ZERO };
            }
            for r in 0..n {
                vs[(r, k)] = v[(r, j)];
            }
        }
        Svd { u, s, v: vs }
    }

    /// `exp(i H)` for Hermitian `H`, by scaling and squaring a Taylor series.
    pub fn exp_i_hermitian(h: &Matrix) -> Matrix {
        let n = h.rows;
        let norm = h.frobenius();
        let mut squarings = 0;
        let mut scale = 1.0;
        while norm * scale > 0.25 {
            scale *= 0.5;
            squarings += 1;
        }
        let a = h.scale(C64::new(0.0, scale));
        let mut term = Matrix::identity(n);
        let mut sum = Matrix::identity(n);
        for k in 1..=18 {
            term = term.mul(&a).scale(C64::new(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}

/// Thin singular value decomposition.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Matrix,
    pub s: Vec<f64>,
    pub v: Matrix,
}

/// Unit phase `e^{iθ}` with `a ≈ e^{iθ} b`; 1 when either is zero.
pub fn phase_between(a: C64, b: C64) -> C64 {
    let z = a * b.conj();
    let n = z.norm();
    if n == 0.0 { ONE } else { z / n }
}

pub fn uniform(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard complex Gaussian (Box-Muller).
pub fn complex_normal(rng: &mut impl RngCore) -> C64 {
    let u1 = 1.0 - uniform(rng);
    let u2 = uniform(rng);
    let r = libm::sqrt(-2.0 * libm::log(u1));
    let t = 2.0 * core::f64::consts::PI * u2;
    C64::new(r * libm::cos(t), r * libm::sin(t)) * core::f64::consts::FRAC_1_SQRT_2
}

/// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut impl RngCore) -> Matrix {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut x: Vec<C64> = (0..n).map(|_| complex_normal(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let dot: C64 = c.iter().zip(&x).map(|(a, b)| a.conj() * b).sum();
                for (xi, ci) in x.iter_mut().zip(c) {
                    *xi -= dot * ci;
                }
            }
        }
        let norm = libm::sqrt(x.iter().map(|z| z.norm_sqr()).sum());
        if norm > 1e-8 {
            cols.push(x.iter().map(|z| z / norm).collect());
        }
    }
    Matrix::from_fn(n, n, |r, c| cols[c][r])
}

/// Random Hermitian matrix with complex Gaussian entries.
pub fn random_hermitian(n: usize, rng: &mut impl RngCore) -> Matrix {
    let g = Matrix::from_fn(n, n, |_, _| complex_normal(rng));
    g.add(&g.adjoint()).scale(C64::new(0.5, 0.0))
}

/// Random diagonal unitary.
pub fn random_phases(n: usize, rng: &mut impl RngCore) -> Matrix {
    let d: Vec<C64> =
        (0..n).map(|_| C64::from_polar(1.0, 2.0 * core::f64::consts::PI * uniform(rng))).collect();
    Matrix::diagonal(&d)
}

pub fn pauli(k: u8) -> Matrix {
    let i = C64::new(0.0, 1.0);
    match k {
        0 => Matrix::identity(2),
        1 => Matrix::from_rows(2, 2, vec![ZERO, ONE, ONE, ZERO]),
        2 => Matrix::from_rows(2, 2, vec![ZERO, -i, i, ZERO]),
        3 => Matrix::from_rows(2, 2, vec![ONE, ZERO, ZERO, -ONE]),
        _ => panic!("Pauli index {k} out of range"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn reconstruct(s: &Svd) -> Matrix {
        let k = s.s.len();
        let mut d = Matrix::zeros(k, k);
        for i in 0..k {
            d[(i, i)] = C64::new(s.s[i], 0.0);
        }
        s.u.mul(&d).mul(&s.v.adjoint())
    }

    #[test]
    fn svd_reconstructs_rectangular() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (m, n) in [(6, 4), (4, 6), (5, 5), (1, 3)] {
            let a = Matrix::from_fn(m, n, |_, _| complex_normal(&mut rng));
            let s = a.svd();
            assert!(reconstruct(&s).max_abs_diff(&a) < 1e-12, "{m}x{n}");
            assert!(s.s.windows(2).all(|w| w[0] >= w[1]));
            assert!((s.s[0] - a.spectral_norm()).abs() < 1e-9);
        }
    }

    #[test]
    fn svd_of_rank_one() {
        let x = Matrix::from_fn(3, 1, |r, _| C64::new(r as f64 + 1.0, 0.5));
        let y = Matrix::from_fn(1, 4, |_, c| C64::new(0.0, c as f64 - 1.0));
        let s = x.mul(&y).svd();
        assert!(s.s[1] < 1e-12);
        assert!((s.s[0] - x.frobenius() * y.frobenius()).abs() < 1e-12);
    }

    #[test]
    fn random_unitaries_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(random_unitary(16, &mut rng).is_unitary(1e-12));
        let h = random_hermitian(8, &mut rng);
        let u = Matrix::exp_i_hermitian(&h.scale(C64::new(3.0, 0.0)));
        assert!(u.is_unitary(1e-11));
        assert!(random_phases(5, &mut rng).is_unitary(1e-14));
    }

    #[test]
    fn exp_of_pauli() {
        let t = 0.7;
        let u = Matrix::exp_i_hermitian(&pauli(1).scale(C64::new(t, 0.0)));
        let want = Matrix::identity(2).scale(C64::new(libm::cos(t), 0.0)).add(&pauli(1).scale(C64::new(0.0, libm::sin(t))));
        assert!(u.max_abs_diff(&want) < 1e-14);
    }
}
