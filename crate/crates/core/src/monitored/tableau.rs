//! Stabilizer tableau with destabilizers: rows `0..n` are destabilizers,
//! rows `n..2n` stabilizers. Each row is a Hermitian Pauli string with a sign
//! bit; x and z parts are bit-packed into 64-bit words.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::clifford::CliffordGate2;
use super::pauli::{anticommute, product_phase, words, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauError {
    NotHermitian,
    SizeMismatch { tableau: usize, operator: usize },
    SameQubit(usize),
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauError::NotHermitian => write!(f, "measured operator must be Hermitian"),
            TableauError::SizeMismatch { tableau, operator } => {
                write!(f, "operator on {operator} qubits applied to {tableau}-qubit state")
            }
            TableauError::SameQubit(q) => write!(f, "two-qubit gate applied twice to qubit {q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    n: usize,
    w: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    sign: Vec<bool>,
}

impl Tableau {
    /// `|+⟩^{⊗n}`: stabilizers `X_i`, destabilizers `Z_i`.
    pub fn plus_state(n: usize) -> Self {
        let mut t = Tableau::blank(n);
        for q in 0..n {
            t.set_bit(q, q, false, true);
            t.set_bit(n + q, q, true, false);
        }
        t
    }

    /// `|0⟩^{⊗n}`.
    pub fn zero_state(n: usize) -> Self {
        let mut t = Tableau::blank(n);
        for q in 0..n {
            t.set_bit(q, q, true, false);
            t.set_bit(n + q, q, false, true);
        }
        t
    }

    fn blank(n: usize) -> Self {
        let w = words(n);
        Tableau { n, w, x: vec![0; 2 * n * w], z: vec![0; 2 * n * w], sign: vec![false; 2 * n] }
    }

    fn set_bit(&mut self, row: usize, q: usize, x: bool, z: bool) {
        let (i, b) = (row * self.w + q / 64, q % 64);
        self.x[i] = (self.x[i] & !(1 << b)) | ((x as u64) << b);
        self.z[i] = (self.z[i] & !(1 << b)) | ((z as u64) << b);
    }

    fn bit(&self, row: usize, q: usize) -> (bool, bool) {
        let (i, b) = (row * self.w + q / 64, q % 64);
        (self.x[i] >> b & 1 == 1, self.z[i] >> b & 1 == 1)
    }

    fn xr(&self, row: usize) -> &[u64] {
        &self.x[row * self.w..(row + 1) * self.w]
    }

    fn zr(&self, row: usize) -> &[u64] {
        &self.z[row * self.w..(row + 1) * self.w]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stabilizer(&self, i: usize) -> PauliString {
        self.row(self.n + i)
    }

    pub fn destabilizer(&self, i: usize) -> PauliString {
        self.row(i)
    }

    fn row(&self, r: usize) -> PauliString {
        PauliString::from_raw(self.n, self.xr(r).to_vec(), self.zr(r).to_vec(), if self.sign[r] { 2 } else { 0 })
    }

    /// Row `h ← row_i · row_h`.
    fn rowsum(&mut self, h: usize, i: usize) {
        let w = self.w;
        let g = product_phase(self.xr(i), self.zr(i), self.xr(h), self.zr(h));
        let phase = (2 * self.sign[h] as u8 + 2 * self.sign[i] as u8 + g) % 4;
        for k in 0..w {
            self.x[h * w + k] ^= self.x[i * w + k];
            self.z[h * w + k] ^= self.z[i * w + k];
        }
        self.sign[h] = phase >= 2;
    }

    fn row_anticommutes(&self, r: usize, p: &PauliString) -> bool {
        anticommute(self.xr(r), self.zr(r), p.x_words(), p.z_words())
    }

    /// Apply `g` with its first factor on qubit `a` and second on `b`.
    pub fn apply_clifford2(&mut self, g: &CliffordGate2, a: usize, b: usize) -> Result<(), TableauError> {
        if a == b {
            return Err(TableauError::SameQubit(a));
        }
        let table = g.table();
        for r in 0..2 * self.n {
            let (xa, za) = self.bit(r, a);
            let (xb, zb) = self.bit(r, b);
            let pat = xa as usize | (za as usize) << 1 | (xb as usize) << 2 | (zb as usize) << 3;
            let (img, flip) = table[pat];
            self.set_bit(r, a, img & 1 == 1, img >> 1 & 1 == 1);
            self.set_bit(r, b, img >> 2 & 1 == 1, img >> 3 & 1 == 1);
            self.sign[r] ^= flip;
        }
        Ok(())
    }

    fn check(&self, p: &PauliString) -> Result<(), TableauError> {
        if p.n() != self.n {
            return Err(TableauError::SizeMismatch { tableau: self.n, operator: p.n() });
        }
        if !p.is_hermitian() {
            return Err(TableauError::NotHermitian);
        }
        Ok(())
    }

    /// Sign of `p` on the state when `±p` is a stabilizer; found as the
    /// product of the stabilizers whose destabilizers anticommute with `p`.
    fn deterministic_value(&self, p: &PauliString) -> i8 {
        let mut acc = PauliString::identity(self.n);
        for i in 0..self.n {
            if self.row_anticommutes(i, p) {
                acc = acc.mul(&self.stabilizer(i));
            }
        }
        debug_assert!(acc.same_support_bits(p));
        if (p.phase() + 4 - acc.phase()) % 4 == 0 { 1 } else { -1 }
    }

    /// `⟨P⟩ ∈ {-1, 0, 1}`.
    pub fn expectation(&self, p: &PauliString) -> Result<i8, TableauError> {
        self.check(p)?;
        if (self.n..2 * self.n).any(|r| self.row_anticommutes(r, p)) {
            return Ok(0);
        }
        Ok(self.deterministic_value(p))
    }

    /// Projective measurement of `p`. `coin` is drawn only when the outcome
    /// is random; `true` selects `-1`.
    pub fn measure(&mut self, p: &PauliString, coin: impl FnOnce() -> bool) -> Result<i8, TableauError> {
        self.check(p)?;
        let n = self.n;
        let Some(pivot) = (n..2 * n).find(|&r| self.row_anticommutes(r, p)) else {
            return Ok(self.deterministic_value(p));
        };
        for r in 0..2 * n {
            if r != pivot && self.row_anticommutes(r, p) {
                self.rowsum(r, pivot);
            }
        }
        let w = self.w;
        let d = pivot - n;
        self.x.copy_within(pivot * w..(pivot + 1) * w, d * w);
        self.z.copy_within(pivot * w..(pivot + 1) * w, d * w);
        self.sign[d] = self.sign[pivot];
        let minus = coin();
        self.x[pivot * w..(pivot + 1) * w].copy_from_slice(p.x_words());
        self.z[pivot * w..(pivot + 1) * w].copy_from_slice(p.z_words());
        self.sign[pivot] = (p.phase() == 2) ^ minus;
        Ok(if minus { -1 } else { 1 })
    }

    /// Symplectic frame check: stabilizers commute, destabilizers commute,
    /// destabilizer `i` anticommutes with stabilizer `j` iff `i = j`.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        for a in 0..2 * n {
            for b in a + 1..2 * n {
                let anti = anticommute(self.xr(a), self.zr(a), self.xr(b), self.zr(b));
                if anti != (a < n && b == a + n) {
                    return false;
                }
            }
        }
        true
    }

    /// For each `g_k = Z_{k-1} X_k Z_{k+1}` (ring indexing), the bit vector
    /// over stabilizers of anticommutation with `g_k`.
    fn generator_anticommutation(&self) -> Vec<Vec<u64>> {
        let n = self.n;
        let w = words(n);
        let mut out = vec![vec![0u64; w]; n];
        for t in 0..n {
            let r = n + t;
            for (k, row) in out.iter_mut().enumerate() {
                let left = self.bit(r, (k + n - 1) % n).0;
                let mid = self.bit(r, k).1;
                let right = self.bit(r, (k + 1) % n).0;
                if left ^ mid ^ right {
                    row[t / 64] |= 1 << (t % 64);
                }
            }
        }
        out
    }

    /// `s = 2/(N(N-1)) Σ_{i<j} ⟨∏_{k=i}^{j} g_k⟩²`. A string squares to one
    /// exactly when it commutes with every stabilizer, and its anticommutation
    /// pattern is the XOR of the patterns of its factors, so
    /// `s_{ij}² = 1` iff the prefix XORs before `i` and after `j` agree.
    pub fn string_order(&self) -> f64 {
        let n = self.n;
        if n < 3 {
            return 0.0;
        }
        let c = self.generator_anticommutation();
        let mut prefix = vec![vec![0u64; words(n)]; n + 1];
        for k in 0..n {
            let next: Vec<u64> = prefix[k].iter().zip(&c[k]).map(|(a, b)| a ^ b).collect();
            prefix[k + 1] = next;
        }
        let mut hits = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if prefix[i] == prefix[j + 1] {
                    hits += 1;
                }
            }
        }
        2.0 * hits as f64 / (n as f64 * (n as f64 - 1.0))
    }

    /// The same quantity by forming each string and asking for its
    /// expectation value.
    pub fn string_order_naive(&self) -> f64 {
        let n = self.n;
        if n < 3 {
            return 0.0;
        }
        let mut total = 0u64;
        for i in 0..n {
            let mut s = PauliString::cluster_generator(n, i);
            for j in i + 1..n {
                s = s.mul(&PauliString::cluster_generator(n, j));
                let v = self.expectation(&s).expect("products of commuting generators are Hermitian");
                total += (v * v) as u64;
            }
        }
        2.0 * total as f64 / (n as f64 * (n as f64 - 1.0))
    }
}
