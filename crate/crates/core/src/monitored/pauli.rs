use alloc::vec;
use alloc::vec::Vec;

/// `i^phase · ⊗_q σ(x_q, z_q)` with `σ(1,0) = X`, `σ(0,1) = Z`, `σ(1,1) = Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

pub(crate) fn words(n: usize) -> usize {
    n.div_ceil(64)
}

/// Power of `i` picked up by `σ(a) σ(b)` over whole words, mod 4.
pub(crate) fn product_phase(xa: &[u64], za: &[u64], xb: &[u64], zb: &[u64]) -> u8 {
    let (mut plus, mut minus) = (0u32, 0u32);
    for w in 0..xa.len() {
        let (ya, xo_a, zo_a) = (xa[w] & za[w], xa[w] & !za[w], !xa[w] & za[w]);
        let (yb, xo_b, zo_b) = (xb[w] & zb[w], xb[w] & !zb[w], !xb[w] & zb[w]);
        plus += ((xo_a & yb) | (ya & zo_b) | (zo_a & xo_b)).count_ones();
        minus += ((ya & xo_b) | (xo_a & zo_b) | (zo_a & yb)).count_ones();
    }
    ((plus + 3 * minus) % 4) as u8
}

pub(crate) fn anticommute(xa: &[u64], za: &[u64], xb: &[u64], zb: &[u64]) -> bool {
    let mut acc = 0u64;
    for w in 0..xa.len() {
        acc ^= (xa[w] & zb[w]) ^ (za[w] & xb[w]);
    }
    acc.count_ones() % 2 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { n, x: vec![0; words(n)], z: vec![0; words(n)], phase: 0 }
    }

    pub fn single(n: usize, q: usize, p: Pauli) -> Self {
        let mut s = PauliString::identity(n);
        s.set(q, p);
        s
    }

    /// Tensor product read left to right, qubit 0 first.
    pub fn from_paulis(ps: &[Pauli]) -> Self {
        let mut s = PauliString::identity(ps.len());
        for (q, &p) in ps.iter().enumerate() {
            s.set(q, p);
        }
        s
    }

    /// `Z_{i-1} X_i Z_{i+1}` on a ring of `n ≥ 3` qubits.
    pub fn cluster_generator(n: usize, i: usize) -> Self {
        assert!(n >= 3 && i < n, "cluster generator needs a ring of at least 3 qubits");
        let mut s = PauliString::single(n, i, Pauli::X);
        s.set((i + n - 1) % n, Pauli::Z);
        s.set((i + 1) % n, Pauli::Z);
        s
    }

    pub(crate) fn from_raw(n: usize, x: Vec<u64>, z: Vec<u64>, phase: u8) -> Self {
        PauliString { n, x, z, phase: phase % 4 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    /// Power of `i` in front of the string.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(mut self, phase: u8) -> Self {
        self.phase = phase % 4;
        self
    }

    pub fn negated(self) -> Self {
        let p = self.phase + 2;
        self.with_phase(p)
    }

    /// `+1` or `-1` for Hermitian strings.
    pub fn sign(&self) -> Option<i8> {
        match self.phase {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase % 2 == 0
    }

    pub fn get(&self, q: usize) -> Pauli {
        let (w, b) = (q / 64, q % 64);
        Pauli::from_bits(self.x[w] >> b & 1 == 1, self.z[w] >> b & 1 == 1)
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        let (w, b) = (q / 64, q % 64);
        let (x, z) = p.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | ((x as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((z as u64) << b);
    }

    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).map(|(x, z)| (x | z).count_ones() as usize).sum()
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        assert_eq!(self.n, other.n);
        !anticommute(&self.x, &self.z, &other.x, &other.z)
    }

    /// `self · other`.
    pub fn mul(&self, other: &PauliString) -> PauliString {
        assert_eq!(self.n, other.n);
        let g = product_phase(&self.x, &self.z, &other.x, &other.z);
        PauliString {
            n: self.n,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
            phase: (self.phase + other.phase + g) % 4,
        }
    }

    /// Same operator up to the overall phase.
    pub fn same_support_bits(&self, other: &PauliString) -> bool {
        self.x == other.x && self.z == other.z
    }
}

impl core::fmt::Display for PauliString {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let prefix = ["+", "+i", "-", "-i"][self.phase as usize];
        write!(f, "{prefix}")?;
        for q in 0..self.n {
            let c = match self.get(q) {
                Pauli::I => 'I',
                Pauli::X => 'X',
                Pauli::Y => 'Y',
                Pauli::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn single_qubit_products() {
        let x = PauliString::from_paulis(&[Pauli::X]);
        let y = PauliString::from_paulis(&[Pauli::Y]);
        let z = PauliString::from_paulis(&[Pauli::Z]);
        assert_eq!(x.mul(&y), z.clone().with_phase(1));
        assert_eq!(y.mul(&x), z.clone().with_phase(3));
        assert_eq!(y.mul(&z), x.clone().with_phase(1));
        assert_eq!(z.mul(&x), y.clone().with_phase(1));
        assert_eq!(x.mul(&z), y.clone().with_phase(3));
        assert_eq!(x.mul(&x), PauliString::identity(1));
        assert!(!x.commutes_with(&z));
    }

    #[test]
    fn telescoped_cluster_string() {
        let n = 6;
        let s = PauliString::cluster_generator(n, 1).mul(&PauliString::cluster_generator(n, 2));
        assert_eq!(s.to_string(), "+ZYYZII");
        assert!(PauliString::cluster_generator(n, 0).commutes_with(&PauliString::cluster_generator(n, 1)));
    }

    #[test]
    fn wide_strings_span_words() {
        let n = 130;
        let a = PauliString::single(n, 129, Pauli::X);
        let b = PauliString::single(n, 129, Pauli::Z);
        assert!(!a.commutes_with(&b));
        assert_eq!(a.mul(&b).get(129), Pauli::Y);
        assert_eq!(a.mul(&b).phase(), 3);
        assert_eq!(a.weight(), 1);
    }
}
