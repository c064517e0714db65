use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::pauli::{Pauli, PauliString};

/// Number of two-qubit Cliffords modulo global phase.
pub const CLIFFORD2_COUNT: usize = 11520;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    H(usize),
    S(usize),
    /// Control qubit 0, target qubit 1.
    Cnot,
}

pub const GENERATORS: [Generator; 5] = [Generator::H(0), Generator::H(1), Generator::S(0), Generator::S(1), Generator::Cnot];

/// A two-qubit Clifford `C`, stored as the images `C P C†` of `X₁, Z₁, X₂, Z₂`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliffordGate2 {
    images: [PauliString; 4],
    /// For each local pattern `x₀ | z₀<<1 | x₁<<2 | z₁<<3` of a Hermitian
    /// string: the image pattern and whether the sign flips.
    table: [(u8, bool); 16],
}

fn two(p0: Pauli, p1: Pauli) -> PauliString {
    PauliString::from_paulis(&[p0, p1])
}

fn pattern(p: &PauliString) -> u8 {
    let (x, z) = (p.x_words()[0], p.z_words()[0]);
    ((x & 1) | (z & 1) << 1 | (x >> 1 & 1) << 2 | (z >> 1 & 1) << 3) as u8
}

fn from_pattern(pat: u8) -> PauliString {
    let pick = |x: u8, z: u8| match (x, z) {
        (0, 0) => Pauli::I,
        (1, 0) => Pauli::X,
        (1, 1) => Pauli::Y,
        _ => Pauli::Z,
    };
    two(pick(pat & 1, pat >> 1 & 1), pick(pat >> 2 & 1, pat >> 3 & 1))
}

impl CliffordGate2 {
    /// Gate from its generator images; `None` unless they are Hermitian and
    /// obey the canonical commutation relations.
    pub fn from_images(images: [PauliString; 4]) -> Option<Self> {
        if images.iter().any(|p| p.n() != 2 || !p.is_hermitian() || p.weight() == 0) {
            return None;
        }
        for a in 0..4 {
            for b in a + 1..4 {
                // X₁Z₁ and X₂Z₂ anticommute; every other pair commutes.
                let should_anticommute = (a, b) == (0, 1) || (a, b) == (2, 3);
                if images[a].commutes_with(&images[b]) == should_anticommute {
                    return None;
                }
            }
        }
        let mut table = [(0u8, false); 16];
        let mut g = CliffordGate2 { images, table };
        for (pat, slot) in table.iter_mut().enumerate() {
            let img = g.conjugate(&from_pattern(pat as u8));
            *slot = (pattern(&img), img.phase() == 2);
        }
        g.table = table;
        Some(g)
    }

    pub fn identity() -> Self {
        CliffordGate2::from_images([
            two(Pauli::X, Pauli::I),
            two(Pauli::Z, Pauli::I),
            two(Pauli::I, Pauli::X),
            two(Pauli::I, Pauli::Z),
        ])
        .expect("identity images")
    }

    pub fn generator(g: Generator) -> Self {
        let mut im = CliffordGate2::identity().images;
        match g {
            Generator::H(q) => im.swap(2 * q, 2 * q + 1),
            Generator::S(q) => {
                let mut y = PauliString::identity(2);
                y.set(q, Pauli::Y);
                im[2 * q] = y;
            }
            Generator::Cnot => {
                im[0] = two(Pauli::X, Pauli::X);
                im[3] = two(Pauli::Z, Pauli::Z);
            }
        }
        CliffordGate2::from_images(im).expect("generator images")
    }

    pub fn cz() -> Self {
        CliffordGate2::from_images([two(Pauli::X, Pauli::Z), two(Pauli::Z, Pauli::I), two(Pauli::Z, Pauli::X), two(Pauli::I, Pauli::Z)])
            .expect("CZ images")
    }

    pub fn swap() -> Self {
        CliffordGate2::from_images([two(Pauli::I, Pauli::X), two(Pauli::I, Pauli::Z), two(Pauli::X, Pauli::I), two(Pauli::Z, Pauli::I)])
            .expect("SWAP images")
    }

    pub fn images(&self) -> &[PauliString; 4] {
        &self.images
    }

    /// `C P C†` for any two-qubit string.
    pub fn conjugate(&self, p: &PauliString) -> PauliString {
        assert_eq!(p.n(), 2);
        // σ(x,z) = i^{xz} X^x Z^z, so P = i^{phase + Σ x_q z_q} X₁^a Z₁^b X₂^c Z₂^d.
        let mut out = PauliString::identity(2);
        let mut phase = p.phase();
        for q in 0..2 {
            let (x, z) = match p.get(q) {
                Pauli::I => (false, false),
                Pauli::X => (true, false),
                Pauli::Y => (true, true),
                Pauli::Z => (false, true),
            };
            if x && z {
                phase += 1;
            }
            if x {
                out = out.mul(&self.images[2 * q]);
            }
            if z {
                out = out.mul(&self.images[2 * q + 1]);
            }
        }
        let total = out.phase() + phase;
        out.with_phase(total)
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &CliffordGate2) -> CliffordGate2 {
        let im = self.images.clone().map(|p| next.conjugate(&p));
        CliffordGate2::from_images(im).expect("composition of Cliffords")
    }

    pub fn inverse(&self) -> CliffordGate2 {
        // The inverse maps each image back; solve on the 16 patterns.
        let mut inv = CliffordGate2::identity().images;
        for (k, target) in CliffordGate2::identity().images.iter().enumerate() {
            for pat in 0..16u8 {
                let (img, flip) = self.table[pat as usize];
                if img == pattern(target) {
                    let p = from_pattern(pat);
                    inv[k] = if flip { p.negated() } else { p };
                }
            }
        }
        CliffordGate2::from_images(inv).expect("inverse of a Clifford")
    }

    pub(crate) fn table(&self) -> &[(u8, bool); 16] {
        &self.table
    }

    /// `C P C† = P` exactly, or up to sign when `exact` is false.
    pub fn fixes(&self, p: &PauliString, exact: bool) -> bool {
        let img = self.conjugate(p);
        if exact {
            img == *p
        } else {
            img.same_support_bits(p)
        }
    }
}

/// All two-qubit Cliffords modulo phase, by breadth-first closure of
/// `H₁, H₂, S₁, S₂, CNOT`. Order is deterministic.
pub fn enumerate_clifford2() -> Vec<CliffordGate2> {
    let gens: Vec<CliffordGate2> = GENERATORS.iter().map(|&g| CliffordGate2::generator(g)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(CLIFFORD2_COUNT);
    let mut queue = VecDeque::new();
    let id = CliffordGate2::identity();
    seen.insert(id.images.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for h in &gens {
            let next = g.then(h);
            if seen.insert(next.images.clone()) {
                queue.push_back(next);
            }
        }
        out.push(g);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ensemble {
    /// All nearest-neighbour Cliffords.
    A,
    /// Nearest-neighbour, commuting with `X_odd` and `X_even`.
    B,
    /// Any pair, commuting with `X_odd` and `X_even`.
    C,
    /// Any pair, fixing every `X_i`.
    D,
}

impl Ensemble {
    pub const ALL: [Ensemble; 4] = [Ensemble::A, Ensemble::B, Ensemble::C, Ensemble::D];

    pub fn label(self) -> char {
        match self {
            Ensemble::A => 'a',
            Ensemble::B => 'b',
            Ensemble::C => 'c',
            Ensemble::D => 'd',
        }
    }

    pub fn from_label(c: char) -> Option<Self> {
        match c.to_ascii_lowercase() {
            'a' => Some(Ensemble::A),
            'b' => Some(Ensemble::B),
            'c' => Some(Ensemble::C),
            'd' => Some(Ensemble::D),
            _ => None,
        }
    }

    /// Gates act on ring neighbours `(i, i+1)` rather than arbitrary pairs.
    pub fn is_local(self) -> bool {
        matches!(self, Ensemble::A | Ensemble::B)
    }
}

/// Gates of `ensemble` allowed on a pair whose sites have equal parity
/// (`same_parity`) or not.
pub fn filter_ensemble(gates: &[CliffordGate2], ensemble: Ensemble, same_parity: bool, exact: bool) -> Vec<CliffordGate2> {
    let xi = two(Pauli::X, Pauli::I);
    let ix = two(Pauli::I, Pauli::X);
    let xx = two(Pauli::X, Pauli::X);
    let keep = |g: &CliffordGate2| match ensemble {
        Ensemble::A => true,
        Ensemble::B | Ensemble::C if same_parity => g.fixes(&xx, exact),
        Ensemble::B | Ensemble::C | Ensemble::D => g.fixes(&xi, exact) && g.fixes(&ix, exact),
    };
    gates.iter().filter(|g| keep(g)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_act_as_expected() {
        let h = CliffordGate2::generator(Generator::H(0));
        assert_eq!(h.conjugate(&two(Pauli::Y, Pauli::I)), two(Pauli::Y, Pauli::I).negated());
        let s = CliffordGate2::generator(Generator::S(1));
        assert_eq!(s.conjugate(&two(Pauli::I, Pauli::Y)), two(Pauli::I, Pauli::X).negated());
        let cz = CliffordGate2::cz();
        assert_eq!(cz.conjugate(&two(Pauli::X, Pauli::I)), two(Pauli::X, Pauli::Z));
        let h1 = CliffordGate2::generator(Generator::H(1));
        let built = h1.then(&CliffordGate2::generator(Generator::Cnot)).then(&h1);
        assert_eq!(built, cz);
    }

    #[test]
    fn inverse_undoes() {
        let g = CliffordGate2::generator(Generator::S(0)).then(&CliffordGate2::generator(Generator::Cnot));
        assert_eq!(g.then(&g.inverse()), CliffordGate2::identity());
        assert_eq!(g.inverse().then(&g), CliffordGate2::identity());
    }

    #[test]
    fn bad_images_rejected() {
        let id = CliffordGate2::identity();
        let mut im = id.images().clone();
        im[1] = two(Pauli::X, Pauli::I);
        assert!(CliffordGate2::from_images(im).is_none());
    }
}
