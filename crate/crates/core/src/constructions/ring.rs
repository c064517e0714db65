use alloc::vec::Vec;

use super::{ConstructionError, GateFamily};
use crate::phasepoly::{Hyperedge, PhaseGateSet, SymmetrySpec};

/// Periodic chain of `n` qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingGeometry {
    pub n: usize,
}

impl RingGeometry {
    /// Even `n ≥ 4`; the two sublattice parities need an even ring.
    pub fn new(n: usize) -> Result<Self, ConstructionError> {
        if n < 4 || n % 2 != 0 {
            return Err(ConstructionError::Geometry(alloc::format!("ring size {n} must be even and at least 4")));
        }
        Ok(RingGeometry { n })
    }

    /// Cluster entangler, the parity symmetries and the `W_i` family.
    pub fn family(&self) -> Result<GateFamily, ConstructionError> {
        Ok(GateFamily {
            label: alloc::format!("ring-{}", self.n),
            n_qubits: self.n,
            entangler: cluster_entangler(self.n)?,
            gates: w_gates_1d(self.n)?,
            symmetries: parity_symmetries(self.n).to_vec(),
        })
    }
}

/// `∏_i CZ_{i,i+1}` around a ring of `n ≥ 3` qubits.
pub fn cluster_entangler(n: usize) -> Result<PhaseGateSet, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::Geometry(alloc::format!("ring size {n} below 3")));
    }
    Ok(PhaseGateSet::from_edges(n, (0..n).map(|i| Hyperedge::pair(i, (i + 1) % n)))?)
}

/// `[X_odd, X_even]` in 1-based naming: `X_odd` acts on 0-based even sites.
pub fn parity_symmetries(n: usize) -> [SymmetrySpec; 2] {
    [
        SymmetrySpec::new("X_odd", (0..n).step_by(2)),
        SymmetrySpec::new("X_even", (1..n).step_by(2)),
    ]
}

/// The four-CZ plaquettes that telescope to the ring entangler.
///
/// With 1-based labels `W_i = CZ_{i,i+1} CZ_{i+1,N-i} CZ_{N-i,N-i+1} CZ_{N-i+1,i}`
/// for `i = 1..N/2-1`. Shifting every label down by one gives the edges below.
/// Neighbouring plaquettes share a chord, so the chords cancel in the product
/// and only the ring bonds survive.
pub fn w_gates_1d(n: usize) -> Result<Vec<PhaseGateSet>, ConstructionError> {
    if n < 6 || n % 2 != 0 {
        return Err(ConstructionError::Geometry(alloc::format!("W family needs even N >= 6, got {n}")));
    }
    (1..n / 2)
        .map(|i| {
            let (a, b, c, d) = (i - 1, i, n - i - 1, n - i);
            let edges = [Hyperedge::pair(a, b), Hyperedge::pair(b, c), Hyperedge::pair(c, d), Hyperedge::pair(d, a)];
            Ok(PhaseGateSet::from_edges(n, edges)?)
        })
        .collect()
}

/// The 1D plaquette `i` as the complete bipartite gate `K(A, B)` on the ring
/// coordinate: `A = {i-1, N-i-1}`, `B = {i, N-i}`. Shared with the
/// subsystem-symmetric construction.
pub(crate) fn plaquette_parts(n: usize, i: usize) -> ([usize; 2], [usize; 2]) {
    ([i - 1, n - i - 1], [i, n - i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_entanglers() {
        let e4 = cluster_entangler(4).unwrap();
        let want: Vec<Hyperedge> =
            [(0, 1), (0, 3), (1, 2), (2, 3)].iter().map(|&(a, b)| Hyperedge::pair(a, b)).collect();
        assert_eq!(e4.edges().cloned().collect::<Vec<_>>(), want);
        assert_eq!(cluster_entangler(3).unwrap().edge_count(), 3);
        assert!(cluster_entangler(2).is_err());
    }

    #[test]
    fn first_plaquette_n8() {
        let w = w_gates_1d(8).unwrap();
        assert_eq!(w.len(), 3);
        let want = PhaseGateSet::from_edges(
            8,
            [Hyperedge::pair(0, 1), Hyperedge::pair(1, 6), Hyperedge::pair(6, 7), Hyperedge::pair(0, 7)],
        )
        .unwrap();
        assert_eq!(w[0], want);
        for i in 0..3 {
            let (a, b) = plaquette_parts(8, i + 1);
            let mut k = PhaseGateSet::identity(8);
            for x in a {
                for y in b {
                    k.toggle(Hyperedge::pair(x, y)).unwrap();
                }
            }
            assert_eq!(k, w[i]);
        }
    }

    #[test]
    fn chords_cancel_n8() {
        let w = w_gates_1d(8).unwrap();
        let prod = PhaseGateSet::compose_all(8, &w).unwrap();
        assert_eq!(prod, cluster_entangler(8).unwrap());
        assert!(w[0].contains(&Hyperedge::pair(1, 6)) && w[1].contains(&Hyperedge::pair(1, 6)));
        assert!(w[1].contains(&Hyperedge::pair(2, 5)) && w[2].contains(&Hyperedge::pair(2, 5)));
    }

    #[test]
    fn odd_or_small_rings_rejected() {
        assert!(w_gates_1d(7).is_err());
        assert!(w_gates_1d(4).is_err());
        assert!(RingGeometry::new(5).is_err());
    }
}
