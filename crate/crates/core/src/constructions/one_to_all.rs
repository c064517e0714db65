//! Entanglers built gate by gate through one shared ancilla.
//!
//! Every gate touches the ancilla (qubit 0), so these families are k-local
//! but their depth grows with the system; the ancilla ends in a product
//! state because its edges cancel in pairs.

use alloc::vec::Vec;

use super::surface::{Color, TriangularTorus};
use super::{cluster_entangler, ConstructionError, GateFamily};
use crate::phasepoly::{Hyperedge, PhaseGateSet, SymmetrySpec};

/// Ring qubits are `1..=n`, ancilla is `0`. Gate `i` (for `i = 1..=n/2`) is
/// `CZ_{0,2i-1} CZ_{2i-1,2i} CZ_{2i,2i+1} CZ_{2i+1,0}` with `n + 1` read as 1.
///
/// The ancilla is grouped with the even ring sites for symmetry purposes.
pub fn one_to_all_1d(n: usize) -> Result<GateFamily, ConstructionError> {
    if n < 4 || n % 2 != 0 {
        return Err(ConstructionError::Geometry(alloc::format!("one-to-all ring needs even N >= 4, got {n}")));
    }
    let wrap = |k: usize| (k - 1) % n + 1;
    let gates = (1..=n / 2)
        .map(|i| {
            let (a, b, c) = (2 * i - 1, 2 * i, wrap(2 * i + 1));
            let e = [Hyperedge::pair(0, a), Hyperedge::pair(a, b), Hyperedge::pair(b, c), Hyperedge::pair(c, 0)];
            PhaseGateSet::from_edges(n + 1, e)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut entangler = PhaseGateSet::identity(n + 1);
    for e in cluster_entangler(n)?.edges() {
        let q = e.qubits();
        entangler.toggle(Hyperedge::pair(q[0] + 1, q[1] + 1))?;
    }
    let symmetries = alloc::vec![
        SymmetrySpec::new("X_odd", (1..=n).step_by(2)),
        SymmetrySpec::new("X_even+ancilla", core::iter::once(0).chain((2..=n).step_by(2))),
    ];
    Ok(GateFamily { label: alloc::format!("one-to-all-ring-{n}"), n_qubits: n + 1, entangler, gates, symmetries })
}

/// Unfolded triangular torus plus an ancilla counted as green.
#[derive(Debug, Clone)]
pub struct OneToAll2d {
    pub torus: TriangularTorus,
    pub family: GateFamily,
}

/// Lattice sites are shifted up by one to make room for the ancilla at 0.
/// For each green site `g` with link `g_1..g_6`,
/// `V_g = ∏_j CCZ(g, g_j, g_{j+1}) CCZ(0, g_j, g_{j+1})`.
pub fn one_to_all_2d(l: usize) -> Result<OneToAll2d, ConstructionError> {
    let torus = TriangularTorus::new(l, l)?;
    let n = torus.n_sites() + 1;
    let mut gates = Vec::new();
    for g in (0..torus.n_sites()).filter(|&g| torus.color(g) == Color::Green) {
        let link = torus.link(g);
        let mut v = PhaseGateSet::identity(n);
        for j in 0..6 {
            let (a, b) = (link[j] + 1, link[(j + 1) % 6] + 1);
            v.toggle(Hyperedge::triple(g + 1, a, b))?;
            v.toggle(Hyperedge::triple(0, a, b))?;
        }
        gates.push(v);
    }
    let mut entangler = PhaseGateSet::identity(n);
    for t in torus.triangles() {
        let q = t.qubits();
        entangler.toggle(Hyperedge::triple(q[0] + 1, q[1] + 1, q[2] + 1))?;
    }
    let symmetries = [Color::Red, Color::Blue, Color::Green]
        .iter()
        .map(|&c| {
            let sites = (0..torus.n_sites()).filter(|&i| torus.color(i) == c).map(|i| i + 1);
            if c == Color::Green {
                SymmetrySpec::new("X_G+ancilla", core::iter::once(0).chain(sites))
            } else {
                SymmetrySpec::new(c.label(), sites)
            }
        })
        .collect();
    let family = GateFamily { label: alloc::format!("one-to-all-torus-{l}x{l}"), n_qubits: n, entangler, gates, symmetries };
    Ok(OneToAll2d { torus, family })
}
