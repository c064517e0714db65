//! Lattice geometries, entanglers and symmetric disentangler families.
//!
//! Indices are 0-based everywhere. Where a family is usually written with
//! 1-based site labels the builder says how it was shifted.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::phasepoly::{PhaseError, PhaseGateSet, SymmetrySpec};

mod one_to_all;
mod ring;
mod sspt;
mod surface;

pub use one_to_all::{one_to_all_1d, one_to_all_2d, OneToAll2d};
pub use ring::{cluster_entangler, parity_symmetries, w_gates_1d, RingGeometry};
pub use sspt::{sspt_gates, Layer, SsptGeometry, SsptSite};
pub use surface::{
    color_symmetries, hypergraph_entangler, w_gates_2d, Color, FoldedSurface, Prism, SurfaceSite,
    TriangularTorus,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    /// Size parameters outside the supported range.
    Geometry(String),
    /// A prism that does not own exactly 12 faces.
    PrismFaces { prism: usize, faces: usize },
    Phase(PhaseError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Geometry(m) => write!(f, "invalid geometry: {m}"),
            ConstructionError::PrismFaces { prism, faces } => {
                write!(f, "prism {prism} has {faces} faces, expected 12")
            }
            ConstructionError::Phase(e) => write!(f, "{e}"),
        }
    }
}

impl From<PhaseError> for ConstructionError {
    fn from(e: PhaseError) -> Self {
        ConstructionError::Phase(e)
    }
}

/// A gate family together with the model it disentangles.
#[derive(Debug, Clone)]
pub struct GateFamily {
    pub label: String,
    pub n_qubits: usize,
    pub entangler: PhaseGateSet,
    pub gates: Vec<PhaseGateSet>,
    pub symmetries: Vec<SymmetrySpec>,
}

/// Outcome of checking a family against its contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    /// `compose(gates) · entangler`; trivial iff the family disentangles.
    pub residual: PhaseGateSet,
    /// `(gate, symmetry label)` pairs that fail exact commutation.
    pub asymmetric: Vec<(usize, String)>,
    /// Symmetries the full entangler fails.
    pub entangler_asymmetric: Vec<String>,
    pub max_support: usize,
    pub layers: Vec<Vec<usize>>,
}

impl FamilyCheck {
    pub fn passes(&self, max_k: usize) -> bool {
        self.residual.is_trivial()
            && self.asymmetric.is_empty()
            && self.entangler_asymmetric.is_empty()
            && self.max_support <= max_k
    }
}

impl GateFamily {
    pub fn check(&self) -> Result<FamilyCheck, ConstructionError> {
        let composite = PhaseGateSet::compose_all(self.n_qubits, &self.gates)?;
        let residual = composite.compose(&self.entangler)?;
        let mut asymmetric = Vec::new();
        for (i, g) in self.gates.iter().enumerate() {
            for s in &self.symmetries {
                if !g.commutes_with(s)? {
                    asymmetric.push((i, s.label.clone()));
                }
            }
        }
        let mut entangler_asymmetric = Vec::new();
        for s in &self.symmetries {
            if !self.entangler.commutes_with(s)? {
                entangler_asymmetric.push(s.label.clone());
            }
        }
        let max_support = self.gates.iter().map(|g| g.support().len()).max().unwrap_or(0);
        Ok(FamilyCheck { residual, asymmetric, entangler_asymmetric, max_support, layers: layer_gates(&self.gates) })
    }
}

/// Greedy colouring of the gate-overlap graph in gate order: each gate goes
/// to the first layer none of whose gates shares a qubit with it.
pub fn layer_gates(gates: &[PhaseGateSet]) -> Vec<Vec<usize>> {
    let supports: Vec<BTreeSet<usize>> = gates.iter().map(|g| g.support()).collect();
    layer_supports(&supports)
}

pub fn layer_supports(supports: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut used: Vec<BTreeSet<usize>> = Vec::new();
    for (i, s) in supports.iter().enumerate() {
        match used.iter().position(|u| u.is_disjoint(s)) {
            Some(l) => {
                layers[l].push(i);
                used[l].extend(s.iter().copied());
            }
            None => {
                layers.push(alloc::vec![i]);
                used.push(s.clone());
            }
        }
    }
    layers
}

/// Smallest `D` with `k^D ≥ d`, i.e. `⌈log_k d⌉`, in exact integer
/// arithmetic. `d ≤ 1` gives 0.
pub fn depth_lower_bound(k: u64, d: u64) -> Result<u32, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Geometry(alloc::format!("locality k = {k} must be at least 2")));
    }
    let mut depth = 0;
    let mut reach: u128 = 1;
    while reach < d as u128 {
        reach *= k as u128;
        depth += 1;
    }
    Ok(depth)
}
