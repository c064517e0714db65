//! Symmetric k-local circuits and their verification.
//!
//! * [`phasepoly`]: diagonal `C^kZ` circuits as GF(2) edge sets, with exact
//!   conjugation by X-type symmetries.
//! * [`constructions`]: entanglers and symmetric disentangler families for the
//!   1D cluster state, the 2D CCZ hypergraph state, the subsystem-symmetric
//!   cluster state and the one-to-all protocols.
//! * [`qca`]: Margolus-form QCAs, the folded circuit `W1 V_R W2`, the GNVW
//!   index and small dense-matrix machinery.
//! * [`monitored`]: stabilizer tableau, two-qubit Clifford ensembles and the
//!   string order parameter under monitored dynamics.
#![no_std]

extern crate alloc;

pub mod constructions;
pub mod monitored;
pub mod phasepoly;
pub mod qca;

pub use phasepoly::{Hyperedge, PhaseGateSet, SymmetrySpec};
