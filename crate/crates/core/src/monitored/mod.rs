//! Monitored random Clifford circuits on a ring: stabilizer tableau, the
//! two-qubit Clifford group and its symmetric subsets, and the averaged
//! string order.

pub mod clifford;
pub mod dynamics;
pub mod pauli;
pub mod tableau;

pub use clifford::{enumerate_clifford2, filter_ensemble, CliffordGate2, Ensemble, CLIFFORD2_COUNT};
pub use dynamics::{
    aggregate, realization_mean, run_point, run_realization, ExperimentConfig, GateSets, MonitoredError, SweepPoint,
};
pub use pauli::{Pauli, PauliString};
pub use tableau::{Tableau, TableauError};
