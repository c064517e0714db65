use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::clifford::{enumerate_clifford2, filter_ensemble, CliffordGate2, Ensemble};
use super::pauli::PauliString;
use super::tableau::{Tableau, TableauError};

#[derive(Debug, Clone, PartialEq)]
pub enum MonitoredError {
    Config(String),
    EmptyEnsemble { ensemble: Ensemble, same_parity: bool },
    Tableau(TableauError),
}

impl fmt::Display for MonitoredError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonitoredError::Config(s) => write!(f, "invalid configuration: {s}"),
            MonitoredError::EmptyEnsemble { ensemble, same_parity } => {
                let kind = if *same_parity { "same-parity" } else { "odd/even" };
                write!(f, "ensemble ({}) has no {kind} gates", ensemble.label())
            }
            MonitoredError::Tableau(e) => write!(f, "{e}"),
        }
    }
}

impl From<TableauError> for MonitoredError {
    fn from(e: TableauError) -> Self {
        MonitoredError::Tableau(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p: f64,
    pub ensemble: Ensemble,
    pub burn_in: u64,
    pub window: u64,
    pub cadence: u64,
    pub realizations: u32,
    pub seed: u64,
    /// Symmetry filters demand `C X C† = X` with sign; otherwise up to sign.
    pub exact_sign: bool,
}

impl ExperimentConfig {
    /// Burn-in `2N²` steps, then `2N²` more sampled every `N` steps.
    pub fn standard(n: usize, p: f64, ensemble: Ensemble, realizations: u32, seed: u64) -> Self {
        let nn = (n * n) as u64;
        ExperimentConfig {
            n,
            p,
            ensemble,
            burn_in: 2 * nn,
            window: 2 * nn,
            cadence: n as u64,
            realizations,
            seed,
            exact_sign: true,
        }
    }

    pub fn steps(&self) -> u64 {
        self.burn_in + self.window
    }

    pub fn validate(&self) -> Result<(), MonitoredError> {
        let bad = |s: &str| Err(MonitoredError::Config(s.into()));
        if self.n < 4 || self.n % 2 != 0 {
            return bad("N must be even and at least 4");
        }
        if !(0.0..=1.0).contains(&self.p) {
            return bad("p must lie in [0, 1]");
        }
        if self.cadence == 0 || self.window < self.cadence {
            return bad("the recording window must hold at least one sample");
        }
        if self.realizations == 0 {
            return bad("at least one realization is required");
        }
        Ok(())
    }
}

/// The gate pools of one ensemble, split by the parity relation of the pair.
#[derive(Debug, Clone)]
pub struct GateSets {
    pub ensemble: Ensemble,
    pub opposite: Vec<CliffordGate2>,
    pub same: Vec<CliffordGate2>,
}

impl GateSets {
    pub fn new(ensemble: Ensemble, exact_sign: bool) -> Result<Self, MonitoredError> {
        Self::from_gates(&enumerate_clifford2(), ensemble, exact_sign)
    }

    pub fn from_gates(all: &[CliffordGate2], ensemble: Ensemble, exact_sign: bool) -> Result<Self, MonitoredError> {
        let opposite = filter_ensemble(all, ensemble, false, exact_sign);
        let same = filter_ensemble(all, ensemble, true, exact_sign);
        if opposite.is_empty() {
            return Err(MonitoredError::EmptyEnsemble { ensemble, same_parity: false });
        }
        if same.is_empty() && !ensemble.is_local() {
            return Err(MonitoredError::EmptyEnsemble { ensemble, same_parity: true });
        }
        Ok(GateSets { ensemble, opposite, same })
    }
}

/// Generator for one realization, keyed by everything that identifies the
/// grid point; the realization index selects the stream.
pub fn realization_rng(cfg: &ExperimentConfig, realization: u32) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&cfg.seed.to_le_bytes());
    key[8..16].copy_from_slice(&(cfg.n as u64).to_le_bytes());
    key[16..24].copy_from_slice(&cfg.p.to_bits().to_le_bytes());
    key[24] = cfg.ensemble as u8;
    key[25] = cfg.exact_sign as u8;
    key[26..].copy_from_slice(b"klocal");
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(realization as u64);
    rng
}

/// One event of the dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    Gate { index: usize, a: usize, b: usize, same_parity: bool },
    Measure { site: usize, outcome: i8 },
}

/// Monitored dynamics on `|+⟩^{⊗N}`.
pub struct Trajectory<'a> {
    cfg: ExperimentConfig,
    sets: &'a GateSets,
    rng: ChaCha8Rng,
    tableau: Tableau,
    generators: Vec<PauliString>,
}

impl<'a> Trajectory<'a> {
    pub fn new(cfg: &ExperimentConfig, sets: &'a GateSets, realization: u32) -> Result<Self, MonitoredError> {
        cfg.validate()?;
        if sets.ensemble != cfg.ensemble {
            return Err(MonitoredError::Config("gate sets built for another ensemble".into()));
        }
        Ok(Trajectory {
            cfg: *cfg,
            sets,
            rng: realization_rng(cfg, realization),
            tableau: Tableau::plus_state(cfg.n),
            generators: (0..cfg.n).map(|i| PauliString::cluster_generator(cfg.n, i)).collect(),
        })
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn step(&mut self) -> Result<Event, MonitoredError> {
        let n = self.cfg.n;
        if self.rng.gen_bool(self.cfg.p) {
            let (a, b) = if self.cfg.ensemble.is_local() {
                let i = self.rng.gen_range(0..n);
                (i, (i + 1) % n)
            } else {
                let i = self.rng.gen_range(0..n);
                let mut j = self.rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                (i, j)
            };
            let same_parity = a % 2 == b % 2;
            let pool = if same_parity { &self.sets.same } else { &self.sets.opposite };
            let index = self.rng.gen_range(0..pool.len());
            self.tableau.apply_clifford2(&pool[index], a, b)?;
            Ok(Event::Gate { index, a, b, same_parity })
        } else {
            let site = self.rng.gen_range(0..n);
            let rng = &mut self.rng;
            let outcome = self.tableau.measure(&self.generators[site], || rng.gen_bool(0.5))?;
            Ok(Event::Measure { site, outcome })
        }
    }
}

/// `s` after every `cadence` steps of the recording window.
pub fn run_realization(cfg: &ExperimentConfig, sets: &GateSets, realization: u32) -> Result<Vec<f64>, MonitoredError> {
    let mut traj = Trajectory::new(cfg, sets, realization)?;
    let mut series = Vec::with_capacity((cfg.window / cfg.cadence) as usize);
    for step in 1..=cfg.steps() {
        traj.step()?;
        if step > cfg.burn_in && (step - cfg.burn_in) % cfg.cadence == 0 {
            series.push(traj.tableau.string_order());
        }
    }
    Ok(series)
}

/// Window average of one realization.
pub fn realization_mean(cfg: &ExperimentConfig, sets: &GateSets, realization: u32) -> Result<f64, MonitoredError> {
    let series = run_realization(cfg, sets, realization)?;
    Ok(series.iter().sum::<f64>() / series.len() as f64)
}

/// One row of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub ensemble: Ensemble,
    pub n: usize,
    pub p: f64,
    pub realizations: u32,
    pub steps: u64,
    pub s_bar: f64,
    pub stderr: f64,
    pub seed: u64,
}

/// Mean and standard error over realization means, summed in index order.
pub fn aggregate(cfg: &ExperimentConfig, means: &[f64]) -> SweepPoint {
    let r = means.len() as f64;
    let s_bar = means.iter().sum::<f64>() / r;
    let stderr = if means.len() > 1 {
        let var = means.iter().map(|m| (m - s_bar) * (m - s_bar)).sum::<f64>() / (r - 1.0);
        libm::sqrt(var / r)
    } else {
        0.0
    };
    SweepPoint {
        ensemble: cfg.ensemble,
        n: cfg.n,
        p: cfg.p,
        realizations: means.len() as u32,
        steps: cfg.steps(),
        s_bar,
        stderr,
        seed: cfg.seed,
    }
}

/// All realizations of one grid point, one after another.
pub fn run_point(cfg: &ExperimentConfig, sets: &GateSets) -> Result<SweepPoint, MonitoredError> {
    let means = (0..cfg.realizations).map(|r| realization_mean(cfg, sets, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(aggregate(cfg, &means))
}
