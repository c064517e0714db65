use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "klocal", version, about = "Symmetric k-local disentanglers, QCA ring identities and monitored Clifford sweeps")]
#[command(args_override_self = true)]
pub struct Cli {
    /// Flat `key=value` file supplying flags; the command line wins.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<std::path::PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ring disentangler of the cluster state.
    #[command(name = "verify-1d")]
    Verify1d(Verify1d),
    /// Folded colour-code hypergraph surface.
    #[command(name = "verify-2d")]
    Verify2d(Verify2d),
    /// Cluster state protected by line symmetries.
    #[command(name = "verify-sspt")]
    VerifySspt(VerifySspt),
    /// Ancilla-mediated entanglers in 1D and 2D.
    #[command(name = "verify-one-to-all")]
    VerifyOneToAll(VerifyOneToAll),
    /// Folded ring identity for a Margolus QCA.
    #[command(name = "qca-verify")]
    QcaVerify(QcaVerify),
    /// Rational index of a Margolus QCA and of its reversal.
    #[command(name = "qca-index")]
    QcaIndex(QcaIndex),
    /// String order of monitored Clifford circuits, as CSV.
    #[command(name = "monitored-sweep")]
    MonitoredSweep(MonitoredSweep),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify1d(_) => "verify-1d",
            Command::Verify2d(_) => "verify-2d",
            Command::VerifySspt(_) => "verify-sspt",
            Command::VerifyOneToAll(_) => "verify-one-to-all",
            Command::QcaVerify(_) => "qca-verify",
            Command::QcaIndex(_) => "qca-index",
            Command::MonitoredSweep(_) => "monitored-sweep",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct Bound {
    /// Report the light-cone depth bound for locality k and distance d, as `k,d`.
    #[arg(long = "bound", value_name = "K,D")]
    pub bound: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct Verify1d {
    /// Ring length, even and at least 6.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub bound: Bound,
}

#[derive(Debug, Args, Serialize)]
pub struct Verify2d {
    /// Side of each sheet, a multiple of 3; the surface has 2L^2 sites.
    #[arg(long, default_value_t = 6)]
    pub l: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub bound: Bound,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifySspt {
    /// Period along u, even and at least 6.
    #[arg(long, default_value_t = 8)]
    pub pu: usize,
    /// Period along v, even and at least 6.
    #[arg(long, default_value_t = 8)]
    pub pv: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub bound: Bound,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyOneToAll {
    /// Ring length of the 1D family.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Torus side of the 2D family, a multiple of 3.
    #[arg(long, default_value_t = 3)]
    pub l: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub bound: Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QcaCase {
    Shift,
    Identity,
    Cluster,
    RandomFdqc,
    RandomDiagonal,
    RandomShifted,
    /// Diagonal 2D shift compactified on a strip.
    Compact,
    /// Straight 2D shift compactified on a strip.
    CompactStraight,
}

#[derive(Debug, Args, Serialize)]
pub struct QcaVerify {
    #[arg(long, value_enum)]
    pub case: QcaCase,
    /// Region size, even; the ring has 2R+2 sites.
    #[arg(long, default_value_t = 2)]
    pub region: usize,
    /// Local dimension for shift, identity and random cases.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Strip width of the compactified cases.
    #[arg(long, default_value_t = 2)]
    pub width: usize,
    /// Seed for the random cases.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct QcaIndex {
    #[arg(long, value_enum)]
    pub case: QcaCase,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 2)]
    pub width: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignMode {
    /// Filters require `C X C† = X` including the sign.
    Exact,
    /// Filters accept `C X C† = ±X`.
    UpTo,
}

#[derive(Debug, Args, Serialize)]
pub struct MonitoredSweep {
    /// Ensembles among a, b, c, d.
    #[arg(long, action = ArgAction::Set, value_delimiter = ',', default_value = "a,b,c,d")]
    pub ensemble: Vec<String>,
    /// System sizes N, even and at least 4.
    #[arg(long, action = ArgAction::Set, value_delimiter = ',', default_value = "24,48")]
    pub sizes: Vec<usize>,
    /// Gate probabilities p.
    #[arg(long = "p-grid", action = ArgAction::Set, value_delimiter = ',', default_value = "0,0.1,0.2")]
    pub p_grid: Vec<f64>,
    #[arg(long, default_value_t = 200)]
    pub realizations: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sign convention of the symmetry filters.
    #[arg(long, value_enum, default_value_t = SignMode::Exact)]
    pub sign: SignMode,
    /// Steps before recording; defaults to 2N^2.
    #[arg(long = "burn-in")]
    pub burn_in: Option<u64>,
    /// Recorded steps; defaults to 2N^2.
    #[arg(long)]
    pub window: Option<u64>,
    /// Steps between samples; defaults to N.
    #[arg(long)]
    pub cadence: Option<u64>,
}
