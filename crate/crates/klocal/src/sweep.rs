use std::io::Write;

use rayon::prelude::*;

use klocal_core::monitored::{
    aggregate, enumerate_clifford2, realization_mean, Ensemble, ExperimentConfig, GateSets, MonitoredError, SweepPoint,
};

use crate::args::{MonitoredSweep, SignMode};
use crate::report::fmt_sig6;
use crate::CliError;

pub const HEADER: [&str; 8] = ["ensemble", "N", "p", "realizations", "steps", "s_bar", "stderr", "seed"];

impl From<MonitoredError> for CliError {
    fn from(e: MonitoredError) -> Self {
        match e {
            MonitoredError::Config(_) | MonitoredError::EmptyEnsemble { .. } => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Grid points in row order, each validated before anything runs.
pub fn grid(a: &MonitoredSweep) -> Result<Vec<ExperimentConfig>, CliError> {
    let mut ensembles = Vec::new();
    for label in &a.ensemble {
        let mut chars = label.trim().chars();
        let e = match (chars.next(), chars.next()) {
            (Some(c), None) => Ensemble::from_label(c),
            _ => None,
        };
        ensembles.push(e.ok_or_else(|| CliError::Usage(format!("unknown ensemble {label:?}; expected a, b, c or d")))?);
    }
    ensembles.sort();
    ensembles.dedup();
    let mut sizes = a.sizes.clone();
    sizes.sort();
    sizes.dedup();
    let mut ps = a.p_grid.clone();
    ps.sort_by(f64::total_cmp);
    ps.dedup();
    if ensembles.is_empty() || sizes.is_empty() || ps.is_empty() {
        return Err(CliError::Usage("empty sweep grid".into()));
    }
    let mut out = Vec::new();
    for &e in &ensembles {
        for &n in &sizes {
            for &p in &ps {
                let mut cfg = ExperimentConfig::standard(n, p, e, a.realizations, a.seed);
                cfg.exact_sign = a.sign == SignMode::Exact;
                if let Some(b) = a.burn_in {
                    cfg.burn_in = b;
                }
                if let Some(w) = a.window {
                    cfg.window = w;
                }
                if let Some(c) = a.cadence {
                    cfg.cadence = c;
                }
                cfg.validate()?;
                out.push(cfg);
            }
        }
    }
    Ok(out)
}

/// Thread cap from `KLOCAL_THREADS`; unset means rayon's default.
pub fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("KLOCAL_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("KLOCAL_THREADS must be a positive integer, got {v:?}")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Internal(e.to_string()))
}

/// Realizations run in parallel; their means are collected by index, so the
/// result does not depend on scheduling.
pub fn run_grid(points: &[ExperimentConfig], pool: &rayon::ThreadPool) -> Result<Vec<SweepPoint>, CliError> {
    let all = enumerate_clifford2();
    let mut sets: Vec<GateSets> = Vec::new();
    let mut out = Vec::with_capacity(points.len());
    for cfg in points {
        let idx = match sets.iter().position(|s| s.ensemble == cfg.ensemble) {
            Some(i) => i,
            None => {
                sets.push(GateSets::from_gates(&all, cfg.ensemble, cfg.exact_sign)?);
                sets.len() - 1
            }
        };
        let s = &sets[idx];
        let means = pool.install(|| {
            (0..cfg.realizations).into_par_iter().map(|r| realization_mean(cfg, s, r)).collect::<Result<Vec<_>, _>>()
        })?;
        out.push(aggregate(cfg, &means));
    }
    Ok(out)
}

pub fn write_csv<W: Write>(rows: &[SweepPoint], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.ensemble.label().to_string(),
            r.n.to_string(),
            r.p.to_string(),
            r.realizations.to_string(),
            r.steps.to_string(),
            fmt_sig6(r.s_bar),
            fmt_sig6(r.stderr),
            r.seed.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

pub fn monitored_sweep(a: &MonitoredSweep) -> Result<String, CliError> {
    let points = grid(a)?;
    let pool = thread_pool()?;
    let rows = run_grid(&points, &pool)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| CliError::Internal(e.to_string()))
}
