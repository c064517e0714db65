//! Exact GF(2) verification of the disentangler families.

use serde_json::{json, Map, Value};

use klocal_core::constructions::{
    depth_lower_bound, one_to_all_1d, one_to_all_2d, ConstructionError, FamilyCheck, FoldedSurface, GateFamily,
    RingGeometry, SsptGeometry,
};
use klocal_core::phasepoly::{Hyperedge, PhaseGateSet};

use crate::args::{Bound, Verify1d, Verify2d, VerifyOneToAll, VerifySspt};
use crate::report::{family_json, phase_gate_json, Check, Report};
use crate::{CliError, Outcome};

/// Largest gate supports and greedy layer counts the families must respect.
pub const RING_LOCALITY: usize = 4;
pub const RING_LAYERS: usize = 3;
pub const PRISM_LOCALITY: usize = 8;
pub const CELL_LOCALITY: usize = 8;
pub const PLANAR_LAYERS: usize = 9;

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Geometry(m) => CliError::Usage(m),
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn run_check(f: &GateFamily) -> Result<FamilyCheck, CliError> {
    Ok(f.check()?)
}

/// The identity, symmetry, locality and (optionally) layering checks of one family.
pub fn family_checks(f: &GateFamily, c: &FamilyCheck, max_k: usize, max_layers: Option<usize>) -> Vec<Check> {
    let mut checks = vec![
        Check::new(
            &format!("{}: composite equals entangler", f.label),
            c.residual.is_trivial(),
            json!({ "residual_edges": c.residual.edge_count(), "residual": phase_gate_json(&c.residual) }),
        ),
        Check::new(
            &format!("{}: gates commute with symmetries", f.label),
            c.asymmetric.is_empty(),
            json!({
                "gates": f.gates.len(),
                "violations": c.asymmetric.iter().map(|(g, s)| json!({ "gate": g, "symmetry": s })).collect::<Vec<_>>(),
            }),
        ),
        Check::new(
            &format!("{}: entangler commutes with symmetries", f.label),
            c.entangler_asymmetric.is_empty(),
            json!({ "violations": c.entangler_asymmetric }),
        ),
        Check::new(
            &format!("{}: locality", f.label),
            c.max_support <= max_k,
            json!({ "max_support": c.max_support, "limit": max_k }),
        ),
    ];
    if let Some(limit) = max_layers {
        checks.push(Check::new(
            &format!("{}: layering", f.label),
            c.layers.len() <= limit,
            json!({ "layers": c.layers.len(), "limit": limit }),
        ));
    }
    checks
}

fn bound_body(b: &Bound, body: &mut Map<String, Value>) -> Result<(), CliError> {
    let Some(spec) = &b.bound else {
        return Ok(());
    };
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("--bound expects K,D, got {spec:?}")));
    let (k, d) = spec.split_once(',').ok_or_else(|| CliError::Usage(format!("--bound expects K,D, got {spec:?}")))?;
    let (k, d) = (parse(k)?, parse(d)?);
    let depth = depth_lower_bound(k, d)?;
    body.insert("depth_lower_bound".into(), json!({ "k": k, "d": d, "depth": depth }));
    Ok(())
}

fn outcome<C: serde::Serialize>(name: &str, args: &C, body: Map<String, Value>, checks: Vec<Check>) -> Outcome {
    let report = Report::new(name, args, body, checks);
    Outcome { pass: report.pass, text: report.to_json() }
}

fn single_family(
    name: &str,
    args: &impl serde::Serialize,
    bound: &Bound,
    f: &GateFamily,
    max_k: usize,
    max_layers: usize,
    extra: Vec<Check>,
) -> Result<Outcome, CliError> {
    let mut body = Map::new();
    bound_body(bound, &mut body)?;
    let c = run_check(f)?;
    let mut checks = family_checks(f, &c, max_k, Some(max_layers));
    checks.extend(extra);
    body.insert("depth_certificate".into(), json!(c.layers));
    body.insert("family".into(), family_json(f, &c.layers));
    Ok(outcome(name, args, body, checks))
}

pub fn verify_1d(a: &Verify1d) -> Result<Outcome, CliError> {
    let f = RingGeometry::new(a.n)?.family()?;
    single_family("verify-1d", a, &a.bound, &f, RING_LOCALITY, RING_LAYERS, Vec::new())
}

pub fn verify_2d(a: &Verify2d) -> Result<Outcome, CliError> {
    let s = FoldedSurface::new(a.l)?;
    let f = s.family()?;
    single_family("verify-2d", a, &a.bound, &f, PRISM_LOCALITY, PLANAR_LAYERS, Vec::new())
}

pub fn verify_sspt(a: &VerifySspt) -> Result<Outcome, CliError> {
    let g = SsptGeometry::new(a.pu, a.pv)?;
    let f = g.family()?;
    // A single bond must break some line symmetry, or the check is vacuous.
    let mut broken = 0;
    for &(x, y) in &g.edges {
        let cz = PhaseGateSet::from_edges(g.n_sites(), [Hyperedge::pair(x, y)]).map_err(ConstructionError::from)?;
        let mut any = false;
        for l in &g.lines {
            any |= !cz.commutes_with(l).map_err(ConstructionError::from)?;
        }
        broken += any as usize;
    }
    let control = Check::new(
        "single CZ breaks a line symmetry",
        broken > 0,
        json!({ "bonds": g.edges.len(), "asymmetric_bonds": broken }),
    );
    single_family("verify-sspt", a, &a.bound, &f, CELL_LOCALITY, PLANAR_LAYERS, vec![control])
}

fn ancilla_check(f: &GateFamily) -> Result<Check, CliError> {
    let comp = PhaseGateSet::compose_all(f.n_qubits, &f.gates).map_err(ConstructionError::from)?;
    let touching = comp.edges().filter(|e| e.contains(0)).count();
    Ok(Check::new(&format!("{}: ancilla disentangled", f.label), touching == 0, json!({ "residual_ancilla_edges": touching })))
}

pub fn verify_one_to_all(a: &VerifyOneToAll) -> Result<Outcome, CliError> {
    let ring = one_to_all_1d(a.n)?;
    let torus = one_to_all_2d(a.l)?.family;
    let mut body = Map::new();
    bound_body(&a.bound, &mut body)?;
    let mut checks = Vec::new();
    let mut families = Vec::new();
    for (f, k) in [(&ring, 4), (&torus, 8)] {
        let c = run_check(f)?;
        checks.extend(family_checks(f, &c, k, None));
        checks.push(ancilla_check(f)?);
        families.push(family_json(f, &c.layers));
    }
    body.insert("families".into(), Value::Array(families));
    Ok(outcome("verify-one-to-all", a, body, checks))
}
