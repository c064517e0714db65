use clap::ValueEnum;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map};

use klocal_core::qca::{compactify_2d_shift, gnvw_index, verify_ring_equality, MargolusQca, QcaError};

use crate::args::{QcaCase, QcaIndex, QcaVerify};
use crate::report::{sig6, Check, Report};
use crate::{CliError, Outcome};

/// Frobenius bound on `‖W₁ V_R W₂ − Q‖` up to phase.
pub const RING_TOL: f64 = 1e-9;

impl From<QcaError> for CliError {
    fn from(e: QcaError) -> Self {
        match e {
            QcaError::Shape(_) | QcaError::Budget(_) | QcaError::Invalid(_) => CliError::Usage(e.to_string()),
            QcaError::NotUnitary(_) => CliError::Internal(e.to_string()),
        }
    }
}

pub fn case_name(case: QcaCase) -> String {
    case.to_possible_value().expect("no skipped variants").get_name().to_string()
}

pub fn build_case(case: QcaCase, d: usize, width: usize, seed: u64) -> Result<MargolusQca, CliError> {
    if d < 2 {
        return Err(CliError::Usage(format!("local dimension {d} must be at least 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match case {
        QcaCase::Shift => MargolusQca::shift(d),
        QcaCase::Identity => MargolusQca::identity(d),
        QcaCase::Cluster => MargolusQca::cluster(),
        QcaCase::RandomFdqc => MargolusQca::random_fdqc(d, &mut rng),
        QcaCase::RandomDiagonal => MargolusQca::random_diagonal(d, &mut rng),
        QcaCase::RandomShifted => MargolusQca::random_shifted(d, &mut rng),
        QcaCase::Compact => compactify_2d_shift(width, true)?,
        QcaCase::CompactStraight => compactify_2d_shift(width, false)?,
    })
}

pub fn qca_verify(a: &QcaVerify) -> Result<Outcome, CliError> {
    let q = build_case(a.case, a.d, a.width, a.seed)?;
    let rep = verify_ring_equality(&q, a.region)?;
    let index = gnvw_index(&q);
    let cert = &rep.certificate;
    let mut body = Map::new();
    body.insert("case".into(), json!(case_name(a.case)));
    body.insert("ring_size".into(), json!(rep.ring_size));
    body.insert("deviation".into(), json!(sig6(rep.deviation.frobenius)));
    body.insert("max_entry_deviation".into(), json!(sig6(rep.deviation.max_entry)));
    body.insert("index".into(), json!({ "num": index.num(), "den": index.den() }));
    body.insert("depth_certificate".into(), json!(cert.layers));
    let checks = vec![
        Check::new(
            "ring equality up to phase",
            rep.deviation.frobenius <= RING_TOL,
            json!({ "frobenius": sig6(rep.deviation.frobenius), "tolerance": RING_TOL }),
        ),
        Check::new(
            "V_R has depth 2",
            cert.is_valid() && cert.depth() == 2,
            json!({ "depth": cert.depth(), "disjoint_layers": cert.is_valid() }),
        ),
    ];
    let report = Report::new("qca-verify", a, body, checks);
    Ok(Outcome { pass: report.pass, text: report.to_json() })
}

pub fn qca_index(a: &QcaIndex) -> Result<Outcome, CliError> {
    let q = build_case(a.case, a.d, a.width, a.seed)?;
    let index = gnvw_index(&q);
    let rev = gnvw_index(&q.reversed()?);
    let mut body = Map::new();
    body.insert("case".into(), json!(case_name(a.case)));
    body.insert("index".into(), json!({ "num": index.num(), "den": index.den() }));
    body.insert("reversed_index".into(), json!({ "num": rev.num(), "den": rev.den() }));
    let checks = vec![Check::new(
        "reversal inverts the index",
        rev == index.recip() && (index * rev).is_trivial(),
        json!({ "index": index.to_string(), "reversed": rev.to_string() }),
    )];
    let report = Report::new("qca-index", a, body, checks);
    Ok(Outcome { pass: report.pass, text: report.to_json() })
}
