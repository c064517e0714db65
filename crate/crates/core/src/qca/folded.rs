//! Truncated swap circuits and the folded ring.
//!
//! Take two copies `A`, `B` of the chain and the region `R = [1, 2m]` (labels
//! follow the Margolus pairing: `u` acts on `(2i, 2i+1)`, `v` on
//! `(2i-1, 2i)`). The sites `[0..2m+1]_A ∪ [1..2m]_B` form the ring
//!
//! ```text
//! [1]_A, [2]_A, ..., [2m+1]_A, [2m]_B, ..., [1]_B, [0]_A
//! ```
//!
//! of length `L = 4m + 2`, stored in that order. `V_R = S_R Q_A⁻¹ S_R Q_A`,
//! with `S_R` swapping `[j]_A ↔ [j]_B` over `R`, collapses to two layers of
//! two-site gates; dressing it with the `w` layers `W_1`, `W_2` gives `Q` on
//! the ring.

use alloc::vec;
use alloc::vec::Vec;

use super::circuit::{compare, Circuit, Deviation};
use super::margolus::MargolusQca;
use super::operator::DenseOperator;
use super::QcaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Chain {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingSite {
    pub chain: Chain,
    pub label: usize,
}

/// Ring order of the doubled region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingLayout {
    pub half: usize,
    pub sites: Vec<RingSite>,
}

impl RingLayout {
    /// `region_size = 2m`, even and at least 2.
    pub fn new(region_size: usize) -> Result<Self, QcaError> {
        if region_size < 2 || region_size % 2 != 0 {
            return Err(QcaError::Invalid(alloc::format!("region size {region_size} must be even and at least 2")));
        }
        let m = region_size / 2;
        let mut sites: Vec<RingSite> = (1..=2 * m + 1).map(|j| RingSite { chain: Chain::A, label: j }).collect();
        sites.extend((1..=2 * m).rev().map(|j| RingSite { chain: Chain::B, label: j }));
        sites.push(RingSite { chain: Chain::A, label: 0 });
        Ok(RingLayout { half: m, sites })
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn region_size(&self) -> usize {
        2 * self.half
    }

    pub fn pos(&self, chain: Chain, label: usize) -> usize {
        let m = self.half;
        match chain {
            Chain::A if label == 0 => 4 * m + 1,
            Chain::A => {
                assert!(label <= 2 * m + 1, "A label {label} outside ring");
                label - 1
            }
            Chain::B => {
                assert!((1..=2 * m).contains(&label), "B label {label} outside ring");
                4 * m + 1 - label
            }
        }
    }

    fn a(&self, j: usize) -> usize {
        self.pos(Chain::A, j)
    }

    fn b(&self, j: usize) -> usize {
        self.pos(Chain::B, j)
    }
}

/// Per-layer gate supports (ring positions) with a disjointness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthCertificate {
    pub layers: Vec<Vec<Vec<usize>>>,
}

impl DepthCertificate {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Every layer's supports are pairwise disjoint.
    pub fn is_valid(&self) -> bool {
        self.layers.iter().all(|layer| {
            let mut seen = Vec::new();
            layer.iter().flatten().all(|s| {
                let fresh = !seen.contains(s);
                seen.push(*s);
                fresh
            })
        })
    }
}

/// `V_R` as a two-layer circuit on the ring register.
#[derive(Debug, Clone)]
pub struct FoldedVr {
    pub circuit: Circuit,
    pub layout: RingLayout,
    pub certificate: DepthCertificate,
}

/// Layer 1: `u` on `([2i]_A, [2i+1]_A)`, `v⁻¹` on `([2i-1]_B, [2i]_B)`.
/// Layer 2: `v` on `([2i-1]_A, [2i]_A)`, `u⁻¹` on `([2i]_B, [2i+1]_B)` and on
/// the two seams `([0]_A, [1]_B)`, `([2m]_B, [2m+1]_A)`.
pub fn build_vr(q: &MargolusQca, region_size: usize) -> Result<FoldedVr, QcaError> {
    let layout = RingLayout::new(region_size)?;
    let m = layout.half;
    let (u_inv, v_inv) = (q.u.inverse(), q.v.inverse());
    let mut layers: Vec<Vec<(DenseOperator, [usize; 2])>> = vec![Vec::new(), Vec::new()];
    for i in 0..=m {
        layers[0].push((q.u.clone(), [layout.a(2 * i), layout.a(2 * i + 1)]));
    }
    for i in 1..=m {
        layers[0].push((v_inv.clone(), [layout.b(2 * i - 1), layout.b(2 * i)]));
    }
    for i in 1..=m {
        layers[1].push((q.v.clone(), [layout.a(2 * i - 1), layout.a(2 * i)]));
    }
    for i in 1..m {
        layers[1].push((u_inv.clone(), [layout.b(2 * i), layout.b(2 * i + 1)]));
    }
    layers[1].push((u_inv.clone(), [layout.a(0), layout.b(1)]));
    layers[1].push((u_inv, [layout.b(2 * m), layout.a(2 * m + 1)]));

    let mut circuit = Circuit::new(vec![q.d; layout.len()])?;
    for layer in &layers {
        for (op, sites) in layer {
            circuit.push(op, sites)?;
        }
    }
    let certificate = DepthCertificate {
        layers: layers.iter().map(|l| l.iter().map(|(_, s)| s.to_vec()).collect()).collect(),
    };
    Ok(FoldedVr { circuit, layout, certificate })
}

/// `S_R Q_A⁻¹ S_R Q_A` built literally on the ring register, with `Q_A`
/// truncated to the gates that do not cancel.
pub fn vr_from_definition(q: &MargolusQca, region_size: usize) -> Result<Circuit, QcaError> {
    let layout = RingLayout::new(region_size)?;
    let m = layout.half;
    let mut qa = Circuit::new(vec![q.d; layout.len()])?;
    for i in 0..=m {
        qa.push(&q.u, &[layout.a(2 * i), layout.a(2 * i + 1)])?;
    }
    for i in 1..=m {
        qa.push(&q.v, &[layout.a(2 * i - 1), layout.a(2 * i)])?;
    }
    let swap = DenseOperator::swap(q.d, q.d);
    let sr = |dims: &[usize]| -> Result<Circuit, QcaError> {
        let mut s = Circuit::new(dims.to_vec())?;
        for j in 1..=2 * m {
            s.push(&swap, &[layout.a(j), layout.b(j)])?;
        }
        Ok(s)
    };
    let mut c = qa.clone();
    c.extend(&sr(qa.out_dims())?)?;
    c.extend(&qa.inverse())?;
    c.extend(&sr(qa.in_dims())?)?;
    Ok(c)
}

/// `V_R` from its definition on two full periodic chains of `chain` sites:
/// register sites `0..chain` are `A`, `chain..2 chain` are `B`.
pub fn vr_on_chains(q: &MargolusQca, region_size: usize, chain: usize) -> Result<Circuit, QcaError> {
    if chain < region_size + 2 {
        return Err(QcaError::Invalid("chain too short for region".into()));
    }
    let qa_ring = q.ring_circuit(chain, 0)?;
    let mut qa = Circuit::new(vec![q.d; 2 * chain])?;
    for (k, sites) in qa_ring.supports().iter().enumerate() {
        let op = if k < chain / 2 { &q.u } else { &q.v };
        qa.push(op, sites)?;
    }
    let swap = DenseOperator::swap(q.d, q.d);
    let mut sr = Circuit::new(vec![q.d; 2 * chain])?;
    for j in 1..=region_size {
        sr.push(&swap, &[j, chain + j])?;
    }
    let mut c = qa.clone();
    c.extend(&sr)?;
    c.extend(&qa.inverse())?;
    c.extend(&sr)?;
    Ok(c)
}

/// `w = v̄ u`, a map `d⊗d → d⊗d`.
pub fn build_w(q: &MargolusQca) -> Result<DenseOperator, QcaError> {
    q.v.spatial_reverse()?.after(&q.u)
}

/// `W_1`: `w` on the seams `([0]_A, [1]_B)`, `([2m]_B, [2m+1]_A)` and on
/// `([2i]_B, [2i+1]_B)`; `W_2`: `w̄` on `([2i-1]_B, [2i]_B)`.
pub fn build_w1_w2(q: &MargolusQca, layout: &RingLayout) -> Result<(Circuit, Circuit), QcaError> {
    let m = layout.half;
    let w = build_w(q)?;
    let wbar = w.spatial_reverse()?;
    let mut w1 = Circuit::new(vec![q.d; layout.len()])?;
    w1.push(&w, &[layout.a(0), layout.b(1)])?;
    w1.push(&w, &[layout.b(2 * m), layout.a(2 * m + 1)])?;
    for i in 1..m {
        w1.push(&w, &[layout.b(2 * i), layout.b(2 * i + 1)])?;
    }
    let mut w2 = Circuit::new(vec![q.d; layout.len()])?;
    for i in 1..=m {
        w2.push(&wbar, &[layout.b(2 * i - 1), layout.b(2 * i)])?;
    }
    Ok((w1, w2))
}

/// `Q` on the ring: `u` pairs start at `[0]_A` (the last ring position).
pub fn q_on_ring(q: &MargolusQca, layout: &RingLayout) -> Result<Circuit, QcaError> {
    q.ring_circuit(layout.len(), layout.len() - 1)
}

#[derive(Debug, Clone)]
pub struct RingReport {
    pub ring_size: usize,
    pub deviation: Deviation,
    pub certificate: DepthCertificate,
}

/// `W_1 V_R W_2` against `Q` on the ring, global phase removed.
pub fn verify_ring_equality(q: &MargolusQca, region_size: usize) -> Result<RingReport, QcaError> {
    let vr = build_vr(q, region_size)?;
    let (w1, w2) = build_w1_w2(q, &vr.layout)?;
    let mut total = w2;
    total.extend(&vr.circuit)?;
    total.extend(&w1)?;
    let target = q_on_ring(q, &vr.layout)?;
    let deviation = compare(&total, &target)?;
    Ok(RingReport { ring_size: vr.layout.len(), deviation, certificate: vr.certificate })
}
