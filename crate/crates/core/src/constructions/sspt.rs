//! Cluster state on the 45°-rotated square lattice with line symmetries.
//!
//! Sites are the points `(u, v)` of a `pu x pv` torus with `u + v` even; each
//! site is bonded to its four diagonal neighbours `(u ± 1, v ± 1)`. The line
//! symmetries are `∏ X` over a row (`v` fixed) or a column (`u` fixed).
//!
//! The bond set factorises: two sites are bonded iff their `u` coordinates
//! are ring-neighbours and so are their `v` coordinates. Writing the `u` ring
//! entangler as a product of the 1D plaquettes `K(A_i, B_i)` and likewise for
//! `v`, the product of two plaquettes restricted to the even sublattice is a
//! single `K(A, B)` whose parts `A`, `B` are 2x2 rectangles of sites. A
//! rectangle meets every row and column in 0 or 2 sites, so each such gate
//! commutes with every line, and the sum over all plaquette pairs telescopes
//! to the full bond set.
//!
//! Geometrically this folds the torus along both axes: each gate couples a
//! site with its mirror images across the `u` fold, the `v` fold and both.
//! Rows cross only the `u` fold and columns only the `v` fold, and each line
//! is carried onto itself by the reflection across the fold it crosses.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::ring::plaquette_parts;
use super::{ConstructionError, GateFamily};
use crate::phasepoly::{Hyperedge, PhaseGateSet, SymmetrySpec};

/// Which half of each fold a site sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Front,
    Back,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SsptSite {
    pub u: usize,
    pub v: usize,
    /// Side of the `u` fold (`u < pu/2` is front).
    pub u_layer: Layer,
    /// Side of the `v` fold.
    pub v_layer: Layer,
}

#[derive(Debug, Clone)]
pub struct SsptGeometry {
    pub pu: usize,
    pub pv: usize,
    pub sites: Vec<SsptSite>,
    index: BTreeMap<(usize, usize), usize>,
    /// CZ bonds of the cluster state.
    pub edges: Vec<(usize, usize)>,
    /// Each gate cell as the two rectangles `(A, B)` of site indices.
    pub cells: Vec<([usize; 4], [usize; 4])>,
    /// Row lines first (`v = 0..pv`), then column lines (`u = 0..pu`).
    pub lines: Vec<SymmetrySpec>,
}

fn layer(c: usize, period: usize) -> Layer {
    if c < period / 2 { Layer::Front } else { Layer::Back }
}

impl SsptGeometry {
    /// Both periods even and at least 6.
    pub fn new(pu: usize, pv: usize) -> Result<Self, ConstructionError> {
        for (name, p) in [("pu", pu), ("pv", pv)] {
            if p < 6 || p % 2 != 0 {
                return Err(ConstructionError::Geometry(alloc::format!(
                    "{name} = {p}: the folded rotated torus needs an even period of at least 6"
                )));
            }
        }
        let mut sites = Vec::new();
        let mut index = BTreeMap::new();
        for v in 0..pv {
            for u in 0..pu {
                if (u + v) % 2 == 0 {
                    index.insert((u, v), sites.len());
                    sites.push(SsptSite { u, v, u_layer: layer(u, pu), v_layer: layer(v, pv) });
                }
            }
        }
        let mut g = SsptGeometry { pu, pv, sites, index, edges: Vec::new(), cells: Vec::new(), lines: Vec::new() };
        for (i, s) in g.sites.iter().enumerate() {
            for dv in [1, pv - 1] {
                for du in [1, pu - 1] {
                    let j = g.index[&((s.u + du) % pu, (s.v + dv) % pv)];
                    if i < j {
                        g.edges.push((i, j));
                    }
                }
            }
        }
        g.edges.sort_unstable();
        g.edges.dedup();
        for i in 1..pu / 2 {
            let (au, bu) = plaquette_parts(pu, i);
            for j in 1..pv / 2 {
                let (av, bv) = plaquette_parts(pv, j);
                // Keep whichever product lands on the even sublattice.
                let (p, q) = if (au[0] + av[0]) % 2 == 0 { (av, bv) } else { (bv, av) };
                let rect = |us: [usize; 2], vs: [usize; 2]| {
                    [g.index[&(us[0], vs[0])], g.index[&(us[0], vs[1])], g.index[&(us[1], vs[0])], g.index[&(us[1], vs[1])]]
                };
                g.cells.push((rect(au, p), rect(bu, q)));
            }
        }
        for v in 0..pv {
            let label: String = alloc::format!("line {v},+");
            g.lines.push(SymmetrySpec::new(&label, g.sites.iter().enumerate().filter(|s| s.1.v == v).map(|s| s.0)));
        }
        for u in 0..pu {
            let label: String = alloc::format!("line {u},-");
            g.lines.push(SymmetrySpec::new(&label, g.sites.iter().enumerate().filter(|s| s.1.u == u).map(|s| s.0)));
        }
        g.check_mirrors()?;
        Ok(g)
    }

    pub fn n_sites(&self) -> usize {
        self.sites.len()
    }

    pub fn site(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u % self.pu, v % self.pv)).copied()
    }

    /// Reflection across the `u` fold.
    pub fn mirror_u(&self, i: usize) -> usize {
        let s = self.sites[i];
        self.index[&((self.pu - s.u) % self.pu, s.v)]
    }

    /// Reflection across the `v` fold.
    pub fn mirror_v(&self, i: usize) -> usize {
        let s = self.sites[i];
        self.index[&(s.u, (self.pv - s.v) % self.pv)]
    }

    /// Rows must be invariant under the `u` reflection and columns under the
    /// `v` reflection, and each must have sites on both sides of that fold.
    fn check_mirrors(&self) -> Result<(), ConstructionError> {
        let rows = &self.lines[..self.pv];
        let cols = &self.lines[self.pv..];
        let ok_rows = rows.iter().all(|l| {
            l.support.iter().all(|&i| l.support.contains(&self.mirror_u(i)))
                && l.support.iter().any(|&i| self.sites[i].u_layer == Layer::Front)
                && l.support.iter().any(|&i| self.sites[i].u_layer == Layer::Back)
        });
        let ok_cols = cols.iter().all(|l| {
            l.support.iter().all(|&i| l.support.contains(&self.mirror_v(i)))
                && l.support.iter().any(|&i| self.sites[i].v_layer == Layer::Front)
                && l.support.iter().any(|&i| self.sites[i].v_layer == Layer::Back)
        });
        if ok_rows && ok_cols {
            Ok(())
        } else {
            Err(ConstructionError::Geometry("line symmetry not mirror-symmetric across its fold".into()))
        }
    }

    pub fn entangler(&self) -> Result<PhaseGateSet, ConstructionError> {
        Ok(PhaseGateSet::from_edges(self.n_sites(), self.edges.iter().map(|&(a, b)| Hyperedge::pair(a, b)))?)
    }

    pub fn family(&self) -> Result<GateFamily, ConstructionError> {
        Ok(GateFamily {
            label: alloc::format!("sspt-{}x{}", self.pu, self.pv),
            n_qubits: self.n_sites(),
            entangler: self.entangler()?,
            gates: sspt_gates(self)?,
            symmetries: self.lines.clone(),
        })
    }
}

/// `W_c = ∏_{a ∈ A, b ∈ B} CZ_{a,b}` for every cell `(A, B)`: 16 CZs on 8
/// sites.
pub fn sspt_gates(geom: &SsptGeometry) -> Result<Vec<PhaseGateSet>, ConstructionError> {
    geom.cells
        .iter()
        .map(|(a, b)| {
            let edges = a.iter().flat_map(|&x| b.iter().map(move |&y| Hyperedge::pair(x, y)));
            Ok(PhaseGateSet::from_edges(geom.n_sites(), edges)?)
        })
        .collect()
}
