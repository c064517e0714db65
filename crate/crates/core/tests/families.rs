use klocal_core::constructions::*;
use klocal_core::phasepoly::{Hyperedge, PhaseGateSet};

fn assert_family(f: &GateFamily, max_k: usize, max_layers: usize) {
    let c = f.check().unwrap();
    assert!(c.residual.is_trivial(), "{}: residual {:?}", f.label, c.residual);
    assert!(c.asymmetric.is_empty(), "{}: asymmetric gates {:?}", f.label, c.asymmetric);
    assert!(c.entangler_asymmetric.is_empty(), "{}", f.label);
    assert!(c.max_support <= max_k, "{}: support {}", f.label, c.max_support);
    assert!(c.layers.len() <= max_layers, "{}: {} layers", f.label, c.layers.len());
}

#[test]
fn ring_families() {
    for n in (6..=40).step_by(2) {
        assert_family(&RingGeometry::new(n).unwrap().family().unwrap(), 4, 3);
    }
}

#[test]
fn folded_hypergraph_families() {
    for l in [3, 6, 9] {
        let s = FoldedSurface::new(l).unwrap();
        let f = s.family().unwrap();
        assert_eq!(f.entangler.edge_count(), s.torus.triangles().len());
        assert_family(&f, 8, 9);
    }
}

#[test]
fn single_ccz_is_not_colour_symmetric() {
    let s = FoldedSurface::new(3).unwrap();
    let tri = s.torus.triangles()[0].clone();
    let g = PhaseGateSet::from_edges(s.n_sites(), [tri]).unwrap();
    assert!(s.symmetries().iter().any(|sym| !g.commutes_with(sym).unwrap()));
}

#[test]
fn neighbouring_prisms_share_cancelling_walls() {
    let s = FoldedSurface::new(6).unwrap();
    let a = &s.prisms[0].faces;
    let b = &s.prisms[1].faces;
    let shared: Vec<&Hyperedge> = a.iter().filter(|f| b.contains(f)).collect();
    assert_eq!(shared.len(), 2);
    let lattice: Vec<Hyperedge> = s.torus.triangles();
    for f in shared {
        assert!(!lattice.contains(f));
    }
}

#[test]
fn sspt_families() {
    for (pu, pv) in [(6, 6), (8, 8), (6, 10), (12, 8), (10, 10)] {
        let g = SsptGeometry::new(pu, pv).unwrap();
        assert_family(&g.family().unwrap(), 8, 9);
    }
}

#[test]
fn sspt_single_bond_breaks_a_line() {
    let g = SsptGeometry::new(8, 8).unwrap();
    let (a, b) = g.edges[0];
    let cz = PhaseGateSet::from_edges(g.n_sites(), [Hyperedge::pair(a, b)]).unwrap();
    assert!(g.lines.iter().any(|l| !cz.commutes_with(l).unwrap()));
}

#[test]
fn one_to_all_families() {
    for n in (4..=32).step_by(2) {
        let f = one_to_all_1d(n).unwrap();
        assert_eq!(f.gates.len(), n / 2);
        let c = f.check().unwrap();
        assert!(c.residual.is_trivial() && c.asymmetric.is_empty());
        let comp = PhaseGateSet::compose_all(f.n_qubits, &f.gates).unwrap();
        assert!(!comp.support().contains(&0));
    }
    for l in [3, 6] {
        let o = one_to_all_2d(l).unwrap();
        let c = o.family.check().unwrap();
        assert!(c.residual.is_trivial() && c.asymmetric.is_empty(), "{:?}", c.asymmetric);
        let comp = PhaseGateSet::compose_all(o.family.n_qubits, &o.family.gates).unwrap();
        assert!(!comp.support().contains(&0));
    }
}
