use klocal_core::phasepoly::{Hyperedge, PhaseGateSet, SymmetrySpec};
use proptest::prelude::*;

// X_S D X_S is diagonal with entries D(b ⊕ S); compare entry by entry.
fn dense_conjugate_matches(op: &PhaseGateSet, support: &[usize]) -> bool {
    let n = op.n_qubits();
    let conj = op.conjugate_by_x(&SymmetrySpec::new("S", support.iter().copied())).unwrap();
    (0..1usize << n).all(|b| {
        let bits: Vec<bool> = (0..n).map(|i| b >> i & 1 == 1).collect();
        let mut flipped = bits.clone();
        for &s in support {
            flipped[s] = !flipped[s];
        }
        conj.phase_on(&bits) == op.phase_on(&flipped)
    })
}

fn arb_op(max_n: usize) -> impl Strategy<Value = PhaseGateSet> {
    (2..=max_n).prop_flat_map(op_on)
}

fn op_on(n: usize) -> impl Strategy<Value = PhaseGateSet> {
    let edge = proptest::collection::btree_set(0..n, 1..=3usize.min(n));
    (proptest::collection::vec(edge, 0..12), any::<bool>()).prop_map(move |(edges, neg)| {
        let mut s = PhaseGateSet::from_edges(n, edges.into_iter().map(|e| Hyperedge::new(e).unwrap())).unwrap();
        if neg {
            s.toggle(Hyperedge::new([]).unwrap()).unwrap();
        }
        s
    })
}

proptest! {
    #[test]
    fn conjugation_matches_dense_diagonal(op in arb_op(10), mask in any::<u16>()) {
        let support: Vec<usize> = (0..op.n_qubits()).filter(|i| mask >> i & 1 == 1).collect();
        prop_assert!(dense_conjugate_matches(&op, &support));
    }

    #[test]
    fn conjugation_is_order_independent(op in arb_op(16), mask in any::<u16>(), seed in any::<u64>()) {
        let mut support: Vec<usize> = (0..op.n_qubits()).filter(|i| mask >> i & 1 == 1).collect();
        let forward = op.conjugate_by_x_ordered(support.iter().copied()).unwrap();
        let mut s = seed;
        for i in (1..support.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            support.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(forward, op.conjugate_by_x_ordered(support).unwrap());
    }

    #[test]
    fn compose_is_a_group_of_exponent_two((a, b, c) in (2..=6usize).prop_flat_map(|n| (op_on(n), op_on(n), op_on(n)))) {
        prop_assert!(a.compose(&a).unwrap().is_trivial());
        prop_assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
    }

    #[test]
    fn commutation_iff_trivial_residual(op in arb_op(8), mask in any::<u8>()) {
        let sym = SymmetrySpec::new("S", (0..op.n_qubits()).filter(|i| mask >> i & 1 == 1));
        prop_assert_eq!(op.commutes_with(&sym).unwrap(), op.residual(&sym).unwrap().is_trivial());
    }
}

#[test]
fn ring_entangler_is_symmetric_but_its_gates_are_not() {
    let n = 8;
    let ring = PhaseGateSet::from_edges(n, (0..n).map(|i| Hyperedge::pair(i, (i + 1) % n))).unwrap();
    let odd = SymmetrySpec::new("X_odd", (0..n).step_by(2));
    let even = SymmetrySpec::new("X_even", (1..n).step_by(2));
    assert!(ring.commutes_with(&odd).unwrap());
    assert!(ring.commutes_with(&even).unwrap());
    assert!(ring.residual(&odd).unwrap().is_trivial());
    let single = PhaseGateSet::from_edges(n, [Hyperedge::pair(0, 1)]).unwrap();
    assert!(!single.commutes_with(&odd).unwrap());
    assert!(!ring.is_trivial());
}
