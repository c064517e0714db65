//! Tableau against a dense state vector on six qubits.

mod support;

use klocal_core::monitored::*;
use support::dense::*;

#[test]
fn gate_matrices_realize_the_images() {
    let mats = gate_matrices();
    assert_eq!(mats.len(), CLIFFORD2_COUNT);
    let basis = CliffordGate2::identity();
    for (images, m) in &mats {
        for (k, gen) in basis.images().iter().enumerate() {
            let conj = mul4(&mul4(m, &pauli2_matrix(gen)), &adjoint4(m));
            assert!(close4(&conj, &pauli2_matrix(&images[k])));
        }
    }
}

#[test]
fn tableau_matches_dense_state_on_six_qubits() {
    let st = compare_histories(6, 1000, 30, 606);
    assert!(st.mismatches.is_empty(), "{:#?}", st.mismatches);
    assert!(st.random_outcomes > 1000);
}
