use klocal_core::qca::circuit::{compare, compare_exact, is_identity, Circuit};
use klocal_core::qca::folded::{build_vr, build_w, build_w1_w2, q_on_ring, vr_from_definition, Chain};
use klocal_core::qca::lemmas::{
    random_symmetric_qca, schmidt_reconstruct, trivial_action_deviation, vr_gate_symmetry,
};
use klocal_core::qca::linalg::{pauli, random_unitary, Matrix};
use klocal_core::qca::margolus::pauli_x;
use klocal_core::qca::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cases() -> Vec<(&'static str, MargolusQca)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    vec![
        ("shift", MargolusQca::shift(2)),
        ("identity", MargolusQca::identity(2)),
        ("cluster", MargolusQca::cluster()),
        ("diagonal", MargolusQca::random_diagonal(2, &mut rng)),
        ("fdqc", MargolusQca::random_fdqc(2, &mut rng)),
        ("shifted", MargolusQca::random_shifted(2, &mut rng)),
        ("fdqc-qutrit", MargolusQca::random_fdqc(3, &mut rng)),
    ]
}

#[test]
fn ring_equality_for_every_case() {
    for (name, q) in cases() {
        let sizes: &[usize] = if q.d == 2 { &[2, 4] } else { &[2] };
        for &size in sizes {
            let r = verify_ring_equality(&q, size).unwrap();
            assert_eq!(r.ring_size, 2 * size + 2);
            assert!(r.deviation.frobenius <= 1e-9, "{name} region {size}: {:?}", r.deviation);
            assert!(r.certificate.is_valid() && r.certificate.depth() == 2);
        }
    }
}

#[test]
fn identity_ring_equality_is_exact() {
    let r = verify_ring_equality(&MargolusQca::identity(2), 2).unwrap();
    assert_eq!(r.deviation.max_entry, 0.0);
}

#[test]
fn compactified_shifts_pass_ring_equality() {
    for w in [2, 3] {
        for diagonal in [true, false] {
            let q = compactify_2d_shift(w, diagonal).unwrap();
            let r = verify_ring_equality(&q, 2).unwrap();
            assert!(r.deviation.frobenius <= 1e-9, "W={w}");
        }
    }
}

#[test]
fn vr_gates_are_two_site_and_layers_disjoint() {
    let (_, q) = &cases()[4];
    let vr = build_vr(q, 4).unwrap();
    assert!(vr.certificate.layers.iter().flatten().all(|s| s.len() == 2));
    let total: usize = vr.certificate.layers.iter().map(Vec::len).sum();
    assert_eq!(total, vr.circuit.len());
    assert!(vr.certificate.is_valid());
}

// Conjugating an operator on [j]_A by V_R: inside R it moves like Q does on
// chain A, and the untouched end [0]_A only sees the seam.
#[test]
fn vr_acts_as_q_in_the_bulk_of_a() {
    let q = MargolusQca::shift(2);
    let vr = build_vr(&q, 4).unwrap();
    let n = vr.layout.len();
    let dense = vr.circuit.to_dense().unwrap().matrix;
    let site_x = |p: usize| {
        let mut acc = Matrix::identity(1);
        for k in 0..n {
            acc = acc.kron(&if k == p { pauli(1) } else { Matrix::identity(2) });
        }
        acc
    };
    let l = &vr.layout;
    for j in 1..=3 {
        let moved = dense.mul(&site_x(l.pos(Chain::A, j))).mul(&dense.adjoint());
        assert!(moved.max_abs_diff(&site_x(l.pos(Chain::A, j + 1))) < 1e-12, "A site {j}");
    }
}

#[test]
fn vr_matches_its_definition() {
    for (name, q) in cases() {
        let vr = build_vr(&q, 2).unwrap();
        let def = vr_from_definition(&q, 2).unwrap();
        assert!(compare(&vr.circuit, &def).unwrap().max_entry < 1e-10, "{name}");
    }
}

#[test]
fn w_relations() {
    for (name, q) in cases() {
        let w = build_w(&q).unwrap();
        assert!(w.is_unitary(1e-10), "{name}");
        let vbar = q.v.spatial_reverse().unwrap();
        let ubar = q.u.spatial_reverse().unwrap();
        let wbar = w.spatial_reverse().unwrap();
        assert!(w.after(&q.u.inverse()).unwrap().matrix.max_abs_diff(&vbar.matrix) < 1e-10);
        assert!(q.v.inverse().after(&wbar).unwrap().matrix.max_abs_diff(&ubar.matrix) < 1e-10);
    }
}

#[test]
fn shift_w_is_the_factor_exchange() {
    let w = build_w(&MargolusQca::shift(2)).unwrap();
    assert_eq!(w, DenseOperator::swap(2, 2));
    let (w1, w2) = build_w1_w2(&MargolusQca::shift(2), &build_vr(&MargolusQca::shift(2), 2).unwrap().layout).unwrap();
    assert_eq!(w1.len(), 2);
    assert_eq!(w2.len(), 1);
}

#[test]
fn fdqc_w_is_the_two_site_composite() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (a, b) = (random_unitary(4, &mut rng), random_unitary(4, &mut rng));
    let q = MargolusQca::from_two_site(2, a.clone(), b.clone()).unwrap();
    let sw = DenseOperator::swap(2, 2).matrix;
    let expected = sw.mul(&b).mul(&sw).mul(&a);
    assert!(build_w(&q).unwrap().matrix.max_abs_diff(&expected) < 1e-12);
}

#[test]
fn w_layers_are_unitary_and_disjoint() {
    for (_, q) in cases().into_iter().filter(|c| c.1.d == 2) {
        let layout = build_vr(&q, 4).unwrap().layout;
        let (w1, w2) = build_w1_w2(&q, &layout).unwrap();
        for c in [&w1, &w2] {
            assert!(c.to_dense().unwrap().is_unitary(1e-10));
            let mut sites: Vec<usize> = c.supports().into_iter().flatten().collect();
            let n = sites.len();
            sites.sort_unstable();
            sites.dedup();
            assert_eq!(sites.len(), n);
        }
    }
}

#[test]
fn q_on_ring_is_a_rotated_margolus_ring() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let q = MargolusQca::random_fdqc(2, &mut rng);
    let layout = build_vr(&q, 2).unwrap().layout;
    let a = q_on_ring(&q, &layout).unwrap();
    assert_eq!(a.supports()[0], vec![layout.len() - 1, 0]);
    assert!(a.to_dense().unwrap().is_unitary(1e-10));
}

#[test]
fn index_identities() {
    assert_eq!(gnvw_index(&MargolusQca::shift(2)), RationalIndex::new(2, 1));
    assert_eq!(gnvw_index(&MargolusQca::identity(2)), RationalIndex::new(1, 1));
    assert_eq!(gnvw_index(&MargolusQca::cluster()), RationalIndex::new(1, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for q in [MargolusQca::shift(2), MargolusQca::shift(3), MargolusQca::random_shifted(2, &mut rng)] {
        let rev = q.reversed().unwrap();
        assert_eq!(gnvw_index(&rev), gnvw_index(&q).recip());
        assert_eq!(gnvw_index(&rev) * gnvw_index(&q), RationalIndex::new(1, 1));
    }
}

// Two qubit shifts in a row move everything by two qubits, which is the
// single shift of the blocked chain with four-dimensional sites.
#[test]
fn index_is_multiplicative_on_shift_squared() {
    let m = 4;
    let one = MargolusQca::shift(2).ring_circuit(2 * m, 0).unwrap();
    let mut twice = one.clone();
    twice.extend(&one).unwrap();
    let blocked = MargolusQca::shift(4).ring_circuit(m, 0).unwrap().to_dense().unwrap().matrix;
    let twice = twice.to_dense().unwrap().matrix;
    assert!(blocked.max_abs_diff(&twice) < 1e-14);
    let s = gnvw_index(&MargolusQca::shift(2));
    assert_eq!(s * s, gnvw_index(&MargolusQca::shift(4)));
}

#[test]
fn schmidt_factors_stay_trivial_on_idle_qubit() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for trial in 0..200 {
        let n = 4;
        let idle = trial % n;
        let rest = random_unitary(1 << (n - 1), &mut rng);
        // Insert the identity on qubit `idle`.
        let dim = 1usize << n;
        let bit = n - 1 - idle;
        let squeeze = |x: usize| ((x >> (bit + 1)) << bit) | (x & ((1 << bit) - 1));
        let m = Matrix::from_fn(dim, dim, |r, c| {
            if (r >> bit & 1) == (c >> bit & 1) { rest[(squeeze(r), squeeze(c))] } else { Default::default() }
        });
        let op = DenseOperator::square(m.clone(), vec![2; n]).unwrap();
        let part_a = [idle, (idle + 1) % n];
        let terms = schmidt_operator_decompose(&op, &part_a).unwrap();
        for (a, _) in &terms {
            assert!(trivial_action_deviation(a, &[2, 2], 0) < 1e-10, "trial {trial}");
        }
        let back = schmidt_reconstruct(&terms, &[2; 4], &part_a).unwrap();
        assert!(back.max_abs_diff(&m) < 1e-10);
    }
}

#[test]
fn w_commutes_with_symmetry() {
    let x = pauli_x();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut qs = vec![MargolusQca::shift(2), MargolusQca::cluster(), MargolusQca::identity(2)];
    for shifted in [false, false, true, true] {
        qs.push(random_symmetric_qca(&x, shifted, &mut rng).unwrap());
    }
    for q in &qs {
        let c = check_w_symmetry(q, &x).unwrap();
        assert!(c.holds(), "{c:?}");
        assert!(vr_gate_symmetry(q, &x).unwrap() <= 1e-10);
    }
    let z = pauli(3);
    assert!(check_w_symmetry(&MargolusQca::cluster(), &z).unwrap().holds());
}

#[test]
fn asymmetric_qca_skips_the_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let c = check_w_symmetry(&MargolusQca::random_fdqc(2, &mut rng), &pauli_x()).unwrap();
    assert!(c.skipped() && c.precondition > 1e-3);
}

#[test]
fn compactified_w_is_translation_covariant() {
    for w in 1..=3 {
        let q = compactify_2d_shift(w, true).unwrap();
        assert!(check_w_translation(&q, &column_translation(w)).unwrap() <= 1e-9, "W={w}");
    }
}

// w relabels each supersite by one step and exchanges the pair.
#[test]
fn compactified_w_relabels_supersites() {
    let w = 2;
    let q = compactify_2d_shift(w, true).unwrap();
    let wm = build_w(&q).unwrap().matrix;
    let t = column_translation(w);
    let expected = DenseOperator::swap(4, 4).matrix.mul(&t.kron(&t));
    assert!(wm.max_abs_diff(&expected) < 1e-14);
    let straight = build_w(&compactify_2d_shift(w, false).unwrap()).unwrap();
    assert_eq!(straight, DenseOperator::swap(4, 4));
}

#[test]
fn exact_compare_sees_phase() {
    let mut c = Circuit::new(vec![2]).unwrap();
    let minus = DenseOperator::square(Matrix::identity(2).scale((-1.0).into()), vec![2]).unwrap();
    c.push(&minus, &[0]).unwrap();
    let id = Circuit::new(vec![2]).unwrap();
    assert!(is_identity(&c, 1e-12).unwrap());
    assert!(compare_exact(&c, &id).unwrap().max_entry > 1.0);
}
