//! Dense state-vector reference for the stabilizer simulator.

#![allow(dead_code)]

use std::collections::HashMap;

use klocal_core::monitored::clifford::{Generator, GENERATORS};
use klocal_core::monitored::*;
use num_complex::Complex64 as C;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type M4 = [[C; 4]; 4];

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn mul4(a: &M4, b: &M4) -> M4 {
    let mut out = [[c(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn kron2(a: [[C; 2]; 2], b: [[C; 2]; 2]) -> M4 {
    let mut out = [[c(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
        }
    }
    out
}

pub fn one_qubit(p: Pauli) -> [[C; 2]; 2] {
    let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
    match p {
        Pauli::I => [[o, z], [z, o]],
        Pauli::X => [[z, o], [o, z]],
        Pauli::Y => [[z, c(0.0, -1.0)], [c(0.0, 1.0), z]],
        Pauli::Z => [[o, z], [z, -o]],
    }
}

pub fn generator_matrix(g: Generator) -> M4 {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
    let h = [[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]];
    let s = [[o, z], [z, c(0.0, 1.0)]];
    let id = one_qubit(Pauli::I);
    match g {
        Generator::H(0) => kron2(h, id),
        Generator::H(_) => kron2(id, h),
        Generator::S(0) => kron2(s, id),
        Generator::S(_) => kron2(id, s),
        Generator::Cnot => [[o, z, z, z], [z, o, z, z], [z, z, z, o], [z, z, o, z]],
    }
}

pub fn pauli2_matrix(p: &PauliString) -> M4 {
    let m = kron2(one_qubit(p.get(0)), one_qubit(p.get(1)));
    let ph = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][p.phase() as usize];
    m.map(|row| row.map(|x| x * ph))
}

pub fn adjoint4(a: &M4) -> M4 {
    let mut out = [[c(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn close4(a: &M4, b: &M4) -> bool {
    (0..4).all(|i| (0..4).all(|j| (a[i][j] - b[i][j]).norm() < 1e-12))
}

/// Unitaries for every enumerated gate, built from generator words.
pub fn gate_matrices() -> HashMap<[PauliString; 4], M4> {
    let gens: Vec<(CliffordGate2, M4)> =
        GENERATORS.iter().map(|&g| (CliffordGate2::generator(g), generator_matrix(g))).collect();
    let id = CliffordGate2::identity();
    let mut id_m = [[c(0.0, 0.0); 4]; 4];
    for (i, row) in id_m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    let mut map = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    map.insert(id.images().clone(), id_m);
    queue.push_back((id, id_m));
    while let Some((g, m)) = queue.pop_front() {
        for (h, hm) in &gens {
            let next = g.then(h);
            if !map.contains_key(next.images()) {
                let nm = mul4(hm, &m);
                map.insert(next.images().clone(), nm);
                queue.push_back((next, nm));
            }
        }
    }
    map
}

pub struct Dense {
    n: usize,
    amp: Vec<C>,
}

impl Dense {
    pub fn plus(n: usize) -> Self {
        let a = c((1.0 / (1u64 << n) as f64).sqrt(), 0.0);
        Dense { n, amp: vec![a; 1 << n] }
    }

    pub fn bit(&self, idx: usize, q: usize) -> usize {
        idx >> (self.n - 1 - q) & 1
    }

    pub fn apply_gate(&mut self, m: &M4, a: usize, b: usize) {
        let (ma, mb) = (1 << (self.n - 1 - a), 1 << (self.n - 1 - b));
        for base in 0..self.amp.len() {
            if base & ma != 0 || base & mb != 0 {
                continue;
            }
            let idx = [base, base | mb, base | ma, base | ma | mb];
            let v: Vec<C> = idx.iter().map(|&i| self.amp[i]).collect();
            for r in 0..4 {
                self.amp[idx[r]] = (0..4).map(|k| m[r][k] * v[k]).sum();
            }
        }
    }

    pub fn apply_pauli(&self, p: &PauliString) -> Vec<C> {
        let ph = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][p.phase() as usize];
        let mut out = vec![c(0.0, 0.0); self.amp.len()];
        for (j, &a) in self.amp.iter().enumerate() {
            let mut i = j;
            let mut f = ph;
            for q in 0..self.n {
                let b = self.bit(j, q);
                let mask = 1 << (self.n - 1 - q);
                match p.get(q) {
                    Pauli::I => {}
                    Pauli::X => i ^= mask,
                    Pauli::Y => {
                        i ^= mask;
                        f *= if b == 0 { c(0.0, 1.0) } else { c(0.0, -1.0) };
                    }
                    Pauli::Z => {
                        if b == 1 {
                            f = -f;
                        }
                    }
                }
            }
            out[i] += f * a;
        }
        out
    }

    pub fn expectation(&self, p: &PauliString) -> f64 {
        let pv = self.apply_pauli(p);
        let e: C = self.amp.iter().zip(&pv).map(|(a, b)| a.conj() * b).sum();
        assert!(e.im.abs() < 1e-9);
        e.re
    }

    pub fn project(&mut self, p: &PauliString, outcome: i8) {
        let pv = self.apply_pauli(p);
        let m = outcome as f64;
        for (a, b) in self.amp.iter_mut().zip(&pv) {
            *a = (*a + b * m) * 0.5;
        }
        let norm: f64 = self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 1e-6);
        for a in &mut self.amp {
            *a /= norm;
        }
    }
}

pub fn random_pauli(n: usize, rng: &mut ChaCha8Rng) -> PauliString {
    loop {
        let ps: Vec<Pauli> = (0..n).map(|_| [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][rng.gen_range(0..4)]).collect();
        let p = PauliString::from_paulis(&ps);
        if p.weight() > 0 {
            return if rng.gen_bool(0.5) { p.negated() } else { p };
        }
    }
}


/// Rings of `n` qubits stepped by random gates, cluster-generator
/// measurements and random Pauli measurements, compared after every step.
#[derive(Debug, Default)]
pub struct OracleStats {
    pub histories: usize,
    pub comparisons: usize,
    pub random_outcomes: usize,
    pub mismatches: Vec<String>,
}

pub fn compare_histories(n: usize, histories: usize, steps: usize, seed: u64) -> OracleStats {
    let gates = enumerate_clifford2();
    let mats = gate_matrices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strings: Vec<PauliString> = (0..n)
        .flat_map(|i| {
            let mut s = PauliString::cluster_generator(n, i);
            let mut out = Vec::new();
            for j in i + 1..n {
                s = s.mul(&PauliString::cluster_generator(n, j));
                out.push(s.clone());
            }
            out
        })
        .collect();
    let mut st = OracleStats { histories, ..Default::default() };
    let check = |st: &mut OracleStats, ok: bool, what: String| {
        st.comparisons += 1;
        if !ok && st.mismatches.len() < 10 {
            st.mismatches.push(what);
        }
    };
    for h in 0..histories {
        let mut t = Tableau::plus_state(n);
        let mut d = Dense::plus(n);
        for step in 0..steps {
            match rng.gen_range(0..3) {
                0 => {
                    let g = &gates[rng.gen_range(0..gates.len())];
                    let a = rng.gen_range(0..n);
                    let mut b = rng.gen_range(0..n - 1);
                    if b >= a {
                        b += 1;
                    }
                    t.apply_clifford2(g, a, b).unwrap();
                    d.apply_gate(&mats[g.images()], a, b);
                }
                kind => {
                    let p = if kind == 1 {
                        PauliString::cluster_generator(n, rng.gen_range(0..n))
                    } else {
                        random_pauli(n, &mut rng)
                    };
                    let before = d.expectation(&p);
                    let coin = rng.gen_bool(0.5);
                    let mut drawn = false;
                    let m = t
                        .measure(&p, || {
                            drawn = true;
                            coin
                        })
                        .unwrap();
                    if drawn {
                        st.random_outcomes += 1;
                        check(&mut st, before.abs() < 1e-9, format!("history {h} step {step}: random outcome but <{p}> = {before}"));
                    } else {
                        check(&mut st, (before - m as f64).abs() < 1e-9, format!("history {h} step {step}: outcome {m} but <{p}> = {before}"));
                    }
                    d.project(&p, m);
                }
            }
            let probe = random_pauli(n, &mut rng);
            let (e, v) = (d.expectation(&probe), t.expectation(&probe).unwrap());
            check(&mut st, (e - v as f64).abs() < 1e-9, format!("history {h} step {step}: <{probe}> dense {e} tableau {v}"));
        }
        check(&mut st, t.is_valid(), format!("history {h}: invalid tableau"));
        let mut total = 0.0;
        for s in &strings {
            let (e, v) = (d.expectation(s), t.expectation(s).unwrap());
            check(&mut st, (e - v as f64).abs() < 1e-9, format!("history {h}: string <{s}> dense {e} tableau {v}"));
            total += e * e;
        }
        let dense_s = 2.0 * total / (n * (n - 1)) as f64;
        let s = t.string_order();
        check(&mut st, (dense_s - s).abs() < 1e-9 && s == t.string_order_naive(), format!("history {h}: string order {s} vs {dense_s}"));
    }
    st
}
