//! Diagonal `C^{m-1}Z` circuits over GF(2).
//!
//! A [`PhaseGateSet`] stores each multi-controlled Z as the sorted set of
//! qubits it touches. All such gates commute and square to the identity, so a
//! circuit is fully described by the parity of each edge: composing circuits
//! is a symmetric difference. The empty edge is the scalar `-1` and is kept as
//! a sign bit.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhaseError {
    IndexOutOfRange { index: usize, n: usize },
    RepeatedIndex(usize),
    SizeMismatch { left: usize, right: usize },
}

impl fmt::Display for PhaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseError::IndexOutOfRange { index, n } => {
                write!(f, "qubit {index} out of range for {n} qubits")
            }
            PhaseError::RepeatedIndex(i) => write!(f, "qubit {i} repeated in edge"),
            PhaseError::SizeMismatch { left, right } => {
                write!(f, "qubit count mismatch: {left} vs {right}")
            }
        }
    }
}

/// Sorted, duplicate-free list of qubits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    pub fn new<I: IntoIterator<Item = usize>>(qubits: I) -> Result<Self, PhaseError> {
        let mut q: Vec<usize> = qubits.into_iter().collect();
        q.sort_unstable();
        for w in q.windows(2) {
            if w[0] == w[1] {
                return Err(PhaseError::RepeatedIndex(w[0]));
            }
        }
        Ok(Hyperedge(q))
    }

    /// Two-qubit edge; panics if `a == b`.
    pub fn pair(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "CZ needs two distinct qubits");
        if a < b {
            Hyperedge(alloc::vec![a, b])
        } else {
            Hyperedge(alloc::vec![b, a])
        }
    }

    pub fn triple(a: usize, b: usize, c: usize) -> Self {
        Hyperedge::new([a, b, c]).expect("CCZ needs three distinct qubits")
    }

    pub fn qubits(&self) -> &[usize] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.0.binary_search(&q).is_ok()
    }

    fn without(&self, q: usize) -> Hyperedge {
        Hyperedge(self.0.iter().copied().filter(|&x| x != q).collect())
    }
}

/// X-type symmetry generator `∏_{i ∈ support} X_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrySpec {
    pub support: BTreeSet<usize>,
    pub label: alloc::string::String,
}

impl SymmetrySpec {
    pub fn new<I: IntoIterator<Item = usize>>(label: &str, support: I) -> Self {
        SymmetrySpec { support: support.into_iter().collect(), label: label.into() }
    }
}

/// Diagonal circuit of commuting `C^{m-1}Z` gates, stored by parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseGateSet {
    n: usize,
    edges: BTreeSet<Hyperedge>,
    negative: bool,
}

impl PhaseGateSet {
    pub fn identity(n: usize) -> Self {
        PhaseGateSet { n, edges: BTreeSet::new(), negative: false }
    }

    pub fn from_edges<I: IntoIterator<Item = Hyperedge>>(n: usize, edges: I) -> Result<Self, PhaseError> {
        let mut s = PhaseGateSet::identity(n);
        for e in edges {
            s.toggle(e)?;
        }
        Ok(s)
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.negative { -1 } else { 1 }
    }

    pub fn edges(&self) -> impl Iterator<Item = &Hyperedge> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    /// Qubits touched by at least one edge.
    pub fn support(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|e| e.0.iter().copied()).collect()
    }

    fn check(&self, e: &Hyperedge) -> Result<(), PhaseError> {
        match e.0.last() {
            Some(&q) if q >= self.n => Err(PhaseError::IndexOutOfRange { index: q, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Apply one more gate. The empty edge flips the sign.
    pub fn toggle(&mut self, e: Hyperedge) -> Result<(), PhaseError> {
        self.check(&e)?;
        self.toggle_unchecked(e);
        Ok(())
    }

    fn toggle_unchecked(&mut self, e: Hyperedge) {
        if e.0.is_empty() {
            self.negative = !self.negative;
        } else if !self.edges.remove(&e) {
            self.edges.insert(e);
        }
    }

    pub fn toggled(mut self, e: Hyperedge) -> Result<Self, PhaseError> {
        self.toggle(e)?;
        Ok(self)
    }

    pub fn compose(&self, other: &PhaseGateSet) -> Result<PhaseGateSet, PhaseError> {
        if self.n != other.n {
            return Err(PhaseError::SizeMismatch { left: self.n, right: other.n });
        }
        let edges = self.edges.symmetric_difference(&other.edges).cloned().collect();
        Ok(PhaseGateSet { n: self.n, edges, negative: self.negative ^ other.negative })
    }

    /// Compose a whole family; the identity for an empty one.
    pub fn compose_all<'a, I>(n: usize, items: I) -> Result<PhaseGateSet, PhaseError>
    where
        I: IntoIterator<Item = &'a PhaseGateSet>,
    {
        let mut acc = PhaseGateSet::identity(n);
        for g in items {
            acc = acc.compose(g)?;
        }
        Ok(acc)
    }

    /// `X_S · self · X_S`, one qubit of `S` at a time.
    ///
    /// Uses `X_a C Z_E X_a = C Z_E · C Z_{E \ a}` for `a ∈ E`.
    pub fn conjugate_by_x(&self, sym: &SymmetrySpec) -> Result<PhaseGateSet, PhaseError> {
        self.conjugate_by_x_ordered(sym.support.iter().copied())
    }

    /// Same as [`conjugate_by_x`](Self::conjugate_by_x) with an explicit
    /// processing order.
    pub fn conjugate_by_x_ordered<I: IntoIterator<Item = usize>>(&self, order: I) -> Result<PhaseGateSet, PhaseError> {
        let mut cur = self.clone();
        for a in order {
            if a >= self.n {
                return Err(PhaseError::IndexOutOfRange { index: a, n: self.n });
            }
            let derived: Vec<Hyperedge> =
                cur.edges.iter().filter(|e| e.contains(a)).map(|e| e.without(a)).collect();
            for e in derived {
                cur.toggle_unchecked(e);
            }
        }
        Ok(cur)
    }

    /// `self⁻¹ · X_S self X_S`; the identity iff the two commute.
    pub fn residual(&self, sym: &SymmetrySpec) -> Result<PhaseGateSet, PhaseError> {
        self.compose(&self.conjugate_by_x(sym)?)
    }

    /// Exact commutation, sign included.
    pub fn commutes_with(&self, sym: &SymmetrySpec) -> Result<bool, PhaseError> {
        Ok(self.residual(sym)?.is_trivial())
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty() && !self.negative
    }

    /// Diagonal entry `±1` on computational basis state `bits` (bit `i` of
    /// the slice is qubit `i`).
    pub fn phase_on(&self, bits: &[bool]) -> i8 {
        let mut neg = self.negative;
        for e in &self.edges {
            if e.0.iter().all(|&q| bits[q]) {
                neg = !neg;
            }
        }
        if neg { -1 } else { 1 }
    }
}
