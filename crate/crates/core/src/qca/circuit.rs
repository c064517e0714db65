//! Circuits of small dense gates on a register of qudits whose dimensions may
//! change from gate to gate (`u` turns a `d x d` pair into `ℓ x r`).
//!
//! States are kept sparse: a basis state is a packed digit word (8 bits per
//! site) and a state is a sorted list of `(word, amplitude)`. Permutation-like
//! circuits therefore cost one entry per basis column no matter how large the
//! register is, which is what lets whole-matrix identities be checked column
//! by column.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use super::linalg::{phase_between, Matrix, ONE, ZERO};
use super::operator::DenseOperator;
use super::QcaError;

/// Largest register that may be streamed through [`compare`].
pub const STREAM_DIM_LIMIT: usize = 1 << 18;
/// Largest register that [`Circuit::to_dense`] will materialize.
pub const DENSE_DIM_LIMIT: usize = 1 << 12;
const MAX_SITES: usize = 16;
const DROP: f64 = 1e-15;

type Key = u128;

fn digit(k: Key, site: usize) -> usize {
    ((k >> (8 * site)) & 0xff) as usize
}

fn set_digit(k: Key, site: usize, d: usize) -> Key {
    (k & !(0xff << (8 * site))) | ((d as Key) << (8 * site))
}

#[derive(Debug, Clone)]
struct Placed {
    sites: Vec<usize>,
    op: DenseOperator,
    columns: Vec<Vec<(usize, C64)>>,
    dims_after: Vec<usize>,
}

/// Ordered list of gates; `gates[0]` acts first.
#[derive(Debug, Clone)]
pub struct Circuit {
    in_dims: Vec<usize>,
    dims: Vec<usize>,
    gates: Vec<Placed>,
}

impl Circuit {
    pub fn new(dims: Vec<usize>) -> Result<Self, QcaError> {
        if dims.len() > MAX_SITES || dims.iter().any(|&d| d == 0 || d > 255) {
            return Err(QcaError::Budget(alloc::format!("register {dims:?} outside supported shape")));
        }
        Ok(Circuit { in_dims: dims.clone(), dims, gates: Vec::new() })
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Site lists of the gates, in application order.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.gates.iter().map(|g| g.sites.clone()).collect()
    }

    /// Append `op` acting on `sites` (in the order of its factors).
    pub fn push(&mut self, op: &DenseOperator, sites: &[usize]) -> Result<(), QcaError> {
        if sites.len() != op.in_dims.len() || sites.len() != op.out_dims.len() {
            return Err(QcaError::Shape(alloc::format!("gate arity {} vs sites {:?}", op.in_dims.len(), sites)));
        }
        for (k, &s) in sites.iter().enumerate() {
            if s >= self.dims.len() || sites[..k].contains(&s) {
                return Err(QcaError::Shape(alloc::format!("bad site list {sites:?}")));
            }
            if self.dims[s] != op.in_dims[k] {
                return Err(QcaError::Shape(alloc::format!(
                    "site {s} has dimension {} but gate expects {}",
                    self.dims[s],
                    op.in_dims[k]
                )));
            }
        }
        if op.in_dims.iter().product::<usize>() != op.out_dims.iter().product::<usize>() {
            return Err(QcaError::Shape("gate must preserve the total dimension".into()));
        }
        if op.out_dims.iter().any(|&d| d > 255) {
            return Err(QcaError::Budget("site dimension above 255".into()));
        }
        for (k, &s) in sites.iter().enumerate() {
            self.dims[s] = op.out_dims[k];
        }
        self.gates.push(Placed {
            sites: sites.to_vec(),
            op: op.clone(),
            columns: op.sparse_columns(),
            dims_after: self.dims.clone(),
        });
        Ok(())
    }

    /// Append every gate of `other`.
    pub fn extend(&mut self, other: &Circuit) -> Result<(), QcaError> {
        if other.in_dims != self.dims {
            return Err(QcaError::Shape("circuit dimensions do not chain".into()));
        }
        for g in &other.gates {
            self.push(&g.op, &g.sites)?;
        }
        Ok(())
    }

    /// Same gates on a larger register; site `k` goes to `map[k]`.
    pub fn embed(&self, map: &[usize], dims: Vec<usize>) -> Result<Circuit, QcaError> {
        if map.len() != self.dims.len() {
            return Err(QcaError::Shape("embedding map has the wrong length".into()));
        }
        let mut c = Circuit::new(dims)?;
        for g in &self.gates {
            let sites: Vec<usize> = g.sites.iter().map(|&s| map[s]).collect();
            c.push(&g.op, &sites)?;
        }
        Ok(c)
    }

    pub fn inverse(&self) -> Circuit {
        let mut c = Circuit { in_dims: self.dims.clone(), dims: self.dims.clone(), gates: Vec::new() };
        for g in self.gates.iter().rev() {
            c.push(&g.op.inverse(), &g.sites).expect("inverse of a valid circuit chains");
        }
        c
    }

    /// Apply to a sparse state. Amplitudes are merged through a dense
    /// scratch array indexed by the basis position after each gate.
    fn run(&self, mut state: Vec<(Key, C64)>, acc: &mut Vec<C64>) -> Vec<(Key, C64)> {
        let total = self.in_dim();
        if acc.len() < total {
            acc.resize(total, ZERO);
        }
        let mut touched: Vec<usize> = Vec::new();
        for g in &self.gates {
            touched.clear();
            let ind = &g.op.in_dims;
            let outd = &g.op.out_dims;
            let mut template = Vec::with_capacity(state.len());
            for &(k, a) in &state {
                let mut col = 0;
                for (t, &s) in g.sites.iter().enumerate() {
                    col = col * ind[t] + digit(k, s);
                }
                for &(row, x) in &g.columns[col] {
                    let mut key = k;
                    let mut rem = row;
                    for t in (0..g.sites.len()).rev() {
                        key = set_digit(key, g.sites[t], rem % outd[t]);
                        rem /= outd[t];
                    }
                    let idx = Self::index_of(key, &g.dims_after);
                    if acc[idx] == ZERO {
                        touched.push(idx);
                        template.push(key);
                    }
                    acc[idx] += a * x;
                    if acc[idx] == ZERO {
                        // Exact cancellation; keep the slot marked as used.
                        acc[idx] = C64::new(0.0, f64::MIN_POSITIVE);
                    }
                }
            }
            state.clear();
            for (&idx, &key) in touched.iter().zip(&template) {
                let a = acc[idx];
                acc[idx] = ZERO;
                if a.norm() > DROP {
                    state.push((key, a));
                }
            }
        }
        state
    }

    fn key_of(index: usize, dims: &[usize]) -> Key {
        let mut k: Key = 0;
        let mut rem = index;
        for s in (0..dims.len()).rev() {
            k = set_digit(k, s, rem % dims[s]);
            rem /= dims[s];
        }
        k
    }

    fn index_of(k: Key, dims: &[usize]) -> usize {
        (0..dims.len()).fold(0, |acc, s| acc * dims[s] + digit(k, s))
    }

    /// Image of input basis state `col` as `(output index, amplitude)`.
    pub fn column(&self, col: usize) -> Vec<(usize, C64)> {
        self.column_with(col, &mut Vec::new())
    }

    fn column_with(&self, col: usize, scratch: &mut Vec<C64>) -> Vec<(usize, C64)> {
        let out = self.run(vec![(Self::key_of(col, &self.in_dims), ONE)], scratch);
        let mut v: Vec<(usize, C64)> = out.into_iter().map(|(k, a)| (Self::index_of(k, &self.dims), a)).collect();
        v.sort_unstable_by_key(|e| e.0);
        v
    }

    /// All columns in order, sharing one scratch buffer.
    pub fn columns(&self) -> impl Iterator<Item = Vec<(usize, C64)>> + '_ {
        let mut scratch = Vec::new();
        (0..self.in_dim()).map(move |c| self.column_with(c, &mut scratch))
    }

    pub fn in_dim(&self) -> usize {
        self.in_dims.iter().product()
    }

    pub fn out_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Full matrix; refused above [`DENSE_DIM_LIMIT`].
    pub fn to_dense(&self) -> Result<DenseOperator, QcaError> {
        let (n_in, n_out) = (self.in_dim(), self.out_dim());
        if n_in > DENSE_DIM_LIMIT || n_out > DENSE_DIM_LIMIT {
            return Err(QcaError::Budget(alloc::format!("dimension {n_in} exceeds dense limit")));
        }
        let mut m = Matrix::zeros(n_out, n_in);
        for (c, col) in self.columns().enumerate() {
            for (r, a) in col {
                m[(r, c)] = a;
            }
        }
        DenseOperator::new(m, self.in_dims.clone(), self.dims.clone())
    }
}

/// Distance between two circuits with the global phase quotiented out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    /// Largest entry of `A - e^{iθ} B`.
    pub max_entry: f64,
    /// Frobenius norm of `A - e^{iθ} B`; an upper bound on the spectral norm.
    pub frobenius: f64,
}

fn check_pair(a: &Circuit, b: &Circuit) -> Result<(), QcaError> {
    if a.in_dims != b.in_dims || a.dims != b.dims {
        return Err(QcaError::Shape("compared circuits act on different registers".into()));
    }
    let n = a.in_dim();
    if n > STREAM_DIM_LIMIT || a.out_dim() > STREAM_DIM_LIMIT {
        return Err(QcaError::Budget(alloc::format!("register dimension {n} exceeds streaming limit")));
    }
    Ok(())
}

/// Compare `a` against the reference `b` column by column. The phase `θ`
/// aligns `a` with `b` on the largest-modulus entry of `b` (first in
/// column-major scan order).
pub fn compare(a: &Circuit, b: &Circuit) -> Result<Deviation, QcaError> {
    check_pair(a, b)?;
    let cols_b: Vec<Vec<(usize, C64)>> = b.columns().collect();
    let mut best = (0usize, 0usize, 0.0f64);
    for (c, col) in cols_b.iter().enumerate() {
        for &(r, x) in col {
            if x.norm() > best.2 + 1e-12 {
                best = (c, r, x.norm());
            }
        }
    }
    let (bc, br, _) = best;
    let ref_entry = cols_b[bc].iter().find(|e| e.0 == br).map_or(ZERO, |e| e.1);
    let a_entry = a.column(bc).into_iter().find(|e| e.0 == br).map_or(ZERO, |e| e.1);
    Ok(distance(a, cols_b.into_iter(), phase_between(a_entry, ref_entry)))
}

/// `A - B` with no phase freedom.
pub fn compare_exact(a: &Circuit, b: &Circuit) -> Result<Deviation, QcaError> {
    check_pair(a, b)?;
    Ok(distance(a, b.columns(), ONE))
}

fn distance(a: &Circuit, b_columns: impl Iterator<Item = Vec<(usize, C64)>>, ph: C64) -> Deviation {
    let mut max_entry: f64 = 0.0;
    let mut fro = 0.0;
    for (ca, cb) in a.columns().zip(b_columns) {
        let (mut i, mut j) = (0, 0);
        while i < ca.len() || j < cb.len() {
            let d = match (ca.get(i), cb.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    i += 1;
                    j += 1;
                    x.1 - ph * y.1
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    i += 1;
                    x.1
                }
                (Some(x), None) => {
                    i += 1;
                    x.1
                }
                (_, Some(y)) => {
                    j += 1;
                    -ph * y.1
                }
                (None, None) => unreachable!(),
            };
            max_entry = max_entry.max(d.norm());
            fro += d.norm_sqr();
        }
    }
    Deviation { max_entry, frobenius: libm::sqrt(fro) }
}

/// True when every column of `c` matches the identity up to one global phase.
pub fn is_identity(c: &Circuit, tol: f64) -> Result<bool, QcaError> {
    let id = Circuit::new(c.in_dims.clone())?;
    Ok(compare(c, &id)?.max_entry <= tol)
}
