use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix stored by columns.
///
/// Each column is a list of `(row, value)` pairs with strictly increasing
/// rows and nonzero values.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let mut m = Self::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.columns[j].push((i, v));
                }
            }
        }
        m
    }

    /// Builds a column from unsorted entries, summing repeated rows.
    pub fn push_column(&mut self, entries: impl IntoIterator<Item = (usize, i64)>) {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (r, v) in entries {
            assert!(r < self.rows, "row {r} out of range");
            *acc.entry(r).or_insert(0) += v;
        }
        self.columns.push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        self.cols += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j].binary_search_by_key(&i, |&(r, _)| r).map_or(0, |k| self.columns[j][k].1)
    }

    pub fn nonzero_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    /// `self · other`, or `None` if an entry leaves `i64`.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, 0);
        for col in &other.columns {
            let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    *acc.entry(i).or_insert(0) += a as i128 * b as i128;
                }
            }
            let entries = acc.into_iter().filter(|&(_, v)| v != 0).map(|(i, v)| i64::try_from(v).ok().map(|v| (i, v)));
            out.columns.push(entries.collect::<Option<Vec<_>>>()?);
            out.cols += 1;
        }
        Some(out)
    }
}

/// Invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | …`, all positive.
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form over the integers, computed exactly.
///
/// Unit pivots are eliminated first on the sparse matrix in `i64` with
/// overflow checks; whatever remains is finished densely in `BigInt`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut work = SparseWork::new(a);
    let ones = work.eliminate_units();
    let rest = work.remainder();
    let mut factors = vec![BigInt::one(); ones];
    factors.extend(dense_snf(rest));
    SmithForm { factors }
}

struct SparseWork {
    columns: Vec<Vec<(usize, i64)>>,
    /// For each row, the columns with a nonzero entry in it.
    row_cols: Vec<Vec<usize>>,
    col_alive: Vec<bool>,
}

impl SparseWork {
    fn new(a: &IntMatrix) -> Self {
        let mut row_cols = vec![Vec::new(); a.rows];
        for (j, col) in a.columns.iter().enumerate() {
            for &(i, _) in col {
                row_cols[i].push(j);
            }
        }
        Self { columns: a.columns.clone(), row_cols, col_alive: vec![true; a.cols] }
    }

    /// Pivots on `±1` entries, sparsest columns first. Returns the number of
    /// pivots. Stops early, leaving an equivalent matrix, if an update would
    /// overflow.
    fn eliminate_units(&mut self) -> usize {
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            self.columns.iter().enumerate().filter(|(_, c)| !c.is_empty()).map(|(j, c)| Reverse((c.len(), j))).collect();
        let mut pivots = 0;
        while let Some(Reverse((len, c))) = heap.pop() {
            if !self.col_alive[c] || self.columns[c].len() != len || len == 0 {
                continue;
            }
            let Some(&(r, u)) = self.columns[c]
                .iter()
                .filter(|&&(_, v)| v == 1 || v == -1)
                .min_by_key(|&&(i, _)| self.row_cols[i].len())
            else {
                continue;
            };
            let pivot = self.columns[c].clone();
            let others: Vec<usize> = self.row_cols[r].iter().copied().filter(|&j| j != c && self.col_alive[j]).collect();
            for j in others {
                let a = self.columns[j].iter().find(|&&(i, _)| i == r).map_or(0, |&(_, v)| v);
                if a == 0 {
                    continue;
                }
                let Some(new) = a.checked_mul(-u).and_then(|k| axpy(&self.columns[j], &pivot, k)) else {
                    return pivots;
                };
                for &(i, _) in &new {
                    if self.columns[j].binary_search_by_key(&i, |&(k, _)| k).is_err() {
                        self.row_cols[i].push(j);
                    }
                }
                self.columns[j] = new;
                heap.push(Reverse((self.columns[j].len(), j)));
            }
            self.col_alive[c] = false;
            self.columns[c].clear();
            // row r is now zero outside the dead pivot column
            for &(i, _) in &pivot {
                self.row_cols[i].retain(|&j| j != c);
            }
            for j in std::mem::take(&mut self.row_cols[r]) {
                if self.col_alive[j] {
                    self.columns[j].retain(|&(i, _)| i != r);
                }
            }
            pivots += 1;
        }
        pivots
    }

    fn remainder(&self) -> Vec<Vec<BigInt>> {
        let cols: Vec<usize> = (0..self.columns.len()).filter(|&j| self.col_alive[j] && !self.columns[j].is_empty()).collect();
        let mut rows: Vec<usize> = cols.iter().flat_map(|&j| self.columns[j].iter().map(|&(i, _)| i)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut out = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
        for (jj, &j) in cols.iter().enumerate() {
            for &(i, v) in &self.columns[j] {
                let ii = rows.binary_search(&i).expect("row collected");
                out[ii][jj] = BigInt::from(v);
            }
        }
        out
    }
}

/// `x + k·y` on sorted sparse columns, dropping zeros.
fn axpy(x: &[(usize, i64)], y: &[(usize, i64)], k: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut p, mut q) = (0, 0);
    while p < x.len() || q < y.len() {
        let (i, v) = match (x.get(p), y.get(q)) {
            (Some(&(i, a)), Some(&(j, b))) if i == j => {
                p += 1;
                q += 1;
                (i, a.checked_add(k.checked_mul(b)?)?)
            }
            (Some(&(i, a)), Some(&(j, _))) if i < j => {
                p += 1;
                (i, a)
            }
            (Some(&(i, a)), None) => {
                p += 1;
                (i, a)
            }
            (_, Some(&(j, b))) => {
                q += 1;
                (j, k.checked_mul(b)?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((i, v));
        }
    }
    Some(out)
}

/// Dense Smith normal form: the positive invariant factors in divisibility
/// order.
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&p);
                    for j in t..n {
                        let sub = &q * &a[t][j];
                        a[i][j] -= sub;
                    }
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&p);
                    for row in a.iter_mut().skip(t) {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                }
            }
            let cross = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            match min_entry(&a, cross) {
                None => break,
                Some((i, j)) => {
                    // a smaller remainder replaces the pivot
                    a.swap(t, i);
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn min_entry(a: &[Vec<BigInt>], cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells.filter(|&(i, j)| !a[i][j].is_zero()).min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
}
