//! Exact linear algebra over the rationals.
//!
//! Dense routines work on row-major `Vec<Vec<Rational>>`; the sparse
//! [`SparseEchelon`] keeps an incrementally maintained reduced row echelon
//! basis and is what the module builder uses for weight spaces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Formats as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Brings `rows` into reduced row echelon form and returns the pivot columns.
/// Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` where `A` has the given rows and `ncols` columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b`. When `A` has full column rank the solution is unique.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

pub type SparseVec = BTreeMap<usize, Rational>;

/// `acc += f * v`, dropping entries that cancel.
pub fn axpy(acc: &mut SparseVec, f: &Rational, v: &SparseVec) {
    if f.is_zero() {
        return;
    }
    for (&k, x) in v {
        let entry = acc.entry(k).or_insert_with(Rational::zero);
        *entry += f * x;
        if entry.is_zero() {
            acc.remove(&k);
        }
    }
}

pub fn add_entry(acc: &mut SparseVec, k: usize, x: Rational) {
    if x.is_zero() {
        return;
    }
    let entry = acc.entry(k).or_insert_with(Rational::zero);
    *entry += x;
    if entry.is_zero() {
        acc.remove(&k);
    }
}

/// Reduced row echelon basis of a subspace of a sparse coordinate space.
///
/// Every row has a leading 1 at its pivot and zeros at the pivots of all
/// other rows, so the coordinates of a vector in the span are simply its
/// entries at the pivots.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: Vec<(usize, SparseVec)>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Residual of `v` after eliminating against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut w = v.clone();
        for (p, row) in &self.rows {
            if let Some(f) = w.get(p).cloned() {
                axpy(&mut w, &(-f), row);
            }
        }
        w
    }

    /// Adds `v` to the span; returns false when it was already contained.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let w = self.reduce(v);
        let Some((&p, lead)) = w.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let w: SparseVec = w.iter().map(|(&k, x)| (k, x * &inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if let Some(f) = row.get(&p).cloned() {
                axpy(row, &(-f), &w);
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, w));
        true
    }

    /// Coordinates of `v` with respect to the rows, or `None` if outside the span.
    pub fn coords(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.reduce(v).is_empty() {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|(p, _)| v.get(p).cloned().unwrap_or_else(Rational::zero))
                .collect(),
        )
    }
}

/// Rank of a list of sparse vectors.
pub fn sparse_rank<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = SparseEchelon::new();
    vs.into_iter().filter(|v| e.insert(v)).count()
}

/// Basis of the kernel of the map sending the `i`-th unit vector to
/// `columns[i]`, as sparse vectors over the column indices.
pub fn sparse_kernel(columns: &[SparseVec]) -> Vec<SparseVec> {
    // rows in insertion order: each is zero at the pivots of earlier rows
    let mut rows: Vec<(usize, SparseVec, SparseVec)> = Vec::new();
    let mut out = Vec::new();
    for (c, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        let mut combo = SparseVec::new();
        combo.insert(c, Rational::one());
        for (p, r, rc) in &rows {
            if let Some(f) = v.get(p).cloned() {
                axpy(&mut v, &(-&f), r);
                axpy(&mut combo, &(-f), rc);
            }
        }
        match v.iter().next() {
            None => out.push(combo),
            Some((&p, lead)) => {
                let inv = lead.recip();
                let v = v.iter().map(|(&k, x)| (k, x * &inv)).collect();
                let combo = combo.iter().map(|(&k, x)| (k, x * &inv)).collect();
                rows.push((p, v, combo));
            }
        }
    }
    out
}

/// Invariant factors (Smith normal form diagonal, nonzero part) of an integer matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for i in t..rows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // divisibility: pivot must divide the rest of the block
        let bad = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
        if let Some((i, _)) = bad {
            for j in t..cols {
                let x = a[i][j].clone();
                a[t][j] += x;
            }
            continue;
        }
        out.push(a[t][t].abs().to_i64().expect("invariant factor fits in i64"));
        t += 1;
    }
    out
}
