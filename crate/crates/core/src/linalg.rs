//! Exact linear algebra: small dense rational matrices and large sparse
//! integer row spaces.
//!
//! The sparse path keeps every row primitive (content divided out) and
//! eliminates fraction-free, choosing as pivot the row already stored for a
//! leading column. Rank is a property of the row space, so the chunked
//! parallel elimination below returns the same value under any schedule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Q;
use crate::par;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of `{x : m x = 0}` for a matrix with `cols` columns.
pub fn nullspace(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work[r][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant by elimination.
pub fn det(mut m: Vec<Vec<Q>>) -> Q {
    let n = m.len();
    let mut acc = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &m[c][c];
            for j in c..n {
                let delta = &factor * &m[c][j];
                m[i][j] -= delta;
            }
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Q>),
    Many,
    Inconsistent,
}

/// Solves `a x = b`, distinguishing unique, underdetermined and
/// inconsistent systems.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Solution {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return Solution::Inconsistent;
    }
    if pivots.len() < cols {
        return Solution::Many;
    }
    Solution::Unique((0..cols).map(|r| aug[r][cols].clone()).collect())
}

/// A sparse integer row: `(column, nonzero value)` pairs sorted by column.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators of a sparse rational row and divides out the content.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, Q)>) -> SparseRow {
    let mut items: Vec<(usize, Q)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    items.sort_by_key(|(c, _)| *c);
    let lcm = items.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let row = items
        .into_iter()
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    primitive(row)
}

fn primitive(mut row: SparseRow) -> SparseRow {
    let Some(first) = row.first() else {
        return row;
    };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.1.is_negative();
    if !g.is_one() || flip {
        if flip {
            g = -g;
        }
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    row
}

/// `a·x − b·y` for sparse rows.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        if cx < cy {
            out.push((cx, a * &x[i].1));
            i += 1;
        } else if cy < cx {
            out.push((cy, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// An incrementally built row echelon form over the integers.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots and keeps it if something is
    /// left. Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = primitive(row);
        while let Some(&(lead, _)) = row.first() {
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return true;
            };
            let pa = &pivot[0].1;
            let ra = &row[0].1;
            let g = pa.gcd(ra);
            row = primitive(combine(&row, &(pa / &g), pivot, &(ra / &g)));
        }
        false
    }

    /// Stored rows, ordered by leading column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    pub fn into_rows(self) -> Vec<SparseRow> {
        self.pivots.into_values().collect()
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = SparseRow>) {
        for r in rows {
            self.insert(r);
        }
    }
}

const CHUNK: usize = 192;

/// Echelon basis of the span of `rows`. Chunks are reduced independently
/// (in parallel when enabled) and then merged.
pub fn echelon_basis(rows: Vec<SparseRow>) -> Echelon {
    if rows.len() <= CHUNK {
        let mut e = Echelon::new();
        e.extend(rows);
        return e;
    }
    let mut chunks: Vec<Vec<SparseRow>> = Vec::new();
    let mut it = rows.into_iter().peekable();
    while it.peek().is_some() {
        chunks.push(it.by_ref().take(CHUNK).collect());
    }
    let partial = par::map_owned(chunks, |chunk| {
        let mut e = Echelon::new();
        e.extend(chunk);
        e.into_rows()
    });
    // merge largest first so fewer rows need reducing
    let mut partial = partial;
    partial.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let mut iter = partial.into_iter();
    let mut e = Echelon::new();
    if let Some(first) = iter.next() {
        for r in first {
            let lead = r[0].0;
            e.pivots.insert(lead, r);
        }
    }
    for rest in iter {
        e.extend(rest);
    }
    e
}

/// Rank of the span of `rows`.
pub fn sparse_rank(rows: Vec<SparseRow>) -> usize {
    echelon_basis(rows).rank()
}

/// Basis of `span(u) ∩ span(w)` inside a space of dimension `width`, by
/// the Zassenhaus construction.
pub fn intersect(u: &[SparseRow], w: &[SparseRow], width: usize) -> Vec<SparseRow> {
    let mut rows = Vec::with_capacity(u.len() + w.len());
    for r in u {
        let mut doubled = r.clone();
        doubled.extend(r.iter().map(|(c, v)| (c + width, v.clone())));
        rows.push(doubled);
    }
    rows.extend(w.iter().cloned());
    echelon_basis(rows)
        .into_rows()
        .into_iter()
        .filter(|r| r[0].0 >= width)
        .map(|r| r.into_iter().map(|(c, v)| (c - width, v)).collect())
        .collect()
}
