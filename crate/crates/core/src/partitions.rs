//! Integer partitions and the counting coefficients built on them:
//! standard tableaux, Kostka numbers, Littlewood-Richardson coefficients
//! and the matrix-counting numbers `N`.
//!
//! Partitions of a fixed weight are always listed in descending
//! lexicographic order: `(n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting increasing or zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Shape(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros; any multiset of nonnegative integers is
    /// accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn zero() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; zero partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The rectangle `(a^k)`.
    pub fn rectangle(a: usize, k: usize) -> Self {
        if a == 0 {
            Self::zero()
        } else {
            Partition { parts: vec![a; k] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: `self <= other` iff every partial sum of `self` is
    /// at most the matching partial sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        check_weights(self.weight(), other.weight())?;
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..k {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in the hook `Γ(r0, r1)`: every part past position `r0`
    /// is at most `r1`.
    pub fn in_hook(&self, r0: usize, r1: usize) -> bool {
        self.parts.iter().skip(r0).all(|&p| p <= r1)
    }

    /// True when the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }

    /// `∏ λ_i!`, the order of the Young subgroup.
    pub fn factorial_product(&self) -> BigUint {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

fn check_weights(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::WeightMismatch { left, right })
    } else {
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Accepts `[3,1]`, `[]`, and the bracket-less form `3,1`.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let lead = s.len() - s.trim_start().len();
        let t = s.trim();
        let (body, shift) = match (t.strip_prefix('['), t.ends_with(']')) {
            (Some(rest), true) => (&rest[..rest.len() - 1], lead + 1),
            (None, false) => (t, lead),
            _ => return Err(ParseError::new(1, lead + 1, "unbalanced brackets in partition")),
        };
        if body.trim().is_empty() {
            return Ok(Partition::zero());
        }
        let mut parts = Vec::new();
        let mut offset = shift;
        for piece in body.split(',') {
            let v: usize = piece.trim().parse().map_err(|_| {
                ParseError::new(1, offset + 1, format!("invalid part '{}'", piece.trim()))
            })?;
            parts.push(v);
            offset += piece.len() + 1;
        }
        Partition::new(parts).map_err(|e| ParseError::new(1, shift + 1, e.to_string()))
    }
}

/// A pair `(λ, μ)`, an element of `𝒫²(n)` with `n = |λ| + |μ|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub first: Partition,
    pub second: Partition,
}

impl PartitionPair {
    pub fn new(first: Partition, second: Partition) -> Self {
        PartitionPair { first, second }
    }

    pub fn weight(&self) -> usize {
        self.first.weight() + self.second.weight()
    }

    /// The composition `(λ_1, ..., λ_k, μ_1, ..., μ_l)`.
    pub fn composition(&self) -> Vec<usize> {
        self.first.parts.iter().chain(&self.second.parts).copied().collect()
    }

    /// Positions `i` (1-based, `1 <= i < n`) where the generator `T_i`
    /// acts through the symmetric character `q`: the index set `ℐ⁰`.
    pub fn symmetric_positions(&self) -> Vec<usize> {
        parabolic_indices(&self.first.parts, 0)
    }

    /// Positions acting through the alternating character `-1`: `ℐ¹`.
    pub fn exterior_positions(&self) -> Vec<usize> {
        parabolic_indices(&self.second.parts, self.first.weight())
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.first, self.second)
    }
}

/// Indices `offset + i` with `1 <= i < |parts|` that are not partial sums.
fn parabolic_indices(parts: &[usize], offset: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 0;
    for &p in parts {
        for i in start + 1..start + p {
            out.push(offset + i);
        }
        start += p;
    }
    out
}

/// All partitions of `n` (with at most `max_len` parts when given), in
/// descending lexicographic order.
pub fn enumerate(n: usize, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let limit = max_len.unwrap_or(usize::MAX);
    fill(n, n, limit, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// `𝒫²(n)`: pairs ordered by decreasing `|λ|`, then by the enumeration
/// order of `λ` and of `μ`.
pub fn enumerate_pairs(n: usize) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let seconds = enumerate(n - k, None);
        for a in enumerate(k, None) {
            for b in &seconds {
                out.push(PartitionPair::new(a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of standard tableaux of shape `λ`, by the hook length formula.
pub fn standard_tableaux_count(lambda: &Partition) -> BigUint {
    let hooks: BigUint = lambda.hook_lengths().into_iter().map(BigUint::from).product();
    factorial(lambda.weight()) / hooks
}

/// All partitions obtained from `shape` by adding a horizontal strip of
/// `size` boxes, staying inside `bound` when given.
fn horizontal_strips(shape: &[usize], size: usize, bound: Option<&[usize]>) -> Vec<Vec<usize>> {
    let rows = shape.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0usize; rows];
    strip_rec(shape, size, bound, 0, &mut cur, &mut out);
    out
}

fn strip_rec(
    shape: &[usize],
    left: usize,
    bound: Option<&[usize]>,
    row: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let rows = cur.len();
    if row == rows {
        if left == 0 {
            let mut next: Vec<usize> = (0..rows)
                .map(|i| shape.get(i).copied().unwrap_or(0) + cur[i])
                .collect();
            while next.last() == Some(&0) {
                next.pop();
            }
            out.push(next);
        }
        return;
    }
    let here = shape.get(row).copied().unwrap_or(0);
    // horizontal strip: the new row i may not pass the old row i-1
    let mut cap = if row == 0 { left } else { shape[row - 1] - here };
    if let Some(b) = bound {
        let limit = b.get(row).copied().unwrap_or(0);
        if limit < here {
            return;
        }
        cap = cap.min(limit - here);
    }
    for add in 0..=cap.min(left) {
        cur[row] = add;
        strip_rec(shape, left - add, bound, row + 1, cur, out);
    }
    cur[row] = 0;
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content
/// `μ`, counted by filling the entries `1, 2, ...` one value at a time
/// (each value occupies a horizontal strip).
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    check_weights(lambda.weight(), mu.weight())?;
    let mut layer: HashMap<Vec<usize>, BigUint> = HashMap::new();
    layer.insert(Vec::new(), BigUint::one());
    for &m in &mu.parts {
        let mut next: HashMap<Vec<usize>, BigUint> = HashMap::new();
        for (shape, count) in &layer {
            for grown in horizontal_strips(shape, m, Some(&lambda.parts)) {
                *next.entry(grown).or_insert_with(BigUint::zero) += count;
            }
        }
        layer = next;
    }
    Ok(layer.remove(&lambda.parts).unwrap_or_default())
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}`, the number of
/// semistandard fillings of `ν/λ` with content `μ` whose reverse reading
/// word is a lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.weight() + mu.weight() != nu.weight() || !nu.contains(lambda) {
        return BigUint::zero();
    }
    if mu.is_empty() {
        return BigUint::one();
    }
    // cells of ν/λ in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.parts[r]).rev() {
            cells.push((r, c));
        }
    }
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut used = vec![0usize; mu.len()];
    let mut count = BigUint::zero();
    lr_rec(&cells, 0, lambda, mu, &mut filling, &mut used, &mut count);
    count
}

fn lr_rec(
    cells: &[(usize, usize)],
    k: usize,
    lambda: &Partition,
    mu: &Partition,
    filling: &mut HashMap<(usize, usize), usize>,
    used: &mut Vec<usize>,
    count: &mut BigUint,
) {
    if k == cells.len() {
        *count += 1u32;
        return;
    }
    let (r, c) = cells[k];
    // row weakly increasing left to right: the cell to the right (filled
    // earlier) bounds this one from above
    let upper = filling.get(&(r, c + 1)).copied().unwrap_or(mu.len() - 1);
    // column strictly increasing: the cell above bounds from below
    let lower = if r > 0 && c >= lambda.part(r - 1) {
        filling[&(r - 1, c)] + 1
    } else {
        0
    };
    for v in lower..=upper.min(mu.len() - 1) {
        if used[v] >= mu.parts[v] {
            continue;
        }
        // lattice condition on the reverse reading word
        if v > 0 && used[v] + 1 > used[v - 1] {
            continue;
        }
        used[v] += 1;
        filling.insert((r, c), v);
        lr_rec(cells, k + 1, lambda, mu, filling, used, count);
        filling.remove(&(r, c));
        used[v] -= 1;
    }
}

/// `c^ν_{λμ}` by an independent route: expand `s_μ` by Jacobi-Trudi into
/// signed products of complete functions, then multiply `s_λ` by each
/// `h_k` with the Pieri rule.
pub fn lr_coeff_pieri(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    let k = mu.len();
    let mut total: i64 = 0;
    for (perm, sign) in permutations_with_sign(k) {
        // term h_{μ_i - i + σ(i)}
        let mut rows = Vec::with_capacity(k);
        let mut valid = true;
        for (i, &s) in perm.iter().enumerate() {
            let idx = mu.parts[i] as isize - i as isize + s as isize;
            if idx < 0 {
                valid = false;
                break;
            }
            rows.push(idx as usize);
        }
        if !valid {
            continue;
        }
        let mut shapes: HashMap<Vec<usize>, i64> = HashMap::new();
        shapes.insert(lambda.parts.clone(), 1);
        for &h in &rows {
            let mut next: HashMap<Vec<usize>, i64> = HashMap::new();
            for (shape, c) in &shapes {
                for grown in horizontal_strips(shape, h, Some(&nu.parts)) {
                    *next.entry(grown).or_insert(0) += c;
                }
            }
            shapes = next;
        }
        total += sign * shapes.get(&nu.parts).copied().unwrap_or(0);
    }
    total
}

pub(crate) fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut perm, &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

fn heap_permute(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, perm, out);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, perm, out);
}

/// `N_{μλ}`: nonnegative integer matrices with row sums `λ_i` and column
/// sums `μ_j`. Equals the coefficient of `m_λ` in `h_μ`.
pub fn count_row_col_matrices(mu: &Partition, lambda: &Partition) -> Result<BigUint> {
    check_weights(mu.weight(), lambda.weight())?;
    let mut memo = HashMap::new();
    Ok(count_rows(&lambda.parts, 0, mu.parts.clone(), &[], &mut memo))
}

/// Counts fillings row by row. Columns in `cols` are unrestricted
/// nonnegative; columns in `binary` (remaining sums) only admit 0/1.
fn count_rows(
    rows: &[usize],
    row: usize,
    cols: Vec<usize>,
    binary: &[usize],
    memo: &mut HashMap<(usize, Vec<usize>, Vec<usize>), BigUint>,
) -> BigUint {
    if row == rows.len() {
        return if cols.iter().all(|&c| c == 0) && binary.iter().all(|&c| c == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let key = (row, cols.clone(), binary.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    let target = rows[row];
    // choose which binary columns get a 1 in this row
    let nb = binary.len();
    let mut chosen = vec![false; nb];
    let mut subsets = Vec::new();
    binary_subsets(binary, 0, target, &mut chosen, &mut subsets);
    for subset in subsets {
        let ones = subset.iter().filter(|&&b| b).count();
        let next_binary: Vec<usize> = binary
            .iter()
            .zip(&subset)
            .map(|(&c, &b)| if b { c - 1 } else { c })
            .collect();
        let mut compositions = Vec::new();
        let mut cur = vec![0usize; cols.len()];
        bounded_compositions(&cols, 0, target - ones, &mut cur, &mut compositions);
        for comp in compositions {
            let next_cols: Vec<usize> = cols.iter().zip(&comp).map(|(&c, &a)| c - a).collect();
            total += count_rows(rows, row + 1, next_cols, &next_binary, memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

fn binary_subsets(binary: &[usize], j: usize, budget: usize, chosen: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
    if j == binary.len() {
        out.push(chosen.clone());
        return;
    }
    binary_subsets(binary, j + 1, budget, chosen, out);
    if binary[j] > 0 && budget > 0 {
        chosen[j] = true;
        binary_subsets(binary, j + 1, budget - 1, chosen, out);
        chosen[j] = false;
    }
}

fn bounded_compositions(bounds: &[usize], j: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if j == bounds.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let remaining_cap: usize = bounds[j + 1..].iter().sum();
    let lo = left.saturating_sub(remaining_cap);
    for a in lo..=bounds[j].min(left) {
        cur[j] = a;
        bounded_compositions(bounds, j + 1, left - a, cur, out);
    }
    cur[j] = 0;
}

/// `N_{(λμ),ν}`: pairs of matrices `A` (nonnegative, column sums `λ`) and
/// `B` (0/1 entries, column sums `μ`) whose combined row sums are `ν`.
pub fn count_mixed_matrices(pair: &PartitionPair, nu: &Partition) -> Result<BigUint> {
    check_weights(pair.weight(), nu.weight())?;
    let mut memo = HashMap::new();
    Ok(count_rows(&nu.parts, 0, pair.first.parts.clone(), &pair.second.parts, &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(0, None), vec![Partition::zero()]);
        assert_eq!(enumerate(5, None).len(), 7);
        assert_eq!(enumerate(4, Some(2)), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(
            enumerate(4, None),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::zero().conjugate(), Partition::zero());
        assert_eq!(Partition::rectangle(4, 3).conjugate(), Partition::rectangle(3, 4));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])).unwrap());
        assert!(p(&[2, 1]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(matches!(
            p(&[2]).dominance_leq(&p(&[2, 1])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn standard_tableaux_examples() {
        assert_eq!(standard_tableaux_count(&p(&[5])), BigUint::from(1u32));
        assert_eq!(standard_tableaux_count(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(standard_tableaux_count(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(standard_tableaux_count(&Partition::zero()), BigUint::from(1u32));
    }

    #[test]
    fn kostka_examples() {
        let l = p(&[3, 2, 1]);
        assert_eq!(kostka(&l, &l).unwrap(), BigUint::from(1u32));
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])).unwrap(), BigUint::zero());
        assert!(kostka(&p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn lr_examples() {
        // c^{(2,2)}_{(1,1),(1,1)} = 1 and the rectangle rule
        assert_eq!(lr_coeff(&p(&[1, 1]), &p(&[1, 1]), &p(&[2, 2])), BigUint::from(1u32));
        assert_eq!(lr_coeff(&p(&[1, 1]), &p(&[1, 1]), &p(&[2, 2])), BigUint::from(1u32));
        assert_eq!(lr_coeff(&p(&[1]), &p(&[2]), &p(&[2, 1])), BigUint::from(1u32));
        let nu = p(&[3, 2, 1]);
        assert_eq!(lr_coeff(&Partition::zero(), &nu, &nu), BigUint::from(1u32));
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &nu), BigUint::from(2u32));
        assert_eq!(lr_coeff_pieri(&p(&[2, 1]), &p(&[2, 1]), &nu), 2);
    }

    #[test]
    fn matrix_count_examples() {
        assert_eq!(count_row_col_matrices(&p(&[2]), &p(&[1, 1])).unwrap(), BigUint::from(1u32));
        assert_eq!(count_row_col_matrices(&p(&[1, 1]), &p(&[1, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(count_row_col_matrices(&p(&[4]), &p(&[4])).unwrap(), BigUint::from(1u32));
        let pair = |a: &[usize], b: &[usize]| PartitionPair::new(p(a), p(b));
        assert_eq!(count_mixed_matrices(&pair(&[3], &[]), &p(&[3])).unwrap(), BigUint::from(1u32));
        assert_eq!(count_mixed_matrices(&pair(&[1], &[1]), &p(&[2])).unwrap(), BigUint::from(1u32));
        assert_eq!(count_mixed_matrices(&pair(&[], &[2]), &p(&[2])).unwrap(), BigUint::zero());
        assert!(count_mixed_matrices(&pair(&[1], &[]), &p(&[2])).is_err());
    }

    #[test]
    fn hook_membership() {
        assert!(!p(&[3, 3]).in_hook(1, 2));
        assert!(p(&[5, 2, 2]).in_hook(1, 2));
        assert!(p(&[4, 1]).in_hook(2, 0));
    }

    #[test]
    fn index_sets() {
        let pair = PartitionPair::new(p(&[2, 1]), p(&[2]));
        assert_eq!(pair.symmetric_positions(), vec![1]);
        assert_eq!(pair.exterior_positions(), vec![4]);
        assert_eq!(pair.composition(), vec![2, 1, 2]);
        assert_eq!(enumerate_pairs(2).len(), 5);
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::zero().to_string(), "[]");
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::zero());
        assert!("[1,3]".parse::<Partition>().is_err());
        assert_eq!("[2,x]".parse::<Partition>().unwrap_err().column, 4);
    }
}
