//! Hecke symmetries as explicit matrices, their action on tensor powers,
//! and exact dimensions of the graded pieces they define.
//!
//! A symmetry on `V` of dimension `d` is a `d² × d²` matrix acting on
//! `V ⊗ V` with basis `e_i ⊗ e_j ↦ (i-1)d + (j-1)`; column `c` holds the
//! image of basis vector `c`. Tensor indices on `V^{⊗n}` put the first
//! factor in the most significant digit.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{fmt_q, int, parse_q, Q};
use crate::error::{Error, ParseError, Result};
use crate::linalg::{self, integer_row, Echelon, SparseRow};
use crate::par;
use crate::partitions::{Partition, PartitionPair};

/// Largest tensor space the dimension routines will reduce.
pub const DEFAULT_CAP: usize = 4096;

/// Where a symmetry came from. Predictions for loaded matrices rest on a
/// hypothesis the crate cannot check, so reports flag them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Standard { r: usize },
    Super { r0: usize, r1: usize },
    Loaded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeSymmetry {
    d: usize,
    q: Q,
    matrix: Vec<Q>,
    origin: Origin,
}

impl HeckeSymmetry {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> &Q {
        &self.q
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// True for user-supplied matrices.
    pub fn conjectural(&self) -> bool {
        self.origin == Origin::Loaded
    }

    /// Entry at (output row, input column), both 0-based in `0..d²`.
    pub fn entry(&self, row: usize, col: usize) -> &Q {
        &self.matrix[row * self.d * self.d + col]
    }

    /// Row-major matrix entries.
    pub fn matrix(&self) -> &[Q] {
        &self.matrix
    }

    fn block(&self) -> Block {
        Block::from_dense(self.d, &self.matrix)
    }

    /// `R^{-1} = (R - (q-1)·Id) / q`, valid by the Hecke relation.
    fn inverse_block(&self) -> Block {
        let d2 = self.d * self.d;
        let shift = &self.q - Q::one();
        let inv_q = self.q.recip();
        let mut m = self.matrix.clone();
        for i in 0..d2 {
            m[i * d2 + i] -= &shift;
        }
        for x in m.iter_mut() {
            *x *= &inv_q;
        }
        Block::from_dense(self.d, &m)
    }

    fn transpose_block(&self) -> Block {
        let d2 = self.d * self.d;
        let m: Vec<Q> = (0..d2 * d2).map(|k| self.matrix[(k % d2) * d2 + k / d2].clone()).collect();
        Block::from_dense(self.d, &m)
    }

    /// The file form: header, `d`, `q`, then `d²` rows of entries.
    pub fn to_file_string(&self) -> String {
        let d2 = self.d * self.d;
        let mut s = format!(
            "hecke-symmetry v1\nd = {}\nq = {}/{}\n",
            self.d,
            self.q.numer(),
            self.q.denom()
        );
        for r in 0..d2 {
            let row: Vec<String> = (0..d2).map(|c| fmt_q(self.entry(r, c))).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses and validates the file form. The result is marked as loaded.
    pub fn from_file_str(text: &str) -> Result<Self> {
        let (d, q, matrix) = parse_symmetry_file(text)?;
        load_and_validate(d, q, matrix)
    }
}

impl fmt::Display for HeckeSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.origin {
            Origin::Standard { r } => write!(f, "std:r={},q={}", r, fmt_q(&self.q)),
            Origin::Super { r0, r1 } => write!(f, "super:{},{},q={}", r0, r1, fmt_q(&self.q)),
            Origin::Loaded => write!(f, "file(d={},q={})", self.d, fmt_q(&self.q)),
        }
    }
}

/// A `d² × d²` matrix stored by sparse columns.
#[derive(Clone, Debug)]
struct Block {
    d: usize,
    cols: Vec<Vec<(usize, Q)>>,
}

impl Block {
    fn from_dense(d: usize, m: &[Q]) -> Self {
        let d2 = d * d;
        let cols = (0..d2)
            .map(|c| (0..d2).filter(|&r| !m[r * d2 + c].is_zero()).map(|r| (r, m[r * d2 + c].clone())).collect())
            .collect();
        Block { d, cols }
    }
}

/// `R_i^{(n)} = Id^{⊗(i-1)} ⊗ R ⊗ Id^{⊗(n-i-1)}`, applied without building
/// the `dⁿ × dⁿ` matrix.
#[derive(Clone, Debug)]
pub struct TensorOperator {
    n: usize,
    position: usize,
    block: Block,
}

impl TensorOperator {
    /// Operator at `position` (1-based, `1 <= position < n`).
    pub fn new(r: &HeckeSymmetry, n: usize, position: usize) -> Result<Self> {
        Self::with_block(r.block(), n, position)
    }

    fn with_block(block: Block, n: usize, position: usize) -> Result<Self> {
        if position == 0 || position >= n {
            return Err(Error::Shape(format!("position {position} is outside 1..{n}")));
        }
        Ok(TensorOperator { n, position, block })
    }

    pub fn dim(&self) -> usize {
        self.block.d.pow(self.n as u32)
    }

    /// Image of basis vector `idx` as sparse `(index, coefficient)` pairs.
    pub fn apply_basis(&self, idx: usize) -> Vec<(usize, Q)> {
        let d = self.block.d;
        let low = d.pow((self.n - self.position - 1) as u32);
        let high = low * d;
        let a = (idx / high) % d;
        let b = (idx / low) % d;
        let base = idx - a * high - b * low;
        self.block.cols[a * d + b]
            .iter()
            .map(|(row, c)| (base + (row / d) * high + (row % d) * low, c.clone()))
            .collect()
    }

    pub fn apply(&self, v: &[Q]) -> Result<Vec<Q>> {
        let dim = self.dim();
        if v.len() != dim {
            return Err(Error::SizeMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        let mut out = vec![Q::zero(); dim];
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, c) in self.apply_basis(idx) {
                out[j] += c * x;
            }
        }
        Ok(out)
    }
}

/// `R(e_i⊗e_i) = q e_i⊗e_i`; `R(e_i⊗e_j) = e_j⊗e_i` for `i < j`;
/// `R(e_i⊗e_j) = q e_j⊗e_i + (q-1) e_i⊗e_j` for `i > j`.
pub fn build_standard(r: usize, q: Q) -> Result<HeckeSymmetry> {
    if r == 0 {
        return Err(Error::Shape("dimension must be positive".into()));
    }
    let m = build_graded(&vec![false; r], &q)?;
    finish(r, q, m, Origin::Standard { r })
}

/// The super analogue on `r0` even then `r1` odd basis vectors: signs
/// `(-1)^{p_i p_j}` on the swaps, and `-1` on `e_i⊗e_i` for odd `i`.
pub fn build_super(r0: usize, r1: usize, q: Q) -> Result<HeckeSymmetry> {
    if r0 + r1 == 0 {
        return Err(Error::Shape("r0 + r1 must be at least 1".into()));
    }
    let parity: Vec<bool> = (0..r0 + r1).map(|i| i >= r0).collect();
    let m = build_graded(&parity, &q)?;
    finish(r0 + r1, q, m, Origin::Super { r0, r1 })
}

fn build_graded(odd: &[bool], q: &Q) -> Result<Vec<Q>> {
    if q.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let d = odd.len();
    let d2 = d * d;
    let mut m = vec![Q::zero(); d2 * d2];
    let mut set = |out: usize, inp: usize, v: Q| m[out * d2 + inp] = v;
    for i in 0..d {
        for j in 0..d {
            let col = i * d + j;
            let swapped = j * d + i;
            let sgn = if odd[i] && odd[j] { -Q::one() } else { Q::one() };
            if i == j {
                set(col, col, if odd[i] { -Q::one() } else { q.clone() });
            } else if i < j {
                set(swapped, col, sgn);
            } else {
                set(swapped, col, q * sgn);
                set(col, col, q - Q::one());
            }
        }
    }
    Ok(m)
}

fn finish(d: usize, q: Q, matrix: Vec<Q>, origin: Origin) -> Result<HeckeSymmetry> {
    let sym = HeckeSymmetry { d, q, matrix, origin };
    validate(&sym).map_err(|e| Error::Internal(format!("constructed symmetry {sym} fails validation: {e}")))?;
    Ok(sym)
}

/// Accepts a matrix iff it satisfies the Hecke relation and the braid
/// equation exactly.
pub fn load_and_validate(d: usize, q: Q, matrix: Vec<Q>) -> Result<HeckeSymmetry> {
    if d == 0 {
        return Err(Error::Shape("dimension must be positive".into()));
    }
    let d2 = d * d;
    if matrix.len() != d2 * d2 {
        return Err(Error::Shape(format!(
            "expected {} entries for d = {d}, found {}",
            d2 * d2,
            matrix.len()
        )));
    }
    if q.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let sym = HeckeSymmetry {
        d,
        q,
        matrix,
        origin: Origin::Loaded,
    };
    validate(&sym)?;
    Ok(sym)
}

fn validate(sym: &HeckeSymmetry) -> Result<()> {
    check_hecke(sym)?;
    check_braid(sym)
}

/// `(R - q)(R + 1) = 0`, i.e. `R² = (q-1)R + q`, column by column.
fn check_hecke(sym: &HeckeSymmetry) -> Result<()> {
    let d = sym.d;
    let block = sym.block();
    let d2 = d * d;
    let shift = &sym.q - Q::one();
    for col in 0..d2 {
        let mut v = vec![Q::zero(); d2];
        for (r, c) in &block.cols[col] {
            for (r2, c2) in &block.cols[*r] {
                v[*r2] += c * c2;
            }
            v[*r] -= &shift * c;
        }
        v[col] -= &sym.q;
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::HeckeViolation([col / d + 1, col % d + 1]));
        }
    }
    Ok(())
}

/// `R₁R₂R₁ = R₂R₁R₂` on `V^{⊗3}`, checked on basis vectors in
/// lexicographic order.
fn check_braid(sym: &HeckeSymmetry) -> Result<()> {
    let d = sym.d;
    let r1 = TensorOperator::new(sym, 3, 1)?;
    let r2 = TensorOperator::new(sym, 3, 2)?;
    let dim = d * d * d;
    let word = |ops: [&TensorOperator; 3], idx: usize| -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        v[idx] = Q::one();
        for op in ops {
            v = op.apply(&v).expect("matching size");
        }
        v
    };
    for idx in 0..dim {
        if word([&r1, &r2, &r1], idx) != word([&r2, &r1, &r2], idx) {
            return Err(Error::BraidViolation([idx / (d * d) + 1, (idx / d) % d + 1, idx % d + 1]));
        }
    }
    Ok(())
}

/// Parses the symmetry file format without validating the relations.
pub fn parse_symmetry_file(text: &str) -> std::result::Result<(usize, Q, Vec<Q>), ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| ParseError::new(text.lines().count() + 1, 1, format!("missing {what}")))
    };
    let (ln, header) = next("header")?;
    if header.trim() != "hecke-symmetry v1" {
        return Err(ParseError::new(ln + 1, 1, "expected header 'hecke-symmetry v1'"));
    }
    let (ln, dline) = next("dimension line")?;
    let dval = key_value(dline, "d", ln + 1)?;
    let d: usize = dval
        .1
        .trim()
        .parse()
        .ok()
        .filter(|&d| d > 0)
        .ok_or_else(|| ParseError::new(ln + 1, dval.0, "expected a positive integer"))?;
    let (ln, qline) = next("parameter line")?;
    let qval = key_value(qline, "q", ln + 1)?;
    let q = parse_q(qval.1).map_err(|(at, msg)| ParseError::new(ln + 1, qval.0 + at, msg))?;
    let d2 = d * d;
    let mut matrix = Vec::with_capacity(d2 * d2);
    for row in 0..d2 {
        let (ln, line) = next(&format!("matrix row {}", row + 1))?;
        let mut count = 0;
        let mut offset = 0;
        for tok in line.split_whitespace() {
            let at = line[offset..].find(tok).expect("token from line") + offset;
            offset = at + tok.len();
            let x = parse_q(tok).map_err(|(o, msg)| ParseError::new(ln + 1, at + o + 1, msg))?;
            matrix.push(x);
            count += 1;
        }
        if count != d2 {
            return Err(ParseError::new(
                ln + 1,
                line.len() + 1,
                format!("expected {d2} entries, found {count}"),
            ));
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(ParseError::new(ln + 1, 1, "unexpected trailing content"));
    }
    Ok((d, q, matrix))
}

/// Splits `key = value`, returning the 1-based column where the value
/// starts.
fn key_value<'a>(line: &'a str, key: &str, ln: usize) -> std::result::Result<(usize, &'a str), ParseError> {
    let lead = line.len() - line.trim_start().len();
    let rest = line.trim_start();
    let Some(after) = rest.strip_prefix(key) else {
        return Err(ParseError::new(ln, lead + 1, format!("expected '{key} = ...'")));
    };
    let Some(eq) = after.find('=') else {
        return Err(ParseError::new(ln, lead + key.len() + 1, "expected '='"));
    };
    if !after[..eq].trim().is_empty() {
        return Err(ParseError::new(ln, lead + 1, format!("expected '{key} = ...'")));
    }
    let after_eq = lead + key.len() + eq + 1;
    let start = after_eq + (line[after_eq..].len() - line[after_eq..].trim_start().len());
    Ok((start + 1, &line[start..]))
}

/// `baseⁿ`, or a cap error when it exceeds `cap`.
fn tensor_dim(base: usize, n: usize, cap: usize) -> Result<usize> {
    let dim = (base as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if dim > cap as u128 {
        return Err(Error::CapExceeded {
            dim: dim.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    Ok(dim as usize)
}

/// `dim V^{⊗n} / Σ_{λ,μ}` with the default cap.
pub fn dim_quotient(r: &HeckeSymmetry, lambda: &Partition, mu: &Partition) -> Result<usize> {
    dim_quotient_capped(r, lambda, mu, DEFAULT_CAP)
}

/// `dⁿ` minus the rank of `Σ_{i∈ℐ⁰} Im(R_i - q) + Σ_{i∈ℐ¹} Ker(R_i - q)`.
pub fn dim_quotient_capped(r: &HeckeSymmetry, lambda: &Partition, mu: &Partition, cap: usize) -> Result<usize> {
    let pair = PartitionPair::new(lambda.clone(), mu.clone());
    let n = pair.weight();
    let dim = tensor_dim(r.d, n, cap)?;
    let rows = quotient_spanning_rows(r, &pair, n)?;
    Ok(dim - linalg::sparse_rank(rows))
}

fn quotient_spanning_rows(r: &HeckeSymmetry, pair: &PartitionPair, n: usize) -> Result<Vec<SparseRow>> {
    let d = r.d;
    let dim = d.pow(n as u32);
    let mut rows = Vec::new();
    for i in pair.symmetric_positions() {
        let op = TensorOperator::new(r, n, i)?;
        rows.extend(par::map_range(dim, |x| {
            let mut image = op.apply_basis(x);
            image.push((x, -r.q.clone()));
            integer_row(merge(image))
        }));
    }
    let exterior = pair.exterior_positions();
    if !exterior.is_empty() {
        let d2 = d * d;
        let shifted: Vec<Vec<Q>> = (0..d2)
            .map(|row| {
                (0..d2)
                    .map(|c| if row == c { r.entry(row, c) - &r.q } else { r.entry(row, c).clone() })
                    .collect()
            })
            .collect();
        let kernel = linalg::nullspace(&shifted, d2);
        for i in exterior {
            let suffix = d.pow((n - i - 1) as u32);
            let prefix = d.pow((i - 1) as u32);
            for p in 0..prefix {
                for s in 0..suffix {
                    for k in &kernel {
                        rows.push(integer_row(
                            k.iter().enumerate().map(|(local, c)| ((p * d2 + local) * suffix + s, c.clone())),
                        ));
                    }
                }
            }
        }
    }
    rows.retain(|r| !r.is_empty());
    Ok(rows)
}

/// Sums repeated indices.
fn merge(mut v: Vec<(usize, Q)>) -> Vec<(usize, Q)> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: Vec<(usize, Q)> = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn same_parameter(r2: &HeckeSymmetry, r: &HeckeSymmetry) -> Result<()> {
    if r2.q != r.q {
        return Err(Error::ParameterMismatch {
            left: fmt_q(&r2.q),
            right: fmt_q(&r.q),
        });
    }
    Ok(())
}

/// `dim {h : V^{⊗n} → V'^{⊗n} | h R_i = R'_i h for all i}`.
pub fn dim_intertwiner(r2: &HeckeSymmetry, r: &HeckeSymmetry, n: usize) -> Result<usize> {
    dim_intertwiner_capped(r2, r, n, DEFAULT_CAP)
}

/// The cap bounds `(d d')ⁿ`, the number of unknowns.
pub fn dim_intertwiner_capped(r2: &HeckeSymmetry, r: &HeckeSymmetry, n: usize, cap: usize) -> Result<usize> {
    same_parameter(r2, r)?;
    let unknowns = tensor_dim(r.d * r2.d, n, cap)?;
    if n <= 1 {
        return Ok(unknowns);
    }
    let dim = r.d.pow(n as u32);
    let dim2 = r2.d.pow(n as u32);
    let mut rows = Vec::new();
    for i in 1..n {
        let op = TensorOperator::new(r, n, i)?;
        let op2t = TensorOperator::with_block(r2.transpose_block(), n, i)?;
        // equation (a, b): Σ_c h_{ac} R_i[c, b] - Σ_c R'_i[a, c] h_{cb} = 0
        rows.extend(par::map_range(dim2 * dim, |k| {
            let (a, b) = (k / dim, k % dim);
            let mut entries: Vec<(usize, Q)> = op.apply_basis(b).into_iter().map(|(c, v)| (a * dim + c, v)).collect();
            entries.extend(op2t.apply_basis(a).into_iter().map(|(c, v)| (c * dim + b, -v)));
            integer_row(merge(entries))
        }));
    }
    rows.retain(|r| !r.is_empty());
    Ok(unknowns - linalg::sparse_rank(rows))
}

/// `dim ⋂_i W_i`, `W_i` the image of `h ↦ R'_i⁻¹ h R_i - h` on
/// `Hom(V^{⊗n}, V'^{⊗n})`.
pub fn dim_e_component(r2: &HeckeSymmetry, r: &HeckeSymmetry, n: usize) -> Result<usize> {
    dim_e_component_capped(r2, r, n, DEFAULT_CAP)
}

pub fn dim_e_component_capped(r2: &HeckeSymmetry, r: &HeckeSymmetry, n: usize, cap: usize) -> Result<usize> {
    same_parameter(r2, r)?;
    let unknowns = tensor_dim(r.d * r2.d, n, cap)?;
    if n <= 1 {
        return Ok(unknowns);
    }
    let images = par::map_range(n - 1, |k| e_image(r2, r, n, k + 1).map(Echelon::into_rows));
    let mut iter = images.into_iter();
    let mut acc = iter.next().expect("n >= 2")?;
    for w in iter {
        if acc.is_empty() {
            break;
        }
        acc = linalg::intersect(&acc, &w?, unknowns);
    }
    Ok(acc.len())
}

fn e_image(r2: &HeckeSymmetry, r: &HeckeSymmetry, n: usize, i: usize) -> Result<Echelon> {
    let dim = r.d.pow(n as u32);
    let dim2 = r2.d.pow(n as u32);
    let inv2 = TensorOperator::with_block(r2.inverse_block(), n, i)?;
    let rt = TensorOperator::with_block(r.transpose_block(), n, i)?;
    // R'_i⁻¹ E_{ab} R_i = (column a of R'_i⁻¹)(row b of R_i)
    let rows = par::map_range(dim2 * dim, |k| {
        let (a, b) = (k / dim, k % dim);
        let left = inv2.apply_basis(a);
        let right = rt.apply_basis(b);
        let mut entries = Vec::with_capacity(left.len() * right.len() + 1);
        for (c, x) in &left {
            for (e, y) in &right {
                entries.push((c * dim + e, x * y));
            }
        }
        entries.push((k, -Q::one()));
        integer_row(merge(entries))
    });
    Ok(linalg::echelon_basis(rows.into_iter().filter(|r| !r.is_empty()).collect()))
}

/// `dim 𝕊_n(V, R)` for `n = 0..=n_max`.
pub fn symmetric_dims(r: &HeckeSymmetry, n_max: usize) -> Result<Vec<usize>> {
    (0..=n_max).map(|n| dim_quotient(r, &Partition::row(n), &Partition::zero())).collect()
}

/// `dim Λ_n(V, R)` for `n = 0..=n_max`.
pub fn exterior_dims(r: &HeckeSymmetry, n_max: usize) -> Result<Vec<usize>> {
    (0..=n_max).map(|n| dim_quotient(r, &Partition::zero(), &Partition::row(n))).collect()
}

/// Parses `std:r=R,q=Q` and `super:R0,R1,q=Q`. File specifiers are
/// handled by callers that can read files.
pub fn parse_builtin(spec: &str) -> Result<HeckeSymmetry> {
    let bad = |col: usize, msg: &str| Error::Parse(ParseError::new(1, col, msg.to_string()));
    if let Some(rest) = spec.strip_prefix("std:") {
        let (r, q) = rest.split_once(',').ok_or_else(|| bad(5, "expected 'std:r=R,q=Q'"))?;
        let r = r
            .trim()
            .strip_prefix("r=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| bad(5, "expected 'r=<positive integer>'"))?;
        let qcol = 5 + rest.find(',').expect("split above") + 1;
        let q = parse_param(q, qcol)?;
        return build_standard(r, q);
    }
    if let Some(rest) = spec.strip_prefix("super:") {
        let parts: Vec<&str> = rest.splitn(3, ',').collect();
        if parts.len() != 3 {
            return Err(bad(7, "expected 'super:R0,R1,q=Q'"));
        }
        let r0 = parts[0].trim().parse::<usize>().map_err(|_| bad(7, "invalid r0"))?;
        let r1col = 7 + parts[0].len() + 1;
        let r1 = parts[1].trim().parse::<usize>().map_err(|_| bad(r1col, "invalid r1"))?;
        let q = parse_param(parts[2], r1col + parts[1].len() + 1)?;
        return build_super(r0, r1, q);
    }
    Err(bad(1, "expected a symmetry specifier 'std:', 'super:' or 'file:'"))
}

fn parse_param(text: &str, col: usize) -> Result<Q> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim_start().strip_prefix("q=").ok_or_else(|| {
        Error::Parse(ParseError::new(1, col + lead, "expected 'q=<rational>'"))
    })?;
    parse_q(body).map_err(|(at, msg)| Error::Parse(ParseError::new(1, col + lead + 2 + at, msg)))
}

/// Integer matrix entries, for building test fixtures.
pub fn matrix_from_ints(entries: &[i64]) -> Vec<Q> {
    entries.iter().map(|&x| int(x)).collect()
}
