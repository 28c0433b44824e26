//! Homogeneous symmetric functions in the monomial, complete, elementary
//! and Schur bases, with exact rational coefficients.
//!
//! Conversions go through the Schur basis using the Kostka matrix `K`
//! (`s = K m`, `h_μ = Σ K_{λμ} s_λ`, `e_μ = Σ K_{λ'μ} s_λ`) and its inverse.
//! Transition tables are built once per degree and shared.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_q, Q};
use crate::error::{Error, Result};
use crate::linalg;
use crate::par;
use crate::partitions::{self, enumerate, enumerate_pairs, lr_coeff, Partition};
use crate::series::{Poly, TruncSeries};

pub const DEFAULT_MAX_DEGREE: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Monomial symmetric functions `m_λ`.
    M,
    /// Complete homogeneous `h_λ`.
    H,
    /// Elementary `e_λ`.
    E,
    /// Schur functions `s_λ`.
    S,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::S => "s",
        }
    }
}

/// A homogeneous symmetric function of a fixed degree, stored as a sparse
/// coefficient map in one basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Q>,
}

impl SymElement {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymElement {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit `1` in degree zero.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::zero())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        let degree = lambda.weight();
        coeffs.insert(lambda, Q::one());
        SymElement { degree, basis, coeffs }
    }

    /// Builds an element from terms, checking every partition has weight
    /// `degree` and merging repeated keys.
    pub fn from_terms(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, Q)>) -> Result<Self> {
        let mut out = Self::zero(degree, basis);
        for (p, c) in terms {
            if p.weight() != degree {
                return Err(Error::WeightMismatch {
                    left: p.weight(),
                    right: degree,
                });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> Q {
        self.coeffs.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        if !c.is_zero() {
            for (p, v) in &self.coeffs {
                out.coeffs.insert(p.clone(), v * c);
            }
        }
        out
    }

    /// Sum of two elements of the same degree; the result is expressed in
    /// the basis of `self`.
    pub fn add(&self, other: &SymElement) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let other = to_basis(other, self.basis)?;
        let mut out = self.clone();
        for (p, c) in other.coeffs {
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymElement) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }
}

impl fmt::Display for SymElement {
    /// `basis: c*[λ] + ...`, terms in partition enumeration order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.basis.tag())?;
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", fmt_q(c), p)?;
        }
        Ok(())
    }
}

/// Transition data for one degree. Rows and columns follow the partition
/// enumeration order, in which the Kostka matrix is upper unitriangular.
#[derive(Debug)]
pub struct DegreeTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    conj: Vec<usize>,
    /// `kostka[i][j] = K_{λ_i, λ_j}`.
    pub kostka: Vec<Vec<Q>>,
    /// Inverse of `kostka`.
    pub kostka_inv: Vec<Vec<Q>>,
    row_col: OnceLock<Vec<Vec<Q>>>,
}

impl DegreeTable {
    fn build(n: usize) -> Self {
        let partitions = enumerate(n, None);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let conj = partitions.iter().map(|p| index[&p.conjugate()]).collect();
        let size = partitions.len();
        let kostka: Vec<Vec<Q>> = par::map_range(size, |i| {
            (0..size)
                .map(|j| {
                    if j < i {
                        Q::zero()
                    } else {
                        let k = partitions::kostka(&partitions[i], &partitions[j]).expect("equal weights");
                        Q::from_integer(k.into())
                    }
                })
                .collect()
        });
        let kostka_inv = unitriangular_inverse(&kostka);
        DegreeTable {
            partitions,
            index,
            conj,
            kostka,
            kostka_inv,
            row_col: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// `N[i][j] = N_{λ_i λ_j}`, the coefficient of `m_{λ_j}` in `h_{λ_i}`.
    pub fn row_col(&self) -> &Vec<Vec<Q>> {
        self.row_col.get_or_init(|| {
            let ps = &self.partitions;
            par::map(ps, |mu| {
                ps.iter()
                    .map(|lambda| {
                        let n = partitions::count_row_col_matrices(mu, lambda).expect("equal weights");
                        Q::from_integer(n.into())
                    })
                    .collect()
            })
        })
    }
}

/// Back substitution for an upper unitriangular matrix.
fn unitriangular_inverse(k: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = k.len();
    let mut inv = vec![vec![Q::zero(); n]; n];
    for col in 0..n {
        inv[col][col] = Q::one();
        for row in (0..col).rev() {
            let mut s = Q::zero();
            for j in row + 1..=col {
                if !k[row][j].is_zero() && !inv[j][col].is_zero() {
                    s += &k[row][j] * &inv[j][col];
                }
            }
            inv[row][col] = -s;
        }
    }
    inv
}

/// Write-once-per-degree memo of transition tables.
#[derive(Debug)]
pub struct TransitionCache {
    max_degree: usize,
    tables: Vec<OnceLock<DegreeTable>>,
}

impl TransitionCache {
    pub fn new(max_degree: usize) -> Self {
        TransitionCache {
            max_degree,
            tables: (0..=max_degree).map(|_| OnceLock::new()).collect(),
        }
    }

    /// Shared cache with the default degree cap.
    pub fn global() -> &'static TransitionCache {
        static GLOBAL: OnceLock<TransitionCache> = OnceLock::new();
        GLOBAL.get_or_init(|| TransitionCache::new(DEFAULT_MAX_DEGREE))
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn table(&self, n: usize) -> Result<&DegreeTable> {
        let slot = self.tables.get(n).ok_or(Error::DegreeCap {
            degree: n,
            max: self.max_degree,
        })?;
        Ok(slot.get_or_init(|| DegreeTable::build(n)))
    }

    /// Coefficient vector of `u` in the Schur basis, in table order.
    fn schur_vector(&self, u: &SymElement) -> Result<Vec<Q>> {
        let t = self.table(u.degree)?;
        let mut out = vec![Q::zero(); t.len()];
        for (p, c) in &u.coeffs {
            let j = t.index_of(p);
            match u.basis {
                Basis::S => out[j] += c,
                // s_λ = Σ_μ K_{λμ} m_μ, so m_μ = Σ_λ (K⁻¹)_{μλ} s_λ
                Basis::M => accumulate(&mut out, &t.kostka_inv[j], c, |i| i),
                // h_μ = Σ_λ K_{λμ} s_λ
                Basis::H => {
                    for (i, o) in out.iter_mut().enumerate() {
                        if !t.kostka[i][j].is_zero() {
                            *o += &t.kostka[i][j] * c;
                        }
                    }
                }
                // e_μ = Σ_λ K_{λ'μ} s_λ
                Basis::E => {
                    for i in 0..t.len() {
                        let k = &t.kostka[i][j];
                        if !k.is_zero() {
                            out[t.conj[i]] += k * c;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn schur_vector_into(&self, n: usize, v: &[Q], target: Basis) -> Result<SymElement> {
        let t = self.table(n)?;
        let mut out = vec![Q::zero(); t.len()];
        for (l, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match target {
                Basis::S => out[l] += c,
                Basis::M => accumulate(&mut out, &t.kostka[l], c, |i| i),
                // s_λ = Σ_μ (K⁻¹)_{μλ} h_μ
                Basis::H => {
                    for (mu, o) in out.iter_mut().enumerate() {
                        let k = &t.kostka_inv[mu][l];
                        if !k.is_zero() {
                            *o += k * c;
                        }
                    }
                }
                // s_λ = ω(s_λ') = Σ_μ (K⁻¹)_{μλ'} e_μ
                Basis::E => {
                    let lc = t.conj[l];
                    for (mu, o) in out.iter_mut().enumerate() {
                        let k = &t.kostka_inv[mu][lc];
                        if !k.is_zero() {
                            *o += k * c;
                        }
                    }
                }
            }
        }
        let mut e = SymElement::zero(n, target);
        for (i, c) in out.into_iter().enumerate() {
            if !c.is_zero() {
                e.coeffs.insert(t.partitions[i].clone(), c);
            }
        }
        Ok(e)
    }

    pub fn to_basis(&self, u: &SymElement, target: Basis) -> Result<SymElement> {
        if u.basis == target {
            return Ok(u.clone());
        }
        if u.degree > self.max_degree {
            return Err(Error::DegreeCap {
                degree: u.degree,
                max: self.max_degree,
            });
        }
        let v = self.schur_vector(u)?;
        self.schur_vector_into(u.degree, &v, target)
    }

    /// `h_μ` expanded in monomials through the matrix-counting numbers,
    /// independently of the Kostka route.
    pub fn h_to_m_by_counting(&self, u: &SymElement) -> Result<SymElement> {
        let u = self.to_basis(u, Basis::H)?;
        let t = self.table(u.degree)?;
        let n = t.row_col();
        let mut out = SymElement::zero(u.degree, Basis::M);
        for (mu, c) in &u.coeffs {
            let i = t.index_of(mu);
            for (j, lambda) in t.partitions.iter().enumerate() {
                if !n[i][j].is_zero() {
                    out.add_term(lambda.clone(), &n[i][j] * c);
                }
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, u: &SymElement, v: &SymElement) -> Result<SymElement> {
        let degree = u.degree + v.degree;
        if degree > self.max_degree {
            return Err(Error::DegreeCap {
                degree,
                max: self.max_degree,
            });
        }
        // h and e are multiplicative bases: h_λ h_μ = h_{λ∪μ}
        if u.basis == v.basis && matches!(u.basis, Basis::H | Basis::E) {
            let mut out = SymElement::zero(degree, u.basis);
            for (a, x) in &u.coeffs {
                for (b, y) in &v.coeffs {
                    let mut parts = a.parts().to_vec();
                    parts.extend_from_slice(b.parts());
                    out.add_term(Partition::from_unsorted(parts), x * y);
                }
            }
            return Ok(out);
        }
        let us = self.to_basis(u, Basis::S)?;
        let vs = self.to_basis(v, Basis::S)?;
        let targets = &self.table(degree)?.partitions;
        let pairs: Vec<(&Partition, &Q, &Partition, &Q)> = us
            .coeffs
            .iter()
            .flat_map(|(a, x)| vs.coeffs.iter().map(move |(b, y)| (a, x, b, y)))
            .collect();
        let parts = par::map(&pairs, |&(a, x, b, y)| {
            let xy = x * y;
            targets
                .iter()
                .filter(|nu| nu.contains(a) && nu.contains(b))
                .filter_map(|nu| {
                    let c = lr_coeff(a, b, nu);
                    (!c.is_zero()).then(|| (nu.clone(), &xy * Q::from_integer(c.into())))
                })
                .collect::<Vec<_>>()
        });
        let mut out = SymElement::zero(degree, Basis::S);
        for (nu, c) in parts.into_iter().flatten() {
            out.add_term(nu, c);
        }
        Ok(out)
    }

    /// Hall inner product, computed in the orthonormal Schur basis.
    pub fn inner_product(&self, u: &SymElement, v: &SymElement) -> Result<Q> {
        if u.degree != v.degree {
            return Err(Error::DegreeMismatch {
                left: u.degree,
                right: v.degree,
            });
        }
        let a = self.schur_vector(u)?;
        let b = self.schur_vector(v)?;
        Ok(a.iter().zip(&b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum())
    }

    pub fn omega(&self, u: &SymElement) -> Result<SymElement> {
        let swapped = |basis| SymElement {
            degree: u.degree,
            basis,
            coeffs: u.coeffs.clone(),
        };
        match u.basis {
            Basis::H => Ok(swapped(Basis::E)),
            Basis::E => Ok(swapped(Basis::H)),
            Basis::S => Ok(SymElement {
                degree: u.degree,
                basis: Basis::S,
                coeffs: u.coeffs.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
            }),
            Basis::M => {
                let s = self.omega(&self.to_basis(u, Basis::S)?)?;
                self.to_basis(&s, Basis::M)
            }
        }
    }

    /// `f̂(u)`: the homomorphism sending `h_n` to the `n`-th coefficient.
    pub fn hom_eval(&self, f: &TruncSeries, u: &SymElement) -> Result<Q> {
        check_order(f, u.degree)?;
        let h = self.to_basis(u, Basis::H)?;
        Ok(h.coeffs.iter().map(|(p, c)| c * h_value(f, p)).sum())
    }

    /// `f̂(s_λ)` for every `λ` of weight `n`, in enumeration order.
    pub fn schur_values(&self, f: &TruncSeries, n: usize) -> Result<Vec<(Partition, Q)>> {
        check_order(f, n)?;
        let t = self.table(n)?;
        let hv: Vec<Q> = t.partitions.iter().map(|p| h_value(f, p)).collect();
        let values = par::map_range(t.len(), |l| {
            let mut s = Q::zero();
            for (mu, h) in hv.iter().enumerate() {
                let k = &t.kostka_inv[mu][l];
                if !k.is_zero() && !h.is_zero() {
                    s += k * h;
                }
            }
            s
        });
        Ok(t.partitions.iter().cloned().zip(values).collect())
    }

    /// `ξ_n(f) = Σ f̂(s_λ) s_λ`, the element representing `f̂` on degree
    /// `n` under the Hall pairing.
    pub fn xi(&self, f: &TruncSeries, n: usize) -> Result<SymElement> {
        let vals = self.schur_values(f, n)?;
        SymElement::from_terms(n, Basis::S, vals)
    }

    /// `u(α/β)`, the super specialization at the alphabets `α`, `β`.
    pub fn specialize_super(&self, u: &SymElement, alpha: &Alphabet, beta: &Alphabet) -> Result<Q> {
        let f = super_series(alpha, beta, u.degree)?;
        self.hom_eval(&f, u)
    }

    /// `ch(V^{⊗n}) = Σ m_λ(α) m_μ(β) h_λ e_μ`, expanded in the h basis, where
    /// `α` and `β` are the root alphabets of `f0` and `f1`.
    pub fn ch_tensor_power(&self, f0: &Poly, f1: &Poly, n: usize) -> Result<SymElement> {
        let ga = TruncSeries::from_poly(f0, n).inverse()?;
        let gb = TruncSeries::from_poly(f1, n).inverse()?;
        let mut out = SymElement::zero(n, Basis::H);
        for pair in enumerate_pairs(n) {
            let ma = self.hom_eval(&ga, &SymElement::basis_element(Basis::M, pair.first.clone()))?;
            if ma.is_zero() {
                continue;
            }
            let mb = self.hom_eval(&gb, &SymElement::basis_element(Basis::M, pair.second.clone()))?;
            if mb.is_zero() {
                continue;
            }
            let e = self.to_basis(&SymElement::basis_element(Basis::E, pair.second.clone()), Basis::H)?;
            let term = self.multiply(&SymElement::basis_element(Basis::H, pair.first.clone()), &e)?;
            out = out.add(&term.scale(&(ma * mb)))?;
        }
        Ok(out)
    }

    /// `dim V^λ = f̂(s_λ)`, evaluated both through the h basis and as the
    /// Toeplitz determinant `det(a_{λ_i - i + j})`.
    pub fn dim_v_lambda(&self, f: &TruncSeries, lambda: &Partition) -> Result<Q> {
        let by_basis = self.hom_eval(f, &SymElement::basis_element(Basis::S, lambda.clone()))?;
        let by_det = toeplitz_minor(f, lambda)?;
        if by_basis != by_det {
            return Err(Error::Internal(format!(
                "f̂(s_{lambda}) disagrees: {} by basis change, {} by determinant",
                fmt_q(&by_basis),
                fmt_q(&by_det)
            )));
        }
        Ok(by_basis)
    }
}

fn accumulate(out: &mut [Q], row: &[Q], c: &Q, map: impl Fn(usize) -> usize) {
    for (i, k) in row.iter().enumerate() {
        if !k.is_zero() {
            out[map(i)] += k * c;
        }
    }
}

fn check_order(f: &TruncSeries, degree: usize) -> Result<()> {
    if degree > f.order() {
        return Err(Error::Truncation {
            need: degree,
            have: f.order(),
        });
    }
    Ok(())
}

/// `∏ a_{λ_i}`.
fn h_value(f: &TruncSeries, p: &Partition) -> Q {
    let mut v = Q::one();
    for &k in p.parts() {
        let a = f.coeff(k);
        if a.is_zero() {
            return Q::zero();
        }
        v *= a;
    }
    v
}

/// `det(a_{λ_i - i + j})` with `a_j = 0` for `j < 0`.
pub fn toeplitz_minor(f: &TruncSeries, lambda: &Partition) -> Result<Q> {
    check_order(f, lambda.weight())?;
    let k = lambda.len();
    let m: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let idx = lambda.part(i) as isize - i as isize + j as isize;
                    if idx < 0 {
                        Q::zero()
                    } else {
                        f.coeff(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    Ok(linalg::det(m))
}

/// An alphabet for super specialization: either explicit roots or the
/// polynomial `∏(1 - x t)` they define (whose roots are never extracted).
#[derive(Clone, Debug, PartialEq)]
pub enum Alphabet {
    Roots(Vec<Q>),
    Polynomial(Poly),
}

impl Alphabet {
    /// `∏(1 - x t)` over the alphabet.
    pub fn polynomial(&self) -> Result<Poly> {
        match self {
            Alphabet::Roots(xs) => Ok(xs.iter().fold(Poly::one(), |acc, x| acc.mul(&Poly::new(vec![Q::one(), -x.clone()])))),
            Alphabet::Polynomial(p) => {
                let c = p.coeff(0);
                if c.is_zero() {
                    return Err(Error::ConstantTerm {
                        expected: "1".into(),
                        found: "0".into(),
                    });
                }
                if !c.is_one() {
                    return Err(Error::ConstantTerm {
                        expected: "1".into(),
                        found: fmt_q(&c),
                    });
                }
                Ok(p.clone())
            }
        }
    }
}

/// `Σ h_n(α/β) t^n = f1(-t) / f0(t)` to order `n`.
pub fn super_series(alpha: &Alphabet, beta: &Alphabet, n: usize) -> Result<TruncSeries> {
    let f0 = alpha.polynomial()?;
    let f1 = beta.polynomial()?;
    let num = TruncSeries::from_poly(&f1.negate_var(), n);
    let den = TruncSeries::from_poly(&f0, n);
    Ok(num.mul(&den.inverse()?))
}

pub fn to_basis(u: &SymElement, target: Basis) -> Result<SymElement> {
    TransitionCache::global().to_basis(u, target)
}

pub fn multiply(u: &SymElement, v: &SymElement) -> Result<SymElement> {
    TransitionCache::global().multiply(u, v)
}

pub fn inner_product(u: &SymElement, v: &SymElement) -> Result<Q> {
    TransitionCache::global().inner_product(u, v)
}

pub fn omega(u: &SymElement) -> Result<SymElement> {
    TransitionCache::global().omega(u)
}

pub fn hom_eval(f: &TruncSeries, u: &SymElement) -> Result<Q> {
    TransitionCache::global().hom_eval(f, u)
}

pub fn schur_values(f: &TruncSeries, n: usize) -> Result<Vec<(Partition, Q)>> {
    TransitionCache::global().schur_values(f, n)
}

pub fn xi(f: &TruncSeries, n: usize) -> Result<SymElement> {
    TransitionCache::global().xi(f, n)
}

pub fn specialize_super(u: &SymElement, alpha: &Alphabet, beta: &Alphabet) -> Result<Q> {
    TransitionCache::global().specialize_super(u, alpha, beta)
}

pub fn ch_tensor_power(f0: &Poly, f1: &Poly, n: usize) -> Result<SymElement> {
    TransitionCache::global().ch_tensor_power(f0, f1, n)
}

pub fn dim_v_lambda(f: &TruncSeries, lambda: &Partition) -> Result<Q> {
    TransitionCache::global().dim_v_lambda(f, lambda)
}

/// Convenience for `basis_element` with the basis given by its tag.
pub fn elem(basis: Basis, parts: &[usize]) -> SymElement {
    SymElement::basis_element(basis, Partition::from_unsorted(parts.to_vec()))
}

/// Monomial symmetric function of the alphabet whose complete series is
/// `g`, i.e. `m_λ` evaluated through `ĝ`.
pub fn monomial_value(g: &TruncSeries, lambda: &Partition) -> Result<Q> {
    hom_eval(g, &SymElement::basis_element(Basis::M, lambda.clone()))
}

/// Integer-valued check helper: true if `x` is a nonnegative integer.
pub fn is_natural(x: &Q) -> bool {
    x.is_integer() && !x.is_negative()
}

/// The integer `f̂(h_ν) = ∏ a_{ν_i}` as a rational.
pub fn complete_value(f: &TruncSeries, nu: &Partition) -> Result<Q> {
    check_order(f, nu.weight())?;
    Ok(h_value(f, nu))
}
