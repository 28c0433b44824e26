//! Polynomials and truncated power series over the rationals, and the
//! series-level constructions built on them: Hankel minors, rationality
//! detection, total positivity, birank certificates and the ⋄ product.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{fmt_q, int, parse_q_list, sign, Q};
use crate::error::{Error, ParseError, Result};
use crate::linalg::{self, Solution};
use crate::par;
use crate::partitions::Partition;
use crate::symfunc;

/// A polynomial with rational coefficients, lowest degree first. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Q::one()] }
    }

    /// `∏ (1 - x t)` over `xs`.
    pub fn from_reciprocal_roots(xs: &[Q]) -> Self {
        xs.iter().fold(Poly::one(), |acc, x| acc.mul(&Poly::new(vec![Q::one(), -x.clone()])))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// `p(-t)`.
    pub fn negate_var(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let (dl, dd) = match (d.lead(), d.degree()) {
            (Some(l), Some(deg)) => (l.clone(), deg),
            _ => return Err(Error::ZeroPolynomial),
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, x) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * x;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Greatest common divisor, normalized to constant term 1 when that
    /// term is nonzero and to a monic polynomial otherwise.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.normalized()
    }

    fn normalized(&self) -> Poly {
        match self.coeffs.first() {
            None => Poly::zero(),
            Some(c) if !c.is_zero() => self.scale(&c.recip()),
            Some(_) => self.scale(&self.lead().expect("nonzero").recip()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The comma-separated ascending coefficient list.
    pub fn to_list(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(fmt_q).collect::<Vec<_>>().join(",")
    }

    /// The reversed polynomial `t^deg p(1/t)`.
    fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = fmt_q(&abs);
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{body}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{body}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_list())
    }
}

/// A power series known through degree `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Q>,
}

impl TruncSeries {
    /// Coefficients `a_0, ..., a_N`; at least one is required.
    pub fn new(coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Truncation { need: 1, have: 0 });
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&Poly::one(), order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    /// Expansion of `p / q` through degree `order`.
    pub fn from_ratio(p: &Poly, q: &Poly, order: usize) -> Result<Self> {
        Ok(Self::from_poly(p, order).mul(&Self::from_poly(q, order).inverse()?))
    }

    /// Parses `"1, 2, 2, 2"`.
    pub fn parse(s: &str) -> std::result::Result<Self, ParseError> {
        let coeffs = parse_q_list(s)?;
        if coeffs.is_empty() {
            return Err(ParseError::new(1, 1, "empty coefficient list"));
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// `a_i`, or zero past the truncation order.
    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::Truncation {
                need: order,
                have: self.order(),
            });
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Pads with zeros, treating the known coefficients as a polynomial.
    pub fn pad(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len().max(order + 1), Q::zero());
        TruncSeries { coeffs }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    /// Product, truncated to the smaller of the two orders.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Q::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !other.coeffs[j].is_zero() {
                    out[i + j] += a * &other.coeffs[j];
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn inverse(&self) -> Result<TruncSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b = vec![Q::zero(); n + 1];
        b[0] = inv0.clone();
        for k in 1..=n {
            let mut s = Q::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &b[k - j];
                }
            }
            b[k] = -s * &inv0;
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// `f(a t)`.
    pub fn substitute_scale(&self, a: &Q) -> TruncSeries {
        let mut pow = Q::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &pow);
            pow *= a;
        }
        TruncSeries { coeffs }
    }

    /// `f(-t)`.
    pub fn substitute_negate(&self) -> TruncSeries {
        self.substitute_scale(&-Q::one())
    }

    fn require_unit(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: fmt_q(&self.coeffs[0]),
            });
        }
        Ok(())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_q).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{self}]")
    }
}

/// `p / q` with `p(0) = q(0) = 1` and `gcd(p, q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalForm {
    pub num: Poly,
    pub den: Poly,
}

impl RationalForm {
    /// Reduces `num / den` to lowest terms; both constant terms must be 1.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        for p in [&num, &den] {
            let c = p.coeff(0);
            if !c.is_one() {
                return Err(Error::ConstantTerm {
                    expected: "1".into(),
                    found: fmt_q(&c),
                });
            }
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        Ok(RationalForm { num, den })
    }

    pub fn expand(&self, order: usize) -> Result<TruncSeries> {
        TruncSeries::from_ratio(&self.num, &self.den, order)
    }
}

impl fmt::Display for RationalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "num={}; den={}", self.num.to_list(), self.den.to_list())
    }
}

impl FromStr for RationalForm {
    type Err = Error;

    /// Accepts `num=1,1; den=1,-1` and the short form `1,1;1,-1`.
    fn from_str(s: &str) -> Result<Self> {
        let Some(semi) = s.find(';') else {
            return Err(ParseError::new(1, s.len() + 1, "expected 'numerator;denominator'").into());
        };
        let side = |text: &str, offset: usize, label: &str| -> std::result::Result<Poly, ParseError> {
            let lead = text.len() - text.trim_start().len();
            let t = text.trim_start();
            let (body, shift) = match t.strip_prefix(label) {
                Some(rest) => match rest.trim_start().strip_prefix('=') {
                    Some(after) => (after, offset + lead + (t.len() - after.len())),
                    None => return Err(ParseError::new(1, offset + lead + label.len() + 1, "expected '='")),
                },
                None => (t, offset + lead),
            };
            let coeffs = parse_q_list(body).map_err(|e| ParseError::new(1, e.column + shift, e.message))?;
            Ok(Poly::new(coeffs))
        };
        let num = side(&s[..semi], 0, "num")?;
        let den = side(&s[semi + 1..], semi + 1, "den")?;
        RationalForm::new(num, den)
    }
}

/// `Δ_i^{(k)} = det(a_{i - r + c})_{0 <= r, c < k}`, which equals
/// `f̂(s_{(i^k)})`.
pub fn hankel_minor(f: &TruncSeries, i: usize, k: usize) -> Result<Q> {
    if i + k - 1 > f.order() {
        return Err(Error::Truncation {
            need: i + k - 1,
            have: f.order(),
        });
    }
    let m: Vec<Vec<Q>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    let idx = i as isize - r as isize + c as isize;
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

/// Looks for `f = p / q` with `deg q <= r_max`, returning the form with the
/// least denominator degree.
///
/// For each `r`, onsets `m = 0, 1, ...` are tried while the window
/// `m..=N` holds at least `2r + 1` coefficients. A hit needs the system
/// `Σ_{j=1}^{r} c_j a_{k-j} = a_k` (`m <= k <= N`) to have exactly one
/// solution with `c_r != 0`; then `q = 1 - Σ c_j t^j` and `p` is `q·f`
/// cut below degree `m`. The result certifies `f` only through order `N`.
pub fn detect_rational(f: &TruncSeries, r_max: usize) -> Option<RationalForm> {
    if !f.coeff(0).is_one() {
        return None;
    }
    let n = f.order();
    let a = |k: isize| if k < 0 { Q::zero() } else { f.coeff(k as usize) };
    for r in 0..=r_max {
        let mut m = 0;
        while n >= m + 2 * r {
            if let Some(q) = recurrence_on_window(&a, r, m, n) {
                let p = Poly::new(f.mul(&TruncSeries::from_poly(&q, n)).coeffs[..m].to_vec());
                if let Ok(form) = RationalForm::new(p, q) {
                    return Some(form);
                }
            }
            m += 1;
        }
    }
    None
}

fn recurrence_on_window(a: &impl Fn(isize) -> Q, r: usize, m: usize, n: usize) -> Option<Poly> {
    if r == 0 {
        return (m..=n).all(|k| a(k as isize).is_zero()).then(Poly::one);
    }
    let rows: Vec<Vec<Q>> = (m..=n)
        .map(|k| (1..=r).map(|j| a(k as isize - j as isize)).collect())
        .collect();
    let rhs: Vec<Q> = (m..=n).map(|k| a(k as isize)).collect();
    match linalg::solve(&rows, &rhs) {
        Solution::Unique(c) if !c[r - 1].is_zero() => {
            let mut q = vec![Q::one()];
            q.extend(c.into_iter().map(|x| -x));
            Some(Poly::new(q))
        }
        _ => None,
    }
}

/// Outcome of a total positivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    Holds,
    /// First `λ` (by weight, then enumeration order) with `f̂(s_λ) < 0`.
    Violation(Partition, Q),
}

/// Checks `f̂(s_λ) >= 0` for all `|λ| <= max_weight`.
pub fn total_positivity(f: &TruncSeries, max_weight: usize) -> Result<Positivity> {
    if max_weight > f.order() {
        return Err(Error::Truncation {
            need: max_weight,
            have: f.order(),
        });
    }
    for n in 0..=max_weight {
        for (lambda, v) in symfunc::schur_values(f, n)? {
            if v.is_negative() {
                return Ok(Positivity::Violation(lambda, v));
            }
        }
    }
    Ok(Positivity::Holds)
}

/// Exact certificate that `f1(-t)/f0(t)` is the series of a totally
/// positive sequence of birank `(r0, r1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirankCertificate {
    pub f0: Poly,
    pub f1: Poly,
    pub r0: usize,
    pub r1: usize,
    /// Every root of `f0` and `f1` was certified real and positive.
    pub roots_verified: bool,
}

impl BirankCertificate {
    /// Builds a certificate from integer polynomials with constant term 1.
    pub fn from_polys(f0: Poly, f1: Poly) -> Result<Self> {
        for p in [&f0, &f1] {
            if !p.coeff(0).is_one() {
                return Err(Error::ConstantTerm {
                    expected: "1".into(),
                    found: fmt_q(&p.coeff(0)),
                });
            }
        }
        let roots_verified = sturm_all_roots_positive(&f0)? && sturm_all_roots_positive(&f1)?;
        Ok(BirankCertificate {
            r0: f0.degree().unwrap_or(0),
            r1: f1.degree().unwrap_or(0),
            f0,
            f1,
            roots_verified,
        })
    }

    /// `f0 = ∏(1 - α_i t)`, `f1 = ∏(1 - β_j t)`.
    pub fn from_roots(alphas: &[Q], betas: &[Q]) -> Result<Self> {
        Self::from_polys(Poly::from_reciprocal_roots(alphas), Poly::from_reciprocal_roots(betas))
    }

    /// `H_𝕊(t) = f1(-t) / f0(t)`.
    pub fn symmetric_series(&self, order: usize) -> Result<TruncSeries> {
        TruncSeries::from_ratio(&self.f1.negate_var(), &self.f0, order)
    }

    /// `H_Λ(t) = f0(-t) / f1(t)`.
    pub fn exterior_series(&self, order: usize) -> Result<TruncSeries> {
        TruncSeries::from_ratio(&self.f0.negate_var(), &self.f1, order)
    }

    /// `f0` and `f1` split into rational linear factors: returns the
    /// reciprocal roots `(α, β)` when both do.
    pub fn rational_roots(&self) -> Option<(Vec<Q>, Vec<Q>)> {
        Some((reciprocal_roots(&self.f0)?, reciprocal_roots(&self.f1)?))
    }
}

/// Detects `f = f1(-t)/f0(t)` and certifies integrality, root location and
/// the bound `r0 + r1 <= a_1`.
pub fn birank_certificate(f: &TruncSeries, r_max: usize) -> Result<BirankCertificate> {
    let weight = f.order().min(symfunc::TransitionCache::global().max_degree()).min(POSITIVITY_PRECHECK);
    if let Positivity::Violation(partition, value) = total_positivity(f, weight)? {
        return Err(Error::NotTotallyPositive {
            partition,
            value: fmt_q(&value),
        });
    }
    let form = detect_rational(f, r_max).ok_or(Error::Inconclusive { order: f.order() })?;
    let f0 = form.den;
    let f1 = form.num.negate_var();
    for p in [&f0, &f1] {
        if !p.is_integral() {
            return Err(Error::NonIntegral(p.clone()));
        }
    }
    let cert = BirankCertificate::from_polys(f0, f1)?;
    for p in [&cert.f0, &cert.f1] {
        if !sturm_all_roots_positive(p)? {
            return Err(Error::RootLocation { poly: p.clone() });
        }
    }
    let a1 = f.coeff(1);
    if Q::from_integer(BigInt::from(cert.r0 + cert.r1)) > a1 {
        return Err(Error::BirankBound {
            sum: cert.r0 + cert.r1,
            dim: fmt_q(&a1),
        });
    }
    Ok(cert)
}

/// Largest weight scanned by the positivity precheck in
/// [`birank_certificate`].
pub const POSITIVITY_PRECHECK: usize = 10;

/// `H_Λ(t) = 1 / H_𝕊(-t)`.
pub fn exterior_from_symmetric(f: &TruncSeries) -> Result<TruncSeries> {
    f.require_unit()?;
    f.substitute_negate().inverse()
}

/// `(f ⋄ g)_n = Σ_{|λ| = n} f̂(s_λ) ĝ(s_λ)` for `n <= order`.
pub fn diamond(f: &TruncSeries, g: &TruncSeries, order: usize) -> Result<TruncSeries> {
    f.require_unit()?;
    g.require_unit()?;
    let have = f.order().min(g.order());
    if order > have {
        return Err(Error::Truncation { need: order, have });
    }
    let coeffs = par::map_range(order + 1, |n| -> Result<Q> {
        let a = symfunc::schur_values(f, n)?;
        let b = symfunc::schur_values(g, n)?;
        Ok(a.iter().zip(&b).map(|((_, x), (_, y))| x * y).sum())
    });
    TruncSeries::new(coeffs.into_iter().collect::<Result<Vec<_>>>()?)
}

/// Product formula for `H_{A(R',R)}` when all roots are rational:
/// `∏(1 + α_i β'_j t)(1 + β_i α'_j t) / ∏(1 - α_i α'_j t)(1 - β_i β'_j t)`.
pub fn closed_form_a_series(cert: &BirankCertificate, cert2: &BirankCertificate, order: usize) -> Result<Option<TruncSeries>> {
    let (Some((a, b)), Some((a2, b2))) = (cert.rational_roots(), cert2.rational_roots()) else {
        return Ok(None);
    };
    let pairwise = |x: &[Q], y: &[Q], s: i64| -> Poly {
        let mut p = Poly::one();
        for u in x {
            for v in y {
                p = p.mul(&Poly::new(vec![Q::one(), int(s) * u * v]));
            }
        }
        p
    };
    let num = pairwise(&a, &b2, 1).mul(&pairwise(&b, &a2, 1));
    let den = pairwise(&a, &a2, -1).mul(&pairwise(&b, &b2, -1));
    Ok(Some(TruncSeries::from_ratio(&num, &den, order)?))
}

/// `H_A = H_𝕊(R) ⋄ H_𝕊(R')`. When the roots are rational the product
/// formula is evaluated too and must agree.
pub fn predict_a_series(cert: &BirankCertificate, cert2: &BirankCertificate, order: usize) -> Result<TruncSeries> {
    let f = cert.symmetric_series(order)?;
    let g = cert2.symmetric_series(order)?;
    let by_diamond = diamond(&f, &g, order)?;
    if let Some(closed) = closed_form_a_series(cert, cert2, order)? {
        if closed != by_diamond {
            return Err(Error::Internal(format!(
                "⋄ product {by_diamond} disagrees with product formula {closed}"
            )));
        }
    }
    Ok(by_diamond)
}

/// `H_E(t) = 1 / H_A(-t)`.
pub fn e_series_from_a(fa: &TruncSeries) -> Result<TruncSeries> {
    fa.require_unit()?;
    fa.substitute_negate().inverse()
}

/// True iff all roots of `p` are real and positive, counted through a Sturm
/// sequence of the square-free part of `p` on `(0, ∞)`.
pub fn sturm_all_roots_positive(p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.coeff(0).is_zero() {
        return Ok(false);
    }
    if p.degree() == Some(0) {
        return Ok(true);
    }
    let g = p.gcd(&p.derivative());
    let (square_free, _) = p.divrem(&g)?;
    let deg = square_free.degree().expect("nonzero");
    Ok(count_positive_roots(&square_free) == deg)
}

/// Distinct roots of a square-free `p` in `(0, ∞)`, with `p(0) != 0`.
fn count_positive_roots(p: &Poly) -> usize {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[k - 2].divrem(&seq[k - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Q::one()));
    }
    let at_zero: Vec<i8> = seq.iter().map(|s| sign(&s.coeff(0))).collect();
    let at_inf: Vec<i8> = seq.iter().map(|s| s.lead().map_or(0, sign)).collect();
    variations(&at_zero) - variations(&at_inf)
}

fn variations(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Reciprocal roots of `p` with multiplicity when `p` splits over the
/// rationals.
fn reciprocal_roots(p: &Poly) -> Option<Vec<Q>> {
    // the roots of the reversed polynomial are the reciprocal roots of p
    let mut rest = p.reversed();
    let mut out = Vec::new();
    let candidates = rational_root_candidates(&rest)?;
    for x in candidates {
        loop {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let linear = Poly::new(vec![-x.clone(), Q::one()]);
            let (quot, rem) = rest.divrem(&linear).ok()?;
            if !rem.is_zero() {
                break;
            }
            out.push(x.clone());
            rest = quot;
        }
    }
    (rest.degree() == Some(0)).then_some(out)
}

/// `±a/b` with `a | c_0` and `b | c_lead` after clearing denominators;
/// `None` when the coefficients are too large to factor by trial division.
fn rational_root_candidates(p: &Poly) -> Option<Vec<Q>> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut out = Vec::new();
    // a zero root has reciprocal infinity, which cannot occur for f(0) = 1
    let low = ints.iter().position(|c| !c.is_zero())?;
    if low > 0 {
        out.push(Q::zero());
    }
    let c0 = ints[low].abs().to_u64()?;
    let cl = ints.last()?.abs().to_u64()?;
    if c0 > 1 << 40 || cl > 1 << 40 {
        return None;
    }
    for a in divisors(c0) {
        for b in divisors(cl) {
            let x = Q::new(BigInt::from(a), BigInt::from(b));
            for y in [x.clone(), -x] {
                if !out.contains(&y) {
                    out.push(y);
                }
            }
        }
    }
    Some(out)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}
