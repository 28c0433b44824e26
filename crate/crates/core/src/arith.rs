//! Exact scalar types and their textual form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;
/// Arbitrary-precision integer.
pub type Z = BigInt;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Renders `p` for integers and `p/q` otherwise.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, `+p` or `p/q` with integer `p`, `q` (q != 0).
///
/// On failure returns the 0-based byte offset of the offending character
/// together with a message.
pub fn parse_q(s: &str) -> Result<Q, (usize, String)> {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    if t.is_empty() {
        return Err((lead, "expected a rational number".into()));
    }
    let (num, den) = match t.find('/') {
        Some(k) => (&t[..k], Some((k + 1, &t[k + 1..]))),
        None => (t, None),
    };
    let n = parse_int(num).map_err(|off| (lead + off, format!("invalid integer '{}'", num.trim())))?;
    let d = match den {
        Some((at, ds)) => {
            let d = parse_int(ds).map_err(|off| (lead + at + off, format!("invalid denominator '{}'", ds.trim())))?;
            if d.is_zero() {
                return Err((lead + at, "zero denominator".into()));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Q::new(n, d))
}

fn parse_int(s: &str) -> Result<BigInt, usize> {
    let body = s.strip_prefix('+').unwrap_or(s);
    let digits = body.strip_prefix('-').unwrap_or(body);
    if digits.is_empty() {
        return Err(s.len());
    }
    if let Some(k) = digits.find(|c: char| !c.is_ascii_digit()) {
        return Err(s.len() - digits.len() + k);
    }
    body.parse::<BigInt>().map_err(|_| 0)
}

/// Parses a comma-separated list of rationals, reporting the column
/// (1-based) of the first bad entry.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>, crate::error::ParseError> {
    let mut out = Vec::new();
    if s.trim().is_empty() {
        return Ok(out);
    }
    let mut offset = 0;
    for piece in s.split(',') {
        match parse_q(piece) {
            Ok(x) => out.push(x),
            Err((at, msg)) => return Err(crate::error::ParseError::new(1, offset + at + 1, msg)),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

pub fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
