//! Arbitrary-precision rationals and the handful of number-theoretic helpers
//! the rest of the crate needs (generalized binomials, exact square roots,
//! the `"p/q"` text form).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `n / d` as a reduced rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"`, `"p"`, or `"-p/q"`. Whitespace around the text is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let trimmed = text.trim();
    let bad = || Error::Parse(format!("malformed rational {text:?}"));
    if trimmed.is_empty() {
        return Err(bad());
    }
    match trimmed.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(trimmed).map_err(|_| bad())?,
        )),
    }
}

/// Generalized binomial coefficient `C(alpha, n) = alpha (alpha-1) ... (alpha-n+1) / n!`.
pub fn binomial(alpha: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for k in 0..n {
        acc = acc * (alpha - int(k as i64)) / int(k as i64 + 1);
    }
    acc
}

/// Integer binomial `C(n, k)` for a possibly negative integer top, as a rational.
pub fn binomial_int(n: i64, k: u32) -> Rational {
    binomial(&int(n), k)
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Non-negative square root when `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// True when `q` is an integer.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}
