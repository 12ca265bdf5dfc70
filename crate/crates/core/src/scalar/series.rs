//! Truncated Puiseux series `x^e · Σ_{n=0}^{N} a_n x^n`.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::gaussian::GaussianRational;
use super::poly::Polynomial;
use super::rational::{binomial, format_rational, int, is_integer, Rational};

/// Truncation order used when callers do not ask for one.
pub const DEFAULT_ORDER: usize = 24;

/// `x^leading_exponent · Σ_{n ≤ order} a_n x^n`, with every stored coefficient exact.
#[derive(Clone, Debug)]
pub struct PuiseuxSeries {
    leading_exponent: Rational,
    coefficients: Vec<GaussianRational>,
    order: usize,
}

impl PuiseuxSeries {
    /// Pads or truncates `coefficients` to exactly `order + 1` entries.
    pub fn new(
        leading_exponent: Rational,
        mut coefficients: Vec<GaussianRational>,
        order: usize,
    ) -> Self {
        coefficients.resize(order + 1, GaussianRational::zero());
        Self {
            leading_exponent,
            coefficients,
            order,
        }
    }

    pub fn from_rationals(
        leading_exponent: Rational,
        coefficients: Vec<Rational>,
        order: usize,
    ) -> Self {
        Self::new(
            leading_exponent,
            coefficients
                .into_iter()
                .map(GaussianRational::real)
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Rational::zero(), Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(Rational::zero(), vec![GaussianRational::one()], order)
    }

    /// `x^exponent` as a series known to the given order.
    pub fn monomial(exponent: Rational, order: usize) -> Self {
        Self::new(exponent, vec![GaussianRational::one()], order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_rationals(Rational::zero(), p.coeffs().to_vec(), order)
    }

    pub fn leading_exponent(&self) -> &Rational {
        &self.leading_exponent
    }

    pub fn coefficients(&self) -> &[GaussianRational] {
        &self.coefficients
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `a_n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> GaussianRational {
        self.coefficients.get(n).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^exponent`. `None` when that power is beyond the valid order
    /// or not in `leading_exponent + Z`.
    pub fn coefficient_at(&self, exponent: &Rational) -> Option<GaussianRational> {
        let d = exponent - &self.leading_exponent;
        if !is_integer(&d) {
            return None;
        }
        let n = d.to_integer();
        if n < num_bigint::BigInt::zero() {
            return Some(GaussianRational::zero());
        }
        let n: usize = n.try_into().ok()?;
        (n <= self.order).then(|| self.coefficients[n].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Keeps only terms up to `order` (never extends).
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(
            self.leading_exponent.clone(),
            self.coefficients[..=order].to_vec(),
            order,
        )
    }

    /// Rewrites with a smaller leading exponent `e` (differing by a non-negative integer),
    /// padding with zeros. The valid order grows by the shift.
    pub fn with_exponent(&self, e: &Rational) -> Option<Self> {
        let d = &self.leading_exponent - e;
        if !is_integer(&d) || d < Rational::zero() {
            return None;
        }
        let shift: usize = d.to_integer().try_into().ok()?;
        let mut coeffs = vec![GaussianRational::zero(); shift];
        coeffs.extend(self.coefficients.iter().cloned());
        Some(Self::new(e.clone(), coeffs, self.order + shift))
    }

    /// Sum when the exponents differ by an integer.
    pub fn checked_add(&self, o: &Self) -> Option<Self> {
        let e = if self.leading_exponent <= o.leading_exponent {
            self.leading_exponent.clone()
        } else {
            o.leading_exponent.clone()
        };
        let a = self.with_exponent(&e)?;
        let b = o.with_exponent(&e)?;
        let order = a.order.min(b.order);
        let coeffs = (0..=order)
            .map(|n| &a.coefficients[n] + &b.coefficients[n])
            .collect();
        Some(Self::new(e, coeffs, order))
    }

    /// Panics when the exponents are not congruent mod Z.
    pub fn add(&self, o: &Self) -> Self {
        self.checked_add(o)
            .expect("adding Puiseux series with incompatible exponents")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussianRational::from_int(-1))
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Self::new(
            self.leading_exponent.clone(),
            self.coefficients.iter().map(|c| c * s).collect(),
            self.order,
        )
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        self.scale(&GaussianRational::real(s.clone()))
    }

    /// Multiplies by `x^k` for a rational `k`.
    pub fn shift(&self, k: &Rational) -> Self {
        Self::new(
            &self.leading_exponent + k,
            self.coefficients.clone(),
            self.order,
        )
    }

    /// Cauchy product; the result is valid to the smaller of the two orders.
    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut coeffs = vec![GaussianRational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coefficients.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(&self.leading_exponent + &o.leading_exponent, coeffs, order)
    }

    /// Product with an exact polynomial. When the polynomial vanishes to order `m`
    /// at 0 the result is valid through `order + m`.
    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        let order = self.order + p.min_degree().unwrap_or(0);
        let mut coeffs = vec![GaussianRational::zero(); order + 1];
        for (k, pc) in p.coeffs().iter().enumerate() {
            if pc.is_zero() {
                continue;
            }
            for (n, a) in self.coefficients.iter().enumerate() {
                if k + n > order {
                    break;
                }
                coeffs[k + n] += a * pc;
            }
        }
        Self::new(self.leading_exponent.clone(), coeffs, order)
    }

    /// Term-by-term `d/dx`; the leading exponent drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(n, a)| a * &(&self.leading_exponent + int(n as i64)))
            .collect();
        Self::new(&self.leading_exponent - int(1), coeffs, self.order)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "leading_exponent": format_rational(&self.leading_exponent),
            "order": self.order,
            "coefficients": self.coefficients.iter().map(GaussianRational::to_json).collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for PuiseuxSeries {
    fn eq(&self, o: &Self) -> bool {
        let Some(d) = self.checked_add(&o.neg()) else {
            return self.is_zero() && o.is_zero();
        };
        d.is_zero()
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| match n {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{n}"),
            })
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        if self.leading_exponent.is_zero() {
            write!(f, "{body} + O(x^{})", self.order + 1)
        } else {
            write!(
                f,
                "x^({})*({body} + O(x^{}))",
                format_rational(&self.leading_exponent),
                self.order + 1
            )
        }
    }
}

pub fn series_mul(a: &PuiseuxSeries, b: &PuiseuxSeries) -> PuiseuxSeries {
    a.mul(b)
}

/// `(1 - x)^alpha = Σ C(alpha, n) (-x)^n` through `x^order`.
pub fn binomial_series(alpha: &Rational, order: usize) -> PuiseuxSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let c = binomial(alpha, n as u32);
            if n % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    PuiseuxSeries::from_rationals(Rational::zero(), coeffs, order)
}

/// `x^e (1 - x)^alpha · p(x)` as a series; used for closed-form oracles.
pub fn power_times_binomial(
    e: &Rational,
    alpha: &Rational,
    p: &Polynomial,
    order: usize,
) -> PuiseuxSeries {
    binomial_series(alpha, order)
        .mul_poly(p)
        .truncate(order)
        .shift(e)
}

/// `Π_{n ≥ 1} (1 - x^n)^{-1}` through `x^order`, i.e. the partition numbers.
pub fn partition_series(order: usize) -> PuiseuxSeries {
    let mut p = vec![Rational::zero(); order + 1];
    p[0] = Rational::one();
    for part in 1..=order {
        for n in part..=order {
            let prev = p[n - part].clone();
            p[n] += prev;
        }
    }
    PuiseuxSeries::from_rationals(Rational::zero(), p, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    fn ints(e: Rational, c: &[i64], order: usize) -> PuiseuxSeries {
        PuiseuxSeries::from_rationals(e, c.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn difference_of_squares() {
        let a = ints(rat(1, 2), &[1, 1], 6);
        let b = ints(rat(1, 2), &[1, -1], 6);
        assert_eq!(series_mul(&a, &b), ints(int(1), &[1, 0, -1], 6));
    }

    #[test]
    fn binomial_coefficients() {
        let s = binomial_series(&rat(5, 2), 3);
        let expect = PuiseuxSeries::from_rationals(
            int(0),
            vec![int(1), rat(-5, 2), rat(15, 8), rat(-5, 16)],
            3,
        );
        assert_eq!(s, expect);
        assert_eq!(binomial_series(&int(1), 5), ints(int(0), &[1, -1], 5));
        assert_eq!(binomial_series(&int(0), 5), PuiseuxSeries::one(5));
    }

    #[test]
    fn alignment_in_addition() {
        let a = ints(rat(-1, 2), &[1, 2], 4);
        let b = ints(rat(1, 2), &[3], 4);
        let s = a.add(&b);
        assert_eq!(s.leading_exponent(), &rat(-1, 2));
        assert_eq!(s.coeff(1), GaussianRational::from_int(5));
        assert_eq!(s.order(), 4);
        assert!(ints(rat(1, 3), &[1], 2)
            .checked_add(&ints(int(0), &[1], 2))
            .is_none());
    }

    #[test]
    fn equality_ignores_exponent_offset() {
        let a = ints(rat(-1, 2), &[0, 1, 1], 5);
        let b = ints(rat(1, 2), &[1, 1], 4);
        assert_eq!(a, b);
    }

    #[test]
    fn derivative_of_half_power() {
        let s = ints(rat(1, 2), &[1, 1], 3).derivative();
        assert_eq!(s.leading_exponent(), &rat(-1, 2));
        assert_eq!(s.coeff(0), GaussianRational::real(rat(1, 2)));
        assert_eq!(s.coeff(1), GaussianRational::real(rat(3, 2)));
    }

    #[test]
    fn polynomial_product_gains_order() {
        let s = binomial_series(&rat(-1, 2), 4);
        let p = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(s.mul_poly(&p).order(), 6);
    }

    #[test]
    fn partitions() {
        let p = partition_series(10);
        let got: Vec<_> = (0..=10).map(|n| p.coeff(n).re.to_integer()).collect();
        let want: Vec<num_bigint::BigInt> = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
            .iter()
            .map(|&x| x.into())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn coefficient_lookup() {
        let s = ints(rat(-1, 2), &[1, 2, 3], 2);
        assert_eq!(
            s.coefficient_at(&rat(3, 2)),
            Some(GaussianRational::from_int(3))
        );
        assert_eq!(
            s.coefficient_at(&rat(-3, 2)),
            Some(GaussianRational::zero())
        );
        assert_eq!(s.coefficient_at(&rat(5, 2)), None);
        assert_eq!(s.coefficient_at(&int(1)), None);
    }
}
