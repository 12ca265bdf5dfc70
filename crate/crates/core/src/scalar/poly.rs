//! Univariate polynomials and rational functions over Q.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};

/// Dense polynomial, `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a non-zero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(1 - x)`.
    pub fn reflect(&self) -> Self {
        let one_minus_x = Self::from_ints(&[1, -1]);
        self.coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(), |acc, (k, c)| {
                acc.add(&one_minus_x.pow(k as u32).scale(c))
            })
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().cloned().unwrap() / &lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = format_rational(&mag);
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coeff}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{coeff}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / denominator`, reduced by the polynomial gcd with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    /// Panics when the denominator is zero.
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Self {
        assert!(
            !denominator.is_zero(),
            "rational function with zero denominator"
        );
        if numerator.is_zero() {
            return Self {
                numerator,
                denominator: Polynomial::one(),
            };
        }
        let g = numerator.gcd(&denominator);
        let num = numerator.div_rem(&g).0;
        let den = denominator.div_rem(&g).0;
        let lead = den.leading();
        Self {
            numerator: num.scale(&(Rational::one() / &lead)),
            denominator: den.monic(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.numerator
                .mul(&o.denominator)
                .add(&o.numerator.mul(&self.denominator)),
            self.denominator.mul(&o.denominator),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.numerator.scale(&int(-1)), self.denominator.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.numerator.mul(&o.numerator),
            self.denominator.mul(&o.denominator),
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        Self::new(
            self.numerator.mul(&o.denominator),
            self.denominator.mul(&o.numerator),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.numerator.scale(s), self.denominator.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.numerator
                .derivative()
                .mul(&self.denominator)
                .sub(&self.numerator.mul(&self.denominator.derivative())),
            self.denominator.mul(&self.denominator),
        )
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(x);
        (!d.is_zero()).then(|| self.numerator.eval(x) / d)
    }

    /// The polynomial, when the denominator is constant.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.denominator.degree() == Some(0)).then_some(&self.numerator)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.degree() == Some(0) {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    #[test]
    fn division_with_remainder() {
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&Polynomial::from_ints(&[-1, 1]));
        assert_eq!(q, Polynomial::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let (_, r) = Polynomial::from_ints(&[1, 0, 1]).div_rem(&Polynomial::from_ints(&[0, 1]));
        assert_eq!(r, Polynomial::from_ints(&[1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = Polynomial::from_ints(&[0, 2, -2]);
        let b = Polynomial::from_ints(&[0, 0, 3]);
        assert_eq!(a.gcd(&b), Polynomial::x());
    }

    #[test]
    fn rational_functions_reduce() {
        let x = Polynomial::x();
        let f = RationalFunction::new(x.mul(&Polynomial::from_ints(&[1, -1])), x.scale(&int(2)));
        assert_eq!(
            f.as_polynomial(),
            Some(&Polynomial::new(vec![rat(1, 2), rat(-1, 2)]))
        );
        let g = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[0, 1, -1]));
        assert_eq!(g.denominator(), &Polynomial::from_ints(&[0, -1, 1]));
        assert_eq!(g.eval(&rat(1, 2)), Some(int(4)));
        assert_eq!(g.eval(&int(1)), None);
    }

    #[test]
    fn derivative_quotient_rule() {
        let g = RationalFunction::new(Polynomial::one(), Polynomial::x());
        let d = g.derivative();
        assert_eq!(
            d,
            RationalFunction::new(Polynomial::from_ints(&[-1]), Polynomial::x().pow(2))
        );
    }

    #[test]
    fn reflection() {
        let p = Polynomial::from_ints(&[0, 1, -1]);
        assert_eq!(p.reflect(), p);
        assert_eq!(Polynomial::x().reflect(), Polynomial::from_ints(&[1, -1]));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[0, -1, 2]).to_string(), "-x + 2*x^2");
        assert_eq!(Polynomial::new(vec![rat(-5, 4)]).to_string(), "-5/4");
    }
}
