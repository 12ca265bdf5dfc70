//! Gaussian rationals `a + b i` with `a, b` exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::rational::{format_rational, int, parse_rational, rational_sqrt, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    pub fn i() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2`, always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The real part, if the imaginary part vanishes.
    pub fn as_real(&self) -> Option<&Rational> {
        self.is_real().then_some(&self.re)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    /// `self^k` for any integer `k`; `None` when inverting zero.
    pub fn powi(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc * base.clone();
        }
        Some(acc)
    }

    /// `i^k` for an integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_int(1),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    /// A square root in Q(i) when one exists. Picks the root with positive real
    /// part, or non-negative imaginary part when the real part is zero.
    pub fn sqrt(&self) -> Option<Self> {
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let two = int(2);
        let x = rational_sqrt(&((&modulus + &self.re) / &two))?;
        let mut y = rational_sqrt(&((&modulus - &self.re) / &two))?;
        if self.im.is_negative() {
            y = -y;
        }
        let root = Self::new(x, y);
        debug_assert_eq!(&root * &root, *self);
        Some(root)
    }

    pub fn to_json(&self) -> Value {
        json!({"re": format_rational(&self.re), "im": format_rational(&self.im)})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| -> Result<Rational> {
            let s = v
                .get(k)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse(format!("missing field {k:?} in Gaussian rational")))?;
            parse_rational(s)
        };
        Ok(Self::new(field("re")?, field("im")?))
    }
}

impl From<Rational> for GaussianRational {
    fn from(q: Rational) -> Self {
        Self::real(q)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |q: &Rational| -> String {
            if q.is_one() {
                "i".to_string()
            } else if q.denom().is_one() {
                format!("{}i", q.numer())
            } else {
                format!("({})i", format_rational(q))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) if self.im.is_negative() => write!(f, "-{}", imag(&-self.im.clone())),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) if self.im.is_negative() => {
                write!(
                    f,
                    "{}-{}",
                    format_rational(&self.re),
                    imag(&-self.im.clone())
                )
            }
            (false, false) => write!(f, "{}+{}", format_rational(&self.re), imag(&self.im)),
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &'b GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl<'b> Div<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &'b GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero Gaussian rational")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational { (&self).$m(&o) }
        }
        impl<'b> $tr<&'b GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &'b GaussianRational) -> GaussianRational { (&self).$m(o) }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, o: GaussianRational) {
        *self += &o;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl Mul<&Rational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, q: &Rational) -> GaussianRational {
        GaussianRational::new(&self.re * q, &self.im * q)
    }
}
