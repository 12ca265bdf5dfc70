//! Graded dimensions `q^h Σ dim(n) q^n` of Verma modules and their quotients.

use crate::scalar::series::partition_series;
use crate::scalar::{Polynomial, PuiseuxSeries, Rational};

use super::module::HWModuleDescriptor;

/// Bare `q^h` prefactor, no `q^{-c/24}`. A quotient at relation level `ℓ`
/// contributes `(1 - q^ℓ)` in front of the partition generating function.
pub fn character(m: &HWModuleDescriptor, order: usize) -> PuiseuxSeries {
    character_from_data(&m.highest_weight, m.quotient_level(), order)
}

/// Character from the lowest weight and the relation level alone, without
/// computing the singular vector.
pub fn character_from_data(
    h: &Rational,
    quotient_level: Option<u32>,
    order: usize,
) -> PuiseuxSeries {
    let p = partition_series(order);
    let body = match quotient_level {
        None => p,
        Some(l) => {
            let mut c = vec![Rational::from_integer(1.into())];
            c.resize(l as usize + 1, Rational::from_integer(0.into()));
            c[l as usize] = Rational::from_integer((-1).into());
            p.mul_poly(&Polynomial::new(c)).truncate(order)
        }
    };
    body.shift(h)
}
