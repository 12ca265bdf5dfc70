//! Exact scalars, polynomials, truncated Puiseux series and dense linear algebra.

pub mod gaussian;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod series;

pub use gaussian::GaussianRational;
pub use linalg::{Field, Matrix};
pub use poly::{Polynomial, RationalFunction};
pub use rational::{binomial, format_rational, int, parse_rational, rat, Rational};
pub use series::{binomial_series, series_mul, PuiseuxSeries, DEFAULT_ORDER};
