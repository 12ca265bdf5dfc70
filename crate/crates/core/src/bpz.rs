//! The second-order BPZ equation from a level-2 singular vector, its
//! hypergeometric gauge, Frobenius series at 0 and 1, and the rigidity chain.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::correlator::{c3_computation, C3Computation};
use crate::error::{Error, Result};
use crate::scalar::rational::rational_sqrt;
use crate::scalar::series::power_times_binomial;
use crate::scalar::{
    format_rational, int, rat, GaussianRational, Polynomial, PuiseuxSeries, Rational,
    RationalFunction,
};
use crate::verma::{singular_vector, HWModuleDescriptor, Partition};

/// `p2 φ'' + p1 φ' + p0 φ = 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearODE {
    pub coefficients: [RationalFunction; 3],
}

impl LinearODE {
    pub fn new(p2: RationalFunction, p1: RationalFunction, p0: RationalFunction) -> Self {
        Self {
            coefficients: [p2, p1, p0],
        }
    }

    /// Coefficients multiplied by the lcm of the denominators, signed so the lowest
    /// non-zero coefficient of the `φ''` polynomial is positive.
    pub fn polynomial_form(&self) -> [Polynomial; 3] {
        let mut l = Polynomial::one();
        for c in &self.coefficients {
            let d = c.denominator();
            let g = l.gcd(d);
            l = l.mul(&d.div_rem(&g).0);
        }
        let mut out = self.coefficients.clone().map(|c| {
            let (q, r) = c.numerator().mul(&l).div_rem(c.denominator());
            debug_assert!(r.is_zero());
            q
        });
        let low = out[0]
            .min_degree()
            .map(|k| out[0].coeff(k))
            .unwrap_or_else(Rational::one);
        if low < Rational::zero() {
            out = out.map(|p| p.scale(&int(-1)));
        }
        out
    }

    /// The same equation in `y = 1 - x`.
    pub fn reflect(&self) -> Self {
        let [p2, p1, p0] = &self.coefficients;
        let refl = |f: &RationalFunction| {
            RationalFunction::new(f.numerator().reflect(), f.denominator().reflect())
        };
        Self::new(refl(p2), refl(p1).neg(), refl(p0))
    }

    /// `F_k(m)` with `L[x^m] = Σ_k F_k(m) x^{m+k-2}`, from the polynomial form.
    fn shift_polys(&self) -> Vec<Polynomial> {
        let [p2, p1, p0] = self.polynomial_form();
        let len = p2
            .coeffs()
            .len()
            .max(p1.coeffs().len() + 1)
            .max(p0.coeffs().len() + 2);
        (0..len)
            .map(|k| {
                let m = Polynomial::x();
                let mm1 = m.mul(&Polynomial::from_ints(&[-1, 1]));
                let a = mm1.scale(&p2.coeff(k));
                let b = if k >= 1 {
                    m.scale(&p1.coeff(k - 1))
                } else {
                    Polynomial::zero()
                };
                let c = if k >= 2 {
                    Polynomial::constant(p0.coeff(k - 2))
                } else {
                    Polynomial::zero()
                };
                a.add(&b).add(&c)
            })
            .collect()
    }

    /// Indicial polynomial at 0 and the offset of its row among the `F_k`.
    fn indicial_at_zero(&self) -> Result<(usize, Vec<Polynomial>)> {
        let f = self.shift_polys();
        let k0 = f
            .iter()
            .position(|p| !p.is_zero())
            .ok_or_else(|| Error::Domain("zero equation".into()))?;
        if f[k0].degree() != Some(2) {
            return Err(Error::Domain(
                "x = 0 is not a regular singular point".into(),
            ));
        }
        Ok((k0, f))
    }

    /// Rational roots of the indicial equation at `point` (0 or 1).
    pub fn indicial_exponents(&self, point: u8) -> Result<Vec<Rational>> {
        let ode = self.at_point(point)?;
        let (k0, f) = ode.indicial_at_zero()?;
        let p = &f[k0];
        let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
        let disc = &b * &b - int(4) * &a * &c;
        let root = rational_sqrt(&disc)
            .ok_or_else(|| Error::Unsupported("indicial exponents are irrational".into()))?;
        let mut roots = vec![(-&b - &root) / (int(2) * &a), (-&b + &root) / (int(2) * &a)];
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    fn at_point(&self, point: u8) -> Result<Self> {
        match point {
            0 => Ok(self.clone()),
            1 => Ok(self.reflect()),
            _ => Err(Error::Domain(format!(
                "expansion point must be 0 or 1, got {point}"
            ))),
        }
    }

    pub fn to_json(&self) -> Value {
        let names = ["phi''", "phi'", "phi"];
        let poly = self.polynomial_form();
        json!({
            "coefficients": names.iter().zip(&self.coefficients)
                .map(|(n, c)| json!({"term": n, "value": c.to_string()})).collect::<Vec<_>>(),
            "polynomial_form": names.iter().zip(&poly)
                .map(|(n, c)| json!({"term": n, "value": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for LinearODE {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [p2, p1, p0] = &self.coefficients;
        write!(f, "[{p2}] phi'' + [{p1}] phi' + [{p0}] phi = 0")
    }
}

fn x_one_minus_x() -> Polynomial {
    Polynomial::from_ints(&[0, 1, -1])
}

/// Equation for `G(x) = ⟨v_∞, Y(v₁, 1) Y(v, x) v₀⟩`, where `v` has weight `h_deg` and
/// a level-2 singular vector `(L₋₁² + κ L₋₂) v`, and `v₀, v₁, v_∞` all have weight
/// `h_other`. Scaled so the `φ''` coefficient is `x(1 - x)`.
pub fn derive_bpz(c: &Rational, h_deg: &Rational, h_other: &Rational) -> Result<LinearODE> {
    let verma = HWModuleDescriptor::verma(c.clone(), h_deg.clone());
    let sing = singular_vector(&verma, 2)?;
    let kappa = match sing.as_slice() {
        [s] if s.coeff(&Partition::ones(2)).is_one() => s.coeff(&Partition::new(vec![2])).re,
        _ => {
            return Err(Error::OutOfRange(format!(
                "(c, h) = ({}, {}) has no level-2 singular vector",
                format_rational(c),
                format_rational(h_deg)
            )))
        }
    };
    if kappa.is_zero() {
        return Err(Error::OutOfRange(
            "singular vector without an L(-2) term".into(),
        ));
    }
    // (1/κ)-free form: α G'' + (1/x + 1/(x-1)) G' + [-h₀/x² - h₁/(x-1)² + (h+h₀+h₁-h_∞)/(x(x-1))] G = 0
    let alpha = -Rational::one() / &kappa;
    let (h, h0, h1, hinf) = (h_deg, h_other, h_other, h_other);
    let x = Polynomial::x();
    let xm1 = Polynomial::from_ints(&[-1, 1]);
    let rf = RationalFunction::new;
    let p2 = RationalFunction::from_poly(Polynomial::constant(alpha.clone()));
    let p1 = rf(Polynomial::from_ints(&[-1, 2]), x.mul(&xm1));
    let p0 = rf(Polynomial::constant(-h0.clone()), x.pow(2))
        .add(&rf(Polynomial::constant(-h1.clone()), xm1.pow(2)))
        .add(&rf(Polynomial::constant(h + h0 + h1 - hinf), x.mul(&xm1)));
    let scale = RationalFunction::new(
        x_one_minus_x().scale(&(Rational::one() / &alpha)),
        Polynomial::one(),
    );
    Ok(LinearODE::new(
        p2.mul(&scale),
        p1.mul(&scale),
        p0.mul(&scale),
    ))
}

/// The `c = 25`, `h = -5/4` instance.
pub fn l21_ode() -> LinearODE {
    derive_bpz(&int(25), &rat(-5, 4), &rat(-5, 4)).expect("level-2 singular vector at c = 25")
}

/// Equation for `f` where `φ = x^a (1 - x)^b f`.
pub fn gauge_transform(ode: &LinearODE, a: &Rational, b: &Rational) -> LinearODE {
    let [p2, p1, p0] = &ode.coefficients;
    let rf = RationalFunction::new;
    let u = rf(Polynomial::constant(a.clone()), Polynomial::x()).sub(&rf(
        Polynomial::constant(b.clone()),
        Polynomial::from_ints(&[1, -1]),
    ));
    let two = int(2);
    let q1 = u.mul(p2).scale(&two).add(p1);
    let q0 = p2
        .mul(&u.derivative().add(&u.mul(&u)))
        .add(&p1.mul(&u))
        .add(p0);
    LinearODE::new(p2.clone(), q1, q0)
}

/// Frobenius solution `x^exponent (1 + O(x))` at `point`, through `x^{exponent+order}`.
/// At `point = 1` the series variable is `y = 1 - x`. A resonant coefficient that
/// the recursion leaves free is set to zero.
pub fn frobenius_solve(
    ode: &LinearODE,
    point: u8,
    exponent: &Rational,
    order: usize,
) -> Result<PuiseuxSeries> {
    frobenius_solve_with_free(ode, point, exponent, order, &Rational::zero())
}

/// As [`frobenius_solve`], with `free` as the value of a resonant coefficient.
pub fn frobenius_solve_with_free(
    ode: &LinearODE,
    point: u8,
    exponent: &Rational,
    order: usize,
    free: &Rational,
) -> Result<PuiseuxSeries> {
    let local = ode.at_point(point)?;
    let (k0, f) = local.indicial_at_zero()?;
    if !f[k0].eval(exponent).is_zero() {
        return Err(Error::Domain(format!(
            "{} is not an indicial exponent",
            format_rational(exponent)
        )));
    }
    let mut a: Vec<Rational> = vec![Rational::one()];
    for n in 1..=order {
        let mut rhs = Rational::zero();
        for (j, aj) in a.iter().enumerate() {
            let k = n + k0 - j;
            if let Some(fk) = f.get(k) {
                rhs -= aj * fk.eval(&(exponent + int(j as i64)));
            }
        }
        let lead = f[k0].eval(&(exponent + int(n as i64)));
        if lead.is_zero() {
            if !rhs.is_zero() {
                return Err(Error::Logarithmic(format!(
                    "exponents {} and {} differ by {n} and the recursion is obstructed",
                    format_rational(exponent),
                    format_rational(&(exponent + int(n as i64)))
                )));
            }
            a.push(free.clone());
        } else {
            a.push(rhs / lead);
        }
    }
    Ok(PuiseuxSeries::from_rationals(exponent.clone(), a, order))
}

/// `p2 s'' + p1 s' + p0 s` for a series in `x`, valid through `x^{e+order}`.
pub fn verify_solution(ode: &LinearODE, s: &PuiseuxSeries) -> PuiseuxSeries {
    let [p2, p1, p0] = ode.polynomial_form();
    let d1 = s.derivative();
    let d2 = d1.derivative();
    d2.mul_poly(&p2)
        .add(&d1.mul_poly(&p1))
        .add(&s.mul_poly(&p0))
}

/// [`verify_solution`] for a series expanded at `point` (in `1 - x` when `point = 1`).
pub fn verify_solution_at(ode: &LinearODE, point: u8, s: &PuiseuxSeries) -> Result<PuiseuxSeries> {
    Ok(verify_solution(&ode.at_point(point)?, s))
}

/// `φ₁ = x^{-1/2} (1 - x)^{5/2} (1 + x)`.
pub fn phi1(order: usize) -> PuiseuxSeries {
    power_times_binomial(
        &rat(-1, 2),
        &rat(5, 2),
        &Polynomial::from_ints(&[1, 1]),
        order,
    )
}

/// `φ₂ = x^{5/2} (1 - x)^{-1/2} (1 - x/2)`.
pub fn phi2(order: usize) -> PuiseuxSeries {
    power_times_binomial(
        &rat(5, 2),
        &rat(-1, 2),
        &Polynomial::new(vec![int(1), rat(-1, 2)]),
        order,
    )
}

/// `φ₁` written in `y = 1 - x`: `y^{5/2} (1 - y)^{-1/2} (2 - y)`.
pub fn phi1_at_one(order: usize) -> PuiseuxSeries {
    power_times_binomial(
        &rat(5, 2),
        &rat(-1, 2),
        &Polynomial::from_ints(&[2, -1]),
        order,
    )
}

/// `φ₂` written in `y = 1 - x`: `y^{-1/2} (1 - y)^{5/2} (1 + y) / 2`.
pub fn phi2_at_one(order: usize) -> PuiseuxSeries {
    power_times_binomial(
        &rat(-1, 2),
        &rat(5, 2),
        &Polynomial::new(vec![rat(1, 2), rat(1, 2)]),
        order,
    )
}

/// Constants of the rigidity computation.
#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub c0: Rational,
    pub c3: Rational,
    pub a: Rational,
    pub b: Rational,
    pub rigidity_scalar: Rational,
    /// Coefficient of `x^{5/2}` in `a φ₁`, so that `c₃ = this + b`.
    pub c3_offset: Rational,
    pub correlator: C3Computation,
}

impl RigidityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "c0": format_rational(&self.c0),
            "c3": format_rational(&self.c3),
            "a": format_rational(&self.a),
            "b": format_rational(&self.b),
            "R": format_rational(&self.rigidity_scalar),
            "c3_offset": format_rational(&self.c3_offset),
            "chain": self.correlator.to_json(&self.c0),
        })
    }
}

fn real(z: &GaussianRational) -> Rational {
    z.re.clone()
}

/// Coefficients `(α, β)` with `ψ = α φ₁ + β φ₂`, read off at `y^{-1/2}` and `y^{5/2}`
/// and checked on every other term.
pub fn connection_at_one(psi: &PuiseuxSeries, order: usize) -> Result<(Rational, Rational)> {
    let (p1, p2) = (phi1_at_one(order), phi2_at_one(order));
    let coef =
        |s: &PuiseuxSeries, e: Rational| s.coefficient_at(&e).map(|z| real(&z)).unwrap_or_default();
    let beta = coef(psi, rat(-1, 2)) / coef(&p2, rat(-1, 2));
    let alpha = (coef(psi, rat(5, 2)) - &beta * coef(&p2, rat(5, 2))) / coef(&p1, rat(5, 2));
    let combo = p1.scale_rational(&alpha).add(&p2.scale_rational(&beta));
    if combo != *psi {
        return Err(Error::Domain(
            "series is not in the span of phi1 and phi2".into(),
        ));
    }
    Ok((alpha, beta))
}

/// Runs the full chain with the primary pairing normalized to `c0_scale · c₀`.
/// The series side fixes `c₀ = 1/2`; only the ratio `c₃ / c₀` enters `b`.
pub fn rigidity_with_normalization(c0_scale: &Rational, order: usize) -> Result<RigidityReport> {
    let order = order.max(4);
    let ode = l21_ode();
    let psi = frobenius_solve(&ode, 1, &rat(5, 2), order)?;
    let (a, beta) = connection_at_one(&psi, order)?;
    if !beta.is_zero() {
        return Err(Error::Domain("psi has a phi2 component".into()));
    }
    let series = phi1(order).scale_rational(&a);
    let c0 = series
        .coefficient_at(&rat(-1, 2))
        .map(|z| real(&z))
        .unwrap_or_default();
    let c3_offset = series
        .coefficient_at(&rat(5, 2))
        .map(|z| real(&z))
        .unwrap_or_default();
    let phi2_lead = phi2(order)
        .coefficient_at(&rat(5, 2))
        .map(|z| real(&z))
        .unwrap_or_default();
    let scaled_c0 = &c0 * c0_scale;
    let correlator = c3_computation(&scaled_c0);
    let ratio = if scaled_c0.is_zero() {
        return Err(Error::Domain("c0 normalization must be non-zero".into()));
    } else {
        &correlator.c3 / &scaled_c0
    };
    let c3 = &ratio * &c0;
    let b = (&c3 - &c3_offset) / phi2_lead;
    Ok(RigidityReport {
        c0,
        c3,
        a,
        rigidity_scalar: -b.clone(),
        b,
        c3_offset,
        correlator,
    })
}

pub fn rigidity_scalar() -> Result<RigidityReport> {
    rigidity_with_normalization(&Rational::one(), 10)
}
