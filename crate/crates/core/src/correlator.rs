//! Three-point pairings `⟨u, Y(w₁, 1) w₂⟩` reduced to the primary value via the
//! commutator and iterate formulas at `x = 1`, and the `π_n` recursion for
//! `L_{2,1} ⊠ L_{2,1}` at `c = 25`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::rational::binomial_int;
use crate::scalar::{format_rational, int, rat, GaussianRational, Rational};
use crate::verma::{dual_basis, h_r1_c25, HWModuleDescriptor, PBWVector, Partition};

/// Module triple `(out, left, right)` for `⟨out, Y(left, 1) right⟩`, with the
/// value of the pairing on the three primaries.
#[derive(Clone, Debug)]
pub struct ThreePointContext {
    pub out_module: Arc<HWModuleDescriptor>,
    pub left_module: Arc<HWModuleDescriptor>,
    pub right_module: Arc<HWModuleDescriptor>,
    pub normalization: GaussianRational,
}

type Key = (Partition, Partition, Partition);

struct Reducer<'a> {
    ctx: &'a ThreePointContext,
    memo: HashMap<Key, Rational>,
}

fn weight(m: &HWModuleDescriptor, p: &Partition) -> Rational {
    &m.highest_weight + int(p.level() as i64)
}

impl Reducer<'_> {
    /// `L_n` on a monomial of `m`, as rational terms.
    fn act(m: &Arc<HWModuleDescriptor>, n: i64, p: &Partition) -> Vec<(Partition, Rational)> {
        PBWVector::monomial(m.clone(), p.clone())
            .act(n)
            .terms()
            .iter()
            .map(|(q, a)| (q.clone(), a.re.clone()))
            .collect()
    }

    /// Pairing of three monomials, in units of the primary value.
    fn pair(&mut self, u: &Partition, w1: &Partition, w2: &Partition) -> Rational {
        let key = (u.clone(), w1.clone(), w2.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let val = self.pair_uncached(u, w1, w2);
        self.memo.insert(key, val.clone());
        val
    }

    fn pair_uncached(&mut self, u: &Partition, w1: &Partition, w2: &Partition) -> Rational {
        let (om, lm, rm) = (
            self.ctx.out_module.clone(),
            self.ctx.left_module.clone(),
            self.ctx.right_module.clone(),
        );
        if u.is_empty() && w1.is_empty() && w2.is_empty() {
            return Rational::one();
        }
        let mut total = Rational::zero();
        if !u.is_empty() {
            // ⟨L_{-n} u'', Y(w₁) w₂⟩ = ⟨u'', L_n Y(w₁) w₂⟩
            let word = u.word();
            let n = word[0] as i64;
            let rest = Partition::from_word(&word[1..]);
            for (q, a) in Self::act(&rm, n, w2) {
                total += a * self.pair(&rest, w1, &q);
            }
            let base = self.pair(&rest, w1, w2);
            let l0 = weight(&om, &rest) - weight(&lm, w1) - weight(&rm, w2);
            total += (l0 + int(n + 1) * weight(&lm, w1)) * base;
            for i in 2..=(w1.level() as i64 + 1) {
                let c = binomial_int(n + 1, i as u32);
                if c.is_zero() {
                    continue;
                }
                for (q, a) in Self::act(&lm, i - 1, w1) {
                    total += &c * a * self.pair(&rest, &q, w2);
                }
            }
            return total;
        }
        if !w2.is_empty() {
            // Y(w₁) L_{-n} w₂'' = L_{-n} Y(w₁) w₂'' - Σ C(1-n, i) Y(L_{i-1} w₁) w₂'', and L_n kills v'
            let word = w2.word();
            let n = word[0] as i64;
            let rest = Partition::from_word(&word[1..]);
            let base = self.pair(u, w1, &rest);
            let l0 = weight(&om, u) - weight(&lm, w1) - weight(&rm, &rest);
            total += (l0 + int(1 - n) * weight(&lm, w1)) * base;
            for i in 2..=(w1.level() as i64 + 1) {
                let c = binomial_int(1 - n, i as u32);
                for (q, a) in Self::act(&lm, i - 1, w1) {
                    total += &c * a * self.pair(u, &q, &rest);
                }
            }
            return -total;
        }
        // iterate formula: ⟨v', Y(L_{-n} w', 1) v₂⟩ = (-1)^n [⟨v', Y(w') L_{-1} v₂⟩ + (n-1) h₂ ⟨v', Y(w') v₂⟩]
        let word = w1.word();
        let n = word[0] as i64;
        let rest = Partition::from_word(&word[1..]);
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        let shifted = self.pair(u, &rest, &Partition::new(vec![1]));
        let flat = self.pair(u, &rest, w2);
        sign * (shifted + int(n - 1) * &rm.highest_weight * flat)
    }
}

/// `⟨out, Y(left, 1) right⟩` as the normalization times an exact rational.
pub fn reduce_pairing(
    ctx: &ThreePointContext,
    out_desc: &PBWVector,
    left_desc: &PBWVector,
    right_desc: &PBWVector,
) -> Result<GaussianRational> {
    for (v, m, slot) in [
        (out_desc, &ctx.out_module, "out"),
        (left_desc, &ctx.left_module, "left"),
        (right_desc, &ctx.right_module, "right"),
    ] {
        if v.module() != m {
            return Err(Error::Contract(format!(
                "{slot} vector lives in {}, expected {m}",
                v.module()
            )));
        }
    }
    let mut r = Reducer {
        ctx,
        memo: HashMap::new(),
    };
    let mut total = GaussianRational::zero();
    for (u, a) in out_desc.terms() {
        for (w1, b) in left_desc.terms() {
            for (w2, c) in right_desc.terms() {
                let val = r.pair(u, w1, w2);
                total += &(&(&(a * b) * c) * &val);
            }
        }
    }
    Ok(&total * &ctx.normalization)
}

fn l21() -> Arc<HWModuleDescriptor> {
    HWModuleDescriptor::quotient(int(25), rat(-5, 4), 2).expect("level-2 singular vector at c = 25")
}

fn l31() -> Arc<HWModuleDescriptor> {
    HWModuleDescriptor::quotient(int(25), int(-3), 3).expect("level-3 singular vector at c = 25")
}

/// Context `⟨L_{3,1}, Y(L_{2,1}, 1) L_{2,1}⟩` with `π₀ = v_{3,1}`.
pub fn fusion_context() -> ThreePointContext {
    let a = l21();
    ThreePointContext {
        out_module: l31(),
        left_module: a.clone(),
        right_module: a,
        normalization: GaussianRational::one(),
    }
}

/// Context `⟨L_{2,1}, Y(L_{2,1}, 1) L_{3,1}⟩` with primary value `c0`.
pub fn evaluation_context(c0: &Rational) -> ThreePointContext {
    let a = l21();
    ThreePointContext {
        out_module: a.clone(),
        left_module: a,
        right_module: l31(),
        normalization: GaussianRational::real(c0.clone()),
    }
}

/// Intermediate data of the `c₃` computation.
#[derive(Clone, Debug)]
pub struct C3Computation {
    pub pairing_l3: Rational,
    pub pairing_l1l2: Rational,
    pub pi3: PBWVector,
    pub c3: Rational,
}

impl C3Computation {
    pub fn to_json(&self, c0: &Rational) -> Value {
        json!({
            "c0": format_rational(c0),
            "pairings": {"L-3": format_rational(&self.pairing_l3), "L-1L-2": format_rational(&self.pairing_l1l2)},
            "pi3": self.pi3.to_json(),
            "c3": format_rational(&self.c3),
        })
    }
}

/// Builds `π₃ = Σ_λ ⟨L_{-λ} v₃₁, Y(v₂₁, 1) v₂₁⟩ [L_{-λ} v₃₁]*` in `L_{3,1}` and
/// pairs it against `v₂₁` in the evaluation context.
pub fn c3_computation(c0: &Rational) -> C3Computation {
    let fctx = fusion_context();
    let m31 = fctx.out_module.clone();
    let v21 = PBWVector::highest_weight(fctx.left_module.clone());
    let basis = m31.basis(3);
    let duals = dual_basis(&m31, 3).expect("level-3 form of L_{3,1} is non-degenerate");
    let mut pi3 = PBWVector::zero(m31.clone());
    let mut pairings = Vec::new();
    for (b, dual) in basis.iter().zip(&duals) {
        let u = PBWVector::monomial(m31.clone(), b.clone());
        let val = reduce_pairing(&fctx, &u, &v21, &v21).expect("modules match by construction");
        pi3 = pi3.add(&dual.scale(&val));
        pairings.push(val.re);
    }
    let ectx = evaluation_context(c0);
    let c3 = reduce_pairing(&ectx, &v21, &v21, &pi3)
        .expect("modules match by construction")
        .re;
    C3Computation {
        pairing_l3: pairings[0].clone(),
        pairing_l1l2: pairings[1].clone(),
        pi3,
        c3,
    }
}

/// `⟨v₂₁, Y(v₂₁, 1) π₃⟩` given the primary value `c0`.
pub fn compute_c3(c0: &Rational) -> Rational {
    c3_computation(c0).c3
}

/// Coefficient of `π_n` in `coef(n) π_n = -Σ_{i=1}^n L_{-i} π_{n-i}`, for
/// `Y(v₂₁, x) v₂₁` projected to a module of weight `h`.
fn pi_coefficient(h: &Rational, n: i64) -> Rational {
    let h21 = rat(-5, 4);
    let s = h - int(2) * &h21;
    let e = int(n) + s;
    &e * (&e - int(1)) - &e + h21
}

/// `π₀ = v, π₁, …, π_{n_max}` from the recursion, in a `c = 25` module.
pub fn pi_recursion(module: &Arc<HWModuleDescriptor>, n_max: u32) -> Result<Vec<PBWVector>> {
    if module.central_charge != int(25) {
        return Err(Error::OutOfRange(
            "pi recursion is set up for c = 25".into(),
        ));
    }
    let mut pis = vec![PBWVector::highest_weight(module.clone())];
    for n in 1..=n_max as i64 {
        let coef = pi_coefficient(&module.highest_weight, n);
        if coef.is_zero() {
            let msg = if module.highest_weight == int(-3) {
                format!("n(n-3) = 0 at n = {n}")
            } else {
                format!("recursion coefficient vanishes at n = {n}")
            };
            return Err(Error::DegenerateIndex(msg));
        }
        let mut rhs = PBWVector::zero(module.clone());
        for i in 1..=n {
            rhs = rhs.add(&pis[(n - i) as usize].act(-i));
        }
        pis.push(rhs.scale_rational(&(-Rational::one() / coef)));
    }
    Ok(pis)
}

/// `-L₋₁π₂ - L₋₂π₁ - L₋₃π₀` in `V(25, -3)`: the `n = 3` equation, whose left side vanishes.
pub fn pi_constraint_check() -> PBWVector {
    let m = HWModuleDescriptor::verma(int(25), int(-3));
    let pis = pi_recursion(&m, 2).expect("n <= 2 is non-degenerate");
    let mut v = PBWVector::zero(m);
    for i in 1..=3 {
        v = v.sub(&pis[3 - i as usize].act(-i));
    }
    v
}

/// Candidate lowest weights of `L_{2,1} ⊠ L_{r,1}` and the eigenvector combinations
/// `a·π₀(v ⊠ w) + b·π₀(L₋₁v ⊠ w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TopLevelReport {
    pub r: u32,
    /// `(h_{r-1,1}, h_{r+1,1})`
    pub candidate_weights: (Rational, Rational),
    /// `(weight, (a, b))` for each candidate weight.
    pub eigenvector_coefficients: Vec<(Rational, (Rational, Rational))>,
}

impl TopLevelReport {
    /// Each combination pairs to zero with a primary of the other candidate weight.
    pub fn verify(&self) -> bool {
        let left = HWModuleDescriptor::verma(int(25), rat(-5, 4));
        let right = HWModuleDescriptor::verma(int(25), h_r1_c25(self.r as i64));
        let l1 = PBWVector::monomial(left.clone(), Partition::new(vec![1]));
        let v = PBWVector::highest_weight(left.clone());
        let pairs = &self.eigenvector_coefficients;
        pairs
            .iter()
            .zip(pairs.iter().rev())
            .all(|((_, (a, b)), (other, _))| {
                let ctx = ThreePointContext {
                    out_module: HWModuleDescriptor::verma(int(25), other.clone()),
                    left_module: left.clone(),
                    right_module: right.clone(),
                    normalization: GaussianRational::one(),
                };
                let w = v.scale_rational(a).add(&l1.scale_rational(b));
                let out = PBWVector::highest_weight(ctx.out_module.clone());
                let rv = PBWVector::highest_weight(right.clone());
                reduce_pairing(&ctx, &out, &w, &rv).is_ok_and(|x| x.is_zero())
            })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "candidate_weights": [format_rational(&self.candidate_weights.0), format_rational(&self.candidate_weights.1)],
            "eigenvectors": self.eigenvector_coefficients.iter().map(|(h, (a, b))| json!({
                "weight": format_rational(h),
                "coefficients": [format_rational(a), format_rational(b)],
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn top_level_analysis(r: u32) -> Result<TopLevelReport> {
    if r == 0 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    let r_i = r as i64;
    let lo = h_r1_c25(r_i - 1);
    let hi = h_r1_c25(r_i + 1);
    Ok(TopLevelReport {
        r,
        candidate_weights: (lo.clone(), hi.clone()),
        eigenvector_coefficients: vec![
            (lo, (int(1 - r_i), int(-2))),
            (hi, (int(r_i + 3), int(-2))),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn level_three_pairings() {
        let ctx = fusion_context();
        let v = PBWVector::highest_weight(ctx.left_module.clone());
        let u3 = PBWVector::monomial(ctx.out_module.clone(), p(&[3]));
        let u21 = PBWVector::monomial(ctx.out_module.clone(), p(&[2, 1]));
        assert_eq!(
            reduce_pairing(&ctx, &u3, &v, &v).unwrap(),
            GaussianRational::real(rat(-11, 2))
        );
        assert_eq!(
            reduce_pairing(&ctx, &u21, &v, &v).unwrap(),
            GaussianRational::real(rat(17, 4))
        );
        let o = PBWVector::highest_weight(ctx.out_module.clone());
        assert_eq!(
            reduce_pairing(&ctx, &o, &v, &v).unwrap(),
            GaussianRational::one()
        );
    }

    #[test]
    fn c3_values() {
        let comp = c3_computation(&rat(1, 2));
        assert_eq!(comp.c3, rat(9, 32));
        assert_eq!(comp.pi3.coeff(&p(&[3])), GaussianRational::real(rat(-1, 6)));
        assert_eq!(
            comp.pi3.coeff(&p(&[2, 1])),
            GaussianRational::real(rat(-1, 12))
        );
        assert_eq!(compute_c3(&int(0)), int(0));
        assert_eq!(compute_c3(&int(1)), rat(9, 16));
    }

    #[test]
    fn pi_components() {
        let m = HWModuleDescriptor::verma(int(25), int(-3));
        let pis = pi_recursion(&m, 2).unwrap();
        assert_eq!(pis[0], PBWVector::highest_weight(m.clone()));
        assert_eq!(
            pis[1],
            PBWVector::from_rational_terms(m.clone(), [(p(&[1]), rat(1, 2))])
        );
        assert_eq!(
            pis[2],
            PBWVector::from_rational_terms(
                m.clone(),
                [(p(&[1, 1]), rat(1, 4)), (p(&[2]), rat(1, 2))]
            )
        );
        let err = pi_recursion(&m, 3).unwrap_err();
        assert_eq!(err.to_string(), "degenerate index: n(n-3) = 0 at n = 3");
    }

    #[test]
    fn constraint_is_quarter_singular_vector() {
        let v = pi_constraint_check();
        assert_eq!(v.coeff(&p(&[1, 1, 1])), GaussianRational::real(rat(-1, 4)));
        assert_eq!(v.coeff(&p(&[2, 1])), GaussianRational::from_int(-1));
        assert_eq!(v.coeff(&p(&[3])), GaussianRational::real(rat(-1, 2)));
        assert!(v.project(&l31()).unwrap().is_zero());
    }

    #[test]
    fn top_level_reports() {
        let r2 = top_level_analysis(2).unwrap();
        assert_eq!(r2.candidate_weights, (int(0), int(-3)));
        assert_eq!(r2.eigenvector_coefficients[1].1, (int(5), int(-2)));
        assert_eq!(r2.eigenvector_coefficients[0].1, (int(-1), int(-2)));
        assert!(r2.verify());
        assert_eq!(
            top_level_analysis(1).unwrap().candidate_weights,
            (rat(3, 4), rat(-5, 4))
        );
        assert_eq!(
            top_level_analysis(3).unwrap().candidate_weights,
            (rat(-5, 4), rat(-21, 4))
        );
        for r in 1..8 {
            assert!(top_level_analysis(r).unwrap().verify());
        }
    }

    #[test]
    fn mismatched_module_is_rejected() {
        let ctx = fusion_context();
        let v = PBWVector::highest_weight(ctx.left_module.clone());
        assert!(matches!(
            reduce_pairing(&ctx, &v, &v, &v),
            Err(Error::Contract(_))
        ));
    }
}
