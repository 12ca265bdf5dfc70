//! Highest-weight module descriptors, PBW vectors and the Virasoro mode action.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, GaussianRational, Rational};

pub(crate) type Terms = BTreeMap<Partition, Rational>;
pub(crate) type GTerms = BTreeMap<Partition, GaussianRational>;

/// Relation `s = 0` for a singular vector `s` at `level`, normalized so that
/// the coefficient of `L(-1)^level` is one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientRelation {
    pub level: u32,
    pub singular: BTreeMap<Partition, Rational>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HWModuleDescriptor {
    pub central_charge: Rational,
    pub highest_weight: Rational,
    pub quotient: Option<QuotientRelation>,
}

impl HWModuleDescriptor {
    pub fn verma(c: Rational, h: Rational) -> Arc<Self> {
        Arc::new(Self {
            central_charge: c,
            highest_weight: h,
            quotient: None,
        })
    }

    /// Quotient of `V(c, h)` by the submodule generated by its singular vector at
    /// `level`. The singular vector must be unique and contain `L(-1)^level`.
    pub fn quotient(c: Rational, h: Rational, level: u32) -> Result<Arc<Self>> {
        let verma = Self::verma(c.clone(), h.clone());
        let sing = super::gram::singular_vector(&verma, level)?;
        let [s] = sing.as_slice() else {
            return Err(Error::Domain(format!(
                "expected one singular vector at level {level}, found {}",
                sing.len()
            )));
        };
        if s.coeff(&Partition::ones(level as usize)) != GaussianRational::one() {
            return Err(Error::Domain(
                "singular vector has no L(-1)^level term".into(),
            ));
        }
        let singular = s
            .terms()
            .iter()
            .map(|(p, a)| (p.clone(), a.re.clone()))
            .collect();
        Ok(Arc::new(Self {
            central_charge: c,
            highest_weight: h,
            quotient: Some(QuotientRelation { level, singular }),
        }))
    }

    /// `L_{r,1}` at central charge `c(t)`: the quotient by the level-`r` singular vector.
    pub fn l_r1(t: &Rational, r: u32) -> Result<Arc<Self>> {
        let c = super::weights::central_charge_from_t(t)?;
        let h = super::weights::h_rs(t, r as i64, 1)?;
        Self::quotient(c, h, r)
    }

    /// `V(c, h)` without the quotient relation.
    pub fn verma_cover(&self) -> Arc<Self> {
        Self::verma(self.central_charge.clone(), self.highest_weight.clone())
    }

    pub fn quotient_level(&self) -> Option<u32> {
        self.quotient.as_ref().map(|q| q.level)
    }

    /// PBW basis at `level`: all partitions, or those with fewer than `ℓ` ones in a quotient.
    pub fn basis(&self, level: u32) -> Vec<Partition> {
        let all = Partition::all_of(level);
        match self.quotient_level() {
            None => all,
            Some(l) => all
                .into_iter()
                .filter(|p| p.count_ones() < l as usize)
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "central_charge": format_rational(&self.central_charge),
            "highest_weight": format_rational(&self.highest_weight),
            "quotient_level": self.quotient_level(),
        })
    }
}

impl fmt::Display for HWModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, h) = (
            format_rational(&self.central_charge),
            format_rational(&self.highest_weight),
        );
        match self.quotient_level() {
            None => write!(f, "V(c={c}, h={h})"),
            Some(l) => write!(f, "V(c={c}, h={h})/<level {l}>"),
        }
    }
}

/// Memoized action of single modes on PBW monomials of `V(c, h)`.
pub(crate) struct Actor {
    c: Rational,
    h: Rational,
    memo: HashMap<(i64, Vec<u32>), Rc<Terms>>,
}

impl Actor {
    pub fn new(m: &HWModuleDescriptor) -> Self {
        Self {
            c: m.central_charge.clone(),
            h: m.highest_weight.clone(),
            memo: HashMap::new(),
        }
    }

    /// `L_n` applied to the monomial with ascending operator `word`.
    pub fn act_word(&mut self, n: i64, word: &[u32]) -> Rc<Terms> {
        if let Some(hit) = self.memo.get(&(n, word.to_vec())) {
            return hit.clone();
        }
        let out = Rc::new(self.act_word_uncached(n, word));
        self.memo.insert((n, word.to_vec()), out.clone());
        out
    }

    fn act_word_uncached(&mut self, n: i64, word: &[u32]) -> Terms {
        let level: i64 = word.iter().map(|&p| p as i64).sum();
        let mut out = Terms::new();
        if n == 0 {
            out.insert(Partition::from_word(word), &self.h + int(level));
            return out;
        }
        if n > level {
            return out;
        }
        if n < 0 && word.first().is_none_or(|&m| (-n) as u32 <= m) {
            let mut w = vec![(-n) as u32];
            w.extend_from_slice(word);
            out.insert(Partition::from_word(&w), Rational::one());
            return out;
        }
        // L_n L_{-m} X = L_{-m} L_n X + (n+m) L_{n-m} X + δ_{n,m} (n³-n)/12 c X
        let m = word[0] as i64;
        let rest = &word[1..];
        let inner = self.act_word(n, rest);
        for (p, a) in inner.iter() {
            let moved = self.act_word(-m, &p.word());
            add_scaled(&mut out, &moved, a);
        }
        if n + m != 0 {
            let comm = self.act_word(n - m, rest);
            add_scaled(&mut out, &comm, &int(n + m));
        }
        if n == m {
            let central = int(n * n * n - n) / int(12) * &self.c;
            add_scaled(
                &mut out,
                &Terms::from([(Partition::from_word(rest), Rational::one())]),
                &central,
            );
        }
        out
    }

    pub fn act_terms(&mut self, n: i64, terms: &Terms) -> Terms {
        let mut out = Terms::new();
        for (p, a) in terms {
            let t = self.act_word(n, &p.word());
            add_scaled(&mut out, &t, a);
        }
        out
    }

    pub fn act_gterms(&mut self, n: i64, terms: &GTerms) -> GTerms {
        let mut out = GTerms::new();
        for (p, a) in terms {
            let t = self.act_word(n, &p.word());
            for (q, b) in t.iter() {
                let e = out.entry(q.clone()).or_default();
                *e += &(a * b);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `L_{-λ}` applied to `terms`: the largest part acts first.
    pub fn lower_by(&mut self, lambda: &Partition, terms: &Terms) -> Terms {
        lambda
            .parts()
            .iter()
            .fold(terms.clone(), |acc, &p| self.act_terms(-(p as i64), &acc))
    }
}

pub(crate) fn add_scaled(out: &mut Terms, t: &Terms, a: &Rational) {
    for (p, b) in t {
        let e = out.entry(p.clone()).or_insert_with(Rational::zero);
        *e += a * b;
        if e.is_zero() {
            out.remove(p);
        }
    }
}

/// Rewrites `terms` into quotient normal form: every monomial with at least `ℓ`
/// ones is replaced using `L_{-ν} s = 0`.
pub(crate) fn reduce_quotient(actor: &mut Actor, rel: &QuotientRelation, terms: &mut GTerms) {
    let l = rel.level as usize;
    let mut cache: HashMap<Partition, Terms> = HashMap::new();
    while let Some(mu) = terms
        .keys()
        .filter(|p| p.count_ones() >= l)
        .max_by_key(|p| p.len())
        .cloned()
    {
        let a = terms.remove(&mu).unwrap();
        let nu = mu.remove_ones(l);
        let image = cache
            .entry(nu.clone())
            .or_insert_with(|| actor.lower_by(&nu, &rel.singular));
        debug_assert_eq!(image.get(&mu), Some(&Rational::one()));
        for (p, b) in image.iter() {
            if *p == mu {
                continue;
            }
            let e = terms.entry(p.clone()).or_default();
            *e -= &(&a * &GaussianRational::real(b.clone()));
            if e.is_zero() {
                terms.remove(p);
            }
        }
    }
}

/// Finite combination of PBW monomials in a fixed module, kept in normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PBWVector {
    module: Arc<HWModuleDescriptor>,
    terms: GTerms,
}

impl PBWVector {
    pub fn new(module: Arc<HWModuleDescriptor>, mut terms: GTerms) -> Self {
        terms.retain(|_, v| !v.is_zero());
        if let Some(rel) = &module.quotient {
            let mut actor = Actor::new(&module);
            reduce_quotient(&mut actor, rel, &mut terms);
        }
        Self { module, terms }
    }

    pub fn from_rational_terms(
        module: Arc<HWModuleDescriptor>,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        Self::new(
            module,
            terms
                .into_iter()
                .map(|(p, a)| (p, GaussianRational::real(a)))
                .collect(),
        )
    }

    pub fn zero(module: Arc<HWModuleDescriptor>) -> Self {
        Self {
            module,
            terms: GTerms::new(),
        }
    }

    /// The highest-weight vector `v`.
    pub fn highest_weight(module: Arc<HWModuleDescriptor>) -> Self {
        Self::monomial(module, Partition::empty())
    }

    pub fn monomial(module: Arc<HWModuleDescriptor>, p: Partition) -> Self {
        Self::new(module, GTerms::from([(p, GaussianRational::one())]))
    }

    pub fn module(&self) -> &Arc<HWModuleDescriptor> {
        &self.module
    }

    pub fn terms(&self) -> &GTerms {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> GaussianRational {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The set of levels carrying non-zero terms.
    pub fn levels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self.terms.keys().map(Partition::level).collect();
        l.dedup();
        l
    }

    /// The single level, when the vector is homogeneous and non-zero.
    pub fn level(&self) -> Option<u32> {
        match self.levels().as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }

    pub fn component(&self, level: u32) -> Self {
        Self {
            module: self.module.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.level() == level)
                .map(|(p, a)| (p.clone(), a.clone()))
                .collect(),
        }
    }

    fn same_module(&self, o: &Self) -> Result<()> {
        if self.module != o.module {
            return Err(Error::Contract(format!(
                "vectors from {} and {}",
                self.module, o.module
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_module(o)?;
        let mut terms = self.terms.clone();
        for (p, a) in &o.terms {
            *terms.entry(p.clone()).or_default() += a;
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Self {
            module: self.module.clone(),
            terms,
        })
    }

    /// Panics on a module mismatch.
    pub fn add(&self, o: &Self) -> Self {
        self.checked_add(o)
            .expect("adding PBW vectors from different modules")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        let mut terms: GTerms = self.terms.iter().map(|(p, a)| (p.clone(), a * s)).collect();
        terms.retain(|_, v| !v.is_zero());
        Self {
            module: self.module.clone(),
            terms,
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        self.scale(&GaussianRational::real(s.clone()))
    }

    /// `L_n` applied to this vector.
    pub fn act(&self, n: i64) -> Self {
        act_mode(n, self)
    }

    /// `L_{-λ}` applied to this vector.
    pub fn lower_by(&self, lambda: &Partition) -> Self {
        lambda
            .parts()
            .iter()
            .fold(self.clone(), |v, &p| v.act(-(p as i64)))
    }

    /// Same terms, re-read in another module with the same `(c, h)`, then normalized there.
    pub fn project(&self, target: &Arc<HWModuleDescriptor>) -> Result<Self> {
        if target.central_charge != self.module.central_charge
            || target.highest_weight != self.module.highest_weight
        {
            return Err(Error::Contract(
                "projection between modules with different (c, h)".into(),
            ));
        }
        Ok(Self::new(target.clone(), self.terms.clone()))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(p, a)| json!({"partition": p.parts(), "coeff": a.to_json()}))
                .collect(),
        )
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, a)| format!("({a}){}v", p.latex()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for PBWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, a)| format!("{a}·{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `L_n v`, normal ordered and rewritten through the quotient relation when present.
pub fn act_mode(n: i64, v: &PBWVector) -> PBWVector {
    let mut actor = Actor::new(&v.module);
    let mut terms = actor.act_gterms(n, &v.terms);
    if let Some(rel) = &v.module.quotient {
        reduce_quotient(&mut actor, rel, &mut terms);
    }
    PBWVector {
        module: v.module.clone(),
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn sl2_relation() {
        let m = HWModuleDescriptor::verma(rat(7, 3), rat(2, 5));
        let v = PBWVector::monomial(m.clone(), p(&[1]));
        let got = act_mode(1, &v);
        assert_eq!(got, PBWVector::highest_weight(m).scale_rational(&rat(4, 5)));
    }

    #[test]
    fn level_three_norm() {
        let m = HWModuleDescriptor::verma(int(25), int(-3));
        let got = act_mode(3, &PBWVector::monomial(m.clone(), p(&[3])));
        assert_eq!(
            got,
            PBWVector::highest_weight(m.clone()).scale_rational(&int(32))
        );
        let got = act_mode(2, &PBWVector::monomial(m.clone(), p(&[2])));
        assert_eq!(got, PBWVector::highest_weight(m).scale_rational(&rat(1, 2)));
    }

    #[test]
    fn lowering_normal_orders() {
        let m = HWModuleDescriptor::verma(int(25), int(-3));
        // L_{-2} L_{-1} v = L_{-1} L_{-2} v - L_{-3} v
        let v = act_mode(-2, &PBWVector::monomial(m.clone(), p(&[1])));
        let want = PBWVector::from_rational_terms(m, [(p(&[2, 1]), int(1)), (p(&[3]), int(-1))]);
        assert_eq!(v, want);
    }

    #[test]
    fn l0_eigenvalue() {
        let m = HWModuleDescriptor::verma(int(25), rat(-5, 4));
        let v = PBWVector::monomial(m, p(&[2, 1, 1]));
        assert_eq!(act_mode(0, &v), v.scale_rational(&rat(11, 4)));
    }

    #[test]
    fn quotient_kills_singular_vector() {
        let m = HWModuleDescriptor::quotient(int(25), int(-3), 3).unwrap();
        let s = PBWVector::from_rational_terms(
            m.verma_cover(),
            [
                (Partition::ones(3), int(1)),
                (p(&[2, 1]), int(4)),
                (p(&[3]), int(2)),
            ],
        );
        assert!(s.project(&m).unwrap().is_zero());
        let w = PBWVector::monomial(m, Partition::ones(3));
        assert_eq!(w.coeff(&p(&[2, 1])), GaussianRational::from_int(-4));
        assert_eq!(w.coeff(&p(&[3])), GaussianRational::from_int(-2));
    }

    #[test]
    fn module_mismatch_is_reported() {
        let a = PBWVector::highest_weight(HWModuleDescriptor::verma(int(25), int(-3)));
        let b = PBWVector::highest_weight(HWModuleDescriptor::verma(int(25), rat(-5, 4)));
        assert!(matches!(a.checked_add(&b), Err(Error::Contract(_))));
    }

    #[test]
    fn display_text() {
        let m = HWModuleDescriptor::verma(int(25), int(-3));
        let v =
            PBWVector::from_rational_terms(m, [(p(&[2, 1]), rat(-1, 12)), (p(&[3]), rat(-1, 6))]);
        assert_eq!(v.to_string(), "-1/6·L(-3)·v + -1/12·L(-1)L(-2)·v");
    }
}
