//! sl2-type fusion rules, the bi-graded ring for `V₁ ⊗ V₂₅`, extension-algebra
//! decompositions and induction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, PuiseuxSeries, Rational};
use crate::verma::{character_from_data, h_r1_c1, h_r1_c25};

fn check_labels(labels: &[u32]) -> Result<()> {
    if labels.contains(&0) {
        return Err(Error::Domain("labels must be at least 1".into()));
    }
    Ok(())
}

/// Multiplicities of the simple objects `L_{r,1}`, keyed by `r`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FusionVector(pub BTreeMap<u32, u64>);

impl FusionVector {
    pub fn unit(r: u32) -> Self {
        Self(BTreeMap::from([(r, 1)]))
    }

    pub fn get(&self, r: u32) -> u64 {
        self.0.get(&r).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> Vec<u32> {
        self.0.keys().copied().collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, v) in &o.0 {
            *out.entry(*k).or_insert(0) += v;
        }
        Self(out)
    }

    /// Ring product, extended bilinearly from [`fuse`].
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (a, m) in &self.0 {
            for (b, n) in &o.0 {
                for k in sl2_range(*a, *b) {
                    *out.entry(k).or_insert(0) += m * n;
                }
            }
        }
        Self(out)
    }

    /// `Σ r · mult(r)`, the dimension of the corresponding sl2 representation.
    pub fn dimension(&self) -> u64 {
        self.0.iter().map(|(r, m)| *r as u64 * m).sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.0
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect::<Map<_, _>>(),
        )
    }
}

impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(r, m)| {
                if *m == 1 {
                    format!("L({r},1)")
                } else {
                    format!("{m}·L({r},1)")
                }
            })
            .collect();
        write!(
            f,
            "{}",
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" ⊕ ")
            }
        )
    }
}

fn sl2_range(r: u32, rp: u32) -> impl Iterator<Item = u32> {
    (r.abs_diff(rp) + 1..=r + rp - 1).step_by(2)
}

/// `L_{r,1} ⊠ L_{r',1} = ⊕ L_{k,1}`, `k = |r-r'|+1, |r-r'|+3, …, r+r'-1`.
pub fn fuse(r: u32, rp: u32) -> Result<FusionVector> {
    check_labels(&[r, rp])?;
    Ok(FusionVector(sl2_range(r, rp).map(|k| (k, 1)).collect()))
}

/// `Σ_k k · fuse(r, r')[k] == r · r'`.
pub fn fusion_dimension_check(r: u32, rp: u32) -> Result<bool> {
    Ok(fuse(r, rp)?.dimension() == r as u64 * rp as u64)
}

/// Shape of `L_{2,1} ⊠ L_{r,1}`: for `r ≥ 2` an extension of a quotient of
/// `V_{r-1,1}` by a quotient of `V_{r+1,1}`, which splits as `L_{r-1,1} ⊕ L_{r+1,1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorStructure {
    pub r: u32,
    /// `(sub, quotient)` Verma labels of the exact sequence, when there is one.
    pub exact_sequence: Option<(u32, u32)>,
    pub result: FusionVector,
}

impl TensorStructure {
    pub fn describe(&self) -> String {
        match self.exact_sequence {
            Some((a, b)) => format!(
                "0 -> V({a},1)/J+ -> L(2,1) ⊠ L({},1) -> V({b},1)/J- -> 0, and L(2,1) ⊠ L({},1) = {}",
                self.r, self.r, self.result
            ),
            None => format!("L(2,1) ⊠ L({},1) = {}", self.r, self.result),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "exact_sequence": self.exact_sequence.map(|(a, b)| json!({"sub": a, "quotient": b})),
            "result": self.result.to_json(),
            "description": self.describe(),
        })
    }
}

pub fn tensor_l21_structure(r: u32) -> Result<TensorStructure> {
    check_labels(&[r])?;
    Ok(TensorStructure {
        r,
        exact_sequence: (r >= 2).then_some((r + 1, r - 1)),
        result: fuse(2, r)?,
    })
}

/// Multiplicities over pairs `(r, r')` standing for `L^{(1)}_{r,1} ⊗ L^{(25)}_{r',1}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiFusionVector(pub BTreeMap<(u32, u32), u64>);

impl BiFusionVector {
    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, v) in &o.0 {
            *out.entry(*k).or_insert(0) += v;
        }
        Self(out)
    }

    /// Componentwise fusion in each factor.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = BTreeMap::new();
        for ((a, b), m) in &self.0 {
            for ((c, d), n) in &o.0 {
                for k in sl2_range(*a, *c) {
                    for l in sl2_range(*b, *d) {
                        *out.entry((k, l)).or_insert(0) += m * n;
                    }
                }
            }
        }
        Self(out)
    }

    pub fn get(&self, a: u32, b: u32) -> u64 {
        self.0.get(&(a, b)).copied().unwrap_or(0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraName {
    W,
    X,
    M,
    I,
    IGeneric,
}

impl AlgebraName {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraName::W => "W(-1)",
            AlgebraName::X => "X",
            AlgebraName::M => "M(-1)",
            AlgebraName::I => "I(-1)",
            AlgebraName::IGeneric => "I_generic",
        }
    }
}

impl FromStr for AlgebraName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W(-1)" | "W" => Ok(AlgebraName::W),
            "X" => Ok(AlgebraName::X),
            "M(-1)" | "M" => Ok(AlgebraName::M),
            "I(-1)" | "I" => Ok(AlgebraName::I),
            "I_generic" | "I-generic" => Ok(AlgebraName::IGeneric),
            _ => Err(Error::UnknownName(format!("no algebra called {s:?}"))),
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One summand `(multiplicity space dimension) · module`, with its lowest weight.
/// `labels` has one entry for a `c = 25` module `L_{r,1}`; for the centralizers
/// it is the pair of labels of the two tensor factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Summand {
    pub multiplicity: u64,
    pub labels: Vec<u32>,
    pub lowest_weight: Rational,
}

impl Summand {
    pub fn to_json(&self) -> Value {
        json!({
            "multiplicity": self.multiplicity,
            "labels": self.labels,
            "lowest_weight": format_rational(&self.lowest_weight),
        })
    }
}

/// `(t, t⁰, t⁻¹)` coefficients of `h_{r,s}(t)`.
pub fn h_rs_laurent(r: i64, s: i64) -> (Rational, Rational, Rational) {
    (
        int(r * r - 1) / int(4),
        -int(r * s - 1) / int(2),
        int(s * s - 1) / int(4),
    )
}

/// The `index`-th summand (0-based) of the named algebra.
pub fn summand(name: AlgebraName, index: u32) -> Summand {
    let n = index as i64;
    match name {
        AlgebraName::W => Summand {
            multiplicity: 2 * index as u64 + 1,
            labels: vec![2 * index + 1],
            lowest_weight: int(1 - (n + 1) * (n + 1)),
        },
        AlgebraName::X => Summand {
            multiplicity: 2 * (index as u64 + 1),
            labels: vec![2 * (index + 1)],
            lowest_weight: h_r1_c25(2 * (n + 1)),
        },
        AlgebraName::M => Summand {
            multiplicity: 1,
            labels: vec![2 * index + 1],
            lowest_weight: h_r1_c25(2 * n + 1),
        },
        AlgebraName::I => Summand {
            multiplicity: 1,
            labels: vec![index + 1, index + 1],
            lowest_weight: h_r1_c1(n + 1) + h_r1_c25(n + 1),
        },
        AlgebraName::IGeneric => {
            // h_{1,s}(t) + h_{1,s}(-t): the t and 1/t parts cancel, the constant parts add
            let (_, constant, _) = h_rs_laurent(1, n + 1);
            Summand {
                multiplicity: 1,
                labels: vec![index + 1, index + 1],
                lowest_weight: int(2) * constant,
            }
        }
    }
}

/// Lazily enumerated summands.
pub fn decompose_algebra(name: AlgebraName) -> impl Iterator<Item = Summand> {
    (0..).map(move |i| summand(name, i))
}

pub fn decompose_algebra_named(name: &str, count: usize) -> Result<Vec<Summand>> {
    Ok(decompose_algebra(name.parse()?).take(count).collect())
}

/// `A ⊠ L_{r,1}` for `A = W(-1)`: `(W(-1), r)` for odd `r`, `(X, r)` for even `r`.
pub fn induce_w(r: u32) -> Result<(AlgebraName, u32)> {
    check_labels(&[r])?;
    Ok((
        if r % 2 == 1 {
            AlgebraName::W
        } else {
            AlgebraName::X
        },
        r,
    ))
}

/// `F_A(M_{r,r'}) = ⊕ W_k`, `k` over the sl2 range of `(r, r')`.
pub fn induce_centralizer(r: u32, rp: u32) -> Result<FusionVector> {
    fuse(r, rp)
}

/// `W_r ⊠ W_{r'}`.
pub fn centralizer_fusion(r: u32, rp: u32) -> Result<FusionVector> {
    fuse(r, rp)
}

/// Product of three sl2 fusions, one per index.
pub fn generic_centralizer_fusion(
    a: (u32, u32, u32),
    b: (u32, u32, u32),
) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    check_labels(&[a.0, a.1, a.2, b.0, b.1, b.2])?;
    let mut out = BTreeMap::new();
    for k in sl2_range(a.0, b.0) {
        for kp in sl2_range(a.1, b.1) {
            for l in sl2_range(a.2, b.2) {
                *out.entry((k, kp, l)).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// `Σ_s (s,s)` over `s ≤ cutoff`.
pub fn truncated_algebra(cutoff: u32) -> BiFusionVector {
    BiFusionVector((1..=cutoff).map(|s| ((s, s), 1)).collect())
}

/// Compares `A · (r, r')` with `Σ_k A · (k, 1)`, `k` over [`induce_centralizer`],
/// on the components `(a, b)` with `a, b ≤ cutoff - max(r, r')`.
pub fn algebra_fusion_identity_check(r: u32, rp: u32, cutoff: u32) -> Result<bool> {
    check_labels(&[r, rp])?;
    if cutoff < r + rp {
        return Err(Error::Domain(format!(
            "cutoff must be at least r + r' = {}",
            r + rp
        )));
    }
    let a = truncated_algebra(cutoff);
    let lhs = a.mul(&BiFusionVector(BTreeMap::from([((r, rp), 1)])));
    let mut rhs = BiFusionVector::default();
    for k in induce_centralizer(r, rp)?.labels() {
        rhs = rhs.add(&a.mul(&BiFusionVector(BTreeMap::from([((k, 1), 1)]))));
    }
    let stable = cutoff - r.max(rp);
    Ok((1..=stable).all(|x| (1..=stable).all(|y| lhs.get(x, y) == rhs.get(x, y))))
}

/// Per-summand characters of an algebra; never a full sum.
#[derive(Clone, Debug)]
pub struct AlgebraCharacter {
    pub name: AlgebraName,
    pub partial: bool,
    pub summands: Vec<(Summand, PuiseuxSeries)>,
}

impl AlgebraCharacter {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name.as_str(),
            "partial": self.partial,
            "summands": self.summands.iter().map(|(s, ch)| json!({
                "summand": s.to_json(),
                "character": ch.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn summand_character(name: AlgebraName, s: &Summand, order: usize) -> PuiseuxSeries {
    let mult = int(s.multiplicity as i64);
    match name {
        AlgebraName::W | AlgebraName::X | AlgebraName::M => {
            character_from_data(&s.lowest_weight, Some(s.labels[0]), order).scale_rational(&mult)
        }
        AlgebraName::I => {
            let r = s.labels[0];
            let c1 = character_from_data(&h_r1_c1(r as i64), Some(r), order);
            let c25 = character_from_data(&h_r1_c25(r as i64), Some(r), order);
            c1.mul(&c25).scale_rational(&mult)
        }
        AlgebraName::IGeneric => {
            // L_{1,s} at generic t: relation at level s in both factors
            let sl = s.labels[0];
            let f = character_from_data(&int(0), Some(sl), order);
            f.mul(&f).shift(&s.lowest_weight).scale_rational(&mult)
        }
    }
}

/// Characters of the first `summand_bound` summands, skipping those whose lowest
/// weight is below `weight_floor`. Always flagged partial: each weight space gets
/// contributions from infinitely many summands.
pub fn algebra_character(
    name: AlgebraName,
    weight_floor: &Rational,
    summand_bound: u32,
    order: usize,
) -> Result<AlgebraCharacter> {
    if summand_bound == 0 {
        return Err(Error::Domain("summand_bound must be at least 1".into()));
    }
    let summands = decompose_algebra(name)
        .take(summand_bound as usize)
        .filter(|s| s.lowest_weight >= *weight_floor)
        .map(|s| {
            let ch = summand_character(name, &s, order);
            (s, ch)
        })
        .collect();
    Ok(AlgebraCharacter {
        name,
        partial: true,
        summands,
    })
}
