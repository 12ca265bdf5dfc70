//! Matrix model of `C(-1, sl2)` on the generator `X` with basis `(x₊, x₋)`:
//! duality maps, cocycle-twisted associators, braidings, twists and intrinsic
//! dimensions. Tensor words in `X` have length at most three.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fusion::fuse;
use crate::scalar::rational::is_integer;
use crate::scalar::{format_rational, int, GaussianRational, Matrix, Rational};
use crate::verma::{h_r1_c1, h_r1_c25};

type G = GaussianRational;
type M = Matrix<G>;

/// A linear map between tensor words in `X`, recorded with the `Z/2` parity of
/// every tensor factor on either side.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixMap {
    pub matrix: M,
    pub source_parity: Vec<u8>,
    pub target_parity: Vec<u8>,
}

impl MatrixMap {
    pub fn new(matrix: M, source_parity: Vec<u8>, target_parity: Vec<u8>) -> Self {
        assert_eq!(matrix.cols(), 1 << source_parity.len(), "source dimension");
        assert_eq!(matrix.rows(), 1 << target_parity.len(), "target dimension");
        Self {
            matrix,
            source_parity,
            target_parity,
        }
    }

    /// Identity on `X^{⊗n}`.
    pub fn identity(n: usize) -> Self {
        Self::new(M::identity(1 << n), vec![1; n], vec![1; n])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.source_parity, other.target_parity,
            "composing maps between different objects"
        );
        Self::new(
            self.matrix.mul(&other.matrix),
            other.source_parity.clone(),
            self.target_parity.clone(),
        )
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let cat = |a: &[u8], b: &[u8]| [a, b].concat();
        Self::new(
            self.matrix.kron(&other.matrix),
            cat(&self.source_parity, &other.source_parity),
            cat(&self.target_parity, &other.target_parity),
        )
    }

    pub fn scale(&self, s: &G) -> Self {
        Self {
            matrix: self.matrix.scale(s),
            ..self.clone()
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            matrix: self.matrix.add(&o.matrix),
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            matrix: self.matrix.sub(&o.matrix),
            ..self.clone()
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(Self::new(
            self.matrix.inverse()?,
            self.target_parity.clone(),
            self.source_parity.clone(),
        ))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_square() && self.matrix == M::identity(self.matrix.rows())
    }

    /// `s` when the map is `s · Id`.
    pub fn as_scalar(&self) -> Option<G> {
        let n = self.matrix.rows();
        if !self.matrix.is_square() || n == 0 {
            return None;
        }
        let s = self.matrix.get(0, 0).clone();
        (self.matrix == M::identity(n).scale(&s)).then_some(s)
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(G::to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for MatrixMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.matrix.to_rows() {
            let cells: Vec<String> = row.iter().map(|z| z.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `ω(a, b, c) = (-1)^{abc}` on `Z/2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CocycleTwist;

impl CocycleTwist {
    pub fn sign(a: u8, b: u8, c: u8) -> i64 {
        if (a & b & c) % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// `ω(b,c,d) ω(a,b+c,d) ω(a,b,c) = ω(a+b,c,d) ω(a,b,c+d)` for all arguments.
    pub fn is_cocycle() -> bool {
        let s = Self::sign;
        (0..16u8).all(|bits| {
            let (a, b, c, d) = (bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1);
            s(b, c, d) * s(a, (b + c) % 2, d) * s(a, b, c)
                == s((a + b) % 2, c, d) * s(a, b, (c + d) % 2)
        })
    }
}

/// Evaluation `X ⊗ X → 1`, coevaluation `1 → X ⊗ X` and `f = i ∘ e`.
#[derive(Clone, PartialEq, Debug)]
pub struct DualityData {
    pub e: MatrixMap,
    pub i: MatrixMap,
    pub f: MatrixMap,
}

/// `e = (0, 1, -1, 0)` on `{x₊x₊, x₊x₋, x₋x₊, x₋x₋}`, `i(1) = x₊⊗x₋ - x₋⊗x₊`.
pub fn standard_duality_data() -> DualityData {
    scaled_duality_data(&G::one())
}

/// `(λ e, λ⁻¹ i)`. Every check in this module is independent of `λ`.
pub fn scaled_duality_data(lambda: &G) -> DualityData {
    let row: Vec<G> = [0, 1, -1, 0].iter().map(|&x| G::from_int(x)).collect();
    let e = MatrixMap::new(
        M::from_rows(vec![row.clone()]).scale(lambda),
        vec![1, 1],
        vec![],
    );
    let inv = lambda.inv().expect("non-zero rescaling");
    let i = MatrixMap::new(
        M::from_rows(vec![row]).transpose().scale(&inv),
        vec![],
        vec![1, 1],
    );
    let f = i.compose(&e);
    DualityData { e, i, f }
}

/// `X ⊗ (X ⊗ X) → (X ⊗ X) ⊗ X`, the cocycle sign times the identity.
pub fn associator(twisted: bool) -> MatrixMap {
    let sign = if twisted {
        CocycleTwist::sign(1, 1, 1)
    } else {
        1
    };
    MatrixMap::new(
        M::identity(8).scale(&G::from_int(sign)),
        vec![1, 1, 1],
        vec![1, 1, 1],
    )
}

/// `((e ⊗ Id) A (Id ⊗ i), (Id ⊗ e) A⁻¹ (i ⊗ Id))`, unit isomorphisms being strict.
pub fn rigidity_compositions_with(d: &DualityData, twisted: bool) -> (MatrixMap, MatrixMap) {
    let id = MatrixMap::identity(1);
    let a = associator(twisted);
    let a_inv = a.inverse().expect("associator is invertible");
    let first = d.e.tensor(&id).compose(&a).compose(&id.tensor(&d.i));
    let second = id.tensor(&d.e).compose(&a_inv).compose(&d.i.tensor(&id));
    (first, second)
}

pub fn rigidity_compositions(twisted: bool) -> (MatrixMap, MatrixMap) {
    rigidity_compositions_with(&standard_duality_data(), twisted)
}

/// Both sides of the hexagon-derived identity
/// `A (Id ⊗ i) = (R ⊗ Id) A (Id ⊗ R) A⁻¹ (i ⊗ Id)` as maps `X → (X ⊗ X) ⊗ X`.
fn hexagon_sides(r: &MatrixMap, d: &DualityData, twisted: bool) -> (MatrixMap, MatrixMap) {
    let id = MatrixMap::identity(1);
    let a = associator(twisted);
    let a_inv = a.inverse().expect("associator is invertible");
    let lhs = a.compose(&id.tensor(&d.i));
    let rhs = r
        .tensor(&id)
        .compose(&a)
        .compose(&id.tensor(r))
        .compose(&a_inv)
        .compose(&d.i.tensor(&id));
    (lhs, rhs)
}

/// Whether `R` satisfies the hexagon-derived identity in the twisted category.
pub fn hexagon_check(r: &MatrixMap) -> bool {
    let (lhs, rhs) = hexagon_sides(r, &standard_duality_data(), true);
    lhs == rhs
}

/// `a f + b Id` on `X ⊗ X`.
pub fn braiding_from(a: &G, b: &G) -> MatrixMap {
    let d = standard_duality_data();
    d.f.scale(a).add(&MatrixMap::identity(2).scale(b))
}

/// Solution set of the hexagon identity over `R = a f + b Id`, with the linear
/// constraints found on `(u, v, w) = (a², ab, b²)`.
#[derive(Clone, Debug)]
pub struct BraidingSolutions {
    /// `(a, b)` pairs.
    pub parameters: Vec<(G, G)>,
    pub maps: Vec<MatrixMap>,
    /// Rows `(α, β, γ, δ)` meaning `α u + β v + γ w = δ`, in reduced form.
    pub linear_constraints: Vec<[G; 4]>,
}

fn solve_quadratic(a: &G, b: &G, c: &G) -> Result<Vec<G>> {
    let two = G::from_int(2);
    if a.is_zero() {
        if b.is_zero() {
            return Err(Error::Unsupported("degenerate quadratic".into()));
        }
        return Ok(vec![-(c / b)]);
    }
    let disc = b * b - &(&G::from_int(4) * &(a * c));
    let root = disc
        .sqrt()
        .ok_or_else(|| Error::Unsupported(format!("sqrt({disc}) is not in Q(i)")))?;
    let mut out = vec![(-b - &root) / (&two * a), (-b + &root) / (&two * a)];
    out.dedup();
    Ok(out)
}

/// Exact solution of the hexagon identity in the twisted category over the family `a f + b Id`.
pub fn braiding_solutions() -> Result<BraidingSolutions> {
    let d = standard_duality_data();
    let id1 = MatrixMap::identity(1);
    let id2 = MatrixMap::identity(2);
    let a = associator(true);
    let a_inv = a.inverse().expect("associator is invertible");
    // (R⊗Id) A (Id⊗R) A⁻¹ (i⊗Id) is quadratic in (a, b); collect the u, v, w parts
    let sandwich = |x: &MatrixMap, y: &MatrixMap| {
        x.tensor(&id1)
            .compose(&a)
            .compose(&id1.tensor(y))
            .compose(&a_inv)
            .compose(&d.i.tensor(&id1))
    };
    let m_u = sandwich(&d.f, &d.f);
    let m_v = sandwich(&d.f, &id2).add(&sandwich(&id2, &d.f));
    let m_w = sandwich(&id2, &id2);
    let target = a.compose(&id1.tensor(&d.i));
    let (rows, cols) = (target.matrix.rows(), target.matrix.cols());
    let mut system = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            system.push(vec![
                m_u.matrix.get(r, c).clone(),
                m_v.matrix.get(r, c).clone(),
                m_w.matrix.get(r, c).clone(),
                target.matrix.get(r, c).clone(),
            ]);
        }
    }
    let (rref, pivots) = M::from_rows(system).rref();
    if pivots.contains(&3) {
        return Ok(BraidingSolutions {
            parameters: vec![],
            maps: vec![],
            linear_constraints: vec![],
        });
    }
    let linear_constraints: Vec<[G; 4]> = (0..pivots.len())
        .map(|r| [0, 1, 2, 3].map(|c| rref.get(r, c).clone()))
        .collect();
    // particular solution plus kernel of the homogeneous part
    let mut particular = vec![G::zero(); 3];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = rref.get(r, 3).clone();
    }
    let kernel: Vec<Vec<G>> =
        Matrix::from_fn(pivots.len(), 3, |r, c| rref.get(r, c).clone()).kernel();
    let points: Vec<Vec<G>> = match kernel.as_slice() {
        [] => vec![particular.clone()],
        [k] => {
            // (p_v + λk_v)² = (p_u + λk_u)(p_w + λk_w)
            let (p, kk) = (&particular, k);
            let qa = &kk[1] * &kk[1] - &(&kk[0] * &kk[2]);
            let qb =
                &(&G::from_int(2) * &(&p[1] * &kk[1])) - &(&(&p[0] * &kk[2]) + &(&kk[0] * &p[2]));
            let qc = &p[1] * &p[1] - &(&p[0] * &p[2]);
            solve_quadratic(&qa, &qb, &qc)?
                .into_iter()
                .map(|l| (0..3).map(|j| &p[j] + &(&l * &kk[j])).collect())
                .collect()
        }
        _ => {
            return Err(Error::Unsupported(
                "solution family of dimension > 1".into(),
            ))
        }
    };
    let mut parameters = Vec::new();
    for pt in points {
        let (u, v, w) = (&pt[0], &pt[1], &pt[2]);
        if (v * v) != (u * w) {
            continue;
        }
        let pairs: Vec<(G, G)> = if u.is_zero() {
            match w.sqrt() {
                Some(b) if v.is_zero() => vec![(G::zero(), b.clone()), (G::zero(), -b)],
                _ => vec![],
            }
        } else {
            match u.sqrt() {
                Some(a) => vec![(a.clone(), v / &a), (-&a, -(v / &a))],
                None => vec![],
            }
        };
        for (a, b) in pairs {
            if !parameters.contains(&(a.clone(), b.clone())) {
                parameters.push((a, b));
            }
        }
    }
    parameters.sort_by(|x, y| (&y.0.im, &y.0.re).cmp(&(&x.0.im, &x.0.re)));
    let maps = parameters
        .iter()
        .map(|(a, b)| braiding_from(a, b))
        .collect();
    Ok(BraidingSolutions {
        parameters,
        maps,
        linear_constraints,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Category {
    O25,
    O1,
}

impl std::str::FromStr for Category {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O25" | "25" => Ok(Category::O25),
            "O1" | "1" => Ok(Category::O1),
            _ => Err(Error::UnknownName(format!("no category called {s:?}"))),
        }
    }
}

/// `e^{πi(-2h)}` for the weight `h` of `L_{2,1}` in the category.
pub fn braiding_phase(category: Category) -> Result<G> {
    let h = match category {
        Category::O25 => h_r1_c25(2),
        Category::O1 => h_r1_c1(2),
    };
    exp_pi_i(&(int(-2) * h))
}

/// `e^{πi x}` for `x ∈ (1/2) Z`.
fn exp_pi_i(x: &Rational) -> Result<G> {
    let k = x * int(2);
    if !is_integer(&k) {
        return Err(Error::Unsupported(format!(
            "e^(pi i {}) is not in Q(i)",
            format_rational(x)
        )));
    }
    let k: i64 = k
        .to_integer()
        .try_into()
        .map_err(|_| Error::Unsupported("exponent too large".into()))?;
    Ok(G::i_pow(k))
}

/// The braiding with `e ∘ R = e^{πi(-2h_{2,1})} e`: `i(f - Id)` for `O25`, `-i(f - Id)` for `O1`.
pub fn select_braiding(category: Category) -> Result<MatrixMap> {
    let phase = braiding_phase(category)?;
    let d = standard_duality_data();
    braiding_solutions()?
        .maps
        .into_iter()
        .find(|r| d.e.compose(r) == d.e.scale(&phase))
        .ok_or_else(|| Error::Domain("no braiding with the required phase".into()))
}

/// Roots of `q² + d q + 1 = 0`, i.e. `-q - 1/q = d`, in `Q(i)`.
pub fn q_from_dimension(d: &G) -> Result<Vec<G>> {
    let mut roots = solve_quadratic(&G::one(), d, &G::one())?;
    roots.sort_by(|x, y| (&x.re, &x.im).cmp(&(&y.re, &y.im)));
    roots.dedup();
    Ok(roots)
}

/// `e^{2πi h_{r,1}}` at `c ∈ {1, 25}`.
pub fn twist_scalar(c_label: u32, r: u32) -> Result<G> {
    if r == 0 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    let h = match c_label {
        25 => h_r1_c25(r as i64),
        1 => h_r1_c1(r as i64),
        _ => {
            return Err(Error::Unsupported(format!(
                "central charge {c_label} (expected 1 or 25)"
            )))
        }
    };
    exp_pi_i(&(int(2) * h))
}

/// Result of the monodromy integrality scan.
#[derive(Clone, Debug, PartialEq)]
pub struct ParityReport {
    pub r: u32,
    pub holds: bool,
    /// `(r', k, h_r + h_r' - h_k)` for the first non-integral case.
    pub witness: Option<(u32, u32, Rational)>,
}

impl ParityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "integral": self.holds,
            "witness": self.witness.as_ref().map(|(rp, k, v)| json!({"rp": rp, "k": k, "value": format_rational(v)})),
        })
    }
}

/// Whether `h_{r,1} + h_{r',1} - h_{k,1}` is an integer at `c = 1` for all
/// `r' ≤ r_range` and `k` in `fuse(r, r')`.
pub fn monodromy_parity_scan(r: u32, r_range: u32) -> Result<ParityReport> {
    if r == 0 || r_range == 0 {
        return Err(Error::Domain("r and r_range must be at least 1".into()));
    }
    for rp in 1..=r_range {
        for k in fuse(r, rp)?.labels() {
            let v = h_r1_c1(r as i64) + h_r1_c1(rp as i64) - h_r1_c1(k as i64);
            if !is_integer(&v) {
                return Ok(ParityReport {
                    r,
                    holds: false,
                    witness: Some((rp, k, v)),
                });
            }
        }
    }
    Ok(ParityReport {
        r,
        holds: true,
        witness: None,
    })
}

pub fn monodromy_parity_check(r: u32, r_range: u32) -> Result<bool> {
    Ok(monodromy_parity_scan(r, r_range)?.holds)
}

/// The two maps `(i ⊗ Id)` and `A (Id ⊗ i)` in `Hom(X, (X⊗X)⊗X)`, the rank of their
/// span, and the discriminator `D = d (e ⊗ Id) - (Id ⊗ e) A⁻¹` applied to each.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub rank: usize,
    pub on_first: MatrixMap,
    pub on_second: MatrixMap,
}

pub fn independence_check() -> IndependenceReport {
    let d = standard_duality_data();
    let id = MatrixMap::identity(1);
    let a = associator(true);
    let a_inv = a.inverse().expect("associator is invertible");
    let first = d.i.tensor(&id);
    let second = a.compose(&id.tensor(&d.i));
    let dim = d.e.compose(&d.i).as_scalar().expect("e ∘ i is a scalar");
    let disc =
        d.e.tensor(&id)
            .scale(&dim)
            .sub(&id.tensor(&d.e).compose(&a_inv));
    let stacked = M::from_fn(2, 16, |k, j| {
        let m = if k == 0 {
            &first.matrix
        } else {
            &second.matrix
        };
        m.get(j / 2, j % 2).clone()
    });
    IndependenceReport {
        rank: stacked.rank(),
        on_first: disc.compose(&first),
        on_second: disc.compose(&second),
    }
}

/// `s` with `e ∘ R = s · e`, if there is one.
pub fn e_eigenvalue(d: &DualityData, r: &MatrixMap) -> Option<G> {
    let er = d.e.compose(r);
    let s = er.matrix.get(0, 1) / d.e.matrix.get(0, 1);
    (er == d.e.scale(&s)).then_some(s)
}

/// Everything the `braiding` command reports.
pub fn braiding_report() -> Result<Value> {
    let sols = braiding_solutions()?;
    let d = standard_duality_data();
    let id = MatrixMap::identity(2);
    let (r61, r62) = rigidity_compositions(true);
    let (u61, u62) = rigidity_compositions(false);
    let mutual = sols.maps.len() == 2 && sols.maps[0].compose(&sols.maps[1]).is_identity();
    let o25 = select_braiding(Category::O25)?;
    let o1 = select_braiding(Category::O1)?;
    let scalar_json = |m: &MatrixMap| m.as_scalar().map(|s| s.to_json()).unwrap_or(Value::Null);
    Ok(json!({
        "solutions": sols.maps.iter().zip(&sols.parameters).map(|(m, (a, b))| json!({
            "a": a.to_json(),
            "b": b.to_json(),
            "matrix": m.to_json(),
            "hexagon": hexagon_check(m),
            "e_after_R": e_eigenvalue(&d, m).map(|s| s.to_json()),
        })).collect::<Vec<_>>(),
        "solution_count": sols.maps.len(),
        "linear_constraints": sols.linear_constraints.iter()
            .map(|r| r.iter().map(G::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "mutual_inverses": mutual,
        "e_after_i": scalar_json(&d.e.compose(&d.i)),
        "f_minus_id_squared_is_id": d.f.sub(&id).compose(&d.f.sub(&id)).is_identity(),
        "rigidity_twisted": [scalar_json(&r61), scalar_json(&r62)],
        "rigidity_untwisted": [scalar_json(&u61), scalar_json(&u62)],
        "select": {"O25": o25.to_json(), "O1": o1.to_json()},
        "select_product_is_id": o25.compose(&o1).is_identity(),
    }))
}
