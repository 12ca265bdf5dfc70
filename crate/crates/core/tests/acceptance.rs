//! Acceptance criteria, one line each. Expected values come from hand-derived
//! oracles in this file rather than from the library's own helpers.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use vir25::bpz::{
    derive_bpz, frobenius_solve, frobenius_solve_with_free, l21_ode, phi1, phi2, rigidity_scalar,
    verify_solution,
};
use vir25::category::{
    braiding_from, braiding_solutions, hexagon_check, monodromy_parity_check, q_from_dimension,
    rigidity_compositions, select_braiding, twist_scalar, Category,
};
use vir25::correlator::{pi_constraint_check, pi_recursion};
use vir25::fusion::{
    algebra_fusion_identity_check, centralizer_fusion, decompose_algebra, fuse,
    generic_centralizer_fusion, induce_centralizer, induce_w, AlgebraName, FusionVector,
};
use vir25::scalar::{int, rat, GaussianRational, Matrix, PuiseuxSeries, Rational};
use vir25::verma::{
    dual_basis, first_singular_level, gram_matrix, h_rs, singular_vector, HWModuleDescriptor,
    PBWVector, Partition,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

/// Coefficients of `(1 - x)^α · poly` through `x^order`, by the ratio recurrence.
fn binomial_times(alpha: Rational, poly: &[Rational], order: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for n in 1..=order {
        let prev = b[n - 1].clone();
        b.push(-prev * (&alpha - int(n as i64 - 1)) / int(n as i64));
    }
    (0..=order)
        .map(|n| {
            (0..poly.len().min(n + 1))
                .map(|k| &poly[k] * &b[n - k])
                .fold(Rational::zero(), |a, x| a + x)
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let r = rigidity_scalar().map_err(|e| e.to_string())?;
    // coefficient of x^3 in (1-x)^{5/2}(1+x) is -C(5/2,3) + C(5/2,2) = -5/16 + 15/8
    let offset = rat(1, 2) * (rat(-5, 16) + rat(15, 8));
    ensure(r.c0 == rat(1, 2), format!("c0 = {}", r.c0))?;
    ensure(r.c3 == rat(9, 32), format!("c3 = {}", r.c3))?;
    ensure(r.b == rat(-1, 2), format!("b = {}", r.b))?;
    ensure(
        r.rigidity_scalar == rat(1, 2),
        format!("R = {}", r.rigidity_scalar),
    )?;
    ensure(
        r.c3_offset == offset && offset == rat(25, 32),
        "x^{5/2} coefficient of psi",
    )?;
    ensure(r.rigidity_scalar == &offset - &r.c3, "R = 25/32 - c3")
}

fn criterion_2() -> Outcome {
    let m = HWModuleDescriptor::l_r1(&int(-1), 3).map_err(|e| e.to_string())?;
    let g = gram_matrix(&m, 3);
    let want = Matrix::from_rows(vec![vec![int(32), int(2)], vec![int(2), int(-55)]]);
    ensure(
        g.entries == want,
        format!("gram = {:?}", g.entries.to_rows()),
    )?;
    // adjugate over the determinant 32·(-55) - 4 = -1764
    let det = int(-1764);
    let inv = [
        [int(-55) / &det, int(-2) / &det],
        [int(-2) / &det, int(32) / &det],
    ];
    ensure(
        inv[0][0] == rat(55, 1764) && inv[0][1] == rat(1, 882) && inv[1][1] == rat(-8, 441),
        "oracle inverse",
    )?;
    let d = dual_basis(&m, 3).map_err(|e| e.to_string())?;
    let basis = [p(&[3]), p(&[2, 1])];
    for (i, dv) in d.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            ensure(
                dv.coeff(b) == GaussianRational::real(inv[i][j].clone()),
                format!("dual[{i}] at {b:?}"),
            )?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let m2 = HWModuleDescriptor::verma(int(25), rat(-5, 4));
    let m3 = HWModuleDescriptor::verma(int(25), int(-3));
    let s2 = singular_vector(&m2, 2).map_err(|e| e.to_string())?;
    let s3 = singular_vector(&m3, 3).map_err(|e| e.to_string())?;
    let want2 =
        PBWVector::from_rational_terms(m2.clone(), [(p(&[1, 1]), int(1)), (p(&[2]), int(1))]);
    let want3 = PBWVector::from_rational_terms(
        m3.clone(),
        [
            (p(&[1, 1, 1]), int(1)),
            (p(&[2, 1]), int(4)),
            (p(&[3]), int(2)),
        ],
    );
    ensure(s2 == vec![want2.clone()], format!("level 2: {s2:?}"))?;
    ensure(s3 == vec![want3.clone()], format!("level 3: {s3:?}"))?;
    // annihilated by L1 and L2
    for w in [&want2, &want3] {
        ensure(
            w.act(1).is_zero() && w.act(2).is_zero(),
            "positive modes kill the vector",
        )?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let m = HWModuleDescriptor::verma(int(25), int(-3));
    let pis = pi_recursion(&m, 2).map_err(|e| e.to_string())?;
    let pi1 = PBWVector::from_rational_terms(m.clone(), [(p(&[1]), rat(1, 2))]);
    let pi2 =
        PBWVector::from_rational_terms(m.clone(), [(p(&[1, 1]), rat(1, 4)), (p(&[2]), rat(1, 2))]);
    ensure(pis[1] == pi1, format!("pi1 = {}", pis[1]))?;
    ensure(pis[2] == pi2, format!("pi2 = {}", pis[2]))?;
    let sv = singular_vector(&m, 3).map_err(|e| e.to_string())?.remove(0);
    let v = pi_constraint_check();
    ensure(
        v == sv.scale_rational(&rat(-1, 4)),
        format!("constraint = {v}"),
    )?;
    let l31 = HWModuleDescriptor::l_r1(&int(-1), 3).map_err(|e| e.to_string())?;
    ensure(
        v.project(&l31).map_err(|e| e.to_string())?.is_zero(),
        "vanishes in L_{3,1}",
    )
}

fn criterion_5() -> Outcome {
    let ode = l21_ode();
    let derived = derive_bpz(&int(25), &rat(-5, 4), &rat(-5, 4)).map_err(|e| e.to_string())?;
    ensure(derived == ode, "derived ODE")?;
    let [a, b, c] = ode.polynomial_form();
    // x(1-x) times the displayed equation
    let x1x = vir25::scalar::Polynomial::from_ints(&[0, 1, -1]);
    ensure(a == x1x.mul(&x1x), format!("phi'' coefficient {a}"))?;
    ensure(
        b == x1x.mul(&vir25::scalar::Polynomial::from_ints(&[-1, 2])),
        format!("phi' coefficient {b}"),
    )?;
    ensure(
        c == vir25::scalar::Polynomial::constant(rat(-5, 4)),
        format!("phi coefficient {c}"),
    )?;

    let order = 20;
    let o1 = PuiseuxSeries::from_rationals(
        rat(-1, 2),
        binomial_times(rat(5, 2), &[int(1), int(1)], order),
        order,
    );
    let o2 = PuiseuxSeries::from_rationals(
        rat(5, 2),
        binomial_times(rat(-1, 2), &[int(1), rat(-1, 2)], order),
        order,
    );
    ensure(
        phi1(order) == o1 && phi2(order) == o2,
        "closed forms against the binomial oracle",
    )?;
    let s2 = frobenius_solve(&ode, 0, &rat(5, 2), order).map_err(|e| e.to_string())?;
    let s1 = frobenius_solve_with_free(&ode, 0, &rat(-1, 2), order, &rat(25, 16))
        .map_err(|e| e.to_string())?;
    for n in 0..=order {
        ensure(s1.coeff(n) == o1.coeff(n), format!("phi1 coefficient {n}"))?;
        ensure(s2.coeff(n) == o2.coeff(n), format!("phi2 coefficient {n}"))?;
    }
    let s0 = frobenius_solve(&ode, 0, &rat(-1, 2), order).map_err(|e| e.to_string())?;
    ensure(
        s0 == o1.sub(&o2.scale_rational(&rat(25, 16))),
        "default free coefficient",
    )?;
    for s in [&s0, &s1, &s2] {
        ensure(verify_solution(&ode, s).is_zero(), "non-zero residual")?;
    }
    Ok(())
}

/// Weyl characters of sl2: `χ_r = z^{r-1} + z^{r-3} + … + z^{1-r}`.
fn weyl(r: u32) -> BTreeMap<i64, i64> {
    (0..r).map(|k| (r as i64 - 1 - 2 * k as i64, 1)).collect()
}

fn weyl_decompose(a: u32, b: u32) -> FusionVector {
    let mut prod = BTreeMap::new();
    for (x, m) in weyl(a) {
        for (y, n) in weyl(b) {
            *prod.entry(x + y).or_insert(0) += m * n;
        }
    }
    let mut out = BTreeMap::new();
    while let Some((&top, &mult)) = prod.iter().rev().find(|(_, m)| **m != 0) {
        let r = (top + 1) as u32;
        out.insert(r, mult as u64);
        for (w, n) in weyl(r) {
            *prod.entry(w).or_insert(0) -= mult * n;
        }
    }
    FusionVector(out)
}

fn criterion_6() -> Outcome {
    ensure(
        fuse(2, 2).unwrap() == FusionVector(BTreeMap::from([(1, 1), (3, 1)])),
        "fuse(2,2)",
    )?;
    let n = 12;
    let f = |a, b| fuse(a, b).unwrap();
    for a in 1..=n {
        ensure(f(1, a) == FusionVector::unit(a), format!("unit on {a}"))?;
        for b in 1..=n {
            let ab = f(a, b);
            ensure(
                ab == weyl_decompose(a, b),
                format!("character oracle {a}x{b}"),
            )?;
            ensure(ab == f(b, a), format!("commutativity {a},{b}"))?;
            ensure(
                ab.dimension() == (a * b) as u64,
                format!("dimension {a},{b}"),
            )?;
            ensure(
                ab.labels().iter().all(|k| (k + 1) % 2 == (a + b) % 2),
                format!("parity {a},{b}"),
            )?;
            for c in 1..=n {
                let left = ab.mul(&FusionVector::unit(c));
                let right = FusionVector::unit(a).mul(&f(b, c));
                ensure(left == right, format!("associativity {a},{b},{c}"))?;
            }
        }
    }
    Ok(())
}

fn gi() -> GaussianRational {
    GaussianRational::i()
}

fn criterion_7() -> Outcome {
    let s = braiding_solutions().map_err(|e| e.to_string())?;
    let plus = braiding_from(&gi(), &-gi());
    let minus = braiding_from(&-gi(), &gi());
    ensure(
        s.maps == vec![plus.clone(), minus.clone()],
        format!("{} solutions", s.maps.len()),
    )?;
    ensure(
        plus.compose(&minus).is_identity(),
        "solutions are mutually inverse",
    )?;
    let mut rng = StdRng::seed_from_u64(0x25);
    let mut r = || rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    for _ in 0..20 {
        let (a, b) = (
            GaussianRational::new(r(), r()),
            GaussianRational::new(r(), r()),
        );
        if (a == gi() && b == -gi()) || (a == -gi() && b == gi()) {
            continue;
        }
        ensure(
            !hexagon_check(&braiding_from(&a, &b)),
            format!("hexagon holds off the solution set at {a}, {b}"),
        )?;
    }
    let (t1, t2) = rigidity_compositions(true);
    let (u1, u2) = rigidity_compositions(false);
    ensure(t1.is_identity() && t2.is_identity(), "twisted rigidity")?;
    let minus_one = Some(GaussianRational::from_int(-1));
    ensure(
        u1.as_scalar() == minus_one && u2.as_scalar() == minus_one,
        "untwisted rigidity",
    )?;
    ensure(
        q_from_dimension(&GaussianRational::from_int(2)).unwrap()
            == vec![GaussianRational::from_int(-1)],
        "q",
    )?;
    let o25 = select_braiding(Category::O25).map_err(|e| e.to_string())?;
    let o1 = select_braiding(Category::O1).map_err(|e| e.to_string())?;
    ensure(o25.compose(&o1).is_identity(), "O25 ∘ O1")
}

fn criterion_8() -> Outcome {
    for r in 1..=15u32 {
        let got = monodromy_parity_check(r, 15).map_err(|e| e.to_string())?;
        ensure(got == (r % 2 == 1), format!("parity check at r = {r}"))?;
        let theta = twist_scalar(25, r).map_err(|e| e.to_string())?;
        ensure(
            theta.is_one() == (r % 2 == 1),
            format!("twist at r = {r}: {theta}"),
        )?;
    }
    Ok(())
}

/// `N_{ab}^k` by the triangle rule.
fn triangle(a: u32, b: u32, k: u32) -> u64 {
    let ok = k > a.abs_diff(b) && k < a + b && (a + b + k) % 2 == 1;
    ok as u64
}

fn criterion_9() -> Outcome {
    let h25 = |r: u32| int(1) - rat(((r + 1) * (r + 1)) as i64, 4);
    for (n, s) in decompose_algebra(AlgebraName::W).take(10).enumerate() {
        let n = n as u32;
        ensure(
            s.multiplicity == 2 * n as u64 + 1 && s.labels == vec![2 * n + 1],
            format!("W summand {n}"),
        )?;
        ensure(
            s.lowest_weight == int(1 - ((n + 1) * (n + 1)) as i64),
            format!("W weight {n}"),
        )?;
    }
    for (n, s) in decompose_algebra(AlgebraName::X).take(10).enumerate() {
        let r = 2 * n as u32 + 2;
        ensure(
            s.multiplicity == r as u64 && s.labels == vec![r] && s.lowest_weight == h25(r),
            format!("X summand {n}"),
        )?;
    }
    for (n, s) in decompose_algebra(AlgebraName::M).take(10).enumerate() {
        let r = 2 * n as u32 + 1;
        ensure(
            s.multiplicity == 1 && s.labels == vec![r] && s.lowest_weight == h25(r),
            format!("M summand {n}"),
        )?;
    }
    for (n, s) in decompose_algebra(AlgebraName::I).take(10).enumerate() {
        let r = n as u32 + 1;
        ensure(
            s.labels == vec![r, r] && s.lowest_weight == int(1 - r as i64),
            format!("I summand {n}"),
        )?;
    }
    for r in 1..=20 {
        let want = if r % 2 == 1 {
            AlgebraName::W
        } else {
            AlgebraName::X
        };
        ensure(induce_w(r).unwrap() == (want, r), format!("induce_W({r})"))?;
    }
    for r in 1..=10 {
        for rp in 1..=10 {
            let want: BTreeMap<u32, u64> = (1..=20)
                .filter(|&k| triangle(r, rp, k) == 1)
                .map(|k| (k, 1))
                .collect();
            ensure(
                induce_centralizer(r, rp).unwrap().0 == want,
                format!("induce_centralizer({r},{rp})"),
            )?;
            ensure(
                centralizer_fusion(r, rp).unwrap().0 == want,
                format!("centralizer_fusion({r},{rp})"),
            )?;
        }
    }
    for r in 1..=6 {
        for rp in 1..=6 {
            ensure(
                algebra_fusion_identity_check(r, rp, 14).unwrap(),
                format!("algebra identity ({r},{rp})"),
            )?;
        }
    }
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..20 {
        let mut t = || {
            (
                rng.gen_range(1..=6),
                rng.gen_range(1..=6),
                rng.gen_range(1..=6),
            )
        };
        let (a, b) = (t(), t());
        let mut want = BTreeMap::new();
        for k in 1..=12 {
            for kp in 1..=12 {
                for l in 1..=12 {
                    let m = triangle(a.0, b.0, k) * triangle(a.1, b.1, kp) * triangle(a.2, b.2, l);
                    if m > 0 {
                        want.insert((k, kp, l), m);
                    }
                }
            }
        }
        ensure(
            generic_centralizer_fusion(a, b).unwrap() == want,
            format!("generic fusion {a:?} {b:?}"),
        )?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    // c = 25, 1, 1/2 at t = -1, 1, 3/4
    for t in [int(-1), int(1), rat(3, 4)] {
        for r in 1..=6i64 {
            for s in 1..=6 / r {
                let h = h_rs(&t, r, s).map_err(|e| e.to_string())?;
                let c = vir25::verma::central_charge_from_t(&t).map_err(|e| e.to_string())?;
                let g = gram_matrix(
                    &HWModuleDescriptor::verma(c.clone(), h.clone()),
                    (r * s) as u32,
                );
                ensure(
                    g.determinant().is_zero(),
                    format!("det at c = {c}, h_{{{r},{s}}} = {h}"),
                )?;
            }
        }
    }
    for r in 1..=8u32 {
        let m = HWModuleDescriptor::verma(int(25), h25_oracle(r));
        ensure(
            first_singular_level(&m, 8) == Some(r),
            format!("first singular level at r = {r}"),
        )?;
    }
    Ok(())
}

fn h25_oracle(r: u32) -> Rational {
    int(1) - rat(((r + 1) * (r + 1)) as i64, 4)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "rigidity scalar c0 = 1/2, c3 = 9/32, b = -1/2, R = 1/2",
            criterion_1,
        ),
        (
            "Gram matrix [[32, 2], [2, -55]] and dual basis",
            criterion_2,
        ),
        ("singular vectors at levels 2 and 3", criterion_3),
        ("pi recursion and the level-3 constraint", criterion_4),
        (
            "BPZ equation and Frobenius solutions through order 20",
            criterion_5,
        ),
        ("sl2 fusion ring for labels <= 12", criterion_6),
        (
            "braidings, twisted rigidity, q = -1, braid reversal",
            criterion_7,
        ),
        ("monodromy parity and twists for r <= 15", criterion_8),
        (
            "extension algebras, induction and centralizer fusion",
            criterion_9,
        ),
        (
            "vanishing Gram determinants and first singular levels",
            criterion_10,
        ),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {name} ({why})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
