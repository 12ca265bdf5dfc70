//! Golden values reproduced end to end. Used by `vir25 paper-suite`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::bpz::{
    frobenius_solve_with_free, gauge_transform, l21_ode, phi1, phi2, rigidity_scalar,
};
use crate::category::{
    braiding_solutions, hexagon_check, q_from_dimension, select_braiding, standard_duality_data,
    Category, MatrixMap,
};
use crate::correlator::{c3_computation, pi_constraint_check, pi_recursion, top_level_analysis};
use crate::error::Result;
use crate::fusion::{
    centralizer_fusion, decompose_algebra, fuse, induce_centralizer, induce_w, AlgebraName,
    FusionVector, Summand,
};
use crate::scalar::{int, rat, GaussianRational, Matrix, Polynomial, Rational, RationalFunction};
use crate::verma::{
    act_mode, central_charge_from_t, dual_basis, first_singular_level, gram_matrix, h_rs,
    singular_vector, HWModuleDescriptor, PBWVector, Partition,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

impl Check {
    pub fn to_json(&self) -> Value {
        json!({"name": self.name, "passed": self.passed})
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn vector(m: &Arc<HWModuleDescriptor>, terms: &[(&[u32], Rational)]) -> PBWVector {
    PBWVector::from_rational_terms(m.clone(), terms.iter().map(|(w, c)| (p(w), c.clone())))
}

fn l31() -> Result<Arc<HWModuleDescriptor>> {
    HWModuleDescriptor::l_r1(&int(-1), 3)
}

fn weights() -> Result<bool> {
    Ok(central_charge_from_t(&int(-1))? == int(25)
        && central_charge_from_t(&int(1))? == int(1)
        && h_rs(&int(-1), 2, 1)? == rat(-5, 4)
        && h_rs(&int(-1), 3, 1)? == int(-3)
        && (1..8).all(|r| h_rs(&int(1), r, 1).is_ok_and(|h| h == rat((r - 1) * (r - 1), 4))))
}

fn mode_action() -> Result<bool> {
    let m = HWModuleDescriptor::verma(int(25), int(-3));
    let v = act_mode(3, &PBWVector::monomial(m.clone(), p(&[3])));
    Ok(v == PBWVector::highest_weight(m).scale_rational(&int(32)))
}

fn gram() -> Result<bool> {
    let g = gram_matrix(&*l31()?, 3);
    Ok(g.basis == vec![p(&[3]), p(&[2, 1])]
        && g.entries == Matrix::from_rows(vec![vec![int(32), int(2)], vec![int(2), int(-55)]]))
}

fn singular() -> Result<bool> {
    let m2 = HWModuleDescriptor::verma(int(25), rat(-5, 4));
    let m3 = HWModuleDescriptor::verma(int(25), int(-3));
    let s2 = singular_vector(&m2, 2)?;
    let s3 = singular_vector(&m3, 3)?;
    Ok(
        s2 == vec![vector(&m2, &[(&[1, 1], int(1)), (&[2], int(1))])]
            && s3
                == vec![vector(
                    &m3,
                    &[(&[1, 1, 1], int(1)), (&[2, 1], int(4)), (&[3], int(2))],
                )]
            && first_singular_level(&m2, 6) == Some(2),
    )
}

fn duals() -> Result<bool> {
    let m = l31()?;
    let d = dual_basis(&m, 3)?;
    Ok(d == vec![
        vector(&m, &[(&[3], rat(55, 1764)), (&[2, 1], rat(1, 882))]),
        vector(&m, &[(&[3], rat(1, 882)), (&[2, 1], rat(-8, 441))]),
    ])
}

fn pairings() -> bool {
    let c = c3_computation(&rat(1, 2));
    c.pairing_l3 == rat(-11, 2) && c.pairing_l1l2 == rat(17, 4) && c.c3 == rat(9, 32)
}

fn pi_terms() -> Result<bool> {
    let m = HWModuleDescriptor::verma(int(25), int(-3));
    let pis = pi_recursion(&m, 2)?;
    let pi1 = vector(&m, &[(&[1], rat(1, 2))]);
    let pi2 = vector(&m, &[(&[1, 1], rat(1, 4)), (&[2], rat(1, 2))]);
    Ok(pis.len() == 3 && pis[1] == pi1 && pis[2] == pi2)
}

fn pi_constraint() -> bool {
    let v = pi_constraint_check();
    let c = |w: &[u32]| v.coeff(&p(w));
    c(&[1, 1, 1]) == GaussianRational::real(rat(-1, 4))
        && c(&[2, 1]) == GaussianRational::from_int(-1)
        && c(&[3]) == GaussianRational::real(rat(-1, 2))
}

fn top_level() -> Result<bool> {
    let rep = top_level_analysis(2)?;
    Ok(rep.candidate_weights == (int(0), int(-3))
        && rep.eigenvector_coefficients
            == vec![(int(0), (int(-1), int(-2))), (int(-3), (int(5), int(-2)))]
        && rep.verify())
}

fn ode() -> bool {
    let x1x = Polynomial::from_ints(&[0, 1, -1]);
    let [a, b, c] = &l21_ode().coefficients;
    a.as_polynomial() == Some(&x1x)
        && b.as_polynomial() == Some(&Polynomial::from_ints(&[-1, 2]))
        && *c == RationalFunction::new(Polynomial::constant(rat(-5, 4)), x1x)
}

fn hypergeometric() -> bool {
    let g = gauge_transform(&l21_ode(), &rat(5, 2), &rat(5, 2));
    let [a, b, c] = &g.coefficients;
    a.as_polynomial() == Some(&Polynomial::from_ints(&[0, 1, -1]))
        && b.as_polynomial() == Some(&Polynomial::from_ints(&[4, -8]))
        && c.as_polynomial() == Some(&Polynomial::from_ints(&[-10]))
}

fn frobenius() -> Result<bool> {
    let ode = l21_ode();
    let s2 = frobenius_solve_with_free(&ode, 0, &rat(5, 2), 10, &Rational::zero())?;
    let s1 = frobenius_solve_with_free(&ode, 0, &rat(-1, 2), 10, &rat(25, 16))?;
    Ok(s2 == phi2(10) && s1 == phi1(10))
}

fn rigidity() -> Result<bool> {
    let r = rigidity_scalar()?;
    Ok(r.c3 == rat(9, 32) && r.rigidity_scalar == rat(1, 2) && r.c3_offset == rat(25, 32))
}

fn fusion() -> Result<bool> {
    Ok(
        fuse(2, 2)? == FusionVector(BTreeMap::from([(1, 1), (3, 1)]))
            && fuse(1, 9)? == FusionVector::unit(9),
    )
}

fn decompositions() -> bool {
    let w: Vec<Summand> = decompose_algebra(AlgebraName::W).take(3).collect();
    let i: Vec<Summand> = decompose_algebra(AlgebraName::I).take(3).collect();
    let x = decompose_algebra(AlgebraName::X).next();
    let s = |m, l: Vec<u32>, h: Rational| Summand {
        multiplicity: m,
        labels: l,
        lowest_weight: h,
    };
    w == vec![
        s(1, vec![1], int(0)),
        s(3, vec![3], int(-3)),
        s(5, vec![5], int(-8)),
    ] && i
        == vec![
            s(1, vec![1, 1], int(0)),
            s(1, vec![2, 2], int(-1)),
            s(1, vec![3, 3], int(-2)),
        ]
        && x == Some(s(2, vec![2], rat(-5, 4)))
}

fn induction() -> Result<bool> {
    Ok(induce_w(4)? == (AlgebraName::X, 4)
        && induce_w(7)? == (AlgebraName::W, 7)
        && induce_centralizer(5, 1)? == FusionVector::unit(5)
        && centralizer_fusion(2, 2)? == FusionVector(BTreeMap::from([(1, 1), (3, 1)])))
}

fn duality() -> bool {
    let d = standard_duality_data();
    let id = MatrixMap::identity(2);
    d.e.compose(&d.i).as_scalar() == Some(GaussianRational::from_int(2))
        && d.f.sub(&id).compose(&d.f.sub(&id)).is_identity()
}

fn braidings() -> Result<bool> {
    let s = braiding_solutions()?;
    let i = GaussianRational::i();
    Ok(s.maps.len() == 2
        && s.parameters
            .iter()
            .all(|(a, b)| *b == -a.clone() && (a * b).is_one())
        && s.maps.iter().all(hexagon_check)
        && s.maps[0].compose(&s.maps[1]).is_identity()
        && s.parameters[0] == (i.clone(), -i))
}

fn selection() -> Result<bool> {
    let d = standard_duality_data();
    let i = GaussianRational::i();
    let o25 = select_braiding(Category::O25)?;
    let o1 = select_braiding(Category::O1)?;
    Ok(d.e.compose(&o25) == d.e.scale(&i) && d.e.compose(&o1) == d.e.scale(&-i))
}

fn q_values() -> Result<bool> {
    Ok(
        q_from_dimension(&GaussianRational::from_int(2))? == vec![GaussianRational::from_int(-1)]
            && q_from_dimension(&GaussianRational::from_int(-2))? == vec![GaussianRational::one()],
    )
}

/// Runs every golden check. Errors count as failures.
pub fn reproduction_suite() -> Vec<Check> {
    let ok = |r: Result<bool>| r.unwrap_or(false);
    vec![
        Check {
            name:
                "central charges and weights h_{2,1} = -5/4, h_{3,1} = -3, h^(1)_{r,1} = (r-1)^2/4",
            passed: ok(weights()),
        },
        Check {
            name: "L_3 L_{-3} v = 32 v at h = -3",
            passed: ok(mode_action()),
        },
        Check {
            name: "Gram matrix of L_{3,1} at level 3 is [[32, 2], [2, -55]]",
            passed: ok(gram()),
        },
        Check {
            name: "singular vectors L_{-1}^2 + L_{-2} and L_{-1}^3 + 4L_{-1}L_{-2} + 2L_{-3}",
            passed: ok(singular()),
        },
        Check {
            name: "dual basis 55/1764, 1/882, -8/441",
            passed: ok(duals()),
        },
        Check {
            name: "pairings -11/2 and 17/4, c3 = 9/32",
            passed: pairings(),
        },
        Check {
            name: "pi_1 = (1/2)L_{-1}pi_0, pi_2 = (1/4 L_{-1}^2 + 1/2 L_{-2})pi_0",
            passed: ok(pi_terms()),
        },
        Check {
            name: "pi_3 constraint -1/4 L_{-1}^3 - L_{-1}L_{-2} - 1/2 L_{-3}",
            passed: pi_constraint(),
        },
        Check {
            name: "top level of L_{2,1} x L_{2,1}: weights 0, -3 and eigencombinations",
            passed: ok(top_level()),
        },
        Check {
            name: "BPZ equation x(1-x)phi'' - (1-2x)phi' - 5/(4x(1-x)) phi = 0",
            passed: ode(),
        },
        Check {
            name: "hypergeometric gauge x(1-x)f'' + 4(1-2x)f' - 10f = 0",
            passed: hypergeometric(),
        },
        Check {
            name: "Frobenius solutions match phi_1 and phi_2 to order 10",
            passed: ok(frobenius()),
        },
        Check {
            name: "rigidity chain: c3 = 9/32, x^{5/2} coefficient 25/32, R = 1/2",
            passed: ok(rigidity()),
        },
        Check {
            name: "fuse(2,2) = L_{1,1} + L_{3,1}, fuse(1,9) = L_{9,1}",
            passed: ok(fusion()),
        },
        Check {
            name: "W(-1), I(-1), X summand tables",
            passed: decompositions(),
        },
        Check {
            name: "induction W(-1) x L_{r,1} and centralizer fusion",
            passed: ok(induction()),
        },
        Check {
            name: "e o i = 2 and (f - Id)^2 = Id",
            passed: duality(),
        },
        Check {
            name: "exactly two braidings, b = -a, ab = 1, mutually inverse",
            passed: ok(braidings()),
        },
        Check {
            name: "e o R = i e on O25 and -i e on O1",
            passed: ok(selection()),
        },
        Check {
            name: "q = -1 for d = 2 and q = 1 for d = -2",
            passed: ok(q_values()),
        },
    ]
}
