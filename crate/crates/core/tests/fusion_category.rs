use proptest::prelude::*;

use num_traits::One;
use vir25::category::{
    braiding_from, braiding_solutions, hexagon_check, independence_check, q_from_dimension,
    rigidity_compositions_with, scaled_duality_data, twist_scalar, CocycleTwist, MatrixMap,
};
use vir25::fusion::{algebra_character, fuse, tensor_l21_structure, AlgebraName, FusionVector};
use vir25::scalar::{int, rat, GaussianRational};

fn gauss() -> impl Strategy<Value = GaussianRational> {
    ((-9i64..=9, 1i64..=4), (-9i64..=9, 1i64..=4))
        .prop_map(|((a, b), (c, d))| GaussianRational::new(rat(a, b), rat(c, d)))
}

proptest! {
    #[test]
    fn fusion_is_associative_and_graded(a in 1u32..=20, b in 1u32..=20, c in 1u32..=20) {
        let ab_c = fuse(a, b).unwrap().mul(&FusionVector::unit(c));
        let a_bc = FusionVector::unit(a).mul(&fuse(b, c).unwrap());
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(ab_c.dimension(), (a * b * c) as u64);
        prop_assert!(ab_c.labels().iter().all(|k| (k + a + b + c) % 2 == 0));
    }

    #[test]
    fn off_family_braidings_fail_the_hexagon(a in gauss(), b in gauss()) {
        let i = GaussianRational::i();
        prop_assume!(!((a == i && b == -i.clone()) || (a == -i.clone() && b == i)));
        prop_assert!(!hexagon_check(&braiding_from(&a, &b)));
    }

    #[test]
    fn rescaled_duality_changes_nothing(l in gauss()) {
        prop_assume!(!num_traits::Zero::is_zero(&l));
        let d = scaled_duality_data(&l);
        let (x, y) = rigidity_compositions_with(&d, true);
        prop_assert!(x.is_identity() && y.is_identity());
        prop_assert_eq!(d.e.compose(&d.i).as_scalar(), Some(GaussianRational::from_int(2)));
    }

    #[test]
    fn q_roots_solve_the_quadratic(n in -6i64..=6) {
        let d = GaussianRational::from_int(n);
        if let Ok(qs) = q_from_dimension(&d) {
            for q in qs {
                prop_assert_eq!(-(&q + &q.inv().unwrap()), d.clone());
            }
        }
    }
}

#[test]
fn structure_of_l21_products() {
    for r in 2..=10 {
        let t = tensor_l21_structure(r).unwrap();
        assert_eq!(t.exact_sequence, Some((r + 1, r - 1)));
        assert_eq!(t.result.labels(), vec![r - 1, r + 1]);
    }
}

#[test]
fn algebra_characters_are_partial() {
    let ch = algebra_character(AlgebraName::W, &int(-3), 5, 6).unwrap();
    assert!(ch.partial);
    assert_eq!(ch.summands.len(), 2);
    let ch = algebra_character(AlgebraName::I, &int(-100), 2, 4).unwrap();
    // second summand: (L^(1)_{2,1} ⊗ L^(25)_{2,1}), lowest weight 1/4 - 5/4 = -1
    assert_eq!(ch.summands[1].1.leading_exponent(), &int(-1));
    assert!("nonsense".parse::<AlgebraName>().is_err());
}

#[test]
fn category_details() {
    assert!(CocycleTwist::is_cocycle());
    let rep = independence_check();
    assert_eq!(rep.rank, 2);
    assert_eq!(braiding_solutions().unwrap().linear_constraints.len(), 2);
    assert!(twist_scalar(1, 2).unwrap() == GaussianRational::i());
    assert!(twist_scalar(25, 5).unwrap().is_one());
    assert!(MatrixMap::identity(3).is_identity());
}
