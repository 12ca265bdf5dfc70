//! Shapovalov form, Gram matrices, singular vectors and dual bases.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::module::{Actor, GTerms, HWModuleDescriptor, PBWVector, Terms};
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, GaussianRational, Matrix, Rational};

#[derive(Clone, PartialEq, Debug)]
pub struct GramMatrix {
    pub level: u32,
    pub basis: Vec<Partition>,
    pub entries: Matrix<Rational>,
}

impl GramMatrix {
    pub fn determinant(&self) -> Rational {
        self.entries.determinant()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "basis": self.basis.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            "entries": self.entries.to_rows().iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "determinant": format_rational(&self.determinant()),
        })
    }
}

/// `⟨v, L_{λ_k}…L_{λ_1} w⟩` for the monomial `λ` against `w`: the modes of
/// `L_{-λ}` are applied to `w` left to right as positive modes.
fn pair_monomial(actor: &mut Actor, lambda: &Partition, w: &Terms) -> Rational {
    let mut cur = w.clone();
    for p in lambda.word() {
        cur = actor.act_terms(p as i64, &cur);
        if cur.is_empty() {
            return Rational::zero();
        }
    }
    cur.get(&Partition::empty())
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// Bilinear contravariant form with `⟨v, v⟩ = 1` and `L_n` adjoint to `L_{-n}`.
pub fn contravariant_form(u: &PBWVector, w: &PBWVector) -> Result<GaussianRational> {
    let (mu, mw) = (u.module(), w.module());
    if mu.central_charge != mw.central_charge || mu.highest_weight != mw.highest_weight {
        return Err(Error::Contract(
            "pairing vectors of different highest-weight modules".into(),
        ));
    }
    let mut actor = Actor::new(mu);
    let mut total = GaussianRational::zero();
    for (lambda, a) in u.terms() {
        for (mu_p, b) in w.terms() {
            if lambda.level() != mu_p.level() {
                continue;
            }
            let val = pair_monomial(
                &mut actor,
                lambda,
                &Terms::from([(mu_p.clone(), Rational::one())]),
            );
            total += &(&(a * b) * &val);
        }
    }
    Ok(total)
}

pub fn gram_matrix(m: &HWModuleDescriptor, level: u32) -> GramMatrix {
    let basis = m.basis(level);
    let mut actor = Actor::new(m);
    let n = basis.len();
    let mut entries = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let w = Terms::from([(basis[j].clone(), Rational::one())]);
            let val = pair_monomial(&mut actor, &basis[i], &w);
            entries.set(j, i, val.clone());
            entries.set(i, j, val);
        }
    }
    GramMatrix {
        level,
        basis,
        entries,
    }
}

/// Vectors at `level` killed by `L_1` and `L_2`, each scaled so its `L(-1)^level`
/// coefficient is one whenever that coefficient is non-zero.
pub fn singular_vector(m: &Arc<HWModuleDescriptor>, level: u32) -> Result<Vec<PBWVector>> {
    if m.quotient.is_some() {
        return Err(Error::Contract(
            "singular_vector expects a Verma module".into(),
        ));
    }
    if level == 0 {
        return Err(Error::Domain("singular vectors live at level >= 1".into()));
    }
    let cols = Partition::all_of(level);
    let rows1 = Partition::all_of(level - 1);
    let rows2 = if level >= 2 {
        Partition::all_of(level - 2)
    } else {
        Vec::new()
    };
    let mut actor = Actor::new(m);
    let mut mat = Matrix::zeros(rows1.len() + rows2.len(), cols.len());
    for (j, lambda) in cols.iter().enumerate() {
        let w = Terms::from([(lambda.clone(), Rational::one())]);
        for (p, a) in actor.act_terms(1, &w) {
            let i = rows1
                .iter()
                .position(|q| *q == p)
                .expect("L_1 lowers the level by one");
            mat.set(i, j, a);
        }
        for (p, a) in actor.act_terms(2, &w) {
            let i = rows2
                .iter()
                .position(|q| *q == p)
                .expect("L_2 lowers the level by two");
            mat.set(rows1.len() + i, j, a);
        }
    }
    let top = Partition::ones(level as usize);
    let top_idx = cols.iter().position(|p| *p == top).unwrap();
    Ok(mat
        .kernel()
        .into_iter()
        .map(|mut k| {
            if !k[top_idx].is_zero() {
                let s = Rational::one() / k[top_idx].clone();
                k.iter_mut().for_each(|x| *x *= &s);
            }
            PBWVector::from_rational_terms(m.clone(), cols.iter().cloned().zip(k))
        })
        .collect())
}

/// Least level in `1..=max_level` carrying a singular vector of the Verma cover.
pub fn first_singular_level(m: &HWModuleDescriptor, max_level: u32) -> Option<u32> {
    let cover = m.verma_cover();
    // singular vectors sit in the radical, so a non-zero determinant rules a level out
    (1..=max_level).find(|&l| {
        gram_matrix(&cover, l).determinant().is_zero()
            && singular_vector(&cover, l).is_ok_and(|v| !v.is_empty())
    })
}

/// `b_λ* = Σ_μ (G⁻¹)_{μλ} L_{-μ} v`, so that `⟨b_λ*, L_{-μ} v⟩ = δ_{λμ}`.
pub fn dual_basis(m: &Arc<HWModuleDescriptor>, level: u32) -> Result<Vec<PBWVector>> {
    let g = gram_matrix(m, level);
    let inv = g.entries.inverse().ok_or_else(|| {
        Error::Degenerate(format!("contravariant form is degenerate at level {level}"))
    })?;
    Ok((0..g.basis.len())
        .map(|l| {
            let terms: GTerms = g
                .basis
                .iter()
                .enumerate()
                .map(|(mu, p)| (p.clone(), GaussianRational::real(inv.get(mu, l).clone())))
                .collect();
            PBWVector::new(m.clone(), terms)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn level_three_gram_in_quotient() {
        let m = HWModuleDescriptor::quotient(int(25), int(-3), 3).unwrap();
        let g = gram_matrix(&m, 3);
        assert_eq!(g.basis, vec![p(&[3]), p(&[2, 1])]);
        let want = Matrix::from_rows(vec![vec![int(32), int(2)], vec![int(2), int(-55)]]);
        assert_eq!(g.entries, want);
        assert_eq!(g.determinant(), int(-1764));
    }

    #[test]
    fn level_zero_is_normalized() {
        let m = HWModuleDescriptor::verma(rat(1, 3), rat(5, 7));
        assert_eq!(gram_matrix(&m, 0).entries, Matrix::identity(1));
    }

    #[test]
    fn level_two_degenerate_at_h21() {
        let m = HWModuleDescriptor::verma(int(25), rat(-5, 4));
        let g = gram_matrix(&m, 2);
        assert_eq!(g.entries.rank(), 1);
        assert!(dual_basis(&m, 2).is_err());
    }

    #[test]
    fn singular_vectors_match_known_forms() {
        let m = HWModuleDescriptor::verma(int(25), rat(-5, 4));
        let s = singular_vector(&m, 2).unwrap();
        let want =
            PBWVector::from_rational_terms(m.clone(), [(p(&[1, 1]), int(1)), (p(&[2]), int(1))]);
        assert_eq!(s, vec![want]);

        let m = HWModuleDescriptor::verma(int(25), int(-3));
        assert!(singular_vector(&m, 1).unwrap().is_empty());
        let s = singular_vector(&m, 3).unwrap();
        let want = PBWVector::from_rational_terms(
            m.clone(),
            [
                (p(&[1, 1, 1]), int(1)),
                (p(&[2, 1]), int(4)),
                (p(&[3]), int(2)),
            ],
        );
        assert_eq!(s, vec![want]);
    }

    #[test]
    fn dual_basis_values() {
        let m = HWModuleDescriptor::quotient(int(25), int(-3), 3).unwrap();
        let d = dual_basis(&m, 3).unwrap();
        assert_eq!(d[0].coeff(&p(&[3])), GaussianRational::real(rat(55, 1764)));
        assert_eq!(d[0].coeff(&p(&[2, 1])), GaussianRational::real(rat(1, 882)));
        assert_eq!(d[1].coeff(&p(&[3])), GaussianRational::real(rat(1, 882)));
        assert_eq!(
            d[1].coeff(&p(&[2, 1])),
            GaussianRational::real(rat(-8, 441))
        );
        for (i, b) in d.iter().enumerate() {
            for (j, q) in m.basis(3).into_iter().enumerate() {
                let val = contravariant_form(b, &PBWVector::monomial(m.clone(), q)).unwrap();
                assert_eq!(val, GaussianRational::from_int((i == j) as i64));
            }
        }
    }

    #[test]
    fn first_levels() {
        let m = HWModuleDescriptor::verma(int(25), rat(-5, 4));
        assert_eq!(first_singular_level(&m, 4), Some(2));
        let m = HWModuleDescriptor::verma(int(25), rat(17, 7));
        assert_eq!(first_singular_level(&m, 8), None);
    }
}
