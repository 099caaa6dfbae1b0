//! `E_q(1,6)`: the graded subalgebra of `K_q(1,6)` generated by
//! `g_{-1} + g_0 + (g_{-1}^* + g_1^+)`.
//!
//! A field `X` of degree 1 in `K_q(1,6)` is located through its `∂_t`
//! coefficient, which is `(2 − E)f` for the generating function `f` of `X`
//! (`E` the Euler operator in the `ξ`). Since `2 − E` acts by a nonzero scalar
//! on each `ξ`-degree, `g_{-1}^*` and `g_1^+` are the fields whose `∂_t`
//! coefficient lies in `span{tξ_i}` and `span{A + αA^*}` respectively.

use crate::conformal::{wedge, ConformalContext, Exterior, Mask};
use crate::error::{domain, Result};
use crate::linalg::{SparseEchelon, SparseVector};
use crate::poly::{Gen, Monomial, SuperPoly, EXACT};
use crate::qforms::QuadraticForm;
use crate::scalar::{rat, ExactScalar};
use crate::vfield::VectorField;

use super::generate::{generate_graded_subalgebra, GeneratedSubalgebra};
use super::graded::graded_component;
use super::AlgebraSpec;

#[derive(Clone, Debug)]
pub struct E16Construction {
    pub spec: AlgebraSpec,
    pub g1_dual_dim: usize,
    pub g1_plus_dim: usize,
    pub algebra: GeneratedSubalgebra,
}

/// The split form pairing `ξ_i` with `η_i = ξ_{3+i}`.
pub fn hyperbolic_form() -> QuadraticForm {
    let gram = (0..6)
        .map(|i| (0..6).map(|j| rat(i64::from((i + 3) % 6 == j), 1)).collect())
        .collect();
    QuadraticForm::from_gram(gram).expect("nondegenerate")
}

/// The sign of `α` for which [`listed_g1_plus`] is `span{A + αA^*}` under
/// [`hyperbolic_form`].
pub const SPLIT_LISTED_ALPHA: i64 = -1;

/// The ten functions spanning `g_1^+` in the split coordinates
/// `ξ_1, ξ_2, ξ_3, η_1, η_2, η_3` (bits 0..6).
pub fn listed_g1_plus() -> Vec<Exterior> {
    let v = |i: usize| Exterior::from([((1 as Mask) << i, ExactScalar::one())]);
    let xi = |i: usize| v(i - 1);
    let eta = |i: usize| v(i + 2);
    let w3 = |a: Exterior, b: Exterior, c: Exterior| wedge(&wedge(&a, &b), &c);
    let sum = |a: Exterior, b: Exterior, s: i64| {
        let mut out = a;
        for (m, c) in b {
            crate::conformal::add_to(&mut out, m, &(&c * &ExactScalar::from_int(s)));
        }
        out
    };
    let pair = |a: Exterior, b: Exterior| wedge(&a, &b);
    vec![
        w3(xi(1), xi(2), xi(3)),
        w3(xi(1), eta(2), eta(3)),
        w3(xi(2), eta(1), eta(3)),
        w3(xi(3), eta(1), eta(2)),
        wedge(&xi(1), &sum(pair(xi(2), eta(2)), pair(xi(3), eta(3)), 1)),
        wedge(&xi(2), &sum(pair(xi(1), eta(1)), pair(xi(3), eta(3)), 1)),
        wedge(&eta(3), &sum(pair(xi(1), eta(1)), pair(xi(2), eta(2)), -1)),
        wedge(&xi(3), &sum(pair(xi(1), eta(1)), pair(xi(2), eta(2)), 1)),
        wedge(&eta(2), &sum(pair(xi(1), eta(1)), pair(xi(3), eta(3)), -1)),
        wedge(&eta(1), &sum(pair(xi(2), eta(2)), pair(xi(3), eta(3)), -1)),
    ]
}

/// `{A + αA^* : A ∈ Λ^3}` (with the star of the `CK_{6,q}` generators),
/// one element per monomial `A`.
pub fn hodge_eigenfunctions(ctx: &ConformalContext, alpha: &ExactScalar) -> Vec<Exterior> {
    ctx.monomials()
        .into_iter()
        .filter(|a| a.count_ones() == 3)
        .map(|a| {
            let mut x = Exterior::from([(a, ExactScalar::one())]);
            for (m, c) in ctx.hodge_star_listed(a) {
                crate::conformal::add_to(&mut x, m, &(&c * alpha));
            }
            x
        })
        .collect()
}

/// The rank of [`listed_g1_plus`] and the signs `α = ±1` for which its span
/// is `span{A + αA^*}` under [`hyperbolic_form`].
pub fn listed_eigen_signs() -> (usize, Vec<i64>) {
    let ctx = ConformalContext::new(hyperbolic_form()).expect("nondegenerate");
    let vec_of = |x: &Exterior| -> SparseVector { x.iter().map(|(&m, c)| (m as usize, c.clone())).collect() };
    let mut span = SparseEchelon::new();
    for x in listed_g1_plus() {
        span.insert(vec_of(&x));
    }
    let signs = [1, -1]
        .into_iter()
        .filter(|&a| hodge_eigenfunctions(&ctx, &ExactScalar::from_int(a)).iter().all(|x| span.contains(&vec_of(x))))
        .collect();
    (span.rank(), signs)
}

fn function_poly(amb: crate::poly::Ambient, t_power: u16, x: &Exterior) -> SuperPoly {
    SuperPoly::from_terms(
        amb,
        EXACT,
        x.iter().map(|(&m, c)| (Monomial { even: vec![t_power], odd: m }, c.clone())),
    )
}

/// Fields of `basis` whose `∂_t` coefficient lies in the span of `targets`.
fn preimage(basis: &[VectorField], targets: &[SuperPoly]) -> Result<Vec<VectorField>> {
    let mut index = std::collections::BTreeMap::new();
    let mut row = |m: &Monomial| {
        let len = index.len();
        *index.entry(m.clone()).or_insert(len)
    };
    // columns: basis fields, then targets; rows: monomials of the ∂_t coefficient
    let mut rows: std::collections::BTreeMap<usize, SparseVector> = Default::default();
    let mut image = SparseEchelon::new();
    for (c, x) in basis.iter().enumerate() {
        let mut v = SparseVector::new();
        for (m, s) in x.coeff(Gen::Even(0)).terms() {
            let r = row(m);
            rows.entry(r).or_default().insert(c, s.clone());
            v.insert(r, s.clone());
        }
        image.insert(v);
    }
    if image.rank() != basis.len() {
        return Err(domain("the t-coefficient map is not injective on the component"));
    }
    for (k, f) in targets.iter().enumerate() {
        for (m, s) in f.terms() {
            let r = row(m);
            rows.entry(r).or_default().insert(basis.len() + k, -s.clone());
        }
    }
    let mut system = SparseEchelon::new();
    for r in rows.into_values() {
        system.insert(r);
    }
    let mut projected = SparseEchelon::new();
    for v in system.nullspace(basis.len() + targets.len()) {
        projected.insert(v.range(..basis.len()).map(|(&i, c)| (i, c.clone())).collect());
    }
    Ok(projected
        .rows()
        .map(|(_, r)| {
            let mut x = VectorField::zero(*basis[0].ambient(), EXACT);
            for (&i, c) in r {
                x.add_scaled(&basis[i], c);
            }
            x
        })
        .collect())
}

/// Generates `E_q(1,6)` inside `K_q(1,6)` from `g_{-1}`, `g_0`, `g_{-1}^*`
/// and the fields whose generating functions are `g1_plus` (cubic in `ξ`).
pub fn e16_from_functions(q: &QuadraticForm, g1_plus: &[Exterior]) -> Result<E16Construction> {
    if q.dim() != 6 {
        return Err(domain(format!("E(1,6) needs a form in 6 variables, got {}", q.dim())));
    }
    let spec = AlgebraSpec::K { k: 0, n: 6, q: q.clone() };
    let amb = spec.ambient();
    let t = spec.principal_grading();
    let g1 = graded_component(&spec, &t, 1)?.basis;
    let dual_targets: Vec<SuperPoly> = (0..6)
        .map(|i| function_poly(amb, 1, &Exterior::from([((1 as Mask) << i, ExactScalar::one())])))
        .collect();
    let plus_targets: Vec<SuperPoly> = g1_plus.iter().map(|x| function_poly(amb, 0, x)).collect();
    let g1_dual = preimage(&g1, &dual_targets)?;
    let g1_plus_fields = preimage(&g1, &plus_targets)?;

    let mut gens = Vec::new();
    for j in [-1, 0] {
        gens.extend(graded_component(&spec, &t, j)?.basis.into_iter().map(|x| (j, x)));
    }
    gens.extend(g1_dual.iter().chain(&g1_plus_fields).map(|x| (1, x.clone())));
    let algebra = generate_graded_subalgebra(&amb, &t, &gens, 1)?;
    Ok(E16Construction { spec, g1_dual_dim: g1_dual.len(), g1_plus_dim: g1_plus_fields.len(), algebra })
}

/// `E_q(1,6)` with `g_1^+ = span{A + αA^*}`; needs `α² = −1/det q`.
pub fn e16_subalgebra(q: &QuadraticForm, alpha: &ExactScalar) -> Result<E16Construction> {
    let ctx = ConformalContext::new(q.clone())?;
    let want = ExactScalar::from_rational(-(rat(1, 1) / q.det()));
    if alpha * alpha != want {
        return Err(domain(format!("alpha = {alpha} does not square to {want}")));
    }
    e16_from_functions(q, &hodge_eigenfunctions(&ctx, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected(c: &E16Construction) {
        let a = &c.algebra;
        assert_eq!(a.dims(-2), (1, 0));
        assert_eq!(a.dims(-1), (0, 6));
        assert_eq!(a.dims(0), (16, 0));
        assert_eq!(a.dims(1), (0, 16));
        assert_eq!((c.g1_dual_dim, c.g1_plus_dim), (6, 10));
    }

    #[test]
    fn split_form_with_alpha_one() {
        let q = QuadraticForm::diag_i64(&[1, 1, 1, 1, 1, -1]).unwrap();
        expected(&e16_subalgebra(&q, &ExactScalar::one()).unwrap());
        assert!(e16_subalgebra(&q, &ExactScalar::from_int(2)).is_err());
    }

    #[test]
    fn identity_form_over_gaussian_field() {
        let q = QuadraticForm::identity(6);
        let i = crate::scalar::FieldDescriptor::quadratic(-1).unwrap().sqrt_generator().unwrap();
        expected(&e16_subalgebra(&q, &i).unwrap());
    }

    #[test]
    fn all_cubics_generate_more() {
        let q = QuadraticForm::diag_i64(&[1, 1, 1, 1, 1, -1]).unwrap();
        let ctx = ConformalContext::new(q.clone()).unwrap();
        let cubics: Vec<Exterior> = ctx
            .monomials()
            .into_iter()
            .filter(|a| a.count_ones() == 3)
            .map(|a| Exterior::from([(a, ExactScalar::one())]))
            .collect();
        let c = e16_from_functions(&q, &cubics).unwrap();
        assert_eq!(c.g1_plus_dim, 20);
        assert_eq!(c.algebra.dims(1), (0, 26));
    }

    #[test]
    fn listed_elements_span_an_eigenspace() {
        assert_eq!(listed_eigen_signs(), (10, vec![SPLIT_LISTED_ALPHA]));
        expected(&e16_from_functions(&hyperbolic_form(), &listed_g1_plus()).unwrap());
    }
}
