//! `H(2k,n)` realized on functions: `Λ(2k,n)/F·1` with the Poisson bracket
//!
//! `[f,g] = Σ_i (∂_{p_i}f ∂_{q_i}g − ∂_{q_i}f ∂_{p_i}g) − (−1)^{p(f)} Σ_i ∂_{ξ_i}f ∂_{ξ_{n−i+1}}g`,
//!
//! and the Hamiltonian vector fields `H_f` with `H_f(g) = [f,g]`.

use std::collections::BTreeMap;

use crate::error::{dimension, domain, Result};
use crate::forms::SuperForm;
use crate::linalg::{ExactMatrix, SparseEchelon, SparseVector};
use crate::poly::{jet_dec, Ambient, Gen, Monomial, SuperPoly, EXACT};
use crate::scalar::ExactScalar;
use crate::vfield::VectorField;

fn check(f: &SuperPoly, k: usize, n: usize) -> Result<()> {
    let amb = f.ambient();
    if amb.m != 2 * k || amb.n != n {
        return Err(dimension(format!("expected ambient ({}|{n}), got ({}|{})", 2 * k, amb.m, amb.n)));
    }
    Ok(())
}

/// Coefficients `c_v` with `[f, g] = Σ_v c_v ∂_v g` (before dropping constants).
fn coefficients(f: &SuperPoly, k: usize, n: usize) -> Vec<SuperPoly> {
    let amb = *f.ambient();
    let mut coeffs = vec![SuperPoly::zero(amb, jet_dec(f.jet())); 2 * k + n];
    for i in 0..k {
        coeffs[k + i] = f.partial_unchecked(Gen::Even(i));
        coeffs[i] = -&f.partial_unchecked(Gen::Even(k + i));
    }
    let [even, odd] = f.split_parity();
    for i in 0..n {
        let target = 2 * k + (n - 1 - i);
        // −(−1)^{p(f)} ∂_{ξ_i} f
        let de = even.partial_unchecked(Gen::Odd(i));
        let dodd = odd.partial_unchecked(Gen::Odd(i));
        coeffs[target] = &dodd - &de;
    }
    coeffs
}

/// The bracket of `Λ(2k,n)/F·1`; the constant term of the result is dropped.
pub fn h_bracket(f: &SuperPoly, g: &SuperPoly, k: usize, n: usize) -> Result<SuperPoly> {
    check(f, k, n)?;
    check(g, k, n)?;
    let mut out = g.apply_derivation(&coefficients(f, k, n))?;
    let amb = *out.ambient();
    let one = Monomial::one(&amb);
    let c = out.coeff(&one);
    out.add_term(one, -c);
    Ok(out)
}

/// `H_f`, the vector field with `H_f(g) = [f,g]` for every `g`.
pub fn hamiltonian_field(f: &SuperPoly, k: usize, n: usize) -> Result<VectorField> {
    check(f, k, n)?;
    VectorField::new(*f.ambient(), coefficients(f, k, n))
}

/// Monomials of `Λ(2k,n)` of total degree `1..=max_degree`.
pub fn low_degree_monomials(k: usize, n: usize, max_degree: u32) -> Vec<SuperPoly> {
    let amb = Ambient::new(2 * k, n);
    let t = crate::poly::GradingType::principal(2 * k, n);
    let mut out = Vec::new();
    for d in 1..=max_degree as i64 {
        for m in crate::poly::monomials_of_weight(&amb, &t, d).expect("positive weights") {
            out.push(SuperPoly::term(amb, EXACT, m, ExactScalar::one()));
        }
    }
    out
}

/// The sign `ε` with `H_{[f,g]} = ε [H_f, H_g]`, determined on all pairs of
/// monomials up to the given degree; an error if no single sign works.
pub fn hamiltonian_sign(k: usize, n: usize, max_degree: u32) -> Result<i64> {
    let basis = low_degree_monomials(k, n, max_degree);
    let mut sign: Option<i64> = None;
    for f in &basis {
        let hf = hamiltonian_field(f, k, n)?;
        for g in &basis {
            let hg = hamiltonian_field(g, k, n)?;
            let lhs = hamiltonian_field(&h_bracket(f, g, k, n)?, k, n)?;
            let rhs = hf.bracket(&hg)?;
            if lhs.is_zero() && rhs.is_zero() {
                continue;
            }
            let s = if lhs == rhs {
                1
            } else if lhs == rhs.scale(&ExactScalar::from_int(-1)) {
                -1
            } else {
                return Err(domain(format!("H_[f,g] is not ±[H_f,H_g] for f = {f}, g = {g}")));
            };
            if sign.is_some_and(|x| x != s) {
                return Err(domain("the sign relating the two brackets is not constant"));
            }
            sign = Some(s);
        }
    }
    sign.ok_or_else(|| domain("no nonzero brackets in the sample"))
}

/// The symmetric matrix `c` such that every `H_f` preserves
/// `Σ dp_i dq_i + Σ c_ij dξ_i dξ_j`, solved for over a spanning set of
/// Hamiltonians up to the given degree.
pub fn hamiltonian_invariant_form(k: usize, n: usize, max_degree: u32) -> Result<ExactMatrix> {
    let amb = Ambient::new(2 * k, n);
    // unknowns: 0 = coefficient a of Σ dp dq, then u_ij (i ≤ j) of dξ_i dξ_j
    let mut pieces = vec![SuperForm::zero(amb)];
    for i in 0..k {
        pieces[0] = &pieces[0]
            + &(&SuperForm::d_gen(amb, Gen::Even(i)) * &SuperForm::d_gen(amb, Gen::Even(k + i)));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push((i, j));
            pieces.push(&SuperForm::d_gen(amb, Gen::Odd(i)) * &SuperForm::d_gen(amb, Gen::Odd(j)));
        }
    }
    let mut system = SparseEchelon::new();
    for f in low_degree_monomials(k, n, max_degree) {
        let hf = hamiltonian_field(&f, k, n)?;
        let mut rows: BTreeMap<Monomial, SparseVector> = BTreeMap::new();
        for (c, w) in pieces.iter().enumerate() {
            for (m, s) in w.lie_derivative(&hf)?.poly().terms() {
                rows.entry(m.clone()).or_default().insert(c, s.clone());
            }
        }
        for r in rows.into_values() {
            system.insert(r);
        }
    }
    let sols = system.nullspace(pieces.len());
    let sol = match sols.as_slice() {
        [only] => only,
        _ => return Err(domain(format!("expected a unique invariant form, found {}", sols.len()))),
    };
    let a = sol.get(&0).cloned().ok_or_else(|| domain("invariant form has no symplectic part"))?;
    let a_inv = a.inv().expect("nonzero");
    let half = ExactScalar::from_ratio(1, 2);
    let mut c = ExactMatrix::zeros(n, n);
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let u = sol.get(&(idx + 1)).cloned().unwrap_or_default() * &a_inv;
        if i == j {
            c.set(i, i, u);
        } else {
            let h = &u * &half;
            c.set(i, j, h.clone());
            c.set(j, i, h);
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str, k: usize, n: usize) -> SuperPoly {
        parse_poly(s, Ambient::new(2 * k, n)).unwrap()
    }

    #[test]
    fn bracket_examples() {
        // k = 1: x1 = p1, x2 = q1
        let pq = p("x1*x2", 1, 0);
        let p1 = p("x1", 1, 0);
        // ∂_p(pq)∂_q(p) − ∂_q(pq)∂_p(p) = 0 − p
        assert_eq!(h_bracket(&pq, &p1, 1, 0).unwrap(), p("-x1", 1, 0));
        // [p1, p2] with k = 2
        assert!(h_bracket(&p("x1", 2, 0), &p("x2", 2, 0), 2, 0).unwrap().is_zero());
        // [p, q] = 1 is dropped
        assert!(h_bracket(&p1, &p("x2", 1, 0), 1, 0).unwrap().is_zero());
        assert!(h_bracket(&p1, &p("x1", 2, 0), 1, 0).is_err());
    }

    #[test]
    fn field_realizes_bracket() {
        let f = p("x1*xi1 + x2^2*xi2", 1, 2);
        let g = p("x1*x2*xi1*xi2 + xi2 + x2", 1, 2);
        let hf = hamiltonian_field(&f, 1, 2).unwrap();
        let full = g.apply_derivation(hf.coeffs()).unwrap();
        let mut dropped = full.clone();
        let one = Monomial::one(full.ambient());
        dropped.add_term(one.clone(), -full.coeff(&one));
        assert_eq!(dropped, h_bracket(&f, &g, 1, 2).unwrap());
    }

    #[test]
    fn sign_and_invariant_form() {
        assert_eq!(hamiltonian_sign(1, 2, 3).unwrap(), 1);
        let c = hamiltonian_invariant_form(1, 2, 3).unwrap();
        assert!(c.is_symmetric());
        assert!(!c.determinant().unwrap().is_zero());
    }
}
