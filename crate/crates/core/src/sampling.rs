//! Seeded random elements of `Λ(m,n)` and `W(m,n)`, and sampled super Jacobi
//! checks for the bracket of vector fields and the Poisson bracket of `H(2k,n)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Result};
use crate::families::h_bracket;
use crate::poly::{Ambient, Monomial, Parity, SuperPoly};
use crate::scalar::ExactScalar;
use crate::vfield::VectorField;

const TERMS: usize = 3;

/// A parity-homogeneous polynomial with up to three terms of x-degree at most
/// `max_degree` (and at least `min_degree`), small nonzero integer coefficients.
pub fn random_poly(
    rng: &mut impl Rng,
    amb: Ambient,
    jet: u32,
    parity: Parity,
    min_degree: u32,
    max_degree: u32,
) -> SuperPoly {
    let mut p = SuperPoly::zero(amb, jet);
    if amb.n == 0 && parity == 1 {
        return p;
    }
    for _ in 0..TERMS {
        let mut mono = Monomial::one(&amb);
        loop {
            mono.odd = if amb.n == 0 { 0 } else { rng.gen_range(0..1u32 << amb.n) };
            if mono.parity() == parity {
                break;
            }
        }
        let total = rng.gen_range(0..=max_degree);
        for _ in 0..total {
            if amb.m > 0 {
                mono.even[rng.gen_range(0..amb.m)] += 1;
            }
        }
        if mono.x_degree(&amb) + mono.odd_degree() < min_degree {
            continue;
        }
        let mut c = rng.gen_range(-3..=3i64);
        if c == 0 {
            c = 1;
        }
        p.add_term(mono, ExactScalar::from_int(c));
    }
    p
}

/// A random vector field of the given parity.
pub fn random_field(rng: &mut impl Rng, amb: Ambient, jet: u32, parity: Parity) -> VectorField {
    let coeffs = (0..amb.m + amb.n)
        .map(|dir| {
            let p = if dir < amb.m { parity } else { 1 - parity };
            random_poly(rng, amb, jet, p, 0, jet.min(3))
        })
        .collect();
    VectorField::new(amb, coeffs).expect("one coefficient per direction")
}

/// Outcome of a sampled identity check: triples checked and the first violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledOutcome {
    pub checked: usize,
    pub witness: Option<String>,
}

fn sign(px: Parity, py: Parity) -> ExactScalar {
    ExactScalar::from_int(if px * py == 1 { -1 } else { 1 })
}

/// Doubles the `∂_{x_1}` coefficient: a linear map that breaks Jacobi when
/// composed with the bracket.
fn distort_field(x: VectorField) -> VectorField {
    let amb = *x.ambient();
    let mut coeffs = x.coeffs().to_vec();
    coeffs[0] = coeffs[0].scale(&ExactScalar::from_int(2));
    VectorField::new(amb, coeffs).expect("same shape").with_jet(x.jet())
}

/// Doubles the terms containing `x_1`.
fn distort_poly(f: SuperPoly) -> SuperPoly {
    let mut out = f.clone();
    for (m, c) in f.terms() {
        if m.even.first().is_some_and(|&e| e > 0) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Super Jacobi `[X,[Y,Z]] = [[X,Y],Z] + (−1)^{p(X)p(Y)}[Y,[X,Z]]` on random
/// parity-homogeneous triples of `W(m,n)` at jet order `jet`.
pub fn jacobi_w(amb: Ambient, jet: u32, samples: usize, seed: u64, corrupt: bool) -> Result<SampledOutcome> {
    if jet < 2 {
        return Err(domain("Jacobi needs jet order at least 2"));
    }
    if amb.m == 0 && corrupt {
        return Err(domain("the negative control needs an even variable"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let br = |a: &VectorField, b: &VectorField| -> Result<VectorField> {
        let c = a.bracket(b)?;
        Ok(if corrupt { distort_field(c) } else { c })
    };
    for i in 0..samples {
        let ps: [Parity; 3] = std::array::from_fn(|_| rng.gen_range(0..2));
        let [x, y, z] = ps.map(|p| random_field(&mut rng, amb, jet, p));
        let lhs = br(&x, &br(&y, &z)?)?;
        let mut rhs = br(&br(&x, &y)?, &z)?;
        rhs.add_scaled(&br(&y, &br(&x, &z)?)?, &sign(ps[0], ps[1]));
        if lhs != rhs {
            return Ok(SampledOutcome {
                checked: i + 1,
                witness: Some(format!("X = {x}, Y = {y}, Z = {z}: [X,[Y,Z]] − RHS = {}", lhs.sub(&rhs)?)),
            });
        }
    }
    Ok(SampledOutcome { checked: samples, witness: None })
}

/// Super Jacobi for the Poisson bracket of `H(2k,n)` on random triples of
/// functions without constant term, at jet order `jet`.
pub fn jacobi_h(k: usize, n: usize, jet: u32, samples: usize, seed: u64, corrupt: bool) -> Result<SampledOutcome> {
    if jet < 2 {
        return Err(domain("Jacobi needs jet order at least 2"));
    }
    if k == 0 && corrupt {
        return Err(domain("the negative control needs an even variable"));
    }
    let amb = Ambient::new(2 * k, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let br = |a: &SuperPoly, b: &SuperPoly| -> Result<SuperPoly> {
        let c = h_bracket(a, b, k, n)?;
        Ok(if corrupt { distort_poly(c) } else { c })
    };
    for i in 0..samples {
        let ps: [Parity; 3] = std::array::from_fn(|_| rng.gen_range(0..2));
        let [f, g, h] = ps.map(|p| random_poly(&mut rng, amb, jet, p, 1, jet.min(4)));
        let lhs = br(&f, &br(&g, &h)?)?;
        let mut rhs = br(&br(&f, &g)?, &h)?;
        rhs.add_scaled(&br(&g, &br(&f, &h)?)?, &sign(ps[0], ps[1]));
        if lhs != rhs {
            return Ok(SampledOutcome {
                checked: i + 1,
                witness: Some(format!("f = {f}, g = {g}, h = {h}: [f,[g,h]] − RHS = {}", &lhs - &rhs)),
            });
        }
    }
    Ok(SampledOutcome { checked: samples, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_jacobi_and_control() {
        let amb = Ambient::new(1, 2);
        assert_eq!(jacobi_w(amb, 4, 40, 1, false).unwrap().witness, None);
        assert!(jacobi_w(amb, 4, 40, 1, true).unwrap().witness.is_some());
    }

    #[test]
    fn h_jacobi_and_control() {
        assert_eq!(jacobi_h(1, 2, 4, 40, 3, false).unwrap().witness, None);
        assert!(jacobi_h(1, 2, 4, 40, 3, true).unwrap().witness.is_some());
    }

    #[test]
    fn random_poly_is_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for p in [0, 1] {
            let f = random_poly(&mut rng, Ambient::new(2, 3), 4, p, 1, 4);
            assert!(f.is_zero() || f.parity() == Some(p));
        }
    }
}
