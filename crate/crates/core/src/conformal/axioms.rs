//! Sesquilinearity, skew-commutativity and the Jacobi identity for the
//! `λ`-bracket, exhaustively on basis elements or on a seeded sample.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::bracket::ConformalVector;
use super::{ConformalContext, Mask};
use crate::scalar::{binomial, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Sesquilinearity,
    Skew,
    Jacobi,
}

impl std::str::FromStr for Axiom {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "sesquilinearity" => Ok(Axiom::Sesquilinearity),
            "skew" => Ok(Axiom::Skew),
            "jacobi" => Ok(Axiom::Jacobi),
            _ => Err(crate::Error::Parse(format!("unknown axiom {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Sampling {
    /// All basis monomials (∂-power 0), all pairs or triples.
    Exhaustive,
    /// Random basis monomials with ∂-power at most 1.
    Random { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub context: String,
    pub axiom: Axiom,
    pub cases_checked: usize,
    /// The first violating case with both sides expanded.
    pub witness: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Polynomial in `λ`, `μ` with coefficients in `F[∂]Λ(V)`.
type Poly2 = BTreeMap<(usize, usize), ConformalVector>;

fn add2(p: &mut Poly2, key: (usize, usize), v: &ConformalVector, c: &ExactScalar) {
    let e = p.entry(key).or_default();
    e.add_scaled(v, c);
    if e.is_zero() {
        p.remove(&key);
    }
}

fn fmt2(p: &Poly2) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter().map(|((i, j), v)| format!("lambda^{i} mu^{j} [{v}]")).collect::<Vec<_>>().join(" + ")
}

fn sign(neg: bool) -> ExactScalar {
    ExactScalar::from_int(if neg { -1 } else { 1 })
}

fn parity(x: &ConformalVector) -> u32 {
    x.parity().unwrap_or(0)
}

impl ConformalContext {
    /// `[a_λ[b_μ c]]`, `[[a_λ b]_{λ+μ} c]` and `[b_μ[a_λ c]]`.
    fn jacobi_terms(&self, a: &ConformalVector, b: &ConformalVector, c: &ConformalVector) -> [Poly2; 3] {
        let one = ExactScalar::one();
        let mut lhs = Poly2::new();
        for (j, d) in self.bracket(b, c).coeffs().iter().enumerate() {
            for (i, e) in self.bracket(a, d).coeffs().iter().enumerate() {
                add2(&mut lhs, (i, j), e, &one);
            }
        }
        let mut first = Poly2::new();
        for (n, cn) in self.bracket(a, b).coeffs().iter().enumerate() {
            for (m, f) in self.bracket(cn, c).coeffs().iter().enumerate() {
                // λ^n (λ+μ)^m
                for i in 0..=m {
                    add2(&mut first, (n + i, m - i), f, &binomial(m as u32, i as u32));
                }
            }
        }
        let mut second = Poly2::new();
        for (n, g) in self.bracket(a, c).coeffs().iter().enumerate() {
            for (m, h) in self.bracket(b, g).coeffs().iter().enumerate() {
                add2(&mut second, (n, m), h, &one);
            }
        }
        [lhs, first, second]
    }

    /// `None` if the Jacobi identity holds on `(a, b, c)`, otherwise a description.
    pub fn jacobi_violation(&self, a: &ConformalVector, b: &ConformalVector, c: &ConformalVector) -> Option<String> {
        let [lhs, first, second] = self.jacobi_terms(a, b, c);
        let mut rhs = first;
        let s = sign(parity(a) * parity(b) % 2 == 1);
        for (k, v) in &second {
            add2(&mut rhs, *k, v, &s);
        }
        (lhs != rhs).then(|| {
            format!("a = {a}, b = {b}, c = {c}: [a_l[b_m c]] = {} but [[a_l b]_(l+m) c] +- [b_m[a_l c]] = {}", fmt2(&lhs), fmt2(&rhs))
        })
    }

    /// `None` if `[b_λ a] = −(−1)^{p(a)p(b)}[a_{−λ−∂} b]`.
    pub fn skew_violation(&self, a: &ConformalVector, b: &ConformalVector) -> Option<String> {
        let lhs = self.bracket(b, a);
        let rhs = self
            .bracket(a, b)
            .at_minus_lambda_minus_partial()
            .scale(&sign(parity(a) * parity(b) % 2 == 0));
        (lhs != rhs).then(|| format!("a = {a}, b = {b}: [b_l a] = {lhs} but -+[a_(-l-d) b] = {rhs}"))
    }

    /// `None` if `[∂a_λ b] = −λ[a_λ b]` and `[a_λ ∂b] = (∂+λ)[a_λ b]`.
    pub fn sesquilinearity_violation(&self, a: &ConformalVector, b: &ConformalVector) -> Option<String> {
        let base = self.bracket(a, b);
        let left = self.bracket(&a.partial_pow(1), b);
        let right = self.bracket(a, &b.partial_pow(1));
        let want_left = base.times_neg_lambda_pow(1);
        let want_right = base.times_partial_plus_lambda_pow(1);
        if left != want_left {
            return Some(format!("a = {a}, b = {b}: [da_l b] = {left} but -l[a_l b] = {want_left}"));
        }
        (right != want_right).then(|| format!("a = {a}, b = {b}: [a_l db] = {right} but (d+l)[a_l b] = {want_right}"))
    }
}

fn random_element(rng: &mut ChaCha8Rng, ctx: &ConformalContext) -> ConformalVector {
    let mask: Mask = rng.gen_range(0..=ctx.top());
    let d = rng.gen_range(0..=1);
    ConformalVector::basis(d, mask)
}

/// Runs one axiom over basis elements of `K_{N,q}`.
pub fn axioms_check(ctx: &ConformalContext, axiom: Axiom, sampling: Sampling) -> AxiomReport {
    let monos = ctx.monomials();
    let basis: Vec<ConformalVector> = monos.iter().map(|&a| ConformalVector::basis(0, a)).collect();
    let mut report = AxiomReport { context: ctx.to_string(), axiom, cases_checked: 0, witness: None };
    let mut check = |xs: &[&ConformalVector]| -> bool {
        report.cases_checked += 1;
        let w = match axiom {
            Axiom::Sesquilinearity => ctx.sesquilinearity_violation(xs[0], xs[1]),
            Axiom::Skew => ctx.skew_violation(xs[0], xs[1]),
            Axiom::Jacobi => ctx.jacobi_violation(xs[0], xs[1], xs[2]),
        };
        report.witness = w;
        report.witness.is_none()
    };
    match sampling {
        Sampling::Exhaustive => {
            'outer: for a in &basis {
                for b in &basis {
                    if axiom == Axiom::Jacobi {
                        for c in &basis {
                            if !check(&[a, b, c]) {
                                break 'outer;
                            }
                        }
                    } else if !check(&[a, b]) {
                        break 'outer;
                    }
                }
            }
        }
        Sampling::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let a = random_element(&mut rng, ctx);
                let b = random_element(&mut rng, ctx);
                let c = random_element(&mut rng, ctx);
                if !check(&[&a, &b, &c]) {
                    break;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_exhaustive() {
        let ctx = ConformalContext::identity(2).unwrap();
        for axiom in [Axiom::Sesquilinearity, Axiom::Skew, Axiom::Jacobi] {
            let r = axioms_check(&ctx, axiom, Sampling::Exhaustive);
            assert!(r.passed(), "{:?}: {:?}", axiom, r.witness);
        }
        assert_eq!(axioms_check(&ctx, Axiom::Jacobi, Sampling::Exhaustive).cases_checked, 64);
    }

    #[test]
    fn nondiagonal_form() {
        let q = "gram:[[0,1,0],[1,0,0],[0,0,2]]".parse().unwrap();
        let ctx = ConformalContext::new(q).unwrap();
        for axiom in [Axiom::Skew, Axiom::Jacobi] {
            let r = axioms_check(&ctx, axiom, Sampling::Exhaustive);
            assert!(r.passed(), "{:?}: {:?}", axiom, r.witness);
        }
    }

    #[test]
    fn corrupted_fails() {
        let ctx = ConformalContext::identity(2).unwrap().corrupted();
        assert!(!axioms_check(&ctx, Axiom::Skew, Sampling::Exhaustive).passed());
        assert!(!axioms_check(&ctx, Axiom::Jacobi, Sampling::Exhaustive).passed());
    }
}
