//! The annihilation algebra `L(R)` of `R = K_{N,q}`, spanned by the modes
//! `a_{(m)}`, `a` a monomial of `Λ(V)`, `m ≥ 0`, with
//!
//! `[a_{(m)}, b_{(n)}] = Σ_j C(m,j) (a_{(j)}b)_{(m+n−j)}`
//!
//! and `(∂c)_{(k)} = −k·c_{(k−1)}`. Modes above the truncation order are
//! dropped and flagged.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bracket::ConformalVector;
use super::{degree, mono_name, ConformalContext, Mask};
use crate::error::{Error, Result};
use crate::families::{graded_component, AlgebraSpec};
use crate::scalar::{binomial, ExactScalar};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModeElement {
    terms: BTreeMap<(Mask, u32), ExactScalar>,
    /// Set when some mode above the truncation order was dropped.
    pub truncated: bool,
}

impl ModeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn mode(a: Mask, m: u32, c: ExactScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(a, m, &c);
        x
    }

    pub fn terms(&self) -> &BTreeMap<(Mask, u32), ExactScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, a: Mask, m: u32, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, m)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, m));
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ExactScalar) {
        for (&(a, m), x) in &other.terms {
            self.add_term(a, m, &(x * c));
        }
        self.truncated |= other.truncated;
    }

    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(a, _)| degree(*a) % 2);
        let p = it.next()?;
        it.all(|x| x == p).then_some(p)
    }

    /// Terms equal, ignoring the truncation flag.
    pub fn same_terms(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Display for ModeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, m), c)| format!("({c})*{}_({m})", mono_name(*a))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Degree of `a_{(m)}` in the grading matching the principal grading of
/// `K_q(1,N)`: `a_{(m)} ↔ t^m a`, of degree `2m + deg a − 2`.
pub fn mode_degree(a: Mask, m: u32) -> i64 {
    2 * m as i64 + degree(a) as i64 - 2
}

pub struct AnnihilationAlgebra<'a> {
    ctx: &'a ConformalContext,
    trunc: u32,
}

impl<'a> AnnihilationAlgebra<'a> {
    pub fn new(ctx: &'a ConformalContext, trunc: u32) -> Self {
        AnnihilationAlgebra { ctx, trunc }
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    /// Adds `c·v_{(k)}` to `out`, rewriting `(∂^d A)_{(k)}` as
    /// `(−1)^d k(k−1)…(k−d+1) A_{(k−d)}`.
    fn add_modes_of(&self, out: &mut ModeElement, v: &ConformalVector, k: u32, c: &ExactScalar) {
        for (b, x) in v.terms() {
            if b.d > k {
                continue;
            }
            let mut f = x * c;
            for i in 0..b.d {
                f = &f * &ExactScalar::from_int(-((k - i) as i64));
            }
            let m = k - b.d;
            if m > self.trunc {
                out.truncated = true;
            } else {
                out.add_term(b.mask, m, &f);
            }
        }
    }

    /// `[a_{(m)}, b_{(n)}]` for monomials `a`, `b`.
    pub fn bracket_modes(&self, a: Mask, m: u32, b: Mask, n: u32) -> ModeElement {
        let p = self.ctx.bracket_monomials(a, b);
        let mut out = ModeElement::zero();
        for j in 0..=m {
            let Some(c) = p.coeffs().get(j as usize) else { break };
            if c.is_zero() {
                continue;
            }
            // a_{(j)}b = j!·(coefficient of λ^j)
            let prod = c.scale(&crate::scalar::factorial(j));
            self.add_modes_of(&mut out, &prod, m + n - j, &binomial(m, j));
        }
        out
    }

    pub fn bracket(&self, x: &ModeElement, y: &ModeElement) -> ModeElement {
        let mut out = ModeElement::zero();
        out.truncated = x.truncated || y.truncated;
        for (&(a, m), cx) in &x.terms {
            for (&(b, n), cy) in &y.terms {
                out.add_scaled(&self.bracket_modes(a, m, b, n), &(cx * cy));
            }
        }
        out
    }

    /// `(even | odd)` dimensions of the degree-`j` components for `j` in `degrees`.
    pub fn graded_dims(&self, degrees: RangeInclusive<i64>) -> Result<Vec<(i64, (usize, usize))>> {
        let mut out = Vec::new();
        for j in degrees {
            let mut dims = (0, 0);
            for a in self.ctx.monomials() {
                let r = degree(a) as i64;
                let twice_m = j + 2 - r;
                if twice_m < 0 || twice_m % 2 != 0 {
                    continue;
                }
                if twice_m / 2 > self.trunc as i64 {
                    return Err(Error::Window(format!(
                        "degree {j} needs mode {} above the truncation {}",
                        twice_m / 2,
                        self.trunc
                    )));
                }
                if r % 2 == 0 {
                    dims.0 += 1;
                } else {
                    dims.1 += 1;
                }
            }
            out.push((j, dims));
        }
        Ok(out)
    }

    /// `None` if `[x,[y,z]] = [[x,y],z] + (−1)^{p(x)p(y)}[y,[x,z]]`.
    pub fn jacobi_violation(&self, x: &ModeElement, y: &ModeElement, z: &ModeElement) -> Option<String> {
        let lhs = self.bracket(x, &self.bracket(y, z));
        let mut rhs = self.bracket(&self.bracket(x, y), z);
        let odd = x.parity().unwrap_or(0) * y.parity().unwrap_or(0) == 1;
        rhs.add_scaled(&self.bracket(y, &self.bracket(x, z)), &ExactScalar::from_int(if odd { -1 } else { 1 }));
        (!lhs.same_terms(&rhs)).then(|| format!("x = {x}, y = {y}, z = {z}: [x,[y,z]] = {lhs} but {rhs}"))
    }

    /// Jacobi on `samples` random triples of basis modes whose indices sum to
    /// at most the truncation order, so no intermediate mode is dropped.
    /// Returns the number of triples checked and the first violation.
    pub fn sampled_jacobi(&self, samples: usize, seed: u64) -> (usize, Option<String>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let top = self.ctx.top();
        for i in 0..samples {
            let mut pick = |budget: u32| {
                let m = rng.gen_range(0..=budget);
                (ModeElement::mode(rng.gen_range(0..=top), m, ExactScalar::one()), m)
            };
            let (x, m1) = pick(self.trunc);
            let (y, m2) = pick(self.trunc - m1);
            let (z, _) = pick(self.trunc - m1 - m2);
            if let Some(w) = self.jacobi_violation(&x, &y, &z) {
                return (i + 1, Some(w));
            }
        }
        (samples, None)
    }

    /// Pairs `(m, n)` with `m, n ≤ max` and `m + n − 1` within the truncation
    /// where the modes of `L = −1` fail `[L_{(m)}, L_{(n)}] = (m−n) L_{(m+n−1)}`.
    pub fn witt_failures(&self, max: u32) -> Vec<(u32, u32)> {
        let l = |m: u32| ModeElement::mode(0, m, ExactScalar::from_int(-1));
        let mut bad = Vec::new();
        for m in 0..=max {
            for n in (0..=max).filter(|n| m + n <= self.trunc + 1) {
                let got = self.bracket(&l(m), &l(n));
                let want = if m + n == 0 {
                    ModeElement::zero()
                } else {
                    let mut w = l(m + n - 1);
                    w.terms.values_mut().for_each(|c| *c = &*c * &ExactScalar::from_int(m as i64 - n as i64));
                    w.terms.retain(|_, c| !c.is_zero());
                    w
                };
                if !got.same_terms(&want) {
                    bad.push((m, n));
                }
            }
        }
        bad
    }
}

/// One degree of the comparison between `L(K_{N,q})` and `K_q(1,N)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DimComparison {
    pub degree: i64,
    pub annihilation: (usize, usize),
    pub contact: (usize, usize),
}

/// Graded dimensions of the annihilation algebra next to those of the
/// contact algebra `K_q(1,N)` in its principal grading.
pub fn compare_with_contact(
    ctx: &ConformalContext,
    trunc: u32,
    degrees: RangeInclusive<i64>,
) -> Result<Vec<DimComparison>> {
    let ann = AnnihilationAlgebra::new(ctx, trunc).graded_dims(degrees)?;
    let spec = AlgebraSpec::K { k: 0, n: ctx.n(), q: ctx.form().clone() };
    let t = spec.principal_grading();
    ann.into_iter()
        .map(|(degree, annihilation)| {
            let contact = graded_component(&spec, &t, degree)?.dims;
            Ok(DimComparison { degree, annihilation, contact })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qforms::QuadraticForm;

    #[test]
    fn mode_examples() {
        let ctx = ConformalContext::identity(2).unwrap();
        let alg = AnnihilationAlgebra::new(&ctx, 6);
        let l = |m| ModeElement::mode(0, m, ExactScalar::from_int(-1));
        assert!(alg.bracket(&l(2), &l(1)).same_terms(&l(2)));
        assert!(alg.witt_failures(4).is_empty());
        // [a_(0), b_(0)] = (a_(0) b)_(0)
        let x = alg.bracket_modes(0b01, 0, 0b10, 0);
        let direct = {
            let mut out = ModeElement::zero();
            alg.add_modes_of(&mut out, &ctx.nth_product(&ConformalVector::basis(0, 1), &ConformalVector::basis(0, 2), 0), 0, &ExactScalar::one());
            out
        };
        assert_eq!(x, direct);
    }

    #[test]
    fn graded_dims_and_jacobi() {
        let ctx = ConformalContext::identity(2).unwrap();
        let alg = AnnihilationAlgebra::new(&ctx, 4);
        let dims = alg.graded_dims(-3..=1).unwrap();
        assert_eq!(dims, vec![(-3, (0, 0)), (-2, (1, 0)), (-1, (0, 2)), (0, (2, 0)), (1, (0, 2))]);
        assert!(alg.graded_dims(-2..=10).is_err());
        let (n, w) = alg.sampled_jacobi(200, 7);
        assert_eq!(n, 200);
        assert!(w.is_none(), "{w:?}");
    }

    #[test]
    fn matches_contact_algebra() {
        for n in [2, 4] {
            let ctx = ConformalContext::new(QuadraticForm::diag_i64(&[1, 2, -1, 3][..n]).unwrap()).unwrap();
            for row in compare_with_contact(&ctx, 4, -2..=3).unwrap() {
                assert_eq!(row.annihilation, row.contact, "N = {n}, degree {}", row.degree);
            }
        }
    }
}
