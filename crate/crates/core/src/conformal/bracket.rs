//! Elements of `F[∂]Λ(V)` and the `λ`-bracket
//!
//! `[A_λ B] = (r/2 − 1)∂(AB) + (−1)^r ½ Σ_j (i_{a_j}A)(i_{b_j}B) + λ((r+s)/2 − 2)AB`,
//!
//! `r = deg A`, `s = deg B`, extended by sesquilinearity
//! `[∂a_λ b] = −λ[a_λ b]`, `[a_λ ∂b] = (∂+λ)[a_λ b]`.

use std::collections::BTreeMap;
use std::fmt;

use super::{add_to, degree, mono_name, wedge, ConformalContext, Exterior, Mask};
use crate::scalar::{binomial, factorial, ExactScalar};

/// `∂^d·A` for a monomial `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis {
    pub d: u32,
    pub mask: Mask,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            0 => write!(f, "{}", mono_name(self.mask)),
            1 => write!(f, "d*{}", mono_name(self.mask)),
            d => write!(f, "d^{d}*{}", mono_name(self.mask)),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConformalVector {
    terms: BTreeMap<Basis, ExactScalar>,
}

impl ConformalVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(d: u32, mask: Mask) -> Self {
        Self::term(d, mask, ExactScalar::one())
    }

    pub fn term(d: u32, mask: Mask, c: ExactScalar) -> Self {
        let mut v = Self::zero();
        v.add_term(Basis { d, mask }, &c);
        v
    }

    /// `∂^d x` for `x ∈ Λ(V)`.
    pub fn from_exterior(x: &Exterior, d: u32) -> Self {
        let mut v = Self::zero();
        for (&mask, c) in x {
            v.add_term(Basis { d, mask }, c);
        }
        v
    }

    pub fn add_term(&mut self, b: Basis, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(b).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ExactScalar) {
        for (b, x) in &other.terms {
            self.add_term(*b, &(x * c));
        }
    }

    pub fn terms(&self) -> &BTreeMap<Basis, ExactScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// `∂^k` applied to the element.
    pub fn partial_pow(&self, k: u32) -> Self {
        ConformalVector { terms: self.terms.iter().map(|(b, c)| (Basis { d: b.d + k, ..*b }, c.clone())).collect() }
    }

    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|b| degree(b.mask) % 2);
        let p = it.next()?;
        it.all(|x| x == p).then_some(p)
    }

    /// Largest power of `∂` occurring (0 for the zero element).
    pub fn max_partial(&self) -> u32 {
        self.terms.keys().map(|b| b.d).max().unwrap_or(0)
    }
}

impl std::ops::Add<&ConformalVector> for &ConformalVector {
    type Output = ConformalVector;

    fn add(self, rhs: &ConformalVector) -> ConformalVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &ExactScalar::one());
        out
    }
}

impl std::ops::Sub<&ConformalVector> for &ConformalVector {
    type Output = ConformalVector;

    fn sub(self, rhs: &ConformalVector) -> ConformalVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &ExactScalar::from_int(-1));
        out
    }
}

impl fmt::Display for ConformalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c})*{b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ_n λ^n c_n`; no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaPoly {
    coeffs: Vec<ConformalVector>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<ConformalVector>) -> Self {
        while coeffs.last().is_some_and(ConformalVector::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[ConformalVector] {
        &self.coeffs
    }

    /// Coefficient of `λ^n`.
    pub fn coeff(&self, n: usize) -> ConformalVector {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn add_at(&mut self, n: usize, v: &ConformalVector, c: &ExactScalar) {
        if self.coeffs.len() <= n {
            self.coeffs.resize(n + 1, ConformalVector::zero());
        }
        self.coeffs[n].add_scaled(v, c);
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(ConformalVector::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ExactScalar) {
        for (n, v) in other.coeffs.iter().enumerate() {
            self.add_at(n, v, c);
        }
        let taken = std::mem::take(self);
        *self = taken.normalized();
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// `(−λ)^k·P`.
    pub fn times_neg_lambda_pow(&self, k: u32) -> Self {
        let sign = ExactScalar::from_int(if k % 2 == 0 { 1 } else { -1 });
        let mut out = Self::zero();
        for (n, v) in self.coeffs.iter().enumerate() {
            out.add_at(n + k as usize, v, &sign);
        }
        out.normalized()
    }

    /// `(∂+λ)^l·P`.
    pub fn times_partial_plus_lambda_pow(&self, l: u32) -> Self {
        let mut out = Self::zero();
        for (n, v) in self.coeffs.iter().enumerate() {
            for i in 0..=l {
                out.add_at(n + i as usize, &v.partial_pow(l - i), &binomial(l, i));
            }
        }
        out.normalized()
    }

    /// `P(−λ−∂) = Σ_n (−λ−∂)^n c_n`, with `∂` acting on the coefficients.
    pub fn at_minus_lambda_minus_partial(&self) -> Self {
        let mut out = Self::zero();
        for (n, v) in self.coeffs.iter().enumerate() {
            let n = n as u32;
            for i in 0..=n {
                // C(n,i) (−λ)^i (−∂)^{n−i}
                let sign = if n % 2 == 0 { 1 } else { -1 };
                out.add_at(i as usize, &v.partial_pow(n - i), &(&binomial(n, i) * &ExactScalar::from_int(sign)));
            }
        }
        out.normalized()
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(n, v)| match n {
                0 => format!("[{v}]"),
                1 => format!("lambda*[{v}]"),
                _ => format!("lambda^{n}*[{v}]"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl ConformalContext {
    /// `[A_λ B]` for monomials `A`, `B`.
    pub fn bracket_monomials(&self, a: Mask, b: Mask) -> LambdaPoly {
        let (r, s) = (degree(a) as i64, degree(b) as i64);
        let one = |m: Mask| Exterior::from([(m, ExactScalar::one())]);
        let ab = wedge(&one(a), &one(b));
        let half = ExactScalar::from_ratio(1, 2);

        let mut c0 = ConformalVector::from_exterior(&ab, 1).scale(&ExactScalar::from_ratio(r - 2, 2));
        let mut contracted = Exterior::new();
        for j in 0..self.n() {
            let ia = self.contraction(&self.unit(j), a);
            if ia.is_empty() {
                continue;
            }
            let ib = self.contraction(self.dual_vector(j), b);
            for (m, c) in wedge(&ia, &ib) {
                add_to(&mut contracted, m, &c);
            }
        }
        let sign = ExactScalar::from_int(if r % 2 == 0 { 1 } else { -1 });
        c0.add_scaled(&ConformalVector::from_exterior(&contracted, 0), &(&sign * &half));

        let mut lam = ExactScalar::from_ratio(r + s - 4, 2);
        if self.is_corrupted() {
            lam = &lam * &ExactScalar::from_ratio(3, 2);
        }
        let c1 = ConformalVector::from_exterior(&ab, 0).scale(&lam);
        LambdaPoly::from_coeffs(vec![c0, c1])
    }

    /// `[x_λ y]`, bilinear and sesquilinear.
    pub fn bracket(&self, x: &ConformalVector, y: &ConformalVector) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let base = self.bracket_monomials(bx.mask, by.mask);
                if base.is_zero() {
                    continue;
                }
                let full = base.times_partial_plus_lambda_pow(by.d).times_neg_lambda_pow(bx.d);
                out.add_scaled(&full, &(cx * cy));
            }
        }
        out
    }

    /// The `n`-th product `x_{(n)}y = n!·(coefficient of λ^n)`.
    pub fn nth_product(&self, x: &ConformalVector, y: &ConformalVector, n: u32) -> ConformalVector {
        self.bracket(x, y).coeff(n as usize).scale(&factorial(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(d: u32, mask: Mask, c: (i64, i64)) -> ConformalVector {
        ConformalVector::term(d, mask, ExactScalar::from_ratio(c.0, c.1))
    }

    #[test]
    fn bracket_examples() {
        let ctx = ConformalContext::identity(3).unwrap();
        let one = ConformalVector::basis(0, 0);
        // [1_λ 1] = −∂1 − 2λ·1
        let b = ctx.bracket(&one, &one);
        assert_eq!(b, LambdaPoly::from_coeffs(vec![v(1, 0, (-1, 1)), v(0, 0, (-2, 1))]));
        // [1_λ ξ1] = −∂ξ1 − (3/2)λξ1
        let x1 = ConformalVector::basis(0, 0b001);
        assert_eq!(ctx.bracket(&one, &x1), LambdaPoly::from_coeffs(vec![v(1, 1, (-1, 1)), v(0, 1, (-3, 2))]));
        // [ξ1_λ ξ2] = −½∂(ξ1ξ2) − λξ1ξ2, [ξ1_λ ξ1] = −½
        let x2 = ConformalVector::basis(0, 0b010);
        assert_eq!(ctx.bracket(&x1, &x2), LambdaPoly::from_coeffs(vec![v(1, 0b011, (-1, 2)), v(0, 0b011, (-1, 1))]));
        assert_eq!(ctx.bracket(&x1, &x1), LambdaPoly::from_coeffs(vec![v(0, 0, (-1, 2))]));
    }

    #[test]
    fn nth_products_and_sesquilinearity() {
        let ctx = ConformalContext::identity(2).unwrap();
        let one = ConformalVector::basis(0, 0);
        assert_eq!(ctx.nth_product(&one, &one, 1), v(0, 0, (-2, 1)));
        assert_eq!(ctx.nth_product(&one, &one, 0), v(1, 0, (-1, 1)));
        assert!(ctx.nth_product(&one, &one, 5).is_zero());
        // [∂1_λ 1] = λ(∂ + 2λ)1
        let d1 = one.partial_pow(1);
        assert_eq!(ctx.bracket(&d1, &one), LambdaPoly::from_coeffs(vec![ConformalVector::zero(), v(1, 0, (1, 1)), v(0, 0, (2, 1))]));
    }

    #[test]
    fn skew_on_virasoro() {
        let ctx = ConformalContext::identity(1).unwrap();
        let one = ConformalVector::basis(0, 0);
        let p = ctx.bracket(&one, &one);
        assert_eq!(p.at_minus_lambda_minus_partial().scale(&ExactScalar::from_int(-1)), p);
    }
}
