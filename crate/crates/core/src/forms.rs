//! Differential superforms over `Λ(m,n)`.
//!
//! Forms are polynomials in `x_i, ξ_j, dx_i, dξ_j` where `dx_i` is odd and
//! `dξ_j` is even, with a single Koszul sign rule by total parity. They are
//! stored as [`SuperPoly`] values over the extended ambient
//!
//! * even generators `x_1..x_m, dξ_1..dξ_n` (only the `x_i` are truncated),
//! * odd generators `ξ_1..ξ_n, dx_1..dx_m`.
//!
//! The de Rham differential and Lie derivatives are derivations of this
//! algebra and are applied through [`SuperPoly::apply_derivation`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::poly::{format_terms, Ambient, Gen, GradingType, Monomial, SuperPoly, EXACT};
use crate::scalar::ExactScalar;
use crate::vfield::VectorField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperForm {
    base: Ambient,
    poly: SuperPoly,
}

pub fn extended_ambient(base: &Ambient) -> Ambient {
    Ambient::with_jet_vars(base.m + base.n, base.n + base.m, base.m)
}

/// Weights of the extended generators: `deg dv = deg v`.
pub fn extended_grading(t: &GradingType) -> GradingType {
    GradingType {
        even: t.even.iter().chain(&t.odd).copied().collect(),
        odd: t.odd.iter().chain(&t.even).copied().collect(),
    }
}

/// Embeds a function on the base into the form algebra (degree 0 forms).
pub fn embed(base: &Ambient, f: &SuperPoly) -> SuperPoly {
    let ext = extended_ambient(base);
    SuperPoly::from_terms(
        ext,
        f.jet(),
        f.terms().iter().map(|(m, c)| {
            let mut even = m.even.clone();
            even.resize(ext.m, 0);
            (Monomial { even, odd: m.odd }, c.clone())
        }),
    )
}

impl SuperForm {
    pub fn zero(base: Ambient) -> Self {
        SuperForm { base, poly: SuperPoly::zero(extended_ambient(&base), EXACT) }
    }

    pub fn function(base: Ambient, f: &SuperPoly) -> Self {
        SuperForm { base, poly: embed(&base, f) }
    }

    pub fn from_poly(base: Ambient, poly: SuperPoly) -> Result<Self> {
        extended_ambient(&base).check(poly.ambient())?;
        Ok(SuperForm { base, poly })
    }

    pub fn gen(base: Ambient, g: Gen) -> Self {
        Self::function(base, &SuperPoly::gen(base, EXACT, g))
    }

    /// `dx_i` (`Gen::Even(i)`) or `dξ_j` (`Gen::Odd(j)`).
    pub fn d_gen(base: Ambient, g: Gen) -> Self {
        let ext = extended_ambient(&base);
        let eg = match g {
            Gen::Even(i) => Gen::Odd(base.n + i),
            Gen::Odd(j) => Gen::Even(base.m + j),
        };
        SuperForm { base, poly: SuperPoly::gen(ext, EXACT, eg) }
    }

    pub fn base(&self) -> &Ambient {
        &self.base
    }

    pub fn poly(&self) -> &SuperPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        SuperForm { base: self.base, poly: self.poly.scale(s) }
    }

    /// Weighted degree with `deg dv = deg v`; `None` if mixed or zero.
    pub fn weighted_degree(&self, t: &GradingType) -> Option<i64> {
        self.poly.weighted_degree(&extended_grading(t))
    }

    /// Whether this nonzero form is homogeneous for `t`.
    pub fn is_homogeneous(&self, t: &GradingType) -> bool {
        self.weighted_degree(t).is_some()
    }

    fn d_images(&self) -> Vec<SuperPoly> {
        let ext = *self.poly.ambient();
        let (m, n) = (self.base.m, self.base.n);
        let mut images = Vec::with_capacity(ext.m + ext.n);
        for i in 0..m {
            images.push(SuperPoly::gen(ext, EXACT, Gen::Odd(n + i)));
        }
        for _ in 0..n {
            images.push(SuperPoly::zero(ext, EXACT));
        }
        for j in 0..n {
            images.push(SuperPoly::gen(ext, EXACT, Gen::Even(m + j)));
        }
        for _ in 0..m {
            images.push(SuperPoly::zero(ext, EXACT));
        }
        images
    }

    /// The de Rham differential.
    pub fn d(&self) -> Self {
        let images = self.d_images();
        SuperForm { base: self.base, poly: self.poly.apply_derivation(&images).expect("ambient") }
    }

    /// Lie derivative: the derivation of parity `p(X)` acting as `X` on
    /// functions and supercommuting with `d`, so `L_X(dv) = (−1)^{p(X)} d(X v)`.
    pub fn lie_derivative(&self, x: &VectorField) -> Result<Self> {
        self.base.check(x.ambient())?;
        let (m, n) = (self.base.m, self.base.n);
        let mut out = Self::zero(self.base);
        out.poly = out.poly.with_jet(jet_of(x, &self.poly));
        for (p, part) in x.split_parity().iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let sign = ExactScalar::from_int(if p == 1 { -1 } else { 1 });
            let coeff = |g: Gen| SuperForm::function(self.base, part.coeff(g));
            let dcoeff = |g: Gen| coeff(g).d().poly.scale(&sign);
            let mut images = Vec::with_capacity(2 * (m + n));
            for i in 0..m {
                images.push(coeff(Gen::Even(i)).poly);
            }
            for j in 0..n {
                images.push(dcoeff(Gen::Odd(j)));
            }
            for j in 0..n {
                images.push(coeff(Gen::Odd(j)).poly);
            }
            for i in 0..m {
                images.push(dcoeff(Gen::Even(i)));
            }
            let term = self.poly.apply_derivation(&images)?;
            out.poly.add_scaled(&term, &ExactScalar::one());
        }
        Ok(out)
    }

    /// Linear change of variables `x ↦ g_even·x`, `ξ ↦ g_odd·ξ`, with the
    /// differentials transformed alongside.
    pub fn pullback(&self, g_even: &ExactMatrix, g_odd: &ExactMatrix) -> Result<Self> {
        let (m, n) = (self.base.m, self.base.n);
        let block = |a: &ExactMatrix, b: &ExactMatrix| {
            let (ra, rb) = (a.rows(), b.rows());
            let mut out = ExactMatrix::zeros(ra + rb, ra + rb);
            for r in 0..ra {
                for c in 0..a.cols().min(ra) {
                    out.set(r, c, a.get(r, c).clone());
                }
            }
            for r in 0..rb {
                for c in 0..b.cols().min(rb) {
                    out.set(ra + r, ra + c, b.get(r, c).clone());
                }
            }
            out
        };
        if g_even.rows() != m || g_even.cols() != m || g_odd.rows() != n || g_odd.cols() != n {
            return Err(crate::error::dimension("substitution matrices do not match the ambient"));
        }
        let poly = self.poly.substitute_linear(&block(g_even, g_odd), &block(g_odd, g_even))?;
        Ok(SuperForm { base: self.base, poly })
    }

    /// Whether `self = c·other` for some scalar `c`; returns `c`.
    pub fn proportionality(&self, other: &Self) -> Option<ExactScalar> {
        if other.is_zero() {
            return self.is_zero().then(ExactScalar::zero);
        }
        let (m, c) = other.poly.terms().iter().next()?;
        let ratio = &self.poly.coeff(m) / c;
        (self.poly == other.poly.scale(&ratio)).then_some(ratio)
    }
}

fn jet_of(x: &VectorField, p: &SuperPoly) -> u32 {
    crate::poly::jet_dec(x.jet().min(p.jet()))
}

impl<'a> Add<&'a SuperForm> for &'a SuperForm {
    type Output = SuperForm;
    fn add(self, rhs: &SuperForm) -> SuperForm {
        SuperForm { base: self.base, poly: &self.poly + &rhs.poly }
    }
}

impl<'a> Sub<&'a SuperForm> for &'a SuperForm {
    type Output = SuperForm;
    fn sub(self, rhs: &SuperForm) -> SuperForm {
        SuperForm { base: self.base, poly: &self.poly - &rhs.poly }
    }
}

impl<'a> Mul<&'a SuperForm> for &'a SuperForm {
    type Output = SuperForm;
    fn mul(self, rhs: &SuperForm) -> SuperForm {
        SuperForm { base: self.base, poly: &self.poly * &rhs.poly }
    }
}

impl fmt::Display for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.base.m, self.base.n);
        let names = |g: Gen| match g {
            Gen::Even(i) if i < m => format!("x{}", i + 1),
            Gen::Even(i) => format!("dxi{}", i - m + 1),
            Gen::Odd(j) if j < n => format!("xi{}", j + 1),
            Gen::Odd(j) => format!("dx{}", j - n + 1),
        };
        write!(f, "{}", format_terms(self.poly.terms(), names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn lie_derivative_examples() {
        let a = Ambient::new(2, 0);
        let dx1 = SuperForm::d_gen(a, Gen::Even(0));
        let d1 = VectorField::partial(a, Gen::Even(0));
        assert!(dx1.lie_derivative(&d1).unwrap().is_zero());

        let x2d1 = VectorField::monomial(a, parse_poly("x2", a).unwrap(), Gen::Even(0));
        assert_eq!(dx1.lie_derivative(&x2d1).unwrap(), SuperForm::d_gen(a, Gen::Even(1)));

        // p = x1, q = x2: L_{p ∂_q}(dp dq) = dp dp = 0
        let sigma = &dx1 * &SuperForm::d_gen(a, Gen::Even(1));
        let x = VectorField::monomial(a, parse_poly("x1", a).unwrap(), Gen::Even(1));
        assert!(sigma.lie_derivative(&x).unwrap().is_zero());
    }

    #[test]
    fn d_squares_to_zero() {
        let a = Ambient::new(2, 2);
        let f = parse_poly("x1^2*xi1 + x2*xi1*xi2 + 3*x1*x2", a).unwrap();
        let w = SuperForm::function(a, &f);
        let dw = w.d();
        assert!(!dw.is_zero());
        assert!(dw.d().is_zero());
        let mixed = &dw * &SuperForm::d_gen(a, Gen::Odd(1));
        assert!(mixed.d().d().is_zero());
    }

    #[test]
    fn pullback_swap_conjugates_form() {
        let a = Ambient::new(0, 2);
        let dxi = |j| SuperForm::d_gen(a, Gen::Odd(j));
        // Σ c_ij dξ_i dξ_j with c = diag(1, 2)
        let two = ExactScalar::from_int(2);
        let w = &(&dxi(0) * &dxi(0)) + &(&dxi(1) * &dxi(1)).scale(&two);
        let swap = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        let pulled = w.pullback(&ExactMatrix::identity(0), &swap).unwrap();
        let expected = &(&dxi(0) * &dxi(0)).scale(&two) + &(&dxi(1) * &dxi(1));
        assert_eq!(pulled, expected);
        assert_eq!(w.pullback(&ExactMatrix::identity(0), &ExactMatrix::identity(2)).unwrap(), w);
    }
}
