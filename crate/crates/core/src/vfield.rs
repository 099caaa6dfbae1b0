//! Vector fields `Σ P_i ∂/∂x_i + Σ Q_j ∂/∂ξ_j` on `Λ(m,n)`, i.e. elements of `W(m,n)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{dimension, Result};
use crate::linalg::SparseVector;
use crate::poly::{jet_dec, jet_min, Ambient, Gen, GradingType, Monomial, Parity, SuperPoly, EXACT};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    amb: Ambient,
    /// Coefficients of `∂/∂x_1..∂/∂x_m` followed by `∂/∂ξ_1..∂/∂ξ_n`.
    coeffs: Vec<SuperPoly>,
}

/// Index of the direction `∂/∂g` in the coefficient list.
pub fn direction(amb: &Ambient, g: Gen) -> usize {
    match g {
        Gen::Even(i) => i,
        Gen::Odd(j) => amb.m + j,
    }
}

pub fn direction_gen(amb: &Ambient, dir: usize) -> Gen {
    if dir < amb.m {
        Gen::Even(dir)
    } else {
        Gen::Odd(dir - amb.m)
    }
}

impl VectorField {
    pub fn zero(amb: Ambient, jet: u32) -> Self {
        VectorField { amb, coeffs: vec![SuperPoly::zero(amb, jet); amb.m + amb.n] }
    }

    pub fn new(amb: Ambient, coeffs: Vec<SuperPoly>) -> Result<Self> {
        if coeffs.len() != amb.m + amb.n {
            return Err(dimension("one coefficient per direction is required"));
        }
        for c in &coeffs {
            amb.check(c.ambient())?;
        }
        Ok(VectorField { amb, coeffs })
    }

    /// `f·∂/∂g`.
    pub fn monomial(amb: Ambient, f: SuperPoly, g: Gen) -> Self {
        let mut x = Self::zero(amb, f.jet());
        x.coeffs[direction(&amb, g)] = f;
        x
    }

    pub fn partial(amb: Ambient, g: Gen) -> Self {
        Self::monomial(amb, SuperPoly::one(amb, EXACT), g)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    pub fn coeffs(&self) -> &[SuperPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, g: Gen) -> &SuperPoly {
        &self.coeffs[direction(&self.amb, g)]
    }

    pub fn jet(&self) -> u32 {
        self.coeffs.iter().map(SuperPoly::jet).min().unwrap_or(EXACT)
    }

    pub fn with_jet(&self, jet: u32) -> Self {
        VectorField { amb: self.amb, coeffs: self.coeffs.iter().map(|c| c.with_jet(jet)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperPoly::is_zero)
    }

    /// Parity of each term `f ∂_v`: `p(f) + p(v)`.
    fn term_parities(&self) -> impl Iterator<Item = Parity> + '_ {
        self.coeffs.iter().enumerate().flat_map(move |(dir, c)| {
            let pv = direction_gen(&self.amb, dir).parity();
            c.terms().keys().map(move |m| (m.parity() + pv) % 2)
        })
    }

    /// Parity if homogeneous (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.term_parities();
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn split_parity(&self) -> [VectorField; 2] {
        let mut out = [Self::zero(self.amb, self.jet()), Self::zero(self.amb, self.jet())];
        for (dir, c) in self.coeffs.iter().enumerate() {
            let pv = direction_gen(&self.amb, dir).parity() as usize;
            let [even, odd] = c.split_parity();
            out[pv].coeffs[dir] = even;
            out[1 - pv].coeffs[dir] = odd;
        }
        out
    }

    /// Weighted degree of `f ∂_v` is `deg f − deg v`; `None` if mixed or zero.
    pub fn weighted_degree(&self, t: &GradingType) -> Option<i64> {
        let mut degs = self.coeffs.iter().enumerate().flat_map(|(dir, c)| {
            let wv = t.weight(direction_gen(&self.amb, dir));
            c.terms().keys().map(move |m| m.weighted_degree(t) - wv)
        });
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_part(&self, t: &GradingType, d: i64) -> Self {
        VectorField {
            amb: self.amb,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(dir, c)| c.homogeneous_part(t, d + t.weight(direction_gen(&self.amb, dir))))
                .collect(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        VectorField { amb: self.amb, coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.amb.check(&other.amb)?;
        Ok(VectorField {
            amb: self.amb,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.amb.check(&other.amb)?;
        Ok(VectorField {
            amb: self.amb,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add_scaled(&mut self, other: &Self, s: &ExactScalar) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_scaled(b, s);
        }
    }

    /// `X(f) = Σ_v X_v ∂_v f`.
    pub fn apply(&self, f: &SuperPoly) -> Result<SuperPoly> {
        f.apply_derivation(&self.coeffs)
    }

    /// Supercommutator of derivations; jet order `min(D_X, D_Y) − 1`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.amb.check(&other.amb)?;
        let jet = jet_dec(jet_min(self.jet(), other.jet()));
        let mut out = Self::zero(self.amb, jet);
        for (px, x) in self.split_parity().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (py, y) in other.split_parity().iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let sign = if px * py == 1 { -1 } else { 1 };
                for dir in 0..self.coeffs.len() {
                    let xy = x.apply(&y.coeffs[dir])?;
                    let yx = y.apply(&x.coeffs[dir])?;
                    out.coeffs[dir].add_scaled(&xy, &ExactScalar::one());
                    out.coeffs[dir].add_scaled(&yx, &ExactScalar::from_int(-sign));
                }
            }
        }
        Ok(out.with_jet(jet))
    }

    /// `div X = Σ ∂P_i/∂x_i + Σ (−1)^{p(Q_j)} ∂Q_j/∂ξ_j`.
    pub fn divergence(&self) -> SuperPoly {
        let amb = self.amb;
        let mut out = SuperPoly::zero(amb, jet_dec(self.jet()));
        for i in 0..amb.m {
            out.add_scaled(&self.coeffs[i].partial_unchecked(Gen::Even(i)), &ExactScalar::one());
        }
        for j in 0..amb.n {
            let [even, odd] = self.coeffs[amb.m + j].split_parity();
            out.add_scaled(&even.partial_unchecked(Gen::Odd(j)), &ExactScalar::one());
            out.add_scaled(&odd.partial_unchecked(Gen::Odd(j)), &ExactScalar::from_int(-1));
        }
        out
    }

    /// Terms `(direction, monomial, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Monomial, &ExactScalar)> {
        self.coeffs.iter().enumerate().flat_map(|(dir, c)| c.terms().iter().map(move |(m, s)| (dir, m, s)))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (dir, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = match direction_gen(&self.amb, dir) {
                Gen::Even(i) => format!("d/dx{}", i + 1),
                Gen::Odd(j) => format!("d/dxi{}", j + 1),
            };
            parts.push(format!("({c})*{name}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Assigns stable coordinates to `(direction, monomial)` pairs so vector
/// fields can be fed to sparse linear algebra.
#[derive(Default, Debug, Clone)]
pub struct Indexer {
    map: HashMap<(usize, Monomial), usize>,
    keys: Vec<(usize, Monomial)>,
}

impl Indexer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn index(&mut self, dir: usize, m: &Monomial) -> usize {
        if let Some(&i) = self.map.get(&(dir, m.clone())) {
            return i;
        }
        let i = self.keys.len();
        self.map.insert((dir, m.clone()), i);
        self.keys.push((dir, m.clone()));
        i
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn key(&self, i: usize) -> &(usize, Monomial) {
        &self.keys[i]
    }

    pub fn vectorize(&mut self, x: &VectorField) -> SparseVector {
        let mut v = SparseVector::new();
        for (dir, m, c) in x.terms() {
            v.insert(self.index(dir, m), c.clone());
        }
        v
    }

    pub fn field(&self, amb: Ambient, v: &SparseVector) -> VectorField {
        let mut x = VectorField::zero(amb, EXACT);
        for (&i, c) in v {
            let (dir, m) = &self.keys[i];
            x.coeffs[*dir].add_term(m.clone(), c.clone());
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str, amb: Ambient) -> SuperPoly {
        parse_poly(s, amb).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let a = Ambient::new(1, 2);
        let d = VectorField::partial(a, Gen::Even(0));
        let e = VectorField::monomial(a, p("x1", a), Gen::Even(0));
        assert_eq!(d.bracket(&e).unwrap(), d);

        let x = VectorField::monomial(a, p("xi1", a), Gen::Odd(0));
        let y = VectorField::monomial(a, p("xi1", a), Gen::Odd(1));
        assert_eq!(x.bracket(&y).unwrap(), y);

        let o = VectorField::partial(a, Gen::Odd(0));
        assert!(o.bracket(&o).unwrap().is_zero());
    }

    #[test]
    fn divergence_examples() {
        let a = Ambient::new(1, 1);
        assert!(VectorField::partial(a, Gen::Even(0)).divergence().is_zero());
        assert_eq!(VectorField::monomial(a, p("x1", a), Gen::Even(0)).divergence(), p("1", a));
        assert_eq!(VectorField::monomial(a, p("xi1", a), Gen::Odd(0)).divergence(), p("-1", a));
    }

    #[test]
    fn derivation_compatibility() {
        let a = Ambient::new(2, 2);
        let x = VectorField::new(
            a,
            vec![p("xi1", a), p("x1*xi2", a), p("x2", a), p("1 + x1*xi1*xi2", a)],
        )
        .unwrap();
        let y = VectorField::new(
            a,
            vec![p("x2*xi1*xi2", a), p("0", a), p("xi1", a), p("x1^2*xi2", a)],
        )
        .unwrap();
        assert_eq!(x.parity(), Some(1));
        assert_eq!(y.parity(), Some(0));
        let f = p("x1*x2*xi1 + xi2 + x2^2*xi1*xi2", a);
        let lhs = x.bracket(&y).unwrap().apply(&f).unwrap();
        let rhs = &x.apply(&y.apply(&f).unwrap()).unwrap() - &y.apply(&x.apply(&f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
