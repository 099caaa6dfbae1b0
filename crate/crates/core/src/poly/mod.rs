//! Truncated elements of `Λ(m,n) = Λ(ξ_1..ξ_n)[[x_1..x_m]]`.
//!
//! A [`SuperPoly`] stores its terms in canonical form: odd generators in
//! increasing index order with the reordering sign folded into the
//! coefficient. Every value carries a jet order `D`: it is known modulo terms
//! whose degree in the truncated even variables exceeds `D`.
//!
//! Generator indices are 0-based in the API and 1-based in the text format
//! (`x1`, `xi1`).

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{dimension, domain, Result};
use crate::linalg::ExactMatrix;
use crate::scalar::ExactScalar;

pub use parse::parse_poly;

pub type Parity = u8;

/// Jet order of values that are exact polynomials.
pub const EXACT: u32 = u32::MAX;

pub(crate) fn jet_min(a: u32, b: u32) -> u32 {
    a.min(b)
}

pub(crate) fn jet_dec(a: u32) -> u32 {
    if a == EXACT {
        EXACT
    } else {
        a.saturating_sub(1)
    }
}

/// Number of even and odd generators. Only the first `jet_m` even generators
/// count towards the truncation degree; the rest are polynomial variables
/// (used for the differentials `dξ_j` of the form algebra).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub m: usize,
    pub n: usize,
    pub jet_m: usize,
}

impl Ambient {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(n <= 32, "at most 32 odd generators are supported");
        Ambient { m, n, jet_m: m }
    }

    pub fn with_jet_vars(m: usize, n: usize, jet_m: usize) -> Self {
        assert!(n <= 32, "at most 32 odd generators are supported");
        assert!(jet_m <= m);
        Ambient { m, n, jet_m }
    }

    pub fn check(&self, other: &Ambient) -> Result<()> {
        if self != other {
            return Err(dimension(format!("ambient {self:?} does not match {other:?}")));
        }
        Ok(())
    }
}

/// A generator of `Λ(m,n)`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Even(usize),
    Odd(usize),
}

impl Gen {
    pub fn parity(&self) -> Parity {
        match self {
            Gen::Even(_) => 0,
            Gen::Odd(_) => 1,
        }
    }
}

/// Weights `a_i = deg x_i` and `b_j = deg ξ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingType {
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
}

impl GradingType {
    pub fn new(even: Vec<i64>, odd: Vec<i64>) -> Self {
        GradingType { even, odd }
    }

    /// All weights 1.
    pub fn principal(m: usize, n: usize) -> Self {
        GradingType { even: vec![1; m], odd: vec![1; n] }
    }

    pub fn check(&self, amb: &Ambient) -> Result<()> {
        if self.even.len() != amb.m || self.odd.len() != amb.n {
            return Err(dimension(format!(
                "grading of type ({}|{}) on an ambient ({}|{})",
                self.even.len(),
                self.odd.len(),
                amb.m,
                amb.n
            )));
        }
        Ok(())
    }

    pub fn weight(&self, g: Gen) -> i64 {
        match g {
            Gen::Even(i) => self.even[i],
            Gen::Odd(j) => self.odd[j],
        }
    }
}

/// Parses `(a_1,…,a_m|b_1,…,b_n)`; the parentheses are optional.
impl std::str::FromStr for GradingType {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || crate::error::Error::Parse(format!("bad grading type {s:?}, expected (a,..|b,..)"));
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let (even, odd) = body.split_once('|').ok_or_else(bad)?;
        let list = |part: &str| -> Result<Vec<i64>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(|w| w.trim().parse().map_err(|_| bad())).collect()
        };
        Ok(GradingType { even: list(even)?, odd: list(odd)? })
    }
}

impl fmt::Display for GradingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.even), join(&self.odd))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub even: Vec<u16>,
    /// Bit `j` set iff `ξ_{j+1}` occurs.
    pub odd: u32,
}

impl Monomial {
    pub fn one(amb: &Ambient) -> Self {
        Monomial { even: vec![0; amb.m], odd: 0 }
    }

    pub fn gen(amb: &Ambient, g: Gen) -> Self {
        let mut mono = Self::one(amb);
        match g {
            Gen::Even(i) => mono.even[i] = 1,
            Gen::Odd(j) => mono.odd = 1 << j,
        }
        mono
    }

    pub fn parity(&self) -> Parity {
        (self.odd.count_ones() % 2) as Parity
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    /// Degree in the truncated even variables.
    pub fn x_degree(&self, amb: &Ambient) -> u32 {
        self.even[..amb.jet_m].iter().map(|&e| e as u32).sum()
    }

    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |j| self.odd >> j & 1 == 1)
    }

    pub fn weighted_degree(&self, t: &GradingType) -> i64 {
        let even: i64 = self.even.iter().zip(&t.even).map(|(&e, &a)| e as i64 * a).sum();
        even + self.odd_indices().map(|j| t.odd[j]).sum::<i64>()
    }

    /// Product of two monomials with its Koszul sign, or `None` if an odd
    /// generator repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        Some((
            Monomial {
                even: self.even.iter().zip(&other.even).map(|(a, b)| a + b).collect(),
                odd: self.odd | other.odd,
            },
            koszul_negative(self.odd, other.odd),
        ))
    }
}

/// Whether moving the odd generators of `b` past those of `a` (to sort
/// `a·b`) is an odd permutation.
pub(crate) fn koszul_negative(a: u32, b: u32) -> bool {
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        let above = if j == 31 { 0 } else { a >> (j + 1) };
        count += above.count_ones();
        rest &= rest - 1;
    }
    count % 2 == 1
}

pub fn weighted_degree(mono: &Monomial, t: &GradingType) -> i64 {
    mono.weighted_degree(t)
}

/// All monomials of weighted degree `w`. Even weights must be positive so
/// that the set is finite.
pub fn monomials_of_weight(amb: &Ambient, t: &GradingType, w: i64) -> Result<Vec<Monomial>> {
    t.check(amb)?;
    if t.even.iter().any(|&a| a <= 0) {
        return Err(crate::error::Error::UnsupportedGrading(format!(
            "even weights of {t} must be positive"
        )));
    }
    let mut out = Vec::new();
    for odd in 0u64..(1u64 << amb.n) {
        let odd = odd as u32;
        let ow: i64 = (0..amb.n).filter(|j| odd >> j & 1 == 1).map(|j| t.odd[j]).sum();
        let rest = w - ow;
        if rest < 0 {
            continue;
        }
        let mut exps = vec![0u16; amb.m];
        even_exponents(&t.even, 0, rest, &mut exps, &mut |e| {
            out.push(Monomial { even: e.to_vec(), odd })
        });
    }
    out.sort();
    Ok(out)
}

fn even_exponents(
    weights: &[i64],
    i: usize,
    rest: i64,
    exps: &mut Vec<u16>,
    emit: &mut impl FnMut(&[u16]),
) {
    if i == weights.len() {
        if rest == 0 {
            emit(exps);
        }
        return;
    }
    let mut e = 0;
    while e as i64 * weights[i] <= rest {
        exps[i] = e;
        even_exponents(weights, i + 1, rest - e as i64 * weights[i], exps, emit);
        e += 1;
    }
    exps[i] = 0;
}

#[derive(Clone, Debug)]
pub struct SuperPoly {
    amb: Ambient,
    jet: u32,
    terms: BTreeMap<Monomial, ExactScalar>,
}

/// Equality of the stored terms; jet orders are not compared.
impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        self.amb == other.amb && self.terms == other.terms
    }
}

impl Eq for SuperPoly {}

impl SuperPoly {
    pub fn zero(amb: Ambient, jet: u32) -> Self {
        SuperPoly { amb, jet, terms: BTreeMap::new() }
    }

    pub fn constant(amb: Ambient, jet: u32, c: ExactScalar) -> Self {
        Self::term(amb, jet, Monomial::one(&amb), c)
    }

    pub fn one(amb: Ambient, jet: u32) -> Self {
        Self::constant(amb, jet, ExactScalar::one())
    }

    pub fn gen(amb: Ambient, jet: u32, g: Gen) -> Self {
        Self::term(amb, jet, Monomial::gen(&amb, g), ExactScalar::one())
    }

    pub fn x(amb: Ambient, jet: u32, i: usize) -> Self {
        Self::gen(amb, jet, Gen::Even(i))
    }

    pub fn xi(amb: Ambient, jet: u32, j: usize) -> Self {
        Self::gen(amb, jet, Gen::Odd(j))
    }

    pub fn term(amb: Ambient, jet: u32, mono: Monomial, c: ExactScalar) -> Self {
        let mut p = Self::zero(amb, jet);
        p.add_term(mono, c);
        p
    }

    pub fn from_terms(
        amb: Ambient,
        jet: u32,
        terms: impl IntoIterator<Item = (Monomial, ExactScalar)>,
    ) -> Self {
        let mut p = Self::zero(amb, jet);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·mono` (in canonical form), dropping it if beyond the jet order.
    pub fn add_term(&mut self, mono: Monomial, c: ExactScalar) {
        debug_assert_eq!(mono.even.len(), self.amb.m);
        if c.is_zero() || (self.jet != EXACT && mono.x_degree(&self.amb) > self.jet) {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(cur) => {
                *cur += &c;
                if cur.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    pub fn jet(&self) -> u32 {
        self.jet
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ExactScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, ExactScalar> {
        self.terms
    }

    pub fn coeff(&self, mono: &Monomial) -> ExactScalar {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parity if all terms share one (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// Even and odd parts.
    pub fn split_parity(&self) -> [SuperPoly; 2] {
        let mut parts = [Self::zero(self.amb, self.jet), Self::zero(self.amb, self.jet)];
        for (m, c) in &self.terms {
            parts[m.parity() as usize].terms.insert(m.clone(), c.clone());
        }
        parts
    }

    pub fn with_jet(&self, jet: u32) -> Self {
        let mut p = Self::zero(self.amb, jet.min(self.jet));
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    /// Sets the jet order without checking the stored terms; for values known
    /// to be exact polynomials.
    pub fn exact(mut self) -> Self {
        self.jet = EXACT;
        self
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.amb, self.jet);
        }
        SuperPoly {
            amb: self.amb,
            jet: self.jet,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.amb.check(&other.amb)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.amb.check(&other.amb)?;
        Ok(self * other)
    }

    /// Terms of weighted degree `d`.
    pub fn homogeneous_part(&self, t: &GradingType, d: i64) -> Self {
        SuperPoly {
            amb: self.amb,
            jet: self.jet,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(t) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The common weighted degree of all terms, `None` if mixed or zero.
    pub fn weighted_degree(&self, t: &GradingType) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(t));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn check_gen(&self, g: Gen) -> Result<()> {
        let ok = match g {
            Gen::Even(i) => i < self.amb.m,
            Gen::Odd(j) => j < self.amb.n,
        };
        if ok {
            Ok(())
        } else {
            Err(domain(format!("generator {g:?} not in ambient ({}|{})", self.amb.m, self.amb.n)))
        }
    }

    /// Partial derivative; odd generators use the left derivative.
    pub fn partial(&self, g: Gen) -> Result<Self> {
        self.check_gen(g)?;
        Ok(self.partial_unchecked(g))
    }

    pub(crate) fn partial_unchecked(&self, g: Gen) -> Self {
        let jet = match g {
            Gen::Even(i) if i < self.amb.jet_m => jet_dec(self.jet),
            _ => self.jet,
        };
        let mut out = Self::zero(self.amb, jet);
        for (m, c) in &self.terms {
            match g {
                Gen::Even(i) => {
                    let e = m.even[i];
                    if e == 0 {
                        continue;
                    }
                    let mut mm = m.clone();
                    mm.even[i] -= 1;
                    out.add_term(mm, c * &ExactScalar::from_int(e as i64));
                }
                Gen::Odd(j) => {
                    if m.odd >> j & 1 == 0 {
                        continue;
                    }
                    let before = (m.odd & ((1u32 << j) - 1)).count_ones();
                    let mut mm = m.clone();
                    mm.odd &= !(1 << j);
                    out.add_term(mm, if before % 2 == 1 { -c } else { c.clone() });
                }
            }
        }
        out
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        let amb = self.amb;
        (0..amb.m).map(Gen::Even).chain((0..amb.n).map(Gen::Odd))
    }

    /// `Σ_v images[v]·∂_v(self)` with generators ordered even then odd.
    ///
    /// This is the derivation sending each generator `v` to `images[v]`.
    pub fn apply_derivation(&self, images: &[SuperPoly]) -> Result<Self> {
        if images.len() != self.amb.m + self.amb.n {
            return Err(dimension("one image per generator is required"));
        }
        for im in images {
            self.amb.check(&im.amb)?;
        }
        let gens: Vec<Gen> = self.gens().collect();
        let mut out: Option<SuperPoly> = None;
        for (g, im) in gens.into_iter().zip(images) {
            let d = self.partial_unchecked(g);
            let jet = jet_min(im.jet, d.jet);
            let term = if im.is_zero() || d.is_zero() {
                Self::zero(self.amb, jet)
            } else {
                im * &d
            };
            out = Some(match out {
                None => term,
                Some(acc) => &acc + &term,
            });
        }
        Ok(out.unwrap_or_else(|| Self::zero(self.amb, self.jet)))
    }

    /// Linear change of generators `x_i ↦ Σ_k g_even[i][k] x_k`,
    /// `ξ_j ↦ Σ_l g_odd[j][l] ξ_l`.
    pub fn substitute_linear(&self, g_even: &ExactMatrix, g_odd: &ExactMatrix) -> Result<Self> {
        let (m, n) = (self.amb.m, self.amb.n);
        if g_even.rows() != m || g_even.cols() != m || g_odd.rows() != n || g_odd.cols() != n {
            return Err(dimension("substitution matrices do not match the ambient"));
        }
        if g_even.determinant()?.is_zero() || g_odd.determinant()?.is_zero() {
            return Err(domain("singular substitution matrix"));
        }
        let jet = self.jet;
        let amb = self.amb;
        let image = |g: Gen| {
            let (mat, idx, ctor): (&ExactMatrix, usize, fn(usize) -> Gen) = match g {
                Gen::Even(i) => (g_even, i, Gen::Even),
                Gen::Odd(j) => (g_odd, j, Gen::Odd),
            };
            let mut p = SuperPoly::zero(amb, jet);
            for k in 0..mat.cols() {
                p.add_term(Monomial::gen(&amb, ctor(k)), mat.get(idx, k).clone());
            }
            p
        };
        let even_images: Vec<SuperPoly> = (0..m).map(|i| image(Gen::Even(i))).collect();
        let odd_images: Vec<SuperPoly> = (0..n).map(|j| image(Gen::Odd(j))).collect();
        let mut out = Self::zero(amb, jet);
        for (mono, c) in &self.terms {
            let mut acc = Self::constant(amb, jet, c.clone());
            for (i, &e) in mono.even.iter().enumerate() {
                for _ in 0..e {
                    acc = &acc * &even_images[i];
                }
            }
            for j in mono.odd_indices() {
                acc = &acc * &odd_images[j];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    pub(crate) fn add_scaled(&mut self, other: &SuperPoly, s: &ExactScalar) {
        self.jet = jet_min(self.jet, other.jet);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
        if self.jet != EXACT {
            let (amb, jet) = (self.amb, self.jet);
            self.terms.retain(|m, _| m.x_degree(&amb) <= jet);
        }
    }
}

impl<'a> Add<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        assert_eq!(self.amb, rhs.amb, "ambient mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &ExactScalar::one());
        out
    }
}

impl<'a> Sub<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        assert_eq!(self.amb, rhs.amb, "ambient mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &ExactScalar::from_int(-1));
        out
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&ExactScalar::from_int(-1))
    }
}

impl<'a> Mul<&'a SuperPoly> for &'a SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        assert_eq!(self.amb, rhs.amb, "ambient mismatch");
        let mut out = SuperPoly::zero(self.amb, jet_min(self.jet, rhs.jet));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some((m, neg)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |g: Gen| match g {
            Gen::Even(i) => format!("x{}", i + 1),
            Gen::Odd(j) => format!("xi{}", j + 1),
        };
        write!(f, "{}", format_terms(&self.terms, names))
    }
}

/// Prints `c·mono` terms joined by ` + ` / ` - `, in the grammar accepted by
/// [`parse_poly`] (variable names supplied by `names`).
pub(crate) fn format_terms(
    terms: &BTreeMap<Monomial, ExactScalar>,
    names: impl Fn(Gen) -> String,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (mono, c)) in terms.iter().enumerate() {
        let mut factors = Vec::new();
        for (i, &e) in mono.even.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names(Gen::Even(i))),
                _ => factors.push(format!("{}^{e}", names(Gen::Even(i)))),
            }
        }
        factors.extend(mono.odd_indices().map(|j| names(Gen::Odd(j))));
        let (negative, mag) = match c.as_rational() {
            Some(r) if r < &num_traits::Zero::zero() => (true, ExactScalar::from_rational(-r.clone())),
            _ => (false, c.clone()),
        };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let coeff = if mag.is_rational() {
            mag.to_string()
        } else {
            format!("({mag})")
        };
        if factors.is_empty() {
            out.push_str(&coeff);
        } else {
            if !mag.is_one() {
                out.push_str(&coeff);
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(m: usize, n: usize) -> Ambient {
        Ambient::new(m, n)
    }

    fn p(s: &str, m: usize, n: usize) -> SuperPoly {
        parse_poly(s, amb(m, n)).unwrap()
    }

    #[test]
    fn product_examples() {
        let a = amb(1, 2);
        let xi1 = SuperPoly::xi(a, EXACT, 0);
        let xi2 = SuperPoly::xi(a, EXACT, 1);
        assert!((&xi1 * &xi1).is_zero());
        assert_eq!(&xi2 * &xi1, p("-xi1*xi2", 1, 2));
        assert_eq!(&p("x1 + xi1", 1, 2) * &p("x1 - xi1", 1, 2), p("x1^2", 1, 2));
    }

    #[test]
    fn partial_examples() {
        let f = p("xi1*xi2", 1, 3);
        assert_eq!(f.partial(Gen::Odd(0)).unwrap(), p("xi2", 1, 3));
        assert_eq!(f.partial(Gen::Odd(1)).unwrap(), p("-xi1", 1, 3));
        assert_eq!(p("x1^2*xi3", 1, 3).partial(Gen::Even(0)).unwrap(), p("2*x1*xi3", 1, 3));
        assert!(f.partial(Gen::Odd(3)).is_err());
        assert!(f.partial(Gen::Even(1)).is_err());
    }

    #[test]
    fn weighted_degree_examples() {
        let t = GradingType::new(vec![1], vec![2, 1]);
        let m = p("x1^2*xi1", 1, 2).terms().keys().next().unwrap().clone();
        assert_eq!(weighted_degree(&m, &t), 4);
        assert_eq!(weighted_degree(&Monomial::one(&amb(1, 2)), &t), 0);
        let m = p("xi1*xi2", 2, 2).terms().keys().next().unwrap().clone();
        assert_eq!(weighted_degree(&m, &GradingType::principal(2, 2)), 2);
    }

    #[test]
    fn substitution_examples() {
        let f = p("3*x1*xi1 + xi1*xi2 - x2^2", 2, 2);
        let id2 = ExactMatrix::identity(2);
        assert_eq!(f.substitute_linear(&id2, &id2).unwrap(), f);

        let swap = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        let g = p("xi1*xi2", 1, 2);
        assert_eq!(g.substitute_linear(&ExactMatrix::identity(1), &swap).unwrap(), p("-xi1*xi2", 1, 2));

        let lam = ExactScalar::from_int(7);
        let scale = ExactMatrix::diagonal(&[lam.inv().unwrap()]);
        let h = p("x1*xi1", 1, 1);
        assert_eq!(
            h.substitute_linear(&scale, &ExactMatrix::identity(1)).unwrap(),
            p("1/7*x1*xi1", 1, 1)
        );
        let sing = ExactMatrix::zeros(1, 1);
        assert!(h.substitute_linear(&sing, &ExactMatrix::identity(1)).is_err());
    }

    #[test]
    fn truncation_drops_high_terms() {
        let a = amb(2, 1);
        let f = p("x1^2 + x2", 2, 1).with_jet(2);
        let g = p("x1 + xi1", 2, 1).with_jet(3);
        let fg = &f * &g;
        assert_eq!(fg.jet(), 2);
        assert_eq!(fg, p("x1*x2 + x1^2*xi1 + x2*xi1", 2, 1));
        assert_eq!(fg.partial(Gen::Even(0)).unwrap().jet(), 1);
        assert_eq!(SuperPoly::x(a, 0, 0).len(), 0);
    }

    #[test]
    fn print_parse_round_trip() {
        for s in [
            "0",
            "1",
            "-1/2*x1^3*xi2 + x2 - 7",
            "xi1*xi2*xi3 + 2/3*x1*x2^2",
            "(1/2+1*sqrt(-1))*x1 - (0-2*sqrt(-1))*xi1",
        ] {
            let f = p(s, 2, 3);
            let printed = f.to_string();
            assert_eq!(parse_poly(&printed, amb(2, 3)).unwrap(), f, "{s} -> {printed}");
        }
        assert!(parse_poly("x3", amb(2, 3)).is_err());
        assert!(parse_poly("x1 +", amb(2, 3)).is_err());
        assert_eq!(p("xi2*xi1", 1, 2), p("-xi1*xi2", 1, 2));
    }

    #[test]
    fn grading_type_round_trip() {
        let t: GradingType = "(2|1,1)".parse().unwrap();
        assert_eq!(t, GradingType::new(vec![2], vec![1, 1]));
        assert_eq!(t.to_string().parse::<GradingType>().unwrap(), t);
        assert_eq!("1,1|".parse::<GradingType>().unwrap(), GradingType::new(vec![1, 1], vec![]));
        assert!("(1,1)".parse::<GradingType>().is_err());
        assert!("(a|1)".parse::<GradingType>().is_err());
    }
}
