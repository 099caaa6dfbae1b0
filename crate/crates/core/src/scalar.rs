//! Exact scalars: the rationals and a single quadratic extension `Q(√d)`.
//!
//! An [`ExactScalar`] is `a + b·√d` with rational `a`, `b` and a square-free
//! radicand `d`. Rational scalars carry radicand 0 and embed into every
//! extension, so a rational constant may be combined freely with elements of
//! whichever `Q(√d)` is in use. Combining elements of two *different*
//! extensions is a programming error and panics.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

pub type Rational = BigRational;

/// Builds a rational from a numerator/denominator pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Which field a scalar or matrix lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    /// `Q(√radicand)` with a square-free radicand different from 0 and 1.
    Quadratic { radicand: i64 },
}

impl FieldDescriptor {
    pub fn quadratic(radicand: i64) -> Result<Self> {
        let r = BigInt::from(radicand);
        if radicand == 0 || radicand == 1 {
            return Err(domain(format!("radicand {radicand} does not give an extension")));
        }
        if squarefree_int(&r) != r {
            return Err(domain(format!("radicand {radicand} is not square-free")));
        }
        Ok(FieldDescriptor::Quadratic { radicand })
    }

    pub fn radicand(&self) -> i64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::Quadratic { radicand } => *radicand,
        }
    }

    /// The generator `√d` of the extension (`None` over the rationals).
    pub fn sqrt_generator(&self) -> Option<ExactScalar> {
        match self {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::Quadratic { radicand } => Some(ExactScalar {
                a: Rational::zero(),
                b: Rational::one(),
                radicand: *radicand,
            }),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Quadratic { radicand } => write!(f, "Q(sqrt({radicand}))"),
        }
    }
}

/// `a + b·√radicand`; `radicand == 0` marks a rational (then `b == 0`).
#[derive(Clone, Debug)]
pub struct ExactScalar {
    a: Rational,
    b: Rational,
    radicand: i64,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(a: Rational) -> Self {
        ExactScalar { a, b: Rational::zero(), radicand: 0 }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    /// `a + b·√d` in the given field.
    pub fn new(a: Rational, b: Rational, field: FieldDescriptor) -> Self {
        match field {
            FieldDescriptor::Rationals => {
                assert!(b.is_zero(), "irrational part in a rational scalar");
                Self::from_rational(a)
            }
            FieldDescriptor::Quadratic { radicand } => ExactScalar { a, b, radicand }.normalized(),
        }
    }

    fn normalized(mut self) -> Self {
        if self.b.is_zero() {
            self.radicand = 0;
        }
        self
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// The smallest field containing this scalar.
    pub fn field(&self) -> FieldDescriptor {
        if self.b.is_zero() {
            FieldDescriptor::Rationals
        } else {
            FieldDescriptor::Quadratic { radicand: self.radicand }
        }
    }

    fn common_radicand(&self, other: &Self) -> i64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.radicand,
            (_, true) => self.radicand,
            _ => {
                assert_eq!(
                    self.radicand, other.radicand,
                    "scalars from different quadratic fields"
                );
                self.radicand
            }
        }
    }

    /// Galois conjugate `a − b·√d`.
    pub fn conjugate(&self) -> Self {
        ExactScalar { a: self.a.clone(), b: -self.b.clone(), radicand: self.radicand }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        if self.b.is_zero() {
            return &self.a * &self.a;
        }
        let d = Rational::from_integer(BigInt::from(self.radicand));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(Self::from_rational(self.a.recip()));
        }
        let n = self.norm();
        Some(ExactScalar { a: &self.a / &n, b: -(&self.b / &n), radicand: self.radicand })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && (self.b.is_zero() || self.radicand == other.radicand)
    }
}

impl Eq for ExactScalar {}

impl Hash for ExactScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        if self.b.is_zero() && rhs.b.is_zero() {
            return ExactScalar::from_rational(&self.a + &rhs.a);
        }
        let radicand = self.common_radicand(rhs);
        ExactScalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b, radicand }.normalized()
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        if self.b.is_zero() && rhs.b.is_zero() {
            return ExactScalar::from_rational(&self.a - &rhs.a);
        }
        let radicand = self.common_radicand(rhs);
        ExactScalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b, radicand }.normalized()
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, true) => ExactScalar::from_rational(&self.a * &rhs.a),
            (true, false) => {
                ExactScalar { a: &self.a * &rhs.a, b: &self.a * &rhs.b, radicand: rhs.radicand }
                    .normalized()
            }
            (false, true) => {
                ExactScalar { a: &self.a * &rhs.a, b: &self.b * &rhs.a, radicand: self.radicand }
                    .normalized()
            }
            (false, false) => {
                let radicand = self.common_radicand(rhs);
                let d = Rational::from_integer(BigInt::from(radicand));
                ExactScalar {
                    a: &self.a * &rhs.a + d * &self.b * &rhs.b,
                    b: &self.a * &rhs.b + &self.b * &rhs.a,
                    radicand,
                }
                .normalized()
            }
        }
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -self.a.clone(), b: -self.b.clone(), radicand: self.radicand }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -self.a, b: -self.b, radicand: self.radicand }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        if self.b.is_zero() && rhs.b.is_zero() {
            self.a += &rhs.a;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        if self.b.is_zero() && rhs.b.is_zero() {
            self.a -= &rhs.a;
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `p/q` for rationals, `p/q+r/s*sqrt(d)` otherwise.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*sqrt({})",
            fmt_rational(&self.a),
            sign,
            fmt_rational(&self.b.abs()),
            self.radicand
        )
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(pos) = s.find("*sqrt(") else {
            return Ok(ExactScalar::from_rational(parse_rational(s)?));
        };
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        let head = &s[..pos];
        let tail = s[pos + "*sqrt(".len()..].strip_suffix(')').ok_or_else(bad)?;
        let radicand: i64 = tail.trim().parse().map_err(|_| bad())?;
        // split `a±b` at the last sign that is not a leading sign or part of `e`
        let split = head
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (a, b) = match split {
            Some(i) => (parse_rational(&head[..i])?, parse_rational(&head[i..])?),
            None => (Rational::zero(), parse_rational(head)?),
        };
        let field = FieldDescriptor::quadratic(radicand)?;
        Ok(ExactScalar::new(a, b, field))
    }
}

/// Square-free part of a nonzero integer (sign kept).
fn squarefree_int(n: &BigInt) -> BigInt {
    let sign = n.sign();
    let mut rest = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        if count % 2 == 1 {
            out *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    out *= rest;
    if sign == Sign::Minus {
        -out
    } else {
        out
    }
}

/// Returns `s` with `r = s·t²` for a rational `t`, `s` a square-free integer and
/// `sign(s) = sign(r)`.
pub fn squarefree_part(r: &Rational) -> Result<BigInt> {
    if r.is_zero() {
        return Err(domain("square-free part of zero"));
    }
    // r = n/d = (n·d)/d²
    Ok(squarefree_int(&(r.numer() * r.denom())))
}

/// Ordered fields over which square classes are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum BaseField {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "R")]
    R,
}

impl FromStr for BaseField {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" | "q" => Ok(BaseField::Q),
            "R" | "r" => Ok(BaseField::R),
            _ => Err(Error::Parse(format!("unknown base field {s:?}"))),
        }
    }
}

pub fn is_square_in(r: &Rational, field: BaseField) -> Result<bool> {
    if r.is_zero() {
        return Err(domain("square test of zero"));
    }
    Ok(match field {
        BaseField::R => r.is_positive(),
        BaseField::Q => squarefree_part(r)?.is_one(),
    })
}

/// A square root of a rational, together with the field it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtAdjunction {
    pub field: FieldDescriptor,
    /// `root² = d`.
    pub root: ExactScalar,
    /// `root = scale·√radicand` (or `root = scale` over the rationals).
    pub scale: Rational,
}

pub fn adjoin_sqrt(d: &Rational) -> Result<SqrtAdjunction> {
    if d.is_zero() {
        return Err(domain("square root of zero needs no adjunction"));
    }
    let s = squarefree_part(d)?;
    // d = s·t², t = sqrt(d/s)
    let t2 = d / Rational::from_integer(s.clone());
    let t = Rational::new(t2.numer().sqrt(), t2.denom().sqrt());
    debug_assert_eq!(&t * &t, t2);
    if s.is_one() {
        return Ok(SqrtAdjunction {
            field: FieldDescriptor::Rationals,
            root: ExactScalar::from_rational(t.clone()),
            scale: t,
        });
    }
    let radicand = s
        .to_i64()
        .ok_or_else(|| domain(format!("radicand {s} does not fit a machine integer")))?;
    let field = FieldDescriptor::Quadratic { radicand };
    Ok(SqrtAdjunction {
        field,
        root: ExactScalar::new(Rational::zero(), t.clone(), field),
        scale: t,
    })
}

/// Integer `n!` as a scalar.
pub fn factorial(n: u32) -> ExactScalar {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    ExactScalar::from_rational(Rational::from_integer(acc))
}

/// Binomial coefficient as a scalar.
pub fn binomial(n: u32, k: u32) -> ExactScalar {
    if k > n {
        return ExactScalar::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    ExactScalar::from_rational(Rational::from_integer(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_squarefree(n: i64) -> i64 {
        // independent oracle: strip every square factor p² by brute force
        let mut m = n.abs();
        let mut changed = true;
        while changed {
            changed = false;
            for p in 2..=m {
                if p * p > m {
                    break;
                }
                if m % (p * p) == 0 {
                    m /= p * p;
                    changed = true;
                    break;
                }
            }
        }
        m * n.signum()
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&rat(1, 1)).unwrap(), BigInt::from(1));
        assert_eq!(squarefree_part(&rat(-4, 9)).unwrap(), BigInt::from(-1));
        assert_eq!(squarefree_part(&rat(18, 1)).unwrap(), BigInt::from(trial_division_squarefree(18)));
        assert_eq!(trial_division_squarefree(18), 2);
        assert!(squarefree_part(&rat(0, 1)).is_err());
    }

    #[test]
    fn squarefree_matches_oracle() {
        for n in -300i64..=300 {
            if n == 0 {
                continue;
            }
            assert_eq!(
                squarefree_part(&rat(n, 1)).unwrap(),
                BigInt::from(trial_division_squarefree(n)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn square_tests() {
        assert!(is_square_in(&rat(4, 1), BaseField::Q).unwrap());
        assert!(!is_square_in(&rat(-1, 1), BaseField::R).unwrap());
        assert!(is_square_in(&rat(50, 2), BaseField::Q).unwrap());
        assert!(!is_square_in(&rat(2, 1), BaseField::Q).unwrap());
        assert!(is_square_in(&rat(2, 1), BaseField::R).unwrap());
        assert!(is_square_in(&rat(0, 1), BaseField::Q).is_err());
    }

    #[test]
    fn adjoin_examples() {
        let nine = adjoin_sqrt(&rat(9, 1)).unwrap();
        assert_eq!(nine.field, FieldDescriptor::Rationals);
        assert_eq!(nine.root, ExactScalar::from_int(3));

        let i = adjoin_sqrt(&rat(-1, 1)).unwrap();
        assert_eq!(i.field, FieldDescriptor::Quadratic { radicand: -1 });
        assert_eq!(&i.root * &i.root, ExactScalar::from_int(-1));

        let eight = adjoin_sqrt(&rat(8, 1)).unwrap();
        assert_eq!(eight.field, FieldDescriptor::Quadratic { radicand: 2 });
        assert_eq!(eight.scale, rat(2, 1));
        assert_eq!(&eight.root * &eight.root, ExactScalar::from_int(8));

        let half = adjoin_sqrt(&rat(1, 2)).unwrap();
        assert_eq!(&half.root * &half.root, ExactScalar::from_ratio(1, 2));
        assert!(adjoin_sqrt(&rat(0, 1)).is_err());
    }

    #[test]
    fn extension_arithmetic() {
        let f = FieldDescriptor::quadratic(2).unwrap();
        let s = f.sqrt_generator().unwrap();
        assert_eq!(&s * &s, ExactScalar::from_int(2));
        let x = ExactScalar::new(rat(3, 1), rat(-5, 7), f);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(FieldDescriptor::quadratic(4).is_err());
        assert!(FieldDescriptor::quadratic(1).is_err());
    }

    #[test]
    fn display_and_parse() {
        let f = FieldDescriptor::quadratic(-1).unwrap();
        for x in [
            ExactScalar::from_ratio(-3, 4),
            ExactScalar::new(rat(1, 2), rat(-3, 5), f),
            ExactScalar::new(rat(0, 1), rat(1, 1), f),
            ExactScalar::new(rat(-2, 1), rat(7, 3), f),
        ] {
            let s = x.to_string();
            assert_eq!(s.parse::<ExactScalar>().unwrap(), x, "{s}");
        }
        assert_eq!(ExactScalar::new(rat(1, 2), rat(-3, 5), f).to_string(), "1/2-3/5*sqrt(-1)");
    }

    #[test]
    #[should_panic(expected = "different quadratic fields")]
    fn mixing_fields_panics() {
        let a = FieldDescriptor::quadratic(2).unwrap().sqrt_generator().unwrap();
        let b = FieldDescriptor::quadratic(3).unwrap().sqrt_generator().unwrap();
        let _ = &a + &b;
    }
}
