//! The Lie conformal superalgebras `K_{N,q} = F[∂]Λ(V)`, their subalgebras
//! `CK_{6,q}` and `S_{2,q}`, and their annihilation algebras.
//!
//! `V` has basis `ξ_1..ξ_N`; a monomial of `Λ(V)` is a bitmask (bit `i` for
//! `ξ_{i+1}`), with factors in increasing index order.

pub mod annihilation;
pub mod axioms;
pub mod bracket;
pub mod ck;
pub mod golden;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::qforms::QuadraticForm;
use crate::scalar::ExactScalar;

pub use annihilation::{compare_with_contact, AnnihilationAlgebra, DimComparison, ModeElement};
pub use axioms::{axioms_check, Axiom, AxiomReport, Sampling};
pub use bracket::{Basis, ConformalVector, LambdaPoly};
pub use ck::{ck6_generators, s2_generators, span_closure_check, SpanClosureReport};
pub use golden::{bracket_table, BracketRecord};

pub type Mask = u32;

/// An element of `Λ(V)`.
pub type Exterior = BTreeMap<Mask, ExactScalar>;

/// Sign of `A·B` for monomials: `None` if they share a factor, otherwise
/// `Some(true)` when reordering into increasing order is odd.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

pub fn degree(a: Mask) -> u32 {
    a.count_ones()
}

pub(crate) fn add_to(target: &mut Exterior, mask: Mask, c: &ExactScalar) {
    if c.is_zero() {
        return;
    }
    let e = target.entry(mask).or_default();
    *e += c;
    if e.is_zero() {
        target.remove(&mask);
    }
}

pub fn wedge(x: &Exterior, y: &Exterior) -> Exterior {
    let mut out = Exterior::new();
    for (&a, ca) in x {
        for (&b, cb) in y {
            if let Some(neg) = wedge_sign(a, b) {
                let c = ca * cb;
                add_to(&mut out, a | b, &if neg { -c } else { c });
            }
        }
    }
    out
}

/// `ξ_{i}ξ_{j}…` (1-based), or `1`.
pub fn mono_name(a: Mask) -> String {
    if a == 0 {
        return "1".into();
    }
    (0..32).filter(|i| a >> i & 1 == 1).map(|i| format!("xi{}", i + 1)).collect::<Vec<_>>().join("*")
}

pub fn parse_mono(s: &str) -> Result<Mask> {
    let s = s.trim();
    if s == "1" {
        return Ok(0);
    }
    let mut out: Mask = 0;
    let mut last = None;
    for f in s.split('*') {
        let i: u32 = f
            .trim()
            .strip_prefix("xi")
            .and_then(|d| d.parse().ok())
            .filter(|&i| (1..=32).contains(&i))
            .ok_or_else(|| Error::Parse(format!("bad monomial {s:?}")))?;
        if last.is_some_and(|l| l >= i) {
            return Err(Error::Parse(format!("monomial {s:?} is not in increasing order")));
        }
        last = Some(i);
        out |= 1 << (i - 1);
    }
    Ok(out)
}

pub fn format_exterior(x: &Exterior) -> String {
    if x.is_empty() {
        return "0".into();
    }
    x.iter().map(|(&a, c)| format!("({c})*{}", mono_name(a))).collect::<Vec<_>>().join(" + ")
}

/// `V = F^N` with the form `q`, and the dual bases `a_i = ξ_i`,
/// `b_j = Σ_k (q⁻¹)_{jk} ξ_k`, so that `q(a_i, b_j) = δ_ij`.
#[derive(Clone, Debug)]
pub struct ConformalContext {
    n: usize,
    q: QuadraticForm,
    gram: Vec<Vec<ExactScalar>>,
    dual: Vec<Vec<ExactScalar>>,
    corrupt: bool,
}

impl ConformalContext {
    pub fn new(q: QuadraticForm) -> Result<Self> {
        let n = q.dim();
        if n == 0 || n > 16 {
            return Err(domain(format!("N = {n} is outside 1..=16")));
        }
        let m = q.matrix();
        let inv = m.inverse()?;
        let gram = (0..n).map(|i| m.row(i).to_vec()).collect();
        let dual = (0..n).map(|i| inv.row(i).to_vec()).collect();
        Ok(ConformalContext { n, q, gram, dual, corrupt: false })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(QuadraticForm::identity(n))
    }

    /// The same context with the `λ` coefficient of every `[A_λ B]` on basis
    /// monomials multiplied by `3/2`. Used as a negative control for the
    /// axiom and closure checks.
    pub fn corrupted(&self) -> Self {
        ConformalContext { corrupt: true, ..self.clone() }
    }

    pub fn is_corrupted(&self) -> bool {
        self.corrupt
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.q
    }

    pub fn top(&self) -> Mask {
        ((1u64 << self.n) - 1) as Mask
    }

    /// All monomials of `Λ(V)`, ordered by degree, then lexicographically.
    pub fn monomials(&self) -> Vec<Mask> {
        let mut all: Vec<Mask> = (0..=self.top()).collect();
        all.sort_by_key(|&a| (degree(a), a.reverse_bits()));
        all
    }

    /// `q(v, ξ_k)` for `v` given by coordinates.
    fn pairing(&self, v: &[ExactScalar], k: usize) -> ExactScalar {
        let mut s = ExactScalar::zero();
        for (l, vl) in v.iter().enumerate() {
            if !vl.is_zero() {
                s += &(vl * &self.gram[l][k]);
            }
        }
        s
    }

    /// `i_v` on a monomial: the odd derivation with `i_v(ξ_k) = q(v, ξ_k)`.
    pub fn contraction(&self, v: &[ExactScalar], a: Mask) -> Exterior {
        let mut out = Exterior::new();
        let mut before = 0;
        for k in 0..self.n {
            if a >> k & 1 == 0 {
                continue;
            }
            let c = self.pairing(v, k);
            if !c.is_zero() {
                add_to(&mut out, a & !(1 << k), &if before % 2 == 1 { -c } else { c });
            }
            before += 1;
        }
        out
    }

    pub fn contract(&self, v: &[ExactScalar], x: &Exterior) -> Exterior {
        let mut out = Exterior::new();
        for (&a, c) in x {
            for (b, d) in self.contraction(v, a) {
                add_to(&mut out, b, &(c * &d));
            }
        }
        out
    }

    pub(crate) fn unit(&self, j: usize) -> Vec<ExactScalar> {
        (0..self.n).map(|k| if k == j { ExactScalar::one() } else { ExactScalar::zero() }).collect()
    }

    pub(crate) fn dual_vector(&self, j: usize) -> &[ExactScalar] {
        &self.dual[j]
    }

    /// `(ξ_{j_1}…ξ_{j_k})^* = i_{ξ_{j_1}} … i_{ξ_{j_k}}(ξ_1…ξ_N)`, innermost contraction first.
    pub fn hodge_star(&self, a: Mask) -> Exterior {
        let mut cur = Exterior::from([(self.top(), ExactScalar::one())]);
        for j in (0..self.n).rev() {
            if a >> j & 1 == 1 {
                cur = self.contract(&self.unit(j), &cur);
            }
        }
        cur
    }

    /// The star with the contractions applied in the order they are listed,
    /// `i_{ξ_{j_1}}` first: `(−1)^{k(k−1)/2}` times [`Self::hodge_star`] on
    /// `k`-forms. This is the convention under which the `CK_{6,q}` and
    /// `S_{2,q}` generators span closed subalgebras; the involution identity
    /// holds for [`Self::hodge_star`] only.
    pub fn hodge_star_listed(&self, a: Mask) -> Exterior {
        let k = degree(a);
        let mut x = self.hodge_star(a);
        if (k * k.saturating_sub(1) / 2) % 2 == 1 {
            x.values_mut().for_each(|c| *c = -c.clone());
        }
        x
    }

    pub fn hodge(&self, x: &Exterior) -> Exterior {
        let mut out = Exterior::new();
        for (&a, c) in x {
            for (b, d) in self.hodge_star(a) {
                add_to(&mut out, b, &(c * &d));
            }
        }
        out
    }

    /// The factor `(−1)^{N(N−1)/2} det q` with `(A^*)^* = factor·A`.
    pub fn hodge_square(&self) -> ExactScalar {
        let n = self.n as u64;
        let s = ExactScalar::from_rational(self.q.det());
        if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

impl fmt::Display for ConformalContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{{{},q}} q={}", self.n, self.q)
    }
}

/// Monomials `A` for which `(A^*)^*` differs from `(−1)^{N(N−1)/2} det(q)·A`.
pub fn hodge_involution_failures(ctx: &ConformalContext) -> Vec<Mask> {
    let factor = ctx.hodge_square();
    ctx.monomials()
        .into_iter()
        .filter(|&a| {
            let twice = ctx.hodge(&ctx.hodge_star(a));
            twice != Exterior::from([(a, factor.clone())])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(a: Mask, c: i64) -> Exterior {
        Exterior::from([(a, ExactScalar::from_int(c))])
    }

    #[test]
    fn contraction_examples() {
        let ctx = ConformalContext::identity(3).unwrap();
        let e = |j| ctx.unit(j);
        assert_eq!(ctx.contraction(&e(0), 0b001), single(0, 1));
        assert!(ctx.contraction(&e(0), 0b110).is_empty());
        // i_{ξ2}(ξ1ξ2) = −ξ1
        assert_eq!(ctx.contraction(&e(1), 0b011), single(0b001, -1));
    }

    #[test]
    fn hodge_examples() {
        let c4 = ConformalContext::identity(4).unwrap();
        assert_eq!(c4.hodge_star(0b0001), single(0b1110, 1));
        assert_eq!(c4.hodge_star(0b0011), single(0b1100, -1));
        let c6 = ConformalContext::identity(6).unwrap();
        assert_eq!(c6.hodge_star(0b000111), single(0b111000, -1));
        assert_eq!(c6.hodge_star(0), single(0b111111, 1));
    }

    #[test]
    fn hodge_involution() {
        for q in ["diag:1,1,1,1", "diag:2,1,1,1", "diag:1,1,1,-1", "diag:1,1,1,1,1,1", "diag:3,1,1,1,1,-5"] {
            let ctx = ConformalContext::new(q.parse().unwrap()).unwrap();
            assert!(hodge_involution_failures(&ctx).is_empty(), "{q}");
        }
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(0b10, 0b01), Some(true));
        assert_eq!(wedge_sign(0b01, 0b10), Some(false));
        assert_eq!(wedge_sign(0b101, 0b010), Some(true));
        assert_eq!(wedge_sign(0b1, 0b1), None);
        assert_eq!(parse_mono(&mono_name(0b1011)).unwrap(), 0b1011);
        assert!(parse_mono("xi2*xi1").is_err());
    }
}
