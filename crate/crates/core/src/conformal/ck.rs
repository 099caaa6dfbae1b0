//! The generators of `CK_{6,q} ⊂ K_{6,q}` and `S_{2,q} ⊂ K_{4,q}`, and the
//! check that the `F[∂]`-span of a set of elements is closed under the
//! `λ`-bracket.

use std::collections::BTreeMap;

use serde::Serialize;

use super::bracket::{Basis, ConformalVector};
use super::{ConformalContext, Mask};
use crate::error::{domain, Error, Result};
use crate::linalg::{SparseEchelon, SparseVector};
use crate::scalar::{adjoin_sqrt, ExactScalar, Rational, SqrtAdjunction};

/// A square root of `−1/det q`; the other choice is its negative.
pub fn ck6_alpha(ctx: &ConformalContext) -> Result<SqrtAdjunction> {
    adjoin_sqrt(&-(Rational::from_integer(1.into()) / ctx.form().det()))
}

/// A square root of `1/det q`.
pub fn s2_beta(ctx: &ConformalContext) -> Result<SqrtAdjunction> {
    adjoin_sqrt(&(Rational::from_integer(1.into()) / ctx.form().det()))
}

fn check_square(ctx: &ConformalContext, n: usize, x: &ExactScalar, want: Rational, name: &str) -> Result<()> {
    if ctx.n() != n {
        return Err(domain(format!("{name} needs N = {n}, got N = {}", ctx.n())));
    }
    if &(x * x) != &ExactScalar::from_rational(want.clone()) {
        return Err(domain(format!("{name}: {x} squared is not {}", ExactScalar::from_rational(want))));
    }
    Ok(())
}

fn pairs(n: usize) -> impl Iterator<Item = Mask> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (1 << i) | (1 << j)))
}

/// How `A^*` is read in the generator lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarOrder {
    /// [`ConformalContext::hodge_star_listed`]; the spans close.
    Listed,
    /// [`ConformalContext::hodge_star`]; kept to show the spans do not close.
    Composition,
}

fn star(ctx: &ConformalContext, order: StarOrder, a: Mask, d: u32, c: &ExactScalar) -> ConformalVector {
    let x = match order {
        StarOrder::Listed => ctx.hodge_star_listed(a),
        StarOrder::Composition => ctx.hodge_star(a),
    };
    ConformalVector::from_exterior(&x, d).scale(c)
}

/// The 32 generators `−1 + α∂³1^*`, `ξ_iξ_j + α∂(ξ_iξ_j)^*`, `ξ_i − α∂²ξ_i^*`
/// and `ξ_iξ_jξ_k + α(ξ_iξ_jξ_k)^*`. The last family spans 10 dimensions;
/// the first 10 independent elements in lexicographic order are kept.
pub fn ck6_generators(ctx: &ConformalContext, alpha: &ExactScalar) -> Result<Vec<ConformalVector>> {
    ck6_generators_with(ctx, alpha, StarOrder::Listed)
}

pub fn ck6_generators_with(ctx: &ConformalContext, alpha: &ExactScalar, order: StarOrder) -> Result<Vec<ConformalVector>> {
    let want = -(Rational::from_integer(1.into()) / ctx.form().det());
    check_square(ctx, 6, alpha, want, "CK_6")?;
    let neg = -alpha.clone();
    let mut out = vec![&ConformalVector::term(0, 0, ExactScalar::from_int(-1)) + &star(ctx, order, 0, 3, alpha)];
    for a in pairs(6) {
        out.push(&ConformalVector::basis(0, a) + &star(ctx, order, a, 1, alpha));
    }
    for i in 0..6 {
        out.push(&ConformalVector::basis(0, 1 << i) + &star(ctx, order, 1 << i, 2, &neg));
    }
    let mut indexer = VectorIndexer::default();
    let mut span = SparseEchelon::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let a = (1 << i) | (1 << j) | (1 << k);
                let x = &ConformalVector::basis(0, a) + &star(ctx, order, a, 0, alpha);
                if span.insert(indexer.vectorize(&x)) {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

/// The 11 generators `−1 − β∂²1^*`, `ξ_iξ_j − β(ξ_iξ_j)^*`, `ξ_i + β∂ξ_i^*`.
/// The six middle elements span only three dimensions.
pub fn s2_generators(ctx: &ConformalContext, beta: &ExactScalar) -> Result<Vec<ConformalVector>> {
    s2_generators_with(ctx, beta, StarOrder::Listed)
}

pub fn s2_generators_with(ctx: &ConformalContext, beta: &ExactScalar, order: StarOrder) -> Result<Vec<ConformalVector>> {
    let want = Rational::from_integer(1.into()) / ctx.form().det();
    check_square(ctx, 4, beta, want, "S_2")?;
    let neg = -beta.clone();
    let mut out = vec![&ConformalVector::term(0, 0, ExactScalar::from_int(-1)) + &star(ctx, order, 0, 2, &neg)];
    for a in pairs(4) {
        out.push(&ConformalVector::basis(0, a) + &star(ctx, order, a, 0, &neg));
    }
    for i in 0..4 {
        out.push(&ConformalVector::basis(0, 1 << i) + &star(ctx, order, 1 << i, 1, beta));
    }
    Ok(out)
}

/// Every monomial of `Λ(V)`: an `F[∂]`-basis of `K_{N,q}`.
pub fn k_basis(ctx: &ConformalContext) -> Vec<ConformalVector> {
    ctx.monomials().into_iter().map(|a| ConformalVector::basis(0, a)).collect()
}

#[derive(Default)]
struct VectorIndexer {
    index: BTreeMap<Basis, usize>,
}

impl VectorIndexer {
    fn vectorize(&mut self, x: &ConformalVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (b, c) in x.terms() {
            let len = self.index.len();
            let i = *self.index.entry(*b).or_insert(len);
            out.insert(i, c.clone());
        }
        out
    }
}

/// `span_F{∂^k g : k + maxdeg(g) ≤ window}`.
fn window_span(gens: &[ConformalVector], window: u32, idx: &mut VectorIndexer) -> SparseEchelon {
    let mut span = SparseEchelon::new();
    for g in gens {
        let top = g.max_partial();
        if top > window {
            continue;
        }
        for k in 0..=window - top {
            span.insert(idx.vectorize(&g.partial_pow(k)));
        }
    }
    span
}

/// Rank of the `F[∂]`-module spanned by `gens`.
pub fn f_partial_rank(gens: &[ConformalVector]) -> usize {
    let top = gens.iter().map(ConformalVector::max_partial).max().unwrap_or(0);
    let mut idx = VectorIndexer::default();
    let lo = window_span(gens, top + 1, &mut idx).rank();
    let hi = window_span(gens, top + 2, &mut idx).rank();
    hi - lo
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanClosureReport {
    pub context: String,
    pub generators: usize,
    /// `F[∂]`-rank of the span.
    pub rank: usize,
    /// Largest power of `∂` in the generators and in the brackets.
    pub window: u32,
    pub pairs_checked: usize,
    pub coefficients_checked: usize,
    pub witnesses: Vec<String>,
}

impl SpanClosureReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

const MAX_WITNESSES: usize = 5;

/// Checks that every `λ`-coefficient of every `[g_λ h]` lies in the
/// `F[∂]`-span of `gens`. Membership is tested inside the finite window of
/// `∂`-degrees that occur; if an element is found only after widening the
/// window, that is reported as an error.
pub fn span_closure_check(ctx: &ConformalContext, gens: &[ConformalVector]) -> Result<SpanClosureReport> {
    let mut brackets = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for (j, h) in gens.iter().enumerate() {
            brackets.push((i, j, ctx.bracket(g, h)));
        }
    }
    let window = brackets
        .iter()
        .flat_map(|(_, _, p)| p.coeffs().iter().map(ConformalVector::max_partial))
        .chain(gens.iter().map(ConformalVector::max_partial))
        .max()
        .unwrap_or(0);
    let mut idx = VectorIndexer::default();
    let span = window_span(gens, window, &mut idx);
    let mut wider: Option<SparseEchelon> = None;
    let mut report = SpanClosureReport {
        context: ctx.to_string(),
        generators: gens.len(),
        rank: f_partial_rank(gens),
        window,
        pairs_checked: brackets.len(),
        coefficients_checked: 0,
        witnesses: Vec::new(),
    };
    let mut violations = 0;
    for (i, j, p) in &brackets {
        for (n, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            report.coefficients_checked += 1;
            let v = idx.vectorize(c);
            if span.contains(&v) {
                continue;
            }
            let w = wider.get_or_insert_with(|| window_span(gens, window + 2, &mut idx));
            if w.contains(&v) {
                return Err(Error::Window(format!(
                    "the lambda^{n} coefficient of [g{i}_l g{j}] needs d-degree above {window}"
                )));
            }
            violations += 1;
            if report.witnesses.len() < MAX_WITNESSES {
                report.witnesses.push(format!(
                    "lambda^{n} coefficient of [g{i}_l g{j}] = {c} is outside the span (g{i} = {}, g{j} = {})",
                    gens[*i], gens[*j]
                ));
            }
        }
    }
    if violations > MAX_WITNESSES {
        report.witnesses.push(format!("... and {} more", violations - MAX_WITNESSES));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts_and_conditions() {
        let ctx = ConformalContext::new("diag:1,1,1,1,1,-1".parse().unwrap()).unwrap();
        let alpha = ck6_alpha(&ctx).unwrap().root;
        assert_eq!(alpha, ExactScalar::one());
        let gens = ck6_generators(&ctx, &alpha).unwrap();
        assert_eq!(gens.len(), 32);
        assert_eq!(f_partial_rank(&gens), 32);
        assert!(ck6_generators(&ctx, &ExactScalar::from_int(2)).is_err());

        let c4 = ConformalContext::identity(4).unwrap();
        let gens = s2_generators(&c4, &ExactScalar::one()).unwrap();
        assert_eq!(gens.len(), 11);
        let c4b = ConformalContext::new("diag:2,1,1,1".parse().unwrap()).unwrap();
        assert!(!s2_beta(&c4b).unwrap().root.is_rational());
    }

    #[test]
    fn k4_basis_closes() {
        let ctx = ConformalContext::identity(4).unwrap();
        let r = span_closure_check(&ctx, &k_basis(&ctx)).unwrap();
        assert!(r.passed());
        assert_eq!(r.rank, 16);
    }

    #[test]
    fn s2_closes_and_control_fails() {
        let ctx = ConformalContext::identity(4).unwrap();
        let gens = s2_generators(&ctx, &ExactScalar::one()).unwrap();
        let r = span_closure_check(&ctx, &gens).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        // dropping the Virasoro-type generator breaks closure
        let r = span_closure_check(&ctx, &gens[1..]).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn composition_order_star_does_not_close() {
        let ctx = ConformalContext::identity(4).unwrap();
        for b in [1, -1] {
            let gens = s2_generators_with(&ctx, &ExactScalar::from_int(b), StarOrder::Composition).unwrap();
            assert!(!span_closure_check(&ctx, &gens).unwrap().passed());
        }
    }

    #[test]
    fn s2_over_quadratic_extension() {
        let ctx = ConformalContext::new("diag:2,1,1,1".parse().unwrap()).unwrap();
        let beta = s2_beta(&ctx).unwrap().root;
        for b in [beta.clone(), -beta] {
            let r = span_closure_check(&ctx, &s2_generators(&ctx, &b).unwrap()).unwrap();
            assert!(r.passed(), "{:?}", r.witnesses);
            assert_eq!(r.rank, 8);
        }
    }

    #[test]
    fn ck6_closes_for_both_signs() {
        let ctx = ConformalContext::new("diag:1,1,1,1,1,-1".parse().unwrap()).unwrap();
        for a in [1, -1] {
            let gens = ck6_generators(&ctx, &ExactScalar::from_int(a)).unwrap();
            let r = span_closure_check(&ctx, &gens).unwrap();
            assert!(r.passed(), "{:?}", r.witnesses);
        }
        let bad = ctx.corrupted();
        let gens = ck6_generators(&bad, &ExactScalar::one()).unwrap();
        assert!(!span_closure_check(&bad, &gens).unwrap().passed());
    }
}
