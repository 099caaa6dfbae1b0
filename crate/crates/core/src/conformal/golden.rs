//! `λ`-bracket tables as JSON Lines: one record per ordered pair of basis
//! monomials, in canonical monomial order, with exact scalars as strings.

use serde::{Deserialize, Serialize};

use super::bracket::{Basis, ConformalVector, LambdaPoly};
use super::{mono_name, parse_mono, ConformalContext};
use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTerm {
    pub d: u32,
    pub mono: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub a: String,
    pub b: String,
    /// Coefficients of `λ^0, λ^1, …`.
    pub lambda: Vec<Vec<GoldenTerm>>,
}

impl BracketRecord {
    pub fn from_poly(a: &str, b: &str, p: &LambdaPoly) -> Self {
        let lambda = p
            .coeffs()
            .iter()
            .map(|v| {
                v.terms()
                    .iter()
                    .map(|(b, c)| GoldenTerm { d: b.d, mono: mono_name(b.mask), coeff: c.to_string() })
                    .collect()
            })
            .collect();
        BracketRecord { a: a.into(), b: b.into(), lambda }
    }

    pub fn to_poly(&self) -> Result<LambdaPoly> {
        let mut coeffs = Vec::new();
        for terms in &self.lambda {
            let mut v = ConformalVector::zero();
            for t in terms {
                let c: ExactScalar = t.coeff.parse()?;
                v.add_term(Basis { d: t.d, mask: parse_mono(&t.mono)? }, &c);
            }
            coeffs.push(v);
        }
        Ok(LambdaPoly::from_coeffs(coeffs))
    }
}

/// The full table of `[A_λ B]` over basis monomials.
pub fn bracket_table(ctx: &ConformalContext) -> Vec<BracketRecord> {
    let monos = ctx.monomials();
    let mut out = Vec::with_capacity(monos.len() * monos.len());
    for &a in &monos {
        for &b in &monos {
            out.push(BracketRecord::from_poly(&mono_name(a), &mono_name(b), &ctx.bracket_monomials(a, b)));
        }
    }
    out
}

pub fn to_jsonl(records: &[BracketRecord]) -> String {
    let mut s = String::new();
    for r in records {
        s.push_str(&serde_json::to_string(r).expect("records serialize"));
        s.push('\n');
    }
    s
}

pub fn from_jsonl(src: &str) -> Result<Vec<BracketRecord>> {
    src.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse(format!("line {}: {e}", i + 1))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ctx = ConformalContext::new("diag:2,1,-3".parse().unwrap()).unwrap();
        let table = bracket_table(&ctx);
        assert_eq!(table.len(), 64);
        let back = from_jsonl(&to_jsonl(&table)).unwrap();
        assert_eq!(back, table);
        for (r, (a, b)) in back.iter().zip(ctx.monomials().into_iter().flat_map(|a| ctx.monomials().into_iter().map(move |b| (a, b)))) {
            assert_eq!(r.to_poly().unwrap(), ctx.bracket_monomials(a, b));
        }
    }
}
