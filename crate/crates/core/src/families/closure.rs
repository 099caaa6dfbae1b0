//! Checks that computed graded components close under the bracket,
//! `[g_i, g_j] ⊆ g_{i+j}`, and that the negative part acts without kernel on
//! the non-negative part.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::linalg::SparseEchelon;
use crate::poly::GradingType;
use crate::vfield::{Indexer, VectorField};

use super::graded::{depth, graded_component};
use super::AlgebraSpec;

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub family: String,
    pub grading: String,
    pub jmax: i64,
    /// `(degree, (even, odd))` for every computed component.
    pub dims: Vec<(i64, (usize, usize))>,
    pub pairs_checked: usize,
    /// Brackets found outside the component they should lie in.
    pub witnesses: Vec<String>,
    /// Degrees `j ≥ 0` on which some nonzero element commutes with the whole negative part.
    pub transitivity_failures: Vec<i64>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty() && self.transitivity_failures.is_empty()
    }
}

const MAX_WITNESSES: usize = 5;

struct Component {
    basis: Vec<VectorField>,
    span: SparseEchelon,
}

/// Computes the components of degrees `−d..=jmax` and checks closure and
/// transitivity. With `corrupt`, one basis element that some bracket needs is
/// deleted first, so the check must report a violation.
pub fn bracket_closure_check(
    spec: &AlgebraSpec,
    t: &GradingType,
    jmax: i64,
    corrupt: bool,
) -> Result<ClosureReport> {
    let d = depth(t);
    let mut indexer = Indexer::new();
    let mut comps: BTreeMap<i64, Component> = BTreeMap::new();
    for j in -d..=jmax {
        let c = graded_component(spec, t, j)?;
        let mut span = SparseEchelon::new();
        for x in &c.basis {
            span.insert(indexer.vectorize(x));
        }
        comps.insert(j, Component { basis: c.basis, span });
    }
    let degrees: Vec<i64> = comps.keys().copied().collect();
    if corrupt {
        corrupt_components(&mut comps, &degrees, jmax, &mut indexer)?;
    }

    let mut report = ClosureReport {
        family: spec.to_string(),
        grading: t.to_string(),
        jmax,
        dims: comps
            .iter()
            .map(|(&j, c)| {
                let odd = c.basis.iter().filter(|x| x.parity() == Some(1)).count();
                (j, (c.basis.len() - odd, odd))
            })
            .collect(),
        pairs_checked: 0,
        witnesses: Vec::new(),
        transitivity_failures: Vec::new(),
    };

    let mut violations = 0;
    for (a, &i) in degrees.iter().enumerate() {
        for &j in &degrees[a..] {
            if i + j > jmax {
                continue;
            }
            for (xi, x) in comps[&i].basis.iter().enumerate() {
                let start = if i == j { xi } else { 0 };
                for y in &comps[&j].basis[start..] {
                    report.pairs_checked += 1;
                    let b = x.bracket(y)?;
                    if b.is_zero() {
                        continue;
                    }
                    let inside = comps.get(&(i + j)).is_some_and(|c| c.span.contains(&indexer.vectorize(&b)));
                    if inside {
                        continue;
                    }
                    violations += 1;
                    if report.witnesses.len() < MAX_WITNESSES {
                        report.witnesses.push(format!(
                            "[g_{i}, g_{j}]: [{x}, {y}] = {b} is not in g_{}",
                            i + j
                        ));
                    }
                }
            }
        }
    }
    if violations > MAX_WITNESSES {
        report.witnesses.push(format!("... and {} more", violations - MAX_WITNESSES));
    }

    // transitivity: x ↦ ([e, x])_e over the negative basis is injective
    let negative: Vec<&VectorField> =
        comps.range(..0).flat_map(|(_, c)| c.basis.iter()).collect();
    if !negative.is_empty() {
        for j in 0..=jmax {
            let Some(c) = comps.get(&j) else { continue };
            let mut images = SparseEchelon::new();
            let mut local = Indexer::new();
            let width = 1usize << 40;
            for x in &c.basis {
                let mut v = crate::linalg::SparseVector::new();
                for (k, e) in negative.iter().enumerate() {
                    for (idx, s) in local.vectorize(&e.bracket(x)?) {
                        v.insert(k * width + idx, s);
                    }
                }
                images.insert(v);
            }
            if images.rank() < c.basis.len() {
                report.transitivity_failures.push(j);
            }
        }
    }
    Ok(report)
}

fn corrupt_components(
    comps: &mut BTreeMap<i64, Component>,
    degrees: &[i64],
    jmax: i64,
    indexer: &mut Indexer,
) -> Result<()> {
    let mut needed = Vec::new();
    for (a, &i) in degrees.iter().enumerate() {
        for &j in &degrees[a..] {
            let target = i + j;
            if target > jmax || !comps.contains_key(&target) {
                continue;
            }
            for x in &comps[&i].basis {
                for y in &comps[&j].basis {
                    let b = x.bracket(y)?;
                    if !b.is_zero() {
                        needed.push((target, indexer.vectorize(&b)));
                    }
                }
            }
        }
    }
    // drop one basis element that some bracket needs
    for (target, v) in needed {
        let comp = comps.get_mut(&target).expect("present");
        for drop in 0..comp.basis.len() {
            let mut span = SparseEchelon::new();
            for (k, z) in comp.basis.iter().enumerate() {
                if k != drop {
                    span.insert(indexer.vectorize(z));
                }
            }
            if !span.contains(&v) {
                comp.basis.remove(drop);
                comp.span = span;
                return Ok(());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w12_closes_and_control_fails() {
        let spec = AlgebraSpec::W { m: 1, n: 2 };
        let t = spec.principal_grading();
        let ok = bracket_closure_check(&spec, &t, 2, false).unwrap();
        assert!(ok.passed(), "{:?}", ok.witnesses);
        let bad = bracket_closure_check(&spec, &t, 2, true).unwrap();
        assert!(!bad.passed());
        assert!(!bad.witnesses.is_empty());
    }

    #[test]
    fn sho33_closes() {
        let spec = AlgebraSpec::SHO { n: 3 };
        let t = GradingType::new(vec![2, 2, 2], vec![1, 1, 1]);
        let r = bracket_closure_check(&spec, &t, 1, false).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }
}
