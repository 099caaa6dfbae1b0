//! The isomorphisms `H_q ≅ H_{λq}` and `K_q ≅ K_{λq}` induced by rescaling
//! the momenta (and the contact variable).

use crate::error::{domain, Result};
use crate::linalg::ExactMatrix;
use crate::qforms::QuadraticForm;
use crate::scalar::{ExactScalar, Rational};

use super::AlgebraSpec;

#[derive(Clone, Debug)]
pub struct ScalingCheck {
    pub family: String,
    pub lambda: Rational,
    /// `c` with `g^*(ω_q) = c·ω_{λq}` for `g: p ↦ λ⁻¹p` (and `t ↦ λ⁻¹t`).
    pub forward: Option<ExactScalar>,
    /// `c` with `(g⁻¹)^*(ω_{λq}) = c·ω_q`.
    pub inverse: Option<ExactScalar>,
}

impl ScalingCheck {
    pub fn expected_forward(&self) -> ExactScalar {
        ExactScalar::from_rational(self.lambda.recip())
    }

    pub fn passed(&self) -> bool {
        self.forward.as_ref() == Some(&self.expected_forward())
            && self.inverse.as_ref() == Some(&ExactScalar::from_rational(self.lambda.clone()))
    }
}

pub fn scale_form(q: &QuadraticForm, lambda: &Rational) -> Result<QuadraticForm> {
    QuadraticForm::from_gram(q.gram().iter().map(|r| r.iter().map(|c| c * lambda).collect()).collect())
}

/// The diagonal substitution `p_i ↦ s·p_i` (and `t ↦ s·t` for `K`), identity elsewhere.
pub fn scaling_substitution(spec: &AlgebraSpec, s: &Rational) -> Result<(ExactMatrix, ExactMatrix)> {
    let amb = spec.ambient();
    let scaled: Vec<usize> = match spec {
        AlgebraSpec::H { k, .. } => (0..*k).collect(),
        AlgebraSpec::K { k, .. } => (0..=*k).collect(),
        _ => return Err(domain(format!("no scaling isomorphism for {}", spec.name()))),
    };
    let diag: Vec<ExactScalar> = (0..amb.m)
        .map(|i| if scaled.contains(&i) { ExactScalar::from_rational(s.clone()) } else { ExactScalar::one() })
        .collect();
    Ok((ExactMatrix::diagonal(&diag), ExactMatrix::identity(amb.n)))
}

fn with_form(spec: &AlgebraSpec, q: QuadraticForm) -> AlgebraSpec {
    match spec {
        AlgebraSpec::H { k, n, .. } => AlgebraSpec::H { k: *k, n: *n, q },
        AlgebraSpec::K { k, n, .. } => AlgebraSpec::K { k: *k, n: *n, q },
        other => other.clone(),
    }
}

pub fn scaling_check(spec: &AlgebraSpec, lambda: &Rational) -> Result<ScalingCheck> {
    spec.validate()?;
    if num_traits::Zero::is_zero(lambda) {
        return Err(domain("lambda must be nonzero"));
    }
    let q = match spec {
        AlgebraSpec::H { q, .. } | AlgebraSpec::K { q, .. } => q,
        _ => return Err(domain(format!("no scaling isomorphism for {}", spec.name()))),
    };
    let scaled = with_form(spec, scale_form(q, lambda)?);
    let omega = spec.defining_form().expect("H and K have defining forms");
    let omega_scaled = scaled.defining_form().expect("H and K have defining forms");
    let (ge, go) = scaling_substitution(spec, &lambda.recip())?;
    let (ge_inv, go_inv) = scaling_substitution(spec, lambda)?;
    Ok(ScalingCheck {
        family: spec.name(),
        lambda: lambda.clone(),
        forward: omega.pullback(&ge, &go)?.proportionality(&omega_scaled),
        inverse: omega_scaled.pullback(&ge_inv, &go_inv)?.proportionality(&omega),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn h_and_k_rescale() {
        for lambda in [rat(2, 1), rat(-3, 1), rat(1, 5)] {
            for k in 1..=2 {
                for n in 1..=2 {
                    let q = QuadraticForm::diag_i64(&[3, -1][..n]).unwrap();
                    for spec in [AlgebraSpec::H { k, n, q: q.clone() }, AlgebraSpec::K { k, n, q: q.clone() }] {
                        let c = scaling_check(&spec, &lambda).unwrap();
                        assert!(c.passed(), "{} λ={lambda}: {:?}", spec.name(), c);
                    }
                }
            }
        }
    }

    #[test]
    fn same_substitution_on_the_scaled_form_is_not_proportional() {
        let spec = AlgebraSpec::h_identity(1, 1);
        let lambda = rat(2, 1);
        let scaled = with_form(&spec, scale_form(&QuadraticForm::identity(1), &lambda).unwrap());
        let (ge, go) = scaling_substitution(&spec, &lambda.recip()).unwrap();
        let pulled = scaled.defining_form().unwrap().pullback(&ge, &go).unwrap();
        assert!(pulled.proportionality(&spec.defining_form().unwrap()).is_none());
    }

    #[test]
    fn rejects_other_families() {
        assert!(scaling_check(&AlgebraSpec::W { m: 1, n: 1 }, &rat(2, 1)).is_err());
        assert!(scaling_check(&AlgebraSpec::h_identity(1, 1), &rat(0, 1)).is_err());
    }
}
