//! The series of linearly compact Lie superalgebras of vector fields, cut out
//! of `W(m,n)` by linear conditions, and tools to work with their gradings.
//!
//! Variable layout:
//! * `H(2k,n)`: `x_1..x_k = p`, `x_{k+1}..x_{2k} = q`.
//! * `K(2k+1,n)`: `x_1 = t`, then `p`, then `q`.
//! * `HO/SHO(n,n)`, `KO/SKO(n,n+1)`: even `x_1..x_n`, odd `ξ_1..ξ_n` (and `ξ_{n+1} = τ`).

pub mod closure;
pub mod e16;
pub mod generate;
pub mod graded;
pub mod hamiltonian;
pub mod scaling;
pub mod table1;

use std::fmt;

use num_traits::One;

use crate::error::{domain, Result};
use crate::forms::SuperForm;
use crate::poly::{Ambient, Gen, GradingType, Monomial, SuperPoly, EXACT};
use crate::qforms::QuadraticForm;
use crate::scalar::{ExactScalar, Rational};

pub use closure::{bracket_closure_check, ClosureReport};
pub use generate::{generate_graded_subalgebra, GeneratedSubalgebra};
pub use graded::{codimension, graded_component, GradedComponentBasis};
pub use hamiltonian::{h_bracket, hamiltonian_field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    W { m: usize, n: usize },
    S { m: usize, n: usize },
    /// Fields preserving `σ_q = Σ dp_i dq_i + Σ c_ij dξ_i dξ_j`.
    H { k: usize, n: usize, q: QuadraticForm },
    /// Fields multiplying `Σ_q = dt + Σ (p_i dq_i − q_i dp_i) + Σ c_ij ξ_i dξ_j` by a function.
    K { k: usize, n: usize, q: QuadraticForm },
    HO { n: usize },
    SHO { n: usize },
    KO { n: usize },
    SKO { n: usize, beta: Rational },
    /// Fields of `HO(n,n)` with `X(F v) = 0`, `F = 1 − 2ξ_1…ξ_n`.
    SHOTilde { n: usize },
    /// Fields of `KO(n,n+1)` with `X(F v_β) = 0`, `F = 1 + ξ_1…ξ_{n+1}`, `β = (n+2)/n`.
    SKOTilde { n: usize },
}

impl AlgebraSpec {
    pub fn h_identity(k: usize, n: usize) -> Self {
        AlgebraSpec::H { k, n, q: QuadraticForm::identity(n) }
    }

    pub fn k_identity(k: usize, n: usize) -> Self {
        AlgebraSpec::K { k, n, q: QuadraticForm::identity(n) }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            AlgebraSpec::W { m, n } | AlgebraSpec::S { m, n } if m + n == 0 => {
                Err(domain("empty ambient"))
            }
            AlgebraSpec::S { m: 0, .. } => Err(domain("S(0,n) is not a series member")),
            AlgebraSpec::H { n, q, .. } | AlgebraSpec::K { n, q, .. } if q.dim() != *n => {
                Err(domain(format!("form of dimension {} for n = {n}", q.dim())))
            }
            AlgebraSpec::SHOTilde { n } if n % 2 != 0 || *n < 2 => {
                Err(domain("SHO~(n,n) needs n even"))
            }
            AlgebraSpec::SKOTilde { n } if n % 2 != 1 => Err(domain("SKO~(n,n+1) needs n odd")),
            AlgebraSpec::HO { n } | AlgebraSpec::SHO { n } | AlgebraSpec::KO { n } | AlgebraSpec::SKO { n, .. }
                if *n == 0 =>
            {
                Err(domain("n must be positive"))
            }
            _ => Ok(()),
        }
    }

    pub fn ambient(&self) -> Ambient {
        let (m, n) = match self {
            AlgebraSpec::W { m, n } | AlgebraSpec::S { m, n } => (*m, *n),
            AlgebraSpec::H { k, n, .. } => (2 * k, *n),
            AlgebraSpec::K { k, n, .. } => (2 * k + 1, *n),
            AlgebraSpec::HO { n } | AlgebraSpec::SHO { n } | AlgebraSpec::SHOTilde { n } => (*n, *n),
            AlgebraSpec::KO { n } | AlgebraSpec::SKO { n, .. } | AlgebraSpec::SKOTilde { n } => {
                (*n, n + 1)
            }
        };
        Ambient::new(m, n)
    }

    /// The grading with all weights 1, except weight 2 for the contact
    /// variable of `K` and the odd variable `τ` of the `KO` series.
    pub fn principal_grading(&self) -> GradingType {
        let amb = self.ambient();
        let mut t = GradingType::principal(amb.m, amb.n);
        match self {
            AlgebraSpec::K { .. } => t.even[0] = 2,
            AlgebraSpec::KO { .. } | AlgebraSpec::SKO { .. } | AlgebraSpec::SKOTilde { .. } => {
                t.odd[amb.n - 1] = 2
            }
            _ => {}
        }
        t
    }

    /// The form whose stabilizer (or conformal stabilizer) cuts out the family.
    pub fn defining_form(&self) -> Option<SuperForm> {
        let amb = self.ambient();
        let x = |i| SuperForm::gen(amb, Gen::Even(i));
        let xi = |j| SuperForm::gen(amb, Gen::Odd(j));
        let dx = |i| SuperForm::d_gen(amb, Gen::Even(i));
        let dxi = |j| SuperForm::d_gen(amb, Gen::Odd(j));
        let c = |q: &QuadraticForm, i, j| ExactScalar::from_rational(q.entry(i, j).clone());
        let mut w = SuperForm::zero(amb);
        match self {
            AlgebraSpec::H { k, n, q } => {
                for i in 0..*k {
                    w = &w + &(&dx(i) * &dx(k + i));
                }
                for i in 0..*n {
                    for j in 0..*n {
                        w = &w + &(&dxi(i) * &dxi(j)).scale(&c(q, i, j));
                    }
                }
            }
            AlgebraSpec::K { k, n, q } => {
                w = dx(0);
                for i in 0..*k {
                    let (p, qq) = (1 + i, 1 + k + i);
                    w = &w + &(&x(p) * &dx(qq));
                    w = &w - &(&x(qq) * &dx(p));
                }
                for i in 0..*n {
                    for j in 0..*n {
                        w = &w + &(&xi(i) * &dxi(j)).scale(&c(q, i, j));
                    }
                }
            }
            AlgebraSpec::HO { n } | AlgebraSpec::SHO { n } | AlgebraSpec::SHOTilde { n } => {
                for i in 0..*n {
                    w = &w + &(&dx(i) * &dxi(i));
                }
            }
            AlgebraSpec::KO { n } | AlgebraSpec::SKO { n, .. } | AlgebraSpec::SKOTilde { n } => {
                w = dxi(*n);
                for i in 0..*n {
                    w = &w + &(&xi(i) * &dx(i));
                    w = &w + &(&x(i) * &dxi(i));
                }
            }
            AlgebraSpec::W { .. } | AlgebraSpec::S { .. } => return None,
        }
        Some(w)
    }

    /// Whether the defining condition is `L_X ω = λ_X ω` rather than `L_X ω = 0`.
    pub fn is_conformal(&self) -> bool {
        matches!(
            self,
            AlgebraSpec::K { .. } | AlgebraSpec::KO { .. } | AlgebraSpec::SKO { .. } | AlgebraSpec::SKOTilde { .. }
        )
    }

    /// For divergence-type conditions: the coefficient `c` in
    /// `div_β X = div X + c·λ_X`, with `L_X ω = λ_X ω`.
    ///
    /// For `SKO(n,n+1;β)` this is `c = 1 − nβ`.
    pub fn divergence_shift(&self) -> Option<Rational> {
        let beta_shift = |n: usize, beta: &Rational| Rational::one() - Rational::from_integer(n.into()) * beta;
        match self {
            AlgebraSpec::S { .. } | AlgebraSpec::SHO { .. } | AlgebraSpec::SHOTilde { .. } => {
                Some(Rational::from_integer(0.into()))
            }
            AlgebraSpec::SKO { n, beta } => Some(beta_shift(*n, beta)),
            AlgebraSpec::SKOTilde { n } => Some(beta_shift(*n, &self.tilde_beta().expect("tilde"))),
            _ => None,
        }
    }

    /// `β = (n+2)/n` of `SKO~(n,n+1)`.
    pub fn tilde_beta(&self) -> Option<Rational> {
        match self {
            AlgebraSpec::SKOTilde { n } => Some(Rational::new((*n as i64 + 2).into(), (*n as i64).into())),
            _ => None,
        }
    }

    /// The inhomogeneous function `F` of the tilde families, split as `1 + Φ`;
    /// returns `Φ`.
    pub fn tilde_top(&self) -> Option<SuperPoly> {
        let amb = self.ambient();
        let top = Monomial { even: vec![0; amb.m], odd: ((1u64 << amb.n) - 1) as u32 };
        match self {
            AlgebraSpec::SHOTilde { .. } => Some(SuperPoly::term(amb, EXACT, top, ExactScalar::from_int(-2))),
            AlgebraSpec::SKOTilde { .. } => Some(SuperPoly::term(amb, EXACT, top, ExactScalar::one())),
            _ => None,
        }
    }

    /// Monomial whose coefficient in `P_1` must vanish in the derived
    /// algebras `S(1,n)` and `SHO(n,n)`.
    pub fn excluded_monomial(&self) -> Option<Monomial> {
        match self {
            AlgebraSpec::S { m: 1, n } => {
                Some(Monomial { even: vec![0], odd: ((1u64 << n) - 1) as u32 })
            }
            AlgebraSpec::SHO { n } if *n >= 1 => Some(Monomial {
                even: vec![0; *n],
                odd: (((1u64 << n) - 1) as u32) & !1,
            }),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::W { m, n } => write!(f, "W({m},{n})"),
            AlgebraSpec::S { m, n } => write!(f, "S({m},{n})"),
            AlgebraSpec::H { k, n, q } => write!(f, "H_q({},{n}) q={q}", 2 * k),
            AlgebraSpec::K { k, n, q } => write!(f, "K_q({},{n}) q={q}", 2 * k + 1),
            AlgebraSpec::HO { n } => write!(f, "HO({n},{n})"),
            AlgebraSpec::SHO { n } => write!(f, "SHO({n},{n})"),
            AlgebraSpec::KO { n } => write!(f, "KO({n},{})", n + 1),
            AlgebraSpec::SKO { n, beta } => write!(f, "SKO({n},{};{beta})", n + 1),
            AlgebraSpec::SHOTilde { n } => write!(f, "SHO~({n},{n})"),
            AlgebraSpec::SKOTilde { n } => write!(f, "SKO~({n},{})", n + 1),
        }
    }
}

/// Parses `W`, `S`, `H`, `K`, `HO`, `SHO`, `KO`, `SKO`, `SHO~`, `SKO~` with
/// the parameters used by the command line (`m`, `n`, `q`, `beta`).
pub fn spec_from_parts(
    family: &str,
    m: Option<usize>,
    n: Option<usize>,
    q: Option<QuadraticForm>,
    beta: Option<Rational>,
) -> Result<AlgebraSpec> {
    // the odd series are named by (m, m + extra); accept either count
    let even_count = |m: Option<usize>, n: Option<usize>, extra: usize| -> Result<usize> {
        match (m, n) {
            (Some(m), Some(n)) if n != m + extra => {
                Err(domain(format!("{family}({m},{n}) needs n = m + {extra}")))
            }
            (Some(m), _) => Ok(m),
            (None, Some(n)) if n >= extra => Ok(n - extra),
            _ => Err(domain(format!("{family} needs --m"))),
        }
    };
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| domain(format!("{family} needs --{what}")));
    let n_val = need(n, "n");
    let form = |n: usize| q.clone().unwrap_or_else(|| QuadraticForm::identity(n));
    let spec = match family {
        "W" => AlgebraSpec::W { m: need(m, "m")?, n: n_val? },
        "S" => AlgebraSpec::S { m: need(m, "m")?, n: n_val? },
        "H" => {
            let m = need(m, "m")?;
            if m % 2 != 0 {
                return Err(domain("H(m,n) needs m even"));
            }
            let n = n_val?;
            AlgebraSpec::H { k: m / 2, n, q: form(n) }
        }
        "K" => {
            let m = need(m, "m")?;
            if m % 2 != 1 {
                return Err(domain("K(m,n) needs m odd"));
            }
            let n = n_val?;
            AlgebraSpec::K { k: m / 2, n, q: form(n) }
        }
        "HO" => AlgebraSpec::HO { n: even_count(m, n, 0)? },
        "SHO" => AlgebraSpec::SHO { n: even_count(m, n, 0)? },
        "SHO~" | "SHOtilde" => AlgebraSpec::SHOTilde { n: even_count(m, n, 0)? },
        "KO" => AlgebraSpec::KO { n: even_count(m, n, 1)? },
        "SKO" => AlgebraSpec::SKO {
            n: even_count(m, n, 1)?,
            beta: beta.ok_or_else(|| domain("SKO needs --beta"))?,
        },
        "SKO~" | "SKOtilde" => AlgebraSpec::SKOTilde { n: even_count(m, n, 1)? },
        _ => return Err(domain(format!("unknown family {family:?}"))),
    };
    spec.validate()?;
    Ok(spec)
}
