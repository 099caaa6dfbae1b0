//! The verification checks behind each command-line subcommand, returning
//! [`CheckReport`]s. With `corrupt`, each check runs a deliberately broken
//! variant of its construction, which must be reported as a failure.

use crate::conformal::{
    axioms_check, ck, compare_with_contact, hodge_involution_failures, span_closure_check, AnnihilationAlgebra,
    Axiom, ConformalContext, Exterior, Sampling,
};
use crate::error::{domain, Error, Result};
use crate::families::e16::{e16_from_functions, hodge_eigenfunctions, hyperbolic_form, listed_eigen_signs, listed_g1_plus};
use crate::families::scaling::{scale_form, scaling_check, scaling_substitution};
use crate::families::table1::{expected_dims, table1_entries};
use crate::families::{bracket_closure_check, codimension, graded_component, AlgebraSpec};
use crate::poly::GradingType;
use crate::qforms::{exists_form, real_form_count, scalar_equiv_rational, scalar_equiv_real, FormFamily, QuadraticForm};
use crate::report::{CheckReport, Outcome};
use crate::sampling::{jacobi_h, jacobi_w};
use crate::scalar::{BaseField, ExactScalar, Rational};

/// Shared flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Jet order of sampled elements.
    pub trunc: u32,
    pub samples: usize,
    /// Truncation order of annihilation-algebra modes.
    pub modes: u32,
    pub corrupt: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, trunc: 4, samples: 200, modes: 4, corrupt: false }
    }
}

fn dims(d: (usize, usize)) -> String {
    format!("({}|{})", d.0, d.1)
}

fn spec_params(r: CheckReport, spec: &AlgebraSpec) -> CheckReport {
    let r = match spec {
        AlgebraSpec::W { m, n } | AlgebraSpec::S { m, n } => r.param("m", *m).param("n", *n),
        AlgebraSpec::H { k, n, q } => r.param("m", 2 * k).param("n", *n).param("q", q.to_string()),
        AlgebraSpec::K { k, n, q } => r.param("m", 2 * k + 1).param("n", *n).param("q", q.to_string()),
        AlgebraSpec::SKO { n, beta } => r.param("n", *n).param("beta", beta.to_string()),
        AlgebraSpec::HO { n }
        | AlgebraSpec::SHO { n }
        | AlgebraSpec::KO { n }
        | AlgebraSpec::SHOTilde { n }
        | AlgebraSpec::SKOTilde { n } => r.param("n", *n),
    };
    r.param("corrupt", false)
}

fn with_corrupt(r: CheckReport, corrupt: bool) -> CheckReport {
    r.param("corrupt", corrupt)
}

/// Sampled super Jacobi for `W(m,n)` fields or the Poisson bracket of `H(2k,n)`.
pub fn jacobi(spec: &AlgebraSpec, cfg: &Config) -> CheckReport {
    let r = spec_params(CheckReport::new("jacobi", spec.name()), spec)
        .param("trunc", cfg.trunc)
        .param("samples", cfg.samples);
    with_corrupt(r, cfg.corrupt).seed(cfg.seed).run(|| {
        let outcome = match spec {
            AlgebraSpec::W { .. } => jacobi_w(spec.ambient(), cfg.trunc, cfg.samples, cfg.seed, cfg.corrupt)?,
            AlgebraSpec::H { k, n, .. } => jacobi_h(*k, *n, cfg.trunc, cfg.samples, cfg.seed, cfg.corrupt)?,
            _ => return Err(domain(format!("the jacobi check covers W and H, not {spec}"))),
        };
        Ok(Outcome::new(
            outcome.witness.is_none(),
            format!("{} triples satisfy Jacobi", cfg.samples),
            format!("{} triples checked, {} violations", outcome.checked, usize::from(outcome.witness.is_some())),
            outcome.witness.into_iter().collect(),
        ))
    })
}

/// Dimensions of one graded component against the closed form (or `expect`).
/// With `corrupt`, one computed basis element is discarded (an empty
/// component gains a spurious one).
pub fn table1(spec: &AlgebraSpec, t: &GradingType, degree: i64, expect: Option<(usize, usize)>, corrupt: bool) -> CheckReport {
    let closed = expected_dims(spec, t, degree);
    let source = match (expect, &closed) {
        (Some(_), _) => "given".to_string(),
        (None, Some(e)) => e.source.clone(),
        (None, None) => "none".to_string(),
    };
    let r = spec_params(CheckReport::new("table1", spec.name()), spec)
        .param("grading", t.to_string())
        .param("degree", degree)
        .param("source", source);
    with_corrupt(r, corrupt).run(|| {
        let expected = match expect.or(closed.map(|e| e.expected)) {
            Some(e) => e,
            None => {
                return Err(domain(format!(
                    "no closed form for {spec} in grading {t} at degree {degree}; pass --expect"
                )))
            }
        };
        let mut got = graded_component(spec, t, degree)?.dims;
        if corrupt {
            match got {
                (e, _) if e > 0 => got.0 -= 1,
                (_, o) if o > 0 => got.1 -= 1,
                _ => got.0 = 1,
            }
        }
        Ok(Outcome::compare(dims(expected), dims(got)))
    })
}

/// Every stored row of the dimension table.
pub fn table1_all() -> Vec<CheckReport> {
    table1_entries().iter().map(|e| table1(&e.spec, &e.grading, e.degree, None, false)).collect()
}

/// Bracket closure and transitivity of the components up to `jmax`, plus the
/// codimension (against `expect_codim` when given).
pub fn subalgebra(
    spec: &AlgebraSpec,
    t: &GradingType,
    jmax: i64,
    expect_codim: Option<(usize, usize)>,
    corrupt: bool,
) -> Vec<CheckReport> {
    let base = spec_params(CheckReport::new("subalgebra-closure", spec.name()), spec)
        .param("grading", t.to_string())
        .param("jmax", jmax);
    let closure = with_corrupt(base, corrupt).run(|| {
        let rep = bracket_closure_check(spec, t, jmax, corrupt)?;
        let table: Vec<String> = rep.dims.iter().map(|(j, d)| format!("g_{j}={}", dims(*d))).collect();
        let mut witnesses = rep.witnesses.clone();
        witnesses.extend(rep.transitivity_failures.iter().map(|j| format!("degree {j} has a kernel under g_-")));
        Ok(Outcome::new(
            rep.passed(),
            "[g_i, g_j] in g_{i+j} and transitive",
            format!("{} pairs checked; {}", rep.pairs_checked, table.join(" ")),
            witnesses,
        ))
    });
    let codim = spec_params(CheckReport::new("subalgebra-codimension", spec.name()), spec)
        .param("grading", t.to_string())
        .run(|| {
            let got = codimension(spec, t)?;
            Ok(match expect_codim {
                Some(e) => Outcome::compare(dims(e), dims(got)),
                None => Outcome::new(true, "-", dims(got), Vec::new()),
            })
        });
    vec![closure, codim]
}

fn context(q: &QuadraticForm, corrupt: bool) -> Result<ConformalContext> {
    let ctx = ConformalContext::new(q.clone())?;
    Ok(if corrupt { ctx.corrupted() } else { ctx })
}

fn conformal_report(id: &str, q: &QuadraticForm, corrupt: bool) -> CheckReport {
    with_corrupt(CheckReport::new(id, format!("K_{{{},q}}", q.dim())).param("q", q.to_string()), corrupt)
}

/// One report per axiom; exhaustive over basis triples when `samples` is `None`.
pub fn conformal_axioms(q: &QuadraticForm, axioms: &[Axiom], samples: Option<usize>, seed: u64, corrupt: bool) -> Vec<CheckReport> {
    axioms
        .iter()
        .map(|&axiom| {
            let sampling = match samples {
                None => Sampling::Exhaustive,
                Some(samples) => Sampling::Random { samples, seed },
            };
            let r = conformal_report("conformal-axioms", q, corrupt)
                .param("axiom", format!("{axiom:?}").to_lowercase())
                .param("sampling", samples.map_or("exhaustive".to_string(), |s| format!("random:{s}")))
                .seed(if samples.is_some() { seed } else { 0 });
            r.run(|| {
                let ctx = context(q, corrupt)?;
                let rep = axioms_check(&ctx, axiom, sampling);
                Ok(Outcome::new(
                    rep.passed(),
                    "no violation",
                    format!("{} cases checked, {} violations", rep.cases_checked, usize::from(rep.witness.is_some())),
                    rep.witness.into_iter().collect(),
                ))
            })
        })
        .collect()
}

fn signed_root(root: &ExactScalar, sign: i64) -> ExactScalar {
    if sign < 0 {
        -root.clone()
    } else {
        root.clone()
    }
}

fn closure_outcome(rep: crate::conformal::SpanClosureReport, expected_rank: usize) -> Outcome {
    let passed = rep.passed() && rep.rank == expected_rank;
    let mut witnesses = rep.witnesses.clone();
    if rep.rank != expected_rank {
        witnesses.push(format!("F[d]-rank {} instead of {expected_rank}", rep.rank));
    }
    Outcome::new(
        passed,
        format!("closed under the lambda-bracket, F[d]-rank {expected_rank}"),
        format!(
            "{} generators, F[d]-rank {}, {} pairs and {} coefficients checked, window {}",
            rep.generators, rep.rank, rep.pairs_checked, rep.coefficients_checked, rep.window
        ),
        witnesses,
    )
}

/// Closure of the 32 `CK_{6,q}` generators, `α = sign·√(−1/det q)`.
pub fn ck6_closure(q: &QuadraticForm, sign: i64, corrupt: bool) -> CheckReport {
    conformal_report("ck6-closure", q, corrupt).param("alpha-sign", sign).run(|| {
        let ctx = context(q, corrupt)?;
        let alpha = signed_root(&ck::ck6_alpha(&ctx)?.root, sign);
        let gens = ck::ck6_generators(&ctx, &alpha)?;
        Ok(closure_outcome(span_closure_check(&ctx, &gens)?, 32))
    })
}

/// Closure of the 11 `S_{2,q}` generators, `β = sign·√(1/det q)`; they span
/// a free `F[∂]`-module of rank 8.
pub fn s2_closure(q: &QuadraticForm, sign: i64, corrupt: bool) -> CheckReport {
    conformal_report("s2-closure", q, corrupt).param("beta-sign", sign).run(|| {
        let ctx = context(q, corrupt)?;
        let beta = signed_root(&ck::s2_beta(&ctx)?.root, sign);
        let gens = ck::s2_generators(&ctx, &beta)?;
        Ok(closure_outcome(span_closure_check(&ctx, &gens)?, 8))
    })
}

/// `(A^*)^* = (−1)^{N(N−1)/2} det(q)·A` on every basis monomial. With
/// `corrupt`, the star with the opposite contraction order is used.
pub fn hodge(q: &QuadraticForm, corrupt: bool) -> CheckReport {
    conformal_report("hodge", q, corrupt).run(|| {
        let ctx = ConformalContext::new(q.clone())?;
        let failures: Vec<u32> = if corrupt {
            let factor = ctx.hodge_square();
            ctx.monomials()
                .into_iter()
                .filter(|&a| {
                    let mut twice = Exterior::new();
                    for (b, c) in ctx.hodge_star_listed(a) {
                        for (d, e) in ctx.hodge_star_listed(b) {
                            *twice.entry(d).or_default() += &(&c * &e);
                        }
                    }
                    twice.retain(|_, c| !c.is_zero());
                    twice != Exterior::from([(a, factor.clone())])
                })
                .collect()
        } else {
            hodge_involution_failures(&ctx)
        };
        Ok(Outcome::new(
            failures.is_empty(),
            format!("(A*)* = {}·A for all {} monomials", ctx.hodge_square(), 1u64 << ctx.n()),
            format!("{} failures", failures.len()),
            failures.iter().take(5).map(|&a| format!("A = {}", crate::conformal::mono_name(a))).collect(),
        ))
    })
}

/// Graded dimensions of `L(K_{N,q})` against `K_q(1,N)` for degrees
/// `−2..=3`, plus Witt relations and sampled Jacobi of the mode bracket.
pub fn annihilation_compare(q: &QuadraticForm, cfg: &Config) -> Vec<CheckReport> {
    let base = conformal_report("annihilation-dims", q, false).param("modes", cfg.modes);
    let dims_report = base.run(|| {
        let ctx = ConformalContext::new(q.clone())?;
        let rows = compare_with_contact(&ctx, cfg.modes, -2..=3)?;
        let ann: Vec<String> = rows.iter().map(|r| format!("{}:{}", r.degree, dims(r.annihilation))).collect();
        let con: Vec<String> = rows.iter().map(|r| format!("{}:{}", r.degree, dims(r.contact))).collect();
        Ok(Outcome::compare(con.join(" "), ann.join(" ")))
    });
    let witt = conformal_report("annihilation-witt", q, cfg.corrupt).param("modes", cfg.modes).run(|| {
        let ctx = context(q, cfg.corrupt)?;
        let bad = AnnihilationAlgebra::new(&ctx, cfg.modes).witt_failures(cfg.modes.min(4));
        Ok(Outcome::new(
            bad.is_empty(),
            "[L_(m), L_(n)] = (m-n) L_(m+n-1)",
            format!("{} failing pairs", bad.len()),
            bad.iter().take(5).map(|(m, n)| format!("m = {m}, n = {n}")).collect(),
        ))
    });
    let jac = conformal_report("annihilation-jacobi", q, cfg.corrupt)
        .param("modes", cfg.modes)
        .param("samples", cfg.samples)
        .seed(cfg.seed)
        .run(|| {
            let ctx = context(q, cfg.corrupt)?;
            let (checked, w) = AnnihilationAlgebra::new(&ctx, cfg.modes).sampled_jacobi(cfg.samples, cfg.seed);
            Ok(Outcome::new(
                w.is_none(),
                format!("{} triples satisfy Jacobi", cfg.samples),
                format!("{checked} triples checked, {} violations", usize::from(w.is_some())),
                w.into_iter().collect(),
            ))
        });
    vec![dims_report, witt, jac]
}

/// Closed-form count of real forms, against the enumeration of signatures.
pub fn forms_count(family: FormFamily, n: usize) -> CheckReport {
    CheckReport::new("forms-count", format!("{family:?}")).param("n", n).run(|| {
        let closed = match family {
            FormFamily::H | FormFamily::K => n / 2 + 1,
            FormFamily::E16 | FormFamily::S12 => 2,
        };
        Ok(Outcome::compare(closed, real_form_count(family, n)?))
    })
}

fn answer(expected: Option<bool>, actual: bool, detail: String) -> Outcome {
    let word = |b: bool| if b { "yes" } else { "no" };
    match expected {
        Some(e) => {
            let mut o = Outcome::compare(word(e), word(actual));
            o.actual = format!("{} ({detail})", o.actual);
            o.passed = e == actual;
            o
        }
        None => Outcome::new(true, "-", format!("{} ({detail})", word(actual)), Vec::new()),
    }
}

pub fn forms_exists(family: FormFamily, q: &QuadraticForm, field: BaseField, expect: Option<bool>) -> CheckReport {
    CheckReport::new("forms-exists", format!("{family:?}"))
        .param("q", q.to_string())
        .param("field", format!("{field:?}"))
        .run(|| {
            let (ok, why) = exists_form(family, q, field)?;
            Ok(answer(expect, ok, why))
        })
}

pub fn forms_signature(q: &QuadraticForm, expect: Option<&str>) -> CheckReport {
    CheckReport::new("forms-signature", "quadratic form").param("q", q.to_string()).run(|| {
        let s = q.signature().to_string();
        Ok(match expect {
            Some(e) => Outcome::compare(e, s),
            None => Outcome::new(true, "-", s, Vec::new()),
        })
    })
}

/// Equivalence up to a nonzero scalar; over Q the answer may be undecided,
/// which is reported as an error.
pub fn forms_equiv(q: &QuadraticForm, r: &QuadraticForm, field: BaseField, expect: Option<bool>) -> CheckReport {
    CheckReport::new("forms-equiv", "quadratic form")
        .param("q", q.to_string())
        .param("r", r.to_string())
        .param("field", format!("{field:?}"))
        .run(|| {
            let eq = match field {
                BaseField::R => scalar_equiv_real(q, r)?,
                BaseField::Q => scalar_equiv_rational(q, r)?
                    .ok_or_else(|| domain("undecided over Q: square classes do not separate the forms"))?,
            };
            Ok(answer(expect, eq, format!("over {field:?}")))
        })
}

/// `p ↦ λ⁻¹p` (and `t ↦ λ⁻¹t`) pulls `ω_q` back to `λ⁻¹ω_{λq}`; the inverse
/// substitution pulls `ω_{λq}` back to `λω_q`. With `corrupt`, the same
/// substitution is applied to `ω_{λq}`, which is not a multiple of `ω_q`.
pub fn pullback_check(spec: &AlgebraSpec, lambda: &Rational, corrupt: bool) -> CheckReport {
    let r = spec_params(CheckReport::new("pullback-check", spec.name()), spec).param("lambda", lambda.to_string());
    with_corrupt(r, corrupt).run(|| {
        if corrupt {
            let q = match spec {
                AlgebraSpec::H { q, .. } | AlgebraSpec::K { q, .. } => q,
                _ => return Err(domain(format!("no scaling isomorphism for {spec}"))),
            };
            let scaled = match spec {
                AlgebraSpec::H { k, n, .. } => AlgebraSpec::H { k: *k, n: *n, q: scale_form(q, lambda)? },
                AlgebraSpec::K { k, n, .. } => AlgebraSpec::K { k: *k, n: *n, q: scale_form(q, lambda)? },
                _ => unreachable!(),
            };
            let (ge, go) = scaling_substitution(spec, &lambda.recip())?;
            let pulled = scaled.defining_form().expect("form").pullback(&ge, &go)?;
            let c = pulled.proportionality(&spec.defining_form().expect("form"));
            return Ok(Outcome::new(
                c.is_some(),
                "a scalar multiple of the form",
                c.map_or("not proportional".into(), |c| format!("{c} times the form")),
                Vec::new(),
            ));
        }
        let c = scaling_check(spec, lambda)?;
        let show = |x: &Option<ExactScalar>| x.as_ref().map_or("not proportional".to_string(), |c| c.to_string());
        Ok(Outcome::new(
            c.passed(),
            format!("forward {}, inverse {lambda}", c.expected_forward()),
            format!("forward {}, inverse {}", show(&c.forward), show(&c.inverse)),
            Vec::new(),
        ))
    })
}

/// `E_q(1,6)` inside `K_q(1,6)`, `α = sign·√(−1/det q)`. With `corrupt`,
/// `g_1^+` is built from `A + 2αA^*`, which is not invariant under `g_0`.
pub fn e16(q: &QuadraticForm, sign: i64, corrupt: bool) -> CheckReport {
    let r = CheckReport::new("e16", "E_q(1,6)").param("q", q.to_string()).param("alpha-sign", sign);
    with_corrupt(r, corrupt).run(|| {
        let ctx = ConformalContext::new(q.clone())?;
        let mut alpha = signed_root(&ck::ck6_alpha(&ctx)?.root, sign);
        if corrupt {
            alpha = &alpha * &ExactScalar::from_int(2);
        }
        let c = e16_from_functions(q, &hodge_eigenfunctions(&ctx, &alpha))?;
        let table: Vec<String> = (-2..=1).map(|j| format!("{j}:{}", dims(c.algebra.dims(j)))).collect();
        Ok(Outcome::compare(
            "-2:(1|0) -1:(0|6) 0:(16|0) 1:(0|16) g1=6+10",
            format!("{} g1={}+{}", table.join(" "), c.g1_dual_dim, c.g1_plus_dim),
        ))
    })
}

/// The ten listed `g_1^+` functions in split coordinates: independent, one
/// Hodge eigenspace, and generating `(0|16)` in degree 1.
pub fn e16_listed() -> CheckReport {
    CheckReport::new("e16-listed", "E(1,6)").param("q", hyperbolic_form().to_string()).run(|| {
        let (rank, signs) = listed_eigen_signs();
        let c = e16_from_functions(&hyperbolic_form(), &listed_g1_plus())?;
        Ok(Outcome::compare(
            "rank 10, one eigenspace, g_1 = (0|16)",
            format!(
                "rank {rank}, {}, g_1 = {}",
                if signs.len() == 1 { "one eigenspace".to_string() } else { format!("{} eigenspaces", signs.len()) },
                dims(c.algebra.dims(1))
            ),
        ))
    })
}

/// Turns a parse or setup error into an error report.
pub fn error_report(check_id: &str, e: &Error) -> CheckReport {
    let mut r = CheckReport::new(check_id, "-");
    r.set_error(e);
    r
}
