//! One line per acceptance criterion; exits nonzero if any criterion fails.
//! Negative controls are part of each criterion: a corrupted construction
//! must be reported as a failure, never as a pass or an error.

use std::process::{Command, ExitCode};
use std::time::Instant;

use superalg::checks::{self, Config};
use superalg::conformal::Axiom;
use superalg::families::table1::table1_entries;
use superalg::families::AlgebraSpec;
use superalg::poly::GradingType;
use superalg::qforms::{FormFamily, QuadraticForm};
use superalg::report::{render, CheckReport, OutputFormat, Status};
use superalg::scalar::rat;

fn q(s: &str) -> QuadraticForm {
    s.parse().expect("form literal")
}

/// Reports that must pass, and corrupted variants that must fail.
#[derive(Default)]
struct Evidence {
    pass: Vec<CheckReport>,
    fail: Vec<CheckReport>,
    notes: Vec<String>,
}

impl Evidence {
    fn ok(&self) -> bool {
        self.pass.iter().all(|r| r.status == Status::Pass)
            && self.fail.iter().all(|r| r.status == Status::Fail)
            && self.notes.is_empty()
    }

    fn problems(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .pass
            .iter()
            .filter(|r| r.status != Status::Pass)
            .map(|r| format!("expected pass: {}", r.to_text()))
            .collect();
        out.extend(
            self.fail
                .iter()
                .filter(|r| r.status != Status::Fail)
                .map(|r| format!("control not failing: {}", r.to_text())),
        );
        out.extend(self.notes.iter().cloned());
        out
    }
}

fn bracket_axioms() -> Evidence {
    let cfg = Config { seed: 11, trunc: 4, samples: 200, ..Config::default() };
    let specs = [
        AlgebraSpec::W { m: 2, n: 2 },
        AlgebraSpec::W { m: 1, n: 3 },
        AlgebraSpec::h_identity(1, 2),
        AlgebraSpec::h_identity(2, 1),
    ];
    Evidence {
        pass: specs.iter().map(|s| checks::jacobi(s, &cfg)).collect(),
        fail: specs.iter().map(|s| checks::jacobi(s, &Config { corrupt: true, ..cfg })).collect(),
        notes: Vec::new(),
    }
}

fn table_dimensions() -> Evidence {
    let mut notes = Vec::new();
    // S(2,1) ≅ HO(2,2) is not listed as an S-series row of its own
    if table1_entries().iter().any(|e| e.spec == AlgebraSpec::S { m: 2, n: 1 }) {
        notes.push("S(2,1) appears as a row".into());
    }
    let w12 = AlgebraSpec::W { m: 1, n: 2 };
    let mut pass = checks::table1_all();
    pass.push(checks::table1(&w12, &w12.principal_grading(), -1, None, false));
    Evidence { pass, fail: vec![checks::table1(&w12, &w12.principal_grading(), -1, None, true)], notes }
}

fn codimensions() -> Evidence {
    let sko = AlgebraSpec::SKO { n: 2, beta: rat(2, 1) };
    let w12 = AlgebraSpec::W { m: 1, n: 2 };
    let sub = GradingType::new(vec![1, 1], vec![0, 0, 1]);
    let mut pass = Vec::new();
    for (spec, t, e) in [
        (&sko, sko.principal_grading(), (2, 3)),
        (&sko, sub, (2, 2)),
        (&w12, w12.principal_grading(), (1, 2)),
    ] {
        pass.extend(checks::subalgebra(spec, &t, 0, Some(e), false));
    }
    Evidence { pass, ..Default::default() }
}

fn closure() -> Evidence {
    let mut seen: Vec<(AlgebraSpec, GradingType)> = Vec::new();
    for e in table1_entries() {
        if !seen.iter().any(|(s, t)| *s == e.spec && *t == e.grading) {
            seen.push((e.spec, e.grading));
        }
    }
    let mut ev = Evidence::default();
    for (spec, t) in &seen {
        let reports = checks::subalgebra(spec, t, 2, None, false);
        ev.pass.push(reports[0].clone());
        ev.fail.push(checks::subalgebra(spec, t, 2, None, true)[0].clone());
    }
    ev
}

fn e16_generation() -> Evidence {
    let split = q("diag:1,1,1,1,1,-1");
    Evidence {
        pass: vec![checks::e16(&split, 1, false), checks::e16(&q("diag:1,1,1,1,1,1"), 1, false), checks::e16_listed()],
        fail: vec![checks::e16(&split, 1, true)],
        notes: Vec::new(),
    }
}

fn conformal_axioms() -> Evidence {
    let all = [Axiom::Sesquilinearity, Axiom::Skew, Axiom::Jacobi];
    let mut ev = Evidence::default();
    let other = [2, -1, 3, -5];
    for n in 1..=4 {
        ev.pass.extend(checks::conformal_axioms(&QuadraticForm::identity(n), &all, None, 0, false));
        let d = QuadraticForm::diag_i64(&other[..n]).expect("nondegenerate");
        ev.pass.extend(checks::conformal_axioms(&d, &all, None, 0, false));
    }
    ev.pass.extend(checks::conformal_axioms(&QuadraticForm::identity(6), &all, Some(500), 5, false));
    // sesquilinearity holds by construction, so the corrupted context only breaks the others
    ev.fail.extend(checks::conformal_axioms(&q("diag:1,1"), &[Axiom::Skew, Axiom::Jacobi], None, 0, true));
    ev.fail.extend(checks::conformal_axioms(&QuadraticForm::identity(6), &[Axiom::Jacobi], Some(500), 5, true));
    ev
}

fn hodge() -> Evidence {
    let mut ev = Evidence::default();
    for form in ["diag:1,1,1,1", "diag:2,1,1,1", "diag:1,1,1,-1", "diag:1,1,1,1,1,1", "diag:2,1,1,1,1,1", "diag:1,1,1,1,1,-1"] {
        ev.pass.push(checks::hodge(&q(form), false));
        ev.fail.push(checks::hodge(&q(form), true));
    }
    ev
}

fn ck6_s2() -> Evidence {
    let split = q("diag:1,1,1,1,1,-1");
    Evidence {
        pass: vec![
            checks::ck6_closure(&split, 1, false),
            checks::ck6_closure(&q("diag:1,1,1,1,1,1"), 1, false),
            checks::s2_closure(&q("diag:1,1,1,1"), 1, false),
            checks::s2_closure(&q("diag:2,1,1,1"), 1, false),
        ],
        fail: vec![checks::ck6_closure(&split, 1, true), checks::s2_closure(&q("diag:1,1,1,1"), 1, true)],
        notes: Vec::new(),
    }
}

fn annihilation() -> Evidence {
    let cfg = Config { modes: 4, samples: 100, seed: 2, ..Config::default() };
    let mut ev = Evidence::default();
    for form in ["diag:1,1", "diag:1,1,1,1", "diag:2,-1,1,3"] {
        ev.pass.extend(checks::annihilation_compare(&q(form), &cfg));
    }
    ev.fail.extend(checks::annihilation_compare(&q("diag:1,1"), &Config { corrupt: true, ..cfg })[1..].iter().cloned());
    ev
}

fn real_forms() -> Evidence {
    let mut pass: Vec<CheckReport> = (1..=10).map(|n| checks::forms_count(FormFamily::H, n)).collect();
    pass.push(checks::forms_count(FormFamily::E16, 6));
    pass.push(checks::forms_count(FormFamily::S12, 4));
    Evidence { pass, ..Default::default() }
}

fn scaling() -> Evidence {
    let mut ev = Evidence::default();
    for lambda in [rat(2, 1), rat(-3, 1), rat(1, 5)] {
        for k in 1..=2 {
            for n in 1..=2 {
                let form = QuadraticForm::diag_i64(&[3, -1][..n]).expect("nondegenerate");
                for spec in [AlgebraSpec::H { k, n, q: form.clone() }, AlgebraSpec::K { k, n, q: form.clone() }] {
                    ev.pass.push(checks::pullback_check(&spec, &lambda, false));
                    ev.fail.push(checks::pullback_check(&spec, &lambda, true));
                }
            }
        }
    }
    ev
}

fn seeded_batch() -> Vec<CheckReport> {
    let cfg = Config { seed: 17, trunc: 4, samples: 60, modes: 4, corrupt: false };
    let mut out = vec![checks::jacobi(&AlgebraSpec::W { m: 1, n: 3 }, &cfg), checks::jacobi(&AlgebraSpec::h_identity(1, 2), &cfg)];
    out.extend(checks::conformal_axioms(&QuadraticForm::identity(6), &[Axiom::Jacobi], Some(100), 17, false));
    out.extend(checks::annihilation_compare(&q("diag:1,1,1"), &cfg));
    out
}

fn determinism() -> Evidence {
    let mut notes = Vec::new();
    let a = render(&seeded_batch(), OutputFormat::Json, true);
    let b = render(&seeded_batch(), OutputFormat::Json, true);
    if a != b {
        notes.push("library reports differ between runs".into());
    }
    let bin = env!("CARGO_BIN_EXE_superalg");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs").stdout;
    for args in [
        &["jacobi", "--family", "W", "--m", "2", "--n", "2", "--seed", "9", "--samples", "50", "--canonical"][..],
        &["conformal-axioms", "--q", "diag:1,1,1,1,1,1", "--samples", "100", "--seed", "4", "--canonical"][..],
        &["annihilation-compare", "--q", "diag:1,-1", "--seed", "3", "--canonical"][..],
    ] {
        let (x, y) = (run(args), run(args));
        if x != y || x.is_empty() {
            notes.push(format!("command output differs between runs: {}", args.join(" ")));
        }
    }
    Evidence { notes, ..Default::default() }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Evidence); 12] = [
        ("bracket axioms: Jacobi for W(2,2), W(1,3), H(2,2), H(4,1)", bracket_axioms),
        ("tabulated dimensions of g_-1 and g_0", table_dimensions),
        ("codimensions of SKO(2,3;2) and W(1,2)", codimensions),
        ("bracket closure up to degree 2 for every family", closure),
        ("E(1,6) generated inside K_q(1,6)", e16_generation),
        ("conformal axioms for K_{N,q}", conformal_axioms),
        ("Hodge involution", hodge),
        ("CK_{6,q} and S_{2,q} closure", ck6_s2),
        ("annihilation algebra against K_q(1,N)", annihilation),
        ("real-form counts", real_forms),
        ("scaling isomorphisms of sigma_q and Sigma_q", scaling),
        ("determinism of canonical reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ev = run();
        let status = if ev.ok() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} ({} checks, {} controls, {:.1} s)",
            i + 1,
            ev.pass.len(),
            ev.fail.len(),
            start.elapsed().as_secs_f64()
        );
        if !ev.ok() {
            failed += 1;
            for p in ev.problems() {
                println!("    {p}");
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
