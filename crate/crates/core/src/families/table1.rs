//! Expected dimensions of `g_{-2}`, `g_{-1}` and `g_0` for the standard
//! gradings, from the closed forms of the `g_0`-module structure
//! (`gl`, `spo`, `cspo`, `p`, ... counted directly).

use crate::poly::GradingType;
use crate::qforms::QuadraticForm;
use crate::scalar::rat;

use super::AlgebraSpec;

#[derive(Clone, Debug)]
pub struct Table1Entry {
    pub spec: AlgebraSpec,
    pub grading: GradingType,
    pub degree: i64,
    pub expected: (usize, usize),
    /// Where the expected value comes from, e.g. `g_0 = gl(m|n)`.
    pub source: String,
}

fn w(m: usize, n: usize) -> Vec<Table1Entry> {
    let spec = AlgebraSpec::W { m, n };
    let t = spec.principal_grading();
    vec![
        entry(&spec, &t, -1, (m, n), "g_-1 = F^{m|n}"),
        entry(&spec, &t, 0, (m * m + n * n, 2 * m * n), "g_0 = gl(m|n)"),
    ]
}

fn entry(spec: &AlgebraSpec, t: &GradingType, degree: i64, expected: (usize, usize), source: &str) -> Table1Entry {
    Table1Entry { spec: spec.clone(), grading: t.clone(), degree, expected, source: source.into() }
}

fn h(k: usize, n: usize, q: QuadraticForm) -> Vec<Table1Entry> {
    let spec = AlgebraSpec::H { k, n, q };
    let t = spec.principal_grading();
    let sp = k * (2 * k + 1);
    let so = n * n.saturating_sub(1) / 2;
    vec![
        entry(&spec, &t, -1, (2 * k, n), "g_-1 = F^{2k|n}"),
        entry(&spec, &t, 0, (sp + so, 2 * k * n), "g_0 = spo(2k|n)"),
    ]
}

fn k(k: usize, n: usize, q: QuadraticForm) -> Vec<Table1Entry> {
    let spec = AlgebraSpec::K { k, n, q };
    let t = spec.principal_grading();
    let sp = k * (2 * k + 1);
    let so = n * n.saturating_sub(1) / 2;
    vec![
        entry(&spec, &t, -2, (1, 0), "g_-2 = F"),
        entry(&spec, &t, -1, (2 * k, n), "g_-1 = F^{2k|n}"),
        entry(&spec, &t, 0, (sp + so + 1, 2 * k * n), "g_0 = cspo(2k|n)"),
    ]
}

/// The closed-form expectation for `spec` in grading `t` at `degree`: the
/// general formulas for `W`, `H` and `K` in their principal gradings, and the
/// fixed rows of [`table1_entries`] otherwise.
pub fn expected_dims(spec: &AlgebraSpec, t: &GradingType, degree: i64) -> Option<Table1Entry> {
    let generic = match spec {
        _ if *t != spec.principal_grading() => Vec::new(),
        AlgebraSpec::W { m, n } => w(*m, *n),
        AlgebraSpec::H { k: kk, n, q } => h(*kk, *n, q.clone()),
        AlgebraSpec::K { k: kk, n, q } => k(*kk, *n, q.clone()),
        _ => Vec::new(),
    };
    generic
        .into_iter()
        .chain(table1_entries())
        .find(|e| e.spec == *spec && e.grading == *t && e.degree == degree)
}

/// Every tabulated g_-1 / g_0 dimension covered by the test suite.
pub fn table1_entries() -> Vec<Table1Entry> {
    let mut out = Vec::new();
    out.extend(w(1, 2));
    out.extend(w(2, 1));

    let s12 = AlgebraSpec::S { m: 1, n: 2 };
    let t = GradingType::new(vec![2], vec![1, 1]);
    out.push(entry(&s12, &t, -2, (1, 0), "g_-2 = F"));
    out.push(entry(&s12, &t, -1, (0, 4), "g_-1 = F^2 + F^2, odd"));
    out.push(entry(&s12, &t, 0, (4, 0), "g_0 = gl(2)"));

    out.extend(h(1, 2, QuadraticForm::identity(2)));
    out.extend(h(2, 1, QuadraticForm::identity(1)));
    out.extend(k(0, 6, QuadraticForm::identity(6)));
    out.extend(k(1, 2, QuadraticForm::identity(2)));

    let n = 3;
    let ho = AlgebraSpec::HO { n };
    let t = ho.principal_grading();
    out.push(entry(&ho, &t, -1, (n, n), "g_-1 = F^{n|n}"));
    out.push(entry(&ho, &t, 0, (n * n, n * n), "g_0 = p(n)"));

    let sho = AlgebraSpec::SHO { n };
    let t = GradingType::new(vec![2; n], vec![1; n]);
    out.push(entry(&sho, &t, -2, (n, 0), "g_-2 = F^n"));
    out.push(entry(&sho, &t, -1, (0, 2 * n), "g_-1 = F^n + F^n*, odd"));
    out.push(entry(&sho, &t, 0, (n * n - 1, 0), "g_0 = sl(n)"));

    let n = 2;
    let ko = AlgebraSpec::KO { n };
    let t = ko.principal_grading();
    out.push(entry(&ko, &t, -2, (0, 1), "g_-2 = F, odd"));
    out.push(entry(&ko, &t, -1, (n, n), "g_-1 = F^{n|n}"));
    out.push(entry(&ko, &t, 0, (n * n + 1, n * n), "g_0 = cp(n)"));

    let sko = AlgebraSpec::SKO { n, beta: rat(2, 1) };
    let t = sko.principal_grading();
    out.push(entry(&sko, &t, -1, (n, n), "g_-1 = F^{n|n}"));
    out.push(entry(&sko, &t, 0, (n * n, n * n), "g_0 = p(n) + F(E + beta Z) modulo the trace"));

    let n = 4;
    let shot = AlgebraSpec::SHOTilde { n };
    let t = shot.principal_grading();
    out.push(entry(&shot, &t, -1, (n, n), "g_-1 = F^{n|n}"));
    out.push(entry(&shot, &t, 0, (n * n - 1, n * n), "g_0 = spe(n)-type: (n^2-1|n^2)"));

    let n = 3;
    let skot = AlgebraSpec::SKOTilde { n };
    let t = skot.principal_grading();
    out.push(entry(&skot, &t, -2, (0, 1), "g_-2 = F, odd"));
    out.push(entry(&skot, &t, -1, (n, n), "g_-1 = F^{n|n}"));
    out.push(entry(&skot, &t, 0, (n * n, n * n), "g_0 = (n^2|n^2)"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::graded_component;

    #[test]
    fn all_rows_reproduced() {
        for e in table1_entries() {
            let got = graded_component(&e.spec, &e.grading, e.degree).unwrap();
            assert_eq!(got.dims, e.expected, "{} degree {} ({})", e.spec, e.degree, e.source);
        }
    }
}
