//! Nondegenerate quadratic forms over Q: square classes, signatures, the
//! existence conditions for the forms of `E(1,6)` and `S(1,2)`, and real-form
//! counts.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{dimension, domain, Error, Result};
use crate::linalg::ExactMatrix;
use crate::scalar::{is_square_in, parse_rational, squarefree_part, BaseField, ExactScalar, Rational};

/// A symmetric nondegenerate Gram matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    gram: Vec<Vec<Rational>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureClass {
    pub positives: usize,
    pub negatives: usize,
}

impl SignatureClass {
    pub fn flip(&self) -> Self {
        SignatureClass { positives: self.negatives, negatives: self.positives }
    }
}

impl fmt::Display for SignatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.positives, self.negatives)
    }
}

impl QuadraticForm {
    pub fn from_gram(gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(dimension("Gram matrix is not square"));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(domain("Gram matrix is not symmetric"));
                }
            }
        }
        let q = QuadraticForm { gram };
        if q.det().is_zero() {
            return Err(domain("degenerate quadratic form"));
        }
        Ok(q)
    }

    pub fn diag(entries: &[Rational]) -> Result<Self> {
        let n = entries.len();
        let mut gram = vec![vec![Rational::zero(); n]; n];
        for (i, e) in entries.iter().enumerate() {
            gram[i][i] = e.clone();
        }
        Self::from_gram(gram)
    }

    pub fn diag_i64(entries: &[i64]) -> Result<Self> {
        Self::diag(&entries.iter().map(|&e| Rational::from_integer(e.into())).collect::<Vec<_>>())
    }

    pub fn identity(n: usize) -> Self {
        Self::diag_i64(&vec![1; n]).expect("identity is nondegenerate")
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    pub fn matrix(&self) -> ExactMatrix {
        ExactMatrix::from_rows(
            self.gram
                .iter()
                .map(|r| r.iter().map(|x| ExactScalar::from_rational(x.clone())).collect())
                .collect(),
        )
        .expect("square")
    }

    pub fn det(&self) -> Rational {
        if self.gram.is_empty() {
            return Rational::from_integer(1.into());
        }
        self.matrix()
            .determinant()
            .expect("square")
            .as_rational()
            .cloned()
            .expect("rational entries")
    }

    /// `gᵀ q g`.
    pub fn congruent(&self, g: &ExactMatrix) -> Result<Self> {
        let m = g.transpose().mul(&self.matrix())?.mul(g)?;
        let gram = m
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.as_rational().cloned().ok_or_else(|| domain("irrational entry"))).collect())
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        Self::from_gram(gram)
    }

    /// Exact congruence diagonalization; returns the diagonal entries.
    pub fn diagonalize(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut a = self.gram.clone();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            if a[k][k].is_zero() {
                // bring a nonzero diagonal entry to position k, or create one
                if let Some(p) = (k + 1..n).find(|&p| !a[p][p].is_zero()) {
                    a.swap(k, p);
                    for row in a.iter_mut() {
                        row.swap(k, p);
                    }
                } else if let Some(p) = (k + 1..n).find(|&p| !a[k][p].is_zero()) {
                    // e_k ↦ e_k + e_p gives a_kk + 2a_kp + a_pp = 2a_kp ≠ 0
                    for c in 0..n {
                        let v = &a[k][c] + &a[p][c];
                        a[k][c] = v;
                    }
                    for r in 0..n {
                        let v = &a[r][k] + &a[r][p];
                        a[r][k] = v;
                    }
                }
            }
            let piv = a[k][k].clone();
            assert!(!piv.is_zero(), "nondegenerate form has a pivot");
            for r in k + 1..n {
                let f = &a[r][k] / &piv;
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = &a[r][c] - &f * &a[k][c];
                    a[r][c] = v;
                }
                for rr in 0..n {
                    let v = &a[rr][r] - &f * &a[rr][k];
                    a[rr][r] = v;
                }
            }
            out.push(piv);
        }
        out
    }

    pub fn signature(&self) -> SignatureClass {
        let diag = self.diagonalize();
        let positives = diag.iter().filter(|x| x.is_positive()).count();
        SignatureClass { positives, negatives: diag.len() - positives }
    }

    /// Square class of the determinant: square-free part over Q, sign over R.
    pub fn discriminant_class(&self, field: BaseField) -> i64 {
        let det = self.det();
        match field {
            BaseField::R => {
                if det.is_positive() {
                    1
                } else {
                    -1
                }
            }
            BaseField::Q => {
                use num_traits::ToPrimitive;
                squarefree_part(&det).expect("nonzero").to_i64().expect("small discriminant")
            }
        }
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || self.gram[i][j].is_zero()));
        if diagonal {
            let e: Vec<String> = (0..n).map(|i| self.gram[i][i].to_string()).collect();
            write!(f, "diag:{}", e.join(","))
        } else {
            let rows: Vec<String> = self
                .gram
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            write!(f, "gram:[{}]", rows.join(","))
        }
    }
}

/// `diag:1,1,-1` or `gram:[[0,1],[1,0]]` (rational entries allowed).
impl FromStr for QuadraticForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad quadratic form {s:?}"));
        if let Some(rest) = s.strip_prefix("diag:") {
            let entries = rest.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
            return Self::diag(&entries);
        }
        if let Some(rest) = s.strip_prefix("gram:") {
            let inner = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
            let mut rows = Vec::new();
            let mut depth = 0;
            let mut start = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '[' => {
                        depth += 1;
                        start = Some(i + 1);
                    }
                    ']' => {
                        depth -= 1;
                        let st = start.take().ok_or_else(bad)?;
                        rows.push(
                            inner[st..i].split(',').map(parse_rational).collect::<Result<Vec<_>>>()?,
                        );
                    }
                    ',' | ' ' if depth == 0 => {}
                    _ if depth == 0 => return Err(bad()),
                    _ => {}
                }
                if depth < 0 {
                    return Err(bad());
                }
            }
            if depth != 0 || rows.is_empty() {
                return Err(bad());
            }
            return Self::from_gram(rows);
        }
        Err(bad())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormFamily {
    H,
    K,
    E16,
    S12,
}

impl FromStr for FormFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(FormFamily::H),
            "K" => Ok(FormFamily::K),
            "E16" => Ok(FormFamily::E16),
            "S12" => Ok(FormFamily::S12),
            _ => Err(Error::Parse(format!("unknown form family {s:?}"))),
        }
    }
}

/// Whether the family admits a form built from `q` over `field`, with a reason.
pub fn exists_form(family: FormFamily, q: &QuadraticForm, field: BaseField) -> Result<(bool, String)> {
    let det = q.det();
    match family {
        FormFamily::E16 => {
            if q.dim() != 6 {
                return Err(domain("E(1,6) forms need a form in six variables"));
            }
            let v = -det;
            let ok = is_square_in(&v, field)?;
            Ok((ok, format!("-det(q) = {v} is {}a square", if ok { "" } else { "not " })))
        }
        FormFamily::S12 => {
            if q.dim() != 4 {
                return Err(domain("S(1,2) forms need a form in four variables"));
            }
            let ok = is_square_in(&det, field)?;
            Ok((ok, format!("det(q) = {det} is {}a square", if ok { "" } else { "not " })))
        }
        FormFamily::H | FormFamily::K => Ok((true, "every nondegenerate form gives one".into())),
    }
}

/// Number of real forms: signatures `(p, n−p)` up to the flip, restricted to
/// those satisfying the family's discriminant condition over R.
pub fn real_form_count(family: FormFamily, n: usize) -> Result<usize> {
    let n = match family {
        FormFamily::E16 => 6,
        FormFamily::S12 => 4,
        _ if n == 0 => return Err(domain("n must be positive")),
        _ => n,
    };
    let mut count = 0;
    for p in 0..=n {
        let neg = n - p;
        if p < neg {
            continue; // counted via its flip
        }
        let det_sign: i64 = if neg % 2 == 0 { 1 } else { -1 };
        // the flip multiplies det by (-1)^n; the class qualifies if either
        // representative does
        let flip_sign = if n % 2 == 0 { det_sign } else { -det_sign };
        let ok = match family {
            FormFamily::H | FormFamily::K => true,
            FormFamily::E16 => det_sign < 0 || flip_sign < 0,
            FormFamily::S12 => det_sign > 0 || flip_sign > 0,
        };
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Equivalence over R up to a nonzero scalar.
pub fn scalar_equiv_real(q: &QuadraticForm, r: &QuadraticForm) -> Result<bool> {
    if q.dim() != r.dim() {
        return Err(dimension("forms of different dimension"));
    }
    let (a, b) = (q.signature(), r.signature());
    Ok(a == b || a == b.flip())
}

/// Over Q: `Some(false)` when square classes of the determinants already
/// separate `q` and `c·r` for every scalar `c`, `None` when undecided.
pub fn scalar_equiv_rational(q: &QuadraticForm, r: &QuadraticForm) -> Result<Option<bool>> {
    if !scalar_equiv_real(q, r)? {
        return Ok(Some(false));
    }
    // scaling by c multiplies det by c^n; for odd n every class is reachable
    if q.dim() % 2 == 0 {
        let dq = squarefree_part(&q.det())?;
        let dr = squarefree_part(&r.det())?;
        if dq != dr {
            return Ok(Some(false));
        }
    }
    if q == r {
        return Ok(Some(true));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> QuadraticForm {
        s.parse().unwrap()
    }

    #[test]
    fn discriminants() {
        assert_eq!(QuadraticForm::identity(6).discriminant_class(BaseField::Q), 1);
        assert_eq!(form("diag:2,3").discriminant_class(BaseField::Q), 6);
        assert_eq!(form("diag:1,-1").discriminant_class(BaseField::R), -1);
    }

    #[test]
    fn degenerate_rejected() {
        assert!("diag:1,0".parse::<QuadraticForm>().is_err());
        assert!("gram:[[1,2],[3,4]]".parse::<QuadraticForm>().is_err());
        assert!("gram:[[1,1],[1,1]]".parse::<QuadraticForm>().is_err());
        assert!("nonsense".parse::<QuadraticForm>().is_err());
    }

    #[test]
    fn signatures() {
        let sig = |s: &str| form(s).signature();
        assert_eq!(sig("diag:1,1,-1"), SignatureClass { positives: 2, negatives: 1 });
        assert_eq!(sig("diag:1,1,1,1"), SignatureClass { positives: 4, negatives: 0 });
        assert_eq!(sig("gram:[[0,1],[1,0]]"), SignatureClass { positives: 1, negatives: 1 });
        assert_eq!(sig("gram:[[0,1,0],[1,0,0],[0,0,-2]]"), SignatureClass { positives: 1, negatives: 2 });
        assert_eq!(sig("gram:[[0,1/2],[1/2,0]]"), SignatureClass { positives: 1, negatives: 1 });
    }

    #[test]
    fn existence() {
        let e = |s: &str, f| exists_form(FormFamily::E16, &form(s), f).unwrap().0;
        assert!(!e("diag:1,1,1,1,1,1", BaseField::R));
        assert!(e("diag:1,1,1,1,1,-1", BaseField::Q));
        assert!(exists_form(FormFamily::S12, &form("diag:1,1,-1,-1"), BaseField::Q).unwrap().0);
        assert!(exists_form(FormFamily::S12, &form("diag:1,1"), BaseField::Q).is_err());
    }

    #[test]
    fn real_counts() {
        assert_eq!(real_form_count(FormFamily::H, 5).unwrap(), 3);
        assert_eq!(real_form_count(FormFamily::E16, 6).unwrap(), 2);
        assert_eq!(real_form_count(FormFamily::S12, 4).unwrap(), 2);
        for n in 1..=10 {
            assert_eq!(real_form_count(FormFamily::K, n).unwrap(), n / 2 + 1);
        }
    }

    #[test]
    fn real_equivalence() {
        assert!(scalar_equiv_real(&form("diag:1,1"), &form("diag:-1,-1")).unwrap());
        assert!(!scalar_equiv_real(&form("diag:1,1"), &form("diag:1,-1")).unwrap());
        assert!(scalar_equiv_real(&form("diag:2,3,5"), &form("diag:1,1,1")).unwrap());
        assert!(scalar_equiv_real(&form("diag:1"), &form("diag:1,1")).is_err());
        assert_eq!(scalar_equiv_rational(&form("diag:1,1"), &form("diag:1,3")).unwrap(), Some(false));
    }

    #[test]
    fn display_round_trip() {
        for s in ["diag:1,1,-1", "gram:[[0,1],[1,0]]", "diag:1/2,3"] {
            assert_eq!(form(s).to_string(), s);
        }
    }
}
