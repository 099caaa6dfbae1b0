//! Exact linear algebra over [`ExactScalar`].
//!
//! Two elimination routes produce the same reduced row echelon form:
//! a dense fraction-free (Bareiss) route for small matrices, and a sparse
//! monic-pivot Gauss-Jordan route for the large, very sparse constraint
//! systems that cut out subalgebras. Both break ties by column order only.

use std::collections::BTreeMap;

use crate::error::{dimension, domain, Result};
use crate::scalar::ExactScalar;

pub type Vector = Vec<ExactScalar>;
pub type SparseVector = BTreeMap<usize, ExactScalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![ExactScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[ExactScalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(dimension("ragged matrix rows"));
        }
        let n = rows.len();
        Ok(ExactMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| ExactScalar::from_int(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExactScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = &out.data[r * out.cols + c] + &(a * b);
                        out.set(r, c, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(dimension("vector length does not match matrix columns"));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = ExactScalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Fraction-free forward elimination. Returns the echelon form, its pivot
    /// columns and the sign of the row permutation used.
    fn bareiss(&self) -> (Self, Vec<usize>, bool) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = ExactScalar::one();
        let mut negated = false;
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
                negated = !negated;
            }
            let piv = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let f = a.get(i, c).clone();
                for j in c + 1..a.cols {
                    let v = &(&(&piv * a.get(i, j)) - &(&f * a.get(r, j))) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, c, ExactScalar::zero());
            }
            // rows above the current pivot keep their scale; rows below were
            // multiplied through by `piv / prev`
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots, negated)
    }

    /// Reduced row echelon form (pivots equal to 1) and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (mut a, pivots, _) = self.bareiss();
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = a.get(r, c).inv().expect("pivot is nonzero");
            for j in c..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..r {
                let f = a.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
            }
        }
        for r in pivots.len()..a.rows {
            for j in 0..a.cols {
                a.set(r, j, ExactScalar::zero());
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn determinant(&self) -> Result<ExactScalar> {
        if self.rows != self.cols {
            return Err(dimension("determinant of a non-square matrix"));
        }
        if self.rows == 0 {
            return Ok(ExactScalar::one());
        }
        let (a, pivots, negated) = self.bareiss();
        if pivots.len() < self.rows {
            return Ok(ExactScalar::zero());
        }
        // the last Bareiss pivot is the determinant up to the permutation sign
        let d = a.get(self.rows - 1, self.cols - 1).clone();
        Ok(if negated { -d } else { d })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(dimension("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, ExactScalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(domain("singular matrix"));
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    /// Basis of `{v : Mv = 0}` in reduced normal form: one vector per free
    /// column, with a 1 in that column and 0 in the other free columns.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        free_columns(self.cols, &pivots)
            .into_iter()
            .map(|f| {
                let mut v = vec![ExactScalar::zero(); self.cols];
                v[f] = ExactScalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -red.get(r, f);
                }
                v
            })
            .collect()
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

/// Coordinates of `v` in terms of `basis`, if `v` lies in its span.
///
/// When the basis is dependent the coordinates are those of the reduced
/// normal form (free basis vectors get coefficient 0).
pub fn in_span(v: &[ExactScalar], basis: &[Vector]) -> Result<Option<Vector>> {
    if basis.iter().any(|b| b.len() != v.len()) {
        return Err(dimension("basis vectors and target differ in length"));
    }
    if basis.is_empty() {
        return Ok(v.iter().all(ExactScalar::is_zero).then(Vec::new));
    }
    // columns = basis vectors, augmented by v
    let k = basis.len();
    let mut m = ExactMatrix::zeros(v.len(), k + 1);
    for (c, b) in basis.iter().enumerate() {
        for (r, x) in b.iter().enumerate() {
            m.set(r, c, x.clone());
        }
    }
    for (r, x) in v.iter().enumerate() {
        m.set(r, k, x.clone());
    }
    let (red, pivots) = m.rref();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coords = vec![ExactScalar::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        coords[p] = red.get(r, k).clone();
    }
    Ok(Some(coords))
}

pub fn rank_of(vectors: &[Vector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    Ok(ExactMatrix::from_rows(vectors.to_vec())?.rank())
}

/// Incrementally maintained echelon basis of sparse vectors.
///
/// Every stored row has a leading entry 1 at its pivot index and no entries
/// at smaller indices. Rows are kept fully reduced against each other, so the
/// stored set is the reduced row echelon form of everything inserted.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVector>,
}

fn axpy(target: &mut SparseVector, f: &ExactScalar, row: &SparseVector) {
    for (&j, x) in row {
        let delta = f * x;
        match target.get_mut(&j) {
            Some(cur) => {
                *cur -= &delta;
                if cur.is_zero() {
                    target.remove(&j);
                }
            }
            None => {
                target.insert(j, -delta);
            }
        }
    }
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVector)> {
        self.rows.iter()
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVector) -> SparseVector {
        v.retain(|_, x| !x.is_zero());
        let mut cursor = 0;
        loop {
            let Some((&j, x)) = v.range(cursor..).find(|(j, _)| self.rows.contains_key(j)) else {
                return v;
            };
            let f = x.clone();
            axpy(&mut v, &f, &self.rows[&j]);
            cursor = j + 1;
        }
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(f) = row.get(&p).cloned() {
                axpy(row, &f, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    /// Basis of the solution space of the homogeneous system whose rows were
    /// inserted, over unknowns `0..ncols`, in the same normal form as
    /// [`ExactMatrix::nullspace`].
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVector> {
        let mut free_to_vec: BTreeMap<usize, SparseVector> = (0..ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|f| (f, SparseVector::from([(f, ExactScalar::one())])))
            .collect();
        for (&p, row) in &self.rows {
            for (&j, x) in row.range(p + 1..) {
                if let Some(v) = free_to_vec.get_mut(&j) {
                    v.insert(p, -x);
                }
            }
        }
        free_to_vec.into_values().collect()
    }
}

pub fn to_dense(v: &SparseVector, len: usize) -> Vector {
    let mut out = vec![ExactScalar::zero(); len];
    for (&j, x) in v {
        out[j] = x.clone();
    }
    out
}

pub fn to_sparse(v: &[ExactScalar]) -> SparseVector {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, FieldDescriptor};

    fn s(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn nullspace_examples() {
        let m = ExactMatrix::from_i64(&[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(m.nullspace(), vec![vec![s(-1), s(1)]]);

        assert!(ExactMatrix::identity(3).nullspace().is_empty());

        let m = ExactMatrix::from_i64(&[&[1, 2, 3]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).unwrap().iter().all(ExactScalar::is_zero));
        }
        assert_eq!(ns[0], vec![s(-2), s(1), s(0)]);
    }

    #[test]
    fn in_span_examples() {
        let b1 = vec![s(1), s(0), s(1)];
        let b2 = vec![s(0), s(1), s(1)];
        let basis = vec![b1.clone(), b2.clone()];
        assert_eq!(in_span(&[s(0), s(0), s(0)], &basis).unwrap(), Some(vec![s(0), s(0)]));
        let v: Vector = b1.iter().zip(&b2).map(|(a, b)| a + &(&s(2) * b)).collect();
        assert_eq!(in_span(&v, &basis).unwrap(), Some(vec![s(1), s(2)]));
        // (1,1,-1) is orthogonal to both; rank goes up when appended
        let w = vec![s(1), s(1), s(-1)];
        assert_eq!(in_span(&w, &basis).unwrap(), None);
        let mut all = basis.clone();
        all.push(w);
        assert_eq!(rank_of(&all).unwrap(), 3);
        assert!(in_span(&[s(1)], &basis).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = ExactMatrix::from_i64(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 5]]).unwrap();
        // cofactor expansion along the first row
        let expected = 0 * (5) - 2 * (5 - 0) + 1 * (0 - 3);
        assert_eq!(m.determinant().unwrap(), s(expected));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(3));
        let sing = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(sing.determinant().unwrap(), s(0));
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn extension_entries() {
        let f = FieldDescriptor::quadratic(-1).unwrap();
        let i = f.sqrt_generator().unwrap();
        let m = ExactMatrix::from_rows(vec![vec![s(1), i.clone()], vec![i.clone(), s(-1)]]).unwrap();
        // rows are proportional: second = i * first
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullspace(), vec![vec![-i.clone(), s(1)]]);
        let n = ExactMatrix::from_rows(vec![
            vec![ExactScalar::new(rat(1, 2), rat(1, 3), f), s(2)],
            vec![s(0), i],
        ])
        .unwrap();
        assert_eq!(n.mul(&n.inverse().unwrap()).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn sparse_and_dense_agree() {
        let m = ExactMatrix::from_i64(&[
            &[0, 1, 2, 0, 3],
            &[1, 0, 1, 1, 0],
            &[1, 1, 3, 1, 3],
            &[2, 0, 2, 2, 0],
        ])
        .unwrap();
        let mut e = SparseEchelon::new();
        for r in m.to_rows() {
            e.insert(to_sparse(&r));
        }
        assert_eq!(e.rank(), m.rank());
        let sparse: Vec<Vector> = e.nullspace(5).iter().map(|v| to_dense(v, 5)).collect();
        assert_eq!(sparse, m.nullspace());
        let (red, pivots) = m.rref();
        for (r, p) in pivots.iter().enumerate() {
            assert_eq!(to_dense(&e.rows[p], 5), red.row(r).to_vec());
        }
    }
}
