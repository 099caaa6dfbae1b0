//! Graded components of the families, computed as the solution spaces of
//! their defining linear conditions inside the monomial basis of `W(m,n)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::forms::{embed, SuperForm};
use crate::linalg::{SparseEchelon, SparseVector};
use crate::poly::{monomials_of_weight, Ambient, Gen, GradingType, Monomial, Parity, SuperPoly, EXACT};
use crate::scalar::ExactScalar;
use crate::vfield::{direction_gen, VectorField};

use super::AlgebraSpec;

#[derive(Clone, Debug)]
pub struct GradedComponentBasis {
    pub degree: i64,
    pub basis: Vec<VectorField>,
    /// (even | odd) dimensions.
    pub dims: (usize, usize),
}

impl GradedComponentBasis {
    pub fn dims_string(&self) -> String {
        format!("({}|{})", self.dims.0, self.dims.1)
    }
}

/// Monomial fields `x^a ξ^S ∂_v` of weighted degree `j` and parity `p`.
pub fn w_component(amb: &Ambient, t: &GradingType, j: i64, parity: Parity) -> Result<Vec<VectorField>> {
    let mut out = Vec::new();
    for dir in 0..amb.m + amb.n {
        let g = direction_gen(amb, dir);
        for mono in monomials_of_weight(amb, t, j + t.weight(g))? {
            if (mono.parity() + g.parity()) % 2 != parity {
                continue;
            }
            let f = SuperPoly::term(*amb, EXACT, mono, ExactScalar::one());
            out.push(VectorField::monomial(*amb, f, g));
        }
    }
    Ok(out)
}

/// Largest generator weight, i.e. the depth of the grading on `W`.
pub fn depth(t: &GradingType) -> i64 {
    t.even.iter().chain(&t.odd).copied().max().unwrap_or(0)
}

enum Column {
    Field { block: usize, x: VectorField },
    Lambda { block: usize, f: SuperPoly },
}

const TILDE_DIV: u32 = 500;
const TILDE_TOP: u32 = 600;

struct Context<'a> {
    spec: &'a AlgebraSpec,
    amb: Ambient,
    form: Option<SuperForm>,
    shift: Option<ExactScalar>,
    top: Option<SuperPoly>,
    excluded: Option<Monomial>,
}

impl Context<'_> {
    fn contributions(&self, col: &Column) -> Result<Vec<(u32, SuperPoly)>> {
        let mut out = Vec::new();
        match col {
            Column::Field { block, x } => {
                let base = 100 * *block as u32;
                if let Some(w) = &self.form {
                    out.push((base, w.lie_derivative(x)?.poly().clone()));
                }
                if let Some(m0) = &self.excluded {
                    let c = x.coeff(Gen::Even(0)).coeff(m0);
                    out.push((base + 2, SuperPoly::constant(self.amb, EXACT, c)));
                }
                if self.shift.is_some() {
                    let div = x.divergence();
                    if let Some(top) = &self.top {
                        if *block == 0 {
                            out.push((TILDE_DIV, div.clone()));
                            let t = &x.apply(top)? + &(top * &div);
                            out.push((TILDE_TOP, t));
                        } else {
                            out.push((TILDE_TOP, div));
                        }
                    } else {
                        out.push((base + 1, div));
                    }
                }
            }
            Column::Lambda { block, f } => {
                let base = 100 * *block as u32;
                let w = self.form.as_ref().expect("conformal families have a form");
                let fw = &embed(&self.amb, f) * w.poly();
                out.push((base, -&fw));
                if let Some(c) = &self.shift {
                    let cf = f.scale(c);
                    if let Some(top) = &self.top {
                        if *block == 0 {
                            out.push((TILDE_DIV, cf.clone()));
                            out.push((TILDE_TOP, top * &cf));
                        } else {
                            out.push((TILDE_TOP, cf));
                        }
                    } else {
                        out.push((base + 1, cf));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn solve_parity(
    ctx: &Context<'_>,
    t: &GradingType,
    degrees: &[i64],
    parity: Parity,
) -> Result<Vec<VectorField>> {
    let amb = ctx.amb;
    let mut columns = Vec::new();
    for (block, &d) in degrees.iter().enumerate() {
        for x in w_component(&amb, t, d, parity)? {
            columns.push(Column::Field { block, x });
        }
    }
    // block-0 fields come first
    let n_primary = columns.iter().filter(|c| matches!(c, Column::Field { block: 0, .. })).count();
    if n_primary == 0 {
        return Ok(Vec::new());
    }
    if ctx.spec.is_conformal() {
        for (block, &d) in degrees.iter().enumerate() {
            for mono in monomials_of_weight(&amb, t, d)? {
                if mono.parity() == parity {
                    let f = SuperPoly::term(amb, EXACT, mono, ExactScalar::one());
                    columns.push(Column::Lambda { block, f });
                }
            }
        }
    }
    let mut rows: BTreeMap<(u32, Monomial), SparseVector> = BTreeMap::new();
    for (c, col) in columns.iter().enumerate() {
        for (tag, poly) in ctx.contributions(col)? {
            for (mono, coeff) in poly.terms() {
                rows.entry((tag, mono.clone())).or_default().insert(c, coeff.clone());
            }
        }
    }
    let mut system = SparseEchelon::new();
    for row in rows.into_values() {
        system.insert(row);
    }
    let mut projected = SparseEchelon::new();
    for v in system.nullspace(columns.len()) {
        let head: SparseVector = v.range(..n_primary).map(|(&i, c)| (i, c.clone())).collect();
        projected.insert(head);
    }
    let mut basis = Vec::with_capacity(projected.rank());
    for (_, row) in projected.rows() {
        let mut x = VectorField::zero(amb, EXACT);
        for (&c, coeff) in row {
            let Column::Field { x: bx, .. } = &columns[c] else { unreachable!() };
            x.add_scaled(bx, coeff);
        }
        basis.push(x);
    }
    Ok(basis)
}

/// Basis of the degree-`j` component of the family under the grading `t`.
///
/// For the tilde families, which are not graded, this is the degree-`j`
/// component of the associated graded algebra: leading parts `X_j` of
/// elements `X_j + X_{j+w} + …` (`w` the weight of `Φ`), found by solving for
/// one correction term `X_{j+w}`.
pub fn graded_component(spec: &AlgebraSpec, t: &GradingType, j: i64) -> Result<GradedComponentBasis> {
    spec.validate()?;
    let amb = spec.ambient();
    t.check(&amb)?;
    let form = spec.defining_form();
    if let Some(w) = &form {
        if !w.is_homogeneous(t) {
            return Err(Error::UnsupportedGrading(format!(
                "the defining form of {spec} is not homogeneous for the grading {t}"
            )));
        }
    }
    let top = spec.tilde_top();
    let mut degrees = vec![j];
    if let Some(top) = &top {
        let w = top.weighted_degree(t).expect("single monomial");
        if w <= 0 {
            return Err(Error::UnsupportedGrading(format!(
                "the top monomial of {spec} has non-positive weight under {t}"
            )));
        }
        degrees.push(j + w);
    }
    let ctx = Context {
        spec,
        amb,
        form,
        shift: spec.divergence_shift().map(ExactScalar::from_rational),
        top,
        excluded: spec.excluded_monomial(),
    };
    let even = solve_parity(&ctx, t, &degrees, 0)?;
    let odd = solve_parity(&ctx, t, &degrees, 1)?;
    let dims = (even.len(), odd.len());
    Ok(GradedComponentBasis { degree: j, basis: even.into_iter().chain(odd).collect(), dims })
}

/// Total (even | odd) dimension of the negative part.
pub fn codimension(spec: &AlgebraSpec, t: &GradingType) -> Result<(usize, usize)> {
    let mut total = (0, 0);
    for j in -depth(t)..0 {
        let c = graded_component(spec, t, j)?;
        total.0 += c.dims.0;
        total.1 += c.dims.1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qforms::QuadraticForm;
    use crate::scalar::rat;

    fn dims(spec: &AlgebraSpec, t: &GradingType, j: i64) -> (usize, usize) {
        graded_component(spec, t, j).unwrap().dims
    }

    #[test]
    fn w_dims_match_counting() {
        let spec = AlgebraSpec::W { m: 1, n: 2 };
        let t = spec.principal_grading();
        assert_eq!(dims(&spec, &t, -1), (1, 2));
        assert_eq!(dims(&spec, &t, 0), (5, 4));
        assert_eq!(dims(&spec, &t, -2), (0, 0));
    }

    #[test]
    fn hamiltonian_and_contact_degree_zero() {
        let h = AlgebraSpec::h_identity(1, 2);
        assert_eq!(dims(&h, &h.principal_grading(), 0), (4, 4));
        let k = AlgebraSpec::k_identity(0, 6);
        assert_eq!(dims(&k, &k.principal_grading(), 0), (16, 0));
    }

    #[test]
    fn inhomogeneous_grading_rejected() {
        let h = AlgebraSpec::H { k: 1, n: 1, q: QuadraticForm::identity(1) };
        let t = GradingType::new(vec![1, 2], vec![1]);
        assert!(matches!(graded_component(&h, &t, 0), Err(Error::UnsupportedGrading(_))));
        let w = AlgebraSpec::W { m: 1, n: 1 };
        let bad = GradingType::new(vec![0], vec![1]);
        assert!(matches!(graded_component(&w, &bad, 0), Err(Error::UnsupportedGrading(_))));
    }

    #[test]
    fn sko_codimensions() {
        let spec = AlgebraSpec::SKO { n: 2, beta: rat(2, 1) };
        assert_eq!(codimension(&spec, &spec.principal_grading()).unwrap(), (2, 3));
        let sub = GradingType::new(vec![1, 1], vec![0, 0, 1]);
        assert_eq!(codimension(&spec, &sub).unwrap(), (2, 2));
    }
}
