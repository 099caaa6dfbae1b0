//! The graded subalgebra of `W(m,n)` generated by homogeneous fields,
//! truncated above a given degree.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{domain, Result};
use crate::linalg::SparseEchelon;
use crate::poly::{Ambient, GradingType};
use crate::vfield::{Indexer, VectorField};

use super::graded::depth;

#[derive(Clone, Debug)]
pub struct GeneratedSubalgebra {
    pub grading: GradingType,
    pub jmax: i64,
    /// Basis of each component, degrees `−d..=jmax`.
    pub components: BTreeMap<i64, Vec<VectorField>>,
}

impl GeneratedSubalgebra {
    /// (even | odd) dimension of the degree-`j` component.
    pub fn dims(&self, j: i64) -> (usize, usize) {
        let Some(basis) = self.components.get(&j) else { return (0, 0) };
        let odd = basis.iter().filter(|x| x.parity() == Some(1)).count();
        (basis.len() - odd, odd)
    }

    pub fn dims_table(&self) -> Vec<(i64, (usize, usize))> {
        self.components.keys().map(|&j| (j, self.dims(j))).collect()
    }
}

struct Component {
    span: SparseEchelon,
    basis: Vec<VectorField>,
}

/// Closes the span of `generators` under the bracket, keeping only degrees up
/// to `jmax`. Each generator is a `(degree, field)` pair; the field must be
/// parity-homogeneous and weighted-homogeneous of that degree.
pub fn generate_graded_subalgebra(
    amb: &Ambient,
    t: &GradingType,
    generators: &[(i64, VectorField)],
    jmax: i64,
) -> Result<GeneratedSubalgebra> {
    t.check(amb)?;
    let low = -depth(t);
    let mut comps: BTreeMap<i64, Component> = (low..=jmax)
        .map(|j| (j, Component { span: SparseEchelon::new(), basis: Vec::new() }))
        .collect();
    let mut indexer = Indexer::new();
    let mut queue = VecDeque::new();

    let mut add = |j: i64, x: VectorField, comps: &mut BTreeMap<i64, Component>, queue: &mut VecDeque<(i64, VectorField)>| {
        let Some(c) = comps.get_mut(&j) else { return };
        if x.is_zero() {
            return;
        }
        if c.span.insert(indexer.vectorize(&x)) {
            c.basis.push(x.clone());
            queue.push_back((j, x));
        }
    };

    for (j, x) in generators {
        amb.check(x.ambient())?;
        if x.is_zero() {
            continue;
        }
        if x.parity().is_none() {
            return Err(domain(format!("generator {x} is not parity-homogeneous")));
        }
        match x.weighted_degree(t) {
            Some(d) if d == *j => {}
            _ => return Err(domain(format!("generator {x} is not homogeneous of degree {j}"))),
        }
        add(*j, x.clone(), &mut comps, &mut queue);
    }

    while let Some((j, x)) = queue.pop_front() {
        let others: Vec<(i64, VectorField)> = comps
            .iter()
            .filter(|(&e, _)| j + e <= jmax && j + e >= low)
            .flat_map(|(&e, c)| c.basis.iter().map(move |y| (e, y.clone())))
            .collect();
        for (e, y) in others {
            add(j + e, x.bracket(&y)?, &mut comps, &mut queue);
        }
    }

    Ok(GeneratedSubalgebra {
        grading: t.clone(),
        jmax,
        components: comps.into_iter().map(|(j, c)| (j, c.basis)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{graded_component, AlgebraSpec};

    fn generators(spec: &AlgebraSpec, t: &GradingType, degrees: &[i64]) -> Vec<(i64, VectorField)> {
        degrees
            .iter()
            .flat_map(|&j| graded_component(spec, t, j).unwrap().basis.into_iter().map(move |x| (j, x)))
            .collect()
    }

    #[test]
    fn w12_recovered_from_low_degrees() {
        let spec = AlgebraSpec::W { m: 1, n: 2 };
        let t = spec.principal_grading();
        let amb = spec.ambient();
        let gen = generate_graded_subalgebra(&amb, &t, &generators(&spec, &t, &[-1, 0, 1]), 3).unwrap();
        for j in -1..=3 {
            assert_eq!(gen.dims(j), graded_component(&spec, &t, j).unwrap().dims, "degree {j}");
        }
        // without g_1 nothing positive appears
        let low = generate_graded_subalgebra(&amb, &t, &generators(&spec, &t, &[-1, 0]), 3).unwrap();
        for j in 1..=3 {
            assert_eq!(low.dims(j), (0, 0));
        }
    }

    #[test]
    fn empty_and_bad_generators() {
        let amb = Ambient::new(1, 2);
        let t = GradingType::principal(1, 2);
        let gen = generate_graded_subalgebra(&amb, &t, &[], 2).unwrap();
        assert!(gen.dims_table().iter().all(|(_, d)| *d == (0, 0)));
        let x = VectorField::partial(amb, crate::poly::Gen::Even(0));
        assert!(generate_graded_subalgebra(&amb, &t, &[(0, x)], 2).is_err());
    }
}
