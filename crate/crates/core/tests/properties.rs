//! Algebraic invariants on random inputs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superalg::conformal::{axioms_check, hodge_involution_failures, AnnihilationAlgebra, Axiom, ConformalContext, Sampling};
use superalg::forms::SuperForm;
use superalg::linalg::{ExactMatrix, SparseEchelon};
use superalg::poly::{Ambient, Gen, SuperPoly, EXACT};
use superalg::qforms::QuadraticForm;
use superalg::report::{CheckReport, Outcome};
use superalg::sampling::{jacobi_w, random_field, random_poly};
use superalg::scalar::{rat, squarefree_part, BaseField, ExactScalar, FieldDescriptor};

fn sqrt2(a: (i64, i64), b: (i64, i64)) -> ExactScalar {
    ExactScalar::new(rat(a.0, a.1), rat(b.0, b.1), FieldDescriptor::quadratic(2).unwrap())
}

fn ratio() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=9)
}

fn sign(p: u8, q: u8) -> ExactScalar {
    ExactScalar::from_int(if p * q == 1 { -1 } else { 1 })
}

fn polys(seed: u64, amb: Ambient, n: usize) -> Vec<(SuperPoly, u8)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let p = ((seed >> i) & 1) as u8;
            (random_poly(&mut rng, amb, EXACT, p, 0, 2), p)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quadratic_field_axioms(a in ratio(), b in ratio(), c in ratio(), d in ratio(), e in ratio(), f in ratio()) {
        let (x, y, z) = (sqrt2(a, b), sqrt2(c, d), sqrt2(e, f));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn squarefree_part_ignores_squares(r in ratio(), t in ratio()) {
        prop_assume!(r.0 != 0 && t.0 != 0);
        let r = rat(r.0, r.1);
        let t = rat(t.0, t.1);
        prop_assert_eq!(squarefree_part(&(&r * &t * &t)).unwrap(), squarefree_part(&r).unwrap());
    }

    #[test]
    fn supercommutative_and_associative(seed in any::<u64>()) {
        let ps = polys(seed, Ambient::new(2, 3), 3);
        let (f, pf) = &ps[0];
        let (g, pg) = &ps[1];
        let h = &ps[2].0;
        prop_assert_eq!(f * g, (g * f).scale(&sign(*pf, *pg)));
        prop_assert_eq!(&(f * g) * h, f * &(g * h));
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>()) {
        let amb = Ambient::new(2, 3);
        let ps = polys(seed, amb, 2);
        let (f, pf) = &ps[0];
        let g = &ps[1].0;
        for v in [Gen::Even(0), Gen::Even(1), Gen::Odd(0), Gen::Odd(2)] {
            let lhs = (f * g).partial(v).unwrap();
            let rhs = &(&f.partial(v).unwrap() * g) + &(f * &g.partial(v).unwrap()).scale(&sign(v.parity(), *pf));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn vector_field_jacobi(seed in any::<u64>()) {
        let out = jacobi_w(Ambient::new(1, 2), 3, 4, seed, false).unwrap();
        prop_assert_eq!(out.witness, None);
    }

    #[test]
    fn divergence_cocycle(seed in any::<u64>()) {
        let amb = Ambient::new(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (px, py) = ((seed & 1) as u8, ((seed >> 1) & 1) as u8);
        let x = random_field(&mut rng, amb, EXACT, px);
        let y = random_field(&mut rng, amb, EXACT, py);
        let lhs = x.bracket(&y).unwrap().divergence();
        let rhs = &x.apply(&y.divergence()).unwrap() - &y.apply(&x.divergence()).unwrap().scale(&sign(px, py));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_derivative_identities(seed in any::<u64>()) {
        let amb = Ambient::new(2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (px, py) = ((seed & 1) as u8, ((seed >> 1) & 1) as u8);
        let x = random_field(&mut rng, amb, EXACT, px);
        let y = random_field(&mut rng, amb, EXACT, py);
        let f = random_poly(&mut rng, amb, EXACT, 0, 0, 2);
        let g = random_poly(&mut rng, amb, EXACT, 1, 0, 2);
        let w = &SuperForm::function(amb, &f) * &SuperForm::function(amb, &g).d();
        // L_X d = (-1)^{p(X)} d L_X
        let one = ExactScalar::from_int(1);
        let s = if px == 1 { -&one } else { one };
        prop_assert_eq!(w.d().lie_derivative(&x).unwrap(), w.lie_derivative(&x).unwrap().d().scale(&s));
        // L_[X,Y] = [L_X, L_Y]
        let lhs = w.lie_derivative(&x.bracket(&y).unwrap()).unwrap();
        let xy = w.lie_derivative(&y).unwrap().lie_derivative(&x).unwrap();
        let yx = w.lie_derivative(&x).unwrap().lie_derivative(&y).unwrap();
        prop_assert_eq!(lhs, &xy - &yx.scale(&sign(px, py)));
    }

    #[test]
    fn hodge_involution_random_diagonal(d in prop::collection::vec((1i64..=7, any::<bool>()), 4)) {
        let entries: Vec<i64> = d.iter().map(|&(v, neg)| if neg { -v } else { v }).collect();
        let ctx = ConformalContext::new(QuadraticForm::diag_i64(&entries).unwrap()).unwrap();
        prop_assert!(hodge_involution_failures(&ctx).is_empty());
    }

    #[test]
    fn conformal_jacobi_random_form(a in 1i64..=5, b in -5i64..=-1, c in ratio(), seed in any::<u64>()) {
        prop_assume!(c.0 != 0);
        let gram = vec![
            vec![rat(a, 1), rat(c.0, c.1), rat(0, 1)],
            vec![rat(c.0, c.1), rat(b, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1)],
        ];
        let q = QuadraticForm::from_gram(gram).unwrap();
        prop_assume!(q.det() != rat(0, 1));
        let ctx = ConformalContext::new(q).unwrap();
        for axiom in [Axiom::Skew, Axiom::Jacobi] {
            let rep = axioms_check(&ctx, axiom, Sampling::Random { samples: 20, seed });
            prop_assert!(rep.passed(), "{:?}", rep.witness);
        }
    }

    #[test]
    fn annihilation_jacobi(seed in any::<u64>()) {
        let ctx = ConformalContext::new("diag:1,-2,3".parse().unwrap()).unwrap();
        let (_, w) = AnnihilationAlgebra::new(&ctx, 4).sampled_jacobi(10, seed);
        prop_assert_eq!(w, None);
    }

    #[test]
    fn congruence_invariants(g in prop::collection::vec(-3i64..=3, 9), d in prop::collection::vec(1i64..=6, 3)) {
        let m = ExactMatrix::from_i64(&[&g[0..3], &g[3..6], &g[6..9]]).unwrap();
        prop_assume!(!m.determinant().unwrap().is_zero());
        let q = QuadraticForm::diag_i64(&[d[0], -d[1], d[2]]).unwrap();
        let r = q.congruent(&m).unwrap();
        prop_assert_eq!(r.signature(), q.signature());
        prop_assert_eq!(r.discriminant_class(BaseField::Q), q.discriminant_class(BaseField::Q));
    }

    #[test]
    fn dense_and_sparse_elimination_agree(entries in prop::collection::vec(-2i64..=2, 20)) {
        let rows: Vec<&[i64]> = entries.chunks(5).collect();
        let m = ExactMatrix::from_i64(&rows).unwrap();
        let mut sparse = SparseEchelon::new();
        for r in m.to_rows() {
            sparse.insert(superalg::linalg::to_sparse(&r));
        }
        prop_assert_eq!(sparse.rank(), m.rank());
        let dense_null = m.nullspace();
        let sparse_null = sparse.nullspace(5);
        prop_assert_eq!(dense_null.len(), sparse_null.len());
        for v in sparse_null.iter().map(|v| superalg::linalg::to_dense(v, 5)) {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
        }
        for v in &dense_null {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn reports_round_trip(pass in any::<bool>(), seed in any::<u64>(), id in "[a-z0-9-]{1,12}") {
        let r = CheckReport::new(id, "fam")
            .seed(seed)
            .param("n", 3)
            .run(|| Ok(Outcome::new(pass, "x", "y", vec!["w".into()])));
        prop_assert_eq!(r.witnesses.is_empty(), pass);
        let back: CheckReport = serde_json::from_str(&r.to_json(false)).unwrap();
        prop_assert_eq!(back, r);
    }
}
