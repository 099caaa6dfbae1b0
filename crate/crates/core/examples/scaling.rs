//! Rescaling p (and t) turns the defining form for λq into a multiple of the one for q.

use superalg::families::scaling::{scale_form, scaling_check};
use superalg::families::AlgebraSpec;
use superalg::qforms::QuadraticForm;
use superalg::scalar::rat;

fn main() -> superalg::Result<()> {
    let q = QuadraticForm::diag_i64(&[3, -1])?;
    for lambda in [rat(2, 1), rat(-1, 3)] {
        println!("lambda = {lambda}: lambda q = {}", scale_form(&q, &lambda)?);
        for spec in [AlgebraSpec::H { k: 1, n: 2, q: q.clone() }, AlgebraSpec::K { k: 1, n: 2, q: q.clone() }] {
            let c = scaling_check(&spec, &lambda)?;
            let show = |x: &Option<_>| x.as_ref().map_or("not proportional".to_string(), |s: &superalg::ExactScalar| s.to_string());
            println!(
                "  {}: pullback factor {} (want {}), same substitution on the scaled form: {}",
                c.family,
                show(&c.forward),
                c.expected_forward(),
                show(&c.inverse)
            );
        }
    }
    Ok(())
}
