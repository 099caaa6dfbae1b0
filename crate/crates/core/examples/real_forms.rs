//! Counting real forms and comparing quadratic forms up to scaling.

use superalg::qforms::{exists_form, real_form_count, scalar_equiv_rational, scalar_equiv_real, FormFamily, QuadraticForm};
use superalg::scalar::BaseField;

fn main() -> superalg::Result<()> {
    let counts: Vec<String> = (1..=8).map(|n| real_form_count(FormFamily::H, n).map(|c| format!("n={n}:{c}"))).collect::<Result<_, _>>()?;
    println!("real forms of H(2k,n): {}", counts.join(" "));
    println!("E(1,6): {}, S(1,2): {}", real_form_count(FormFamily::E16, 6)?, real_form_count(FormFamily::S12, 4)?);

    let q: QuadraticForm = "diag:1,1,1,-1".parse()?;
    let r: QuadraticForm = "diag:-2,-2,-2,2".parse()?;
    println!("{q}: signature {}, discriminant class over Q {}", q.signature(), q.discriminant_class(BaseField::Q));
    for family in [FormFamily::H, FormFamily::S12] {
        let (ok, why) = exists_form(family, &q, BaseField::Q)?;
        println!("{family:?} over Q from {q}: {ok} ({why})");
    }
    println!("{q} ~ c·{r} over R: {}", scalar_equiv_real(&q, &r)?);
    println!("{q} ~ c·{r} over Q: {:?}", scalar_equiv_rational(&q, &r)?);
    Ok(())
}
