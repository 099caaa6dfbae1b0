//! Lambda-brackets of K_{N,q} and the conformal superalgebra axioms.

use superalg::conformal::{axioms_check, parse_mono, Axiom, ConformalContext, ConformalVector, Sampling};

fn main() -> superalg::Result<()> {
    let ctx = ConformalContext::new("diag:2,-1,3".parse()?)?;
    let one = ConformalVector::basis(0, parse_mono("1")?);
    let xi = ConformalVector::basis(0, parse_mono("xi1")?);
    let xixj = ConformalVector::basis(0, parse_mono("xi1*xi2")?);
    println!("{ctx}");
    println!("[1_l 1] = {}", ctx.bracket(&one, &one));
    println!("[xi1_l xi1] = {}", ctx.bracket(&xi, &xi));
    println!("[xi1_l xi1 xi2] = {}", ctx.bracket(&xi, &xixj));

    for c in [ctx.clone(), ctx.corrupted()] {
        for axiom in [Axiom::Sesquilinearity, Axiom::Skew, Axiom::Jacobi] {
            let r = axioms_check(&c, axiom, Sampling::Exhaustive);
            println!(
                "{}{axiom:?}: {} cases, {}",
                if c.is_corrupted() { "corrupted " } else { "" },
                r.cases_checked,
                r.witness.as_deref().unwrap_or("holds")
            );
        }
    }

    let big = ConformalContext::identity(6)?;
    let r = axioms_check(&big, Axiom::Jacobi, Sampling::Random { samples: 300, seed: 1 });
    println!("N = 6 Jacobi on {} random triples: {}", r.cases_checked, if r.passed() { "holds" } else { "fails" });
    Ok(())
}
