//! The annihilation algebra of K_{N,q}, truncated in mode number, against K_q(1,N).

use superalg::conformal::{compare_with_contact, AnnihilationAlgebra, ConformalContext};

fn main() -> superalg::Result<()> {
    for form in ["diag:1,1", "diag:2,-1,1,3"] {
        let ctx = ConformalContext::new(form.parse()?)?;
        let alg = AnnihilationAlgebra::new(&ctx, 4);
        println!("{form}:");
        for c in compare_with_contact(&ctx, 4, -2..=2)? {
            println!("  degree {:>2}: annihilation {:?}, contact {:?}", c.degree, c.annihilation, c.contact);
        }
        let (checked, w) = alg.sampled_jacobi(100, 3);
        println!("  Jacobi on {checked} triples: {}", w.as_deref().unwrap_or("holds"));
        println!("  Witt relations violated: {}", alg.witt_failures(5).len());
    }
    Ok(())
}
