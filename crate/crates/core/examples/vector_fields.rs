//! Vector fields on a superdomain: brackets, divergence, sampled Jacobi.

use superalg::poly::{Ambient, Gen, SuperPoly, EXACT};
use superalg::sampling::jacobi_w;
use superalg::vfield::VectorField;

fn main() -> superalg::Result<()> {
    let amb = Ambient::new(1, 2);
    let x = SuperPoly::x(amb, EXACT, 0);
    let xi0 = SuperPoly::xi(amb, EXACT, 0);
    let xi1 = SuperPoly::xi(amb, EXACT, 1);

    // x ∂_x + ξ_0 ∂_{ξ_1}, an even field
    let a = VectorField::monomial(amb, x.clone(), Gen::Even(0)).add(&VectorField::monomial(amb, xi0.clone(), Gen::Odd(1)))?;
    // ξ_0 ξ_1 ∂_{ξ_0}, an odd field
    let b = VectorField::monomial(amb, &xi0 * &xi1, Gen::Odd(0));
    println!("X = {a}");
    println!("Y = {b}");
    println!("[X, Y] = {}", a.bracket(&b)?);
    println!("[Y, Y] = {}", b.bracket(&b)?);
    println!("div X = {}, div Y = {}", a.divergence(), b.divergence());

    for (m, n) in [(2, 2), (1, 3)] {
        let out = jacobi_w(Ambient::new(m, n), 4, 100, 7, false)?;
        let bad = jacobi_w(Ambient::new(m, n), 4, 100, 7, true)?;
        println!(
            "W({m},{n}): Jacobi on {} triples {}; with a corrupted bracket {}",
            out.checked,
            if out.witness.is_none() { "holds" } else { "fails" },
            if bad.witness.is_none() { "holds" } else { "fails" }
        );
        if let Some(w) = bad.witness {
            println!("  first violation: {}...", w.chars().take(100).collect::<String>());
        }
    }
    Ok(())
}
