//! Poisson brackets of generating functions and the form that Hamiltonian fields preserve.

use superalg::families::hamiltonian::{hamiltonian_invariant_form, hamiltonian_sign};
use superalg::families::{h_bracket, hamiltonian_field};
use superalg::poly::{Ambient, SuperPoly, EXACT};

fn main() -> superalg::Result<()> {
    let (k, n) = (1, 2);
    let amb = Ambient::new(2 * k, n);
    let p = SuperPoly::x(amb, EXACT, 0);
    let q = SuperPoly::x(amb, EXACT, 1);
    let xi0 = SuperPoly::xi(amb, EXACT, 0);
    let xi1 = SuperPoly::xi(amb, EXACT, 1);

    println!("{{p, q}} = {}", h_bracket(&p, &q, k, n)?);
    println!("{{xi0, xi0}} = {}", h_bracket(&xi0, &xi0, k, n)?);
    println!("{{p xi0, q xi1}} = {}", h_bracket(&(&p * &xi0), &(&q * &xi1), k, n)?);
    println!("H_(p q xi0) = {}", hamiltonian_field(&(&(&p * &q) * &xi0), k, n)?);

    println!("sign relating the bracket to the field commutator: {}", hamiltonian_sign(k, n, 3)?);
    // odd variables pair as ξ_i ↔ ξ_{n-i+1}, so c is anti-diagonal
    let c = hamiltonian_invariant_form(k, n, 3)?;
    for row in c.to_rows() {
        let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  c row: [{}]", row.join(", "));
    }
    Ok(())
}
