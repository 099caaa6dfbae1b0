//! The exceptional algebra E(1,6) generated inside K_q(1,6).

use superalg::families::e16::{e16_subalgebra, hyperbolic_form, listed_eigen_signs};
use superalg::qforms::QuadraticForm;
use superalg::scalar::{adjoin_sqrt, rat};

fn show(q: &QuadraticForm) -> superalg::Result<()> {
    let alpha = adjoin_sqrt(&-(rat(1, 1) / q.det()))?.root;
    let e = e16_subalgebra(q, &alpha)?;
    let dims: Vec<String> = e.algebra.dims_table().iter().map(|(j, (a, b))| format!("{j}:({a}|{b})")).collect();
    println!("q = {q}, alpha = {alpha}: g1* has dim {}, g1+ has dim {}; {}", e.g1_dual_dim, e.g1_plus_dim, dims.join(" "));
    Ok(())
}

fn main() -> superalg::Result<()> {
    show(&QuadraticForm::diag_i64(&[1, 1, 1, 1, 1, -1])?)?;
    show(&QuadraticForm::identity(6))?;
    show(&hyperbolic_form())?;
    let (rank, signs) = listed_eigen_signs();
    println!("listed cubics in split coordinates: rank {rank}, star eigenvalue signs {signs:?}");
    Ok(())
}
