//! Graded components of the vector-field families and their low-degree dimensions.

use superalg::families::table1::{expected_dims, table1_entries};
use superalg::families::{codimension, graded_component, AlgebraSpec};
use superalg::scalar::rat;

fn main() -> superalg::Result<()> {
    let specs = [
        AlgebraSpec::W { m: 1, n: 2 },
        AlgebraSpec::S { m: 2, n: 2 },
        AlgebraSpec::h_identity(1, 2),
        AlgebraSpec::k_identity(1, 2),
        AlgebraSpec::HO { n: 2 },
        AlgebraSpec::SKO { n: 2, beta: rat(2, 1) },
    ];
    for spec in &specs {
        let t = spec.principal_grading();
        let mut row = format!("{spec:<14} {t}:");
        for j in -2..=1 {
            let c = graded_component(spec, &t, j)?;
            row.push_str(&format!("  g{j} = {}", c.dims_string()));
            if let Some(e) = expected_dims(spec, &t, j) {
                row.push_str(&format!(" [{:?}]", e.expected));
            }
        }
        println!("{row}");
    }

    let sko = AlgebraSpec::SKO { n: 2, beta: rat(2, 1) };
    let (even, odd) = codimension(&sko, &sko.principal_grading())?;
    println!("codimension of the degree-0 subalgebra of {sko}: ({even}|{odd})");
    println!("{} tabulated rows", table1_entries().len());
    Ok(())
}
