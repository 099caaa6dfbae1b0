//! Bracket closure and transitivity of graded components up to degree 2.

use superalg::families::{bracket_closure_check, AlgebraSpec};

fn main() -> superalg::Result<()> {
    let specs = [
        AlgebraSpec::W { m: 1, n: 2 },
        AlgebraSpec::KO { n: 2 },
        AlgebraSpec::SHOTilde { n: 2 },
        AlgebraSpec::SKOTilde { n: 1 },
    ];
    for spec in &specs {
        let t = spec.principal_grading();
        for corrupt in [false, true] {
            let r = bracket_closure_check(spec, &t, 2, corrupt)?;
            let dims: Vec<String> = r.dims.iter().map(|(j, (e, o))| format!("{j}:({e}|{o})")).collect();
            println!(
                "{spec}{} {} pairs, {}  [{}]",
                if corrupt { " (one basis element removed)" } else { "" },
                r.pairs_checked,
                if r.passed() { "closed" } else { "NOT closed" },
                dims.join(" ")
            );
            if let Some(w) = r.witnesses.first() {
                println!("    {w}");
            }
        }
    }
    Ok(())
}
