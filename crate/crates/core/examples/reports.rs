//! Running checks through the library and rendering them as JSON Lines.

use superalg::checks::{self, Config};
use superalg::families::AlgebraSpec;
use superalg::report::{render, OutputFormat, Summary};

fn main() {
    let cfg = Config { seed: 5, samples: 50, ..Config::default() };
    let w = AlgebraSpec::W { m: 1, n: 2 };
    let mut reports = vec![
        checks::jacobi(&w, &cfg),
        checks::table1(&w, &w.principal_grading(), -1, None, false),
        checks::table1(&w, &w.principal_grading(), -1, None, true),
    ];
    reports.extend(checks::annihilation_compare(&"diag:1,1".parse().expect("form"), &cfg));
    print!("{}", render(&reports, OutputFormat::Text, false));
    print!("{}", render(&reports, OutputFormat::Json, true));
    println!("exit code would be {}", Summary::of(&reports).exit_code());
}
