//! Command-line verification harness. Every subcommand prints JSON Lines
//! reports (or text) followed by a summary; the exit code is 0 when all
//! checks pass, 1 when one fails and 2 on usage or internal errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superalg::checks::{self, Config};
use superalg::conformal::{bracket_table, golden, Axiom, ConformalContext};
use superalg::error::Error;
use superalg::families::{spec_from_parts, AlgebraSpec};
use superalg::poly::GradingType;
use superalg::qforms::{FormFamily, QuadraticForm};
use superalg::report::{render, CheckReport, OutputFormat, Summary};
use superalg::scalar::{BaseField, Rational};

#[derive(Parser)]
#[command(name = "superalg", version, about = "Exact checks for linearly compact Lie superalgebras and Lie conformal superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Jet order of sampled elements.
    #[arg(long, global = true, default_value_t = 4)]
    trunc: u32,
    /// Number of sampled triples.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    /// Report format.
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "text"])]
    out: String,
    /// Mode truncation of the annihilation algebra.
    #[arg(long, global = true, default_value_t = 4)]
    modes: u32,
    /// Leave timings out of the reports so runs compare byte for byte.
    #[arg(long, global = true)]
    canonical: bool,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// W, S, H, K, HO, SHO, KO, SKO, SHO~ or SKO~.
    #[arg(long)]
    family: String,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Quadratic form for H and K, e.g. `diag:1,1,-1`.
    #[arg(long)]
    q: Option<QuadraticForm>,
    /// Parameter of SKO, e.g. `2` or `1/3`.
    #[arg(long)]
    beta: Option<Rational>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<AlgebraSpec, Error> {
        spec_from_parts(&self.family, self.m, self.n, self.q.clone(), self.beta.clone())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AxiomChoice {
    Sesquilinearity,
    Skew,
    Jacobi,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SamplingChoice {
    /// Exhaustive for N ≤ 4, sampled otherwise.
    Auto,
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum YesNo {
    Yes,
    No,
}

impl From<YesNo> for bool {
    fn from(v: YesNo) -> bool {
        matches!(v, YesNo::Yes)
    }
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = body.split_once('|').ok_or_else(|| format!("expected (a|b), got {s:?}"))?;
    Ok((a.trim().parse().map_err(|_| format!("bad count in {s:?}"))?, b.trim().parse().map_err(|_| format!("bad count in {s:?}"))?))
}

#[derive(Subcommand)]
enum Command {
    /// Sampled super Jacobi for W(m,n) or the Poisson bracket of H(m,n).
    Jacobi {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        corrupt: bool,
    },
    /// Dimensions of g_j against the closed forms.
    Table1 {
        #[command(flatten)]
        family: Option<FamilyArgs>,
        /// Grading type `(a,..|b,..)`; principal by default.
        #[arg(long)]
        grading: Option<GradingType>,
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
        /// Expected `(even|odd)`, for rows without a stored closed form.
        #[arg(long, value_parser = parse_dims)]
        expect: Option<(usize, usize)>,
        /// Run every stored row.
        #[arg(long, conflicts_with_all = ["family", "degree"])]
        all: bool,
        #[arg(long)]
        corrupt: bool,
    },
    /// Graded components up to `jmax`, bracket closure and codimension.
    Subalgebra {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        grading: Option<GradingType>,
        #[arg(long, default_value_t = 2)]
        jmax: i64,
        #[arg(long, value_parser = parse_dims)]
        expect_codim: Option<(usize, usize)>,
        #[arg(long)]
        corrupt: bool,
    },
    /// Sesquilinearity, skew-commutativity and Jacobi for K_{N,q}.
    ConformalAxioms {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long, value_enum, default_value = "all")]
        axiom: AxiomChoice,
        #[arg(long, value_enum, default_value = "auto")]
        sampling: SamplingChoice,
        #[arg(long)]
        corrupt: bool,
    },
    /// The 32 generators of CK_{6,q} span a subalgebra.
    Ck6Closure {
        #[arg(long)]
        q: QuadraticForm,
        /// Sign of alpha relative to the computed square root.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha_sign: i64,
        #[arg(long)]
        corrupt: bool,
    },
    /// The generators of S_{2,q} span a subalgebra.
    S2Closure {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        beta_sign: i64,
        #[arg(long)]
        corrupt: bool,
    },
    /// (A*)* = (-1)^{N(N-1)/2} det(q) A on all monomials.
    Hodge {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long)]
        corrupt: bool,
    },
    /// Annihilation algebra of K_{N,q} against K_q(1,N).
    AnnihilationCompare {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long)]
        corrupt: bool,
    },
    /// Quadratic-form invariants and real-form counts.
    Forms {
        #[command(subcommand)]
        query: FormsQuery,
    },
    /// Rescaling p (and t) relates the forms of q and lambda*q.
    PullbackCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long)]
        corrupt: bool,
    },
    /// Generates E_q(1,6) inside K_q(1,6).
    E16 {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha_sign: i64,
        #[arg(long)]
        corrupt: bool,
    },
    /// Prints the lambda-bracket table of K_{N,q} as JSON Lines.
    LambdaTable {
        #[arg(long)]
        q: QuadraticForm,
    },
}

#[derive(Subcommand)]
enum FormsQuery {
    /// Number of real forms.
    Count {
        /// H, K, E16 or S12.
        #[arg(long)]
        family: FormFamily,
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Whether q defines a form of the family over the field.
    Exists {
        #[arg(long)]
        family: FormFamily,
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long, default_value = "Q")]
        field: BaseField,
        #[arg(long, value_enum)]
        expect: Option<YesNo>,
    },
    /// Signature (positives, negatives).
    Signature {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long)]
        expect: Option<String>,
    },
    /// Equivalence up to a nonzero scalar.
    Equiv {
        #[arg(long)]
        q: QuadraticForm,
        #[arg(long)]
        r: QuadraticForm,
        #[arg(long, default_value = "R")]
        field: BaseField,
        #[arg(long, value_enum)]
        expect: Option<YesNo>,
    },
}

fn sign(s: i64) -> Result<i64, Error> {
    match s {
        1 | -1 => Ok(s),
        _ => Err(Error::Domain(format!("sign must be 1 or -1, got {s}"))),
    }
}

fn run(cli: &Cli) -> Result<Vec<CheckReport>, Error> {
    let cfg = |corrupt| Config { seed: cli.seed, trunc: cli.trunc, samples: cli.samples, modes: cli.modes, corrupt };
    Ok(match &cli.command {
        Command::Jacobi { family, corrupt } => vec![checks::jacobi(&family.spec()?, &cfg(*corrupt))],
        Command::Table1 { all: true, .. } => checks::table1_all(),
        Command::Table1 { family, grading, degree, expect, corrupt, .. } => {
            let family = family.as_ref().ok_or_else(|| Error::Domain("table1 needs --family or --all".into()))?;
            let spec = family.spec()?;
            let t = grading.clone().unwrap_or_else(|| spec.principal_grading());
            match degree {
                Some(j) => vec![checks::table1(&spec, &t, *j, *expect, *corrupt)],
                None => [-1, 0].iter().map(|&j| checks::table1(&spec, &t, j, None, *corrupt)).collect(),
            }
        }
        Command::Subalgebra { family, grading, jmax, expect_codim, corrupt } => {
            let spec = family.spec()?;
            let t = grading.clone().unwrap_or_else(|| spec.principal_grading());
            checks::subalgebra(&spec, &t, *jmax, *expect_codim, *corrupt)
        }
        Command::ConformalAxioms { q, axiom, sampling, corrupt } => {
            let axioms = match axiom {
                AxiomChoice::Sesquilinearity => vec![Axiom::Sesquilinearity],
                AxiomChoice::Skew => vec![Axiom::Skew],
                AxiomChoice::Jacobi => vec![Axiom::Jacobi],
                AxiomChoice::All => vec![Axiom::Sesquilinearity, Axiom::Skew, Axiom::Jacobi],
            };
            let samples = match sampling {
                SamplingChoice::Exhaustive => None,
                SamplingChoice::Random => Some(cli.samples),
                SamplingChoice::Auto => (q.dim() > 4).then_some(cli.samples),
            };
            checks::conformal_axioms(q, &axioms, samples, cli.seed, *corrupt)
        }
        Command::Ck6Closure { q, alpha_sign, corrupt } => vec![checks::ck6_closure(q, sign(*alpha_sign)?, *corrupt)],
        Command::S2Closure { q, beta_sign, corrupt } => vec![checks::s2_closure(q, sign(*beta_sign)?, *corrupt)],
        Command::Hodge { q, corrupt } => vec![checks::hodge(q, *corrupt)],
        Command::AnnihilationCompare { q, corrupt } => checks::annihilation_compare(q, &cfg(*corrupt)),
        Command::Forms { query } => vec![match query {
            FormsQuery::Count { family, n } => checks::forms_count(*family, *n),
            FormsQuery::Exists { family, q, field, expect } => {
                checks::forms_exists(*family, q, *field, expect.map(bool::from))
            }
            FormsQuery::Signature { q, expect } => checks::forms_signature(q, expect.as_deref()),
            FormsQuery::Equiv { q, r, field, expect } => checks::forms_equiv(q, r, *field, expect.map(bool::from)),
        }],
        Command::PullbackCheck { family, lambda, corrupt } => {
            vec![checks::pullback_check(&family.spec()?, lambda, *corrupt)]
        }
        Command::E16 { q, alpha_sign, corrupt } => vec![checks::e16(q, sign(*alpha_sign)?, *corrupt)],
        Command::LambdaTable { .. } => unreachable!("handled before the checks"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::LambdaTable { q } = &cli.command {
        return match ConformalContext::new(q.clone()) {
            Ok(ctx) => {
                print!("{}", golden::to_jsonl(&bracket_table(&ctx)));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let format: OutputFormat = cli.out.parse().expect("restricted by clap");
    match run(&cli) {
        Ok(reports) => {
            print!("{}", render(&reports, format, cli.canonical));
            ExitCode::from(Summary::of(&reports).exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}\n\nRun with --help for usage.");
            ExitCode::from(2)
        }
    }
}
