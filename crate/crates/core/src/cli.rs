//! Command-line front end. Every report starts with `== <command> ==`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::{cyclic_report, CyclicSpec};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::format::{parse_algebra, parse_field};
use crate::linalg::Subspace;
use crate::verify::{
    enumerate_leibniz, frattini_bruteforce, is_isomorphic, maximal_subalgebras_bruteforce, sample_leibniz,
    sweep_condition_k, sweep_cyclic_frattini, sweep_equivalences, sweep_quotient, sweep_s_star, TheoremReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "leibniz",
    version,
    about = "Exact computations with finite-dimensional left Leibniz algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Series, centers and nilpotency of an algebra file.
    Analyze {
        file: PathBuf,
        /// Add maximal subalgebras and the Frattini subalgebra (finite fields).
        #[arg(long)]
        lattice: bool,
        /// Skip the Leibniz identity check when parsing.
        #[arg(long)]
        unchecked: bool,
    },
    /// Closed-form structure of the cyclic algebra with `a·a^n = Σ α_i a^i`.
    Cyclic {
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        /// Comma-separated α_2, ..., α_n; empty for the one-dimensional algebra.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        alphas: String,
    },
    /// Checks theorems over every Leibniz algebra of a census.
    Sweep {
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        checks: Vec<Check>,
        /// Draw this many random tables instead of scanning all of them.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Searches for an isomorphism between two algebra files.
    Isocheck { first: PathBuf, second: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Sstar,
    Conditionk,
    Frattini,
    Equivalences,
    Thm31,
    All,
}

const ALL_CHECKS: [Check; 5] = [
    Check::Sstar,
    Check::Conditionk,
    Check::Frattini,
    Check::Equivalences,
    Check::Thm31,
];

fn parse_field_arg(text: &str) -> std::result::Result<FieldSpec, String> {
    parse_field(text).map_err(|e| e.to_string())
}

/// Report text plus whether a counterexample was found.
pub struct Report {
    pub text: String,
    pub counterexample: bool,
}

impl Report {
    fn clean(text: String) -> Self {
        Report {
            text,
            counterexample: false,
        }
    }
}

pub fn cmd_analyze(a: &LeibnizAlgebra, lattice: bool) -> Result<Report> {
    let mut out = String::from("== analyze ==\n");
    let w = &mut out;
    writeln!(w, "field {}", a.field()).unwrap();
    writeln!(w, "dim {}", a.dim()).unwrap();
    match a.leibniz_violation() {
        None => writeln!(w, "leibniz identity: holds").unwrap(),
        Some((i, j, k)) => writeln!(w, "leibniz identity: fails on (e{}, e{}, e{})", i + 1, j + 1, k + 1).unwrap(),
    }
    writeln!(w, "nilpotency class: {}", a.nilpotency_class()).unwrap();
    writeln!(
        w,
        "lower central series dims: {}",
        dims(&a.lower_central_series().dims())
    )
    .unwrap();
    writeln!(
        w,
        "upper central series dims: {}",
        dims(&a.upper_central_series().dims())
    )
    .unwrap();
    writeln!(w, "r-series dims: {}", dims(&a.r_series().dims())).unwrap();
    writeln!(w, "center: {}", a.format_subspace(&a.center())).unwrap();
    writeln!(w, "left center: {}", a.format_subspace(&a.left_center())).unwrap();
    writeln!(w, "right center: {}", a.format_subspace(&a.right_center())).unwrap();
    writeln!(w, "A^2: {}", a.format_subspace(&a.derived())).unwrap();
    if lattice {
        let maxes = maximal_subalgebras_bruteforce(a)?;
        list(w, a, "maximal subalgebras", &maxes);
        writeln!(w, "frattini: {}", a.format_subspace(&frattini_bruteforce(a)?)).unwrap();
    }
    Ok(Report::clean(out))
}

fn dims(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn list(w: &mut String, a: &LeibnizAlgebra, title: &str, items: &[Subspace]) {
    writeln!(w, "{title} ({}):", items.len()).unwrap();
    for u in items {
        writeln!(w, "  {}", a.format_subspace(u)).unwrap();
    }
}

pub fn parse_alphas(field: FieldSpec, text: &str) -> Result<Vec<crate::field::Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut column = 1;
    let mut out = Vec::new();
    for part in text.split(',') {
        let x = field.parse_scalar(part).map_err(|message| Error::Parse {
            line: 1,
            column,
            message,
        })?;
        out.push(x);
        column += part.len() + 1;
    }
    Ok(out)
}

pub fn cmd_cyclic(spec: &CyclicSpec) -> Report {
    let r = cyclic_report(spec);
    let a = spec.algebra();
    let mut out = String::from("== cyclic ==\n");
    let w = &mut out;
    writeln!(w, "field {}", spec.field()).unwrap();
    writeln!(w, "dim {}", spec.dim()).unwrap();
    let alphas: Vec<String> = spec.alphas().iter().map(ToString::to_string).collect();
    writeln!(w, "alphas ({})", alphas.join(", ")).unwrap();
    writeln!(w, "p(x) = {}", r.p).unwrap();
    writeln!(w, "factorization: {}", r.factorization).unwrap();
    writeln!(w, "primary decomposition ({}):", r.primary.len()).unwrap();
    for b in &r.primary {
        writeln!(
            w,
            "  {}, multiplicity {}: {}",
            b.factor,
            b.multiplicity,
            a.format_subspace(&b.component)
        )
        .unwrap();
    }
    writeln!(w, "frattini: {}", a.format_subspace(&r.frattini)).unwrap();
    list(w, &a, "maximal subalgebras", &r.maximal_subalgebras);
    writeln!(w, "cartan: {}", a.format_subspace(&r.cartan)).unwrap();
    list(w, &a, "minimal ideals", &r.minimal_ideals);
    writeln!(w, "socle: {}", a.format_subspace(&r.socle)).unwrap();
    writeln!(w, "maximal ideal: {}", a.format_subspace(&r.maximal_ideal)).unwrap();
    writeln!(w, "fitting null component: {}", a.format_subspace(&r.fitting.0)).unwrap();
    writeln!(w, "fitting one component: {}", a.format_subspace(&r.fitting.1)).unwrap();
    Report::clean(out)
}

/// Runs the selected checks in a fixed order, whatever order they were given in.
pub fn cmd_sweep(field: FieldSpec, dim: usize, checks: &[Check], sample: Option<(u64, u64)>) -> Result<Report> {
    let census = match sample {
        Some((samples, seed)) => sample_leibniz(field, dim, samples, seed)?,
        None => enumerate_leibniz(field, dim)?,
    };
    let mut out = String::from("== sweep ==\n");
    writeln!(out, "census: {}", census.describe()).unwrap();
    let mut counterexample = false;
    for check in ALL_CHECKS {
        if !checks.contains(&check) && !checks.contains(&Check::All) {
            continue;
        }
        let report: TheoremReport = match check {
            Check::Sstar => sweep_s_star(&census)?,
            Check::Conditionk => sweep_condition_k(&census)?,
            Check::Frattini => sweep_cyclic_frattini(&census)?,
            Check::Equivalences => sweep_equivalences(&census)?,
            Check::Thm31 => sweep_quotient(&census)?.biconditional,
            Check::All => unreachable!("not in ALL_CHECKS"),
        };
        eprintln!("{}: {:.2?}", report.theorem, report.elapsed);
        counterexample |= !report.passed();
        writeln!(out, "{report}").unwrap();
    }
    Ok(Report {
        text: out,
        counterexample,
    })
}

pub fn cmd_isocheck(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> Result<Report> {
    let mut out = String::from("== isocheck ==\n");
    match is_isomorphic(a, b)? {
        Some(p) => {
            writeln!(out, "isomorphic").unwrap();
            writeln!(out, "witness (column i is the image of e{{i}}):").unwrap();
            write!(out, "{p}").unwrap();
        }
        None => writeln!(out, "not isomorphic").unwrap(),
    }
    Ok(Report::clean(out))
}

fn read_algebra(path: &Path, check: bool) -> Result<LeibnizAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
    parse_algebra(&text, check).map_err(|e| match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

pub fn execute(command: &Command) -> Result<Report> {
    let start = Instant::now();
    let report = match command {
        Command::Analyze {
            file,
            lattice,
            unchecked,
        } => cmd_analyze(&read_algebra(file, !unchecked)?, *lattice),
        Command::Cyclic { field, alphas } => {
            let spec = CyclicSpec::new(*field, parse_alphas(*field, alphas)?)?;
            Ok(cmd_cyclic(&spec))
        }
        Command::Sweep {
            field,
            dim,
            checks,
            sample,
            seed,
        } => cmd_sweep(*field, *dim, checks, sample.map(|s| (s, *seed))),
        Command::Isocheck { first, second } => cmd_isocheck(&read_algebra(first, true)?, &read_algebra(second, true)?),
    };
    eprintln!("runtime: {:.2?}", start.elapsed());
    report
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(if report.counterexample {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn cyclic_reports_examples() {
        let r = cmd_cyclic(&CyclicSpec::from_i64(Q, &[1]));
        assert!(r.text.starts_with("== cyclic ==\n"));
        assert!(r.text.contains("p(x) = x^2 - x\n"), "{}", r.text);
        assert!(r.text.contains("frattini: 0\n"));
        let r = cmd_cyclic(&CyclicSpec::from_i64(Q, &[0]));
        assert!(r.text.contains("p(x) = x^2\n"));
        assert!(r.text.contains("frattini: span{a^2}\n"));
        let r = cmd_cyclic(&CyclicSpec::from_i64(FieldSpec::Prime(3), &[1, 0]));
        assert!(r.text.contains("p(x) = x^3 + 2*x\n"), "{}", r.text);
        assert!(r.text.contains("maximal subalgebras (3):"));
    }

    #[test]
    fn alphas_parse() {
        assert_eq!(parse_alphas(Q, "").unwrap(), vec![]);
        assert_eq!(
            parse_alphas(Q, "1/2, -3").unwrap(),
            vec![Q.parse_scalar("1/2").unwrap(), Q.from_i64(-3)]
        );
        assert!(matches!(parse_alphas(Q, "1,x"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(
            parse_alphas(FieldSpec::Prime(3), "1/3"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn sweep_dim2_all_checks() {
        let r = cmd_sweep(FieldSpec::Prime(2), 2, &[Check::All], None).unwrap();
        assert!(!r.counterexample, "{}", r.text);
        assert_eq!(r.text.matches("counterexamples: 0").count(), 5);
    }

    #[test]
    fn sweep_budget() {
        let err = cmd_sweep(FieldSpec::Prime(3), 3, &[Check::Sstar], None).err().unwrap();
        assert_eq!(exit_code(&err), EXIT_BUDGET);
    }
}
