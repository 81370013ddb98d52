//! `dihedral`: decide and construct dihedral matrix class members from the
//! command line.
//!
//! Exit codes: 0 feasible / pass / no discrepancies, 1 infeasible / fail /
//! discrepancies found, 2 input error.

mod doc;
mod gen;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dihedral_core::oracle::{sweep_with, verify, SweepConfig};
use dihedral_core::{Decision, MarginVector, MatrixClass, SubgroupId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "dihedral", version, about = "Dihedral matrix class decisions, witnesses and oracle sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one instance and print the report, with a witness when feasible.
    Solve {
        /// Row margins, comma separated (integers or p/q).
        #[arg(long, allow_hyphen_values = true)]
        rows: Option<String>,
        /// Column margins, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        cols: Option<String>,
        /// real, integral or zero-one.
        #[arg(long)]
        class: Option<String>,
        /// trivial, rot90, rot180, h, v, diag, antidiag, times, plus or full.
        #[arg(long)]
        subgroup: Option<String>,
        /// JSON instance document; `-` reads standard input.
        #[arg(long, conflicts_with_all = ["rows", "cols"])]
        instance: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a matrix against margins, a subgroup and a class.
    Check {
        /// Whitespace text (one row per line), a JSON array of rows, or a
        /// JSON solve report. `-` reads standard input.
        #[arg(long)]
        matrix: String,
        /// Defaults to the instance in a JSON report, else the matrix's own sums.
        #[arg(long, allow_hyphen_values = true)]
        rows: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        cols: Option<String>,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        class: Option<String>,
    },
    /// Compare every theorem decision with exhaustive enumeration.
    Sweep {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_total: i64,
        /// Comma-separated classes.
        #[arg(long, default_value = "zero-one")]
        classes: String,
        /// Comma-separated subgroups; all ten by default.
        #[arg(long)]
        subgroups: Option<String>,
        /// Integral entry cap for the enumeration; the instance total by default.
        #[arg(long)]
        entry_bound: Option<i64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Flip every centrosymmetric decision, to show the sweep notices.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print a random instance document.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest matrix entry used when drawing margins.
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
        #[arg(long, default_value = "trivial")]
        subgroup: String,
        #[arg(long, default_value = "integral")]
        class: String,
        /// Probability of margins taken from an actual class member.
        #[arg(long, default_value_t = 0.5)]
        feasible_bias: f64,
    },
}

/// Exit status of a command that ran to completion.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, String> {
    match cmd {
        Command::Solve { rows, cols, class, subgroup, instance, format } => {
            let inst = match instance {
                Some(path) => {
                    let v = serde_json::from_str(&doc::read_source(&path)?).map_err(|e| format!("bad JSON: {e}"))?;
                    doc::instance_from_value(v)?
                }
                None => {
                    let rows = parse_vector(rows.as_deref().ok_or("--rows is required")?)?;
                    let cols = parse_vector(cols.as_deref().ok_or("--cols is required")?)?;
                    let class = class.as_deref().ok_or("--class is required")?;
                    let subgroup = subgroup.as_deref().ok_or("--subgroup is required")?;
                    doc::instance(&rows, &cols, class, subgroup)?
                }
            };
            let report = dihedral_core::solve(&inst.pair, inst.subgroup, inst.class).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", doc::report_json(&inst, &report)),
                Format::Text => print!("{}", doc::report_text(&inst, &report)),
            }
            Ok(if report.is_feasible() { Outcome::Yes } else { Outcome::No })
        }
        Command::Check { matrix, rows, cols, subgroup, class } => {
            let parsed = doc::parse_matrix(&doc::read_source(&matrix)?)?;
            let a = parsed.matrix;
            let from_doc = parsed.instance.map(doc::instance_from_value).transpose()?;
            let rows = match rows {
                Some(r) => parse_vector(&r)?,
                None => match &from_doc {
                    Some(i) => i.pair.rows().clone(),
                    None => MarginVector::new(a.row_sums()).map_err(|e| e.to_string())?,
                },
            };
            let cols = match cols {
                Some(c) => parse_vector(&c)?,
                None => match &from_doc {
                    Some(i) => i.pair.cols().clone(),
                    None => MarginVector::new(a.col_sums()).map_err(|e| e.to_string())?,
                },
            };
            let subgroup = subgroup
                .or_else(|| from_doc.as_ref().map(|i| i.subgroup.name().to_string()))
                .ok_or("--subgroup is required")?;
            let class =
                class.or_else(|| from_doc.as_ref().map(|i| i.class.name().to_string())).ok_or("--class is required")?;
            let inst = doc::instance(&rows, &cols, &class, &subgroup)?;
            if inst.subgroup.requires_square() && !a.is_square() {
                return Err(format!("subgroup {} acts only on square matrices", inst.subgroup));
            }
            let report = verify(&a, &inst.pair, inst.subgroup, inst.class);
            println!("{report}");
            Ok(if report.pass() { Outcome::Yes } else { Outcome::No })
        }
        Command::Sweep { max_m, max_n, max_total, classes, subgroups, entry_bound, jobs, inject_fault } => {
            let classes = parse_list::<MatrixClass>(&classes)?;
            let subgroups = match subgroups {
                Some(s) => parse_list::<SubgroupId>(&s)?,
                None => SubgroupId::ALL.to_vec(),
            };
            let cfg = SweepConfig { max_m, max_n, max_total, classes, subgroups, entry_bound, jobs };
            let report = sweep_with(&cfg, |p, h, c| {
                let mut r = dihedral_core::solve(p, h, c)?;
                if inject_fault && h == SubgroupId::Rot180 {
                    r.decision = Decision::from_bool(!r.is_feasible());
                    r.witness = None;
                }
                Ok(r)
            });
            for d in &report.discrepancies {
                println!("{d}");
            }
            println!(
                "{} checks, {} feasible, {} discrepancies",
                report.checks,
                report.feasible,
                report.discrepancies.len()
            );
            Ok(if report.discrepancies.is_empty() { Outcome::Yes } else { Outcome::No })
        }
        Command::Gen { seed, max_m, max_n, max_entry, subgroup, class, feasible_bias } => {
            let subgroup: SubgroupId = subgroup.parse().map_err(|e: dihedral_core::Error| e.to_string())?;
            let class: MatrixClass = class.parse().map_err(|e: dihedral_core::Error| e.to_string())?;
            if !(0.0..=1.0).contains(&feasible_bias) {
                return Err("--feasible-bias must lie in [0, 1]".into());
            }
            let cfg = gen::GenConfig { max_m, max_n, max_entry, subgroup, class, feasible_bias };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pair = gen::generate(&mut rng, &cfg);
            let inst = doc::Instance { pair, class, subgroup };
            println!("{}", serde_json::to_string_pretty(&inst.document()).expect("document serializes"));
            Ok(Outcome::Yes)
        }
    }
}

fn parse_vector(s: &str) -> Result<MarginVector, String> {
    s.parse().map_err(|e: dihedral_core::Error| e.to_string())
}

fn parse_list<T: std::str::FromStr<Err = dihedral_core::Error>>(s: &str) -> Result<Vec<T>, String> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.parse().map_err(|e: dihedral_core::Error| e.to_string())).collect()
}
