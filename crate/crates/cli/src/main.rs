//! `orbitnum`: orbit numbers of Young modules from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbitnum::config::{check_ceiling, default_table_ceiling};
use orbitnum::error::check_prime;
use orbitnum::{
    build_tables, canonical_orbit_type, generic_jordan_type, kostka_csv, kostka_json,
    kostka_matrix, m_number, mullineux_regular, mullineux_restricted, orbit_number,
    p_adic_expansion, p_kostka, perm_module_dimension, run_suite, specht_dimension, table_csv,
    table_json, young_module_dimension, Error, Matrix, Module, OrbitType, Partition, Suite,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "orbitnum",
    version,
    about = "Orbit numbers of Young modules and p-Kostka numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Young,
    Permutation,
}

#[derive(Subcommand)]
enum Command {
    /// p-adic expansion λ = Σ p^i λ(i).
    Expand {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Canonical orbit type of --lambda, or the normal form of --orbit.
    OrbitType {
        #[arg(long)]
        p: u32,
        #[arg(long, required_unless_present = "orbit")]
        lambda: Option<Partition>,
        #[arg(long)]
        orbit: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of ways to insert the orbits into the rows.
    M {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        orbit: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Orbit number y at --orbit (default: the canonical orbit type).
    Y {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        orbit: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimensions of the Specht, Young permutation and Young modules.
    Dims {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generic Jordan type [1]^a [p]^b.
    Jordan {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        orbit: String,
        #[arg(long, value_enum, default_value = "young")]
        module: Which,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Mullineux map on p-restricted partitions (or p-regular with --regular).
    Mullineux {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        regular: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// A single p-Kostka number (--lambda, --mu) or the whole matrix (--n).
    Kostka {
        #[arg(long)]
        p: u32,
        #[arg(long, required_unless_present = "n", requires = "mu")]
        lambda: Option<Partition>,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long, conflicts_with_all = ["lambda", "mu"])]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Writes M, K and Y for (n, p) as one file per matrix.
    Tables {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, value_delimiter = ',', default_value = "M,K,Y")]
        emit: Vec<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Runs verification suites; prints one JSON report per suite and prime.
    Verify {
        #[arg(long, value_delimiter = ',', required = true)]
        suite: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u32>,
        #[arg(long)]
        n_max: u32,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn orbit(s: &str, p: u32) -> Result<OrbitType, Error> {
    OrbitType::parse(s, p)
}

/// Plain value, or `{key: value}` plus the inputs as JSON.
fn emit(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Json => println!("{value}"),
        _ => println!("{text}"),
    }
}

fn big(x: &orbitnum::BigNat) -> serde_json::Value {
    serde_json::Value::Number(
        x.to_string()
            .parse()
            .expect("decimal digits form a JSON number"),
    )
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Expand { p, lambda, format } => {
            check_prime(p)?;
            let e = p_adic_expansion(&lambda, p);
            emit(
                format,
                e.to_string(),
                json!({"lambda": lambda, "p": p, "terms": e.terms}),
            );
        }
        Command::OrbitType {
            p,
            lambda,
            orbit: o,
            format,
        } => {
            let t = match (lambda, o) {
                (_, Some(o)) => orbit(&o, p)?,
                (Some(l), None) => {
                    check_prime(p)?;
                    canonical_orbit_type(&l, p)
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            emit(
                format,
                t.to_string(),
                json!({"p": p, "orbit_type": t, "sizes": t.sizes()}),
            );
        }
        Command::M {
            p,
            lambda,
            orbit: o,
            format,
        } => {
            let o = orbit(&o, p)?;
            let v = m_number(&lambda, &o)?;
            emit(
                format,
                v.to_string(),
                json!({"lambda": lambda, "orbit": o, "p": p, "m": big(&v)}),
            );
        }
        Command::Y {
            p,
            lambda,
            orbit: o,
            format,
        } => {
            let o = match o {
                Some(o) => orbit(&o, p)?,
                None => {
                    check_prime(p)?;
                    canonical_orbit_type(&lambda, p)
                }
            };
            let v = orbit_number(&lambda, &o, p)?;
            emit(
                format,
                v.to_string(),
                json!({"lambda": lambda, "orbit": o, "p": p, "y": big(&v)}),
            );
        }
        Command::Dims { p, lambda, format } => {
            let s = specht_dimension(&lambda);
            let m = perm_module_dimension(&lambda.to_composition());
            let y = young_module_dimension(&lambda, p)?;
            emit(
                format,
                format!("specht {s}\npermutation {m}\nyoung {y}"),
                json!({"lambda": lambda, "p": p, "specht": big(&s), "permutation": big(&m), "young": big(&y)}),
            );
        }
        Command::Jordan {
            p,
            lambda,
            orbit: o,
            module,
            format,
        } => {
            let o = orbit(&o, p)?;
            let which = match module {
                Which::Young => Module::Young,
                Which::Permutation => Module::YoungPermutation,
            };
            let j = generic_jordan_type(&lambda, &o, p, which)?;
            emit(
                format,
                format!("[1]^{}[{p}]^{}", j.ones, j.pblocks),
                json!({
                    "lambda": lambda, "orbit": o, "p": p,
                    "ones": big(&j.ones), "pblocks": big(&j.pblocks),
                    "generically_free": j.is_generically_free(),
                }),
            );
        }
        Command::Mullineux {
            p,
            lambda,
            regular,
            format,
        } => {
            let m = if regular {
                mullineux_regular(&lambda, p)?
            } else {
                mullineux_restricted(&lambda, p)?
            };
            emit(
                format,
                m.to_string(),
                json!({"lambda": lambda, "p": p, "image": m}),
            );
        }
        Command::Kostka {
            p,
            lambda,
            mu,
            n,
            format,
        } => match (lambda, mu, n) {
            (Some(l), Some(mu), _) => {
                let k = p_kostka(&l, &mu, p)?;
                emit(
                    format,
                    k.to_string(),
                    json!({"lambda": l, "mu": mu, "p": p, "k": big(&k)}),
                );
            }
            (_, _, Some(n)) => {
                check_prime(p)?;
                check_ceiling("kostka", n, default_table_ceiling(p))?;
                let k = kostka_matrix(n, p)?;
                match format {
                    Format::Json => println!("{}", kostka_json(&k)),
                    _ => print!("{}", kostka_csv(&k)?),
                }
            }
            _ => unreachable!("clap requires --lambda with --mu, or --n"),
        },
        Command::Tables {
            n,
            p,
            emit: which,
            format,
            out,
        } => {
            check_prime(p)?;
            let mut mats: Vec<Matrix> =
                which.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            mats.sort();
            mats.dedup();
            if format == Format::Text {
                return Err(Failure::Input("tables are written as csv or json".into()));
            }
            check_ceiling("tables", n, default_table_ceiling(p))?;
            let t = build_tables(n, p)?;
            fs::create_dir_all(&out)
                .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
            for m in mats {
                let (body, ext) = match format {
                    Format::Json => (format!("{}\n", table_json(&t, &[m])), "json"),
                    _ => (table_csv(&t, m)?, "csv"),
                };
                let path = out.join(format!("{m}_n{n}_p{p}.{ext}"));
                fs::write(&path, body)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                println!("{}", path.display());
            }
        }
        Command::Verify { suite, p, n_max } => {
            let suites: Vec<Suite> = suite.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            let mut all_pass = true;
            for s in suites {
                for &q in &p {
                    let r = run_suite(s, q, n_max)?;
                    all_pass &= r.pass;
                    println!("{}", serde_json::to_string(&r).expect("reports serialize"));
                }
            }
            if !all_pass {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("usage error"));
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(2)
        }
    }
}
