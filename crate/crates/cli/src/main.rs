//! `resproj`: resultants, CAD projection phases, the Brown/successive
//! resultant comparison, critical-point chains and optimum equations from
//! the command line.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use resproj::selftest::{run_suite, Suite};
use resproj::{Error, Polynomial, VariableOrder};

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "resproj",
    version,
    about = "Exact resultants and CAD projection operators"
)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Inputs {
    /// Variable order, comma separated (e.g. `x,y,z`). Projection eliminates
    /// variables in this order.
    #[arg(long, value_name = "NAMES")]
    vars: String,

    /// File with one polynomial per line; `#` starts a comment.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Polynomials, e.g. "x^2 + y^2 - 1". Put expressions that start with
    /// `-` after `--`.
    #[arg(value_name = "POLY")]
    exprs: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resultant of two polynomials with respect to one variable.
    Resultant {
        #[command(flatten)]
        inputs: Inputs,
        /// Variable to eliminate.
        #[arg(long, value_name = "VAR")]
        eliminate: String,
        /// Also print the Sylvester matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Discriminant (signed convention: Res(f, f') = Lc(f) Dis(f)).
    Discriminant {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_name = "VAR")]
        eliminate: String,
    },
    /// Projection phase with Brown's operator.
    Proj {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Projection phase with the successive resultant operator.
    Resp {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Run both projection phases and compare them level by level.
    Compare {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Triangular system f, ResP(f, x1), ResP(ResP(f, x1), x2), ...
    Chain {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Optimum equation in T and its real roots (candidate minima).
    Optimize {
        #[command(flatten)]
        inputs: Inputs,
        /// Also report the smallest value on a uniform grid. Numeric
        /// heuristic only.
        #[arg(long)]
        spot_check: bool,
        /// Grid half-width for --spot-check.
        #[arg(long, default_value_t = 3.0)]
        radius: f64,
        /// Grid points per axis for --spot-check.
        #[arg(long, default_value_t = 601)]
        steps: usize,
    },
    /// Randomized identity suites.
    Selftest {
        #[arg(long, env = "RESPROJ_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Run only the named suite (repeatable).
        #[arg(long, value_name = "NAME")]
        suite: Vec<String>,
    },
}

/// Failure with its exit status: 2 for unusable input, 3 for degenerate
/// input rejected by the library, 4 for violated invariants.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            2
        } else if e.is_internal() {
            4
        } else {
            3
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Parsed {
    order: Arc<VariableOrder>,
    texts: Vec<String>,
    polys: Vec<Polynomial>,
}

fn read_inputs(inputs: &Inputs) -> Result<Parsed, Failure> {
    let order = Arc::new(VariableOrder::parse_list(&inputs.vars)?);
    let mut texts = Vec::new();
    if let Some(path) = &inputs.input {
        let content =
            fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        for line in content.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                texts.push(line.to_string());
            }
        }
    }
    texts.extend(inputs.exprs.iter().cloned());
    let polys = texts
        .iter()
        .map(|t| {
            Polynomial::parse(t, &order).map_err(|e| Failure {
                code: 2,
                message: format!("in `{t}`: {e}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Parsed { order, texts, polys })
}

fn expect_count(p: &Parsed, n: usize, what: &str) -> Result<(), Failure> {
    if p.polys.len() != n {
        return Err(usage(format!(
            "{what} takes exactly {n} polynomial(s), got {}",
            p.polys.len()
        )));
    }
    Ok(())
}

fn expect_some(p: &Parsed) -> Result<(), Failure> {
    if p.polys.is_empty() {
        return Err(usage("no input polynomials"));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(Report, bool), Failure> {
    let start = Instant::now();
    let (mut report, ok) = match &cli.command {
        Command::Resultant {
            inputs,
            eliminate,
            matrix,
        } => {
            let p = read_inputs(inputs)?;
            expect_count(&p, 2, "resultant")?;
            let x = p.order.variable(eliminate)?;
            let r = resproj::resultant(&p.polys[0], &p.polys[1], &x)?;
            let m = if *matrix {
                Some(resproj::sylvester_matrix(&p.polys[0], &p.polys[1], &x)?)
            } else {
                None
            };
            (report::resultant(&p.order, p.texts, &x, &r, m.as_ref()), true)
        }
        Command::Discriminant { inputs, eliminate } => {
            let p = read_inputs(inputs)?;
            expect_count(&p, 1, "discriminant")?;
            let x = p.order.variable(eliminate)?;
            let d = resproj::discriminant(&p.polys[0], &x)?;
            (report::discriminant(&p.order, p.texts, &x, &d), true)
        }
        Command::Proj { inputs } | Command::Resp { inputs } => {
            let op = if matches!(cli.command, Command::Proj { .. }) {
                resproj::Operator::Brown
            } else {
                resproj::Operator::Yang
            };
            let p = read_inputs(inputs)?;
            expect_some(&p)?;
            let trace = resproj::projection_phase(&p.polys, &p.order, op)?;
            (report::trace(p.texts, &trace), true)
        }
        Command::Compare { inputs } => {
            let p = read_inputs(inputs)?;
            expect_some(&p)?;
            let r = resproj::equivalence_check(&p.polys, &p.order)?;
            let equal = r.equal;
            (report::comparison(p.texts, &r), equal)
        }
        Command::Chain { inputs } => {
            let p = read_inputs(inputs)?;
            expect_count(&p, 1, "chain")?;
            let sys = resproj::resp_chain(&p.polys[0], &p.order)?;
            (report::chain(p.texts, &sys), true)
        }
        Command::Optimize {
            inputs,
            spot_check,
            radius,
            steps,
        } => {
            let p = read_inputs(inputs)?;
            expect_count(&p, 1, "optimize")?;
            let eq = resproj::optimum_equation(&p.polys[0], &p.order)?;
            let candidates = resproj::isolate_real_roots(&eq)?;
            let spot =
                spot_check.then(|| resproj::optimize::numeric_spot_check(&p.polys[0], *radius, *steps));
            (
                report::optimum(
                    &p.order,
                    p.texts,
                    &eq,
                    &candidates,
                    spot.as_ref(),
                    *radius,
                    *steps,
                ),
                true,
            )
        }
        Command::Selftest { seed, trials, suite } => {
            let suites = select_suites(suite)?;
            let results: Vec<_> = suites
                .into_iter()
                .map(|s| {
                    let t = Instant::now();
                    let r = run_suite(s, *seed, *trials);
                    (r, t.elapsed().as_secs_f64() * 1e3)
                })
                .collect();
            let ok = results.iter().all(|(r, _)| r.ok());
            (report::selftest(*seed, *trials, &results), ok)
        }
    };
    report.timings_ms.insert(
        "total".into(),
        (start.elapsed().as_secs_f64() * 1e3 * 1e3).round() / 1e3,
    );
    Ok((report, ok))
}

fn select_suites(names: &[String]) -> Result<Vec<Suite>, Failure> {
    if names.is_empty() {
        return Ok(Suite::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| {
            Suite::ALL.into_iter().find(|s| s.name() == n).ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                usage(format!("unknown suite `{n}` (known: {})", known.join(", ")))
            })
        })
        .collect()
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { Format::Text };
    match run(&cli) {
        Ok((report, ok)) => {
            print!("{}", report.render(format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(f) => {
            if cli.json {
                println!("{}", report::error_json(&f.message, f.code));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_selection() {
        assert_eq!(select_suites(&[]).unwrap().len(), Suite::ALL.len());
        let one = select_suites(&["s-fold-3".into()]).unwrap();
        assert_eq!(one, vec![Suite::TripleIdentity]);
        assert_eq!(select_suites(&["nope".into()]).unwrap_err().code, 2);
    }

    #[test]
    fn error_codes() {
        assert_eq!(Failure::from(Error::UnknownVariable("q".into())).code, 2);
        assert_eq!(Failure::from(Error::ZeroPolynomial("op")).code, 3);
        assert_eq!(Failure::from(Error::Internal("bug".into())).code, 4);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
