//! Command-line front end: loads an algebra file, parses terms and runs one analysis.
//!
//! Exit status is 0 on success, 1 on a domain error and 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use sepset_core::{
    algebra_n_complexity, clone_level, cp1, cp2, cp3_total, ess, is_separable, is_subterm, parse,
    satisfies_identity, sep_sets, FiniteAlgebra, Term, VarSet, DEFAULT_MAX_CLONE_SIZE,
};

pub mod report;

use report::*;

#[derive(Debug, Parser)]
#[command(name = "sepset", version, about = "Essential variables, separable sets and term complexity over finite algebras")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate an algebra description file.
    AlgCheck { algebra: PathBuf },
    /// Print the operation induced by a term or polynomial.
    Eval {
        #[command(flatten)]
        arity: ArityArg,
        algebra: PathBuf,
        term: String,
    },
    /// Essential variables of a term.
    Ess {
        #[command(flatten)]
        arity: ArityArg,
        algebra: PathBuf,
        term: String,
    },
    /// Separable sets of a term, or a verdict for one set.
    Sep {
        #[command(flatten)]
        arity: ArityArg,
        /// Check a single set, e.g. `--set 1,2`.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        algebra: PathBuf,
        term: String,
    },
    /// Whether `t` is a subterm of `s` in the algebra (t ≺ s).
    Subterm {
        #[command(flatten)]
        arity: ArityArg,
        algebra: PathBuf,
        t: String,
        s: String,
    },
    /// Whether the algebra satisfies the identity `s ≈ t`.
    Identity {
        #[command(flatten)]
        arity: ArityArg,
        algebra: PathBuf,
        s: String,
        t: String,
    },
    /// Complexity measures of a term.
    Cp {
        #[command(flatten)]
        arity: ArityArg,
        /// Which measures to compute.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3", value_parser = clap::value_parser!(u8).range(1..=3))]
        measures: Vec<u8>,
        algebra: PathBuf,
        term: String,
    },
    /// n-complexity of the algebra and its distribution over the n-ary clone.
    Census {
        #[arg(long)]
        arity: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CLONE_SIZE)]
        max_clone_size: usize,
        algebra: PathBuf,
    },
    /// Size (and optionally members) of the n-ary clone.
    Clone {
        #[arg(long)]
        arity: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CLONE_SIZE)]
        max_clone_size: usize,
        /// List every member with a generating term.
        #[arg(long)]
        list: bool,
        algebra: PathBuf,
    },
}

#[derive(Debug, Args)]
struct ArityArg {
    /// Context arity n; defaults to the largest variable index.
    #[arg(long)]
    arity: Option<usize>,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<sepset_core::Error> for Failure {
    fn from(e: sepset_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> Result<FiniteAlgebra, Failure> {
    FiniteAlgebra::load(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn parse_term(alg: &FiniteAlgebra, text: &str) -> Result<Term, Failure> {
    parse(text, &alg.signature()).map_err(|e| Failure::Domain(format!("in `{text}`: {e}")))
}

fn resolve_arity(arity: &ArityArg, terms: &[&Term]) -> Result<usize, Failure> {
    let needed = terms.iter().map(|t| t.max_var()).max().unwrap_or(0);
    match arity.arity {
        None => Ok(needed),
        Some(n) if n >= needed => Ok(n),
        Some(n) => Err(Failure::Usage(format!(
            "--arity {n} is smaller than the largest variable index x{needed}"
        ))),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn execute(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::AlgCheck { algebra } => {
            let alg = load(algebra)?;
            Ok(if json {
                to_json(&alg)
            } else {
                format!("ok: {alg}")
            })
        }
        Command::Eval { arity, algebra, term } => {
            let alg = load(algebra)?;
            let t = parse_term(&alg, term)?;
            let n = resolve_arity(arity, &[&t])?;
            let table = alg.induced_operation(&t, n)?;
            if json {
                return Ok(to_json(&table));
            }
            let mut lines = Vec::with_capacity(table.len() + 1);
            let header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            lines.push(format!("{} | {t}", header.join(" ")));
            for (idx, value) in table.values().iter().enumerate() {
                let row: Vec<String> = table
                    .tuple_of(idx)
                    .iter()
                    .zip(&header)
                    .map(|(a, h)| format!("{a:>width$}", width = h.len()))
                    .collect();
                lines.push(format!("{} | {value}", row.join(" ")));
            }
            Ok(lines.join("\n"))
        }
        Command::Ess { arity, algebra, term } => {
            let alg = load(algebra)?;
            let t = parse_term(&alg, term)?;
            let n = resolve_arity(arity, &[&t])?;
            let set = ess(&t, &alg, n)?;
            Ok(if json {
                to_json(&EssReport { arity: n, ess: set })
            } else {
                set.to_string()
            })
        }
        Command::Sep {
            arity,
            set,
            algebra,
            term,
        } => {
            let alg = load(algebra)?;
            let t = parse_term(&alg, term)?;
            let n = resolve_arity(arity, &[&t])?;
            match set {
                Some(indices) => {
                    if let Some(bad) = indices.iter().find(|&&i| i == 0 || i > n) {
                        return Err(Failure::Usage(format!("--set index {bad} outside 1..={n}")));
                    }
                    let m: VarSet = indices.iter().copied().collect();
                    let separable = is_separable(&t, &alg, n, m)?;
                    Ok(if json {
                        to_json(&SepVerdict { arity: n, set: m, separable })
                    } else if separable {
                        format!("{m} is separable")
                    } else {
                        format!("{m} is not separable")
                    })
                }
                None => {
                    let sets = sep_sets(&t, &alg, n)?;
                    Ok(if json {
                        to_json(&SepReport { arity: n, separable: sets })
                    } else {
                        let shown: Vec<String> = sets.iter().map(VarSet::to_string).collect();
                        shown.join("\n")
                    })
                }
            }
        }
        Command::Subterm { arity, algebra, t, s } => {
            let alg = load(algebra)?;
            let (tt, st) = (parse_term(&alg, t)?, parse_term(&alg, s)?);
            let n = resolve_arity(arity, &[&tt, &st])?;
            let result = is_subterm(&tt, &st, &alg, n)?;
            Ok(if json {
                to_json(&SubtermReport { arity: n, subterm: result })
            } else {
                result.to_string()
            })
        }
        Command::Identity { arity, algebra, s, t } => {
            let alg = load(algebra)?;
            let (st, tt) = (parse_term(&alg, s)?, parse_term(&alg, t)?);
            let n = resolve_arity(arity, &[&st, &tt])?;
            let result = satisfies_identity(&alg, &st, &tt, n)?;
            Ok(if json {
                to_json(&IdentityReport { arity: n, identity: result })
            } else {
                result.to_string()
            })
        }
        Command::Cp {
            arity,
            measures,
            algebra,
            term,
        } => {
            let alg = load(algebra)?;
            let t = parse_term(&alg, term)?;
            let n = resolve_arity(arity, &[&t])?;
            let report = CpReport {
                arity: n,
                cp1: measures.contains(&1).then(|| cp1(&t)),
                cp2: measures.contains(&2).then(|| cp2(&t)),
                cp3: if measures.contains(&3) {
                    Some(cp3_total(&t, &alg, n)?)
                } else {
                    None
                },
            };
            Ok(if json {
                to_json(&report)
            } else {
                report.render()
            })
        }
        Command::Census {
            arity,
            max_clone_size,
            algebra,
        } => {
            let alg = load(algebra)?;
            let census = algebra_n_complexity(&alg, *arity, *max_clone_size)?;
            Ok(if json {
                to_json(&census)
            } else {
                render_census(&census)
            })
        }
        Command::Clone {
            arity,
            max_clone_size,
            list,
            algebra,
        } => {
            let alg = load(algebra)?;
            let level = clone_level(&alg, *arity, *max_clone_size)?;
            let report = CloneReport::new(&level, *list);
            Ok(if json {
                to_json(&report)
            } else {
                report.render()
            })
        }
    }
}
