use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use redei_berge::deformation::{deformed_u_definition, deformed_u_thm, TMatrix};
use redei_berge::digraph::{enumerate_tournaments, Digraph};
use redei_berge::edgelist::{format_digraph, parse_digraph, parse_inline};
use redei_berge::hamiltonian::{verify_berge, verify_mod4, verify_redei, CounterRegistry};
use redei_berge::limits::Limits;
use redei_berge::redei::{u_via_definition, RouteRegistry, UdValue};
use redei_berge::verify::{run_sweep, SweepConfig, SweepMode, VerifierRegistry};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "redei-berge",
    version,
    about = "Power-sum expansions of U_D, hamp counts and verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print U_D in the power-sum basis.
    Compute {
        #[command(flatten)]
        digraph: DigraphInput,
        /// Route used to compute U_D (see `list`).
        #[arg(long, default_value = "thm1")]
        route: String,
        /// Also compare against the listing definition in `--vars` variables.
        #[arg(long)]
        check: bool,
        /// Variables for the cross-check; defaults to n.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the deformation for a weight matrix given as JSON.
    Deformed {
        /// File holding `{"n": .., "t": {"u,v": "p/q", ..}}`.
        #[arg(long, conflicts_with = "tmatrix", required_unless_present = "tmatrix")]
        input: Option<PathBuf>,
        /// The same JSON inline.
        #[arg(long)]
        tmatrix: Option<String>,
        /// Also compare against the listing definition.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count hamps of D and its complement and check the parity theorems.
    Hamps {
        #[command(flatten)]
        digraph: DigraphInput,
        #[arg(long, default_value = "dp")]
        method: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verifier over exhaustive or random instances.
    Verify {
        /// Verifier name (see `list`).
        name: String,
        /// Every instance on exactly N vertices.
        #[arg(long, value_name = "N", conflicts_with_all = ["random", "max_n", "seed"], required_unless_present = "random")]
        exhaustive: Option<usize>,
        /// K seeded random instances.
        #[arg(long, value_name = "K", requires = "max_n")]
        random: Option<u64>,
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_name = "J")]
        jobs: Option<usize>,
        /// Record every failure instead of stopping at the first.
        #[arg(long)]
        keep_going: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream every tournament on K vertices in enumeration order.
    Tournaments {
        #[arg(long, value_name = "K")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List routes, hamp counters and verifiers.
    List,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DigraphInput {
    /// Edge-list file: vertex count, then one `u v` arc per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Inline edge list, e.g. "3;0 1;1 1;2 2".
    #[arg(long)]
    arcs: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] redei_berge::error::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// What a subcommand concluded, mapped to the exit status.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })
}

impl DigraphInput {
    fn load(&self) -> Result<Digraph, CliError> {
        match (&self.input, &self.arcs) {
            (Some(path), _) => Ok(parse_digraph(&read(path)?)?),
            (None, Some(inline)) => Ok(parse_inline(inline)?),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

fn parse_json(text: &str) -> Value {
    serde_json::from_str(text).expect("library JSON is well formed")
}

fn run(command: Command) -> Result<Outcome, CliError> {
    let limits = Limits::default();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = match command {
        Command::Compute {
            digraph,
            route,
            check,
            vars,
            format,
        } => {
            let d = digraph.load()?;
            let routes = RouteRegistry::default();
            let route = routes.get(&route)?;
            route.accepts(&d)?;
            let value = route.compute(&d, &limits)?;
            let vars = vars.unwrap_or(d.n().max(1));
            let check = if check {
                Some(value.expand(vars)? == u_via_definition(&d, vars, &limits)?)
            } else {
                None
            };
            match format {
                Format::Text => {
                    match &value {
                        UdValue::PowerSum(f) => writeln!(out, "{f}")?,
                        UdValue::Fundamental(g) => writeln!(out, "{g}")?,
                    }
                    if let Some(pass) = check {
                        writeln!(out, "definition check ({vars} variables): {}", verdict(pass))?;
                    }
                }
                Format::Json => {
                    let u = match &value {
                        UdValue::PowerSum(f) => parse_json(&f.to_json()),
                        UdValue::Fundamental(g) => Value::Object(
                            g.terms()
                                .map(|(s, c)| {
                                    (
                                        s.members().map(|m| m.to_string()).collect::<Vec<_>>().join(","),
                                        Value::String(c.to_string()),
                                    )
                                })
                                .collect(),
                        ),
                    };
                    let mut report = json!({"n": d.n(), "route": route.name(), "u": u});
                    if let Some(pass) = check {
                        report["check"] = json!({"vars": vars, "pass": pass});
                    }
                    writeln!(out, "{report}")?;
                }
            }
            pass_if(check.unwrap_or(true))
        }
        Command::Deformed {
            input,
            tmatrix,
            check,
            vars,
            format,
        } => {
            let text = match (input, tmatrix) {
                (Some(path), _) => read(&path)?,
                (None, Some(inline)) => inline,
                (None, None) => unreachable!("clap requires one input"),
            };
            let t = TMatrix::from_json(&text)?;
            let f = deformed_u_thm(&t, &limits)?;
            let vars = vars.unwrap_or(t.n().max(1));
            let check = if check {
                Some(f.expand(vars)? == deformed_u_definition(&t, vars, &limits)?)
            } else {
                None
            };
            match format {
                Format::Text => {
                    writeln!(out, "{f}")?;
                    if let Some(pass) = check {
                        writeln!(out, "definition check ({vars} variables): {}", verdict(pass))?;
                    }
                }
                Format::Json => {
                    let mut report = json!({"n": t.n(), "u": parse_json(&f.to_json())});
                    if let Some(pass) = check {
                        report["check"] = json!({"vars": vars, "pass": pass});
                    }
                    writeln!(out, "{report}")?;
                }
            }
            pass_if(check.unwrap_or(true))
        }
        Command::Hamps {
            digraph,
            method,
            format,
        } => {
            let d = digraph.load()?;
            let counter = CounterRegistry::default().get(&method)?;
            let hamps = counter.count(&d, &limits)?;
            let berge = verify_berge(&d, &limits)?;
            let tournament = if d.is_tournament() {
                Some((verify_redei(&d, &limits)?, verify_mod4(&d, &limits)?))
            } else {
                None
            };
            let pass = berge.pass && tournament.as_ref().is_none_or(|(r, m)| r.pass && m.pass);
            match format {
                Format::Text => {
                    writeln!(out, "hamps: {} ({})", hamps.value, hamps.method)?;
                    writeln!(out, "complement hamps: {}", berge.hamps_complement)?;
                    writeln!(out, "berge: {}", verdict(berge.pass))?;
                    if let Some((redei, mod4)) = &tournament {
                        writeln!(out, "redei: {}", verdict(redei.pass))?;
                        writeln!(
                            out,
                            "mod4: {} ({} nontrivial odd cycles)",
                            verdict(mod4.pass),
                            mod4.odd_cycles
                        )?;
                    }
                }
                Format::Json => {
                    let mut report = json!({
                        "n": d.n(),
                        "method": hamps.method,
                        "hamps": hamps.value.to_string(),
                        "berge": berge,
                    });
                    if let Some((redei, mod4)) = &tournament {
                        report["redei"] = json!(redei);
                        report["mod4"] = json!(mod4);
                    }
                    writeln!(out, "{report}")?;
                }
            }
            pass_if(pass)
        }
        Command::Verify {
            name,
            exhaustive,
            random,
            max_n,
            seed,
            jobs,
            keep_going,
            format,
        } => {
            let verifier = VerifierRegistry::default().get(&name)?;
            let mode = match (exhaustive, random, max_n) {
                (Some(n), _, _) => SweepMode::Exhaustive { n },
                (None, Some(count), Some(max_n)) => SweepMode::Random { count, max_n, seed },
                _ => unreachable!("clap enforces one sweep mode"),
            };
            let config = SweepConfig {
                mode,
                jobs,
                keep_going,
                limits,
            };
            let report = run_sweep(verifier.as_ref(), &config)?;
            match format {
                Format::Text => {
                    writeln!(out, "{report}")?;
                    for failure in &report.failures {
                        writeln!(out, "FAIL instance {}: {}", failure.index, failure.detail)?;
                        write!(out, "{}", format_digraph(&failure.digraph))?;
                    }
                }
                Format::Json => writeln!(out, "{}", report.to_json())?,
            }
            pass_if(report.pass())
        }
        Command::Tournaments { n, format } => {
            for (i, t) in enumerate_tournaments(n, &limits)?.enumerate() {
                match format {
                    Format::Text => write!(out, "# tournament {i}\n{}", format_digraph(&t))?,
                    Format::Json => {
                        let arcs: Vec<[usize; 2]> = t.arcs().map(|(u, v)| [u, v]).collect();
                        writeln!(out, "{}", json!({"index": i, "n": n, "arcs": arcs}))?;
                    }
                }
            }
            Outcome::Pass
        }
        Command::List => {
            writeln!(out, "routes:")?;
            for r in RouteRegistry::default().iter() {
                writeln!(out, "  {:<12} {}", r.name(), r.summary())?;
            }
            writeln!(out, "hamp counters:")?;
            for c in CounterRegistry::default().iter() {
                writeln!(out, "  {:<12} {}", c.name(), c.summary())?;
            }
            writeln!(out, "verifiers:")?;
            for v in VerifierRegistry::default().iter() {
                writeln!(out, "  {:<12} {}", v.name(), v.summary())?;
            }
            Outcome::Pass
        }
    };
    out.flush()?;
    Ok(outcome)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn pass_if(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}
