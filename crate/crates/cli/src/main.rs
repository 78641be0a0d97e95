//! `flowloop`: flow-loop counts and `Ẑ` series of homogeneous braid closures.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flowloop::braid::{alexander_classical, BraidWord};
use flowloop::lawrence::{graded_trace, rep_matrix, Convention};
use flowloop::template::{build_template, enumerate_orbits, zeta_classical, Template};
use flowloop::verify::{self, Suite};
use flowloop::zhat::{self, series_to_json, PhiOptions, ZhatOptions};
use flowloop::Error;

#[derive(Parser, Debug)]
#[command(name = "flowloop", version, about = "Flow-loop counts and Zhat series of homogeneous braid closures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Conv {
    Half,
    Under,
}

impl From<Conv> for Convention {
    fn from(c: Conv) -> Self {
        match c {
            Conv::Half => Convention::Half,
            Conv::Under => Convention::Under,
        }
    }
}

#[derive(clap::Args, Debug)]
struct SeriesArgs {
    /// Braid word, e.g. "1 -2 1 -2" or "n=4; 1 2 3".
    #[arg(long)]
    braid: String,
    /// Highest power of x to keep.
    #[arg(long, default_value_t = 8)]
    order: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Crossing weights used for positive braids.
    #[arg(long, value_enum, default_value_t = Conv::Half)]
    convention: Conv,
    /// Largest initial label per column in the state sum (default: order).
    #[arg(long)]
    cap: Option<u32>,
    /// Use the mirrored negative-crossing orientation (diagnostics only).
    #[arg(long)]
    debug_mirror: bool,
}

impl SeriesArgs {
    fn options(&self) -> ZhatOptions {
        ZhatOptions {
            convention: self.convention.into(),
            phi: PhiOptions { cap: self.cap, debug_mirror: self.debug_mirror, skip_stability: self.debug_mirror },
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Prints Φ, the prefactor and Ẑ.
    Zhat(SeriesArgs),
    /// Prints Φ only.
    Phi(SeriesArgs),
    /// Prints graded traces of the braid representation.
    Trace {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 3)]
        mmax: u32,
        #[arg(long, value_enum, default_value_t = Conv::Half)]
        convention: Conv,
        /// Also print every nonzero matrix entry.
        #[arg(long)]
        dump: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Prints the Alexander polynomial and (1-x)/Δ.
    Alexander {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 8)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Prints primitive orbits of the knot holder and its zeta function.
    Orbits {
        /// Braid word to build the knot holder from.
        #[arg(long, required_unless_present = "template_file", conflicts_with = "template_file")]
        braid: Option<String>,
        /// Read a template dump instead of building one from a braid.
        #[arg(long)]
        template_file: Option<std::path::PathBuf>,
        /// Largest orbit degree (winding around the axis) to enumerate.
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Also print the template dump.
        #[arg(long)]
        dump_template: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs invariant suites and reports pass/fail per property.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Exit status and rendered output of a command.
enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

fn parse_braid(s: &str) -> Result<BraidWord, Error> {
    BraidWord::parse(s).map_err(Error::from)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn run(cmd: Cmd) -> Result<Outcome, Error> {
    let text = match cmd {
        Cmd::Zhat(args) => {
            let word = parse_braid(&args.braid)?;
            let r = zhat::zhat(&word, args.order, args.options())?;
            match args.format {
                Format::Text => r.render(),
                Format::Json => serde_json::to_string_pretty(&r.to_json()).expect("json") + "\n",
            }
        }
        Cmd::Phi(args) => {
            let word = parse_braid(&args.braid)?;
            let phi = zhat::phi(&word, args.order, args.options())?;
            match args.format {
                Format::Text => format!("phi: {phi}\n"),
                Format::Json => pretty(&json!({ "braid": word.to_string(), "phi": series_to_json(&phi) })),
            }
        }
        Cmd::Trace { braid, mmax, convention, dump, format } => {
            let word = parse_braid(&braid)?;
            let traces = graded_trace(&word, mmax, convention.into());
            match format {
                Format::Text => {
                    let mut out = String::new();
                    for (m, t) in traces.iter().enumerate() {
                        writeln!(out, "m={m}: {t}").unwrap();
                        if dump {
                            out.push_str(&rep_matrix(&word, m as u32, convention.into()).dump());
                        }
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<Value> = traces
                        .iter()
                        .enumerate()
                        .map(|(m, t)| json!({ "m": m, "trace": series_to_json(t) }))
                        .collect();
                    pretty(&json!({ "braid": word.to_string(), "traces": rows }))
                }
            }
        }
        Cmd::Alexander { braid, order, format } => {
            let word = parse_braid(&braid)?;
            let a = alexander_classical(&word, 2 * order as i64)?;
            match format {
                Format::Text => format!("Delta: {}\ninv_delta: {}\n", a.delta, a.inv_delta),
                Format::Json => pretty(&json!({
                    "braid": word.to_string(),
                    "delta": series_to_json(&a.delta),
                    "inv_delta": series_to_json(&a.inv_delta),
                })),
            }
        }
        Cmd::Orbits { braid, template_file, max_degree, dump_template, format } => {
            let t = match (braid, template_file) {
                (Some(b), _) => build_template(&parse_braid(&b)?)?,
                (None, Some(path)) => {
                    let src = std::fs::read_to_string(&path)
                        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
                    Template::parse_dump(&src)?
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let orbits = enumerate_orbits(&t, max_degree)?;
            let zeta = zeta_classical(&t, max_degree)?;
            match format {
                Format::Text => {
                    let mut out = String::new();
                    if dump_template {
                        out.push_str(&t.dump());
                    }
                    out.push_str("# degree sign cycle\n");
                    for o in &orbits {
                        writeln!(out, "{}", o.render()).unwrap();
                    }
                    writeln!(out, "zeta: {zeta}").unwrap();
                    out
                }
                Format::Json => {
                    let rows: Vec<Value> = orbits
                        .iter()
                        .map(|o| json!({ "degree": o.degree, "sign": o.hyperbolic_sign, "cycle": o.cycle }))
                        .collect();
                    pretty(&json!({ "orbits": rows, "zeta": series_to_json(&zeta) }))
                }
            }
        }
        Cmd::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(Error::InvalidArgument)?;
            let checks = verify::run(suite);
            let mut out = String::new();
            for c in &checks {
                writeln!(out, "{c}").unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} passed, {failed} failed", checks.len() - failed).unwrap();
            if failed > 0 {
                return Ok(Outcome::VerifyFailed(out));
            }
            out
        }
    };
    Ok(Outcome::Ok(text))
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("FLOWLOOP_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("FLOWLOOP_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    match run(cli.cmd) {
        Ok(Outcome::Ok(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerifyFailed(s)) => {
            print!("{s}");
            ExitCode::from(2)
        }
        Err(Error::Internal(msg)) => {
            eprintln!("error: internal check failed: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
