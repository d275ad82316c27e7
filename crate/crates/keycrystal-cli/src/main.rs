use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use keycrystal::comb::{Composition, Partition};
use keycrystal::expansion::{
    demazure_expansion, format_schur, kostka_foulkes_charge, kostka_foulkes_maj, schur_expansion_of_full_crystal,
};
use keycrystal::tabloid::enumerate_sskd;
use keycrystal::tabloid_crystal::build_tabloid_crystal;
use keycrystal::verify::{self, Bounds, Suite};
use keycrystal::Error;

#[derive(Parser)]
#[command(name = "keycrystal", version, about = "Crystals on key tabloids and the q=0 Macdonald expansion")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or list the semistandard key tabloids of a shape.
    Sskd {
        shape: Composition,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Demazure expansion of E_b(X;q,0).
    Expand {
        shape: Composition,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Schur form, for weakly increasing shapes.
        #[arg(long)]
        schur: bool,
    },
    /// The crystal graph on the tabloids of a shape.
    Crystal {
        shape: Composition,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Kostka–Foulkes polynomial K_{λ,μ}(t).
    Kostka {
        lambda: Partition,
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Charge)]
        method: Method,
        /// Leading zeros for the tabloid route; defaults to |μ| − μ_1.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run a property suite and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    #[arg(long, default_value_t = 5)]
    max_len: usize,
    /// n for the B_w(λ) sweep, w ∈ S_n.
    #[arg(long, default_value_t = 4)]
    rank: usize,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Charge,
    Maj,
    Both,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Output text and whether every check passed.
fn execute(cmd: Command) -> Result<(String, bool), Failure> {
    let out = match cmd {
        Command::Sskd { shape, count, list, format } => {
            let all = enumerate_sskd(&shape);
            match (format, list && !count) {
                (Format::Plain, false) => format!("{}\n", all.len()),
                (Format::Plain, true) => all.iter().map(|t| format!("{t}\n")).collect(),
                (Format::Json, false) => pretty(&json!({ "shape": shape, "count": all.len() })),
                (Format::Json, true) => {
                    let v: Vec<String> = all.iter().map(|t| t.to_string()).collect();
                    pretty(&json!({ "shape": shape, "count": all.len(), "tabloids": v }))
                }
            }
        }
        Command::Expand { shape, format, schur } => {
            if schur {
                let s = schur_expansion_of_full_crystal(&shape)?;
                match format {
                    Format::Plain => format!("{}\n", format_schur(&s, "q")),
                    Format::Json => {
                        let m: serde_json::Map<String, serde_json::Value> =
                            s.iter().map(|(l, c)| (l.to_string(), json!(c.coeffs()))).collect();
                        pretty(&json!({ "shape": shape, "schur": m }))
                    }
                }
            } else {
                let e = demazure_expansion(&shape)?;
                match format {
                    Format::Plain => format!("{}\n", e.to_plain()),
                    Format::Json => pretty(&e.to_json()),
                }
            }
        }
        Command::Crystal { shape, dot: _, json } => {
            let tc = build_tabloid_crystal(&shape)?;
            if json {
                let comps: Vec<_> = tc
                    .comp_highest
                    .iter()
                    .zip(&tc.comp_maj)
                    .map(|(&h, &m)| json!({ "highest": h, "maj": m }))
                    .collect();
                pretty(&json!({
                    "shape": shape,
                    "graph": tc.graph.to_json(|t| t.to_string()),
                    "components": comps,
                }))
            } else {
                tc.to_dot()
            }
        }
        Command::Kostka { lambda, mu, method, m } => {
            let m = m.unwrap_or(mu.size() - mu.parts().first().copied().unwrap_or(0));
            let k = match method {
                Method::Charge => kostka_foulkes_charge(&lambda, &mu)?,
                Method::Maj => kostka_foulkes_maj(&lambda, &mu, m)?,
                Method::Both => {
                    let c = kostka_foulkes_charge(&lambda, &mu)?;
                    let q = kostka_foulkes_maj(&lambda, &mu, m)?;
                    if c != q {
                        return Err(Failure::Check(format!(
                            "charge gives {} but maj gives {}",
                            c.display_with("t"),
                            q.display_with("t")
                        )));
                    }
                    c
                }
            };
            format!("{}\n", k.display_with("t"))
        }
        Command::Verify(a) => {
            let bounds = Bounds { max_size: a.max_size, max_len: a.max_len, rank: a.rank };
            let r = verify::run(a.suite, bounds);
            return Ok((pretty(&json!({ "ok": r.ok(), "report": r })), r.ok()));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            let rendered = e.render().to_string();
            if !rendered.contains("Usage:") {
                let mut cmd = Cli::command();
                cmd.build();
                let sub = std::env::args().nth(1).unwrap_or_default();
                let usage = match cmd.find_subcommand_mut(&sub) {
                    Some(c) => c.render_usage(),
                    None => cmd.render_usage(),
                };
                eprintln!("\n{usage}");
            }
            return ExitCode::from(2);
        }
    };
    let (text, ok) = match execute(cli.command) {
        Ok(x) => x,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match cli.output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
