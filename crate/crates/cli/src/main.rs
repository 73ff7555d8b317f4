mod commands;
mod input;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use sha2::{Digest, Sha256};

use commands::{parse_variant, run, Command, Report, Target};
use input::{parse_input, FieldSpec, Session, SessionInput};
use lindefect::{PrimeField, Rationals};

/// Linearity defects of graded modules and their asymptotics along powers of ideals.
#[derive(Parser, Debug)]
#[command(name = "lindefect", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// Session file (`-` reads standard input).
    input: PathBuf,
    /// Override the coefficient field: `QQ`, `p=<prime>` or `<prime>`.
    #[arg(long)]
    field: Option<String>,
    /// Emit one JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Pick {
    #[arg(long, conflicts_with = "module")]
    ideal: Option<String>,
    #[arg(long)]
    module: Option<String>,
}

impl Pick {
    fn target(&self) -> Result<Target> {
        match (&self.ideal, &self.module) {
            (Some(i), None) => Ok(Target::Ideal(i.clone())),
            (None, Some(m)) => Ok(Target::Module(m.clone())),
            _ => bail!("pass exactly one of --ideal or --module"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Linearity defect of an ideal (as a module) or of a module.
    Lind {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
    },
    /// Minimal free resolution.
    Resolve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
        /// Print the Betti table instead of the matrices.
        #[arg(long)]
        betti: bool,
    },
    /// Presentation of the Rees module over R[w].
    Rees {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        module: Option<String>,
        /// Present the associated graded module instead.
        #[arg(long)]
        graded_piece: bool,
    },
    /// Stabilization threshold N(C) with its constants.
    Threshold {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        graded_piece: bool,
        /// Upper bound for glind (defaults to the number of variables).
        #[arg(long)]
        glind_bound: Option<usize>,
        /// Also compute the initial-module certificate for T(i).
        #[arg(long)]
        certify: bool,
    },
    /// lind along n = 1..max-n.
    LindSeq {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        module: Option<String>,
        /// power, graded-piece, quotient or saturation-power.
        #[arg(long, default_value = "power")]
        variant: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Seconds allowed per entry.
        #[arg(long)]
        timeout: Option<u64>,
        /// Compute N(C) and check constancy from N on.
        #[arg(long)]
        certify: bool,
    },
    /// Saturation with respect to the maximal ideal.
    Saturate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        ideal: String,
    },
    /// The map Tor_i(R/m^{q+1}, M) -> Tor_i(R/m^q, M).
    Sega {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pick: Pick,
        #[arg(long = "i")]
        i: usize,
        #[arg(long = "q")]
        q: usize,
    },
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn split(cmd: Cmd) -> Result<(Common, Command)> {
    Ok(match cmd {
        Cmd::Lind { common, pick } => {
            let target = pick.target()?;
            (common, Command::Lind { target })
        }
        Cmd::Resolve { common, pick, betti } => {
            let target = pick.target()?;
            (common, Command::Resolve { target, betti })
        }
        Cmd::Rees { common, ideal, module, graded_piece } => (common, Command::Rees { ideal, module, graded_piece }),
        Cmd::Threshold { common, ideal, module, graded_piece, glind_bound, certify } => {
            (common, Command::Threshold { ideal, module, graded_piece, glind_bound, certify })
        }
        Cmd::LindSeq { common, ideal, module, variant, max_n, timeout, certify } => {
            let variant = parse_variant(&variant)?;
            if max_n == 0 {
                bail!("--max-n must be at least 1");
            }
            (common, Command::LindSeq { ideal, module, variant, max_n, timeout, certify })
        }
        Cmd::Saturate { common, ideal } => (common, Command::Saturate { ideal }),
        Cmd::Sega { common, pick, i, q } => {
            let target = pick.target()?;
            (common, Command::Sega { target, i, q })
        }
    })
}

fn execute(input: SessionInput, command: &Command) -> Result<(Report, String)> {
    match input.field {
        FieldSpec::Prime(p) => {
            let s = Session::new(input, PrimeField::new(p)?)?;
            Ok((run(&s, command)?, s.canonical()?))
        }
        FieldSpec::Rationals => {
            let s = Session::new(input, Rationals)?;
            Ok((run(&s, command)?, s.canonical()?))
        }
    }
}

fn main_inner() -> Result<()> {
    let cli = Cli::parse();
    let (common, command) = split(cli.command)?;
    let text = read_input(&common.input)?;
    let mut input = parse_input(&text).with_context(|| format!("in {}", common.input.display()))?;
    if let Some(f) = &common.field {
        input.field = FieldSpec::parse(f).map_err(anyhow::Error::msg)?;
    }
    let (report, canonical) = execute(input, &command)?;
    if common.json {
        let hash = hex::encode(Sha256::digest(canonical.as_bytes()));
        let doc = json!({ "command": command.name(), "input-hash": hash, "result": report.json });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        print!("{}", report.text);
    }
    Ok(())
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
