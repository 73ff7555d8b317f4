//! Command implementations, generic over the coefficient field.

use std::fmt::Write as _;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use lindefect::asymptotics::{
    lind_sequence, rees_presentation, stability_threshold, Entry, SequenceOptions, Variant,
};
use lindefect::field::Field;
use lindefect::linearity::{is_componentwise_linear, linearity_defect};
use lindefect::resolution::Resolution;
use lindefect::tor::sega_map;
use lindefect::{FreeModule, Module};

use crate::input::Session;

/// What to compute, with the names of the objects it refers to.
#[derive(Clone, Debug)]
pub enum Command {
    Lind { target: Target },
    Resolve { target: Target, betti: bool },
    Rees { ideal: String, module: Option<String>, graded_piece: bool },
    Threshold { ideal: String, module: Option<String>, graded_piece: bool, glind_bound: Option<usize>, certify: bool },
    LindSeq { ideal: String, module: Option<String>, variant: Variant, max_n: usize, timeout: Option<u64>, certify: bool },
    Saturate { ideal: String },
    Sega { target: Target, i: usize, q: usize },
}

/// An ideal or a module named in the session.
#[derive(Clone, Debug)]
pub enum Target {
    Ideal(String),
    Module(String),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Lind { .. } => "lind",
            Command::Resolve { .. } => "resolve",
            Command::Rees { .. } => "rees",
            Command::Threshold { .. } => "threshold",
            Command::LindSeq { .. } => "lind-seq",
            Command::Saturate { .. } => "saturate",
            Command::Sega { .. } => "sega",
        }
    }
}

/// A command's outcome: a text rendering and a JSON value.
pub struct Report {
    pub text: String,
    pub json: Value,
}

fn target_module<F: Field>(session: &Session<F>, target: &Target) -> Result<Module<F>> {
    Ok(match target {
        Target::Ideal(n) => Module::from_submodule(&session.ideal(n)?)?,
        Target::Module(n) => session.module(n)?,
    })
}

fn base_module<F: Field>(session: &Session<F>, module: &Option<String>) -> Result<Module<F>> {
    match module {
        Some(n) => Ok(session.module(n)?),
        None => Ok(Module::free(session.ring.clone(), FreeModule::free(1))),
    }
}

fn fmt_ext(v: Option<i64>) -> String {
    v.map(|n| n.to_string()).unwrap_or_else(|| "-inf".into())
}

pub fn run<F: Field>(session: &Session<F>, command: &Command) -> Result<Report> {
    run_inner(session, command).with_context(|| format!("{} failed", command.name()))
}

fn run_inner<F: Field>(session: &Session<F>, command: &Command) -> Result<Report> {
    let ring = session.ring.clone();
    match command {
        Command::Lind { target } => {
            let m = target_module(session, target)?;
            let lind = linearity_defect(&m)?;
            Ok(Report { text: format!("lind = {lind}\n"), json: json!({ "lind": lind }) })
        }
        Command::Resolve { target, betti } => {
            let m = target_module(session, target)?;
            let res = Resolution::of_module(&m, true, None)?;
            let table = res.betti_table()?;
            let mut text = String::new();
            if *betti {
                text.push_str(&table.to_text());
            } else {
                for (i, d) in res.maps().iter().enumerate() {
                    let _ = writeln!(text, "d{}: F{} <- F{}", i + 1, i, i + 1);
                    for (c, col) in d.columns.iter().enumerate() {
                        let _ = writeln!(text, "  col {c}: {}", ring.format_element(col));
                    }
                }
                let _ = writeln!(text, "ranks: {:?}", res.ranks());
            }
            let _ = writeln!(text, "pd = {}", table.projective_dimension());
            Ok(Report { text, json: table.to_json() })
        }
        Command::Rees { ideal, module, graded_piece } => {
            let i = session.ideal(ideal)?;
            let m = base_module(session, module)?;
            let p = rees_presentation(&i, &m, *graded_piece)?;
            let s = &p.ring;
            let vars: Vec<Value> = s
                .vars()
                .vars()
                .iter()
                .map(|v| json!({ "name": v.name, "degree": [v.internal, v.rees] }))
                .collect();
            let kernel: Vec<String> = p.kernel.gen_polys().iter().map(|g| s.format(g)).collect();
            let rels: Vec<String> = p.module.relations().gens().iter().map(|g| s.format_element(g)).collect();
            let mut text = String::new();
            let names: Vec<&str> = s.vars().names().collect();
            let _ = writeln!(text, "S = k[{}]", names.join(", "));
            let _ = writeln!(text, "kernel: {}", if kernel.is_empty() { "0".into() } else { kernel.join(", ") });
            let _ = writeln!(text, "relations: {}", if rels.is_empty() { "0".into() } else { rels.join(", ") });
            Ok(Report { text, json: json!({ "ring": vars, "kernel": kernel, "relations": rels }) })
        }
        Command::Threshold { ideal, module, graded_piece, glind_bound, certify } => {
            let i = session.ideal(ideal)?;
            let m = base_module(session, module)?;
            let p = rees_presentation(&i, &m, *graded_piece)?;
            let bound = glind_bound.unwrap_or(ring.base_indices().len());
            let cert = stability_threshold(&p.module, bound, *certify)?;
            let mut text = String::new();
            let _ = writeln!(text, "pd = {}, glind bound = {}", cert.pd, cert.glind_bound);
            let _ = writeln!(text, "n(0) = pdeg = {}", fmt_ext(cert.n0));
            for l in &cert.per_level {
                let cs: Vec<String> = l.c.iter().map(|c| fmt_ext(*c)).collect();
                let _ = writeln!(text, "i = {}: T = {}, c = [{}], n = {}", l.i, l.t, cs.join(", "), fmt_ext(l.n));
                if let Some(k) = &l.k_certificate {
                    let rees = k.rees.map(|r| r.to_string()).unwrap_or_else(|| "inf".into());
                    let _ = writeln!(
                        text,
                        "  K: filtration reading {} ({}), Rees reading {} ({})",
                        k.filtration,
                        if k.agrees_with_t { "agrees" } else { "DISAGREES" },
                        rees,
                        if k.rees_agrees_with_t { "agrees" } else { "disagrees" },
                    );
                }
            }
            let _ = writeln!(text, "N = {}", fmt_ext(cert.n));
            Ok(Report { text, json: cert.to_json() })
        }
        Command::LindSeq { ideal, module, variant, max_n, timeout, certify } => {
            let i = session.ideal(ideal)?;
            let m = base_module(session, module)?;
            let options = SequenceOptions {
                max_n: *max_n,
                timeout: timeout.map(Duration::from_secs),
                certify: *certify,
                glind_bound: None,
            };
            let report = lind_sequence(&i, &m, *variant, &options)?;
            let mut text = String::new();
            let _ = writeln!(text, "{:>4} {:>5} {:>10} {:>6}", "n", "lind", "min-degree", "gens");
            for (n, e) in &report.values {
                match e {
                    Entry::Value { lind, min_degree, generators, .. } => {
                        let _ = writeln!(text, "{n:>4} {lind:>5} {:>10} {generators:>6}", fmt_ext(*min_degree));
                    }
                    Entry::Timeout => {
                        let _ = writeln!(text, "{n:>4} {:>5}", "timeout");
                    }
                }
            }
            match (report.stable_value, report.quasiperiod) {
                (Some(v), _) => {
                    let _ = writeln!(text, "stable value {v} from n = {}", report.stabilization_index.unwrap_or(1));
                }
                (None, Some((s, p))) => {
                    let _ = writeln!(text, "no stable value; repeats with period {p} from n = {s}");
                }
                (None, None) => {
                    let _ = writeln!(text, "no stable value on the computed window");
                }
            }
            if *certify && report.certificate.is_none() {
                let _ = writeln!(text, "no certificate for the {} variant", variant.name());
            }
            if let Some(c) = &report.certificate {
                let _ = writeln!(
                    text,
                    "certified threshold N = {}; constant from N on: {}",
                    fmt_ext(c.n),
                    report.certified_constant.unwrap_or(false)
                );
            }
            Ok(Report { text, json: report.to_json() })
        }
        Command::Saturate { ideal } => {
            let i = session.ideal(ideal)?;
            let (sat, steps) = i.saturate_base()?;
            let sat = sat.trim()?;
            let gens: Vec<String> = sat.gen_polys().iter().map(|g| ring.format(g)).collect();
            let degrees: Vec<i64> = sat.generator_degrees()?.iter().map(|d| d.internal).collect();
            let cwl = is_componentwise_linear(&sat)?;
            let mut text = String::new();
            for g in &gens {
                let _ = writeln!(text, "{g}");
            }
            let _ = writeln!(text, "{} generators in degrees {:?}; {} quotient steps", gens.len(), degrees, steps);
            Ok(Report {
                text,
                json: json!({ "generators": gens, "degrees": degrees, "steps": steps, "componentwiseLinear": cwl }),
            })
        }
        Command::Sega { target, i, q } => {
            if *i == 0 {
                bail!("--i must be at least 1");
            }
            let m = target_module(session, target)?;
            let res = Resolution::of_module(&m, true, None)?;
            let map = sega_map(&res, *i, *q, 0);
            let text = format!(
                "Tor_{i}(R/m^{}, M) -> Tor_{i}(R/m^{q}, M): dims {} -> {}, rank {} ({})\n",
                q + 1,
                map.source_dim,
                map.target_dim,
                map.rank,
                if map.is_zero() { "zero" } else { "nonzero" }
            );
            let by_degree: serde_json::Map<String, Value> = map
                .by_degree
                .iter()
                .map(|(d, (s, t, r))| (d.to_string(), json!({ "source": s, "target": t, "rank": r })))
                .collect();
            Ok(Report {
                text,
                json: json!({
                    "i": i,
                    "q": q,
                    "sourceDim": map.source_dim,
                    "targetDim": map.target_dim,
                    "rank": map.rank,
                    "zero": map.is_zero(),
                    "byDegree": by_degree,
                }),
            })
        }
    }
}

pub fn parse_variant(s: &str) -> Result<Variant> {
    Variant::parse(s).ok_or_else(|| anyhow!("unknown variant `{s}` (power, graded-piece, quotient, saturation-power)"))
}
