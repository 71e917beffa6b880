//! `chernbound`: command-line front end.
//!
//! Exit codes: 0 success, 1 infeasible tuple or failed identity, 2 usage
//! error, 3 domain error.

use std::io::{self, Write};
use std::process::ExitCode;

use chernbound::bounds::{degree_bound, proof_trace, LowerBoundMode};
use chernbound::constraints::{evaluate, CoverFlag, HypothesisConfig};
use chernbound::invariants::{profile, InvariantTuple};
use chernbound::rational::to_text;
use chernbound::ring::{verify_all, verify_identity, IdentityId, Verdict};
use chernbound::scan::{csv_header, csv_row, scan, ScanBox, ScanFormat, ScanOptions};
use chernbound::Error;
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "chernbound",
    version,
    about = "Exact Chern-number bookkeeping for threefolds in P^6"
)]
struct Cli {
    #[command(flatten)]
    format: FormatFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormatFlags {
    /// JSON output (JSON lines for `scan`).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

impl FormatFlags {
    fn format(&self) -> Format {
        match (self.json, self.csv) {
            (true, _) => Format::Json,
            (_, true) => Format::Csv,
            _ => Format::Human,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities of the symbolic registry.
    #[command(group(ArgGroup::new("which").args(["id", "all"])))]
    Verify {
        /// Registry id, e.g. L4.3.5 or S5.QUAD.
        #[arg(long)]
        id: Option<IdentityId>,
        /// Every identity (the default).
        #[arg(long)]
        all: bool,
        /// Print both sides and the difference.
        #[arg(long)]
        show: bool,
    },
    /// Derived numbers of one tuple.
    Profile {
        /// d,delta,chi,u,v
        #[arg(long, allow_hyphen_values = true)]
        tuple: InvariantTuple,
    },
    /// Evaluate the constraint system on one tuple.
    Check {
        /// d,delta,chi,u,v
        #[arg(long, allow_hyphen_values = true)]
        tuple: InvariantTuple,
        #[command(flatten)]
        hyp: Hypotheses,
    },
    /// Degree bound for threefolds not on a fourfold of degree <= s.
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        /// Cap on K_S^2.
        #[arg(long, allow_negative_numbers = true, default_value_t = 9)]
        kappa: i64,
        /// Exact root of the quadratic instead of the linear lower bound.
        #[arg(long)]
        sharp: bool,
    },
    /// Stream every feasible tuple of a box, in lexicographic order.
    Scan {
        /// e.g. d=1..20,delta=-2..40:2,chi=1,u=1..10,v=0..100
        #[arg(long = "box", allow_hyphen_values = true)]
        scan_box: ScanBox,
        #[command(flatten)]
        hyp: Hypotheses,
        /// Append profile columns to CSV rows.
        #[arg(long)]
        profile: bool,
        /// Same as the global --json.
        #[arg(long)]
        jsonl: bool,
        /// Worker threads (defaults to available parallelism).
        #[arg(long, env = "CHERNBOUND_WORKERS")]
        workers: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct Hypotheses {
    /// Cap on K_S^2 = 10chi - u.
    #[arg(long, allow_negative_numbers = true)]
    kappa: Option<i64>,
    /// Drop the geometric constraints (degree, parity, positivity).
    #[arg(long)]
    raw: bool,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    min_degree: i64,
    #[arg(long)]
    covered_by_lines: bool,
    #[arg(long)]
    section_not_general_type: bool,
    #[arg(long)]
    kx_plus_h_empty: bool,
}

impl Hypotheses {
    fn config(&self) -> HypothesisConfig {
        let mut cfg = if self.raw {
            HypothesisConfig::raw()
        } else {
            HypothesisConfig::geometric()
        };
        cfg.min_degree = self.min_degree;
        cfg.ks2_cap = self.kappa;
        for (set, flag) in [
            (self.covered_by_lines, CoverFlag::CoveredByLines),
            (
                self.section_not_general_type,
                CoverFlag::SectionNotGeneralType,
            ),
            (self.kx_plus_h_empty, CoverFlag::KxPlusHEmpty),
        ] {
            if set {
                cfg = cfg.with_cover_flag(flag);
            }
        }
        cfg
    }
}

fn print_notes(cfg: &HypothesisConfig) {
    for flag in &cfg.cover_flags {
        eprintln!("note: {}", flag.note());
    }
}

fn verdict_json(v: &Verdict, show: bool) -> serde_json::Value {
    let mut obj = json!({"id": v.id.as_str(), "passed": v.passed});
    if show {
        obj["computed"] = json!(v.computed.to_string());
        obj["stated"] = json!(v.stated.to_string());
        obj["diff"] = json!(v.diff.to_string());
    }
    obj
}

fn run_verify(
    id: Option<IdentityId>,
    show: bool,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<u8> {
    let verdicts = match id {
        Some(id) => vec![verify_identity(id)],
        None => verify_all(),
    };
    let passed = verdicts.iter().filter(|v| v.passed).count();
    match format {
        Format::Json => {
            let items: Vec<_> = verdicts.iter().map(|v| verdict_json(v, show)).collect();
            writeln!(out, "{}", serde_json::to_string(&items)?)?;
        }
        Format::Csv => {
            writeln!(out, "id,passed")?;
            for v in &verdicts {
                writeln!(out, "{},{}", v.id, v.passed)?;
            }
        }
        Format::Human => {
            for v in &verdicts {
                let tag = if v.passed { "pass" } else { "FAIL" };
                writeln!(out, "{tag}  {:<8} {}", v.id.as_str(), v.id.description())?;
                if show || !v.passed {
                    writeln!(out, "      computed: {}", v.computed)?;
                    writeln!(out, "      stated:   {}", v.stated)?;
                    writeln!(out, "      diff:     {}", v.diff)?;
                }
            }
            writeln!(out, "{passed}/{} identities pass", verdicts.len())?;
        }
    }
    Ok(u8::from(passed != verdicts.len()))
}

fn run_profile(t: &InvariantTuple, format: Format, out: &mut dyn Write) -> io::Result<u8> {
    let p = profile(t);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&p)?)?,
        Format::Csv => {
            writeln!(out, "{}", csv_header(true))?;
            writeln!(out, "{}", csv_row(t, Some(&p)))?;
        }
        Format::Human => {
            // Field names and order follow the JSON form.
            let serde_json::Value::Object(map) = serde_json::to_value(&p)? else {
                unreachable!("profile serializes to an object")
            };
            writeln!(out, "tuple  {t}")?;
            for (name, value) in map {
                writeln!(out, "{name:<6} {}", value.as_str().unwrap_or_default())?;
            }
        }
    }
    Ok(0)
}

fn run_check(
    t: &InvariantTuple,
    cfg: &HypothesisConfig,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<u8> {
    print_notes(cfg);
    let r = evaluate(t, cfg);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
        Format::Csv => {
            writeln!(out, "id,value,ok")?;
            for e in &r.constraints {
                writeln!(out, "{},{},{}", e.id.as_str(), to_text(&e.value), e.ok)?;
            }
        }
        Format::Human => {
            writeln!(out, "tuple {}", r.tuple)?;
            for e in &r.constraints {
                let tag = if e.ok { "ok  " } else { "FAIL" };
                writeln!(
                    out,
                    "{tag} {:<3} {:>12}  {}",
                    e.id.as_str(),
                    to_text(&e.value),
                    e.id.description()
                )?;
            }
            writeln!(
                out,
                "{}",
                if r.feasible { "feasible" } else { "infeasible" }
            )?;
        }
    }
    Ok(u8::from(!r.feasible))
}

fn run_bound(
    s: i64,
    kappa: i64,
    sharp: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8, Error> {
    let mode = if sharp {
        LowerBoundMode::Sharp
    } else {
        LowerBoundMode::Paper
    };
    let r = degree_bound(s, kappa, mode)?;
    let trace = proof_trace(&r);
    match format {
        Format::Json => {
            for line in &trace {
                eprintln!("{line}");
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string(&r).map_err(io::Error::from)?
            )?;
        }
        Format::Csv => {
            writeln!(out, "s,s_effective,kappa,mode,lifting_threshold,s_cubed,first_contradictory_degree,final_bound")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.s,
                r.s_effective,
                r.kappa,
                r.mode,
                to_text(&r.lifting_threshold),
                r.s_cubed,
                r.first_contradictory_degree,
                r.final_bound
            )?;
        }
        Format::Human => {
            for line in &trace {
                writeln!(out, "  {line}")?;
            }
            writeln!(
                out,
                "s                          {} (effective {})",
                r.s, r.s_effective
            )?;
            writeln!(out, "kappa                      {}", r.kappa)?;
            writeln!(out, "mode                       {}", r.mode)?;
            writeln!(
                out,
                "lifting_threshold          {}",
                to_text(&r.lifting_threshold)
            )?;
            writeln!(out, "s_cubed                    {}", r.s_cubed)?;
            writeln!(
                out,
                "first_contradictory_degree {}",
                r.first_contradictory_degree
            )?;
            writeln!(out, "final_bound                {}", r.final_bound)?;
        }
    }
    Ok(0)
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Error> {
    let format = cli.format.format();
    let code = match cli.command {
        Command::Verify { id, all: _, show } => run_verify(id, show, format, out)?,
        Command::Profile { tuple } => run_profile(&tuple, format, out)?,
        Command::Check { tuple, hyp } => run_check(&tuple, &hyp.config(), format, out)?,
        Command::Bound { s, kappa, sharp } => run_bound(s, kappa, sharp, format, out)?,
        Command::Scan {
            scan_box,
            hyp,
            profile,
            jsonl,
            workers,
        } => {
            let cfg = hyp.config();
            print_notes(&cfg);
            let opts = ScanOptions {
                workers: workers.unwrap_or_else(default_workers),
                format: if jsonl || format == Format::Json {
                    ScanFormat::JsonLines
                } else {
                    ScanFormat::Csv
                },
                with_profile: profile,
            };
            let summary = scan(&scan_box, &cfg, &opts, out)?;
            eprintln!(
                "scanned {} points, {} feasible",
                summary.scanned, summary.feasible
            );
            0
        }
    };
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 3 })
        }
    }
}
