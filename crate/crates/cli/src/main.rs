//! `delzant`: validate, inspect, pack, scan, generate, and render Delzant polytopes.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 domain failure, 3 internal
//! invariant breach.

mod render;
mod report;
mod spec;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use delzant_core::exact::{format_rational, parse_rational};
use delzant_core::packing::{build_packing_polytope, disjointness_oracle, maximize, realize};
use delzant_core::perturb::{chamber_radius, safe_radius_estimate, scan_segment};
use delzant_core::{DelzantError, PackingError, PerturbError, RatVector};
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(m) => write!(f, "{m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<DelzantError> for CliError {
    fn from(e: DelzantError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<PackingError> for CliError {
    fn from(e: PackingError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<PerturbError> for CliError {
    fn from(e: PerturbError) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "delzant",
    version,
    about = "Exact maximal toric ball packings of Delzant polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Delzant conditions and report the first violation.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Vertices, edges with rational lengths, frames, corner radii, bounds, fan.
    Info { file: PathBuf },
    /// Maximal density and maximal packings.
    Pack {
        file: PathBuf,
        /// Report every maximizer instead of the first one.
        #[arg(long)]
        all: bool,
        /// Write an SVG of the first maximal packing (planar polytopes only).
        #[arg(long, value_name = "PATH")]
        render: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Exact density and volume along a segment of offset parameters (CSV on stdout).
    Scan {
        #[arg(long)]
        base: PathBuf,
        /// JSON array `s2` (with `s1 = 0`) or object `{"from": s1, "to": s2}`.
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Where to write the JSON summary; stderr when omitted.
        #[arg(long, value_name = "PATH")]
        summary: Option<PathBuf>,
    },
    /// Emit a spec file from a generator: simplex N [SCALE] | cube N [SCALE] |
    /// chopped_simplex E1 E2 [N] | product F1 F2 | scale F LAMBDA, where a
    /// factor F is `kind:n[:scale]`.
    Family {
        generator: String,
        args: Vec<String>,
    },
    /// SVG of a planar polytope with its first maximal packing.
    Render {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
    /// Lower bound on the admissible perturbation radius.
    Radius {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Writes to stdout; a closed pipe (as with `| head`) is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("json values serialize")
    ));
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn validate(file: &Path, as_json: bool) -> Result<(), CliError> {
    let loaded = spec::load(file)?;
    let d = &loaded.polytope;
    if as_json {
        print_json(&json!({
            "name": loaded.name,
            "valid": true,
            "dim": d.dim(),
            "facet_count": d.facet_count(),
            "vertex_count": d.vertex_count(),
            "volume": format_rational(d.volume()),
        }));
    } else {
        emit(&format!(
            "{}: valid Delzant polytope, dim {}, {} facets, {} vertices, volume {}\n",
            loaded.name,
            d.dim(),
            d.facet_count(),
            d.vertex_count(),
            format_rational(d.volume())
        ));
    }
    Ok(())
}

fn render_packing(loaded: &spec::Loaded, path: &Path) -> Result<(), CliError> {
    let d = &loaded.polytope;
    if d.dim() != 2 {
        return Err(CliError::Domain(format!(
            "rendering needs a planar polytope, got dimension {}",
            d.dim()
        )));
    }
    let m = maximize(d)?;
    let simplices = match m.packings.first() {
        Some(p) => realize(d, &p.radii)?,
        None => Vec::new(),
    };
    write_file(path, &render::svg(d, &loaded.name, &simplices))
}

fn pack(file: &Path, all: bool, render_to: Option<&Path>, as_json: bool) -> Result<(), CliError> {
    let loaded = spec::load(file)?;
    let d = &loaded.polytope;
    let m = maximize(d)?;
    let shown = if all {
        m.packings.len()
    } else {
        m.packings.len().min(1)
    };
    for p in &m.packings[..shown] {
        if !disjointness_oracle(d, &p.radii)? {
            return Err(CliError::Internal(format!(
                "maximal packing {} fails the disjointness check",
                p.radii
            )));
        }
    }
    if as_json {
        let pp = build_packing_polytope(d);
        print_json(&report::pack(&loaded.name, &m, &pp, all));
    } else {
        emit(&report::pack_text(&loaded.name, &m, all));
    }
    if let Some(path) = render_to {
        render_packing(&loaded, path)?;
    }
    Ok(())
}

fn parse_vector(v: &Value) -> Result<RatVector, CliError> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::Parse(format!("expected an array, got {v}")))?;
    items
        .iter()
        .map(|x| {
            let s = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(CliError::Parse(format!("not a rational: {x}"))),
            };
            parse_rational(&s).map_err(|_| CliError::Parse(format!("not a rational: {s}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(RatVector)
}

fn scan(base: &Path, dir: &Path, samples: usize, summary: Option<&Path>) -> Result<(), CliError> {
    let loaded = spec::load(base)?;
    let d = &loaded.polytope;
    let dir_json = spec::read_json(dir)?;
    let (s1, s2) = match &dir_json {
        Value::Object(o) => {
            let get = |k: &str| {
                o.get(k)
                    .ok_or_else(|| CliError::Parse(format!("direction object lacks \"{k}\"")))
                    .and_then(parse_vector)
            };
            (get("from")?, get("to")?)
        }
        _ => {
            let s2 = parse_vector(&dir_json)?;
            (RatVector::zeros(s2.dim()), s2)
        }
    };
    let result = scan_segment(d, &s1, &s2, samples)?;
    emit(&report::scan_csv(&result));
    let text = serde_json::to_string_pretty(&report::scan_summary(&result))
        .expect("json values serialize");
    match summary {
        Some(path) => write_file(path, &format!("{text}\n"))?,
        None => {
            let _ = writeln!(std::io::stderr(), "{text}");
        }
    }
    Ok(())
}

fn family(generator: &str, args: &[String]) -> Result<(), CliError> {
    let values: Vec<Value> = args.iter().cloned().map(Value::String).collect();
    let d = spec::generate(generator, &values)?;
    let spec = spec::to_spec(&spec::generator_label(generator, args), &d);
    print_json(&serde_json::to_value(spec).expect("spec serializes"));
    Ok(())
}

fn radius(file: &Path, seed: u64) -> Result<(), CliError> {
    let loaded = spec::load(file)?;
    let d = &loaded.polytope;
    let estimate = safe_radius_estimate(d, seed);
    print_json(&json!({
        "name": loaded.name,
        "seed": seed,
        "estimate": format_rational(&estimate),
        "chamber_radius": chamber_radius(d).map(|r| format_rational(&r)),
    }));
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { file, json } => validate(&file, json),
        Command::Info { file } => {
            let loaded = spec::load(&file)?;
            print_json(&report::info(&loaded.name, &loaded.polytope));
            Ok(())
        }
        Command::Pack {
            file,
            all,
            render,
            json,
        } => pack(&file, all, render.as_deref(), json),
        Command::Scan {
            base,
            dir,
            samples,
            summary,
        } => scan(&base, &dir, samples, summary.as_deref()),
        Command::Family { generator, args } => family(&generator, &args),
        Command::Render { file, out } => render_packing(&spec::load(&file)?, &out),
        Command::Radius { file, seed } => radius(&file, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
