use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use indel_bounds::asymptotics::{delta_grid, rate_curve, rate_curve_csv, OptimizerConfig};
use indel_bounds::bounds::{
    best_bound, constant_weight_elias_bound, constant_weight_list_bound, elias_type_bound, johnson_type_list_bound,
    shortened_sphere_packing_bound, BoundValue, CodeParams, CwMode, ListParams,
};
use indel_bounds::constant_weight::{CwAnswer, CwQuery, CwSolver};
use indel_bounds::constructions::{build_tightness_instance, verify_tightness_instance};
use indel_bounds::levenshtein::{fixed_radius_ball_with_limits, lcs, levenshtein_distance, Word};
use indel_bounds::oracle::max_indel_code_exact;
use indel_bounds::selfcheck::{run_suite, Level};
use indel_bounds::{Error, Limits};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "indel-bounds", version, about = "Bounds on insertion/deletion codes")]
struct Cli {
    /// Output format; `asympt` also accepts csv (its default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Cap on exhaustive enumeration (overrides INDEL_BOUNDS_MAX_ENUM).
    #[arg(long, global = true)]
    max_enum: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Upper,
}

impl From<ModeArg> for CwMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => CwMode::Exact,
            ModeArg::Upper => CwMode::Upper,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// LCS length and Levenshtein distance of two words.
    Dist {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        q: u32,
    },
    /// Size of the ball of words within s insertions and t deletions of z.
    Ball {
        #[arg(long)]
        z: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// List the members too.
        #[arg(long)]
        enumerate: bool,
    },
    /// Maximum size of a binary constant-weight code A(n, d, w).
    Cw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        w: usize,
        /// Certified maximum with a witness (default).
        #[arg(long, conflicts_with = "upper")]
        exact: bool,
        /// Best cheap upper bound.
        #[arg(long)]
        upper: bool,
    },
    /// Upper bounds on list sizes and code sizes.
    Bound {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        /// Sweep (s, t) and report the smallest code-size bound.
        #[arg(long)]
        all: bool,
        /// Largest t in the --all sweep (default n).
        #[arg(long)]
        t_max: Option<usize>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
    /// Build and check the code meeting the constant-weight list bound.
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Asymptotic rate bounds over a delta grid.
    Asympt {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        delta_min: f64,
        #[arg(long)]
        delta_max: f64,
        #[arg(long)]
        steps: usize,
        /// Grid points per optimization axis.
        #[arg(long)]
        grid: Option<usize>,
        /// Argument tolerance of the refinement.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Largest code of minimum distance d by exhaustive search.
    Oracle {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Accepted for reproducibility records; the search is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        /// Include wall-clock time (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Run the cross-check suites.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    json: Value,
    text: String,
    csv: Option<String>,
    ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, csv: None, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let mut limits = Limits::from_env();
    if let Some(m) = cli.max_enum {
        limits.max_enum = m;
    }
    match run(cli.command, cli.format, &limits) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command, format: Option<Format>, limits: &Limits) -> Result<String, Failure> {
    let is_asympt = matches!(command, Command::Asympt { .. });
    let format = format.unwrap_or(if is_asympt { Format::Csv } else { Format::Text });
    let out = execute(command, limits)?;
    let rendered = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json values serialize")),
        Format::Text => out.text,
        Format::Csv => out.csv.ok_or_else(|| Failure::Usage("csv output is only available for asympt".into()))?,
    };
    if out.ok {
        Ok(rendered)
    } else {
        Err(Failure::Check(rendered))
    }
}

fn code_params(q: u32, n: usize, d: usize) -> Result<CodeParams, Failure> {
    Ok(CodeParams::new(q, n, d)?)
}

fn bound_json(b: &BoundValue) -> Value {
    serde_json::to_value(b.to_record()).expect("records serialize")
}

fn bound_text(b: &BoundValue) -> String {
    match b.list {
        Some(l) => format!("{b} [s={} t={}]", l.s, l.t),
        None => b.to_string(),
    }
}

fn cw_json(a: &CwAnswer) -> Value {
    json!({
        "n": a.query.n,
        "d": a.query.d,
        "w": a.query.w,
        "value": a.value.to_string(),
        "exactness": a.exactness,
        "method": a.method,
        "witness": a.witness.as_ref().map(|f| f.to_text()),
    })
}

fn execute(command: Command, limits: &Limits) -> Result<Output, Failure> {
    match command {
        Command::Dist { x, y, q } => {
            let x = Word::parse_flexible(&x, q)?;
            let y = Word::parse_flexible(&y, q)?;
            let l = lcs(&x, &y)?;
            let dist = levenshtein_distance(&x, &y)?;
            Ok(Output::new(
                json!({"x": x.symbols(), "y": y.symbols(), "q": q, "lcs": l, "distance": dist}),
                format!("lcs {l}\ndistance {dist}\n"),
            ))
        }
        Command::Ball { z, q, s, t, enumerate } => {
            let z = Word::parse_flexible(&z, q)?;
            let ball = fixed_radius_ball_with_limits(&z, s, t, limits)?;
            let mut text = format!("size {}\n", ball.len());
            let mut json = json!({"z": z.symbols(), "q": q, "s": s, "t": t, "size": ball.len()});
            if enumerate {
                for w in &ball {
                    let _ = writeln!(text, "{}", w.to_compact());
                }
                json["members"] = ball.iter().map(|w| json!(w.symbols())).collect();
            }
            Ok(Output::new(json, text))
        }
        Command::Cw { n, d, w, exact: _, upper } => {
            let query = CwQuery::new(n, d, w)?;
            let mut solver = CwSolver::new(*limits);
            let answer = if upper { solver.upper(query) } else { solver.exact(query)? };
            let mut text = format!(
                "A(n={}, d={}, w={}) = {} ({}, {})\n",
                answer.query.n, answer.query.d, answer.query.w, answer.value, answer.exactness, answer.method
            );
            if let Some(f) = &answer.witness {
                text.push_str(&f.to_text());
            }
            Ok(Output::new(cw_json(&answer), text))
        }
        Command::Bound { q, n, d, s, t, all, t_max, mode } => {
            let p = code_params(q, n, d)?;
            let mode = CwMode::from(mode);
            let mut solver = CwSolver::new(*limits);
            if all {
                let best = best_bound(p, p.max_insertions(), t_max.unwrap_or(n), mode, &mut solver);
                let mut text = format!("best {}\n", bound_text(&best.bound));
                if best.trivial {
                    text.push_str("no applicable bound; trivial q^n\n");
                }
                for c in &best.candidates {
                    let _ = writeln!(text, "  {}", bound_text(c));
                }
                let json = json!({
                    "best": bound_json(&best.bound),
                    "trivial": best.trivial,
                    "candidates": best.candidates.iter().map(bound_json).collect::<Vec<_>>(),
                });
                return Ok(Output::new(json, text));
            }
            let lp = ListParams::new(s, t);
            let mut bounds = vec![johnson_type_list_bound(p, lp)?];
            if s <= p.max_insertions() {
                let cw = constant_weight_list_bound(p, lp, mode, &mut solver)
                    .or_else(|_| constant_weight_list_bound(p, lp, CwMode::Upper, &mut solver))?;
                bounds.push(cw);
                let cw = constant_weight_elias_bound(p, lp, mode, &mut solver)
                    .or_else(|_| constant_weight_elias_bound(p, lp, CwMode::Upper, &mut solver))?;
                bounds.push(cw);
            }
            if s == 0 {
                bounds.push(elias_type_bound(p, t));
            }
            bounds.push(shortened_sphere_packing_bound(p, lp));
            let text: String = bounds.iter().map(|b| bound_text(b) + "\n").collect();
            Ok(Output::new(json!({"bounds": bounds.iter().map(bound_json).collect::<Vec<_>>()}), text))
        }
        Command::Construct { q, n, d, s, t } => {
            let p = code_params(q, n, d)?;
            let mut solver = CwSolver::new(*limits);
            let inst = build_tightness_instance(p, ListParams::new(s, t), &mut solver)?;
            let report = verify_tightness_instance(&inst, &mut solver);
            let mut text = format!("center {}\n{}", inst.center.to_compact(), inst.code.to_text());
            for c in &report.checks {
                let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let json = json!({
                "params": {"q": q, "n": n, "d": d, "s": s, "t": t},
                "center": inst.center.symbols(),
                "code": inst.code.to_text(),
                "witness_family": inst.witness_family.to_text(),
                "markers": inst.marker_symbols.iter().map(|(sup, b)| json!({"support": sup, "symbol": b})).collect::<Vec<_>>(),
                "report": report,
            });
            Ok(Output { ok: report.passed(), ..Output::new(json, text) })
        }
        Command::Asympt { q, delta_min, delta_max, steps, grid, tol } => {
            if !(0.0 < delta_min && delta_min <= delta_max && delta_max < 1.0) {
                return Err(Failure::Usage("need 0 < delta-min <= delta-max < 1".into()));
            }
            let mut cfg = OptimizerConfig::default();
            if let Some(g) = grid {
                cfg.grid = g;
            }
            if let Some(t) = tol {
                cfg.arg_tol = t;
            }
            let rows = rate_curve(q, &delta_grid(delta_min, delta_max, steps), &cfg)?;
            let csv = rate_curve_csv(&rows);
            let text = csv.clone();
            let json = json!({"q": q, "rows": rows});
            Ok(Output { csv: Some(csv), ..Output::new(json, text) })
        }
        Command::Oracle { q, n, d, seed, timing } => {
            let p = code_params(q, n, d)?;
            let r = max_indel_code_exact(p, limits)?;
            let record = r.to_record();
            let mut json = serde_json::to_value(&record).expect("records serialize");
            if !timing {
                json.as_object_mut().expect("record is an object").remove("elapsed_ms");
            }
            if let Some(seed) = seed {
                json["seed"] = json!(seed);
            }
            let mut text = format!(
                "A(q={q}, n={n}, d={d}) {} {} (searched {} words)\n",
                if r.exact { "=" } else { ">=" },
                r.value,
                r.search_space_size
            );
            if timing {
                let _ = writeln!(text, "elapsed {:.3} ms", record.elapsed_ms);
            }
            text.push_str(&record.witness);
            Ok(Output::new(json, text))
        }
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let report = run_suite(level, limits);
            let mut text = String::new();
            for c in &report.checks {
                let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let ok = report.passed();
            Ok(Output { ok, ..Output::new(serde_json::to_value(&report).expect("report serializes"), text) })
        }
    }
}
