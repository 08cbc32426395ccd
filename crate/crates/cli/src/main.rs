mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use config::FileConfig;
use picount_core::assemble::{make_plan_with, pi, Mode, Plan, PlanRequest, PiResult, Rigor, DEFAULT_BUDGET};
use picount_core::oracle::{oracle_pi, ORACLE_PI_CAP};
use picount_core::zeros::{compute_zeros, load_zeros, save_binary, save_text, ZeroList};
use picount_core::Error;

/// Zero height computed when no table is named and rigor is heuristic.
const DEFAULT_COMPUTE_HEIGHT: f64 = 2e4;
const DEFAULT_ZERO_ACCURACY: f64 = 1e-10;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_HEURISTIC: u8 = 2;
const EXIT_CERT_FAIL: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "picount", version, about = "Analytic prime counting via zeta zeros")]
struct Cli {
    /// Read defaults from a `key = value` file; flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute π(x).
    Pi(RunArgs),
    /// Show the chosen parameters and predicted workload without computing.
    Plan(RunArgs),
    /// Compute, check or convert zero tables.
    #[command(subcommand)]
    Zeros(ZerosCmd),
    /// Compute π(x) and compare against a sieve.
    Verify(RunArgs),
}

#[derive(Args, Debug, Default)]
struct RunArgs {
    #[arg(long)]
    x: Option<u64>,
    /// rh | partial-rh | unconditional
    #[arg(long)]
    mode: Option<Mode>,
    /// certified | heuristic
    #[arg(long)]
    rigor: Option<Rigor>,
    /// Zero table (text or binary).
    #[arg(long, value_name = "FILE", conflicts_with = "zeros_compute")]
    zeros: Option<PathBuf>,
    /// Compute zeros up to this height instead of reading a table.
    #[arg(long, value_name = "T")]
    zeros_compute: Option<f64>,
    /// Ordinate accuracy for text tables that do not declare one.
    #[arg(long)]
    zeros_accuracy: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Sum zeros only up to a·c/ε (needs rh or partial-rh).
    #[arg(long)]
    a: Option<f64>,
    /// Shrink the prime window to [e^(-αε)x, e^(αε)x].
    #[arg(long)]
    alpha: Option<f64>,
    /// Total error budget target, below 0.5.
    #[arg(long)]
    budget: Option<f64>,
    /// Add this to the computed count before comparing (testing aid).
    #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
    inject_fault: i64,
}

#[derive(Subcommand, Debug)]
enum ZerosCmd {
    /// Locate zeros up to a height and write them out (`.bin` selects the binary format).
    Compute {
        #[arg(long, value_name = "T")]
        t_max: f64,
        #[arg(long, default_value_t = DEFAULT_ZERO_ACCURACY)]
        accuracy: f64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a table for completeness at its declared height.
    Verify {
        file: PathBuf,
        #[arg(long)]
        accuracy: Option<f64>,
    },
    /// Convert between text and binary (`.bin` output selects binary).
    Convert {
        input: PathBuf,
        output: PathBuf,
        #[arg(long)]
        accuracy: Option<f64>,
    },
}

/// A failure with the exit code it maps to.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Domain(_) | Error::Parse { .. } | Error::Io(_) => EXIT_USAGE,
            Error::Infeasible { .. } | Error::ZeroTable(_) | Error::ZeroSearch(_) | Error::Quadrature(_) => {
                EXIT_CERT_FAIL
            }
        };
        let mut msg = e.to_string();
        if let Error::Infeasible {
            zeros_needed_to: Some(t),
            ..
        } = e
        {
            msg.push_str(&format!("\nhint: supply zeros up to height {t:.0} (--zeros FILE or --zeros-compute {t:.0})"));
        }
        Fail(code, msg)
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

struct Resolved {
    request: PlanRequest,
    zeros: Option<PathBuf>,
    zeros_compute: Option<f64>,
    zeros_accuracy: Option<f64>,
    json: bool,
    inject_fault: i64,
}

fn resolve(args: RunArgs, file: &FileConfig, json_flag: bool) -> Result<Resolved, Fail> {
    let x = file.pick(args.x, "x").map_err(usage)?.ok_or_else(|| usage("--x is required"))?;
    let mode = file.pick(args.mode, "mode").map_err(usage)?.unwrap_or(Mode::PartialRh);
    let rigor = file.pick(args.rigor, "rigor").map_err(usage)?.unwrap_or(Rigor::Heuristic);
    let mut request = PlanRequest::new(x as u128, mode, rigor);
    request.budget_target = file.pick(args.budget, "budget").map_err(usage)?.unwrap_or(DEFAULT_BUDGET);
    request.c = file.pick(args.c, "c").map_err(usage)?;
    request.epsilon = file.pick(args.epsilon, "epsilon").map_err(usage)?;
    request.a = file.pick(args.a, "a").map_err(usage)?;
    request.alpha = file.pick(args.alpha, "alpha").map_err(usage)?;
    if request.a.is_some() && mode == Mode::Unconditional {
        return Err(usage("--a needs zeros verified on the critical line: pass --mode rh or --mode partial-rh"));
    }
    let zeros = file.pick(args.zeros, "zeros").map_err(usage)?;
    let zeros_compute = file.pick(args.zeros_compute, "zeros-compute").map_err(usage)?;
    if zeros.is_some() && zeros_compute.is_some() {
        return Err(usage("give either a zero table or a height to compute, not both"));
    }
    Ok(Resolved {
        request,
        zeros,
        zeros_compute,
        zeros_accuracy: file.pick(args.zeros_accuracy, "zeros-accuracy").map_err(usage)?,
        json: file.flag(json_flag, "json").map_err(usage)?,
        inject_fault: args.inject_fault,
    })
}

/// Height of the zero source, without loading it.
fn source_height(r: &Resolved) -> Result<Option<f64>, Fail> {
    if let Some(t) = r.zeros_compute {
        return Ok(Some(t));
    }
    if r.zeros.is_some() {
        return Ok(None);
    }
    match r.request.rigor {
        Rigor::Heuristic => Ok(Some(DEFAULT_COMPUTE_HEIGHT)),
        Rigor::Certified => Err(usage(
            "certified rigor needs an explicit zero source: --zeros FILE or --zeros-compute T",
        )),
    }
}

fn load_source(r: &Resolved) -> Result<ZeroList, Fail> {
    if let Some(path) = &r.zeros {
        let zl = load_zeros(path, r.zeros_accuracy)?;
        if !zl.count_check(zl.height()) {
            return Err(Fail(
                EXIT_CERT_FAIL,
                format!("zero table {} fails the completeness check at height {}", path.display(), zl.height()),
            ));
        }
        return Ok(zl);
    }
    let t = source_height(r)?.expect("computed source has a height");
    eprintln!("computing zeros up to {t} ...");
    Ok(compute_zeros(t, r.zeros_accuracy.unwrap_or(DEFAULT_ZERO_ACCURACY))?)
}

fn plan_for(r: &Resolved, zl: Option<&ZeroList>) -> Result<Plan, Fail> {
    let height = match zl {
        Some(z) => z.height(),
        None => match source_height(r)? {
            Some(t) => t,
            None => load_source(r)?.height(),
        },
    };
    Ok(make_plan_with(&r.request, height)?)
}

fn print_budget(res: &PiResult) {
    println!("error budget:");
    for (name, v) in res.budget.items() {
        if v > 0.0 {
            println!("  {name:<28} {v:.3e}");
        }
    }
    println!("  {:<28} {:.3e}", "total", res.budget.total);
}

fn print_plan(p: &Plan) {
    println!("x           = {} (+1/2)", p.x_raw);
    println!("mode        = {}, rigor = {}", p.mode, p.rigor);
    println!("c           = {:.6}", p.c);
    println!("epsilon     = {:.6e}", p.epsilon);
    println!("a           = {}", p.a);
    println!("alpha       = {:.6}", p.alpha);
    println!("zero cap    = {:.3} (table height {})", p.zero_cap, p.zero_height);
    println!("zeros used  ~ {:.0}", p.predicted_zeros());
    println!("window      ~ {:.0} integers", p.window_width);
    let b = &p.predicted;
    println!("predicted: truncation {:.3e}, partial {:.3e}, 35eps {:.3e}, R {:.3e}, alpha {:.3e}",
        b.zero_truncation, b.zero_partial, b.explicit_formula_theta, b.window_remainder_r, b.alpha_truncation);
}

fn cmd_plan(r: Resolved) -> Result<u8, Fail> {
    let plan = plan_for(&r, None)?;
    if r.json {
        let v = json!({
            "plan": plan,
            "predicted_zeros": plan.predicted_zeros(),
            "window_width": plan.window_width,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("plan serializes"));
    } else {
        print_plan(&plan);
    }
    Ok(EXIT_OK)
}

fn run_pi(r: &Resolved) -> Result<PiResult, Fail> {
    // validate the plan before spending time on zeros when the height is known up front
    if r.zeros.is_none() {
        plan_for(r, None)?;
    }
    let zl = load_source(r)?;
    let plan = plan_for(r, Some(&zl))?;
    let res = pi(&plan, &zl)?;
    let sum = res.budget.items_sum();
    assert!(res.budget.total >= sum && res.budget.total - sum <= 1e-12 * sum.max(1.0));
    Ok(res)
}

fn exit_for(res: &PiResult) -> u8 {
    if res.certified {
        EXIT_OK
    } else if res.plan.rigor == Rigor::Heuristic && res.rounding_within_budget {
        EXIT_HEURISTIC
    } else {
        EXIT_CERT_FAIL
    }
}

fn cmd_pi(r: Resolved) -> Result<u8, Fail> {
    let res = run_pi(&r)?;
    let code = exit_for(&res);
    if r.json {
        println!("{}", res.to_json());
        return Ok(code);
    }
    match code {
        EXIT_OK => println!("pi({}) = {}  [certified]", res.x, res.pi),
        EXIT_HEURISTIC => println!("pi({}) = {}  [HEURISTIC: not certified]", res.x, res.pi),
        _ => println!(
            "pi({}) not certified: estimate {:.6}, distance to integer {:.3e}, budget {:.3e}",
            res.x, res.pi_estimate, res.distance_to_integer, res.budget.total
        ),
    }
    print_budget(&res);
    println!(
        "zeros used {}, primes sieved {}, {:.2}s",
        res.zeros_used, res.primes_sieved, res.timings.total_seconds
    );
    Ok(code)
}

fn cmd_verify(r: Resolved) -> Result<u8, Fail> {
    let x = r.request.x_raw as u64;
    if x > ORACLE_PI_CAP {
        println!("skipped: x = {x} is above the sieve cap {ORACLE_PI_CAP}");
        return Ok(EXIT_OK);
    }
    let res = run_pi(&r)?;
    let computed = res.pi as i64 + r.inject_fault;
    let expected = oracle_pi(x)? as i64;
    if computed != expected {
        eprintln!("MISMATCH: analytic pi({x}) = {computed}, sieve gives {expected}");
        eprintln!("{}", res.to_json());
        return Ok(EXIT_MISMATCH);
    }
    if r.json {
        println!("{}", json!({ "x": x, "pi": computed, "sieve": expected, "match": true }));
    } else {
        println!("pi({x}) = {computed} matches the sieve");
    }
    Ok(EXIT_OK)
}

fn save(zl: &ZeroList, path: &Path) -> Result<(), Fail> {
    if path.extension().is_some_and(|e| e == "bin") {
        save_binary(zl, path)?;
    } else {
        save_text(zl, path)?;
    }
    Ok(())
}

fn cmd_zeros(cmd: ZerosCmd, json_out: bool) -> Result<u8, Fail> {
    match cmd {
        ZerosCmd::Compute { t_max, accuracy, out } => {
            let zl = compute_zeros(t_max, accuracy)?;
            if let Some(p) = &out {
                save(&zl, p)?;
            }
            if json_out {
                println!("{}", json!({ "height": zl.height(), "count": zl.count(), "accuracy": zl.accuracy() }));
            } else {
                println!("{} zeros up to {} (accuracy {:e})", zl.count(), zl.height(), zl.accuracy());
            }
            Ok(EXIT_OK)
        }
        ZerosCmd::Verify { file, accuracy } => {
            let zl = load_zeros(&file, accuracy)?;
            let ok = zl.count_check(zl.height());
            if json_out {
                println!("{}", json!({ "height": zl.height(), "count": zl.count(), "complete": ok }));
            } else if ok {
                println!("{}: {} zeros, complete up to {}", file.display(), zl.count(), zl.height());
            } else {
                println!("{}: {} zeros, INCOMPLETE at {}", file.display(), zl.count(), zl.height());
            }
            Ok(if ok { EXIT_OK } else { EXIT_CERT_FAIL })
        }
        ZerosCmd::Convert { input, output, accuracy } => {
            let zl = load_zeros(&input, accuracy)?;
            save(&zl, &output)?;
            println!("wrote {} zeros to {}", zl.count(), output.display());
            Ok(EXIT_OK)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p).map_err(usage)?,
        None => FileConfig::default(),
    };
    let threads = file.pick(cli.threads, "threads").map_err(usage)?;
    if let Some(n) = threads {
        if n == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    match cli.command {
        Command::Pi(a) => cmd_pi(resolve(a, &file, cli.json)?),
        Command::Plan(a) => cmd_plan(resolve(a, &file, cli.json)?),
        Command::Verify(a) => cmd_verify(resolve(a, &file, cli.json)?),
        Command::Zeros(z) => cmd_zeros(z, file.flag(cli.json, "json").map_err(usage)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
