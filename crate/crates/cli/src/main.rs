//! Batch CLI for exact cross-intersecting family bounds and verification.
//!
//! ```text
//! crossfam bound   --n 5 --ks 3,3,2
//! crossfam oracle  --n 5 --ks 3,3,2,2 --budget-nodes 10000000
//! crossfam profile --n 6 --ks 4,3,2
//! crossfam verify  --suite partners --n-max 8
//! crossfam sweep   --n-max 7 --format csv --out rows.csv
//! ```
//!
//! Exit codes: 0 success, 1 verification failure or formula/oracle mismatch,
//! 2 invalid configuration (including an exceeded search budget, which is
//! reported distinctly on stderr).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crossfam::bounds::{lambda_values, nonmixed_branches};
use crossfam::oracle::{
    classify_extremal, exact_m, f_profile, OracleOutcome, Report, SearchBudget,
};
use crossfam::subsets::r1_window;
use crossfam::verify::{
    increments_suite, kk_suite, lex_suite, mixed_params, nonmixed_params, oracle_suite,
    partners_suite, SuiteReport,
};
use crossfam::{Count, Error, Params};

#[derive(Parser)]
#[command(
    name = "crossfam",
    version,
    about = "Exact bounds and brute-force verification for maximum pairwise cross-intersecting families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form bound for one parameter tuple
    Bound(ParamArgs),
    /// Exhaustively compute the exact maximum and classify the maximizers
    Oracle(OracleArgs),
    /// Emit the profile of f over the leading ID window
    Profile(ParamArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Evaluate bound and oracle for every parameter tuple up to a cap
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ParamArgs {
    /// Ground set size
    #[arg(long)]
    n: u32,
    /// Comma-separated family sizes k_1,...,k_t
    #[arg(long, value_delimiter = ',', required = true)]
    ks: Vec<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Largest admissible raw search space prod_i C(n, k_i)
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    /// Wall-clock limit for the search
    #[arg(long)]
    budget_seconds: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lex,
    Partners,
    Increments,
    Oracle,
    Kk,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which invariant suite to run
    #[arg(long, value_enum)]
    suite: Suite,
    /// Ground-set cap for the sweep
    #[arg(long, default_value_t = 8)]
    n_max: u32,
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random trials per ground set (kk suite)
    #[arg(long, default_value_t = 10_000)]
    trials: u32,
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Ground-set cap
    #[arg(long, default_value_t = 7)]
    n_max: u32,
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long)]
    budget_seconds: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bound(args) => cmd_bound(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Profile(args) => cmd_profile(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Parse and normalize the family sizes; warns when input was reordered.
fn parse_params(n: u32, ks: &[u32]) -> Result<Params, String> {
    let mut sorted = ks.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != ks {
        let rendered: Vec<String> = sorted.iter().map(u32::to_string).collect();
        eprintln!(
            "warning: family sizes reordered to non-increasing ({})",
            rendered.join(",")
        );
    }
    Params::new(n, sorted).map_err(|e| e.to_string())
}

fn regime_label(params: &Params) -> &'static str {
    if params.is_mixed() {
        "mixed"
    } else if params.is_nonmixed() {
        "nonmixed"
    } else {
        "unsupported"
    }
}

/// The star/kernel candidate values: lambda_1/lambda_2 in the mixed window,
/// the two competing branches otherwise.
fn branch_values(params: &Params) -> Result<(Count, Count), String> {
    if params.is_mixed() {
        lambda_values(params).map_err(|e| e.to_string())
    } else if params.is_nonmixed() {
        Ok(nonmixed_branches(params))
    } else {
        Err(format!(
            "{params} is outside both supported windows (need k_1+k_3 <= n < k_1+k_2 or n >= k_1+k_2)"
        ))
    }
}

fn branch_label(star: &Count, kernel: &Count) -> &'static str {
    match star.cmp(kernel) {
        std::cmp::Ordering::Greater => "star",
        std::cmp::Ordering::Less => "kernel",
        std::cmp::Ordering::Equal => "tie",
    }
}

fn cmd_bound(args: ParamArgs) -> Result<u8, String> {
    let started = Instant::now();
    let params = parse_params(args.n, &args.ks)?;
    let (star, kernel) = branch_values(&params)?;
    let bound = star.clone().max(kernel.clone());
    let report = Report {
        params: Some(params.clone()),
        regime: regime_label(&params).into(),
        values: vec![
            ("lambda1".into(), star.to_string()),
            ("lambda2".into(), kernel.to_string()),
            ("bound".into(), bound.to_string()),
            ("branch".into(), branch_label(&star, &kernel).into()),
        ],
        runtime_ms: started.elapsed().as_millis(),
        ..Report::default()
    };
    emit(
        &args.output,
        &render_reports(std::slice::from_ref(&report), args.output.format),
    )?;
    Ok(0)
}

fn oracle_report(params: &Params, budget: &SearchBudget) -> Result<(Report, bool), String> {
    let started = Instant::now();
    let (star, kernel) = branch_values(params)?;
    let bound = star.clone().max(kernel.clone());
    let out: OracleOutcome = exact_m(params, budget).map_err(|e| match e {
        Error::BudgetExceeded { ref space, budget } => {
            format!("budget exceeded: search space {space} > {budget} nodes")
        }
        e => e.to_string(),
    })?;
    let matched = out.max_sum == bound;
    let mut classes: Vec<String> = out
        .extremal
        .iter()
        .map(|sys| classify_extremal(sys).map(|c| c.label().to_string()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    classes.sort();
    classes.dedup();
    let report = Report {
        params: Some(params.clone()),
        regime: regime_label(params).into(),
        values: vec![
            ("lambda1".into(), star.to_string()),
            ("lambda2".into(), kernel.to_string()),
            ("bound".into(), bound.to_string()),
            ("oracle".into(), out.max_sum.to_string()),
            ("match".into(), if matched { "yes" } else { "no" }.into()),
            ("space".into(), out.space.to_string()),
            ("nodes".into(), out.nodes.to_string()),
        ],
        tuples: out
            .extremal
            .iter()
            .map(|sys| sys.ids.iter().map(|id| id.to_string()).collect())
            .collect(),
        classes,
        checks: 1,
        failures: u64::from(!matched),
        runtime_ms: started.elapsed().as_millis(),
        ..Report::default()
    };
    Ok((report, matched))
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, String> {
    let params = parse_params(args.params.n, &args.params.ks)?;
    let budget = SearchBudget {
        max_nodes: args.budget_nodes,
        max_seconds: args.budget_seconds,
    };
    let (report, matched) = oracle_report(&params, &budget)?;
    emit(
        &args.params.output,
        &render_reports(std::slice::from_ref(&report), args.params.output.format),
    )?;
    if !matched {
        eprintln!("oracle maximum differs from the formula bound");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_profile(args: ParamArgs) -> Result<u8, String> {
    let started = Instant::now();
    let params = parse_params(args.n, &args.ks)?;
    if !params.is_mixed() {
        return Err(format!(
            "{params} is outside the mixed window k_1+k_3 <= n < k_1+k_2"
        ));
    }
    let profile = f_profile(&params).map_err(|e| e.to_string())?;
    let window = r1_window(&params).map_err(|e| e.to_string())?;
    let (l1, l2) = lambda_values(&params).map_err(|e| e.to_string())?;
    let max = profile.iter().max().unwrap().clone();
    let interior_max = profile.len() > 2 && profile[1..profile.len() - 1].contains(&max);
    let constant = profile.iter().all(|v| *v == profile[0]);
    let verdict = if constant && profile.len() > 1 {
        "exceptional-flat"
    } else if interior_max {
        "interior-max"
    } else {
        "endpoint-max"
    };

    match args.output.format {
        Format::Json => {
            let report = Report {
                params: Some(params.clone()),
                regime: "mixed".into(),
                values: vec![
                    ("lambda1".into(), l1.to_string()),
                    ("lambda2".into(), l2.to_string()),
                    ("max".into(), max.to_string()),
                    ("verdict".into(), verdict.into()),
                ],
                profile: profile.iter().map(Count::to_string).collect(),
                tuples: vec![window.iter().map(|r| r.to_string()).collect()],
                checks: 1,
                failures: u64::from(interior_max && !constant),
                runtime_ms: started.elapsed().as_millis(),
                ..Report::default()
            };
            emit(&args.output, &render_reports(&[report], Format::Json))?;
        }
        Format::Csv => {
            let mut csv = String::from("n,t,ks,index,r1,f,annotation\n");
            let ks_field = quote_csv(&join_ks(&params));
            for (i, (r1, f)) in window.iter().zip(profile.iter()).enumerate() {
                let annotation = if i == 0 {
                    "lambda1"
                } else if i == window.len() - 1 {
                    "lambda2"
                } else {
                    ""
                };
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{}",
                    params.n(),
                    params.t(),
                    ks_field,
                    i + 1,
                    quote_csv(&r1.to_string()),
                    f,
                    annotation
                );
            }
            let _ = writeln!(csv, "# verdict: {verdict}");
            emit(&args.output, &csv)?;
        }
    }
    if interior_max && !constant {
        eprintln!("profile attains its maximum at an interior ID");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let started = Instant::now();
    let suite: SuiteReport = match args.suite {
        Suite::Lex => lex_suite(args.n_max),
        Suite::Partners => partners_suite(args.n_max),
        Suite::Increments => increments_suite(args.n_max),
        Suite::Oracle => oracle_suite(
            args.n_max,
            &SearchBudget {
                max_nodes: args.budget_nodes,
                max_seconds: None,
            },
        ),
        Suite::Kk => kk_suite(args.n_max, args.seed, args.trials),
    };
    let report = Report {
        values: vec![
            ("suite".into(), suite.suite.clone()),
            ("n_max".into(), args.n_max.to_string()),
            ("seed".into(), args.seed.to_string()),
        ],
        checks: suite.checks,
        failures: suite.failures,
        runtime_ms: started.elapsed().as_millis(),
        ..Report::default()
    };
    match args.output.format {
        Format::Json => emit(&args.output, &render_reports(&[report], Format::Json))?,
        Format::Csv => {
            let status = if suite.passed() { "pass" } else { "fail" };
            let csv = format!(
                "suite,n_max,checks,failures,status\n{},{},{},{},{}\n",
                suite.suite, args.n_max, suite.checks, suite.failures, status
            );
            emit(&args.output, &csv)?;
        }
    }
    for sample in &suite.failure_samples {
        eprintln!("failure: {sample}");
    }
    if !suite.passed() {
        return Ok(1);
    }
    Ok(0)
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, String> {
    let budget = SearchBudget {
        max_nodes: args.budget_nodes,
        max_seconds: args.budget_seconds,
    };
    let mut params: Vec<Params> = mixed_params(args.n_max, 3, 5, 2);
    params.extend(nonmixed_params(args.n_max, 4));
    params.sort_by_key(|a| (a.n(), a.ks().to_vec()));

    let mut reports = Vec::new();
    let mut all_matched = true;
    let mut skipped = 0usize;
    for p in &params {
        match oracle_report(p, &budget) {
            Ok((report, matched)) => {
                all_matched &= matched;
                reports.push(report);
            }
            Err(msg) if msg.starts_with("budget exceeded") => skipped += 1,
            Err(msg) => return Err(msg),
        }
    }
    if skipped > 0 {
        eprintln!("skipped {skipped} tuples beyond the node budget");
    }
    emit(&args.output, &render_reports(&reports, args.output.format))?;
    if !all_matched {
        eprintln!("at least one tuple disagrees with the formula bound");
        return Ok(1);
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

fn join_ks(params: &Params) -> String {
    params
        .ks()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn quote_csv(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Decimal integers become exact JSON numbers, everything else a string.
fn json_scalar(s: &str) -> serde_json::Value {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
        match s.parse::<serde_json::Number>() {
            Ok(num) => serde_json::Value::Number(num),
            Err(_) => serde_json::Value::String(s.into()),
        }
    } else {
        serde_json::Value::String(s.into())
    }
}

fn report_to_json(report: &Report) -> serde_json::Value {
    let params = match &report.params {
        Some(p) => serde_json::json!({
            "n": p.n(),
            "t": p.t(),
            "ks": p.ks(),
        }),
        None => serde_json::Value::Null,
    };
    let mut values = serde_json::Map::new();
    for (k, v) in &report.values {
        values.insert(k.clone(), json_scalar(v));
    }
    if !report.profile.is_empty() {
        values.insert(
            "profile".into(),
            serde_json::Value::Array(report.profile.iter().map(|v| json_scalar(v)).collect()),
        );
    }
    serde_json::json!({
        "params": params,
        "regime": report.regime,
        "values": values,
        "tuples": report.tuples,
        "classes": report.classes,
        "checks": report.checks,
        "failures": report.failures,
        "runtime_ms": report.runtime_ms as u64,
    })
}

fn csv_row(report: &Report) -> String {
    let get = |key: &str| {
        report
            .values
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    };
    let (n, t, ks) = match &report.params {
        Some(p) => (p.n().to_string(), p.t().to_string(), quote_csv(&join_ks(p))),
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        n,
        t,
        ks,
        report.regime,
        get("lambda1"),
        get("lambda2"),
        get("bound"),
        get("oracle"),
        get("match"),
        report.classes.join("|"),
        report.runtime_ms
    )
}

fn render_reports(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let value = if reports.len() == 1 {
                report_to_json(&reports[0])
            } else {
                serde_json::Value::Array(reports.iter().map(report_to_json).collect())
            };
            let mut s = serde_json::to_string_pretty(&value).expect("valid json");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(
                "n,t,ks,regime,lambda1,lambda2,bound,oracle,match,classes,elapsed_ms\n",
            );
            for r in reports {
                s.push_str(&csv_row(r));
                s.push('\n');
            }
            s
        }
    }
}

fn emit(output: &OutputArgs, content: &str) -> Result<(), String> {
    match &output.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
