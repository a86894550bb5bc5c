//! Command-line front end: analysis, solving, catalog access, enumeration,
//! verification, and JSON/DOT export.
//!
//! Exit codes: 0 success (or verified true), 1 internal error, 2 usage or
//! input error, 3 proven negative (not representable / verification
//! failed), 4 inconclusive within budget.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use norm3::classify::{
    brute_force_ir_trees, enumerate_fat_3_seedlings, verify_main_theorem,
};
use norm3::graph::SmithKind;
use norm3::hoffman::stripped_sum;
use norm3::matrix::LambdaOrder;
use norm3::random::{random_stripped_parts, random_tree_like, rng};
use norm3::repr::{solve_reduced_integral, Representability, SolveOutcome};
use norm3::{catalog, io, Error, HoffmanGraph};

#[derive(Parser)]
#[command(name = "norm3", version, about = "Hoffman graphs and integral norm-3 representations", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a Hoffman graph: special matrix, eigenvalue trichotomy,
    /// decomposition, special graph
    Analyze {
        /// Hoffman-graph JSON file
        input: PathBuf,
    },
    /// Search for a reduced integral representation
    Solve {
        /// Hoffman-graph JSON file
        input: PathBuf,
        /// Representation norm (only 3 is supported)
        #[arg(long, default_value_t = 3)]
        t: i64,
        /// Dimension cap (default 3 per slim vertex)
        #[arg(long)]
        dim_cap: Option<usize>,
        /// Search node budget (default 10^7)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit a named family member as Hoffman-graph JSON
    Catalog {
        /// Member name: h1|h2|h3, fat-star1..3, f-prime3, or cM (M >= 2)
        member: String,
        /// Include the standard reduced representation when available
        #[arg(long)]
        psi: bool,
    },
    /// Census of all trees with at most N vertices
    Trees {
        #[arg(long = "max-n")]
        max_n: usize,
        /// JSON array output instead of CSV
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// CSV output (the default)
        #[arg(long)]
        csv: bool,
        /// Directory to write representation witness files into
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Fat 3-seedlings over an extended Smith tree
    Seedlings {
        /// Base tree: e6, e7, or e8
        #[arg(long)]
        base: String,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Re-emit an input file as canonical JSON or DOT
    Export {
        input: PathBuf,
        /// Output format: json or dot
        #[arg(long)]
        format: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Census versus construction equality plus the embedding half
    MainTheorem {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Extra host vertices for the embedding search (default max-n + 6)
        #[arg(long)]
        slack: Option<usize>,
    },
    /// Randomized eigenvalue-sandwich and sign-similarity suites
    Properties {
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        /// Instances per suite
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn input_error(e: Error) -> ExitCode {
    fail(EXIT_INPUT, e)
}

fn read_file(path: &Path) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn read_hoffman(path: &Path) -> Result<HoffmanGraph, ExitCode> {
    io::hoffman_from_json(&read_file(path)?).map_err(input_error)
}

fn lambda_str(o: LambdaOrder) -> &'static str {
    match o {
        LambdaOrder::Less => "less",
        LambdaOrder::Equal => "equal",
        LambdaOrder::Greater => "greater",
    }
}

fn representable_str(r: Representability) -> &'static str {
    match r {
        Representability::Yes => "yes",
        Representability::No => "no",
        Representability::Inconclusive => "inconclusive",
    }
}

fn run_analyze(input: &Path) -> Result<ExitCode, ExitCode> {
    let h = read_hoffman(input)?;
    let sp = h.special_matrix();
    let lambda = h.lambda_min_cmp3().map_err(input_error)?;
    let special = h.special_graph();
    let weighted = h.weighted_minus();
    let report = json!({
        "slims": h.slim_vertices(),
        "fats": h.fat_vertices(),
        "special_matrix": sp.rows(),
        "lambda_vs_minus3": lambda_str(lambda),
        "factors": h.decompose().len(),
        "tree_like": h.is_tree_like(),
        "special_graph": {
            "plus": special.plus_edges(),
            "minus": special.minus_edges(),
        },
        "weights": weighted.weight,
    });
    println!("{report}");
    Ok(ExitCode::SUCCESS)
}

fn run_solve(
    input: &Path,
    t: i64,
    dim_cap: Option<usize>,
    budget: Option<u64>,
) -> Result<ExitCode, ExitCode> {
    if t != 3 {
        return Err(fail(EXIT_INPUT, "only norm 3 is supported"));
    }
    let h = read_hoffman(input)?;
    match solve_reduced_integral(&h, dim_cap, budget) {
        SolveOutcome::Found(psi) => {
            let mut gram = h.special_matrix().rows();
            for (i, row) in gram.iter_mut().enumerate() {
                row[i] += 3;
            }
            let rep: serde_json::Value =
                serde_json::from_str(&io::reduced_to_json(&psi)).unwrap();
            println!("{}", json!({"verdict": "found", "representation": rep, "gram": gram}));
            Ok(ExitCode::SUCCESS)
        }
        SolveOutcome::NotRepresentable => {
            println!("{}", json!({"verdict": "not_representable"}));
            Ok(ExitCode::from(EXIT_NEGATIVE))
        }
        SolveOutcome::BudgetExceeded => {
            println!("{}", json!({"verdict": "budget_exceeded"}));
            Ok(ExitCode::from(EXIT_INCONCLUSIVE))
        }
    }
}

fn run_catalog(member: &str, psi: bool) -> Result<ExitCode, ExitCode> {
    let (graph, rep) = if let Some(m) = member.strip_prefix('c') {
        let m: u32 = m
            .parse()
            .map_err(|_| fail(EXIT_INPUT, format!("unknown member {member:?}")))?;
        let g = catalog::make_c(m).map_err(input_error)?;
        let r = catalog::make_psi_c(m).map_err(input_error)?;
        (g, Some(r))
    } else if let Some(t) = member.strip_prefix('h') {
        let t: u32 = t
            .parse()
            .map_err(|_| fail(EXIT_INPUT, format!("unknown member {member:?}")))?;
        (catalog::make_h_t(t).map_err(input_error)?, None)
    } else if let Some(k) = member.strip_prefix("fat-star") {
        let k: u32 = k
            .parse()
            .map_err(|_| fail(EXIT_INPUT, format!("unknown member {member:?}")))?;
        (catalog::make_fat_star(k).map_err(input_error)?, None)
    } else if member == "f-prime3" {
        (catalog::make_f_prime3(), None)
    } else {
        return Err(fail(EXIT_INPUT, format!("unknown member {member:?}")));
    };
    let hoffman: serde_json::Value =
        serde_json::from_str(&io::hoffman_to_json(&graph)).unwrap();
    let psi_value = match (psi, rep) {
        (true, Some(r)) => serde_json::from_str(&io::reduced_to_json(&r)).unwrap(),
        _ => serde_json::Value::Null,
    };
    println!("{}", json!({"hoffman": hoffman, "psi": psi_value}));
    Ok(ExitCode::SUCCESS)
}

fn run_trees(
    max_n: usize,
    as_json: bool,
    witness_dir: Option<&Path>,
) -> Result<ExitCode, ExitCode> {
    if max_n < 1 {
        return Err(fail(EXIT_INPUT, "--max-n must be at least 1"));
    }
    let census = brute_force_ir_trees(max_n)
        .map_err(|e| fail(EXIT_INTERNAL, e))?;
    if let Some(dir) = witness_dir {
        std::fs::create_dir_all(dir).map_err(|e| fail(EXIT_INPUT, e))?;
    }
    let mut rows = Vec::new();
    for (i, e) in census.iter().enumerate() {
        let witness_file = match (&e.witness, witness_dir) {
            (Some(w), Some(dir)) => {
                let path = dir.join(format!("witness_{i:04}.json"));
                std::fs::write(&path, io::reduced_to_json(w))
                    .map_err(|e| fail(EXIT_INPUT, e))?;
                path.display().to_string()
            }
            _ => String::new(),
        };
        rows.push((e, witness_file));
    }
    if as_json {
        let items: Vec<serde_json::Value> = rows
            .iter()
            .map(|(e, wf)| {
                json!({
                    "code": String::from_utf8_lossy(&e.code),
                    "n": e.n,
                    "lambda_cmp": lambda_str(e.lambda_vs_minus3),
                    "representable": representable_str(e.representable),
                    "dim": e.witness.as_ref().map(|w| w.dim),
                    "witness_file": wf,
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(items));
    } else {
        println!("code,n,lambda_cmp,representable,dim,witness-file");
        for (e, wf) in &rows {
            println!(
                "{},{},{},{},{},{}",
                String::from_utf8_lossy(&e.code),
                e.n,
                lambda_str(e.lambda_vs_minus3),
                representable_str(e.representable),
                e.witness.as_ref().map(|w| w.dim.to_string()).unwrap_or_default(),
                wf
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_seedlings(base: &str) -> Result<ExitCode, ExitCode> {
    let kind = match base {
        "e6" => SmithKind::E6Tilde,
        "e7" => SmithKind::E7Tilde,
        "e8" => SmithKind::E8Tilde,
        _ => return Err(fail(EXIT_INPUT, "--base must be e6, e7, or e8")),
    };
    let seedlings = enumerate_fat_3_seedlings(kind).map_err(|e| fail(EXIT_INTERNAL, e))?;
    println!("{}", seedlings.len());
    for s in &seedlings {
        println!("{}", io::hoffman_to_json(s));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify_main_theorem(max_n: usize, slack: Option<usize>) -> Result<ExitCode, ExitCode> {
    if max_n < 1 {
        return Err(fail(EXIT_INPUT, "--max-n must be at least 1"));
    }
    let slack = slack.unwrap_or(max_n + 6);
    let report = verify_main_theorem(max_n, slack).map_err(|e| fail(EXIT_INTERNAL, e))?;
    println!(
        "equality (n <= {}): {} census vs {} constructed -> {}",
        report.n_max,
        report.census_minus3.len(),
        report.constructed.len(),
        if report.equality_holds { "ok" } else { "MISMATCH" }
    );
    println!(
        "embeddings (hosts <= {}): {} embedded, {} missing -> {}",
        report.n_max + report.slack,
        report.embedded,
        report.unembedded.len(),
        if report.embeddings_ok { "ok" } else { "MISSING" }
    );
    if report.equality_holds && report.embeddings_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_NEGATIVE))
    }
}

fn run_verify_properties(seed: u64, count: usize) -> Result<ExitCode, ExitCode> {
    let mut r = rng(seed);
    let mut ok = true;
    // eigenvalue sandwich over random tree-like stripped sums
    let mut equal_cases = 0usize;
    for _ in 0..count {
        let parts = random_stripped_parts(&mut r, 6);
        let sum = stripped_sum(&parts).unwrap();
        let all_minus3 = parts
            .iter()
            .all(|p| p.lambda_min_cmp3().unwrap() == LambdaOrder::Equal);
        let sum_lambda = sum.lambda_min_cmp3().unwrap();
        // all parts sit at or above -3, so the sandwich lower bound says
        // the sum cannot drop below -3; -3 is attained iff all parts attain it
        if sum_lambda == LambdaOrder::Less || (sum_lambda == LambdaOrder::Equal) != all_minus3 {
            ok = false;
        }
        if all_minus3 {
            equal_cases += 1;
        }
    }
    println!(
        "sandwich: {count} stripped sums checked ({equal_cases} all at -3) -> {}",
        if ok { "ok" } else { "VIOLATED" }
    );
    // multiplicity one and sign-similarity on random tree-like graphs
    let mut sim_ok = true;
    for _ in 0..count {
        let h = random_tree_like(&mut r, 10);
        let sp = h.special_matrix();
        let Some(d) = h.minus_similarity_diagonal() else {
            sim_ok = false;
            break;
        };
        let k = sp.dim();
        for i in 0..k {
            for j in 0..k {
                if i != j && d[i] * d[j] * sp.get(i, j) > 0 {
                    sim_ok = false;
                }
            }
        }
        // tree-like graphs are indecomposable, which together with the
        // nonpositive similarity makes the smallest eigenvalue simple by
        // Perron-Frobenius
        if !h.is_indecomposable() {
            sim_ok = false;
        }
    }
    println!(
        "sign-similarity: {count} tree-like graphs checked -> {}",
        if sim_ok { "ok" } else { "VIOLATED" }
    );
    if ok && sim_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_NEGATIVE))
    }
}

fn run_export(input: &Path, format: &str) -> Result<ExitCode, ExitCode> {
    let text = read_file(input)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| fail(EXIT_INPUT, e))?;
    let obj = value
        .as_object()
        .ok_or_else(|| fail(EXIT_INPUT, "input is not a JSON object"))?;
    let out = if obj.contains_key("slim") {
        let h = io::hoffman_from_json(&text).map_err(input_error)?;
        match format {
            "json" => io::hoffman_to_json(&h),
            "dot" => io::hoffman_to_dot(&h),
            _ => return Err(fail(EXIT_INPUT, format!("unsupported format {format:?}"))),
        }
    } else if obj.contains_key("plus") {
        let g = io::signed_from_json(&text).map_err(input_error)?;
        match format {
            "json" => io::signed_to_json(&g),
            "dot" => io::signed_to_dot(&g),
            _ => return Err(fail(EXIT_INPUT, format!("unsupported format {format:?}"))),
        }
    } else if obj.contains_key("dim") {
        let r = io::reduced_from_json(&text).map_err(input_error)?;
        match format {
            "json" => io::reduced_to_json(&r),
            _ => return Err(fail(EXIT_INPUT, format!("unsupported format {format:?}"))),
        }
    } else if obj.contains_key("n") {
        let g = io::graph_from_json(&text).map_err(input_error)?;
        match format {
            "json" => io::graph_to_json(&g),
            "dot" => io::graph_to_dot(&g),
            _ => return Err(fail(EXIT_INPUT, format!("unsupported format {format:?}"))),
        }
    } else {
        return Err(fail(EXIT_INPUT, "unrecognized input schema"));
    };
    print!("{out}");
    if !out.ends_with('\n') {
        println!();
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input } => run_analyze(input),
        Command::Solve {
            input,
            t,
            dim_cap,
            budget,
        } => run_solve(input, *t, *dim_cap, *budget),
        Command::Catalog { member, psi } => run_catalog(member, *psi),
        Command::Trees {
            max_n,
            json,
            csv: _,
            witness_dir,
        } => run_trees(*max_n, *json, witness_dir.as_deref()),
        Command::Seedlings { base } => run_seedlings(base),
        Command::Verify { what } => match what {
            VerifyCommand::MainTheorem { max_n, slack } => {
                run_verify_main_theorem(*max_n, *slack)
            }
            VerifyCommand::Properties { seed, count } => run_verify_properties(*seed, *count),
        },
        Command::Export { input, format } => run_export(input, format),
    };
    match result {
        Ok(code) => code,
        Err(code) => code,
    }
}
