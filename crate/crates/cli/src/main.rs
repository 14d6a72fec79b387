//! pdet: exact pseudo-determinants, Cauchy-Binet identity verification, and
//! graph invariants from the command line.

mod matfile;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use pdet_core::verify::{run_full_suite, Status, SuiteBudget};
use pdet_core::{
    betti_numbers, cauchy_binet_coeffs_budgeted, char_poly, clique_complex, dirac_operator,
    euler_characteristic_check, exterior_power, form_laplacian, mat_mul, minor_pair_sum_budgeted,
    minors, pseudo_det, rank, rooted_forest_count, simplex_graph, spanning_tree_count,
    spectral_count, Error, Graph, Matrix, Polynomial, Scalar,
};
use report::{Report, VerdictStatus};

const ORACLE_EDGE_LIMIT: usize = 16;

#[derive(Parser)]
#[command(
    name = "pdet",
    version,
    about = "Exact pseudo-determinants, Cauchy-Binet verification, and graph invariants",
    after_help = "Matrix files hold one row per line, entries as integers or p/q rationals.\n\
                  Edge-list files start with a vertex-count header followed by 'u v' lines.\n\
                  '#' begins a comment in either format."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Size budget: pattern-pair cap for minor sums, simplex cap for graph
    /// analyses, and instance count per suite for selftest
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, pseudo-determinant, spectral count, rank
    Pdet { file: PathBuf },
    /// Characteristic polynomial only
    Charpoly { file: PathBuf },
    /// Verify the coefficient-level Cauchy-Binet identity for a pair of
    /// equally shaped matrix files
    CauchyBinet { f: PathBuf, g: PathBuf },
    /// Print the k-th exterior power (matrix of all k x k minors)
    Exterior { file: PathBuf, order: usize },
    /// Graph invariants from an edge-list file
    Graph {
        file: PathBuf,
        #[arg(value_enum)]
        analysis: Analysis,
    },
    /// Run every verification suite with a reproducible seed
    Selftest,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Analysis {
    Trees,
    Forests,
    Betti,
    Dirac,
    Simplexgraph,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match execute(&cli) {
        Ok(mut report) => {
            report.duration_ms = start.elapsed().as_millis();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("report is valid JSON")
                ),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.any_failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Pdet { file } => cmd_pdet(file, true),
        Command::Charpoly { file } => cmd_pdet(file, false),
        Command::CauchyBinet { f, g } => cmd_cauchy_binet(f, g, pattern_budget(cli)),
        Command::Exterior { file, order } => cmd_exterior(file, *order, pattern_budget(cli)),
        Command::Graph { file, analysis } => cmd_graph(file, *analysis, simplex_budget(cli)),
        Command::Selftest => cmd_selftest(cli.seed, cli.budget),
    }
}

fn pattern_budget(cli: &Cli) -> u128 {
    cli.budget
        .map(u128::from)
        .unwrap_or(minors::DEFAULT_PATTERN_BUDGET)
}

fn simplex_budget(cli: &Cli) -> usize {
    cli.budget
        .map(|b| b as usize)
        .unwrap_or(pdet_core::DEFAULT_SIMPLEX_BUDGET)
}

fn read_input(report: &mut Report, path: &Path) -> Result<String> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    report.add_input(&path.display().to_string(), hex);
    Ok(text)
}

fn load_matrix(report: &mut Report, path: &Path) -> Result<Matrix> {
    let text = read_input(report, path)?;
    matfile::parse_matrix(&text).with_context(|| format!("{}", path.display()))
}

fn load_graph(report: &mut Report, path: &Path) -> Result<Graph> {
    let text = read_input(report, path)?;
    Graph::parse(&text).with_context(|| format!("{}", path.display()))
}

fn poly_json(p: &Polynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn cmd_pdet(path: &Path, full: bool) -> Result<Report> {
    let mut report = Report::new(if full { "pdet" } else { "charpoly" });
    let a = load_matrix(&mut report, path)?;
    let p = char_poly(&a).map_err(describe)?;
    report.set("char_poly", poly_json(&p));
    report.set("char_poly_pretty", json!(p.to_string()));
    if full {
        report.set("pseudo_det", json!(pseudo_det(&a).map_err(describe)?.to_string()));
        report.set(
            "spectral_count",
            json!(spectral_count(&a).map_err(describe)?),
        );
        report.set("rank", json!(rank(&a)));
    }
    Ok(report)
}

fn describe(e: Error) -> anyhow::Error {
    anyhow::anyhow!("{e}")
}

fn cmd_cauchy_binet(fp: &Path, gp: &Path, budget: u128) -> Result<Report> {
    let mut report = Report::new("cauchy-binet");
    let f = load_matrix(&mut report, fp)?;
    let g = load_matrix(&mut report, gp)?;
    if f.rows() != g.rows() || f.cols() != g.cols() {
        bail!(
            "shape mismatch: {}x{} vs {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        );
    }
    let ftg = mat_mul(&f.transpose(), &g).map_err(describe)?;
    let p = char_poly(&ftg).map_err(describe)?;
    report.set("shape", json!(format!("{}x{}", f.rows(), f.cols())));
    report.set("char_poly", poly_json(&p));

    match cauchy_binet_coeffs_budgeted(&f, &g, budget) {
        Ok(series) => {
            for k in 0..=f.rows().min(f.cols()) {
                report.equality_verdict(
                    &format!("coefficient k={k}"),
                    p.neg_power_coeff(k).to_string(),
                    series.coeff(k).to_string(),
                );
            }
        }
        Err(Error::PatternBudgetExceeded { needed, budget }) => {
            report.verdict(
                "coefficients",
                VerdictStatus::Skipped,
                format!("budget: {needed} pattern pairs needed"),
                format!("cap {budget}"),
            );
        }
        Err(e) => return Err(describe(e)),
    }

    // pseudo-determinant through the minor route at the spectral order
    let k = spectral_count(&ftg).map_err(describe)?;
    let det = pseudo_det(&ftg).map_err(describe)?;
    report.set("spectral_count", json!(k));
    match minor_pair_sum_budgeted(&f, &g, k, budget) {
        Ok(sum) => {
            report.equality_verdict(
                &format!("pseudo-det at k={k}"),
                det.to_string(),
                sum.to_string(),
            );
        }
        Err(Error::PatternBudgetExceeded { needed, budget }) => {
            report.verdict(
                "pseudo-det minor route",
                VerdictStatus::Skipped,
                format!("budget: {needed} pattern pairs needed"),
                format!("cap {budget}"),
            );
        }
        Err(e) => return Err(describe(e)),
    }

    let fgt = mat_mul(&f, &g.transpose()).map_err(describe)?;
    report.equality_verdict(
        "duality",
        det.to_string(),
        pseudo_det(&fgt).map_err(describe)?.to_string(),
    );
    Ok(report)
}

fn cmd_exterior(path: &Path, order: usize, budget: u128) -> Result<Report> {
    let mut report = Report::new("exterior");
    let f = load_matrix(&mut report, path)?;
    let needed = minors::binomial(f.rows(), order) * minors::binomial(f.cols(), order);
    if needed > budget {
        bail!("exterior power needs {needed} minors, budget is {budget}");
    }
    let w = exterior_power(&f, order);
    report.set("order", json!(order));
    report.set("shape", json!(format!("{}x{}", w.rows(), w.cols())));
    let rows: Vec<Value> = matfile::format_matrix(&w)
        .lines()
        .map(|line| Value::String(line.to_string()))
        .collect();
    report.set("matrix", Value::Array(rows));
    Ok(report)
}

fn cmd_graph(path: &Path, analysis: Analysis, budget: usize) -> Result<Report> {
    let mut report = Report::new("graph");
    let g = load_graph(&mut report, path)?;
    report.set("vertices", json!(g.vertex_count()));
    report.set("edges", json!(g.edge_count()));
    match analysis {
        Analysis::Trees => {
            report.set("analysis", json!("trees"));
            let trees = spanning_tree_count(&g).map_err(describe)?;
            report.set(
                "laplacian_pseudo_det",
                json!(pseudo_det(&g.scalar_laplacian()).map_err(describe)?.to_string()),
            );
            report.set("spanning_trees", json!(trees.to_string()));
            if g.edge_count() <= ORACLE_EDGE_LIMIT {
                let brute = pdet_core::brute_force_tree_count(&g).map_err(describe)?;
                report.equality_verdict("tree-oracle", trees.to_string(), brute.to_string());
            } else {
                report.verdict(
                    "tree-oracle",
                    VerdictStatus::Skipped,
                    format!("{} edges", g.edge_count()),
                    format!("oracle limit {ORACLE_EDGE_LIMIT}"),
                );
            }
        }
        Analysis::Forests => {
            report.set("analysis", json!("forests"));
            let forests = rooted_forest_count(&g);
            report.set("rooted_forests", json!(forests.to_string()));
            if g.edge_count() <= ORACLE_EDGE_LIMIT {
                let brute = pdet_core::brute_force_rooted_forest_count(&g).map_err(describe)?;
                report.equality_verdict("forest-oracle", forests.to_string(), brute.to_string());
            } else {
                report.verdict(
                    "forest-oracle",
                    VerdictStatus::Skipped,
                    format!("{} edges", g.edge_count()),
                    format!("oracle limit {ORACLE_EDGE_LIMIT}"),
                );
            }
        }
        Analysis::Betti => {
            report.set("analysis", json!("betti"));
            let c = clique_complex(&g, budget).map_err(describe)?;
            let betti = betti_numbers(&c);
            report.set("f_vector", json!(c.counts()));
            report.set("betti", json!(betti.by_degree));
            report.set("laplacian_kernel_dim", json!(betti.laplacian_kernel_dim));
            let total: usize = betti.by_degree.iter().sum();
            report.equality_verdict(
                "hodge-kernel-sum",
                total.to_string(),
                betti.laplacian_kernel_dim.to_string(),
            );
            let (lhs, rhs) = euler_characteristic_check(&c);
            report.equality_verdict("euler-alternating-sum", lhs.to_string(), rhs.to_string());
        }
        Analysis::Dirac => {
            report.set("analysis", json!("dirac"));
            let c = clique_complex(&g, budget).map_err(describe)?;
            let d = dirac_operator(&c);
            let det_d = pseudo_det(&d).map_err(describe)?;
            let det_l = pseudo_det(&form_laplacian(&c)).map_err(describe)?;
            let betti = betti_numbers(&c);
            report.set("total_simplices", json!(c.total_simplices()));
            report.set("dirac_pseudo_det", json!(det_d.to_string()));
            report.set("form_laplacian_pseudo_det", json!(det_l.to_string()));
            report.set("betti", json!(betti.by_degree));
            let total: usize = betti.by_degree.iter().sum();
            report.equality_verdict(
                "hodge-kernel-sum",
                total.to_string(),
                betti.laplacian_kernel_dim.to_string(),
            );
            let (lhs, rhs) = euler_characteristic_check(&c);
            report.equality_verdict("euler-alternating-sum", lhs.to_string(), rhs.to_string());
            if g.is_connected() {
                let n = g.vertex_count() as i64;
                let divisible = (&det_d / &Scalar::from_int(n)).is_integer();
                report.verdict(
                    "vertex-count-divides-dirac-det",
                    VerdictStatus::from_equality(divisible),
                    det_d.to_string(),
                    format!("multiple of {n}"),
                );
            } else {
                report.verdict(
                    "vertex-count-divides-dirac-det",
                    VerdictStatus::Skipped,
                    "graph is disconnected".into(),
                    "-".into(),
                );
            }
        }
        Analysis::Simplexgraph => {
            report.set("analysis", json!("simplexgraph"));
            let sg = simplex_graph(&g, budget).map_err(describe)?;
            report.set("simplex_count", json!(sg.vertex_count()));
            report.set("containment_edges", json!(sg.edge_count()));
            report.set("edge_list", json!(sg.to_edge_list_text()));
        }
    }
    Ok(report)
}

fn cmd_selftest(seed: u64, budget: Option<u64>) -> Result<Report> {
    let mut report = Report::new("selftest");
    let suite_budget = match budget {
        None => SuiteBudget::acceptance(),
        Some(b) => SuiteBudget::scaled(b as usize),
    };
    report.set("seed", json!(seed));
    report.set(
        "budget",
        json!(budget.map_or("full".to_string(), |b| b.to_string())),
    );
    for check in run_full_suite(seed, &suite_budget) {
        let status = match check.status {
            Status::Pass => VerdictStatus::Pass,
            Status::Fail => VerdictStatus::Fail,
            Status::Skipped => VerdictStatus::Skipped,
        };
        report.verdict(check.name, status, check.detail, "-".into());
    }
    Ok(report)
}
