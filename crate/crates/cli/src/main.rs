//! Command-line interface over the code-construction, gadget-synthesis,
//! expansion, orbit and overhead pipelines.
//!
//! Exit codes: 0 success, 1 verification failure or runtime error,
//! 2 usage error (including unknown catalog entries).

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gbsurgery::bridge::{build_bridge, synthesize_product_measurement, Bridge};
use gbsurgery::distance::{budget_search, PauliSide};
use gbsurgery::expansion::{
    augment_to_expander_with_hint, contracted_cheeger, ContractedGraph,
};
use gbsurgery::gadget::{build_gadget, verify_gadget, Gadget};
use gbsurgery::gb::{catalog_code, shift_qubit_permutation, CatalogEntry, SEED_NAMES};
use gbsurgery::io::{code_to_alist, CodeBundle};
use gbsurgery::orbits::{aligned_logical_basis, complete_seed_set_check, verify_sector_coverage};
use gbsurgery::overhead::{
    curated_augmentation, overhead_row, rate_ratio_series, AUGMENTATION_BUDGET,
};
use gbsurgery::pauli::apply_permutation;
use gbsurgery::CssCode;

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "gbsurgery", version, about = "Generalised bicycle code surgery toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct and inspect catalog codes.
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Build and verify logical-measurement gadgets.
    Gadget {
        #[command(subcommand)]
        command: GadgetCommand,
    },
    /// Expansion analysis of a seed gadget's connectivity graph.
    Cheeger(CheegerArgs),
    /// Bridge several seed gadgets into one product measurement.
    Bridge(BridgeArgs),
    /// Orbit and completeness verification.
    Orbit {
        #[command(subcommand)]
        command: OrbitCommand,
    },
    /// Overhead and rate reports.
    Report {
        #[command(subcommand)]
        command: ReportCommand,
    },
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Emit the parity checks of a catalog code.
    Build {
        #[arg(long)]
        r: u32,
        /// Output format: json or alist.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Report n, k and the conjectured distance.
    Params {
        #[arg(long)]
        r: u32,
        /// Also probe for logicals lighter than the conjectured distance
        /// with this enumeration budget (combinations of up to W
        /// generator rows).
        #[arg(long)]
        distance_budget: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Build the measurement gadget for a seed (optionally shifted).
    Build(GadgetArgs),
    /// Build and mechanically verify a seed gadget.
    Verify(GadgetArgs),
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long)]
    r: u32,
    /// Seed name: x1, z1, x2 or z2.
    #[arg(long)]
    seed: String,
    /// Apply the cyclic shift automorphism by this amount first.
    #[arg(long, default_value_t = 0)]
    shift: usize,
}

#[derive(Args)]
struct CheegerArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    seed: String,
}

#[derive(Args)]
struct BridgeArgs {
    #[arg(long)]
    r: u32,
    /// Comma-separated seed names to measure as one product.
    #[arg(long)]
    targets: String,
}

#[derive(Subcommand)]
enum OrbitCommand {
    /// Verify sector coverage of all four seed orbits and completeness.
    Verify {
        #[arg(long)]
        r: u32,
    },
}

#[derive(Subcommand)]
enum ReportCommand {
    /// The four-code overhead accounting table.
    Table1 {
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Distance-weighted rate series as CSV.
    Fig1 {
        #[arg(long, default_value_t = true)]
        csv: bool,
        #[arg(long, default_value_t = 5)]
        r_min: u32,
        #[arg(long, default_value_t = 11)]
        r_max: u32,
    },
}

/// Failures carrying their intended process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<gbsurgery::Error> for Failure {
    fn from(e: gbsurgery::Error) -> Self {
        let code = match e {
            gbsurgery::Error::NoCatalogEntry(_) | gbsurgery::Error::ShiftOutOfRange { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn entry_and_code(r: u32) -> Result<(CatalogEntry, CssCode), Failure> {
    let entry = catalog_code(r)?;
    let code = entry.build()?;
    Ok((entry, code))
}

fn seed_slot(name: &str) -> Result<usize, Failure> {
    SEED_NAMES
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| Failure::usage(format!("unknown seed {name:?} (expected x1, z1, x2, z2)")))
}

fn shifted_gadget(args: &GadgetArgs) -> Result<(CssCode, Gadget), Failure> {
    let (entry, code) = entry_and_code(args.r)?;
    let slot = seed_slot(&args.seed)?;
    let perm = shift_qubit_permutation(entry.spec.l, args.shift)?;
    let seed = apply_permutation(&entry.seeds[slot], &perm)?;
    let gadget = build_gadget(&code, &seed)?;
    Ok((code, gadget))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Code { command } => match command {
            CodeCommand::Build { r, format } => {
                let (_, code) = entry_and_code(r)?;
                match format.as_str() {
                    "json" => {
                        let bundle = CodeBundle::from_code(&code, Some(format!("gb-r{r}")));
                        println!("{}", bundle.to_json().map_err(Failure::from)?);
                    }
                    "alist" => print!("{}", code_to_alist(&code)),
                    other => {
                        return Err(Failure::usage(format!(
                            "unknown format {other:?} (expected json or alist)"
                        )))
                    }
                }
            }
            CodeCommand::Params { r, distance_budget } => {
                let (entry, code) = entry_and_code(r)?;
                let (n, k, d) = entry.conjectured;
                let mut out = json!({
                    "schema": SCHEMA,
                    "r": r,
                    "n": code.num_qubits(),
                    "k": code.num_logicals(),
                    "conjectured": {"n": n, "k": k, "d": d},
                });
                if let Some(budget) = distance_budget {
                    let probe = |side| {
                        budget_search(&code, side, d - 1, budget).map(|w| w.weight)
                    };
                    out["distance_probe"] = json!({
                        "pattern_budget": budget,
                        "searched_below": d,
                        "lighter_x": probe(PauliSide::X),
                        "lighter_z": probe(PauliSide::Z),
                    });
                }
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
        },
        Command::Gadget { command } => match command {
            GadgetCommand::Build(args) => {
                let (_, gadget) = shifted_gadget(&args)?;
                let out = json!({
                    "schema": SCHEMA,
                    "r": args.r,
                    "seed": args.seed,
                    "shift": args.shift,
                    "seed_support": gadget.seed().support(),
                    "overlapping_checks": gadget.overlapping_checks(),
                    "gadget_qubits": gadget.num_gadget_qubits(),
                    "chi_checks": gadget.num_x_checks(),
                    "gauge_checks": gadget.num_gauge_checks(),
                    "physical_qubits": gadget.physical_qubits(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
            GadgetCommand::Verify(args) => {
                let (code, gadget) = shifted_gadget(&args)?;
                let report = verify_gadget(&code, &gadget)?;
                let out = json!({
                    "schema": SCHEMA,
                    "r": args.r,
                    "seed": args.seed,
                    "shift": args.shift,
                    "assertions": report
                        .assertions
                        .iter()
                        .map(|a| json!({"name": a.name, "passed": a.passed}))
                        .collect::<Vec<_>>(),
                    "all_passed": report.all_passed(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                if !report.all_passed() {
                    return Err(Failure::verification("gadget verification failed"));
                }
            }
        },
        Command::Cheeger(args) => {
            let (entry, code) = entry_and_code(args.r)?;
            let slot = seed_slot(&args.seed)?;
            let gadget = build_gadget(&code, &entry.seeds[slot])?;
            let graph = ContractedGraph::from_gadget(&gadget)?;
            let result = contracted_cheeger(&graph)?;
            let mut out = json!({
                "schema": SCHEMA,
                "r": args.r,
                "seed": args.seed,
                "vertices": graph.num_vertices(),
                "edges": graph.edges().len(),
                "h": result.h.to_string(),
                "h_value": result.h.as_f64(),
                "witness": result.witness,
                "expands": result.h.is_at_least_one(),
            });
            if !result.h.is_at_least_one() {
                let aug = augment_to_expander_with_hint(
                    &graph,
                    AUGMENTATION_BUDGET,
                    curated_augmentation(args.r, slot),
                )?;
                let fixed = contracted_cheeger(&graph.augmented(&aug.edges))?;
                out["augmentation"] = json!({
                    "edges": aug.edges,
                    "added_qubits": aug.added_qubits(),
                    "h_after": fixed.h.to_string(),
                });
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Command::Bridge(args) => {
            let (entry, code) = entry_and_code(args.r)?;
            let slots: Vec<usize> = args
                .targets
                .split(',')
                .map(|t| seed_slot(t.trim()))
                .collect::<Result<_, _>>()?;
            if slots.len() < 2 {
                return Err(Failure::usage("need at least two bridge targets"));
            }
            let gadgets: Vec<Gadget> = slots
                .iter()
                .map(|&s| build_gadget(&code, &entry.seeds[s]))
                .collect::<Result<_, _>>()?;
            let refs: Vec<&Gadget> = gadgets.iter().collect();
            let bridges: Vec<Bridge> = refs
                .windows(2)
                .map(|w| build_bridge(w[0], w[1]))
                .collect::<Result<_, _>>()?;
            let m = synthesize_product_measurement(&code, &refs, &bridges)?;
            let product_measured = m.code.contains(&m.target)?;
            let out = json!({
                "schema": SCHEMA,
                "r": args.r,
                "targets": args.targets,
                "merged_qubits": m.code.num_qubits(),
                "physical_qubits": m.physical_qubits,
                "bridge_qubits": m.bridges.iter().map(Bridge::num_bridge_qubits).sum::<usize>(),
                "logical_qubits": m.code.num_logicals(),
                "product_measured": product_measured,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if !product_measured {
                return Err(Failure::verification("product not in merged stabilizer group"));
            }
        }
        Command::Orbit { command } => match command {
            OrbitCommand::Verify { r } => {
                let (entry, code) = entry_and_code(r)?;
                let basis = aligned_logical_basis(&code, &entry).map_err(Failure::from)?;
                let mut sectors = Vec::new();
                let mut all_ok = true;
                for slot in 0..4 {
                    let rep = verify_sector_coverage(&code, &basis, &entry, slot)?;
                    all_ok &= rep.covers_window;
                    sectors.push(json!({
                        "seed": SEED_NAMES[slot],
                        "orbit_size": rep.orbit_size,
                        "distinct_actions": rep.distinct_actions,
                        "covers_window": rep.covers_window,
                    }));
                }
                let complete = complete_seed_set_check(&code, &basis, &entry, &[0, 1, 2, 3])?;
                all_ok &= complete.complete;
                let out = json!({
                    "schema": SCHEMA,
                    "r": r,
                    "sectors": sectors,
                    "distinct_products": complete.distinct_products,
                    "full_group_order": complete.full_group_order,
                    "exhaustive": complete.exhaustive,
                    "complete": complete.complete,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                if !all_ok {
                    return Err(Failure::verification("orbit verification failed"));
                }
            }
        },
        Command::Report { command } => match command {
            ReportCommand::Table1 { json: as_json, csv } => {
                let rows: Vec<_> = [5u32, 6, 7, 8]
                    .iter()
                    .map(|&r| overhead_row(r))
                    .collect::<Result<_, _>>()?;
                if as_json {
                    let out = json!({
                        "schema": SCHEMA,
                        "rows": rows.iter().map(|row| json!({
                            "r": row.r,
                            "n": row.n,
                            "k": row.k,
                            "d": row.d,
                            "code_block_qubits": row.code_block_qubits,
                            "gadget_qubits": row.gadget_qubits,
                            "bridge_qubits": row.bridge_qubits,
                            "total": row.total,
                            "per_logical": row.per_logical,
                            "surface_factor": row.surface_factor,
                            "augmentation_edges": row.augmentation_edges,
                        })).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                } else if csv {
                    println!(
                        "r,n,k,d,code_block_qubits,gadget_qubits,bridge_qubits,total,per_logical,surface_factor"
                    );
                    for row in &rows {
                        println!(
                            "{},{},{},{},{},{},{},{},{},{}",
                            row.r,
                            row.n,
                            row.k,
                            row.d,
                            row.code_block_qubits,
                            row.gadget_qubits,
                            row.bridge_qubits,
                            row.total,
                            row.per_logical,
                            row.surface_factor
                        );
                    }
                } else {
                    println!(
                        "{:>2} {:>6} {:>8} {:>8} {:>7} {:>6} {:>9}",
                        "r", "blocks", "gadgets", "bridges", "total", "per-k", "vs-surface"
                    );
                    for row in &rows {
                        println!(
                            "{:>2} {:>6} {:>8} {:>8} {:>7} {:>6} {:>9}",
                            row.r,
                            row.code_block_qubits,
                            row.gadget_qubits,
                            row.bridge_qubits,
                            row.total,
                            row.per_logical,
                            row.surface_factor
                        );
                    }
                }
            }
            ReportCommand::Fig1 { csv: _, r_min, r_max } => {
                if r_min < 5 || r_max < r_min {
                    return Err(Failure::usage("need 5 <= r_min <= r_max"));
                }
                println!("r,n,k,d,rate_times_d2");
                for p in rate_ratio_series(r_min, r_max) {
                    println!("{},{},{},{},{:.6}", p.r, p.n, p.k, p.d, p.ratio);
                }
            }
        },
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(f) = run(cli) {
        eprintln!("error: {}", f.message);
        std::process::exit(f.code);
    }
}
