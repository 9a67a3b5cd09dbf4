//! Physical-qubit overhead accounting for the measurement scheme.
//!
//! A full computing block provisions two code blocks, one measurement
//! gadget per seed (with ancillas and any expansion-restoring
//! augmentation), and one bridge per gadget for product measurements.
//! The derived figure of merit is physical qubits per logical qubit and
//! the ratio to a surface-code layout of matched distance, which needs
//! roughly 4d² physical qubits per logical qubit.

use crate::error::Error;
use crate::expansion::{augment_to_expander_with_hint, contracted_cheeger, ContractedGraph};
use crate::gadget::build_gadget;
use crate::gb::{catalog_code, conjectured_params};

/// Default cap on augmentation edges per gadget.
pub const AUGMENTATION_BUDGET: usize = 16;

/// Precomputed 10-edge augmentations for the r = 8 gadget graphs, found
/// by offline annealing over the exact violated-subset constraints. The
/// online greedy cover stops at 11–12 edges for these graphs; the curated
/// sets are re-certified against the constraints and by an exhaustive
/// Cheeger scan every time they are used.
const R8_AUGMENTATIONS: [[(usize, usize); 10]; 4] = [
    [
        (0, 10),
        (0, 12),
        (0, 21),
        (0, 23),
        (10, 12),
        (10, 17),
        (10, 19),
        (12, 21),
        (12, 23),
        (17, 19),
    ],
    [
        (1, 17),
        (7, 25),
        (9, 17),
        (9, 24),
        (10, 17),
        (14, 20),
        (15, 22),
        (17, 23),
        (19, 20),
        (23, 25),
    ],
    [
        (0, 15),
        (0, 22),
        (9, 12),
        (9, 22),
        (10, 21),
        (10, 22),
        (11, 15),
        (11, 22),
        (12, 25),
        (21, 25),
    ],
    [
        (7, 14),
        (7, 16),
        (9, 14),
        (9, 16),
        (12, 14),
        (12, 25),
        (14, 25),
        (16, 18),
        (16, 25),
        (18, 25),
    ],
];

/// The curated augmentation for catalog gadget (`r`, seed slot), if any.
pub fn curated_augmentation(r: u32, slot: usize) -> Option<&'static [(usize, usize)]> {
    if r == 8 && slot < 4 {
        Some(&R8_AUGMENTATIONS[slot])
    } else {
        None
    }
}

/// One overhead-accounting row for a catalog code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverheadRow {
    pub r: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Two code blocks.
    pub code_block_qubits: usize,
    /// Four gadgets: 2|𝒮| + 1 each plus two qubits per added edge.
    pub gadget_qubits: usize,
    /// Four bridges of 2w − 1 qubits for seed weight w.
    pub bridge_qubits: usize,
    pub total: usize,
    /// Physical qubits per logical qubit, rounded to nearest.
    pub per_logical: usize,
    /// Matched-distance surface-code footprint 4d² per logical, divided
    /// by this scheme's per-logical cost, rounded to nearest.
    pub surface_factor: usize,
    /// Added edges per gadget, in seed-slot order.
    pub augmentation_edges: [usize; 4],
}

fn round_div(num: usize, den: usize) -> usize {
    (2 * num + den) / (2 * den)
}

/// Build all components for catalog code `r` and account their qubits.
pub fn overhead_row(r: u32) -> Result<OverheadRow, Error> {
    let entry = catalog_code(r)?;
    let code = entry.build()?;
    let (n, k, d) = entry.conjectured;
    let mut gadget_qubits = 0usize;
    let mut bridge_qubits = 0usize;
    let mut augmentation_edges = [0usize; 4];
    for (slot, seed) in entry.seeds.iter().enumerate() {
        let gadget = build_gadget(&code, seed)?;
        let graph = ContractedGraph::from_gadget(&gadget)?;
        let base_h = contracted_cheeger(&graph)?;
        let edges = if base_h.h.is_at_least_one() {
            0
        } else {
            augment_to_expander_with_hint(
                &graph,
                AUGMENTATION_BUDGET,
                curated_augmentation(r, slot),
            )?
            .edges
            .len()
        };
        augmentation_edges[slot] = edges;
        gadget_qubits += gadget.physical_qubits() + 2 * edges;
        bridge_qubits += 2 * seed.weight() - 1;
    }
    let code_block_qubits = 2 * n;
    let total = code_block_qubits + gadget_qubits + bridge_qubits;
    let per_logical = round_div(total, k);
    let surface_factor = round_div(4 * d * d * k, total);
    Ok(OverheadRow {
        r,
        n,
        k,
        d,
        code_block_qubits,
        gadget_qubits,
        bridge_qubits,
        total,
        per_logical,
        surface_factor,
        augmentation_edges,
    })
}

/// Encoding-efficiency point: the distance-weighted rate k·d²/n, the
/// figure that a surface-code patch holds constant at 1/2.
#[derive(Clone, Debug)]
pub struct RatePoint {
    pub r: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub ratio: f64,
}

/// k·d²/n over a range of family parameters, using the family's
/// conjectured distance formula.
pub fn rate_ratio_series(r_min: u32, r_max: u32) -> Vec<RatePoint> {
    (r_min..=r_max)
        .map(|r| {
            let (n, k, d) = conjectured_params(r);
            RatePoint {
                r,
                n,
                k,
                d,
                ratio: (k * d * d) as f64 / n as f64,
            }
        })
        .collect()
}

/// The constant surface-code reference value of k·d²/n.
pub const SURFACE_CODE_RATE_RATIO: f64 = 0.5;
