//! Exact low-weight logical search and heuristic witness finding.
//!
//! The exact search enumerates information-set patterns of the codeword
//! space: in a reduced-echelon generator basis, a codeword's restriction
//! to the pivot columns is its combination indicator, so any codeword of
//! weight ≤ w has at most w pivot ones. Enumerating all combinations of
//! up to w generator rows is therefore exhaustive for weights ≤ w.

use crate::css::CssCode;
use crate::gf2::{BitMatrix, BitVector};
use crate::pauli::PauliOperator;

/// Which logical type to search for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PauliSide {
    X,
    Z,
}

/// A minimum-weight search result: the weight and a witness operator.
#[derive(Clone, Debug)]
pub struct DistanceWitness {
    pub weight: usize,
    pub witness: PauliOperator,
}

/// Precomputed row-space membership tester.
struct RowSpace {
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl RowSpace {
    fn new(m: &BitMatrix) -> Self {
        let (rref, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|r| rref.row(r)).collect();
        RowSpace { rows, pivots }
    }

    fn contains(&self, v: &BitVector) -> bool {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v.is_zero()
    }
}

fn search_matrices(code: &CssCode, side: PauliSide) -> (&BitMatrix, &BitMatrix) {
    match side {
        // X logicals: kernel of H_Z, modulo rows of H_X.
        PauliSide::X => (code.h_z(), code.h_x()),
        PauliSide::Z => (code.h_x(), code.h_z()),
    }
}

fn to_operator(side: PauliSide, v: BitVector) -> PauliOperator {
    match side {
        PauliSide::X => PauliOperator::from_x_vector(v),
        PauliSide::Z => PauliOperator::from_z_vector(v),
    }
}

/// Exhaustive minimum-weight logical search up to `w_max`.
///
/// Returns the minimum weight ≤ `w_max` of a codeword of the commuting
/// space outside the check row space, with the first witness found at
/// that weight in deterministic enumeration order, or `None`. Exact: no
/// logical of weight ≤ `w_max` is missed.
pub fn min_weight_logical(
    code: &CssCode,
    side: PauliSide,
    w_max: usize,
) -> Option<DistanceWitness> {
    assert!(w_max >= 1);
    let (kernel_of, modulo) = search_matrices(code, side);
    let generators = kernel_of.kernel_basis();
    let (gen_rref, _) = generators.rref();
    let dim = gen_rref.rank();
    let rows: Vec<BitVector> = (0..dim).map(|r| gen_rref.row(r)).collect();
    let stabilizers = RowSpace::new(modulo);

    let mut best: Option<DistanceWitness> = None;
    let mut combo: Vec<usize> = Vec::new();
    // Depth-first over combinations in lexicographic order, weight ≤ w_max
    // patterns only; prune when the current best weight t is already below
    // the pattern size (any codeword from a size-t' pattern has weight ≥ t').
    fn recurse(
        rows: &[BitVector],
        start: usize,
        remaining: usize,
        acc: &BitVector,
        combo: &mut Vec<usize>,
        w_max: usize,
        stabilizers: &RowSpace,
        best: &mut Option<DistanceWitness>,
        side: PauliSide,
    ) {
        if !combo.is_empty() {
            let w = acc.weight();
            let beats = best.as_ref().map_or(true, |b| w < b.weight);
            if w <= w_max && beats && !stabilizers.contains(acc) {
                *best = Some(DistanceWitness {
                    weight: w,
                    witness: to_operator(side, acc.clone()),
                });
            }
        }
        if remaining == 0 {
            return;
        }
        if let Some(b) = best.as_ref() {
            // A pattern of size combo.len()+1 cannot beat weight ≤ combo.len().
            if b.weight <= combo.len() {
                return;
            }
        }
        for i in start..rows.len() {
            combo.push(i);
            let next = acc.xor(&rows[i]);
            recurse(
                rows,
                i + 1,
                remaining - 1,
                &next,
                combo,
                w_max,
                stabilizers,
                best,
                side,
            );
            combo.pop();
        }
    }

    let n = code.num_qubits();
    recurse(
        &rows,
        0,
        w_max.min(dim),
        &BitVector::zeros(n),
        &mut combo,
        w_max,
        &stabilizers,
        &mut best,
        side,
    );
    best
}

/// Budgeted lower-bound probe: enumerates only patterns of up to
/// `pattern_budget` generator rows. Finding nothing of weight ≤ `w_max`
/// certifies only that the probe found nothing, not a true lower bound.
pub fn budget_search(
    code: &CssCode,
    side: PauliSide,
    w_max: usize,
    pattern_budget: usize,
) -> Option<DistanceWitness> {
    let (kernel_of, modulo) = search_matrices(code, side);
    let generators = kernel_of.kernel_basis();
    let (gen_rref, _) = generators.rref();
    let dim = gen_rref.rank();
    let rows: Vec<BitVector> = (0..dim).map(|r| gen_rref.row(r)).collect();
    let stabilizers = RowSpace::new(modulo);
    let n = code.num_qubits();

    let mut best: Option<DistanceWitness> = None;
    let mut stack: Vec<(usize, BitVector, usize)> = vec![(0, BitVector::zeros(n), 0)];
    while let Some((start, acc, depth)) = stack.pop() {
        if depth > 0 {
            let w = acc.weight();
            let beats = best.as_ref().map_or(true, |b| w < b.weight);
            if w <= w_max && beats && !stabilizers.contains(&acc) {
                best = Some(DistanceWitness {
                    weight: w,
                    witness: to_operator(side, acc.clone()),
                });
            }
        }
        if depth < pattern_budget.min(dim) {
            for i in (start..rows.len()).rev() {
                stack.push((i + 1, acc.xor(&rows[i]), depth + 1));
            }
        }
    }
    best
}

/// Deterministic plateau descent toward a light logical in the coset of
/// `start` modulo the check rows. XORing a check row of weight `w_r`
/// overlapping the current word in `v` positions changes the weight by
/// `w_r − 2v`; moves with non-negative gain are taken, ties broken by a
/// fixed-seed xorshift stream so runs reproduce.
pub fn descend_witness(
    code: &CssCode,
    side: PauliSide,
    start: &PauliOperator,
    steps: usize,
    rng_seed: u64,
) -> DistanceWitness {
    let rows_matrix = match side {
        PauliSide::X => code.h_x(),
        PauliSide::Z => code.h_z(),
    };
    let rows: Vec<BitVector> = rows_matrix.row_vectors();
    let mut v = match side {
        PauliSide::X => start.x_vector().clone(),
        PauliSide::Z => start.z_vector().clone(),
    };
    let mut best = v.clone();
    let mut best_w = v.weight();
    let mut state = rng_seed.wrapping_mul(0x9e3779b97f4a7c15) | 1;
    let mut next_rand = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..steps {
        let mut top_gain: i64 = i64::MIN;
        let mut candidates: Vec<usize> = Vec::new();
        for (j, row) in rows.iter().enumerate() {
            let overlap = row.and(&v).weight() as i64;
            let gain = 2 * overlap - row.weight() as i64;
            if gain > top_gain {
                top_gain = gain;
                candidates.clear();
                candidates.push(j);
            } else if gain == top_gain {
                candidates.push(j);
            }
        }
        if top_gain < 0 || candidates.is_empty() {
            break;
        }
        let j = candidates[(next_rand() % candidates.len() as u64) as usize];
        v.xor_assign(&rows[j]);
        let w = v.weight();
        if w < best_w && w > 0 {
            best_w = w;
            best = v.clone();
        }
    }
    DistanceWitness {
        weight: best_w,
        witness: to_operator(side, best),
    }
}
