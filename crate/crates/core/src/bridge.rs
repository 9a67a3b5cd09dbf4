//! Bridging gadgets to measure products of logical operators.
//!
//! Two gadgets for operators of weights w₁ ≤ w₂ are joined by w₁ bridge
//! qubits, one per paired χ-check; w₁ − 1 bridge gauge checks tie the
//! bridge-qubit parities together. The merged stabilizer group measures
//! the product of the two seeds. Pairs of same-type gadgets attach bridge
//! qubits with that Pauli type; opposite-type pairs attach them as Y on
//! both sides, which keeps every pairwise commutation intact.

use crate::css::CssCode;
use crate::error::Error;
use crate::gf2::{BitMatrix, BitVector};
use crate::gadget::Gadget;
use crate::pauli::{symplectic_product, PauliOperator};

/// A general (not necessarily CSS) stabilizer code given by its
/// generating Pauli operators.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
}

impl StabilizerCode {
    /// Validate pairwise commutation and store the generators.
    pub fn new(n: usize, generators: Vec<PauliOperator>) -> Result<Self, Error> {
        for g in &generators {
            if g.num_qubits() != n {
                return Err(Error::LengthMismatch {
                    left: g.num_qubits(),
                    right: n,
                });
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if symplectic_product(&generators[i], &generators[j])? {
                    return Err(Error::CommutationViolation { x_row: i, z_row: j });
                }
            }
        }
        Ok(StabilizerCode { n, generators })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Symplectic (x|z) matrix of the generators.
    pub fn symplectic_matrix(&self) -> BitMatrix {
        let rows: Vec<BitVector> = self
            .generators
            .iter()
            .map(|g| {
                let mut v = BitVector::zeros(2 * self.n);
                for c in g.x_vector().ones() {
                    v.set(c, true);
                }
                for c in g.z_vector().ones() {
                    v.set(self.n + c, true);
                }
                v
            })
            .collect();
        BitMatrix::from_rows(&rows, 2 * self.n)
    }

    /// Logical count n − rank of the generator matrix.
    pub fn num_logicals(&self) -> usize {
        self.n - self.symplectic_matrix().rank()
    }

    /// Whether `p` is a product of generators.
    pub fn contains(&self, p: &PauliOperator) -> Result<bool, Error> {
        if p.num_qubits() != self.n {
            return Err(Error::LengthMismatch {
                left: p.num_qubits(),
                right: self.n,
            });
        }
        let mut v = BitVector::zeros(2 * self.n);
        for c in p.x_vector().ones() {
            v.set(c, true);
        }
        for c in p.z_vector().ones() {
            v.set(self.n + c, true);
        }
        Ok(self.symplectic_matrix().row_space_contains(&v))
    }

    /// Whether `p` commutes with every generator.
    pub fn commutes_with_all(&self, p: &PauliOperator) -> Result<bool, Error> {
        for g in &self.generators {
            if symplectic_product(g, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The bridge between two attached gadgets.
#[derive(Clone, Debug)]
pub struct Bridge {
    /// Indices into each gadget's χ list, paired positionally.
    pub pairs: Vec<(usize, usize)>,
    /// Surplus χ-checks of the heavier gadget, grouped in twos onto the
    /// last bridge qubit's partner pairs.
    pub surplus_pairs: Vec<(usize, usize)>,
}

impl Bridge {
    pub fn num_bridge_qubits(&self) -> usize {
        self.pairs.len()
    }

    pub fn num_bridge_gauge_checks(&self) -> usize {
        self.pairs.len().saturating_sub(1)
    }

    /// Physical cost: one data qubit per bridge qubit plus one ancilla
    /// per bridge gauge check.
    pub fn physical_qubits(&self) -> usize {
        2 * self.pairs.len() - 1
    }
}

/// Pair the χ-checks of two gadgets: the first w = min(w₁, w₂) of each in
/// ascending support order, with the heavier gadget's surplus folded in
/// even-sized groups onto the final pair. Odd surplus is rejected.
pub fn build_bridge(first: &Gadget, second: &Gadget) -> Result<Bridge, Error> {
    let (w1, w2) = (first.num_x_checks(), second.num_x_checks());
    let w = w1.min(w2);
    let surplus = w1.max(w2) - w;
    if surplus % 2 != 0 {
        return Err(Error::OddBridgeSurplus(surplus));
    }
    let pairs = (0..w).map(|t| (t.min(w1 - 1), t.min(w2 - 1))).collect();
    let mut surplus_pairs = Vec::new();
    let mut next = w;
    while next + 1 < w.max(w1.max(w2)) {
        surplus_pairs.push((next, next + 1));
        next += 2;
    }
    Ok(Bridge {
        pairs,
        surplus_pairs,
    })
}

/// A fully merged multi-gadget measurement system.
#[derive(Clone, Debug)]
pub struct ProductMeasurement {
    /// Qubit layout: base code, then each gadget's κ block, then each
    /// bridge's qubits.
    pub code: StabilizerCode,
    /// The measured product, embedded on the merged qubit set.
    pub target: PauliOperator,
    pub num_base_qubits: usize,
    pub bridges: Vec<Bridge>,
    /// Physical qubits: gadgets (with ancillas) plus bridges.
    pub physical_qubits: usize,
}

struct Layout {
    kappa_offsets: Vec<usize>,
    bridge_offsets: Vec<usize>,
    total: usize,
}

fn layout(n_base: usize, gadgets: &[&Gadget], bridges: &[Bridge]) -> Layout {
    let mut kappa_offsets = Vec::with_capacity(gadgets.len());
    let mut at = n_base;
    for g in gadgets {
        kappa_offsets.push(at);
        at += g.num_gadget_qubits();
    }
    let mut bridge_offsets = Vec::with_capacity(bridges.len());
    for b in bridges {
        bridge_offsets.push(at);
        at += b.num_bridge_qubits();
    }
    Layout {
        kappa_offsets,
        bridge_offsets,
        total: at,
    }
}

fn chi_vector(gadget: &Gadget, i: usize, offset: usize, total: usize) -> BitVector {
    let mut v = BitVector::zeros(total);
    v.set(gadget.support()[i], true);
    for jj in gadget.incidence().row(i).ones() {
        v.set(offset + jj, true);
    }
    v
}

/// Build the merged measurement system for the product of the gadget
/// seeds, bridging consecutive gadgets in the given order.
pub fn synthesize_product_measurement(
    code: &CssCode,
    gadgets: &[&Gadget],
    bridges: &[Bridge],
) -> Result<ProductMeasurement, Error> {
    if gadgets.is_empty() {
        return Err(Error::EmptyTargets);
    }
    assert_eq!(bridges.len() + 1, gadgets.len());
    let n = code.num_qubits();
    for g in gadgets {
        if g.seed().num_qubits() != n {
            return Err(Error::BaseCodeMismatch);
        }
    }
    for w in gadgets.windows(2) {
        if std::ptr::eq(w[0].incidence(), w[1].incidence()) && w[0].seed() == w[1].seed() {
            return Err(Error::SelfBridge);
        }
    }
    let lay = layout(n, gadgets, bridges);
    let total = lay.total;
    let mut generators: Vec<PauliOperator> = Vec::new();

    // Base checks, with κ extensions for every gadget of the opposite type.
    for r in 0..code.h_x().rows() {
        let mut v = code.h_x().row(r).extended(total);
        for (g, &off) in gadgets.iter().zip(&lay.kappa_offsets) {
            if !g.seed_is_x() {
                if let Some(jj) = g.overlapping_checks().iter().position(|&j| j == r) {
                    v.set(off + jj, true);
                }
            }
        }
        generators.push(PauliOperator::from_x_vector(v));
    }
    for r in 0..code.h_z().rows() {
        let mut v = code.h_z().row(r).extended(total);
        for (g, &off) in gadgets.iter().zip(&lay.kappa_offsets) {
            if g.seed_is_x() {
                if let Some(jj) = g.overlapping_checks().iter().position(|&j| j == r) {
                    v.set(off + jj, true);
                }
            }
        }
        generators.push(PauliOperator::from_z_vector(v));
    }

    // Per-gadget gauge checks on the κ blocks.
    for (g, &off) in gadgets.iter().zip(&lay.kappa_offsets) {
        for row in 0..g.gauge().rows() {
            let mut v = BitVector::zeros(total);
            for jj in g.gauge().row(row).ones() {
                v.set(off + jj, true);
            }
            generators.push(if g.seed_is_x() {
                PauliOperator::from_z_vector(v)
            } else {
                PauliOperator::from_x_vector(v)
            });
        }
    }

    // χ-checks, with bridge attachments. χ-check i of gadget g gets the
    // bridge qubit of each pair it participates in; attachment Pauli is
    // the gadget's own type when the bridged pair is same-type, Y when
    // the pair is mixed.
    let mut chi_extra_x: Vec<Vec<Vec<usize>>> = gadgets
        .iter()
        .map(|g| vec![Vec::new(); g.num_x_checks()])
        .collect();
    let mut chi_extra_z: Vec<Vec<Vec<usize>>> = gadgets
        .iter()
        .map(|g| vec![Vec::new(); g.num_x_checks()])
        .collect();
    for (b, bridge) in bridges.iter().enumerate() {
        let (ga, gb) = (b, b + 1);
        let mixed = gadgets[ga].seed_is_x() != gadgets[gb].seed_is_x();
        let off = lay.bridge_offsets[b];
        let mut assign = |gi: usize, chi: usize, qubit: usize| {
            let is_x = gadgets[gi].seed_is_x();
            if mixed {
                chi_extra_x[gi][chi].push(qubit);
                chi_extra_z[gi][chi].push(qubit);
            } else if is_x {
                chi_extra_x[gi][chi].push(qubit);
            } else {
                chi_extra_z[gi][chi].push(qubit);
            }
        };
        for (t, &(i1, i2)) in bridge.pairs.iter().enumerate() {
            assign(ga, i1, off + t);
            assign(gb, i2, off + t);
        }
        // Surplus χ-checks of the heavier gadget share the last bridge
        // qubit pairwise so parities still cancel.
        let heavier = if gadgets[ga].num_x_checks() > gadgets[gb].num_x_checks() {
            ga
        } else {
            gb
        };
        let last = off + bridge.pairs.len() - 1;
        for &(s1, s2) in &bridge.surplus_pairs {
            assign(heavier, s1, last);
            assign(heavier, s2, last);
        }
    }
    let mut chi_ops: Vec<PauliOperator> = Vec::new();
    for (gi, (g, &off)) in gadgets.iter().zip(&lay.kappa_offsets).enumerate() {
        for i in 0..g.num_x_checks() {
            let base = chi_vector(g, i, off, total);
            let mut x = if g.seed_is_x() {
                base.clone()
            } else {
                BitVector::zeros(total)
            };
            let mut z = if g.seed_is_x() {
                BitVector::zeros(total)
            } else {
                base
            };
            for &q in &chi_extra_x[gi][i] {
                x.flip(q);
            }
            for &q in &chi_extra_z[gi][i] {
                z.flip(q);
            }
            chi_ops.push(PauliOperator::new(x, z));
        }
    }
    // χ-checks of opposite-type gadgets anticommute where their seeds'
    // supports overlap (X vs Z on the shared base qubit). Each such pair
    // is merged into its product, a single check carrying Y there; repeat
    // until the χ set is mutually commuting.
    'merge: loop {
        for i in 0..chi_ops.len() {
            for j in i + 1..chi_ops.len() {
                if symplectic_product(&chi_ops[i], &chi_ops[j])? {
                    let merged = chi_ops[i].multiply(&chi_ops[j])?;
                    chi_ops.swap_remove(j);
                    chi_ops[i] = merged;
                    continue 'merge;
                }
            }
        }
        break;
    }
    generators.extend(chi_ops);

    // Bridge gauge checks: adjacent bridge-qubit pair {b_t, b_{t+1}} plus
    // κ-tails cancelling the anticommutation with each side's χ-checks.
    // The tail for gadget g is a κ combination u with M u = e_{i_t}+e_{i_{t+1}}
    // over g's incidence M; its Pauli type is opposite to g's χ type. The
    // pair Pauli must anticommute with the attachment Pauli of both sides:
    // Z works for X–X and mixed bridges (Y attachments), X for Z–Z.
    for (b, bridge) in bridges.iter().enumerate() {
        let (ga, gb) = (b, b + 1);
        let off = lay.bridge_offsets[b];
        let both_z = !gadgets[ga].seed_is_x() && !gadgets[gb].seed_is_x();
        let heavier = if gadgets[ga].num_x_checks() > gadgets[gb].num_x_checks() {
            ga
        } else {
            gb
        };
        let last_t = bridge.pairs.len().wrapping_sub(2);
        for t in 0..bridge.pairs.len().saturating_sub(1) {
            let mut x = BitVector::zeros(total);
            let mut z = BitVector::zeros(total);
            if both_z {
                x.set(off + t, true);
                x.set(off + t + 1, true);
            } else {
                z.set(off + t, true);
                z.set(off + t + 1, true);
            }
            for &(gi, pair_index) in &[(ga, 0usize), (gb, 1usize)] {
                let g = gadgets[gi];
                let goff = lay.kappa_offsets[gi];
                let (i_t, i_t1) = (
                    pick(bridge.pairs[t], pair_index),
                    pick(bridge.pairs[t + 1], pair_index),
                );
                let mut rhs = BitVector::zeros(g.num_x_checks());
                rhs.flip(i_t);
                rhs.flip(i_t1);
                // Surplus χ-checks attach to the final bridge qubit, so
                // the last gauge check must cancel them too.
                if gi == heavier && t == last_t {
                    for &(s1, s2) in &bridge.surplus_pairs {
                        rhs.flip(s1);
                        rhs.flip(s2);
                    }
                }
                // Solve incidence · u = rhs for the κ-tail u.
                let u = solve_columns(g.incidence(), &rhs)
                    .expect("gadget incidence spans even χ-index sums");
                for jj in u.ones() {
                    if g.seed_is_x() {
                        z.flip(goff + jj);
                    } else {
                        x.flip(goff + jj);
                    }
                }
            }
            generators.push(PauliOperator::new(x, z));
        }
    }

    let code_merged = StabilizerCode::new(total, generators)?;
    let mut target = gadgets[0].seed().embedded(total);
    for g in &gadgets[1..] {
        target = target.multiply(&g.seed().embedded(total))?;
    }
    let physical_qubits = gadgets.iter().map(|g| g.physical_qubits()).sum::<usize>()
        + bridges.iter().map(|b| b.physical_qubits()).sum::<usize>();
    Ok(ProductMeasurement {
        code: code_merged,
        target,
        num_base_qubits: n,
        bridges: bridges.to_vec(),
        physical_qubits,
    })
}

fn pick(pair: (usize, usize), index: usize) -> usize {
    if index == 0 {
        pair.0
    } else {
        pair.1
    }
}

/// Solve M u = b for column combination u (b over rows of M).
fn solve_columns(m: &BitMatrix, b: &BitVector) -> Option<BitVector> {
    m.transpose().solve_combination(b)
}
