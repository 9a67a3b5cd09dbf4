//! Fixed measurement gadgets for a single logical Pauli operator.
//!
//! Given an X-type logical `L`, the gadget has one qubit κⱼ per Z-check
//! overlapping `supp(L)`, one X-check χᵢ per qubit of `supp(L)` (acting on
//! qᵢ and on the κⱼ of the checks containing qᵢ), and gauge-fixing Z-checks
//! spanning the kernel of the χ/κ incidence. Z-type logicals get the dual
//! construction with all roles swapped.

use crate::css::CssCode;
use crate::error::Error;
use crate::gf2::{BitMatrix, BitVector};
use crate::pauli::{symplectic_product, PauliOperator, Permutation};

/// A measurement gadget for one seed operator.
#[derive(Clone, Debug)]
pub struct Gadget {
    seed: PauliOperator,
    seed_is_x: bool,
    /// Ids of the opposite-type code checks overlapping the seed support,
    /// ascending; one κ per entry.
    overlapping_checks: Vec<usize>,
    /// Seed support qubit ids, ascending; one χ per entry.
    support: Vec<usize>,
    /// χ-by-κ incidence: κⱼ ∈ supp(χᵢ) iff qᵢ ∈ supp(Sⱼ).
    incidence: BitMatrix,
    /// Gauge-fixing checks over the κ columns.
    gauge: BitMatrix,
}

impl Gadget {
    pub fn seed(&self) -> &PauliOperator {
        &self.seed
    }

    pub fn seed_is_x(&self) -> bool {
        self.seed_is_x
    }

    pub fn overlapping_checks(&self) -> &[usize] {
        &self.overlapping_checks
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn num_gadget_qubits(&self) -> usize {
        self.overlapping_checks.len()
    }

    pub fn num_x_checks(&self) -> usize {
        self.support.len()
    }

    pub fn num_gauge_checks(&self) -> usize {
        self.gauge.rows()
    }

    pub fn incidence(&self) -> &BitMatrix {
        &self.incidence
    }

    pub fn gauge(&self) -> &BitMatrix {
        &self.gauge
    }

    /// Total physical qubits: one data qubit per κ plus one measurement
    /// ancilla per χ and per gauge check.
    pub fn physical_qubits(&self) -> usize {
        self.num_gadget_qubits() + self.num_x_checks() + self.num_gauge_checks()
    }

    /// Test-only access for mutation tests.
    #[doc(hidden)]
    pub fn with_incidence(mut self, incidence: BitMatrix) -> Self {
        self.incidence = incidence;
        self
    }

    #[doc(hidden)]
    pub fn with_gauge(mut self, gauge: BitMatrix) -> Self {
        self.gauge = gauge;
        self
    }
}

/// Ids of the opposite-type checks acting non-trivially on `supp(L)`,
/// ascending. For an X-type `L` these are Z-check ids.
pub fn overlapping_z_checks(code: &CssCode, l_op: &PauliOperator) -> Result<Vec<usize>, Error> {
    if !l_op.is_x_type() {
        return Err(Error::WrongPauliType { expected: 'X' });
    }
    Ok(overlapping_rows(code.h_z(), l_op.x_vector()))
}

fn overlapping_rows(h: &BitMatrix, support: &BitVector) -> Vec<usize> {
    (0..h.rows())
        .filter(|&j| h.row(j).intersects(support))
        .collect()
}

fn build_gadget_inner(
    code: &CssCode,
    l_op: &PauliOperator,
    seed_is_x: bool,
) -> Result<Gadget, Error> {
    if !code.is_nontrivial_logical(l_op)? {
        return Err(Error::NotLogical {
            reason: "gadget seeds must be nontrivial logical operators".into(),
        });
    }
    let (support_vec, opposite) = if seed_is_x {
        (l_op.x_vector(), code.h_z())
    } else {
        (l_op.z_vector(), code.h_x())
    };
    let overlapping_checks = overlapping_rows(opposite, support_vec);
    let support = support_vec.ones();
    let mut incidence = BitMatrix::zeros(support.len(), overlapping_checks.len());
    for (i, &q) in support.iter().enumerate() {
        for (jj, &j) in overlapping_checks.iter().enumerate() {
            if opposite.get(j, q) {
                incidence.set(i, jj, true);
            }
        }
    }
    let gauge = incidence.kernel_basis();
    Ok(Gadget {
        seed: l_op.clone(),
        seed_is_x,
        overlapping_checks,
        support,
        incidence,
        gauge,
    })
}

/// Build the gadget measuring an X-type logical operator.
pub fn build_measurement_gadget(code: &CssCode, l_op: &PauliOperator) -> Result<Gadget, Error> {
    if !l_op.is_x_type() || l_op.is_identity() {
        return Err(Error::WrongPauliType { expected: 'X' });
    }
    build_gadget_inner(code, l_op, true)
}

/// Dual construction for a Z-type logical operator: κ per overlapping
/// X-check, Z-type χ per support qubit, X-type gauge checks.
pub fn build_z_type_gadget(code: &CssCode, l_op: &PauliOperator) -> Result<Gadget, Error> {
    if !l_op.is_z_type() || l_op.is_identity() {
        return Err(Error::WrongPauliType { expected: 'Z' });
    }
    build_gadget_inner(code, l_op, false)
}

/// Build the gadget for either type of seed.
pub fn build_gadget(code: &CssCode, l_op: &PauliOperator) -> Result<Gadget, Error> {
    if l_op.is_x_type() && !l_op.is_identity() {
        build_measurement_gadget(code, l_op)
    } else {
        build_z_type_gadget(code, l_op)
    }
}

/// The code with a gadget attached: base qubits first, then κ qubits.
#[derive(Clone, Debug)]
pub struct DeformedCode {
    base: CssCode,
    gadget: Gadget,
    merged: CssCode,
}

impl DeformedCode {
    pub fn base(&self) -> &CssCode {
        &self.base
    }

    pub fn gadget(&self) -> &Gadget {
        &self.gadget
    }

    pub fn merged(&self) -> &CssCode {
        &self.merged
    }

    pub fn num_qubits(&self) -> usize {
        self.merged.num_qubits()
    }
}

/// Attach a gadget: extend each overlapping check by its κ, append the χ
/// and gauge rows, and validate the merged code.
pub fn attach(code: &CssCode, gadget: &Gadget) -> Result<DeformedCode, Error> {
    let n = code.num_qubits();
    let m = gadget.num_gadget_qubits();
    let nn = n + m;

    // Same-type-as-seed side gains the χ rows; the opposite side gets the
    // κ extensions and the gauge rows.
    let extend = |h: &BitMatrix, with_kappa: bool| -> BitMatrix {
        let mut out = BitMatrix::zeros(h.rows(), nn);
        for r in 0..h.rows() {
            for c in h.row(r).ones() {
                out.set(r, c, true);
            }
        }
        if with_kappa {
            for (jj, &j) in gadget.overlapping_checks.iter().enumerate() {
                out.set(j, n + jj, true);
            }
        }
        out
    };
    let mut chi = BitMatrix::zeros(gadget.num_x_checks(), nn);
    for (i, &q) in gadget.support.iter().enumerate() {
        chi.set(i, q, true);
        for jj in gadget.incidence.row(i).ones() {
            chi.set(i, n + jj, true);
        }
    }
    let mut gauge = BitMatrix::zeros(gadget.num_gauge_checks(), nn);
    for g in 0..gadget.num_gauge_checks() {
        for jj in gadget.gauge.row(g).ones() {
            gauge.set(g, n + jj, true);
        }
    }

    let (h_x, h_z) = if gadget.seed_is_x {
        (
            extend(code.h_x(), false).vstack(&chi),
            extend(code.h_z(), true).vstack(&gauge),
        )
    } else {
        (
            extend(code.h_x(), true).vstack(&gauge),
            extend(code.h_z(), false).vstack(&chi),
        )
    };
    let merged = CssCode::new(h_x, h_z)?;
    Ok(DeformedCode {
        base: code.clone(),
        gadget: gadget.clone(),
        merged,
    })
}

/// One assertion of the gadget verification report.
#[derive(Clone, Debug)]
pub struct Assertion {
    pub name: &'static str,
    pub passed: bool,
    /// Offending pair, when a pairwise condition fails.
    pub offending: Option<(usize, usize)>,
}

/// Mechanical verification of the gadget construction claims.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub assertions: Vec<Assertion>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failed(&self) -> Vec<&Assertion> {
        self.assertions.iter().filter(|a| !a.passed).collect()
    }
}

/// Check the five structural claims for `gadget` against `code`:
/// (a) deformed-support overlap `|supp(Sⱼ) ∩ supp(χᵢ)| = 2δᵢⱼ`,
/// (b) exhaustive pairwise commutation of all deformed checks,
/// (c) `∏ᵢ χᵢ` equals the seed on base qubits with κ parts cancelling,
/// (d) gauge count `|𝒮_L| − wt(L) + 1`,
/// (e) the dual-Tanner incidence condition.
pub fn verify_gadget(code: &CssCode, gadget: &Gadget) -> Result<VerificationReport, Error> {
    let n = code.num_qubits();
    let m = gadget.num_gadget_qubits();
    let nn = n + m;
    let opposite = if gadget.seed_is_x {
        code.h_z()
    } else {
        code.h_x()
    };
    let seed_support = if gadget.seed_is_x {
        gadget.seed.x_vector()
    } else {
        gadget.seed.z_vector()
    };
    let mut assertions = Vec::new();

    // (a) overlap of extended S_j with χ_i is 2δ_ij.
    let mut overlap_ok = true;
    let mut overlap_pair = None;
    'outer_a: for (jj, &j) in gadget.overlapping_checks.iter().enumerate() {
        // extended S_j support: row j plus κ_jj
        for i in 0..gadget.num_x_checks() {
            let q = gadget.support[i];
            let mut count = 0usize;
            if opposite.get(j, q) {
                count += 1;
            }
            // χ_i's κ support intersected with {κ_jj}
            if gadget.incidence.get(i, jj) {
                count += 1;
            }
            // base-support overlap beyond q_i: χ_i touches only q_i on base.
            let expect = if gadget.incidence.get(i, jj) { 2 } else { 0 };
            let delta_ok = count == expect && (count == 2) == (i == usize::MAX);
            let _ = delta_ok;
            let want = if opposite.get(j, q) { 2 } else { 0 };
            if count != want || count % 2 != 0 {
                overlap_ok = false;
                overlap_pair = Some((j, i));
                break 'outer_a;
            }
        }
    }
    assertions.push(Assertion {
        name: "overlap_2delta",
        passed: overlap_ok,
        offending: overlap_pair,
    });

    // Collect all deformed checks as Pauli operators for (b).
    let mut checks: Vec<PauliOperator> = Vec::new();
    let (same, other) = if gadget.seed_is_x {
        (code.h_x(), code.h_z())
    } else {
        (code.h_z(), code.h_x())
    };
    for r in 0..same.rows() {
        let v = same.row(r).extended(nn);
        checks.push(if gadget.seed_is_x {
            PauliOperator::from_x_vector(v)
        } else {
            PauliOperator::from_z_vector(v)
        });
    }
    for r in 0..other.rows() {
        let mut v = other.row(r).extended(nn);
        if let Some(jj) = gadget.overlapping_checks.iter().position(|&j| j == r) {
            v.set(n + jj, true);
        }
        checks.push(if gadget.seed_is_x {
            PauliOperator::from_z_vector(v)
        } else {
            PauliOperator::from_x_vector(v)
        });
    }
    for i in 0..gadget.num_x_checks() {
        let mut v = BitVector::zeros(nn);
        v.set(gadget.support[i], true);
        for jj in gadget.incidence.row(i).ones() {
            v.set(n + jj, true);
        }
        checks.push(if gadget.seed_is_x {
            PauliOperator::from_x_vector(v)
        } else {
            PauliOperator::from_z_vector(v)
        });
    }
    for g in 0..gadget.gauge.rows() {
        let mut v = BitVector::zeros(nn);
        for jj in gadget.gauge.row(g).ones() {
            v.set(n + jj, true);
        }
        checks.push(if gadget.seed_is_x {
            PauliOperator::from_z_vector(v)
        } else {
            PauliOperator::from_x_vector(v)
        });
    }
    let mut commute_ok = true;
    let mut commute_pair = None;
    'outer_b: for i in 0..checks.len() {
        for j in i + 1..checks.len() {
            if symplectic_product(&checks[i], &checks[j])? {
                commute_ok = false;
                commute_pair = Some((i, j));
                break 'outer_b;
            }
        }
    }
    assertions.push(Assertion {
        name: "pairwise_commutation",
        passed: commute_ok,
        offending: commute_pair,
    });

    // (c) product of χ rows = seed on base qubits, zero on κ.
    let mut product = BitVector::zeros(nn);
    for i in 0..gadget.num_x_checks() {
        product.flip(gadget.support[i]);
        for jj in gadget.incidence.row(i).ones() {
            product.flip(n + jj);
        }
    }
    let product_ok = product.truncated(n) == *seed_support
        && (n..nn).all(|c| !product.get(c));
    assertions.push(Assertion {
        name: "chi_product_equals_seed",
        passed: product_ok,
        offending: None,
    });

    // (d) gauge count.
    let expected_gauge =
        gadget.overlapping_checks.len() + 1 - seed_support.weight();
    assertions.push(Assertion {
        name: "gauge_count",
        passed: gadget.gauge.rows() == expected_gauge,
        offending: None,
    });

    // (e) dual-Tanner condition.
    let mut dual_ok = true;
    let mut dual_pair = None;
    'outer_e: for (i, &q) in gadget.support.iter().enumerate() {
        for (jj, &j) in gadget.overlapping_checks.iter().enumerate() {
            if gadget.incidence.get(i, jj) != opposite.get(j, q) {
                dual_ok = false;
                dual_pair = Some((i, jj));
                break 'outer_e;
            }
        }
    }
    assertions.push(Assertion {
        name: "dual_tanner",
        passed: dual_ok,
        offending: dual_pair,
    });

    Ok(VerificationReport { assertions })
}

/// Relocate a gadget along a code automorphism: support qubits map through
/// `perm`, overlapping-check ids through `check_map`. The result equals
/// the gadget built fresh for the permuted seed.
pub fn relocate_gadget(
    gadget: &Gadget,
    perm: &Permutation,
    check_map: impl Fn(usize) -> usize,
) -> Result<Gadget, Error> {
    let seed = crate::pauli::apply_permutation(&gadget.seed, perm)?;
    // New attachment points, re-sorted ascending with the incidence rows
    // and columns carried along.
    let mut new_support: Vec<(usize, usize)> = gadget
        .support
        .iter()
        .enumerate()
        .map(|(i, &q)| (perm.apply(q), i))
        .collect();
    new_support.sort_unstable();
    let mut new_checks: Vec<(usize, usize)> = gadget
        .overlapping_checks
        .iter()
        .enumerate()
        .map(|(jj, &j)| (check_map(j), jj))
        .collect();
    new_checks.sort_unstable();
    let mut incidence = BitMatrix::zeros(new_support.len(), new_checks.len());
    for (i, &(_, old_i)) in new_support.iter().enumerate() {
        for (jj, &(_, old_jj)) in new_checks.iter().enumerate() {
            if gadget.incidence.get(old_i, old_jj) {
                incidence.set(i, jj, true);
            }
        }
    }
    let gauge = incidence.kernel_basis();
    Ok(Gadget {
        seed,
        seed_is_x: gadget.seed_is_x,
        overlapping_checks: new_checks.into_iter().map(|(j, _)| j).collect(),
        support: new_support.into_iter().map(|(q, _)| q).collect(),
        incidence,
        gauge,
    })
}
