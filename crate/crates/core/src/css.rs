//! CSS stabilizer codes, logical bases and logical actions.

use crate::error::Error;
use crate::gf2::{BitMatrix, BitVector};
use crate::pauli::{symplectic_product, PauliOperator};

/// A validated CSS code: every X-check row commutes with every Z-check row.
#[derive(Clone, Debug)]
pub struct CssCode {
    n: usize,
    h_x: BitMatrix,
    h_z: BitMatrix,
    labels: Option<Vec<String>>,
}

impl CssCode {
    /// Validate `h_x · h_zᵀ = 0` and build the code. On failure names the
    /// first offending (X-row, Z-row) pair.
    pub fn new(h_x: BitMatrix, h_z: BitMatrix) -> Result<Self, Error> {
        assert_eq!(h_x.cols(), h_z.cols(), "check matrices differ in qubit count");
        for i in 0..h_x.rows() {
            let xr = h_x.row(i);
            for j in 0..h_z.rows() {
                if xr.dot(&h_z.row(j)) {
                    return Err(Error::CommutationViolation { x_row: i, z_row: j });
                }
            }
        }
        Ok(CssCode {
            n: h_x.cols(),
            h_x,
            h_z,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn h_x(&self) -> &BitMatrix {
        &self.h_x
    }

    pub fn h_z(&self) -> &BitMatrix {
        &self.h_z
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn x_check(&self, j: usize) -> PauliOperator {
        PauliOperator::from_x_vector(self.h_x.row(j))
    }

    pub fn z_check(&self, j: usize) -> PauliOperator {
        PauliOperator::from_z_vector(self.h_z.row(j))
    }

    /// `k = n − rank(H_X) − rank(H_Z)`.
    pub fn num_logicals(&self) -> usize {
        self.n - self.h_x.rank() - self.h_z.rank()
    }

    /// Whether `p` commutes with every check row.
    pub fn commutes_with_all_checks(&self, p: &PauliOperator) -> Result<bool, Error> {
        if p.num_qubits() != self.n {
            return Err(Error::LengthMismatch {
                left: p.num_qubits(),
                right: self.n,
            });
        }
        // X-check rows anticommute with p iff row · z(p) = 1; dually for Z.
        let zs = self.h_x.mul_vector(p.z_vector());
        let xs = self.h_z.mul_vector(p.x_vector());
        Ok(zs.is_zero() && xs.is_zero())
    }

    /// Whether `p` lies in the stabilizer group (checks only commutation
    /// first; the caller guarantees `p` commutes with all checks).
    pub fn is_stabilizer_element(&self, p: &PauliOperator) -> Result<bool, Error> {
        if !self.commutes_with_all_checks(p)? {
            return Err(Error::NotLogical {
                reason: "operator anticommutes with a check".into(),
            });
        }
        Ok(self.h_x.row_space_contains(p.x_vector())
            && self.h_z.row_space_contains(p.z_vector()))
    }

    /// `p` commutes with all checks and is not a stabilizer element.
    pub fn is_nontrivial_logical(&self, p: &PauliOperator) -> Result<bool, Error> {
        Ok(self.commutes_with_all_checks(p)? && !self.is_stabilizer_element(p)?)
    }

    /// Independent X-type logical representatives: rows of `ker(H_Z)` that
    /// extend the row space of `H_X`, in kernel order. Returns `k` operators.
    pub fn x_logical_representatives(&self) -> Vec<PauliOperator> {
        self.logical_representatives_from(&self.h_z, &self.h_x)
            .into_iter()
            .map(PauliOperator::from_x_vector)
            .collect()
    }

    /// Dual of [`Self::x_logical_representatives`].
    pub fn z_logical_representatives(&self) -> Vec<PauliOperator> {
        self.logical_representatives_from(&self.h_x, &self.h_z)
            .into_iter()
            .map(PauliOperator::from_z_vector)
            .collect()
    }

    fn logical_representatives_from(
        &self,
        kernel_of: &BitMatrix,
        modulo: &BitMatrix,
    ) -> Vec<BitVector> {
        let kernel = kernel_of.kernel_basis();
        let mut span = modulo.clone();
        let mut span_rank = span.rank();
        let mut reps = Vec::new();
        for i in 0..kernel.rows() {
            let cand = kernel.row(i);
            let grown = span.vstack(&BitMatrix::from_rows(&[cand.clone()], self.n));
            let r = grown.rank();
            if r > span_rank {
                span = grown;
                span_rank = r;
                reps.push(cand);
            }
        }
        reps
    }
}

/// A symplectic logical basis: `k` conjugate (X̄ᵢ, Z̄ᵢ) pairs.
#[derive(Clone, Debug)]
pub struct LogicalBasis {
    x_bars: Vec<PauliOperator>,
    z_bars: Vec<PauliOperator>,
}

impl LogicalBasis {
    pub fn k(&self) -> usize {
        self.x_bars.len()
    }

    pub fn x_bars(&self) -> &[PauliOperator] {
        &self.x_bars
    }

    pub fn z_bars(&self) -> &[PauliOperator] {
        &self.z_bars
    }

    /// Build from explicit pairs; checks all symplectic relations and that
    /// every element is a nontrivial logical of `code`.
    pub fn from_pairs(
        code: &CssCode,
        x_bars: Vec<PauliOperator>,
        z_bars: Vec<PauliOperator>,
    ) -> Result<Self, Error> {
        assert_eq!(x_bars.len(), z_bars.len());
        for p in x_bars.iter().chain(&z_bars) {
            if !code.is_nontrivial_logical(p)? {
                return Err(Error::NotLogical {
                    reason: "basis element is trivial or anticommutes with a check".into(),
                });
            }
        }
        for (i, x) in x_bars.iter().enumerate() {
            for (j, z) in z_bars.iter().enumerate() {
                if symplectic_product(x, z)? != (i == j) {
                    return Err(Error::NotLogical {
                        reason: format!("symplectic pairing fails at ({i}, {j})"),
                    });
                }
            }
        }
        for (i, a) in x_bars.iter().enumerate() {
            for b in &x_bars[i + 1..] {
                if symplectic_product(a, b)? {
                    return Err(Error::NotLogical {
                        reason: "X basis elements anticommute".into(),
                    });
                }
            }
        }
        for (i, a) in z_bars.iter().enumerate() {
            for b in &z_bars[i + 1..] {
                if symplectic_product(a, b)? {
                    return Err(Error::NotLogical {
                        reason: "Z basis elements anticommute".into(),
                    });
                }
            }
        }
        Ok(LogicalBasis { x_bars, z_bars })
    }
}

/// Coordinates of an operator's logical class: X-part ‖ Z-part, each of
/// length `k`. Zero iff the operator is a stabilizer element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LogicalAction {
    vector: BitVector,
}

impl LogicalAction {
    pub fn vector(&self) -> &BitVector {
        &self.vector
    }

    pub fn k(&self) -> usize {
        self.vector.len() / 2
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero()
    }

    pub fn xor(&self, other: &LogicalAction) -> LogicalAction {
        LogicalAction {
            vector: self.vector.xor(&other.vector),
        }
    }

    pub fn x_bit(&self, i: usize) -> bool {
        self.vector.get(i)
    }

    pub fn z_bit(&self, i: usize) -> bool {
        self.vector.get(self.k() + i)
    }

    /// Unit action: X̄ on logical qubit `i` (0-based).
    pub fn unit_x(k: usize, i: usize) -> LogicalAction {
        LogicalAction {
            vector: BitVector::from_indices(2 * k, &[i]),
        }
    }

    /// Unit action: Z̄ on logical qubit `i` (0-based).
    pub fn unit_z(k: usize, i: usize) -> LogicalAction {
        LogicalAction {
            vector: BitVector::from_indices(2 * k, &[k + i]),
        }
    }

    /// Compact packed form (bit 0 of the vector is the lowest bit), only
    /// valid for `2k <= 64`.
    pub fn packed(&self) -> u64 {
        assert!(self.vector.len() <= 64);
        let mut out = 0u64;
        for i in self.vector.ones() {
            out |= 1 << i;
        }
        out
    }
}

/// Extract any deterministic symplectic basis: X side from kernel
/// representatives, Z side adjusted by GF(2) inversion of the pairing
/// matrix so that `⟨X̄ᵢ, Z̄ⱼ⟩ = δᵢⱼ`.
pub fn logical_basis(code: &CssCode) -> Result<LogicalBasis, Error> {
    let x_reps = code.x_logical_representatives();
    let z_reps = code.z_logical_representatives();
    let k = x_reps.len();
    if k == 0 {
        return Err(Error::NoLogicals);
    }
    assert_eq!(z_reps.len(), k);
    // pairing[i][j] = <x_i, z_j>
    let mut pairing = BitMatrix::zeros(k, k);
    for (i, x) in x_reps.iter().enumerate() {
        for (j, z) in z_reps.iter().enumerate() {
            if symplectic_product(x, z)? {
                pairing.set(i, j, true);
            }
        }
    }
    // Want coefficients C with pairing · Cᵀ = I; solve one unit column at a time.
    let pairing_t = pairing.transpose();
    let mut z_bars = Vec::with_capacity(k);
    for i in 0..k {
        let unit = BitVector::from_indices(k, &[i]);
        let coeffs = pairing_t
            .solve_combination(&unit)
            .expect("pairing matrix is invertible for a valid CSS code");
        let mut z = PauliOperator::identity(code.num_qubits());
        for t in coeffs.ones() {
            z = z.multiply(&z_reps[t])?;
        }
        z_bars.push(z);
    }
    LogicalBasis::from_pairs(code, x_reps, z_bars)
}

/// Symplectic Gram–Schmidt over ordered candidate streams, with the first
/// element of each stream pinned: used to align a basis so chosen seed
/// operators land on unit actions. `sectors` is a list of
/// (X-candidates, Z-candidates, pair count) triples, processed in order.
pub fn logical_basis_from_candidates(
    code: &CssCode,
    sectors: &[(Vec<PauliOperator>, Vec<PauliOperator>, usize)],
) -> Result<LogicalBasis, Error> {
    let mut x_bars: Vec<PauliOperator> = Vec::new();
    let mut z_bars: Vec<PauliOperator> = Vec::new();
    let project = |p: &PauliOperator,
                   x_bars: &[PauliOperator],
                   z_bars: &[PauliOperator]|
     -> Result<PauliOperator, Error> {
        let mut q = p.clone();
        for (x, z) in x_bars.iter().zip(z_bars) {
            if symplectic_product(&q, z)? {
                q = q.multiply(x)?;
            }
            if symplectic_product(&q, x)? {
                q = q.multiply(z)?;
            }
        }
        Ok(q)
    };
    for (x_cands, z_cands, count) in sectors {
        let mut used_x = vec![false; x_cands.len()];
        let mut used_z = vec![false; z_cands.len()];
        for _ in 0..*count {
            let mut next_x = None;
            for (i, cand) in x_cands.iter().enumerate() {
                if used_x[i] {
                    continue;
                }
                let proj = project(cand, &x_bars, &z_bars)?;
                if code.is_stabilizer_element(&proj)? {
                    continue;
                }
                next_x = Some((i, proj));
                break;
            }
            let (xi, x) = next_x.ok_or(Error::NotLogical {
                reason: "candidate stream exhausted before filling sector".into(),
            })?;
            used_x[xi] = true;
            let mut next_z = None;
            for (j, cand) in z_cands.iter().enumerate() {
                if used_z[j] {
                    continue;
                }
                let proj = project(cand, &x_bars, &z_bars)?;
                if symplectic_product(&x, &proj)? {
                    next_z = Some((j, proj));
                    break;
                }
            }
            let (zj, z) = next_z.ok_or(Error::NotLogical {
                reason: "no symplectic partner found in Z candidate stream".into(),
            })?;
            used_z[zj] = true;
            x_bars.push(x);
            z_bars.push(z);
        }
    }
    LogicalBasis::from_pairs(code, x_bars, z_bars)
}

/// Logical-action coordinates of `p`: X-part bit `i` is `⟨p, Z̄ᵢ⟩`, Z-part
/// bit `i` is `⟨p, X̄ᵢ⟩`. Rejects operators anticommuting with a check.
pub fn logical_action(
    code: &CssCode,
    basis: &LogicalBasis,
    p: &PauliOperator,
) -> Result<LogicalAction, Error> {
    if !code.commutes_with_all_checks(p)? {
        return Err(Error::NotLogical {
            reason: "operator anticommutes with a check".into(),
        });
    }
    let k = basis.k();
    let mut vector = BitVector::zeros(2 * k);
    for (i, z) in basis.z_bars().iter().enumerate() {
        if symplectic_product(p, z)? {
            vector.set(i, true);
        }
    }
    for (i, x) in basis.x_bars().iter().enumerate() {
        if symplectic_product(p, x)? {
            vector.set(k + i, true);
        }
    }
    Ok(LogicalAction { vector })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_code() -> CssCode {
        // h_x = h_z = [110]: three qubits, one logical on qubit 2.
        let mut h_x = BitMatrix::zeros(1, 3);
        h_x.set(0, 0, true);
        h_x.set(0, 1, true);
        let mut h_z = BitMatrix::zeros(1, 3);
        h_z.set(0, 0, true);
        h_z.set(0, 1, true);
        CssCode::new(h_x, h_z).unwrap()
    }

    #[test]
    fn toy_code_valid_k1() {
        let code = toy_code();
        assert_eq!(code.num_logicals(), 1);
    }

    #[test]
    fn anticommuting_input_rejected() {
        let mut h_x = BitMatrix::zeros(1, 2);
        h_x.set(0, 0, true);
        let mut h_z = BitMatrix::zeros(1, 2);
        h_z.set(0, 0, true);
        match CssCode::new(h_x, h_z) {
            Err(Error::CommutationViolation { x_row: 0, z_row: 0 }) => {}
            other => panic!("expected commutation violation, got {other:?}"),
        }
    }

    #[test]
    fn stabilizer_membership() {
        let code = toy_code();
        let id = PauliOperator::identity(3);
        assert!(code.is_stabilizer_element(&id).unwrap());
        let check = code.x_check(0);
        assert!(code.is_stabilizer_element(&check).unwrap());
    }

    #[test]
    fn zero_logicals_is_error() {
        // Two-qubit code with h_x = [11], h_z = [11]: k = 0.
        let mut h_x = BitMatrix::zeros(1, 2);
        h_x.set(0, 0, true);
        h_x.set(0, 1, true);
        let mut h_z = BitMatrix::zeros(1, 2);
        h_z.set(0, 0, true);
        h_z.set(0, 1, true);
        let code = CssCode::new(h_x, h_z).unwrap();
        assert_eq!(code.num_logicals(), 0);
        assert!(matches!(logical_basis(&code), Err(Error::NoLogicals)));
    }

    #[test]
    fn toy_basis_and_action() {
        let code = toy_code();
        let basis = logical_basis(&code).unwrap();
        assert_eq!(basis.k(), 1);
        let x = &basis.x_bars()[0];
        let a = logical_action(&code, &basis, x).unwrap();
        assert_eq!(a, LogicalAction::unit_x(1, 0));
        // A stabilizer element maps to zero.
        let a0 = logical_action(&code, &basis, &code.x_check(0)).unwrap();
        assert!(a0.is_zero());
    }
}
