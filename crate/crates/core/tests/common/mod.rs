//! Shared randomized property suites, driven by a fixed-seed ChaCha
//! stream so every run sees the same instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gbsurgery::css::{logical_action, logical_basis, CssCode};
use gbsurgery::gb::{build_gb_code, shift_qubit_permutation, GbCodeSpec};
use gbsurgery::gf2::{BitMatrix, BitVector};
use gbsurgery::io::{code_from_alist, code_to_alist, CodeBundle};
use gbsurgery::pauli::{apply_permutation, symplectic_product, PauliOperator};

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xc0de_bead ^ salt)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(0.5) {
                m.set(r, c, true);
            }
        }
    }
    m
}

/// A random generalised bicycle spec; the induced code is always a valid
/// CSS code, with k ≥ 0 depending on the offsets.
pub fn random_gb_spec(rng: &mut ChaCha8Rng) -> GbCodeSpec {
    let l = rng.gen_range(3..=10);
    let pick = |rng: &mut ChaCha8Rng| {
        let count = rng.gen_range(1..=3usize);
        (0..count).map(|_| rng.gen_range(0..l)).collect::<Vec<_>>()
    };
    let a = pick(rng);
    let b = pick(rng);
    GbCodeSpec::new(l, &a, &b)
}

/// A random code from the GB family with at least one logical qubit.
pub fn random_code_with_logicals(rng: &mut ChaCha8Rng) -> CssCode {
    loop {
        let code = build_gb_code(&random_gb_spec(rng)).unwrap();
        if code.num_logicals() > 0 {
            return code;
        }
    }
}

fn equal_matrices(a: &BitMatrix, b: &BitMatrix) -> bool {
    a.rows() == b.rows() && a.cols() == b.cols() && (0..a.rows()).all(|r| a.row(r) == b.row(r))
}

/// Rank/kernel/solve laws of the GF(2) linear algebra.
pub fn gf2_laws(instances: usize) {
    let mut rng = rng(1);
    for _ in 0..instances {
        let rows = rng.gen_range(1..=10);
        let cols = rng.gen_range(1..=12);
        let m = random_matrix(&mut rng, rows, cols);
        let rank = m.rank();
        let kernel = m.kernel_basis();
        assert_eq!(rank + kernel.rows(), cols, "rank-nullity");
        assert_eq!(m.transpose().rank(), rank, "row rank = column rank");
        for i in 0..kernel.rows() {
            assert!(m.mul_vector(&kernel.row(i)).is_zero(), "kernel row in kernel");
        }
        let (rref1, pivots) = m.rref();
        let (rref2, _) = rref1.rref();
        assert!(equal_matrices(&rref1, &rref2), "rref idempotent");
        assert_eq!(pivots.len(), rank, "pivot count = rank");
        // Any row combination is recoverable by solve_combination.
        let mut x = BitVector::zeros(rows);
        for r in 0..rows {
            if rng.gen_bool(0.5) {
                x.set(r, true);
            }
        }
        let b = m.vector_mul(&x);
        let solved = m.solve_combination(&b).expect("consistent system solves");
        assert_eq!(m.vector_mul(&solved), b, "solution reproduces rhs");
        // An inconsistent rhs yields None.
        let mut bad = BitVector::zeros(cols);
        for c in 0..cols {
            if rng.gen_bool(0.5) {
                bad.set(c, true);
            }
        }
        if !m.row_space_contains(&bad) {
            assert!(m.solve_combination(&bad).is_none(), "inconsistent is None");
        }
    }
}

/// Random element of the centralizer of the check group: product of
/// checks and logical representatives.
fn random_commuting_pauli(rng: &mut ChaCha8Rng, code: &CssCode) -> PauliOperator {
    let mut p = PauliOperator::identity(code.num_qubits());
    for j in 0..code.h_x().rows() {
        if rng.gen_bool(0.25) {
            p = p.multiply(&code.x_check(j)).unwrap();
        }
    }
    for j in 0..code.h_z().rows() {
        if rng.gen_bool(0.25) {
            p = p.multiply(&code.z_check(j)).unwrap();
        }
    }
    for l in code.x_logical_representatives() {
        if rng.gen_bool(0.5) {
            p = p.multiply(&l).unwrap();
        }
    }
    for l in code.z_logical_representatives() {
        if rng.gen_bool(0.5) {
            p = p.multiply(&l).unwrap();
        }
    }
    p
}

/// `logical_action` is a group homomorphism vanishing exactly on the
/// stabilizer group.
pub fn logical_action_homomorphism(instances: usize) {
    let mut rng = rng(2);
    for _ in 0..instances {
        let code = random_code_with_logicals(&mut rng);
        let basis = logical_basis(&code).unwrap();
        let p = random_commuting_pauli(&mut rng, &code);
        let q = random_commuting_pauli(&mut rng, &code);
        let ap = logical_action(&code, &basis, &p).unwrap();
        let aq = logical_action(&code, &basis, &q).unwrap();
        let apq = logical_action(&code, &basis, &p.multiply(&q).unwrap()).unwrap();
        assert_eq!(apq, ap.xor(&aq), "action is a homomorphism");
        assert_eq!(
            ap.is_zero(),
            code.is_stabilizer_element(&p).unwrap(),
            "zero action iff stabilizer"
        );
    }
}

/// Shift automorphisms act consistently: composition law, symplectic
/// invariance, and preservation of the centralizer.
pub fn group_action_consistency(instances: usize) {
    let mut rng = rng(3);
    for _ in 0..instances {
        let spec = random_gb_spec(&mut rng);
        let code = build_gb_code(&spec).unwrap();
        let l = spec.l;
        let s = rng.gen_range(0..l);
        let t = rng.gen_range(0..l);
        let ps = shift_qubit_permutation(l, s).unwrap();
        let pt = shift_qubit_permutation(l, t).unwrap();
        let pst = shift_qubit_permutation(l, (s + t) % l).unwrap();
        assert_eq!(ps.compose(&pt), pst, "shift composition");
        let p = random_commuting_pauli(&mut rng, &code);
        let q = random_commuting_pauli(&mut rng, &code);
        let gp = apply_permutation(&p, &ps).unwrap();
        let gq = apply_permutation(&q, &ps).unwrap();
        assert_eq!(
            symplectic_product(&p, &q).unwrap(),
            symplectic_product(&gp, &gq).unwrap(),
            "symplectic invariance"
        );
        assert_eq!(
            apply_permutation(&apply_permutation(&p, &pt).unwrap(), &ps).unwrap(),
            apply_permutation(&p, &pst).unwrap(),
            "action composition"
        );
        assert!(
            code.commutes_with_all_checks(&gp).unwrap(),
            "automorphism preserves the centralizer"
        );
        assert_eq!(
            code.is_stabilizer_element(&p).unwrap(),
            code.is_stabilizer_element(&gp).unwrap(),
            "automorphism preserves the stabilizer group"
        );
    }
}

/// alist and JSON exports reproduce the code bit-exactly.
pub fn format_round_trips(instances: usize) {
    let mut rng = rng(4);
    for _ in 0..instances {
        let code = build_gb_code(&random_gb_spec(&mut rng)).unwrap();
        let alist = code_to_alist(&code);
        let back = code_from_alist(&alist).unwrap();
        assert!(equal_matrices(code.h_x(), back.h_x()), "alist h_x round-trip");
        assert!(equal_matrices(code.h_z(), back.h_z()), "alist h_z round-trip");
        let bundle = CodeBundle::from_code(&code, None);
        let json = bundle.to_json().unwrap();
        let code2 = CodeBundle::from_json(&json).unwrap().to_code().unwrap();
        assert!(equal_matrices(code.h_x(), code2.h_x()), "json h_x round-trip");
        assert!(equal_matrices(code.h_z(), code2.h_z()), "json h_z round-trip");
        assert_eq!(code.labels(), code2.labels(), "labels round-trip");
    }
}
