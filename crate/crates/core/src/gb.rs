//! Generalised bicycle codes: construction from (l, A, B), cyclic-shift
//! automorphisms, and the four-code catalog with its seed operators.
//!
//! Qubit layout is fixed: left sector ids `0..l`, right sector ids
//! `l..2l`. X-check `j` acts on `(j+a, L)` for `a ∈ A` and `(j+b, R)` for
//! `b ∈ B`; Z-check `j` on `(j−a, R)` and `(j−b, L)`, indices mod `l`.

use crate::css::CssCode;
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::pauli::{PauliOperator, Permutation};

/// Construction parameters: lift size and the two offset sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GbCodeSpec {
    pub l: usize,
    pub a_set: Vec<usize>,
    pub b_set: Vec<usize>,
}

impl GbCodeSpec {
    pub fn new(l: usize, a_set: &[usize], b_set: &[usize]) -> Self {
        assert!(l >= 1);
        let reduce = |s: &[usize]| {
            let mut v: Vec<usize> = s.iter().map(|&x| x % l).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        GbCodeSpec {
            l,
            a_set: reduce(a_set),
            b_set: reduce(b_set),
        }
    }
}

/// Sector tag for a physical qubit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sector {
    Left,
    Right,
}

/// Position-and-sector label for a qubit; bijective with ids `0..2l`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QubitLabel {
    pub rho: usize,
    pub sigma: Sector,
}

impl QubitLabel {
    pub fn to_id(self, l: usize) -> usize {
        match self.sigma {
            Sector::Left => self.rho,
            Sector::Right => l + self.rho,
        }
    }

    pub fn from_id(id: usize, l: usize) -> Self {
        if id < l {
            QubitLabel {
                rho: id,
                sigma: Sector::Left,
            }
        } else {
            QubitLabel {
                rho: id - l,
                sigma: Sector::Right,
            }
        }
    }
}

/// Build the CSS code for a spec. Never fails for well-formed specs; the
/// validation error is propagated as a regression guard.
pub fn build_gb_code(spec: &GbCodeSpec) -> Result<CssCode, Error> {
    let l = spec.l;
    let n = 2 * l;
    let mut h_x = BitMatrix::zeros(l, n);
    let mut h_z = BitMatrix::zeros(l, n);
    for j in 0..l {
        for &a in &spec.a_set {
            h_x.set(j, (j + a) % l, true);
            h_z.set(j, l + (j + l - a % l) % l, true);
        }
        for &b in &spec.b_set {
            h_x.set(j, l + (j + b) % l, true);
            h_z.set(j, (j + l - b % l) % l, true);
        }
    }
    let labels = (0..n)
        .map(|id| {
            let lab = QubitLabel::from_id(id, l);
            let s = match lab.sigma {
                Sector::Left => 'L',
                Sector::Right => 'R',
            };
            format!("({},{s})", lab.rho)
        })
        .collect();
    Ok(CssCode::new(h_x, h_z)?.with_labels(labels))
}

/// Simultaneous cyclic shift of both sectors by `s`: `(ρ,σ) ↦ (ρ+s, σ)`.
pub fn shift_qubit_permutation(l: usize, s: usize) -> Result<Permutation, Error> {
    if s >= l {
        return Err(Error::ShiftOutOfRange { shift: s, lift: l });
    }
    let mut image = vec![0; 2 * l];
    for rho in 0..l {
        image[rho] = (rho + s) % l;
        image[l + rho] = l + (rho + s) % l;
    }
    Permutation::new(image)
}

/// One catalog code: spec, seed operators, and conjectured parameters.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub r: u32,
    pub spec: GbCodeSpec,
    /// X̄₁, Z̄₁, X̄_{k/2+1}, Z̄_{k/2+1} in that order.
    pub seeds: [PauliOperator; 4],
    pub conjectured: (usize, usize, usize),
}

/// Names for the four seed slots, in catalog order.
pub const SEED_NAMES: [&str; 4] = ["x1", "z1", "x2", "z2"];

impl CatalogEntry {
    pub fn build(&self) -> Result<CssCode, Error> {
        build_gb_code(&self.spec)
    }

    pub fn seed(&self, name: &str) -> Option<&PauliOperator> {
        SEED_NAMES
            .iter()
            .position(|&s| s == name)
            .map(|i| &self.seeds[i])
    }

    /// Whether seed slot `i` is X-type (slots 0 and 2).
    pub fn seed_is_x(i: usize) -> bool {
        i % 2 == 0
    }
}

/// Conjectured parameters `(2(2^r − 1), 2r, r + (r−4)²)` for the family.
pub fn conjectured_params(r: u32) -> (usize, usize, usize) {
    assert!(r >= 5);
    let l = (1usize << r) - 1;
    (
        2 * l,
        2 * r as usize,
        r as usize + ((r as i64 - 4) * (r as i64 - 4)) as usize,
    )
}

fn seed_op(l: usize, x: bool, left: &[usize], right: &[usize]) -> PauliOperator {
    let mut support = Vec::with_capacity(left.len() + right.len());
    support.extend(left.iter().copied());
    support.extend(right.iter().map(|&p| l + p));
    if x {
        PauliOperator::x_type(2 * l, &support)
    } else {
        PauliOperator::z_type(2 * l, &support)
    }
}

/// The seed-operator catalog for `r ∈ {5, 6, 7, 8}`.
pub fn catalog_code(r: u32) -> Result<CatalogEntry, Error> {
    let entry = match r {
        5 => {
            let l = 31;
            CatalogEntry {
                r,
                spec: GbCodeSpec::new(l, &[0, 6, 15], &[0, 5, 7]),
                seeds: [
                    seed_op(l, true, &[1, 6, 8, 10], &[11, 26]),
                    seed_op(l, false, &[3, 12, 18, 19], &[11, 18]),
                    seed_op(l, true, &[16, 23], &[0, 15, 16, 22]),
                    seed_op(l, false, &[0, 16], &[1, 3, 5, 10]),
                ],
                conjectured: conjectured_params(r),
            }
        }
        6 => {
            let l = 63;
            CatalogEntry {
                r,
                spec: GbCodeSpec::new(l, &[0, 4, 37], &[0, 29, 49]),
                seeds: [
                    seed_op(l, true, &[7, 12, 36, 41, 56], &[1, 27, 31, 38, 61]),
                    seed_op(l, false, &[5, 15, 28, 35, 45, 61], &[1, 11, 54, 57]),
                    seed_op(l, true, &[9, 19, 26, 29], &[5, 15, 22, 38, 48, 55]),
                    seed_op(l, false, &[2, 25, 32, 36, 62], &[7, 22, 27, 51, 56]),
                ],
                conjectured: conjectured_params(r),
            }
        }
        7 => {
            let l = 127;
            CatalogEntry {
                r,
                spec: GbCodeSpec::new(l, &[0, 32, 100], &[0, 28, 49]),
                seeds: [
                    seed_op(
                        l,
                        true,
                        &[28, 47, 55, 75, 103, 114, 124],
                        &[4, 14, 15, 23, 50, 77, 83, 109, 123],
                    ),
                    seed_op(
                        l,
                        false,
                        &[1, 24, 33, 51, 60, 65, 107, 119, 124],
                        &[7, 8, 36, 85, 106, 114, 124],
                    ),
                    seed_op(
                        l,
                        true,
                        &[3, 31, 32, 42, 52, 60, 81],
                        &[6, 15, 38, 42, 47, 59, 101, 106, 115],
                    ),
                    seed_op(
                        l,
                        false,
                        &[0, 8, 9, 19, 27, 41, 67, 73, 100],
                        &[26, 36, 47, 75, 95, 103, 122],
                    ),
                ],
                conjectured: conjectured_params(r),
            }
        }
        8 => {
            let l = 255;
            CatalogEntry {
                r,
                spec: GbCodeSpec::new(l, &[0, 39, 55], &[0, 70, 127]),
                seeds: [
                    seed_op(
                        l,
                        true,
                        &[18, 31, 35, 36, 91, 126, 146, 163, 164, 180, 196, 216, 233, 253],
                        &[48, 52, 87, 101, 103, 106, 107, 125, 140, 156, 179, 211],
                    ),
                    seed_op(
                        l,
                        false,
                        &[38, 54, 57, 93, 112, 148, 164, 185, 197, 203, 213, 238, 240, 252],
                        &[18, 55, 59, 73, 129, 130, 142, 182, 187, 199, 244, 252],
                    ),
                    seed_op(
                        l,
                        true,
                        &[6, 27, 35, 80, 92, 97, 137, 149, 150, 206, 220, 224],
                        &[27, 39, 41, 66, 76, 82, 94, 115, 131, 167, 186, 222, 225, 241],
                    ),
                    seed_op(
                        l,
                        false,
                        &[10, 11, 14, 16, 30, 65, 69, 161, 193, 216, 232, 247],
                        &[26, 81, 82, 86, 99, 119, 139, 156, 176, 192, 208, 209, 226, 246],
                    ),
                ],
                conjectured: conjectured_params(r),
            }
        }
        other => return Err(Error::NoCatalogEntry(other)),
    };
    Ok(entry)
}

pub const CATALOG_RS: [u32; 4] = [5, 6, 7, 8];
