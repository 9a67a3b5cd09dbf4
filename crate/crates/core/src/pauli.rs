//! Phase-free n-qubit Pauli operators and qubit permutations.
//!
//! Operators are tracked modulo phase: only the X- and Z-support matter
//! for commutation, logical actions and orbits.

use crate::error::Error;
use crate::gf2::{symplectic_product_halves, BitVector};

/// A Pauli operator on `n` qubits, represented by its X- and Z-support.
/// A qubit in both supports carries a Y.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliOperator {
    n: usize,
    x: BitVector,
    z: BitVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            n,
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    pub fn new(x: BitVector, z: BitVector) -> Self {
        assert_eq!(x.len(), z.len(), "x/z support length mismatch");
        PauliOperator {
            n: x.len(),
            x,
            z,
        }
    }

    pub fn x_type(n: usize, support: &[usize]) -> Self {
        PauliOperator {
            n,
            x: BitVector::from_indices(n, support),
            z: BitVector::zeros(n),
        }
    }

    pub fn z_type(n: usize, support: &[usize]) -> Self {
        PauliOperator {
            n,
            x: BitVector::zeros(n),
            z: BitVector::from_indices(n, support),
        }
    }

    pub fn from_x_vector(x: BitVector) -> Self {
        let n = x.len();
        PauliOperator {
            n,
            x,
            z: BitVector::zeros(n),
        }
    }

    pub fn from_z_vector(z: BitVector) -> Self {
        let n = z.len();
        PauliOperator {
            n,
            x: BitVector::zeros(n),
            z,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn x_vector(&self) -> &BitVector {
        &self.x
    }

    pub fn z_vector(&self) -> &BitVector {
        &self.z
    }

    pub fn x_support(&self) -> Vec<usize> {
        self.x.ones()
    }

    pub fn z_support(&self) -> Vec<usize> {
        self.z.ones()
    }

    /// Qubits acted on non-trivially (X, Y or Z).
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.x.clone();
        s.xor_assign(&self.z);
        let both = self.x.and(&self.z);
        s.xor_assign(&both);
        // s = x | z
        s.ones()
    }

    pub fn weight(&self) -> usize {
        self.support().len()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// Phase-free product: supports XOR.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator, Error> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(PauliOperator {
            n: self.n,
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
        })
    }

    /// Embed into a larger register, acting as identity on the new qubits.
    pub fn embedded(&self, n: usize) -> PauliOperator {
        PauliOperator {
            n,
            x: self.x.extended(n),
            z: self.z.extended(n),
        }
    }

    /// Swap the X and Z supports (the transversal-Hadamard image).
    pub fn dual(&self) -> PauliOperator {
        PauliOperator {
            n: self.n,
            x: self.z.clone(),
            z: self.x.clone(),
        }
    }
}

/// Symplectic product mod 2: `|X(p) ∩ Z(q)| + |Z(p) ∩ X(q)|`. Zero iff
/// `p` and `q` commute up to phase.
pub fn symplectic_product(p: &PauliOperator, q: &PauliOperator) -> Result<bool, Error> {
    symplectic_product_halves(&p.x, &p.z, &q.x, &q.z)
}

/// `true` iff the operators commute (up to phase).
pub fn commutes(p: &PauliOperator, q: &PauliOperator) -> Result<bool, Error> {
    Ok(!symplectic_product(p, q)?)
}

/// A bijection on qubit ids, stored as the image list: qubit `i` maps to
/// `image[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn new(image: Vec<usize>) -> Result<Self, Error> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation { n });
            }
            seen[i] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// `self` after `other`: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }
}

/// Map both supports of `p` pointwise through `perm`.
pub fn apply_permutation(p: &PauliOperator, perm: &Permutation) -> Result<PauliOperator, Error> {
    if perm.len() != p.n {
        return Err(Error::LengthMismatch {
            left: perm.len(),
            right: p.n,
        });
    }
    let map = |v: &BitVector| {
        let mut out = BitVector::zeros(p.n);
        for i in v.ones() {
            out.set(perm.apply(i), true);
        }
        out
    };
    Ok(PauliOperator {
        n: p.n,
        x: map(&p.x),
        z: map(&p.z),
    })
}
