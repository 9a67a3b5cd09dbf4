//! Generalised bicycle codes with fixed logical-measurement gadgets.
//!
//! The crate builds the two-block cyclic CSS family, synthesizes the
//! ancilla gadget that measures a chosen logical Pauli operator fault
//! tolerantly, analyses the expansion of the gadget connectivity graphs,
//! bridges gadgets into multi-target product measurements, and accounts
//! for the physical-qubit overhead of the whole scheme.

pub mod bridge;
pub mod css;
pub mod distance;
pub mod error;
pub mod expansion;
pub mod gadget;
pub mod gb;
pub mod gf2;
pub mod io;
pub mod orbits;
pub mod overhead;
pub mod pauli;

pub use css::{CssCode, LogicalAction, LogicalBasis};
pub use error::Error;
pub use gadget::{attach, build_gadget, verify_gadget, DeformedCode, Gadget};
pub use gb::{build_gb_code, catalog_code, CatalogEntry, GbCodeSpec};
pub use gf2::{BitMatrix, BitVector};
pub use pauli::{PauliOperator, Permutation};
