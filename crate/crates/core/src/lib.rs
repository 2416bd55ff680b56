//! Exact computation of the Clifford index and gonality of every curve on
//! a K3 surface whose Picard lattice is U(m).
//!
//! All arithmetic is on integer divisor classes xE + yF, where E and F are
//! isotropic generators with E.F = m. Each Clifford index is computed by
//! two independent routes: brute-force minimization over the moving
//! decompositions of the curve ([`clifford::clifford_index`]) and a closed
//! form in terms of the minimal elliptic degree
//! ([`clifford::theorem_predict`]). [`clifford::verify_theorem`]
//! cross-checks them, and [`sweep`] enumerates curve classes in bulk and
//! renders CSV/JSON tables.

pub mod clifford;
pub mod cones;
pub mod error;
pub mod lattice;
pub mod sweep;

pub use clifford::{
    clifford_index, theorem_predict, verify_theorem, CliffordReport, MovingDecomposition,
    ProofTrace,
};
pub use cones::{
    elliptic_classes, h0, is_effective, is_irreducible_curve_class, is_nef, H0Result,
    NonCurveReason,
};
pub use error::Error;
pub use lattice::{CurveClass, DivClass, Lattice, E, F, GAMMA};
