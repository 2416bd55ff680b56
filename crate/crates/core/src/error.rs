//! Error type shared by the whole crate.

use crate::cones::NonCurveReason;
use crate::lattice::DivClass;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The hyperbolic scale must be a positive integer; m = 0 degenerates the form.
    #[error("lattice scale must satisfy m >= 1, got m = {0}")]
    InvalidScale(i64),

    /// Genus is only defined down to self-intersection -2 (rational curves).
    #[error("genus is undefined for {cls}: self-intersection {square} < -2")]
    GenusUndefined { cls: DivClass, square: i64 },

    /// The (E, Gamma) coordinates exist only on the m = 1 lattice, where
    /// Gamma = F - E is the class of a rational curve.
    #[error("the (E, Gamma) basis requires m = 1; this lattice has m = {0}")]
    NoSectionClass(i64),

    #[error("{cls} is not an irreducible curve class: {reason}")]
    NotACurveClass {
        cls: DivClass,
        reason: NonCurveReason,
    },

    #[error("{cls} has genus {genus}; this operation requires genus >= {min_genus}")]
    GenusTooSmall {
        cls: DivClass,
        genus: i64,
        min_genus: i64,
    },

    /// The divisor is not a moving decomposition of the curve: both halves
    /// must move in a pencil (h0 >= 2).
    #[error("{d} is not a moving decomposition of {curve}: h0({d}) and h0({curve} - {d}) must both be >= 2")]
    NotInMovingSet { d: DivClass, curve: DivClass },

    /// The minimal elliptic degree of the zero class is not defined.
    #[error("no minimal elliptic class exists for the zero divisor")]
    EllipticMinUndefined,

    #[error("sweep range must satisfy 1 <= lo <= hi, got {lo}..{hi}")]
    InvalidRange { lo: i64, hi: i64 },

    #[error("max genus must be a positive integer, got {0}")]
    InvalidMaxGenus(i64),
}
