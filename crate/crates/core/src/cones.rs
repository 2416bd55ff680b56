//! Cone geometry of U(m): effectivity, nefness, h0, irreducibility.
//!
//! For m >= 2 the lattice contains no class of square -2, so the effective
//! and nef cones coincide with the first quadrant in the (E, F) basis. For
//! m = 1 the section class Gamma = F - E is a rational curve: the effective
//! cone is spanned by E and Gamma, the nef cone by E and E + F, and Gamma
//! is the only curve that can appear as a fixed component of a linear
//! system.

use std::fmt;

use crate::lattice::{DivClass, Lattice, E, F, GAMMA};

/// Why a divisor class fails to be the class of an irreducible curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonCurveReason {
    NotEffective,
    NotNef,
    /// A multiple kE or kF (k >= 2) of an elliptic pencil; every member is
    /// a union of fibers.
    PencilMultiple,
    /// m = 1 only: Gamma is a fixed component of the linear system.
    FixedComponent,
}

impl fmt::Display for NonCurveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NonCurveReason::NotEffective => "not effective",
            NonCurveReason::NotNef => "not nef",
            NonCurveReason::PencilMultiple => "pencil multiple",
            NonCurveReason::FixedComponent => "fixed component",
        };
        write!(f, "{s}")
    }
}

/// h0 of a divisor class together with the fixed-part decomposition that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct H0Result {
    pub h0: i64,
    /// The nef class left after stripping the fixed part; equals the input
    /// for every effective class when m >= 2.
    pub mobile_part: DivClass,
    /// How many copies of Gamma were stripped; always 0 for m >= 2.
    pub stripped_gamma_count: i64,
}

/// Whether the class is represented by a nonzero effective divisor.
pub fn is_effective(lat: &Lattice, d: DivClass) -> bool {
    if d.is_zero() {
        return false;
    }
    if lat.m() == 1 {
        // Decomposes into copies of E and Gamma.
        d.x + d.y >= 0 && d.y >= 0
    } else {
        d.x >= 0 && d.y >= 0
    }
}

/// Whether the class pairs non-negatively with every effective class.
pub fn is_nef(lat: &Lattice, d: DivClass) -> bool {
    if lat.m() == 1 {
        // D.E >= 0 and D.Gamma >= 0.
        d.y >= 0 && d.x >= d.y
    } else {
        d.x >= 0 && d.y >= 0
    }
}

/// Number of sections h0(D), computed by stripping the fixed part and
/// applying Riemann-Roch to the mobile remainder.
///
/// The zero class has h0 = 1 and non-effective classes have h0 = 0. For an
/// effective class, the only possible fixed curve is Gamma (m = 1): copies
/// of Gamma are removed while D.Gamma < 0, which leaves a nef class P.
/// Then h0 = 2 + P.P/2 when P.P > 0 (vanishing h1), h0 = k + 1 when P is a
/// multiple kE or kF of an elliptic pencil, and h0 = 1 when P = 0.
pub fn h0(lat: &Lattice, d: DivClass) -> H0Result {
    if d.is_zero() {
        return H0Result {
            h0: 1,
            mobile_part: DivClass::ZERO,
            stripped_gamma_count: 0,
        };
    }
    if !is_effective(lat, d) {
        return H0Result {
            h0: 0,
            mobile_part: d,
            stripped_gamma_count: 0,
        };
    }
    let (mobile, stripped) = if lat.m() == 1 {
        let (alpha, beta) = lat.to_e_gamma(d).expect("m = 1");
        // beta' = min(beta, floor(alpha / 2)) is where D.Gamma turns >= 0.
        let kept = beta.min(alpha / 2);
        (lat.from_e_gamma(alpha, kept).expect("m = 1"), beta - kept)
    } else {
        (d, 0)
    };
    debug_assert!(is_nef(lat, mobile) || mobile.is_zero());
    let square = lat.self_intersection(mobile);
    let sections = if square > 0 {
        lat.chi(mobile)
    } else if mobile.is_zero() {
        1
    } else {
        // kE or kF: the pencil gives h0 = k + 1.
        mobile.x.max(mobile.y) + 1
    };
    H0Result {
        h0: sections,
        mobile_part: mobile,
        stripped_gamma_count: stripped,
    }
}

/// `None` when `c` is the class of an irreducible curve, otherwise the
/// first criterion it fails.
pub fn curve_class_obstruction(lat: &Lattice, c: DivClass) -> Option<NonCurveReason> {
    let m = lat.m();
    // Genus-one fibers and, for m = 1, the section itself.
    if c == E || (m >= 2 && c == F) || (m == 1 && c == GAMMA) {
        return None;
    }
    if !is_effective(lat, c) {
        return Some(NonCurveReason::NotEffective);
    }
    if !is_nef(lat, c) {
        return Some(NonCurveReason::NotNef);
    }
    if lat.self_intersection(c) == 0 {
        // Nef isotropic classes are kE or kF with k >= 2 at this point.
        return Some(NonCurveReason::PencilMultiple);
    }
    // Nef and big. For m = 1, reject the classes whose system keeps Gamma
    // as a fixed component (removing Gamma loses no sections).
    if m == 1 && h0(lat, c - GAMMA).h0 == h0(lat, c).h0 {
        return Some(NonCurveReason::FixedComponent);
    }
    None
}

pub fn is_irreducible_curve_class(lat: &Lattice, c: DivClass) -> bool {
    curve_class_obstruction(lat, c).is_none()
}

/// Classes of irreducible elliptic curves: {E, F} for m >= 2, {E} for m = 1
/// (where F is E + Gamma with Gamma fixed).
pub fn elliptic_classes(lat: &Lattice) -> Vec<DivClass> {
    if lat.m() >= 2 {
        vec![E, F]
    } else {
        vec![E]
    }
}
