//! Exact arithmetic on divisor classes in the Picard lattice U(m).
//!
//! U(m) is the rank-two lattice with Gram matrix [[0, m], [m, 0]] in the
//! basis (E, F). Every divisor class is an integer vector (x, y) meaning
//! xE + yF. When m = 1 the lattice also carries the section class
//! Gamma = F - E of square -2, and the alternate basis (E, Gamma) is used
//! by the cone logic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cones;
use crate::error::Error;

/// A divisor class xE + yF in the (E, F) basis.
///
/// The derived `Ord` is lexicographic on (x, y); it is the canonical
/// ordering for witness lists and report determinism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivClass {
    pub x: i64,
    pub y: i64,
}

/// The elliptic fiber class E = (1, 0).
pub const E: DivClass = DivClass::new(1, 0);
/// The second isotropic generator F = (0, 1). An elliptic curve class for
/// m >= 2; for m = 1 its linear system has Gamma as a fixed component.
pub const F: DivClass = DivClass::new(0, 1);
/// The section class Gamma = F - E. A rational curve exactly when m = 1.
pub const GAMMA: DivClass = DivClass::new(-1, 1);

impl DivClass {
    pub const ZERO: DivClass = DivClass::new(0, 0);

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        DivClass::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        DivClass::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass::new(-self.x, -self.y)
    }
}

impl Mul<DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: DivClass) -> DivClass {
        DivClass::new(self * rhs.x, self * rhs.y)
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        match self.x {
            0 => {}
            1 => s.push('E'),
            -1 => s.push_str("-E"),
            n => s.push_str(&format!("{n}E")),
        }
        if self.y != 0 {
            if !s.is_empty() && self.y > 0 {
                s.push('+');
            }
            match self.y {
                1 => s.push('F'),
                -1 => s.push_str("-F"),
                n => s.push_str(&format!("{n}F")),
            }
        }
        write!(f, "{s}")
    }
}

/// The Picard lattice U(m) of an elliptic K3 surface of Picard number two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lattice {
    m: i64,
}

impl Lattice {
    /// A lattice with Gram matrix [[0, m], [m, 0]]; requires m >= 1.
    pub fn new(m: i64) -> Result<Self, Error> {
        if m < 1 {
            return Err(Error::InvalidScale(m));
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Intersection pairing: (x1 E + y1 F).(x2 E + y2 F) = m (x1 y2 + x2 y1).
    pub fn intersect(&self, a: DivClass, b: DivClass) -> i64 {
        self.m * (a.x * b.y + b.x * a.y)
    }

    /// D.D = 2 m x y; always a multiple of 2m.
    pub fn self_intersection(&self, d: DivClass) -> i64 {
        2 * self.m * d.x * d.y
    }

    /// Arithmetic genus g = 1 + C.C / 2 (adjunction on a K3 surface).
    ///
    /// Defined down to self-intersection -2 (g = 0, rational curves);
    /// classes of square below -2 are rejected.
    pub fn genus(&self, c: DivClass) -> Result<i64, Error> {
        let square = self.self_intersection(c);
        if square < -2 {
            return Err(Error::GenusUndefined { cls: c, square });
        }
        Ok(1 + square / 2)
    }

    /// Euler characteristic chi(D) = 2 + D.D / 2 (Riemann-Roch on a K3).
    pub fn chi(&self, d: DivClass) -> i64 {
        2 + self.self_intersection(d) / 2
    }

    /// Coordinates (alpha, beta) with D = alpha E + beta Gamma; m = 1 only.
    pub fn to_e_gamma(&self, d: DivClass) -> Result<(i64, i64), Error> {
        if self.m != 1 {
            return Err(Error::NoSectionClass(self.m));
        }
        Ok((d.x + d.y, d.y))
    }

    /// Inverse of `to_e_gamma`: alpha E + beta Gamma as an (x, y) class; m = 1 only.
    pub fn from_e_gamma(&self, alpha: i64, beta: i64) -> Result<DivClass, Error> {
        if self.m != 1 {
            return Err(Error::NoSectionClass(self.m));
        }
        Ok(DivClass::new(alpha - beta, beta))
    }
}

/// A divisor class validated as the class of an irreducible curve, with its
/// genus cached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveClass {
    cls: DivClass,
    genus: i64,
}

impl CurveClass {
    pub fn new(lat: &Lattice, cls: DivClass) -> Result<Self, Error> {
        if let Some(reason) = cones::curve_class_obstruction(lat, cls) {
            return Err(Error::NotACurveClass { cls, reason });
        }
        // Irreducible classes have square >= -2, so genus never fails here.
        let genus = lat.genus(cls)?;
        Ok(Self { cls, genus })
    }

    pub fn class(&self) -> DivClass {
        self.cls
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cls)
    }
}
