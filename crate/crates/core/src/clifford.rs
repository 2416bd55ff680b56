//! Clifford index and gonality of curve classes, by two independent routes.
//!
//! The brute-force route (`clifford_index`) enumerates every moving
//! decomposition C = D + D' with h0(D) >= 2 and h0(D') >= 2, minimizes
//! D.D' - 2 over them, and caps the result at the generic value
//! floor((g - 1) / 2). The closed-form route (`theorem_predict`) reads the
//! same invariants off the minimal elliptic degree d = min(C.E, C.F)
//! without any enumeration. `verify_theorem` cross-checks the two.

use crate::cones::{self, h0};
use crate::error::Error;
use crate::lattice::{CurveClass, DivClass, Lattice, E, F};

/// A decomposition C = D + D' into two moving classes, with the pairing
/// D.D' that the Clifford index minimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MovingDecomposition {
    pub d: DivClass,
    pub complement: DivClass,
    pub product: i64,
}

/// Everything the engine knows about one curve class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordReport {
    pub curve: CurveClass,
    pub genus: i64,
    /// Minimal intersection of the curve with an elliptic curve class.
    pub elliptic_degree: i64,
    /// Minimal D.(C - D) - 2 over the moving set; `None` when the moving
    /// set is empty (which forces the curve to be Clifford general).
    pub mu: Option<i64>,
    pub clifford: i64,
    pub gonality_lo: i64,
    pub gonality_hi: i64,
    pub is_general: bool,
    /// Moving decompositions attaining `mu`, lexicographic by (x, y).
    pub moving_witnesses: Vec<DivClass>,
    /// Elliptic classes attaining `elliptic_degree`, lexicographic by (x, y).
    pub elliptic_witnesses: Vec<DivClass>,
}

impl CliffordReport {
    /// The Clifford index of a generic curve of this genus: floor((g-1)/2).
    pub fn generic_clifford(&self) -> i64 {
        (self.genus - 1) / 2
    }

    /// The gonality when the bracket is pinned to a single value.
    pub fn gonality_exact(&self) -> Option<i64> {
        (self.gonality_lo == self.gonality_hi).then_some(self.gonality_lo)
    }

    /// Re-checks the report's internal consistency; used on every emit.
    pub fn check_invariants(&self) -> Result<(), String> {
        let cap = self.generic_clifford();
        let expected = self.mu.map_or(cap, |mu| mu.min(cap));
        if self.clifford != expected {
            return Err(format!(
                "clifford = {} but min rule gives {expected} for {}",
                self.clifford, self.curve
            ));
        }
        if self.clifford < 0 || self.clifford > cap {
            return Err(format!(
                "clifford = {} outside [0, {cap}] for {}",
                self.clifford, self.curve
            ));
        }
        if !(self.clifford + 2 <= self.gonality_lo
            && self.gonality_lo <= self.gonality_hi
            && self.gonality_hi <= self.clifford + 3)
        {
            return Err(format!(
                "gonality bracket [{}, {}] incompatible with clifford = {} for {}",
                self.gonality_lo, self.gonality_hi, self.clifford, self.curve
            ));
        }
        if self.is_general != (self.clifford == cap) {
            return Err(format!("generality flag inconsistent for {}", self.curve));
        }
        Ok(())
    }
}

/// The moving set of C: every lattice class D with h0(D) >= 2 and
/// h0(C - D) >= 2, listed with its complement and pairing. Symmetric under
/// D <-> C - D; sorted lexicographically by D.
pub fn moving_set(lat: &Lattice, c: &CurveClass) -> Vec<MovingDecomposition> {
    let cls = c.class();
    let mut out = Vec::new();
    // Both halves must be effective, which confines D to a finite box:
    // the (E, F) box for m >= 2, the (E, Gamma) box for m = 1.
    let candidates: Vec<DivClass> = if lat.m() == 1 {
        let (alpha_c, beta_c) = lat.to_e_gamma(cls).expect("m = 1");
        (0..=alpha_c)
            .flat_map(|a| (0..=beta_c).map(move |b| (a, b)))
            .map(|(a, b)| lat.from_e_gamma(a, b).expect("m = 1"))
            .collect()
    } else {
        (0..=cls.x)
            .flat_map(|x| (0..=cls.y).map(move |y| DivClass::new(x, y)))
            .collect()
    };
    for d in candidates {
        let rest = cls - d;
        if h0(lat, d).h0 >= 2 && h0(lat, rest).h0 >= 2 {
            out.push(MovingDecomposition {
                d,
                complement: rest,
                product: lat.intersect(d, rest),
            });
        }
    }
    out.sort_by_key(|dec| dec.d);
    out
}

/// Minimal D.(C - D) - 2 over the moving set, together with all minimizers.
/// `(None, [])` when the moving set is empty.
pub fn mu_and_a0(lat: &Lattice, c: &CurveClass) -> (Option<i64>, Vec<DivClass>) {
    let decs = moving_set(lat, c);
    let Some(mu) = decs.iter().map(|dec| dec.product - 2).min() else {
        return (None, Vec::new());
    };
    let witnesses = decs
        .iter()
        .filter(|dec| dec.product - 2 == mu)
        .map(|dec| dec.d)
        .collect();
    (Some(mu), witnesses)
}

/// Minimal intersection of `d` with an elliptic curve class, with all
/// attaining classes (lexicographic). Defined for any nonzero class.
pub fn elliptic_min(lat: &Lattice, d: DivClass) -> Result<(i64, Vec<DivClass>), Error> {
    if d.is_zero() {
        return Err(Error::EllipticMinUndefined);
    }
    let mut best = i64::MAX;
    let mut witnesses = Vec::new();
    for e in cones::elliptic_classes(lat) {
        let v = lat.intersect(e, d);
        if v < best {
            best = v;
            witnesses.clear();
        }
        if v == best {
            witnesses.push(e);
        }
    }
    witnesses.sort();
    Ok((best, witnesses))
}

/// The minimal elliptic degree d of a curve class and the elliptic classes
/// attaining it.
pub fn d_and_e0(lat: &Lattice, c: &CurveClass) -> (i64, Vec<DivClass>) {
    elliptic_min(lat, c.class()).expect("curve classes are nonzero")
}

/// Full report by brute-force enumeration of the moving set.
///
/// Requires genus >= 2 (for genus 2 the outcome is forced: clifford = 0).
/// Gonality: when the curve is Clifford special and every minimal elliptic
/// class is a minimizing decomposition, the restricted elliptic pencil
/// pins gonality to the elliptic degree; when Clifford general, only the
/// bracket [c + 2, min(c + 3, elliptic degree)] is claimed.
pub fn clifford_index(lat: &Lattice, c: &CurveClass) -> Result<CliffordReport, Error> {
    if c.genus() < 2 {
        return Err(Error::GenusTooSmall {
            cls: c.class(),
            genus: c.genus(),
            min_genus: 2,
        });
    }
    let (mu, moving_witnesses) = mu_and_a0(lat, c);
    let (elliptic_degree, elliptic_witnesses) = d_and_e0(lat, c);
    let cap = (c.genus() - 1) / 2;
    let clifford = mu.map_or(cap, |mu| mu.min(cap));
    let is_general = clifford == cap;
    let (gonality_lo, gonality_hi) = if is_general {
        (clifford + 2, (clifford + 3).min(elliptic_degree))
    } else if elliptic_witnesses
        .iter()
        .all(|e| moving_witnesses.contains(e))
    {
        (elliptic_degree, elliptic_degree)
    } else {
        // Not realized on U(m); kept as the honest general bound.
        (clifford + 2, clifford + 3)
    };
    Ok(CliffordReport {
        curve: *c,
        genus: c.genus(),
        elliptic_degree,
        mu,
        clifford,
        gonality_lo,
        gonality_hi,
        is_general,
        moving_witnesses,
        elliptic_witnesses,
    })
}

/// Closed-form report, no enumeration. Requires genus > 2.
///
/// For m > 2 and C = E + F the curve is Clifford general with
/// clifford = floor(m / 2) and gonality bracketed; every other curve class
/// is Clifford special with clifford = d - 2 and gonality exactly d, where
/// d is the minimal elliptic degree.
pub fn theorem_predict(lat: &Lattice, c: &CurveClass) -> Result<CliffordReport, Error> {
    if c.genus() <= 2 {
        return Err(Error::GenusTooSmall {
            cls: c.class(),
            genus: c.genus(),
            min_genus: 3,
        });
    }
    let (elliptic_degree, elliptic_witnesses) = d_and_e0(lat, c);
    let m = lat.m();
    if m > 2 && c.class() == E + F {
        let clifford = m / 2;
        return Ok(CliffordReport {
            curve: *c,
            genus: c.genus(),
            elliptic_degree,
            // The only moving decompositions of E + F are E and F.
            mu: Some(m - 2),
            clifford,
            gonality_lo: clifford + 2,
            gonality_hi: (clifford + 3).min(elliptic_degree),
            is_general: true,
            moving_witnesses: vec![F, E],
            elliptic_witnesses,
        });
    }
    let clifford = elliptic_degree - 2;
    Ok(CliffordReport {
        curve: *c,
        genus: c.genus(),
        elliptic_degree,
        // Special curves have mu equal to the elliptic degree minus 2.
        mu: Some(clifford),
        clifford,
        gonality_lo: elliptic_degree,
        gonality_hi: elliptic_degree,
        is_general: false,
        moving_witnesses: elliptic_witnesses.clone(),
        elliptic_witnesses,
    })
}

/// Whether two reports agree on the quantities the closed form determines:
/// the Clifford index, the generality flag, and the gonality wherever the
/// prediction is exact.
pub fn reports_agree(brute: &CliffordReport, predicted: &CliffordReport) -> bool {
    brute.clifford == predicted.clifford
        && brute.is_general == predicted.is_general
        && predicted
            .gonality_exact()
            .is_none_or(|g| brute.gonality_exact() == Some(g))
}

/// Cross-check of the two routes on one curve class. Requires genus > 2.
pub fn verify_theorem(lat: &Lattice, c: &CurveClass) -> Result<bool, Error> {
    let predicted = theorem_predict(lat, c)?;
    let brute = clifford_index(lat, c)?;
    Ok(reports_agree(&brute, &predicted))
}

/// The intersection-theoretic quantities behind the minimality of elliptic
/// decompositions, evaluated at one moving decomposition C = D + D'.
///
/// `e_curve`, `e_d`, `e_complement` are the lexicographically least
/// elliptic classes of minimal degree for C, D and D'. All four derived
/// quantities are non-negative; `split_gap >= 0` says exactly that the
/// pairing D.D' is at least the minimal elliptic degree of C.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofTrace {
    pub d: DivClass,
    pub complement: DivClass,
    pub e_curve: DivClass,
    pub e_d: DivClass,
    pub e_complement: DivClass,
    /// (D - e_curve).(D' - e_curve) = D.D' - C.e_curve.
    pub split_gap: i64,
    /// (D - e_d).(D' - e_complement); both factors lie in the closure of
    /// the positive cone, so the product is non-negative.
    pub cone_product: i64,
    /// D.(e_complement - e_curve).
    pub excess_d: i64,
    /// D'.(e_d - e_curve).
    pub excess_complement: i64,
}

/// Evaluates the trace at a moving decomposition D of C and asserts the
/// non-negativity of all four quantities.
///
/// Accepts any member of the moving set (the inequalities hold on all of
/// it, not only on the minimizers).
pub fn proof_trace(lat: &Lattice, c: &CurveClass, d: DivClass) -> Result<ProofTrace, Error> {
    let complement = c.class() - d;
    if d.is_zero() || complement.is_zero() {
        return Err(Error::EllipticMinUndefined);
    }
    if !moving_set(lat, c).iter().any(|dec| dec.d == d) {
        return Err(Error::NotInMovingSet {
            d,
            curve: c.class(),
        });
    }
    let e_curve = elliptic_min(lat, c.class())?.1[0];
    let e_d = elliptic_min(lat, d)?.1[0];
    let e_complement = elliptic_min(lat, complement)?.1[0];
    let trace = ProofTrace {
        d,
        complement,
        e_curve,
        e_d,
        e_complement,
        split_gap: lat.intersect(d - e_curve, complement - e_curve),
        cone_product: lat.intersect(d - e_d, complement - e_complement),
        excess_d: lat.intersect(d, e_complement - e_curve),
        excess_complement: lat.intersect(complement, e_d - e_curve),
    };
    assert!(
        trace.split_gap >= 0
            && trace.cone_product >= 0
            && trace.excess_d >= 0
            && trace.excess_complement >= 0,
        "trace inequality violated at C = {}, D = {d}: {trace:?}",
        c.class(),
    );
    Ok(trace)
}
