//! Property and invariant suites: randomized algebraic identities on the
//! pairing, cone and section-count invariants, and exhaustive small-range
//! checks of the intersection-theoretic inequalities behind the minimality
//! of elliptic decompositions.

use proptest::prelude::*;

use k3cliff::clifford::{
    clifford_index, d_and_e0, elliptic_min, moving_set, mu_and_a0, proof_trace,
};
use k3cliff::cones::{elliptic_classes, h0, is_effective, is_nef};
use k3cliff::sweep::curve_classes;
use k3cliff::{CurveClass, DivClass, Lattice, E, F};

fn lattice(m: i64) -> Lattice {
    Lattice::new(m).unwrap()
}

fn any_class() -> impl Strategy<Value = DivClass> {
    (-40..=40i64, -40..=40i64).prop_map(|(x, y)| DivClass::new(x, y))
}

proptest! {
    #[test]
    fn pairing_is_symmetric(m in 1..=8i64, a in any_class(), b in any_class()) {
        let lat = lattice(m);
        prop_assert_eq!(lat.intersect(a, b), lat.intersect(b, a));
    }

    #[test]
    fn pairing_is_bilinear(
        m in 1..=8i64,
        a in any_class(),
        b in any_class(),
        c in any_class(),
        s in -5..=5i64,
        t in -5..=5i64,
    ) {
        let lat = lattice(m);
        let combined = DivClass::new(s * a.x + t * b.x, s * a.y + t * b.y);
        prop_assert_eq!(
            lat.intersect(combined, c),
            s * lat.intersect(a, c) + t * lat.intersect(b, c)
        );
    }

    #[test]
    fn squares_lie_in_two_m_z(m in 1..=8i64, d in any_class()) {
        let lat = lattice(m);
        prop_assert_eq!(lat.self_intersection(d).rem_euclid(2 * m), 0);
    }

    #[test]
    fn genus_tracks_half_square(m in 1..=8i64, d in any_class()) {
        let lat = lattice(m);
        if let Ok(g) = lat.genus(d) {
            prop_assert_eq!(2 * (g - 1), lat.self_intersection(d));
        }
    }

    #[test]
    fn e_gamma_roundtrip(alpha in -50..=50i64, beta in -50..=50i64) {
        let lat = lattice(1);
        let d = lat.from_e_gamma(alpha, beta).unwrap();
        prop_assert_eq!(lat.to_e_gamma(d).unwrap(), (alpha, beta));
    }

    #[test]
    fn nef_nonzero_is_effective(m in 1..=8i64, d in any_class()) {
        let lat = lattice(m);
        if !d.is_zero() && is_nef(&lat, d) {
            prop_assert!(is_effective(&lat, d));
        }
    }

    #[test]
    fn h0_dominates_chi_on_effective(m in 1..=8i64, d in any_class()) {
        let lat = lattice(m);
        if is_effective(&lat, d) {
            let r = h0(&lat, d);
            prop_assert!(r.h0 >= 1);
            prop_assert!(r.h0 >= lat.chi(d));
        }
    }

    #[test]
    fn stripping_preserves_sections(m in 1..=8i64, d in any_class()) {
        let lat = lattice(m);
        let r = h0(&lat, d);
        if is_effective(&lat, d) {
            prop_assert!(r.mobile_part.is_zero() || is_nef(&lat, r.mobile_part));
            prop_assert_eq!(h0(&lat, r.mobile_part).h0, r.h0);
            if m >= 2 {
                prop_assert_eq!(r.mobile_part, d);
                prop_assert_eq!(r.stripped_gamma_count, 0);
            }
        }
    }

    #[test]
    fn swapping_generators_fixes_invariants(m in 2..=8i64, x in 1..=10i64, y in 1..=10i64) {
        // (x, y) -> (y, x) is a lattice automorphism exchanging E and F.
        let lat = lattice(m);
        let c = CurveClass::new(&lat, DivClass::new(x, y)).unwrap();
        let swapped = CurveClass::new(&lat, DivClass::new(y, x)).unwrap();
        prop_assert_eq!(mu_and_a0(&lat, &c).0, mu_and_a0(&lat, &swapped).0);
        prop_assert_eq!(d_and_e0(&lat, &c).0, d_and_e0(&lat, &swapped).0);
        if c.genus() > 2 {
            let a = clifford_index(&lat, &c).unwrap();
            let b = clifford_index(&lat, &swapped).unwrap();
            prop_assert_eq!(a.clifford, b.clifford);
            prop_assert_eq!(a.is_general, b.is_general);
            prop_assert_eq!((a.gonality_lo, a.gonality_hi), (b.gonality_lo, b.gonality_hi));
        }
    }
}

/// Minimal elliptic classes sit inside the minimizing set exactly when mu
/// equals the elliptic degree minus 2, and both statements hold on every
/// curve class here.
#[test]
fn elliptic_minimizers_inside_moving_minimizers() {
    for m in 1..=6 {
        let lat = lattice(m);
        for c in curve_classes(&lat, 50) {
            let (mu, a0) = mu_and_a0(&lat, &c);
            let (d, e0) = d_and_e0(&lat, &c);
            let contained = e0.iter().all(|e| a0.contains(e));
            assert_eq!(
                contained,
                mu == Some(d - 2),
                "m={m} C={}: containment and mu = d - 2 must coincide",
                c.class()
            );
            assert!(contained, "m={m} C={}", c.class());
        }
    }
}

/// The report invariants hold on every class in a moderate range.
#[test]
fn report_invariants_hold() {
    for m in 1..=6 {
        let lat = lattice(m);
        for c in curve_classes(&lat, 50) {
            let report = clifford_index(&lat, &c).unwrap();
            report.check_invariants().unwrap();
            let cap = report.generic_clifford();
            assert!(0 <= report.clifford && report.clifford <= cap);
            assert_eq!(report.is_general, report.clifford == cap);
        }
    }
}

/// Exhaustive trace inequalities over every minimizing decomposition, for
/// every choice of minimal elliptic classes on both halves.
#[test]
fn trace_inequalities_all_choices() {
    let mut traces = 0u64;
    for m in 1..=6 {
        let lat = lattice(m);
        for c in curve_classes(&lat, 60) {
            let (_, a0) = mu_and_a0(&lat, &c);
            let (_, e0_c) = d_and_e0(&lat, &c);
            for d in a0 {
                let trace = proof_trace(&lat, &c, d).unwrap();
                let complement = c.class() - d;
                assert_eq!(trace.complement, complement);

                // All four quantities are non-negative for the canonical
                // (lexicographically least) choices.
                assert!(trace.split_gap >= 0);
                assert!(trace.cone_product >= 0);
                assert!(trace.excess_d >= 0);
                assert!(trace.excess_complement >= 0);

                // And for every other choice of minimal elliptic classes.
                let (_, e0_d) = elliptic_min(&lat, d).unwrap();
                let (_, e0_dc) = elliptic_min(&lat, complement).unwrap();
                for &e_c in &e0_c {
                    for &e_d in &e0_d {
                        for &e_dc in &e0_dc {
                            let cone = lat.intersect(d - e_d, complement - e_dc);
                            let excess_d = lat.intersect(d, e_dc - e_c);
                            let excess_dc = lat.intersect(complement, e_d - e_c);
                            assert!(cone >= 0, "m={m} C={} D={d}", c.class());
                            // The excess terms dominate chains that end at 0.
                            assert!(excess_d >= lat.intersect(complement, e_c - e_dc));
                            assert!(lat.intersect(complement, e_c - e_dc) >= 0);
                            assert!(excess_dc >= lat.intersect(d, e_c - e_d));
                            assert!(lat.intersect(d, e_c - e_d) >= 0);
                            // Together they dominate the pairing of the
                            // two elliptic choices.
                            assert!(
                                cone + excess_d + excess_dc >= lat.intersect(e_d, e_dc),
                                "m={m} C={} D={d}",
                                c.class()
                            );
                            traces += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(traces > 500, "only {traces} traces checked");
}

/// Doubling down on the minimal elliptic class: (C - 2 E_C)^2 >= -4 holds
/// exactly on the Clifford-special classes, and away from E + F the bound
/// sharpens to >= 0. (At E + F the square is -2m, so the -4 threshold is
/// where generality begins.)
#[test]
fn twice_elliptic_difference_bound() {
    for m in 1..=6 {
        let lat = lattice(m);
        for c in curve_classes(&lat, 50) {
            let special = !clifford_index(&lat, &c).unwrap().is_general;
            let (_, e0) = d_and_e0(&lat, &c);
            for e in e0 {
                let sq = lat.self_intersection(c.class() - 2 * e);
                assert_eq!(
                    special,
                    sq >= -4,
                    "m={m} C={} E_C={e}: square {sq}",
                    c.class()
                );
                if special && c.class() != E + F {
                    assert!(sq >= 0, "m={m} C={} E_C={e}: got {sq}", c.class());
                }
            }
        }
    }
}

/// The moving set is closed under complement and every member is effective
/// on both sides.
#[test]
fn moving_set_structure() {
    for m in 1..=4 {
        let lat = lattice(m);
        for c in curve_classes(&lat, 30) {
            let set = moving_set(&lat, &c);
            for dec in &set {
                assert_eq!(dec.d + dec.complement, c.class());
                assert!(is_effective(&lat, dec.d));
                assert!(is_effective(&lat, dec.complement));
                assert!(h0(&lat, dec.d).h0 >= 2);
                assert!(h0(&lat, dec.complement).h0 >= 2);
                assert!(set.iter().any(|other| other.d == dec.complement));
            }
            // Sorted and duplicate-free.
            assert!(set.windows(2).all(|w| w[0].d < w[1].d));
        }
    }
}

/// Elliptic classes really are curve classes of genus one.
#[test]
fn elliptic_classes_are_genus_one_curves() {
    for m in 1..=8 {
        let lat = lattice(m);
        for e in elliptic_classes(&lat) {
            let c = CurveClass::new(&lat, e).unwrap();
            assert_eq!(c.genus(), 1);
            assert_eq!(lat.self_intersection(e), 0);
        }
        assert_eq!(elliptic_classes(&lat).contains(&F), m >= 2);
    }
}
