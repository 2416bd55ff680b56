//! Range sweeps over curve classes and their CSV/JSON table rendering.

use std::fmt::Write;

use serde::Serialize;

use crate::clifford::{clifford_index, reports_agree, theorem_predict, CliffordReport};
use crate::error::Error;
use crate::lattice::{CurveClass, DivClass, Lattice};

/// Inclusive m-range and genus cap for sweeps and verification runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub m_lo: i64,
    pub m_hi: i64,
    pub max_genus: i64,
}

impl SweepConfig {
    pub fn new(m_lo: i64, m_hi: i64, max_genus: i64) -> Result<Self, Error> {
        if m_lo < 1 || m_lo > m_hi {
            return Err(Error::InvalidRange { lo: m_lo, hi: m_hi });
        }
        if max_genus < 1 {
            return Err(Error::InvalidMaxGenus(max_genus));
        }
        Ok(Self {
            m_lo,
            m_hi,
            max_genus,
        })
    }
}

/// Every irreducible curve class with 2 < genus <= max_genus, ordered by
/// (genus, x, y).
pub fn curve_classes(lat: &Lattice, max_genus: i64) -> Vec<CurveClass> {
    let mut out = Vec::new();
    // genus = 1 + m x y, so x y <= (max_genus - 1) / m with x, y >= 1.
    let budget = (max_genus - 1) / lat.m();
    for x in 1..=budget {
        for y in 1..=budget / x {
            let Ok(curve) = CurveClass::new(lat, DivClass::new(x, y)) else {
                continue;
            };
            if curve.genus() > 2 && curve.genus() <= max_genus {
                out.push(curve);
            }
        }
    }
    out.sort_by_key(|c| (c.genus(), c.class()));
    out
}

/// One table row; serialized field names match the CSV header exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub m: i64,
    pub x: i64,
    pub y: i64,
    pub genus: i64,
    #[serde(rename = "d_C")]
    pub d_c: i64,
    pub mu: Option<i64>,
    pub clifford: i64,
    pub gonality_lo: i64,
    pub gonality_hi: i64,
    pub is_general: bool,
    pub witness_x: Option<i64>,
    pub witness_y: Option<i64>,
}

pub const CSV_HEADER: &str =
    "m,x,y,genus,d_C,mu,clifford,gonality_lo,gonality_hi,is_general,witness_x,witness_y";

/// Flattens a report into a row. The witness columns carry the
/// lexicographically least minimizing decomposition, empty when none exists.
pub fn report_row(m: i64, report: &CliffordReport) -> SweepRow {
    let witness = report.moving_witnesses.first();
    let cls = report.curve.class();
    SweepRow {
        m,
        x: cls.x,
        y: cls.y,
        genus: report.genus,
        d_c: report.elliptic_degree,
        mu: report.mu,
        clifford: report.clifford,
        gonality_lo: report.gonality_lo,
        gonality_hi: report.gonality_hi,
        is_general: report.is_general,
        witness_x: witness.map(|w| w.x),
        witness_y: witness.map(|w| w.y),
    }
}

/// Brute-force reports for every class in range, one row each, in the
/// canonical (m, genus, x, y) order.
pub fn sweep(config: SweepConfig) -> Result<Vec<SweepRow>, Error> {
    let mut rows = Vec::new();
    for m in config.m_lo..=config.m_hi {
        let lat = Lattice::new(m)?;
        for curve in curve_classes(&lat, config.max_genus) {
            let report = clifford_index(&lat, &curve)?;
            report
                .check_invariants()
                .unwrap_or_else(|msg| panic!("report invariant violated: {msg}"));
            rows.push(report_row(m, &report));
        }
    }
    Ok(rows)
}

/// UTF-8, LF line endings, integers in decimal, booleans as true/false,
/// empty fields for absent values.
pub fn render_csv(rows: &[SweepRow]) -> String {
    fn opt(v: Option<i64>) -> String {
        v.map(|n| n.to_string()).unwrap_or_default()
    }
    let mut out = String::with_capacity(rows.len() * 48 + 128);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.m,
            r.x,
            r.y,
            r.genus,
            r.d_c,
            opt(r.mu),
            r.clifford,
            r.gonality_lo,
            r.gonality_hi,
            r.is_general,
            opt(r.witness_x),
            opt(r.witness_y),
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// The same table as a JSON array of flat objects with the CSV field names.
pub fn render_json(rows: &[SweepRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows are plain data");
    s.push('\n');
    s
}

/// First disagreement between the brute-force and closed-form routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub m: i64,
    pub curve: DivClass,
    pub brute: CliffordReport,
    pub predicted: CliffordReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub classes_checked: u64,
    pub counterexample: Option<Counterexample>,
}

/// Runs both routes on every class in range and stops at the first
/// disagreement.
pub fn verify_range(config: SweepConfig) -> Result<VerifyOutcome, Error> {
    let mut checked = 0u64;
    for m in config.m_lo..=config.m_hi {
        let lat = Lattice::new(m)?;
        for curve in curve_classes(&lat, config.max_genus) {
            let brute = clifford_index(&lat, &curve)?;
            let predicted = theorem_predict(&lat, &curve)?;
            if !reports_agree(&brute, &predicted) {
                return Ok(VerifyOutcome {
                    classes_checked: checked,
                    counterexample: Some(Counterexample {
                        m,
                        curve: curve.class(),
                        brute,
                        predicted,
                    }),
                });
            }
            checked += 1;
        }
    }
    Ok(VerifyOutcome {
        classes_checked: checked,
        counterexample: None,
    })
}
