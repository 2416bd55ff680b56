//! Python bindings for the k3cliff engine.
//!
//! Divisor classes cross the boundary as plain `(x, y)` tuples in the
//! (E, F) basis; reports and proof traces come back as small classes with
//! read-only attributes. All engine errors surface as `ValueError`.
//!
//! Usage from Python:
//!
//!     import k3cliff_py as k3
//!     lat = k3.Lattice(2)
//!     report = lat.clifford_index((2, 3))
//!     assert report.clifford == 2 and report.gonality_lo == 4

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use k3cliff::clifford;
use k3cliff::cones;
use k3cliff::lattice::{CurveClass, DivClass};
use k3cliff::sweep;

/// A divisor class as it crosses the Python boundary.
type Pair = (i64, i64);

fn to_py_err(e: k3cliff::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn class(xy: Pair) -> DivClass {
    DivClass::new(xy.0, xy.1)
}

fn pair(d: DivClass) -> Pair {
    (d.x, d.y)
}

fn pairs(ds: &[DivClass]) -> Vec<Pair> {
    ds.iter().copied().map(pair).collect()
}

/// Clifford data of one curve class.
#[pyclass(name = "CliffordReport")]
struct PyCliffordReport {
    #[pyo3(get)]
    curve: Pair,
    #[pyo3(get)]
    genus: i64,
    /// Minimal intersection with an elliptic curve class.
    #[pyo3(get)]
    elliptic_degree: i64,
    #[pyo3(get)]
    mu: Option<i64>,
    #[pyo3(get)]
    clifford: i64,
    #[pyo3(get)]
    gonality_lo: i64,
    #[pyo3(get)]
    gonality_hi: i64,
    #[pyo3(get)]
    is_general: bool,
    #[pyo3(get)]
    moving_witnesses: Vec<Pair>,
    #[pyo3(get)]
    elliptic_witnesses: Vec<Pair>,
}

#[pymethods]
impl PyCliffordReport {
    /// The gonality when the bracket collapses to one value, else None.
    fn gonality_exact(&self) -> Option<i64> {
        (self.gonality_lo == self.gonality_hi).then_some(self.gonality_lo)
    }

    fn __repr__(&self) -> String {
        format!(
            "CliffordReport(curve={:?}, genus={}, clifford={}, gonality=({}, {}), is_general={})",
            self.curve,
            self.genus,
            self.clifford,
            self.gonality_lo,
            self.gonality_hi,
            self.is_general
        )
    }
}

impl From<clifford::CliffordReport> for PyCliffordReport {
    fn from(r: clifford::CliffordReport) -> Self {
        Self {
            curve: pair(r.curve.class()),
            genus: r.genus,
            elliptic_degree: r.elliptic_degree,
            mu: r.mu,
            clifford: r.clifford,
            gonality_lo: r.gonality_lo,
            gonality_hi: r.gonality_hi,
            is_general: r.is_general,
            moving_witnesses: pairs(&r.moving_witnesses),
            elliptic_witnesses: pairs(&r.elliptic_witnesses),
        }
    }
}

/// Intersection quantities at one moving decomposition C = D + D'.
#[pyclass(name = "ProofTrace")]
struct PyProofTrace {
    #[pyo3(get)]
    d: Pair,
    #[pyo3(get)]
    complement: Pair,
    #[pyo3(get)]
    e_curve: Pair,
    #[pyo3(get)]
    e_d: Pair,
    #[pyo3(get)]
    e_complement: Pair,
    #[pyo3(get)]
    split_gap: i64,
    #[pyo3(get)]
    cone_product: i64,
    #[pyo3(get)]
    excess_d: i64,
    #[pyo3(get)]
    excess_complement: i64,
}

#[pymethods]
impl PyProofTrace {
    fn __repr__(&self) -> String {
        format!(
            "ProofTrace(d={:?}, split_gap={}, cone_product={}, excess_d={}, excess_complement={})",
            self.d, self.split_gap, self.cone_product, self.excess_d, self.excess_complement
        )
    }
}

/// The Picard lattice U(m) of an elliptic K3 surface.
#[pyclass(name = "Lattice")]
struct PyLattice {
    inner: k3cliff::Lattice,
}

impl PyLattice {
    fn curve(&self, c: Pair) -> PyResult<CurveClass> {
        CurveClass::new(&self.inner, class(c)).map_err(to_py_err)
    }
}

#[pymethods]
impl PyLattice {
    #[new]
    fn new(m: i64) -> PyResult<Self> {
        Ok(Self {
            inner: k3cliff::Lattice::new(m).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn m(&self) -> i64 {
        self.inner.m()
    }

    fn intersect(&self, a: Pair, b: Pair) -> i64 {
        self.inner.intersect(class(a), class(b))
    }

    fn self_intersection(&self, d: Pair) -> i64 {
        self.inner.self_intersection(class(d))
    }

    fn genus(&self, c: Pair) -> PyResult<i64> {
        self.inner.genus(class(c)).map_err(to_py_err)
    }

    fn chi(&self, d: Pair) -> i64 {
        self.inner.chi(class(d))
    }

    /// (alpha, beta) with D = alpha E + beta Gamma; m = 1 only.
    fn to_e_gamma(&self, d: Pair) -> PyResult<Pair> {
        self.inner.to_e_gamma(class(d)).map_err(to_py_err)
    }

    #[allow(clippy::wrong_self_convention)] // mirrors to_e_gamma on the same object
    fn from_e_gamma(&self, alpha: i64, beta: i64) -> PyResult<Pair> {
        self.inner
            .from_e_gamma(alpha, beta)
            .map(pair)
            .map_err(to_py_err)
    }

    fn is_effective(&self, d: Pair) -> bool {
        cones::is_effective(&self.inner, class(d))
    }

    fn is_nef(&self, d: Pair) -> bool {
        cones::is_nef(&self.inner, class(d))
    }

    /// (h0, mobile_part, stripped_gamma_count).
    fn h0(&self, d: Pair) -> (i64, Pair, i64) {
        let r = cones::h0(&self.inner, class(d));
        (r.h0, pair(r.mobile_part), r.stripped_gamma_count)
    }

    fn is_irreducible_curve_class(&self, c: Pair) -> bool {
        cones::is_irreducible_curve_class(&self.inner, class(c))
    }

    /// None for curve classes, otherwise the failed criterion as a string.
    fn curve_class_obstruction(&self, c: Pair) -> Option<String> {
        cones::curve_class_obstruction(&self.inner, class(c)).map(|r| r.to_string())
    }

    fn elliptic_classes(&self) -> Vec<Pair> {
        pairs(&cones::elliptic_classes(&self.inner))
    }

    /// Every moving decomposition (d, complement, product) of the curve.
    fn moving_set(&self, c: Pair) -> PyResult<Vec<(Pair, Pair, i64)>> {
        let curve = self.curve(c)?;
        Ok(clifford::moving_set(&self.inner, &curve)
            .iter()
            .map(|dec| (pair(dec.d), pair(dec.complement), dec.product))
            .collect())
    }

    fn mu_and_a0(&self, c: Pair) -> PyResult<(Option<i64>, Vec<Pair>)> {
        let curve = self.curve(c)?;
        let (mu, a0) = clifford::mu_and_a0(&self.inner, &curve);
        Ok((mu, pairs(&a0)))
    }

    fn d_and_e0(&self, c: Pair) -> PyResult<(i64, Vec<Pair>)> {
        let curve = self.curve(c)?;
        let (d, e0) = clifford::d_and_e0(&self.inner, &curve);
        Ok((d, pairs(&e0)))
    }

    /// Brute-force report over the moving set.
    fn clifford_index(&self, c: Pair) -> PyResult<PyCliffordReport> {
        let curve = self.curve(c)?;
        clifford::clifford_index(&self.inner, &curve)
            .map(Into::into)
            .map_err(to_py_err)
    }

    /// Closed-form report from the minimal elliptic degree.
    fn theorem_predict(&self, c: Pair) -> PyResult<PyCliffordReport> {
        let curve = self.curve(c)?;
        clifford::theorem_predict(&self.inner, &curve)
            .map(Into::into)
            .map_err(to_py_err)
    }

    /// True when both routes agree on this curve class.
    fn verify_theorem(&self, c: Pair) -> PyResult<bool> {
        let curve = self.curve(c)?;
        clifford::verify_theorem(&self.inner, &curve).map_err(to_py_err)
    }

    fn proof_trace(&self, c: Pair, d: Pair) -> PyResult<PyProofTrace> {
        let curve = self.curve(c)?;
        let t = clifford::proof_trace(&self.inner, &curve, class(d)).map_err(to_py_err)?;
        Ok(PyProofTrace {
            d: pair(t.d),
            complement: pair(t.complement),
            e_curve: pair(t.e_curve),
            e_d: pair(t.e_d),
            e_complement: pair(t.e_complement),
            split_gap: t.split_gap,
            cone_product: t.cone_product,
            excess_d: t.excess_d,
            excess_complement: t.excess_complement,
        })
    }

    /// All irreducible curve classes with 2 < genus <= max_genus.
    fn curve_classes(&self, max_genus: i64) -> Vec<Pair> {
        sweep::curve_classes(&self.inner, max_genus)
            .iter()
            .map(|c| pair(c.class()))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("Lattice(m={})", self.inner.m())
    }
}

/// CSV table of every curve class with 2 < genus <= max_genus for each m
/// in [m_lo, m_hi].
#[pyfunction]
fn sweep_csv(m_lo: i64, m_hi: i64, max_genus: i64) -> PyResult<String> {
    let config = sweep::SweepConfig::new(m_lo, m_hi, max_genus).map_err(to_py_err)?;
    let rows = sweep::sweep(config).map_err(to_py_err)?;
    Ok(sweep::render_csv(&rows))
}

/// The same table as a JSON array of flat objects.
#[pyfunction]
fn sweep_json(m_lo: i64, m_hi: i64, max_genus: i64) -> PyResult<String> {
    let config = sweep::SweepConfig::new(m_lo, m_hi, max_genus).map_err(to_py_err)?;
    let rows = sweep::sweep(config).map_err(to_py_err)?;
    Ok(sweep::render_json(&rows))
}

/// Cross-checks the two routes over a range. Returns
/// (classes_checked, counterexample), where counterexample is None or the
/// offending (m, (x, y)).
#[pyfunction]
fn verify_range(m_lo: i64, m_hi: i64, max_genus: i64) -> PyResult<(u64, Option<(i64, Pair)>)> {
    let config = sweep::SweepConfig::new(m_lo, m_hi, max_genus).map_err(to_py_err)?;
    let outcome = sweep::verify_range(config).map_err(to_py_err)?;
    Ok((
        outcome.classes_checked,
        outcome.counterexample.map(|cex| (cex.m, pair(cex.curve))),
    ))
}

#[pymodule]
fn k3cliff_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyLattice>()?;
    m.add_class::<PyCliffordReport>()?;
    m.add_class::<PyProofTrace>()?;
    m.add_function(wrap_pyfunction!(sweep_csv, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_range, m)?)?;
    Ok(())
}
