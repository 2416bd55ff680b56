#!/usr/bin/env python3
"""Smoke test for the k3cliff_py extension module.

Build the module first:

    cargo build --release -p k3cliff-py

The script locates the compiled cdylib under target/, stages it under an
importable name, and runs a handful of end-to-end checks.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent

LIB_NAMES = ("libk3cliff_py.so", "libk3cliff_py.dylib", "k3cliff_py.dll")


def locate_cdylib() -> Path:
    candidates = []
    for profile in ("release", "debug"):
        for name in LIB_NAMES:
            candidates.append(REPO_ROOT / "target" / profile / name)
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "k3cliff_py cdylib not found; run `cargo build --release -p k3cliff-py` first"
    )


def stage_module(tmp: Path) -> None:
    source = locate_cdylib()
    suffix = ".pyd" if source.suffix == ".dll" else ".so"
    shutil.copy2(source, tmp / f"k3cliff_py{suffix}")
    sys.path.insert(0, str(tmp))


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        stage_module(Path(tmp))
        import k3cliff_py as k3

        # Lattice arithmetic.
        lat2 = k3.Lattice(2)
        assert lat2.m == 2
        assert lat2.intersect((1, 0), (0, 1)) == 2
        assert lat2.self_intersection((2, 3)) == 24
        assert lat2.genus((2, 3)) == 13
        assert lat2.chi((1, 1)) == 4

        # Cones and section counts.
        lat1 = k3.Lattice(1)
        assert lat1.is_effective((-1, 2)) and not lat1.is_nef((0, 1))
        assert lat1.h0((-1, 2)) == (2, (1, 0), 2)
        assert lat1.h0((0, 1)) == (2, (1, 0), 1)
        assert lat2.h0((1, 1)) == (4, (1, 1), 0)
        assert lat1.elliptic_classes() == [(1, 0)]
        assert lat2.elliptic_classes() == [(1, 0), (0, 1)]
        assert lat1.curve_class_obstruction((1, 1)) == "fixed component"
        assert lat2.curve_class_obstruction((1, 1)) is None

        # Clifford reports, both routes.
        report = lat2.clifford_index((2, 3))
        assert report.genus == 13
        assert report.elliptic_degree == 4
        assert report.mu == 2
        assert report.clifford == 2
        assert report.gonality_exact() == 4
        assert not report.is_general
        assert (0, 1) in report.moving_witnesses

        predicted = lat2.theorem_predict((2, 3))
        assert predicted.clifford == report.clifford
        assert lat2.verify_theorem((2, 3))

        lat5 = k3.Lattice(5)
        general = lat5.clifford_index((1, 1))
        assert general.is_general and general.clifford == 2
        assert general.gonality_exact() is None
        assert (general.gonality_lo, general.gonality_hi) == (4, 5)

        # Moving set machinery and the trace inequalities.
        mu, a0 = lat2.mu_and_a0((1, 1))
        assert mu == 0 and a0 == [(0, 1), (1, 0)]
        d, e0 = lat2.d_and_e0((2, 3))
        assert d == 4 and e0 == [(0, 1)]
        trace = lat2.proof_trace((2, 3), (0, 1))
        assert trace.split_gap == 0 and trace.cone_product >= 0

        # Errors surface as ValueError.
        try:
            lat1.clifford_index((1, 1))
        except ValueError as err:
            assert "irreducible" in str(err)
        else:
            sys.exit("expected ValueError for E+F at m=1")
        try:
            k3.Lattice(0)
        except ValueError:
            pass
        else:
            sys.exit("expected ValueError for m=0")

        # Bulk interfaces.
        csv = k3.sweep_csv(2, 2, 5)
        lines = csv.splitlines()
        assert lines[0] == (
            "m,x,y,genus,d_C,mu,clifford,gonality_lo,gonality_hi,"
            "is_general,witness_x,witness_y"
        )
        assert "2,1,1,3,2,0,0,2,2,false,0,1" in lines
        assert k3.sweep_json(3, 3, 4).count('"d_C": 3') == 1
        assert lat1.curve_classes(5) == [(2, 2)]

        checked, counterexample = k3.verify_range(1, 5, 50)
        assert counterexample is None
        assert checked > 0

        print(f"OK: k3cliff_py {k3.__version__} smoke test passed "
              f"({checked} classes cross-verified)")


if __name__ == "__main__":
    main()
