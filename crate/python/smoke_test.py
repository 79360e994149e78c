#!/usr/bin/env python3
"""Smoke test for the fundom_py extension module.

Locates the compiled cdylib under target/, copies it into a temp directory
under the importable name, and checks a handful of known values.

Usage: cargo build -p fundom-py && python3 python/smoke_test.py
"""

import importlib.util
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libfundom_py.so", "fundom_py.so", "libfundom_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("fundom_py cdylib not found; run `cargo build -p fundom-py` first")
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="fundom-py-"))
    target = tmp / "fundom_py.so"
    shutil.copy2(built, target)
    spec = importlib.util.spec_from_file_location("fundom_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    m = load_module()

    assert m.pair_matrix([1, 2]) == [[0, 1, 1], [1, 0, 2], [1, 2, 0]]
    assert m.poincare_closed(1, 1) == [1, 1, 4, 1]
    assert m.poincare_closed(1, 2) == [1, 1, 3, 4, 1]
    assert m.poincare_pipeline(2, 2) == [1, 1, 2, 2, 8, 4, 1]
    assert m.poincare_pipeline(2, 1) == m.poincare_closed(1, 2)

    points = m.fixed_points(1, 1)
    assert len(points) == 7
    assert points[0] == [0, 1, 2]
    assert len(m.fixed_points(2, 2)) == 19

    vertices = dict(m.regular_vertices([1, 2]))
    assert vertices["231"] == [2, 0, 2]
    assert vertices["123"] == [0, 1, 3]

    assert m.cell_dimension(1, 2, [0, 3, 1]) == 4
    assert m.triangle_region(1, 2, [0, 3, 1]) == "R3"
    assert m.v_region(1, 4, [0, 3, 3]) == ("V1", True)

    assert m.classify(1, 2, [2, 2, 0]) == "G"
    assert m.classify(1, 1, [10, -4, -3]) == "P(1|23)"
    assert m.classify(1, 1, [10, -5, -2]) == "B(231)"

    assert m.series_equal(8)

    try:
        m.poincare_closed(0, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("nonpositive valuation must raise ValueError")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
