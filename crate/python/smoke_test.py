#!/usr/bin/env python3
"""Smoke test for the splinemerge Python bindings.

Build the extension first, then run this script:

    cargo build -p splinemerge-py
    python3 python/smoke_test.py

The script copies the built cdylib into a temp directory under the
importable module name, so no install step is needed.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def import_bindings():
    root = Path(__file__).resolve().parents[1]
    candidates = [
        root / "target" / profile / f"libsplinemerge_py{ext}"
        for profile in ("release", "debug")
        for ext in (".so", ".dylib")
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit("extension not built; run: cargo build -p splinemerge-py")
    tmp = tempfile.mkdtemp(prefix="splinemerge_py_")
    shutil.copy(lib, Path(tmp) / "splinemerge_py.so")
    sys.path.insert(0, tmp)
    import splinemerge_py

    return splinemerge_py


def close(a, b, tol=1e-9):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def main():
    sm = import_bindings()

    # Planar fit interpolates its data at integer piecewise parameters.
    points = [[0.0, 0.0], [1.0, 2.0], [2.0, -1.0], [3.0, 1.0]]
    chain = sm.PointChain(points)
    assert len(chain) == 4 and chain.dim == 2
    result = sm.fit(chain)
    for k, p in enumerate(points):
        assert close(result.eval_piecewise(float(k)), p), f"data point {k}"
    lo, hi = result.domain()
    assert close(result.eval(lo), points[0])
    assert close(result.eval(hi), points[-1])
    assert len(result.knots) == len(result.bspline_controls()) + 4
    print("ok: planar fit")

    # Space fit over the shared independent axis.
    helix = sm.PointChain(
        [
            [math.cos(t), t, math.sin(t)]
            for t in (i / 9 * 2 * math.pi for i in range(10))
        ]
    )
    cfg = sm.FitConfig(independent_axis=1)
    space = sm.fcn(helix, cfg)
    assert space.dim == 3
    for k, p in enumerate(helix.points()):
        assert close(space.eval_piecewise(float(k)), p), f"helix point {k}"
    print("ok: space fit")

    # Dominant-point approximation.
    zigzag = sm.PointChain(
        [[float(i), y] for i, y in enumerate([0, 1, 0, 2, 0, 1.5, 0, 0.5, 0])]
    )
    approx = sm.approximate(zigzag, 0.6)
    sel = approx.selection
    assert sel is not None and sel[0] == 0 and sel[-1] == 8 and len(sel) == 5
    assert approx.error is not None and approx.error >= 0.0
    assert len(approx.gap_errors) == len(sel) - 1
    print(f"ok: approximation (m=5, error={approx.error:.6f})")

    # Sweeping fractions: exact at 1.0, errors reported per row.
    rows = sm.sweep(zigzag, [1.0, 0.8, 0.6])
    assert rows[0][1].error == 0.0
    assert [f for f, _ in rows] == [1.0, 0.8, 0.6]
    print("ok: sweep", [round(r.error, 6) for _, r in rows])

    # Turn angle unit case.
    assert abs(sm.turn_angle([0, 0], [1, 0], [1, 1]) - math.pi / 2) < 1e-12
    print("ok: turn angle")

    # Errors surface as ValueError.
    try:
        sm.PointChain([[0.0, 0.0]])
    except ValueError:
        print("ok: validation errors raise ValueError")
    else:
        sys.exit("expected ValueError for a single-point chain")

    print("smoke test passed")


if __name__ == "__main__":
    main()
