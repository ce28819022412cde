"""Compare the compiled counting kernels against the pure Python fallback.

Both backends implement the same contract, so each task runs the same
inputs through both and reports per-call times and the speedup. Run as:

    python3 benchmarks/bench_kernels.py --repeat 20
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import regsets as rs
from regsets._kernels import _pykernels

try:
    from regsets._kernels import _ckernels
except ImportError:
    _ckernels = None


def _time_call(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - started)
    return best


def _report(label: str, py_seconds: float, c_seconds: float | None) -> None:
    line = f"{label}: python {py_seconds * 1000:8.3f} ms"
    if c_seconds is not None:
        line += f", compiled {c_seconds * 1000:8.3f} ms, speedup {py_seconds / c_seconds:6.1f}x"
    print(line)


def bench_neighbor_counts(repeat: int) -> None:
    g = rs.catalog("symmetric:6")
    s_ids: list[int] = []
    for orbit in rs.inverse_orbits(g):
        s_ids.extend(orbit)
        if len(s_ids) >= 120:
            break
    h = rs.subgroup_closure(g, [s_ids[0]])
    args = (g.table, np.asarray(sorted(s_ids), dtype=np.int32), h.mask)
    expected = _pykernels.subset_neighbor_counts(*args)
    c_seconds = None
    if _ckernels is not None:
        assert (_ckernels.subset_neighbor_counts(*args) == expected).all()
        c_seconds = _time_call(_ckernels.subset_neighbor_counts, args, repeat)
    py_seconds = _time_call(_pykernels.subset_neighbor_counts, args, repeat)
    _report(f"neighbor counts  |G|={g.order} |S|={len(s_ids)}", py_seconds, c_seconds)


def bench_mask_scan(repeat: int) -> None:
    g = rs.catalog("dihedral:16")
    center = [v for v in range(g.order) if all(g.multiply(v, w) == g.multiply(w, v) for w in range(g.order))]
    h = rs.Subgroup(g, center)
    orbits = rs.inverse_orbits(g)
    offsets = np.zeros(len(orbits) + 1, dtype=np.int32)
    elems: list[int] = []
    for k, orbit in enumerate(orbits):
        elems.extend(orbit)
        offsets[k + 1] = len(elems)
    args = (g.table, h.mask, offsets, np.asarray(elems, dtype=np.int32), 0, 1, h.index - 1)
    expected = _pykernels.find_regular_mask(*args)
    assert expected == -1, "the scan workload is meant to visit every mask"
    c_seconds = None
    if _ckernels is not None:
        assert _ckernels.find_regular_mask(*args) == expected
        c_seconds = _time_call(_ckernels.find_regular_mask, args, repeat)
    py_seconds = _time_call(_pykernels.find_regular_mask, args, repeat)
    _report(f"mask scan        |G|={g.order} masks={1 << len(orbits)}", py_seconds, c_seconds)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=10, help="timed calls per backend; best time wins")
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled backend unavailable; timing the fallback only")
    bench_neighbor_counts(args.repeat)
    bench_mask_scan(args.repeat)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
