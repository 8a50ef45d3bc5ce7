#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the two hot paths on both backends:

* the canonicalization reduction loop, batched over random scaled points
* torus cell fill + facet scan for a mid-size instance

Run after `pip install -e . --no-build-isolation`; if the compiled
extension is missing only the pure numbers are printed.
"""

from __future__ import annotations

import random
import time
from array import array
from itertools import product

from hyptile import _kernels_py

try:
    from hyptile import _kernels
except ImportError:
    _kernels = None


def bench_canonicalize(impl, points, big, small):
    start = time.perf_counter()
    for y in points:
        impl.canonicalize_scaled(y, big, small)
    return time.perf_counter() - start


def bench_torus(impl, n, p, q):
    m = p**n + q**n
    cells = m**n
    # residues of the lattice mod m, generated by repeated column addition
    from hyptile.torus import TorusParams, residue_subgroup

    residues = residue_subgroup(TorusParams(n=n, p=p, q=q))
    residues_flat = array("i", (c for r in residues for c in r))
    big = array("i", (c for cell in product(range(q), repeat=n) for c in cell))
    small_ranges = [range(p)] * (n - 1) + [range(q, q + p)]
    small = array("i", (c for cell in product(*small_ranges) for c in cell))
    assign = array("i", [-1]) * cells
    start = time.perf_counter()
    conflict = impl.fill_torus_cells(assign, residues_flat, big, small, n, m)
    assert conflict == -1
    events = impl.facet_events(assign, n, m)
    elapsed = time.perf_counter() - start
    return elapsed, len(events)


def main():
    rng = random.Random(7)
    n, big, small = 5, 2, 1
    points = [
        [rng.randint(-2000, 2000) for _ in range(n)] for _ in range(20_000)
    ]

    rows = []
    pure = bench_canonicalize(_kernels_py, points, big, small)
    rows.append(("canonicalize (20k points, n=5)", pure, None))
    if _kernels is not None:
        fast = bench_canonicalize(_kernels, points, big, small)
        rows[-1] = (rows[-1][0], pure, fast)

    pure_t, nev = bench_torus(_kernels_py, 4, 1, 2)
    rows.append((f"torus fill+scan (n=4 p=1 q=2, {nev} events)", pure_t, None))
    if _kernels is not None:
        fast_t, _ = bench_torus(_kernels, 4, 1, 2)
        rows[-1] = (rows[-1][0], pure_t, fast_t)

    print(f"{'kernel':<45} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, pure, fast in rows:
        if fast is None:
            print(f"{name:<45} {pure:>9.3f}s {'n/a':>10} {'n/a':>8}")
        else:
            print(f"{name:<45} {pure:>9.3f}s {fast:>9.3f}s {pure / fast:>7.1f}x")

    # both backends must agree bit for bit
    for y in points[:200]:
        assert _kernels_py.canonicalize_scaled(y, big, small) == (
            _kernels.canonicalize_scaled(y, big, small)
            if _kernels is not None
            else _kernels_py.canonicalize_scaled(y, big, small)
        )
    print("parity check: ok")


if __name__ == "__main__":
    main()
