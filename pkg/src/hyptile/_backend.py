"""Kernel backend selection.

Imports the compiled Cython kernels when the extension built, otherwise
the pure-Python twins.  Setting ``HYPTILE_PURE_PYTHON=1`` in the
environment forces the pure path.  The compiled canonicalization kernel
works on guarded int64; when its overflow guard trips we transparently
re-run the call on arbitrary-precision ints, so results are exact either
way.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("HYPTILE_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure-python"


def canonicalize_scaled(y, big, small):
    if _compiled is not None:
        try:
            return _compiled.canonicalize_scaled(y, big, small)
        except OverflowError:
            pass
    return _kernels_py.canonicalize_scaled(y, big, small)


def fill_torus_cells(assign, residues, big_offsets, small_offsets, n, m):
    impl = _compiled if _compiled is not None else _kernels_py
    return impl.fill_torus_cells(assign, residues, big_offsets, small_offsets, n, m)


def facet_events(assign, n, m):
    impl = _compiled if _compiled is not None else _kernels_py
    return impl.facet_events(assign, n, m)
