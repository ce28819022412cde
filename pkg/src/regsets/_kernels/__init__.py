"""Counting kernels with a compiled fast path.

The compiled Cython module is preferred when the build produced it; the
plain-Python module implements the exact same contract and is used as the
fallback. Both must return identical values for identical inputs.
"""

from __future__ import annotations

try:
    from . import _ckernels as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _pykernels as _impl

    BACKEND = "python"

subset_neighbor_counts = _impl.subset_neighbor_counts
find_regular_mask = _impl.find_regular_mask

__all__ = ["BACKEND", "find_regular_mask", "subset_neighbor_counts"]
