"""Kernel backend selection.

The compiled extension is used when it imports; setting ``TOURPAT_PURE_PYTHON=1``
forces the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("TOURPAT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
iso_table = _impl.iso_table
subset_code_hist = _impl.subset_code_hist
colorful_code_hist = _impl.colorful_code_hist
mobius = _impl.mobius
superset_sum = _impl.superset_sum
alternating_submask_sum = _impl.alternating_submask_sum
first_submask_hit = _impl.first_submask_hit
max_transitive = _impl.max_transitive
embeddings = _impl.embeddings
