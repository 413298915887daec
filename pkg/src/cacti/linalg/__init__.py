"""Exact linear algebra.

Dense mod-p row reduction uses the compiled ``_kernels`` extension when it
was built, and the numpy implementation in ``_fallback`` otherwise.  Setting
``CACTI_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("CACTI_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

if _compiled is not None:
    dense_rref_modp = _compiled.rref_modp
    dense_rank_modp = _compiled.rank_modp
else:
    dense_rref_modp = _fallback.rref_modp
    dense_rank_modp = _fallback.rank_modp

from .sparse import (DENSE_COLUMN_LIMIT, Echelon, SparseMatrix, echelon,  # noqa: E402
                     kernel_from_echelon, rank, rank_kernel, solve)

__all__ = [
    "BACKEND", "dense_rref_modp", "dense_rank_modp", "SparseMatrix", "Echelon", "echelon",
    "rank", "rank_kernel", "kernel_from_echelon", "solve", "DENSE_COLUMN_LIMIT",
]
