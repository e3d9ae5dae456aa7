"""Kernel backend selection.

The overlap and Held-Karp kernels dominate the runtime of the exact
oracles and the search batteries.  A compiled Cython extension is used
when it was built; otherwise the pure-Python module takes over with the
same contracts.  Set ``SUPERSTRING_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("SUPERSTRING_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.IMPLEMENTATION

overlap_len = _impl.overlap_len
overlap_matrix = _impl.overlap_matrix
min_hamiltonian_path = _impl.min_hamiltonian_path
