"""Kernel backend selection.

Imports the compiled kernels when available, else the pure-Python fallback.
Set FOLKMAN_KERNELS=python or FOLKMAN_KERNELS=cython to force a backend
(forcing cython raises if the extension was not built).
"""

from __future__ import annotations

import os

_forced = os.environ.get("FOLKMAN_KERNELS", "").strip().lower()

if _forced in ("py", "python", "pure"):
    from . import _kernels_py as _impl
elif _forced in ("c", "cython", "compiled"):
    from . import _kernels_c as _impl  # type: ignore[no-redef]
elif _forced:
    raise ValueError(f"unknown FOLKMAN_KERNELS value {_forced!r}")
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND

has_edge_within = _impl.has_edge_within
has_clique = _impl.has_clique
max_clique = _impl.max_clique
maximal_cliques = _impl.maximal_cliques
maximal_triangle_free = _impl.maximal_triangle_free
find_good_coloring = _impl.find_good_coloring
