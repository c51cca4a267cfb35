"""Hot bitmask kernels: the compiled extension when built, else pure Python.

Set ``SEMICOMP_KERNELS=python`` before import to force the fallback; tests
and the benchmark switch backends at runtime with :func:`use`.
"""
from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

_BACKENDS = {"python": _kernels_py}
if _kernels_c is not None:
    _BACKENDS["cython"] = _kernels_c

NAMES = (
    "strong_table",
    "minimal_separators",
    "path_ends_table",
    "cycle_table",
    "path_cover_table",
    "partition_table",
    "ham_path_search",
    "ham_cycle_search",
    "min_vertex_cut",
    "min_strong_spanning",
    "find_cycle_of_length",
    "cycle_lengths_through",
)


def available() -> list[str]:
    return sorted(_BACKENDS)


def module(name: str):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} not available; have {available()}") from None


def use(name: str) -> None:
    """Rebind the module-level kernel functions to backend ``name``."""
    global BACKEND
    impl = module(name)
    g = globals()
    for fn in NAMES:
        g[fn] = getattr(impl, fn)
    BACKEND = impl.BACKEND


_default = os.environ.get("SEMICOMP_KERNELS", "cython" if _kernels_c is not None else "python")
use(_default if _default in _BACKENDS else "python")
