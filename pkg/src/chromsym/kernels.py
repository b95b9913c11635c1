"""Backend dispatch for the counting kernels.

The kernels in ``_kernel_impl`` are written in a numba-compatible subset of
Python over numpy arrays. By default they are compiled with ``numba.njit``;
set ``CHROMSYM_BACKEND=python`` to run the identical source uncompiled (the
pure-numpy fallback), or ``CHROMSYM_BACKEND=numba`` to fail loudly when numba
is missing. No environment variable is required: the default is ``auto``.
``benchmarks/bench_kernels.py`` compares the two backends.
"""

import os
import warnings
from functools import lru_cache

import numpy as np

from . import _kernel_impl

ENV_VAR = "CHROMSYM_BACKEND"
I64_MAX = 2**63 - 1


class _Backend:
    __slots__ = ("name", "count_by_type", "count_fixed_type")

    def __init__(self, name, count_by_type, count_fixed_type):
        self.name = name
        self.count_by_type = count_by_type
        self.count_fixed_type = count_fixed_type


def _python_backend():
    return _Backend(
        "python",
        _kernel_impl.count_partitions_by_type,
        _kernel_impl.count_partitions_fixed_type,
    )


@lru_cache(maxsize=None)
def _numba_backend():
    import numba

    jit = numba.njit(cache=True, nogil=True)
    return _Backend(
        "numba",
        jit(_kernel_impl.count_partitions_by_type),
        jit(_kernel_impl.count_partitions_fixed_type),
    )


_active = None


def set_backend(name: str) -> str:
    """Select 'numba', 'python', or 'auto'; returns the resolved name."""
    global _active
    if name == "python":
        _active = _python_backend()
    elif name == "numba":
        _active = _numba_backend()
    elif name == "auto":
        try:
            _active = _numba_backend()
        except ImportError:
            warnings.warn("numba unavailable; using the pure-python kernel backend")
            _active = _python_backend()
    else:
        raise ValueError(f"unknown backend {name!r} (use numba, python, or auto)")
    return _active.name


def active_backend() -> _Backend:
    global _active
    if _active is None:
        set_backend(os.environ.get(ENV_VAR, "auto"))
    return _active


def active_backend_name() -> str:
    return active_backend().name


@lru_cache(maxsize=None)
def bounded_count_table(n: int) -> np.ndarray:
    """table[m, k] = number of integer partitions of m with every part <= k."""
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    t[0, :] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            t[m, k] = t[m, k - 1] + (t[m - k, k] if m >= k else 0)
    return t


def count_all_types(adj_u64: np.ndarray, n: int) -> np.ndarray:
    """Unordered stable-partition counts indexed by reverse-lex type rank."""
    from .partitions import partitions_of

    counts = np.zeros(len(partitions_of(n)), dtype=np.int64)
    active_backend().count_by_type(adj_u64, n, bounded_count_table(n), counts)
    return counts


def count_fixed_type(adj_u64: np.ndarray, n: int, lam, limit=None) -> int:
    """Unordered count of stable partitions of one fixed type (early exit at
    ``limit``)."""
    needed = np.zeros(n + 1, dtype=np.int64)
    for p in lam:
        needed[p] += 1
    lim = I64_MAX if limit is None else int(limit)
    return int(active_backend().count_fixed_type(adj_u64, n, needed, lim))
