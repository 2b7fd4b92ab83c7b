"""Kernel backend selection.

The brute-force counting sweeps are the hot loops of the whole suite;
they come in two interchangeable implementations:

* ``numba``  -- @njit-compiled loops (:mod:`threesq._kernels_numba`)
* ``numpy``  -- vectorized/pure-numpy fallback (:mod:`threesq._kernels_numpy`)

The environment variable ``THREESQ_BACKEND`` picks one of ``auto``
(default: numba if importable, else numpy), ``numba``, or ``numpy``.
Both backends produce identical tables; ``bench/compare_backends.py``
times them side by side.
"""

import os

_ENV_VAR = "THREESQ_BACKEND"
_KERNELS = (
    "r2_table",
    "r3_table",
    "r4_table",
    "n3_table",
    "tri3_table",
    "signed_pair_table",
    "signed_triple_table",
    "solution_tables",
    "divisor_tables",
)


def _select():
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{_ENV_VAR} must be one of auto/numba/numpy, got {choice!r}"
        )
    if choice in ("auto", "numba"):
        try:
            from . import _kernels_numba as impl

            return impl, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import _kernels_numpy as impl

    return impl, "numpy"


_impl, ACTIVE = _select()


def active_backend() -> str:
    """Name of the kernel backend in use ('numba' or 'numpy')."""
    return ACTIVE


for _name in _KERNELS:
    globals()[_name] = getattr(_impl, _name)

del _name

__all__ = ["active_backend", "ACTIVE", *_KERNELS]
