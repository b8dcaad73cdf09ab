"""Numeric kernels for the hot loops: CSR row dots, transpose dots, row sums.

Two interchangeable backends with identical semantics: a Cython extension
(``_speedups``, built at install time) and a pure-numpy fallback
(``_numpy``). The compiled backend is selected automatically when present.
Set ``PULREC_KERNELS=py`` or ``=c`` to force one, or call :func:`set_backend`
at runtime (used by the parity tests and the benchmark).
"""

import os

from . import _numpy as _numpy_backend

try:
    from . import _speedups as _compiled_backend
except ImportError:
    _compiled_backend = None

_BACKENDS = {"py": _numpy_backend}
if _compiled_backend is not None:
    _BACKENDS["c"] = _compiled_backend

_active = None


def available_backends():
    return sorted(_BACKENDS)


def get_backend():
    return _active


def set_backend(name):
    """Route row_dots/transpose_dot/masked_row_sum through the named backend."""
    global _active, row_dots, transpose_dot, masked_row_sum
    if name not in _BACKENDS:
        raise ValueError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        )
    backend = _BACKENDS[name]
    row_dots = backend.row_dots
    transpose_dot = backend.transpose_dot
    masked_row_sum = backend.masked_row_sum
    _active = name


_requested = os.environ.get("PULREC_KERNELS")
if _requested is None:
    _requested = "c" if _compiled_backend is not None else "py"
set_backend(_requested)
