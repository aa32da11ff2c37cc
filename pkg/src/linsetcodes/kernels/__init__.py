"""Backend selection for the hot enumeration kernels.

Two interchangeable implementations exist: a numba-jitted one (default
whenever numba imports) and a pure-numpy one.  Set the environment
variable LINSETCODES_BACKEND to "numba" or "numpy" to force a choice;
every kernel returns identical arrays on both backends.
"""

from __future__ import annotations

import os

BACKEND_ENV = "LINSETCODES_BACKEND"

try:
    from . import numba_backend as _numba_backend
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    _numba_backend = None

from . import numpy_backend as _numpy_backend


def available_backends():
    names = []
    if _numba_backend is not None:
        names.append("numba")
    names.append("numpy")
    return names


def active_backend_name():
    forced = os.environ.get(BACKEND_ENV, "").strip().lower()
    if forced:
        if forced not in ("numba", "numpy"):
            raise ValueError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {forced!r}")
        if forced == "numba" and _numba_backend is None:
            raise ValueError("numba backend requested but numba is not importable")
        return forced
    return "numba" if _numba_backend is not None else "numpy"


def get_backend(name=None):
    """Kernel module for the requested (or environment-selected) backend."""
    name = name or active_backend_name()
    if name == "numba":
        if _numba_backend is None:
            raise ValueError("numba backend is not available")
        return _numba_backend
    if name == "numpy":
        return _numpy_backend
    raise ValueError(f"unknown backend {name!r}")


def incidence_counts(member, exp, log, zech, neg, Q):
    return get_backend().incidence_counts(member, exp, log, zech, neg, Q)


def codeword_weight_counts(g1, g2, g3, exp, log, zech, neg, Q):
    return get_backend().codeword_weight_counts(g1, g2, g3, exp, log, zech, neg, Q)


def graph_weights(fbasis, slopes, exp, log, zech, neg, q, n, Q):
    return get_backend().graph_weights(fbasis, slopes, exp, log, zech, neg, q, n, Q)


def semilinear_search(bx, bf, j2, ug_a, ug_b, member2, frob, exps,
                      exp, log, zech, neg, Q):
    return get_backend().semilinear_search(bx, bf, j2, ug_a, ug_b, member2,
                                           frob, exps, exp, log, zech, neg, Q)
