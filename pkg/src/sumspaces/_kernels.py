"""Hot numeric kernels with optional numba JIT.

Both kernels walk the power chain of a fixed factor by successive
multiplication; no binary powering, so the floating-point sequence is the
one the plain iteration would produce.

The jitted and pure-numpy paths are compiled from the same source.  The
numpy path is selected when numba is unavailable or when the environment
variable ``SUMSPACES_NO_NUMBA`` is set to a non-empty value other than
``0``.  ``benchmarks/bench_kernels.py`` times the two paths side by side.
"""

import os

import numpy as np


def _power_chain(m, n_steps):
    # m^n_steps by n_steps-1 successive multiplications
    b = m.copy()
    for _ in range(n_steps - 1):
        b = b @ m
    return b


def _error_series(m, target, n_steps):
    # errors[i] = sigma_max((I - m^(i+1)) - target) for i = 0..n_steps-1.
    # Subtracting b from the precomputed I - target keeps the tiny entries
    # of b alive when target is (near) the identity.
    d = m.shape[0]
    base = np.eye(d) - target
    errors = np.empty(n_steps)
    b = m.copy()
    for i in range(n_steps):
        if i > 0:
            b = b @ m
        diff = base - b
        u, s, vt = np.linalg.svd(diff)
        errors[i] = s[0]
    return errors


power_chain_numpy = _power_chain
error_series_numpy = _error_series

_disabled = os.environ.get("SUMSPACES_NO_NUMBA", "").strip() not in ("", "0")

NUMBA_ENABLED = False
if not _disabled:
    try:
        from numba import njit

        power_chain_jit = njit(cache=True)(_power_chain)
        error_series_jit = njit(cache=True)(_error_series)
        NUMBA_ENABLED = True
    except ImportError:
        pass

if NUMBA_ENABLED:
    power_chain = power_chain_jit
    error_series = error_series_jit
else:
    power_chain = power_chain_numpy
    error_series = error_series_numpy
