"""Inner loops of truncated series arithmetic.

Two interchangeable implementations are kept side by side: numba-compiled
loops over int64 buffers, and plain numpy.  Set ``RRCAUCHY_DISABLE_NUMBA=1``
to force the numpy path (also used automatically when numba is missing).

All kernels work on int64 arrays only; callers are responsible for proving
that no intermediate value can overflow and for routing anything else
through :func:`convolve_object` / the object-dtype numpy fallbacks.
"""
import os

import numpy as np

INT64_LIMIT = 2**62

_DISABLED = os.environ.get("RRCAUCHY_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


# -- numpy reference implementations ---------------------------------------

def convolve_trunc_numpy(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    return np.convolve(a[: n + 1], b[: n + 1])[: n + 1]


def divide_one_minus_numpy(f: np.ndarray, e: int) -> np.ndarray:
    # g = f / (1 - q^e): running sums along each residue class mod e
    g = f.copy()
    for r in range(min(e, len(f))):
        g[r::e] = np.cumsum(f[r::e])
    return g


def multiply_one_minus_numpy(f: np.ndarray, e: int) -> np.ndarray:
    g = f.copy()
    if e < len(f):
        g[e:] -= f[: len(f) - e]
    return g


# -- numba versions -----------------------------------------------------------

def _convolve_trunc_loop(a, b, n):
    out = np.zeros(n + 1, dtype=np.int64)
    la = min(len(a), n + 1)
    lb = min(len(b), n + 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        top = min(lb, n + 1 - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _divide_one_minus_loop(f, e):
    g = f.copy()
    for i in range(e, len(g)):
        g[i] += g[i - e]
    return g


def _multiply_one_minus_loop(f, e):
    g = f.copy()
    for i in range(e, len(g)):
        g[i] -= f[i - e]
    return g


if njit is not None:
    convolve_trunc_numba = njit(cache=True)(_convolve_trunc_loop)
    divide_one_minus_numba = njit(cache=True)(_divide_one_minus_loop)
    multiply_one_minus_numba = njit(cache=True)(_multiply_one_minus_loop)
else:  # pragma: no cover
    convolve_trunc_numba = None
    divide_one_minus_numba = None
    multiply_one_minus_numba = None

USING_NUMBA = njit is not None and not _DISABLED

if USING_NUMBA:
    convolve_trunc = convolve_trunc_numba
    divide_one_minus = divide_one_minus_numba
    multiply_one_minus = multiply_one_minus_numba
else:
    convolve_trunc = convolve_trunc_numpy
    divide_one_minus = divide_one_minus_numpy
    multiply_one_minus = multiply_one_minus_numpy


def convolve_object(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Exact truncated product for object arrays (Python ints or Fractions)."""
    return np.convolve(a[: n + 1].astype(object), b[: n + 1].astype(object))[: n + 1]
