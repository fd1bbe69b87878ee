"""Hot numeric kernels: the GARCH path recursion and windowed power sums.

The recursion is inherently serial and the power sums walk every element,
so both are compiled with numba by default.  Set ``GARCHMOMENTS_NUMBA=0``
to select the pure NumPy/Python fallback path instead (same results for
the path kernel, which shares the exact loop; the fallback power sums use
NumPy's pairwise reduction instead of Kahan compensation, which is of
comparable accuracy).  ``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import math
import os

import numpy as np


def _numba_requested() -> bool:
    flag = os.environ.get("GARCHMOMENTS_NUMBA", "1").strip().lower()
    return flag not in ("0", "false", "no", "off")


# ---------------------------------------------------------------------------
# reference implementations


def _garch_path_impl(z, alpha0, alpha1, beta1, sigma0_sq, cap, out):
    # x_t = z_t * sigma_t,  sigma_{t+1}^2 = alpha0 + alpha1 x_t^2 + beta1 sigma_t^2
    sig2 = sigma0_sq
    n = z.shape[0]
    for t in range(n):
        if sig2 > cap:
            return t
        x = z[t] * math.sqrt(sig2)
        out[t] = x
        sig2 = alpha0 + alpha1 * x * x + beta1 * sig2
    return -1


def _even_power_sums_impl(x, m):
    # Kahan-compensated sums of x^2, x^4, ..., x^(2m)
    sums = np.zeros(m)
    comp = np.zeros(m)
    for i in range(x.shape[0]):
        xx = x[i] * x[i]
        p = 1.0
        for j in range(m):
            p *= xx
            y = p - comp[j]
            t = sums[j] + y
            comp[j] = (t - sums[j]) - y
            sums[j] = t
    return sums


def _rolling_even_power_sums_impl(x, window, step, m):
    n = x.shape[0]
    count = (n - window) // step + 1
    out = np.empty((count, m))
    for w in range(count):
        start = w * step
        sums = np.zeros(m)
        comp = np.zeros(m)
        for i in range(start, start + window):
            xx = x[i] * x[i]
            p = 1.0
            for j in range(m):
                p *= xx
                y = p - comp[j]
                t = sums[j] + y
                comp[j] = (t - sums[j]) - y
                sums[j] = t
        for j in range(m):
            out[w, j] = sums[j]
    return out


# ---------------------------------------------------------------------------
# NumPy fallbacks for the vectorizable kernels


def _even_power_sums_numpy(x, m):
    out = np.empty(m)
    xx = x * x
    p = xx.copy()
    for j in range(m):
        if j:
            p = p * xx
        out[j] = np.add.reduce(p)
    return out


def _rolling_even_power_sums_numpy(x, window, step, m):
    view = np.lib.stride_tricks.sliding_window_view(x, window)[::step]
    out = np.empty((view.shape[0], m))
    xx = view * view
    p = xx.copy()
    for j in range(m):
        if j:
            p = p * xx
        out[:, j] = np.add.reduce(p, axis=1)
    return out


# ---------------------------------------------------------------------------
# backend selection

BACKEND = "python"
_garch_path_py = _garch_path_impl
_garch_path_active = _garch_path_impl
_even_power_sums_active = _even_power_sums_numpy
_rolling_even_power_sums_active = _rolling_even_power_sums_numpy
_garch_path_jit = None
_even_power_sums_jit = None
_rolling_even_power_sums_jit = None

if _numba_requested():
    try:
        from numba import njit

        _garch_path_jit = njit(cache=True)(_garch_path_impl)
        _even_power_sums_jit = njit(cache=True)(_even_power_sums_impl)
        _rolling_even_power_sums_jit = njit(cache=True)(_rolling_even_power_sums_impl)
        _garch_path_active = _garch_path_jit
        _even_power_sums_active = _even_power_sums_jit
        _rolling_even_power_sums_active = _rolling_even_power_sums_jit
        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a hard dependency
        pass


# ---------------------------------------------------------------------------
# public wrappers


def garch_path(
    z: np.ndarray,
    alpha0: float,
    alpha1: float,
    beta1: float,
    sigma0_sq: float,
    cap: float,
) -> tuple[np.ndarray, int]:
    """Run the conditional-variance recursion over innovations ``z``.

    Returns ``(x, overflow_index)`` where ``overflow_index`` is -1 on
    success, else the first step at which the variance exceeded ``cap``
    (entries from that step on are unspecified).
    """
    z = np.ascontiguousarray(z, dtype=np.float64)
    out = np.empty_like(z)
    idx = _garch_path_active(
        z, float(alpha0), float(alpha1), float(beta1), float(sigma0_sq), float(cap), out
    )
    return out, int(idx)


def even_power_sums(x: np.ndarray, max_order: int) -> np.ndarray:
    """Sums of x^2, x^4, ..., x^max_order (max_order even)."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _even_power_sums_active(x, max_order // 2)


def rolling_even_power_sums(
    x: np.ndarray, window: int, step: int, max_order: int
) -> np.ndarray:
    """Per-window sums of x^2 .. x^max_order over sliding windows."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    return _rolling_even_power_sums_active(x, int(window), int(step), max_order // 2)
