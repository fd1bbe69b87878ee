"""Deterministic bracketing helpers shared by the fitting and phase scans."""

from __future__ import annotations

import math
from typing import Callable


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    flo: float,
    fhi: float,
    *,
    xtol_rel: float = 1e-13,
    ftol: float = 0.0,
    max_iter: int = 200,
) -> float:
    """Bisection on a bracketed sign change; returns the midpoint.

    Iterates until the interval shrinks below ``xtol_rel`` relative to its
    midpoint (with a tiny absolute floor) and, when ``ftol`` > 0, the
    midpoint residual is within ``ftol``.
    """
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError("bisect requires a sign change")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
        width = hi - lo
        if width <= xtol_rel * max(abs(lo), abs(hi), 1e-300):
            if ftol <= 0.0 or abs(fm) <= ftol:
                break
    return 0.5 * (lo + hi)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    maximize: bool = False,
    xtol_rel: float = 1e-10,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Golden-section search for an interior extremum on [a, b].

    Returns ``(x, f(x))``; assumes f is unimodal on the interval.
    """
    sign = -1.0 if maximize else 1.0
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = sign * f(c)
    fd = sign * f(d)
    for _ in range(max_iter):
        if b - a <= xtol_rel * max(abs(a), abs(b), 1e-300):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = sign * f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = sign * f(d)
    x = 0.5 * (a + b)
    return x, f(x)
