"""Brute-force reference implementations.

These deliberately avoid the polynomial-lift root finder so they can serve
as an independent check on it: circle zeros come from dense sampling plus
bisection, and factorization counts come from a naive labeled enumeration.
"""

from __future__ import annotations

import math

import numpy as np

from .divisor import Divisor, TWO_PI
from .errors import ZeroPolynomial
from .roots import DEFAULT_CONFIG, RootConfig, zero_order
from .trigpoly import TrigPoly

_SAMPLES = 1 << 16
_BISECT_STEPS = 60


def _bisect(f, lo: float, hi: float) -> float:
    """Sign-change bisection of a continuous function on [lo, hi]."""
    flo = f(lo)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo <= 1e-13:
            break
    return 0.5 * (lo + hi)


def sampled_circle_divisor(
    T: TrigPoly, cfg: RootConfig = DEFAULT_CONFIG, samples: int = _SAMPLES
) -> Divisor:
    """Circle divisor by dense sampling.

    Odd-order zeros are sign-change brackets of T; even-order zeros are
    sign-change brackets of T' whose extremum value is numerically zero.
    The order at each refined point comes from the derivative chain.
    """
    if T.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes identically")
    if T.degree == 0:
        return Divisor.empty()
    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    values = T.evaluate(thetas)
    scale = T.coeff_scale()

    found: list[tuple[float, int]] = []
    signs = np.sign(values)
    flips = np.nonzero((signs != 0) & (np.roll(signs, -1) != 0) & (signs != np.roll(signs, -1)))[0]
    for i in flips:
        lo = thetas[i]
        hi = lo + TWO_PI / samples
        p = _bisect(T.evaluate, lo, hi)
        found.append((p, zero_order(T, p, cfg)))

    dT = T.derivative()
    dvalues = dT.evaluate(thetas)
    dsigns = np.sign(dvalues)
    dflips = np.nonzero(
        (dsigns != 0) & (np.roll(dsigns, -1) != 0) & (dsigns != np.roll(dsigns, -1))
    )[0]
    for i in dflips:
        lo = thetas[i]
        hi = lo + TWO_PI / samples
        p = _bisect(dT.evaluate, lo, hi)
        if abs(T.evaluate(p)) > cfg.tol_residual * scale:
            continue
        gap = min(abs(p - q) % TWO_PI for q, _ in found) if found else math.inf
        if min(gap, TWO_PI - gap) <= cfg.cluster_radius:
            continue  # already found as an odd-order zero
        found.append((p, zero_order(T, p, cfg)))

    if not found:
        return Divisor.empty()
    return Divisor.of(found)


def count_pairings(items: list) -> int:
    """Number of distinct perfect matchings of a multiset, by brute force.

    Enumerates every labeled pairing recursively and collapses duplicates by
    canonical signature; for 2m distinct items this is (2m-1)!!.
    """
    items = list(items)
    if len(items) % 2 != 0:
        raise ValueError("perfect matchings need an even number of items")

    signatures = set()

    def rec(remaining: tuple, acc: tuple):
        if not remaining:
            signatures.add(tuple(sorted(acc)))
            return
        first, rest = remaining[0], remaining[1:]
        for i, partner in enumerate(rest):
            pair = tuple(sorted((first, partner)))
            rec(rest[:i] + rest[i + 1 :], acc + (pair,))

    if items:
        rec(tuple(items), ())
        return len(signatures)
    return 1
