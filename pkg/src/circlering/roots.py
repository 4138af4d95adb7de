"""Circle divisors of trigonometric polynomials.

The divisor of a nonzero trig polynomial T is the multiset of its zeros on
the circle, with multiplicities. The pipeline:

1. Lift T to its Laurent form and read off the ordinary complex polynomial
   ``q(z) = z^N sum c_k z^k`` of degree 2N; its roots account for every zero.
2. Find all roots of q with the Aberth-Ehrlich kernel (deterministic
   initialization, see ``backend``).
3. Seed candidate angles from near-circle roots, then certify each candidate
   against T itself: Newton on the (m-1)-th derivative locates a hypothesis-m
   zero to full precision, the derivative chain (``zero_order``) must confirm
   the order, and exactly m roots of q must lie nearby. Certification is what
   makes multiplicities trustworthy: raw root clusters scatter like
   eps^(1/m) around a multiplicity-m zero, far too wide to read the
   multiplicity off cluster sizes alone.

Any inconsistency (odd total multiplicity, a near-circle root no certified
zero accounts for, a residual above tolerance) raises ``NonConvergence`` with
diagnostics instead of silently choosing an answer.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .divisor import Divisor, TWO_PI, as_angle, circle_dist, circular_mean, wrap_angle
from .errors import NonConvergence, ZeroPolynomial
from .trigpoly import TrigPoly


@dataclass(frozen=True)
class RootConfig:
    """Tolerances and sizes for the circle-zero search."""

    tol_radius: float = 1e-6  # off-circle rejection threshold on ||z|-1|
    tol_residual: float = 1e-8  # "numerically zero" relative to coefficient scale
    max_iter: int = 200
    cluster_radius: float = 1e-5
    grid_size: int = 4096

    def __post_init__(self):
        if min(self.tol_radius, self.tol_residual, self.cluster_radius) <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_iter < 1 or self.grid_size < 8:
            raise ValueError("max_iter must be >= 1 and grid_size >= 8")


DEFAULT_CONFIG = RootConfig()

# Candidate seeds are taken from roots with ||z|-1| below this; generous on
# purpose, since a multiplicity-m root cluster can scatter ~ eps^(1/m).
_NEAR_BAND = 0.1
# Effective coefficient noise when estimating that scatter.
_NOISE = 1e-12
_NEWTON_STEPS = 80
_SAME_POINT = 1e-9  # two certified zeros closer than this are the same zero
_MAX_ORDER = 12


def _scatter(m: int) -> float:
    return _NOISE ** (1.0 / m)


def _hypothesis_radius(m: int) -> float:
    """How far from its seed a certified multiplicity-m zero may sit."""
    return min(max(20.0 * _scatter(m), 1e-4), 0.15)


def _claim_radius(m: int) -> float:
    """Complex-plane ball around a certified zero that its q-roots must fill."""
    return min(max(3.0 * _scatter(m), 1e-4), 0.1)


def _derivative_chain(T: TrigPoly, upto: int) -> list[TrigPoly]:
    chain = [T]
    for _ in range(upto):
        chain.append(chain[-1].derivative())
    return chain


def _order_from_chain(chain: list[TrigPoly], theta: float, tol_residual: float) -> int:
    """Largest m with T, T', ..., T^(m-1) all numerically zero at theta."""
    order = 0
    for d in chain:
        if d.is_zero():
            break
        scale = d.coeff_scale()
        if abs(d.evaluate(theta)) > tol_residual * scale:
            break
        order += 1
    return order


def zero_order(T: TrigPoly, p, cfg: RootConfig = DEFAULT_CONFIG) -> int:
    """Order of the zero of T at the point ``p`` (0 if T(p) is not small).

    The k-th derivative counts as vanishing when it is below
    ``tol_residual`` relative to its own coefficient scale.
    """
    if T.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes identically")
    cap = max(2 * T.degree, 1)
    chain = _derivative_chain(T, cap)
    return _order_from_chain(chain, as_angle(p), cfg.tol_residual)


def _newton_simple_zero(
    D: TrigPoly, dD: TrigPoly, guess: float, radius: float
) -> float | None:
    """Newton iteration toward a simple zero of D near ``guess``.

    Returns the refined angle, or None when the iteration leaves the allowed
    radius, hits a flat spot, or fails to settle.
    """
    scale = max(dD.coeff_scale(), 1e-300)
    x = guess
    for _ in range(_NEWTON_STEPS):
        dv = dD.evaluate(x)
        if abs(dv) <= 1e-14 * scale:
            return None
        step = D.evaluate(x) / dv
        x -= step
        if abs(x - guess) > radius or not math.isfinite(x):
            return None
        if abs(step) <= 1e-13 * (1.0 + abs(x)):
            return x
    return None


def _count_roots_near(roots: np.ndarray, theta: float, radius: float) -> int:
    target = complex(math.cos(theta), math.sin(theta))
    return int(np.count_nonzero(np.abs(roots - target) <= radius))


def _certify(
    T: TrigPoly,
    chain: list[TrigPoly],
    roots: np.ndarray,
    guess: float,
    cfg: RootConfig,
) -> tuple[float, int] | None:
    """Certify a zero of T near ``guess``: its exact location and order.

    Sweeps multiplicity hypotheses; hypothesis m refines the location with
    Newton on the (m-1)-th derivative (a simple zero there), and is accepted
    only if the derivative chain confirms order exactly m and exactly m roots
    of the lifted polynomial lie nearby. The largest certified m wins.
    """
    max_m = min(len(chain) - 1, _MAX_ORDER)
    best: tuple[float, int] | None = None
    for m in range(1, max_m + 1):
        d = chain[m - 1]
        if d.is_zero():
            break
        p = _newton_simple_zero(d, chain[m], guess, _hypothesis_radius(m))
        if p is None:
            continue
        if _order_from_chain(chain, p, cfg.tol_residual) != m:
            continue
        if _count_roots_near(roots, p, _claim_radius(m)) != m:
            continue
        best = (wrap_angle(p), m)
    return best


def _angle_clusters(angles: list[float], radius: float) -> list[list[float]]:
    if not angles:
        return []
    angles = sorted(angles)
    clusters = [[angles[0]]]
    for a in angles[1:]:
        if a - clusters[-1][-1] <= radius:
            clusters[-1].append(a)
        else:
            clusters.append([a])
    if len(clusters) > 1 and clusters[0][0] + TWO_PI - clusters[-1][-1] <= radius:
        clusters[0] = clusters.pop() + clusters[0]
    return clusters


@dataclass(frozen=True)
class ZeroSearchReport:
    """Outcome of a circle-zero search."""

    divisor: Divisor
    warnings: tuple[str, ...]
    iterations: int
    backend: str


def find_circle_zeros(T: TrigPoly, cfg: RootConfig = DEFAULT_CONFIG) -> ZeroSearchReport:
    """Locate all circle zeros of T with certified multiplicities."""
    if T.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes identically")
    n = T.degree
    if n == 0:
        return ZeroSearchReport(Divisor.empty(), (), 0, backend.BACKEND)

    q = T.to_laurent().coeffs  # q_j = c_{j-N}: already an ordinary polynomial
    roots, iters, ok = backend.aberth_roots(q, max_iter=cfg.max_iter)
    if not ok:
        raise NonConvergence(
            "root iteration did not converge",
            {"iterations": iters, "degree": 2 * n},
        )

    radial = np.abs(np.abs(roots) - 1.0)
    near = [wrap_angle(cmath.phase(z)) for z, r in zip(roots, radial) if r <= _NEAR_BAND]

    chain = _derivative_chain(T, min(2 * n, _MAX_ORDER))
    certified: list[tuple[float, int]] = []
    for cluster in _angle_clusters(near, cfg.cluster_radius):
        result = _certify(T, chain, roots, circular_mean(cluster), cfg)
        if result is not None:
            certified.append(result)

    # Multiple seeds converge to the same zero; keep one copy. Genuinely
    # distinct zeros closer than the cluster radius merge with summed
    # multiplicity (they are one point at engine resolution).
    certified.sort()
    unique: list[tuple[float, int]] = []
    for theta, m in certified:
        if unique and circle_dist(theta, unique[-1][0]) <= _SAME_POINT:
            if unique[-1][1] != m:
                raise NonConvergence(
                    "conflicting multiplicities certified for one zero",
                    {"theta": theta, "orders": (unique[-1][1], m)},
                )
            continue
        unique.append((theta, m))
    if len(unique) > 1 and circle_dist(unique[0][0], unique[-1][0]) <= _SAME_POINT:
        if unique[0][1] != unique[-1][1]:
            raise NonConvergence(
                "conflicting multiplicities certified for one zero",
                {"theta": unique[0][0], "orders": (unique[0][1], unique[-1][1])},
            )
        unique.pop()

    merged: list[tuple[float, int]] = []
    for theta, m in unique:
        if merged and circle_dist(theta, merged[-1][0]) <= cfg.cluster_radius:
            prev_t, prev_m = merged.pop()
            merged.append((circular_mean([prev_t, theta], [prev_m, m]), prev_m + m))
        else:
            merged.append((theta, m))
    if len(merged) > 1 and circle_dist(merged[0][0], merged[-1][0]) <= cfg.cluster_radius:
        t_last, m_last = merged.pop()
        t0, m0 = merged.pop(0)
        merged.insert(0, (circular_mean([t_last, t0], [m_last, m0]), m_last + m0))

    # Bookkeeping against the full root set of q.
    warnings: list[str] = []
    scale = T.coeff_scale()
    total = 0
    for theta, m in merged:
        total += m
        residual = abs(T.evaluate(theta))
        if residual > cfg.tol_residual * scale:
            raise NonConvergence(
                "certified zero fails the residual check",
                {"theta": theta, "residual": residual, "scale": scale},
            )
    if total > 2 * n or total % 2 != 0:
        raise NonConvergence(
            "zero count is inconsistent (must be even and at most 2N)",
            {"total": total, "max": 2 * n, "zeros": merged},
        )

    if merged:
        points = np.array([complex(math.cos(t), math.sin(t)) for t, _ in merged])
        claim = np.array([_claim_radius(m) for _, m in merged])
        dist = np.abs(roots[:, None] - points[None, :])
        claimed = (dist <= claim[None, :]).any(axis=1)
    else:
        claimed = np.zeros(len(roots), dtype=bool)
    for z, r, taken in zip(roots, radial, claimed):
        if taken:
            continue
        if r <= cfg.tol_radius:
            raise NonConvergence(
                "a root on the circle is not accounted for by any certified zero",
                {"root": (z.real, z.imag), "radial": float(r), "zeros": merged},
            )
        if r <= 10.0 * cfg.tol_radius:
            warnings.append(
                f"ambiguous root near the circle excluded: |z|-1 = {r:.3e} "
                f"at angle {wrap_angle(cmath.phase(z)):.6f}"
            )

    divisor = Divisor.of(merged) if merged else Divisor.empty()
    return ZeroSearchReport(divisor, tuple(warnings), iters, backend.BACKEND)


def circle_divisor(T: TrigPoly, cfg: RootConfig = DEFAULT_CONFIG) -> Divisor:
    """The divisor of circle zeros of T, multiplicities included."""
    return find_circle_zeros(T, cfg).divisor


def sign_changes(T: TrigPoly, cfg: RootConfig = DEFAULT_CONFIG) -> int:
    """Sign alternations of T around the circle; always even.

    Grid samples within ``cluster_radius`` of a reported zero are excluded
    first, so even-order zeros contribute no spurious flips.
    """
    zeros = circle_divisor(T, cfg)
    thetas = np.linspace(0.0, TWO_PI, cfg.grid_size, endpoint=False)
    values = T.evaluate(thetas)
    keep = np.ones(cfg.grid_size, dtype=bool)
    for p, _ in zeros:
        delta = np.abs(thetas - p.theta)
        keep &= np.minimum(delta, TWO_PI - delta) > cfg.cluster_radius
    signs = np.sign(values[keep])
    signs = signs[signs != 0]
    if len(signs) < 2:
        return 0
    return int(np.count_nonzero(signs != np.roll(signs, -1)))
