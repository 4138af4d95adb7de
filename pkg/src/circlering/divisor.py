"""Circle points and divisors.

A divisor is a finite multiset of points on the unit circle with positive
integer multiplicities. Divisors are the canonical form of nonzero ideals in
the ring this package models: the ideal product corresponds to divisor
addition, ideal containment reverses pointwise divisor comparison, and
principality is decided by the parity of the total degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

TWO_PI = math.tau

# Default circle-metric tolerance for treating two angles as the same point.
POINT_TOL = 1e-8


def wrap_angle(theta: float) -> float:
    """Reduce an angle into [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:  # fmod of a tiny negative can round up to 2*pi exactly
        t -= TWO_PI
    return t


def circle_dist(t1: float, t2: float) -> float:
    """Distance between two angles along the circle (both in [0, 2*pi))."""
    d = abs(t1 - t2)
    return min(d, TWO_PI - d)


def circular_mean(angles: list[float], weights: list[float] | None = None) -> float:
    """Weighted mean of angles, seam-safe; a singleton is returned unchanged."""
    if len(angles) == 1:
        return wrap_angle(angles[0])
    if weights is None:
        weights = [1.0] * len(angles)
    x = sum(w * math.cos(a) for a, w in zip(angles, weights))
    y = sum(w * math.sin(a) for a, w in zip(angles, weights))
    return wrap_angle(math.atan2(y, x))


@dataclass(frozen=True, eq=False)
class CirclePoint:
    """A point of the unit circle, stored as an angle in [0, 2*pi).

    Equality is circle-metric with the default tolerance ``POINT_TOL``;
    consequently points are not hashable.
    """

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise ValueError(f"angle must be finite, got {self.theta}")
        object.__setattr__(self, "theta", wrap_angle(self.theta))

    def dist(self, other: "CirclePoint | float") -> float:
        return circle_dist(self.theta, as_angle(other))

    def close_to(self, other: "CirclePoint | float", tol: float = POINT_TOL) -> bool:
        return self.dist(other) <= tol

    def __eq__(self, other) -> bool:
        if isinstance(other, (CirclePoint, float, int)):
            return self.close_to(other)
        return NotImplemented

    __hash__ = None  # tolerance-based equality is incompatible with hashing

    def __repr__(self) -> str:
        return f"CirclePoint({self.theta!r})"


AngleLike = Union[CirclePoint, float, int]


def as_angle(p: AngleLike) -> float:
    if isinstance(p, CirclePoint):
        return p.theta
    return wrap_angle(float(p))


def _merge_entries(
    items: Iterable[tuple[float, int]], tol: float
) -> tuple[tuple[float, int], ...]:
    """Single-linkage merge of (angle, multiplicity) pairs within ``tol``.

    The representative of a merged cluster is the multiplicity-weighted
    circular mean; a singleton keeps its angle bit-for-bit so canonical form
    is idempotent.
    """
    pairs = sorted(items)
    if not pairs:
        return ()
    clusters: list[list[tuple[float, int]]] = [[pairs[0]]]
    for theta, mult in pairs[1:]:
        if theta - clusters[-1][-1][0] <= tol:
            clusters[-1].append((theta, mult))
        else:
            clusters.append([(theta, mult)])
    # Seam: the first and last clusters may be neighbours across 0/2*pi.
    if len(clusters) > 1:
        gap = clusters[0][0][0] + TWO_PI - clusters[-1][-1][0]
        if gap <= tol:
            clusters[0] = clusters.pop() + clusters[0]
    merged = []
    for cluster in clusters:
        angles = [a for a, _ in cluster]
        mults = [m for _, m in cluster]
        merged.append((circular_mean(angles, [float(m) for m in mults]), sum(mults)))
    return tuple(sorted(merged))


@dataclass(frozen=True, eq=False)
class Divisor:
    """Sorted, merged multiset of circle points with multiplicities."""

    entries: tuple[tuple[CirclePoint, int], ...]

    @staticmethod
    def of(items: Iterable[tuple[AngleLike, int]], tol: float = POINT_TOL) -> "Divisor":
        """Build a canonical divisor, merging points within ``tol``."""
        raw = []
        for p, m in items:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
            raw.append((as_angle(p), m))
        merged = _merge_entries(raw, tol)
        return Divisor(tuple((CirclePoint(t), m) for t, m in merged))

    @staticmethod
    def empty() -> "Divisor":
        return Divisor(())

    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def parity(self) -> int:
        return self.degree() % 2

    def is_empty(self) -> bool:
        return not self.entries

    def add(self, other: "Divisor", tol: float = POINT_TOL) -> "Divisor":
        """Multiset union; corresponds to the product of the ideals."""
        items = [(p.theta, m) for p, m in self.entries]
        items += [(p.theta, m) for p, m in other.entries]
        return Divisor.of(items, tol)

    __add__ = add

    def leq(self, other: "Divisor", tol: float = POINT_TOL) -> bool:
        """Pointwise comparison: every entry of self fits inside other.

        Ideal containment runs the other way: self <= other means
        ideal(other) is contained in ideal(self).
        """
        for p, m in self.entries:
            if not any(p.close_to(q, tol) and m <= m2 for q, m2 in other.entries):
                return False
        return True

    __le__ = leq

    def expand(self) -> list[CirclePoint]:
        """Points repeated by multiplicity, sorted by angle."""
        out: list[CirclePoint] = []
        for p, m in self.entries:
            out.extend([p] * m)
        return out

    def multiplicity_at(self, p: AngleLike, tol: float = POINT_TOL) -> int:
        for q, m in self.entries:
            if q.close_to(p, tol):
                return m
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        if len(self.entries) != len(other.entries):
            return False
        return all(
            p == q and m == m2
            for (p, m), (q, m2) in zip(self.entries, other.entries)
        )

    __hash__ = None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[CirclePoint, int]]:
        return iter(self.entries)

    def __repr__(self) -> str:
        inner = ", ".join(f"{p.theta:.6g}:{m}" for p, m in self.entries)
        return f"Divisor({{{inner}}})"
