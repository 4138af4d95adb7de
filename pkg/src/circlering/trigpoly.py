"""Real trigonometric polynomials with structurally exact arithmetic.

A ``TrigPoly`` is a finite sum ``a_0 + sum_k a_k*cos(k*x) + b_k*sin(k*x)``.
These are the computable dense subring of the real-analytic functions on the
circle: every divisor used by the ideal machinery is realized by one, and all
products are formed through closed-form product-to-sum identities so the
coefficients stay exact up to floating-point rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .divisor import AngleLike, CirclePoint, POINT_TOL, as_angle, circle_dist, circular_mean

# Trailing harmonics whose coefficient pair is below this times the peak
# coefficient magnitude are trimmed; products of near-cancelling terms must
# not inflate the degree.
TRIM_REL = 1e-12


def _canonical(
    cos_coeffs: Sequence[float], sin_coeffs: Sequence[float]
) -> tuple[tuple[float, ...], tuple[float, ...]]:
    a = [float(c) for c in cos_coeffs]
    b = [float(c) for c in sin_coeffs]
    if not a:
        a = [0.0]
    if len(b) != len(a) - 1:
        raise ValueError(
            f"need one sin coefficient per harmonic: got {len(a)} cos, {len(b)} sin"
        )
    if not all(math.isfinite(c) for c in a + b):
        raise ValueError("coefficients must be finite")
    peak = max([abs(c) for c in a] + [abs(c) for c in b], default=0.0)
    cut = TRIM_REL * peak
    while len(a) > 1 and max(abs(a[-1]), abs(b[-1])) <= cut:
        a.pop()
        b.pop()
    if len(a) == 1 and abs(a[0]) <= cut:
        a[0] = 0.0
    return tuple(a), tuple(b)


@dataclass(frozen=True)
class TrigPoly:
    """Canonical trig polynomial: ``cos_coeffs = (a_0..a_N)``, ``sin_coeffs = (b_1..b_N)``."""

    cos_coeffs: tuple[float, ...]
    sin_coeffs: tuple[float, ...] = ()

    def __post_init__(self):
        a, b = _canonical(self.cos_coeffs, self.sin_coeffs)
        object.__setattr__(self, "cos_coeffs", a)
        object.__setattr__(self, "sin_coeffs", b)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "TrigPoly":
        return TrigPoly((0.0,))

    @staticmethod
    def constant(c: float) -> "TrigPoly":
        return TrigPoly((float(c),))

    @staticmethod
    def cosine(k: int = 1, coeff: float = 1.0) -> "TrigPoly":
        """``coeff * cos(k*x)``."""
        if k < 0:
            raise ValueError("harmonic index must be nonnegative")
        if k == 0:
            return TrigPoly.constant(coeff)
        a = [0.0] * (k + 1)
        a[k] = float(coeff)
        return TrigPoly(tuple(a), (0.0,) * k)

    @staticmethod
    def sine(k: int = 1, coeff: float = 1.0) -> "TrigPoly":
        """``coeff * sin(k*x)``."""
        if k < 1:
            raise ValueError("harmonic index must be positive")
        b = [0.0] * k
        b[k - 1] = float(coeff)
        return TrigPoly((0.0,) * (k + 1), tuple(b))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.cos_coeffs) - 1

    def is_zero(self) -> bool:
        return self.degree == 0 and self.cos_coeffs[0] == 0.0

    def a(self, k: int) -> float:
        """Cosine coefficient of harmonic ``k`` (0 beyond the degree)."""
        return self.cos_coeffs[k] if 0 <= k <= self.degree else 0.0

    def b(self, k: int) -> float:
        """Sine coefficient of harmonic ``k`` (0 for k=0 or beyond the degree)."""
        return self.sin_coeffs[k - 1] if 1 <= k <= self.degree else 0.0

    def coeff_scale(self) -> float:
        """Sum of absolute coefficients: an upper bound for |T| on the circle."""
        return sum(abs(c) for c in self.cos_coeffs) + sum(abs(c) for c in self.sin_coeffs)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, x):
        """Value at angle(s) ``x``; accepts a float or an ndarray."""
        if isinstance(x, np.ndarray):
            acc = np.full_like(x, self.cos_coeffs[0], dtype=float)
            for k in range(1, self.degree + 1):
                acc += self.cos_coeffs[k] * np.cos(k * x)
                acc += self.sin_coeffs[k - 1] * np.sin(k * x)
            return acc
        x = float(x)
        acc = self.cos_coeffs[0]
        for k in range(1, self.degree + 1):
            acc += self.cos_coeffs[k] * math.cos(k * x)
            acc += self.sin_coeffs[k - 1] * math.sin(k * x)
        return acc

    __call__ = evaluate

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return NotImplemented
        n = max(self.degree, other.degree)
        a = [self.a(k) + other.a(k) for k in range(n + 1)]
        b = [self.b(k) + other.b(k) for k in range(1, n + 1)]
        return TrigPoly(tuple(a), tuple(b))

    def __neg__(self) -> "TrigPoly":
        return TrigPoly(
            tuple(-c for c in self.cos_coeffs), tuple(-c for c in self.sin_coeffs)
        )

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: float) -> "TrigPoly":
        c = float(c)
        return TrigPoly(
            tuple(c * v for v in self.cos_coeffs),
            tuple(c * v for v in self.sin_coeffs),
        )

    def multiply(self, other: "TrigPoly") -> "TrigPoly":
        """Exact product via the product-to-sum identities.

        cos(A)cos(B) = (cos(A-B) + cos(A+B)) / 2, and friends; negative
        harmonic indices fold back with cos(-k) = cos(k), sin(-k) = -sin(k).
        For nonzero factors the degree is additive.
        """
        if not isinstance(other, TrigPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return TrigPoly.zero()
        n = self.degree + other.degree
        a = [0.0] * (n + 1)
        b = [0.0] * n  # b[k-1] holds the sin(k*x) coefficient
        for k1 in range(self.degree + 1):
            a1, b1 = self.a(k1), self.b(k1)
            for k2 in range(other.degree + 1):
                a2, b2 = other.a(k2), other.b(k2)
                s, d = k1 + k2, k1 - k2
                if a1 and a2:
                    half = 0.5 * a1 * a2
                    a[abs(d)] += half
                    a[s] += half
                if b1 and b2:
                    half = 0.5 * b1 * b2
                    a[abs(d)] += half
                    a[s] -= half
                if b1 and a2:
                    half = 0.5 * b1 * a2
                    if s:
                        b[s - 1] += half
                    if d > 0:
                        b[d - 1] += half
                    elif d < 0:
                        b[-d - 1] -= half
                if a1 and b2:
                    half = 0.5 * a1 * b2
                    if s:
                        b[s - 1] += half
                    if d > 0:
                        b[d - 1] -= half
                    elif d < 0:
                        b[-d - 1] += half
        return TrigPoly(tuple(a), tuple(b))

    def __mul__(self, other: Union["TrigPoly", float, int]) -> "TrigPoly":
        if isinstance(other, TrigPoly):
            return self.multiply(other)
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TrigPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = TrigPoly.constant(1.0)
        for _ in range(n):
            out = out.multiply(self)
        return out

    def derivative(self) -> "TrigPoly":
        """Termwise derivative: a_k cos -> -k a_k sin, b_k sin -> k b_k cos."""
        n = self.degree
        a = [0.0] + [k * self.b(k) for k in range(1, n + 1)]
        b = [-k * self.a(k) for k in range(1, n + 1)]
        return TrigPoly(tuple(a), tuple(b))

    # -- complex form ------------------------------------------------------

    def to_laurent(self) -> "LaurentPoly":
        """Rewrite as ``sum c_k z^k`` with ``z = e^{ix}``; conjugate-symmetric."""
        n = self.degree
        coeffs = [0j] * (2 * n + 1)
        coeffs[n] = complex(self.cos_coeffs[0])
        for k in range(1, n + 1):
            ck = 0.5 * complex(self.a(k), -self.b(k))
            coeffs[n + k] = ck
            coeffs[n - k] = ck.conjugate()
        return LaurentPoly(tuple(coeffs))

    # -- formatting --------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []

        def push(coeff: float, basis: str):
            if coeff == 0.0:
                return
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = f"{mag!r}" if not basis else f"{mag!r}*{basis}"
            parts.append((sign, body))

        push(self.cos_coeffs[0], "")
        for k in range(1, self.degree + 1):
            arg = "x" if k == 1 else f"{k}*x"
            push(self.a(k), f"cos({arg})")
            push(self.b(k), f"sin({arg})")
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"TrigPoly('{self}')"


@dataclass(frozen=True)
class LaurentPoly:
    """``sum_{k=-N..N} coeffs[N+k] z^k`` with complex coefficients.

    Instances produced by :meth:`TrigPoly.to_laurent` satisfy
    ``c_{-k} == conj(c_k)`` (real-valuedness on the circle); instances built
    as ordinary polynomials in ``z`` simply have zero negative part.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self):
        c = tuple(complex(v) for v in self.coeffs)
        if len(c) % 2 != 1:
            raise ValueError("coefficient count must be odd (k = -N..N)")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return (len(self.coeffs) - 1) // 2

    def evaluate(self, x: float) -> complex:
        """Value of ``sum c_k e^{ikx}`` at the angle ``x``."""
        z = complex(math.cos(x), math.sin(x))
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc * z ** (-self.degree)

    def is_real_on_circle(self, tol: float = 1e-12) -> bool:
        n = self.degree
        scale = max(abs(c) for c in self.coeffs) or 1.0
        return all(
            abs(self.coeffs[n - k] - self.coeffs[n + k].conjugate()) <= tol * scale
            for k in range(n + 1)
        )

    def polynomial_coeffs(self) -> tuple[complex, ...]:
        """Ascending coefficients of an ordinary polynomial in ``z``.

        Valid only when the negative part vanishes (e.g. generator
        polynomials built from divisor points).
        """
        n = self.degree
        if any(c != 0 for c in self.coeffs[:n]):
            raise ValueError("Laurent polynomial has nonzero negative part")
        return self.coeffs[n:]


def pair_generator(p1: AngleLike, p2: AngleLike) -> TrigPoly:
    """Degree-1 generator whose circle divisor is exactly (p1) + (p2).

    For distinct points, ``cos(x - (p1+p2)/2) - cos((p1-p2)/2)`` has simple
    zeros at p1 and p2 and nowhere else. When the points coincide, the result
    is ``2 sin^2((x-p)/2) = 1 - cos(x-p)``, a double zero at p.
    """
    t1, t2 = as_angle(p1), as_angle(p2)
    if circle_dist(t1, t2) <= POINT_TOL:
        p = circular_mean([t1, t2])
        return TrigPoly((1.0, -math.cos(p)), (-math.sin(p),))
    mid = 0.5 * (t1 + t2)
    half = 0.5 * (t1 - t2)
    return TrigPoly((-math.cos(half), math.cos(mid)), (math.sin(mid),))
