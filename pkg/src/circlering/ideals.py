"""Ideal arithmetic over the circle ring.

A nonzero ideal is represented by its divisor. Over the reals, an ideal is
principal exactly when its divisor degree is even, and the class group is
Z/2; over the complexified ring every ideal is principal with generator
``prod (z - e^{ip})^a``.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from typing import Iterable

from .divisor import CirclePoint, Divisor, POINT_TOL
from .errors import AllZeroGenerators, EvenDegree, OddDegree
from .roots import DEFAULT_CONFIG, RootConfig, circle_divisor
from .trigpoly import LaurentPoly, TrigPoly, pair_generator


@dataclass(frozen=True, eq=False)
class IdealR:
    """Ideal of the real ring in standard form; empty divisor = unit ideal."""

    divisor: Divisor

    @staticmethod
    def of(items, tol: float = POINT_TOL) -> "IdealR":
        return IdealR(Divisor.of(items, tol))

    @staticmethod
    def unit() -> "IdealR":
        return IdealR(Divisor.empty())

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealR):
            return NotImplemented
        return self.divisor == other.divisor

    __hash__ = None

    def __repr__(self) -> str:
        return f"IdealR({self.divisor!r})"


@dataclass(frozen=True)
class GeneratorSet:
    """A nonempty set of generators, at least one of them nonzero."""

    gens: tuple[TrigPoly, ...]

    def __post_init__(self):
        if not self.gens or all(g.is_zero() for g in self.gens):
            raise AllZeroGenerators("need at least one nonzero generator")
        object.__setattr__(self, "gens", tuple(self.gens))


class IdealClass(enum.Enum):
    """Element of the class group Z/2."""

    PRINCIPAL = 0
    NONPRINCIPAL = 1


def class_mul(c1: IdealClass, c2: IdealClass) -> IdealClass:
    """Group law of the class group: addition in Z/2."""
    return IdealClass(c1.value ^ c2.value)


def divisor_of_ideal(
    gens: GeneratorSet | Iterable[TrigPoly], cfg: RootConfig = DEFAULT_CONFIG
) -> Divisor:
    """Standard form of the ideal generated by ``gens``.

    Each common zero enters with the minimum of the generators' zero orders
    there; points where any generator is nonzero drop out. The empty divisor
    means the unit ideal.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    divisors = [circle_divisor(g, cfg) for g in gens.gens if not g.is_zero()]
    acc = divisors[0]
    for d in divisors[1:]:
        common = []
        for p, m in acc:
            other = d.multiplicity_at(p)
            if other:
                common.append((p.theta, min(m, other)))
        acc = Divisor.of(common) if common else Divisor.empty()
    return acc


def is_principal(ideal: IdealR) -> bool:
    """An ideal is principal exactly when its divisor degree is even."""
    return ideal.divisor.parity() == 0


def class_of(ideal: IdealR) -> IdealClass:
    return IdealClass(ideal.divisor.parity())


def product(i1: IdealR, i2: IdealR) -> IdealR:
    return IdealR(i1.divisor + i2.divisor)


def real_generator(ideal: IdealR) -> TrigPoly:
    """A single generator for an even-degree (principal) ideal.

    The divisor expands to a sorted point list with repetition; consecutive
    entries pair off, and the generator is the product of the degree-1 pair
    generators. Generators are unique only up to units, so all contracts on
    the result are stated through its divisor.
    """
    if ideal.divisor.parity() != 0:
        raise OddDegree(
            f"divisor degree {ideal.divisor.degree()} is odd; the ideal is not principal"
        )
    points = ideal.divisor.expand()
    out = TrigPoly.constant(1.0)
    for i in range(0, len(points), 2):
        out = out.multiply(pair_generator(points[i], points[i + 1]))
    return out


def odd_case_decomposition(ideal: IdealR) -> tuple[CirclePoint, TrigPoly]:
    """Split an odd ideal as one maximal ideal times a principal one.

    Returns ``(p, g)`` where p is the first divisor point and g generates
    the rest: divisor(ideal) = {p:1} + divisor(g).
    """
    if ideal.divisor.parity() != 1:
        raise EvenDegree("decomposition applies to odd-degree divisors only")
    entries = list(ideal.divisor)
    p, m = entries[0]
    rest = [(q.theta, k) for q, k in entries[1:]]
    if m > 1:
        rest.insert(0, (p.theta, m - 1))
    reduced = IdealR(Divisor.of(rest) if rest else Divisor.empty())
    return p, real_generator(reduced)


def contains(ideal: IdealR, f: TrigPoly, cfg: RootConfig = DEFAULT_CONFIG) -> bool:
    """Membership test: f lies in the ideal iff its divisor dominates."""
    return ideal.divisor.leq(circle_divisor(f, cfg))


def complex_generator(ideal: IdealR) -> LaurentPoly:
    """Generator over the complexified ring: ``prod (z - e^{ip})^mult``.

    Works for either parity (the complex ring is a PID). Returned as a
    Laurent polynomial with zero negative part.
    """
    coeffs: list[complex] = [1.0 + 0j]
    for p, m in ideal.divisor:
        root = cmath.exp(1j * p.theta)
        for _ in range(m):
            coeffs = [0j] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= root * coeffs[i + 1]
    degree = len(coeffs) - 1
    return LaurentPoly((0j,) * degree + tuple(coeffs))
