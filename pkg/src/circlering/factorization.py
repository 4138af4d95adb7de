"""Factorizations into irreducible elements.

Irreducibles of the real circle ring are exactly the elements whose divisor
has degree 2 (degree-1 divisors are nonprincipal, so nothing splits finer).
Factoring an even divisor therefore means perfectly matching its points: the
factorizations of an element correspond to the distinct perfect matchings of
its divisor's point multiset. Every matching has the same length, which is
the half-factorial property this module verifies exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisor import Divisor
from .errors import OddDegree, TooLarge
from .roots import DEFAULT_CONFIG, RootConfig, circle_divisor
from .trigpoly import TrigPoly, pair_generator

# 16 points means at most 8 factors and 10395 matchings before deduplication;
# enumeration stays instant.
MAX_DEGREE = 16


@dataclass(frozen=True, eq=False)
class Irreducible:
    """An irreducible element: a degree-2 divisor with a witness function."""

    divisor: Divisor
    witness: TrigPoly

    def __post_init__(self):
        if self.divisor.degree() != 2:
            raise ValueError("irreducible elements have divisor degree exactly 2")

    def signature(self) -> tuple[float, float]:
        pts = self.divisor.expand()
        return (pts[0].theta, pts[1].theta)

    def __repr__(self) -> str:
        return f"Irreducible({self.divisor!r})"


@dataclass(frozen=True, eq=False)
class Factorization:
    """A multiset of irreducibles whose divisors sum to the target."""

    factors: tuple[Irreducible, ...]

    @property
    def length(self) -> int:
        return len(self.factors)

    def signature(self) -> tuple[tuple[float, float], ...]:
        return tuple(sorted(f.signature() for f in self.factors))

    def product_witness(self) -> TrigPoly:
        out = TrigPoly.constant(1.0)
        for f in self.factors:
            out = out.multiply(f.witness)
        return out

    def __repr__(self) -> str:
        pairs = ", ".join(f"({a:.4g},{b:.4g})" for a, b in self.signature())
        return f"Factorization[{pairs}]"


def _distinct_matchings(items: tuple[float, ...]):
    """Yield distinct perfect matchings of a sorted multiset of angles.

    The first element pairs with each distinct remaining value once, which
    avoids generating permuted duplicates of the same matching.
    """
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    seen = set()
    for i, partner in enumerate(rest):
        if partner in seen:
            continue
        seen.add(partner)
        for tail in _distinct_matchings(rest[:i] + rest[i + 1 :]):
            yield (tuple(sorted((first, partner))),) + tail


def enumerate_factorizations(d: Divisor) -> list[Factorization]:
    """All distinct factorizations of an even divisor into irreducibles.

    Two factorizations count as equal when they induce the same multiset of
    degree-2 divisors (witness coefficients only match up to units). The
    result is sorted, so enumeration order is deterministic.
    """
    degree = d.degree()
    if degree % 2 != 0:
        raise OddDegree(f"divisor degree {degree} is odd; no factorization exists")
    if degree < 2:
        raise ValueError("factorization needs a divisor of degree at least 2")
    if degree > MAX_DEGREE:
        raise TooLarge(f"divisor degree {degree} exceeds the enumeration cap {MAX_DEGREE}")

    points = tuple(p.theta for p in d.expand())
    out = []
    seen = set()
    for matching in _distinct_matchings(points):
        signature = tuple(sorted(matching))
        if signature in seen:
            continue
        seen.add(signature)
        factors = tuple(
            Irreducible(Divisor.of([(a, 1), (b, 1)]), pair_generator(a, b))
            for a, b in signature
        )
        out.append(Factorization(factors))
    out.sort(key=Factorization.signature)
    return out


@dataclass(frozen=True)
class HalfFactorialReport:
    """Result of the equal-length check over all factorizations."""

    ok: bool
    count: int
    lengths: tuple[int, ...]
    expected_length: int


def is_half_factorial(d: Divisor) -> HalfFactorialReport:
    """Check that every factorization of the divisor has the same length."""
    factorizations = enumerate_factorizations(d)
    lengths = tuple(sorted({f.length for f in factorizations}))
    expected = d.degree() // 2
    ok = lengths == (expected,)
    return HalfFactorialReport(ok, len(factorizations), lengths, expected)


@dataclass(frozen=True)
class NonUfdReport:
    """The cos^2 identity worked end to end.

    ``cos(x)^2 = (1 + sin(x)) (1 - sin(x))`` exhibits two genuinely different
    factorizations of one element: the factor divisors differ, yet both
    factorizations have length 2.
    """

    coefficients_match: bool
    max_coeff_diff: float
    product: TrigPoly
    product_divisor: Divisor
    factor_divisors: dict[str, Divisor]
    factorizations: list[Factorization]
    half_factorial: HalfFactorialReport


def demo_nonufd(cfg: RootConfig = DEFAULT_CONFIG) -> NonUfdReport:
    """Build both factorizations of cos^2 and verify they agree."""
    cos_x = TrigPoly.cosine()
    one_plus_sin = TrigPoly.constant(1.0) + TrigPoly.sine()
    one_minus_sin = TrigPoly.constant(1.0) - TrigPoly.sine()

    lhs = cos_x.multiply(cos_x)
    rhs = one_plus_sin.multiply(one_minus_sin)
    diff = lhs - rhs
    max_diff = max(
        [abs(c) for c in diff.cos_coeffs] + [abs(c) for c in diff.sin_coeffs],
        default=0.0,
    )

    product_divisor = circle_divisor(lhs, cfg)
    factor_divisors = {
        "cos(x)": circle_divisor(cos_x, cfg),
        "1+sin(x)": circle_divisor(one_plus_sin, cfg),
        "1-sin(x)": circle_divisor(one_minus_sin, cfg),
    }
    factorizations = enumerate_factorizations(product_divisor)
    report = is_half_factorial(product_divisor)
    return NonUfdReport(
        coefficients_match=max_diff <= 1e-12,
        max_coeff_diff=max_diff,
        product=lhs,
        product_divisor=product_divisor,
        factor_divisors=factor_divisors,
        factorizations=factorizations,
        half_factorial=report,
    )
