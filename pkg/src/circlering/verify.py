"""Seeded self-verification suite.

Runs every module invariant on reproducible random inputs and reports one
pass/fail record per check. All randomness flows from a single seed, so a
repeated invocation produces byte-identical output.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from . import oracle
from .divisor import Divisor, TWO_PI, circle_dist
from .errors import NonConvergence, OddDegree
from .exprs import format_trigpoly, parse_trigpoly
from .factorization import enumerate_factorizations, is_half_factorial
from .ideals import (
    IdealClass,
    IdealR,
    class_mul,
    class_of,
    complex_generator,
    contains,
    divisor_of_ideal,
    is_principal,
    odd_case_decomposition,
    product,
    real_generator,
)
from .roots import DEFAULT_CONFIG, RootConfig, circle_divisor, sign_changes, zero_order
from .trigpoly import TrigPoly, pair_generator
from . import backend

# Random divisors keep points at least this far apart and multiplicities
# small enough for certified recovery.
MIN_SEPARATION = 1e-3
MAX_MULTIPLICITY = 4
POINT_MATCH_TOL = 1e-6


# -- random generators -------------------------------------------------------


def random_trig_poly(rng: random.Random, max_degree: int = 8) -> TrigPoly:
    """Uniform [-1, 1] coefficients at a random degree in 1..max_degree."""
    n = rng.randint(1, max_degree)
    a = [rng.uniform(-1.0, 1.0) for _ in range(n + 1)]
    b = [rng.uniform(-1.0, 1.0) for _ in range(n)]
    return TrigPoly(tuple(a), tuple(b))


def random_points(rng: random.Random, count: int, min_sep: float = MIN_SEPARATION) -> list[float]:
    """Angles with pairwise circle distance at least ``min_sep``."""
    points: list[float] = []
    while len(points) < count:
        theta = rng.uniform(0.0, TWO_PI)
        if all(circle_dist(theta, p) > min_sep for p in points):
            points.append(theta)
    return points


def random_divisor(
    rng: random.Random,
    max_degree: int = 12,
    min_sep: float = MIN_SEPARATION,
    max_mult: int = MAX_MULTIPLICITY,
    parity: int | None = None,
) -> Divisor:
    """Random well-separated divisor, optionally with prescribed parity."""
    degree = rng.randint(1, max_degree)
    if parity is not None and degree % 2 != parity:
        degree += 1 if degree < max_degree else -1
    mults: list[int] = []
    remaining = degree
    while remaining:
        m = min(rng.randint(1, max_mult), remaining)
        mults.append(m)
        remaining -= m
    points = random_points(rng, len(mults), min_sep)
    return Divisor.of(list(zip(points, mults)))


def divisors_match(d1: Divisor, d2: Divisor, tol: float = POINT_MATCH_TOL) -> bool:
    """Same multiplicities, points within ``tol``."""
    if len(d1) != len(d2):
        return False
    return all(
        p.dist(q) <= tol and m1 == m2
        for (p, m1), (q, m2) in zip(d1.entries, d2.entries)
    )


def accept_for_even_count(T: TrigPoly, cfg: RootConfig) -> Divisor | None:
    """Divisor of T, or None when T is near-degenerate.

    A draw is discarded when |T| dips below 1e-3 somewhere on the grid and no
    certified zero explains the dip. Failures on clean inputs propagate.
    """
    thetas = np.linspace(0.0, TWO_PI, cfg.grid_size, endpoint=False)
    values = np.abs(T.evaluate(thetas))
    idx = int(np.argmin(values))
    degenerate = values[idx] < 1e-3
    try:
        divisor = circle_divisor(T, cfg)
    except NonConvergence:
        if degenerate:
            return None
        raise
    if degenerate:
        spacing = TWO_PI / cfg.grid_size
        near_zero = any(
            circle_dist(thetas[idx], p.theta) <= 3 * spacing + cfg.cluster_radius
            for p, _ in divisor
        )
        if not near_zero:
            return None
    return divisor


# -- checks ------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    passed: bool
    detail: str


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def check_ring_laws(seed: int, cases: int) -> CheckResult:
    """multiply is commutative/associative and distributes over add."""
    rng = _rng(seed, "ring-laws")
    worst = 0.0
    for _ in range(cases):
        t1 = random_trig_poly(rng, 8)
        t2 = random_trig_poly(rng, 8)
        t3 = random_trig_poly(rng, 8)
        pairs = [
            (t1.multiply(t2), t2.multiply(t1)),
            (t1.multiply(t2).multiply(t3), t1.multiply(t2.multiply(t3))),
            (t1.multiply(t2 + t3), t1.multiply(t2) + t1.multiply(t3)),
        ]
        for left, right in pairs:
            scale = max(left.coeff_scale(), right.coeff_scale(), 1.0)
            diff = left - right
            err = max(
                [abs(c) for c in diff.cos_coeffs] + [abs(c) for c in diff.sin_coeffs]
            )
            worst = max(worst, err / scale)
        if not (
            t1.multiply(t2).degree == t1.degree + t2.degree
        ):
            return CheckResult("ring-laws", cases, False, "degree additivity failed")
    return CheckResult("ring-laws", cases, worst <= 1e-12, f"worst relative error {worst:.3e}")


def check_evaluation_homomorphism(seed: int, cases: int) -> CheckResult:
    """evaluate(multiply(T1,T2), x) equals the product of values."""
    rng = _rng(seed, "eval-hom")
    worst = 0.0
    for _ in range(cases):
        t1 = random_trig_poly(rng, 8).scale(rng.uniform(0.1, 10.0))
        t2 = random_trig_poly(rng, 8).scale(rng.uniform(0.1, 10.0))
        prod_poly = t1.multiply(t2)
        for _ in range(50):
            x = rng.uniform(0.0, TWO_PI)
            worst = max(worst, abs(prod_poly.evaluate(x) - t1.evaluate(x) * t2.evaluate(x)))
    return CheckResult("eval-homomorphism", cases, worst <= 1e-9, f"worst abs error {worst:.3e}")


def check_laurent_roundtrip(seed: int, cases: int) -> CheckResult:
    """The Laurent form reproduces values on a 256-point grid."""
    rng = _rng(seed, "laurent")
    worst = 0.0
    grid = [k * TWO_PI / 256 for k in range(256)]
    for _ in range(cases):
        t = random_trig_poly(rng, 8)
        lp = t.to_laurent()
        if not lp.is_real_on_circle():
            return CheckResult("laurent-roundtrip", cases, False, "conjugate symmetry broken")
        for x in grid:
            worst = max(worst, abs(lp.evaluate(x) - t.evaluate(x)))
    return CheckResult("laurent-roundtrip", cases, worst <= 1e-10, f"worst abs error {worst:.3e}")


def check_divisor_monoid(seed: int, cases: int) -> CheckResult:
    """Divisor addition is a commutative monoid; parity is a homomorphism."""
    rng = _rng(seed, "divisor-monoid")
    for _ in range(cases):
        d1 = random_divisor(rng, 8)
        d2 = random_divisor(rng, 8)
        d3 = random_divisor(rng, 8)
        if d1 + d2 != d2 + d1:
            return CheckResult("divisor-monoid", cases, False, "commutativity failed")
        if (d1 + d2) + d3 != d1 + (d2 + d3):
            return CheckResult("divisor-monoid", cases, False, "associativity failed")
        if d1 + Divisor.empty() != d1:
            return CheckResult("divisor-monoid", cases, False, "identity failed")
        if (d1 + d2).parity() != (d1.parity() + d2.parity()) % 2:
            return CheckResult("divisor-monoid", cases, False, "parity homomorphism failed")
        if not d1.leq(d1 + d2):
            return CheckResult("divisor-monoid", cases, False, "leq(D1, D1+D2) failed")
        if Divisor.of([(p.theta, m) for p, m in d1]) != d1:
            return CheckResult("divisor-monoid", cases, False, "canonical idempotence failed")
    return CheckResult("divisor-monoid", cases, True, "all laws hold")


def check_even_zero_count(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """Every nonzero trig polynomial has an even number of circle zeros."""
    rng = _rng(seed, "even-count")
    accepted = 0
    while accepted < cases:
        divisor = accept_for_even_count(random_trig_poly(rng, 8), cfg)
        if divisor is None:
            continue
        accepted += 1
        if divisor.degree() % 2 != 0:
            return CheckResult(
                "even-zero-count", cases, False, f"odd divisor {divisor!r}"
            )
    return CheckResult("even-zero-count", cases, True, "all zero counts even")


def check_sign_changes_bound(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """sign_changes <= total zeros, equal iff all multiplicities are odd."""
    rng = _rng(seed, "sign-changes")
    for _ in range(cases):
        d = random_divisor(rng, 8, parity=0)
        T = real_generator(IdealR(d))
        changes = sign_changes(T, cfg)
        total = d.degree()
        if changes % 2 != 0 or changes > total:
            return CheckResult(
                "sign-changes-bound", cases, False, f"{changes} changes vs degree {total}"
            )
        all_odd = all(m % 2 == 1 for _, m in d)
        if all_odd != (changes == total):
            return CheckResult(
                "sign-changes-bound",
                cases,
                False,
                f"equality iff all-odd failed: {changes}/{total} for {d!r}",
            )
    return CheckResult("sign-changes-bound", cases, True, "bound and equality case hold")


def check_oracle_equivalence(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """circle_divisor agrees with the dense-sampling oracle."""
    rng = _rng(seed, "oracle")
    for _ in range(cases):
        n_pairs = rng.randint(1, 6)
        base = random_points(rng, max(2, n_pairs))
        T = TrigPoly.constant(1.0)
        expected_pairs = []
        for _ in range(n_pairs):
            p1, p2 = rng.choice(base), rng.choice(base)
            expected_pairs.append((p1, p2))
            T = T.multiply(pair_generator(p1, p2))
        fast = circle_divisor(T, cfg)
        slow = oracle.sampled_circle_divisor(T, cfg)
        if not divisors_match(fast, slow):
            return CheckResult(
                "oracle-equivalence", cases, False, f"{fast!r} vs oracle {slow!r}"
            )
    return CheckResult("oracle-equivalence", cases, True, "root finder matches the oracle")


def check_generator_roundtrip(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """circle_divisor(real_generator(D)) recovers D exactly."""
    rng = _rng(seed, "roundtrip")
    for _ in range(cases):
        d = random_divisor(rng, 12, parity=0)
        recovered = circle_divisor(real_generator(IdealR(d)), cfg)
        if not divisors_match(d, recovered):
            return CheckResult(
                "generator-roundtrip", cases, False, f"{d!r} -> {recovered!r}"
            )
    return CheckResult("generator-roundtrip", cases, True, "all divisors recovered")


def check_parity_principality(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """is_principal iff even degree; real_generator succeeds exactly then."""
    rng = _rng(seed, "parity")
    for _ in range(cases):
        d = random_divisor(rng, 12)
        ideal = IdealR(d)
        even = d.degree() % 2 == 0
        if is_principal(ideal) != even:
            return CheckResult("parity-principality", cases, False, f"parity wrong for {d!r}")
        try:
            g = real_generator(ideal)
            if not even:
                return CheckResult(
                    "parity-principality", cases, False, f"generator built for odd {d!r}"
                )
            if not divisors_match(d, circle_divisor(g, cfg)):
                return CheckResult(
                    "parity-principality", cases, False, f"generator divisor mismatch for {d!r}"
                )
        except OddDegree:
            if even:
                return CheckResult(
                    "parity-principality", cases, False, f"generator refused for even {d!r}"
                )
            p, g = odd_case_decomposition(ideal)
            expected = Divisor.of([(p.theta, 1)]) + circle_divisor(g, cfg)
            if not divisors_match(d, expected):
                return CheckResult(
                    "parity-principality", cases, False, f"odd decomposition mismatch for {d!r}"
                )
    return CheckResult("parity-principality", cases, True, "parity decides principality")


def check_class_group(seed: int, cases: int) -> CheckResult:
    """class_of is a homomorphism onto a group of order exactly 2."""
    rng = _rng(seed, "class-group")
    if class_of(IdealR.of([(0.0, 1)])) != IdealClass.NONPRINCIPAL:
        return CheckResult("class-group", cases, False, "single maximal ideal not detected")
    for _ in range(cases):
        i1 = IdealR(random_divisor(rng, 10))
        i2 = IdealR(random_divisor(rng, 10))
        if class_of(product(i1, i2)) != class_mul(class_of(i1), class_of(i2)):
            return CheckResult("class-group", cases, False, "homomorphism failed")
        if class_of(product(i1, i1)) != IdealClass.PRINCIPAL:
            return CheckResult("class-group", cases, False, "a square is not principal")
    return CheckResult("class-group", cases, True, "class group is Z/2")


def check_ideal_recovery(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """divisor_of_ideal recovers D from two generators with extra zeros."""
    rng = _rng(seed, "recovery")
    for _ in range(cases):
        d = random_divisor(rng, 8)
        fresh = random_points(rng, 4)
        while any(
            any(circle_dist(f, p.theta) <= MIN_SEPARATION for p, _ in d) for f in fresh
        ):
            fresh = random_points(rng, 4)
        # Pad with one more fresh point apiece when deg(D)+1 is odd.
        need_pad = (d.degree() + 1) % 2 == 1
        extra1 = [(fresh[0], 1)] + ([(fresh[1], 1)] if need_pad else [])
        extra2 = [(fresh[2], 1)] + ([(fresh[3], 1)] if need_pad else [])
        g1 = real_generator(IdealR(d + Divisor.of(extra1)))
        g2 = real_generator(IdealR(d + Divisor.of(extra2)))
        recovered = divisor_of_ideal([g1, g2], cfg)
        if not divisors_match(d, recovered):
            return CheckResult("ideal-recovery", cases, False, f"{d!r} -> {recovered!r}")
    return CheckResult("ideal-recovery", cases, True, "all common divisors recovered")


def check_membership_duality(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """contains(I, f) iff divisor(I) <= divisor(f)."""
    rng = _rng(seed, "membership")
    for _ in range(cases):
        d = random_divisor(rng, 8, parity=0)
        ideal = IdealR(d)
        g = real_generator(ideal)
        if not contains(ideal, g, cfg):
            return CheckResult("membership-duality", cases, False, "generator not a member")
        extra = pair_generator(*random_points(rng, 2))
        if not contains(ideal, g.multiply(extra), cfg):
            return CheckResult("membership-duality", cases, False, "multiple not a member")
        bigger = IdealR(d + Divisor.of([(random_points(rng, 1)[0], 2)]))
        if contains(bigger, g, cfg) != bigger.divisor.leq(circle_divisor(g, cfg)):
            return CheckResult("membership-duality", cases, False, "duality mismatch")
    return CheckResult("membership-duality", cases, True, "membership matches divisor order")


def check_complex_pid(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """complex_generator works for both parities; its roots match the divisor."""
    rng = _rng(seed, "complex-pid")
    for _ in range(cases):
        d = random_divisor(rng, 12)
        lp = complex_generator(IdealR(d))
        coeffs = lp.polynomial_coeffs()
        if len(coeffs) - 1 != d.degree():
            return CheckResult("complex-pid", cases, False, "degree mismatch")
        roots, _, ok = backend.aberth_roots(coeffs, max_iter=cfg.max_iter)
        if not ok:
            return CheckResult("complex-pid", cases, False, "root check did not converge")
        for p, m in d:
            target = complex(math.cos(p.theta), math.sin(p.theta))
            dist = np.abs(roots - target)
            claimed = np.sort(dist)[:m]
            center = np.mean(roots[np.argsort(dist)[:m]])
            if abs(center - target) > POINT_MATCH_TOL or np.any(claimed > 0.05):
                return CheckResult(
                    "complex-pid", cases, False, f"roots stray from {p.theta:.6f}:{m}"
                )
    return CheckResult("complex-pid", cases, True, "every divisor has a complex generator")


def check_half_factorial(seed: int, cases: int) -> CheckResult:
    """All factorizations have length degree/2; counts match the oracle."""
    rng = _rng(seed, "half-factorial")
    fixed = [
        Divisor.of([(math.pi / 2, 2), (3 * math.pi / 2, 2)]),
        Divisor.of([(0.0, 2)]),
        Divisor.of([(0.5, 1), (1.5, 1), (2.5, 1), (3.5, 1)]),
    ]
    tested = list(fixed)
    for _ in range(cases):
        tested.append(random_divisor(rng, 12, parity=0))
    for d in tested:
        if d.degree() < 2:
            continue
        report = is_half_factorial(d)
        if not report.ok:
            return CheckResult("half-factorial", cases, False, f"unequal lengths for {d!r}")
        expected = oracle.count_pairings([p.theta for p in d.expand()])
        if report.count != expected:
            return CheckResult(
                "half-factorial",
                cases,
                False,
                f"count {report.count} != oracle {expected} for {d!r}",
            )
    return CheckResult("half-factorial", cases, True, "every factorization has length degree/2")


def check_conjugate_pairing(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """Off-circle roots of the lift pair up as (z, 1/conj(z))."""
    rng = _rng(seed, "conjugate")
    for _ in range(cases):
        T = random_trig_poly(rng, 8)
        roots, _, ok = backend.aberth_roots(T.to_laurent().coeffs, max_iter=cfg.max_iter)
        if not ok:
            return CheckResult("conjugate-pairing", cases, False, "iteration stalled")
        off = [z for z in roots if abs(abs(z) - 1.0) > 1e-4]
        used = [False] * len(off)
        for i, z in enumerate(off):
            if used[i]:
                continue
            mirror = 1.0 / z.conjugate()
            match = None
            for j in range(i + 1, len(off)):
                if not used[j] and abs(off[j] - mirror) <= 1e-6 * (1 + abs(mirror)):
                    match = j
                    break
            if match is None:
                return CheckResult(
                    "conjugate-pairing", cases, False, f"unpaired root {z!r}"
                )
            used[i] = used[match] = True
    return CheckResult("conjugate-pairing", cases, True, "off-circle roots pair up")


def check_parser_roundtrip(seed: int, cases: int) -> CheckResult:
    """parse(format(T)) reproduces T coefficientwise."""
    rng = _rng(seed, "parser")
    for _ in range(cases):
        t = random_trig_poly(rng, 8)
        back = parse_trigpoly(format_trigpoly(t))
        err = max(
            [abs(x - y) for x, y in zip(back.cos_coeffs, t.cos_coeffs)]
            + [abs(x - y) for x, y in zip(back.sin_coeffs, t.sin_coeffs)]
        )
        if back.degree != t.degree or err > 1e-12:
            return CheckResult("parser-roundtrip", cases, False, f"error {err:.3e}")
    return CheckResult("parser-roundtrip", cases, True, "print/parse is the identity")


def check_factorization_soundness(seed: int, cases: int, cfg: RootConfig) -> CheckResult:
    """The witness product of every factorization has the target divisor."""
    rng = _rng(seed, "soundness")
    for _ in range(cases):
        d = random_divisor(rng, 8, parity=0)
        if d.degree() < 2:
            continue
        for f in enumerate_factorizations(d):
            if f.length != d.degree() // 2:
                return CheckResult("factorization-soundness", cases, False, "wrong length")
            if not divisors_match(circle_divisor(f.product_witness(), cfg), d):
                return CheckResult(
                    "factorization-soundness", cases, False, f"witness divisor mismatch for {d!r}"
                )
    return CheckResult("factorization-soundness", cases, True, "witness products check out")


def run_all(seed: int = 0, cases: int = 25, cfg: RootConfig = DEFAULT_CONFIG) -> list[CheckResult]:
    """Run the whole suite; deterministic in (seed, cases, cfg)."""
    return [
        check_ring_laws(seed, cases),
        check_evaluation_homomorphism(seed, cases),
        check_laurent_roundtrip(seed, max(cases // 2, 1)),
        check_divisor_monoid(seed, cases),
        check_even_zero_count(seed, cases, cfg),
        check_sign_changes_bound(seed, max(cases // 2, 1), cfg),
        check_oracle_equivalence(seed, max(cases // 3, 1), cfg),
        check_generator_roundtrip(seed, cases, cfg),
        check_parity_principality(seed, cases, cfg),
        check_class_group(seed, cases),
        check_ideal_recovery(seed, max(cases // 3, 1), cfg),
        check_membership_duality(seed, max(cases // 3, 1), cfg),
        check_complex_pid(seed, max(cases // 2, 1), cfg),
        check_half_factorial(seed, max(cases // 3, 1)),
        check_factorization_soundness(seed, max(cases // 3, 1), cfg),
        check_conjugate_pairing(seed, max(cases // 2, 1), cfg),
        check_parser_roundtrip(seed, cases),
    ]
