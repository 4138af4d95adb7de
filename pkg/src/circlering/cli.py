"""Command-line interface.

Subcommands compose the library operations and print deterministic JSON
(default) or plain text. Exit codes: 0 success, 1 usage or an invalid
request, 2 expression parse error, 3 numerical failure, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import backend, verify
from .divisor import Divisor
from .errors import (
    EngineError,
    NonConvergence,
    ParseError,
    UnsupportedConstruct,
)
from .exprs import parse_constant, parse_trigpoly
from .factorization import demo_nonufd, enumerate_factorizations, is_half_factorial
from .ideals import (
    IdealClass,
    IdealR,
    class_of,
    complex_generator,
    divisor_of_ideal,
    is_principal,
    real_generator,
)
from .roots import RootConfig, find_circle_zeros
from .trigpoly import TrigPoly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NUMERICAL = 3
EXIT_VERIFY = 4

SCHEMA_VERSION = 1


def _angle(x: float) -> float:
    """Angles print with 12 significant digits."""
    return float(f"{x:.12g}")


_CLASS_NAMES = {IdealClass.PRINCIPAL: "Principal", IdealClass.NONPRINCIPAL: "NonPrincipal"}


def _divisor_json(d: Divisor) -> list[dict]:
    return [{"theta": _angle(p.theta), "multiplicity": m} for p, m in d]


def _trigpoly_json(t: TrigPoly) -> dict:
    return {
        "degree": t.degree,
        "cos_coeffs": list(t.cos_coeffs),
        "sin_coeffs": list(t.sin_coeffs),
        "formula": str(t),
    }


def _color_enabled(args) -> bool:
    return (
        getattr(args, "format", "json") == "text"
        and sys.stdout.isatty()
        and not os.environ.get("NO_COLOR")
    )


def _status(ok: bool, color: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if not color:
        return word
    code = "32" if ok else "31"
    return f"\x1b[{code}m{word}\x1b[0m"


def _emit(args, payload: dict, text_lines: list[str]):
    if getattr(args, "format", "json") == "text":
        print("\n".join(text_lines))
    else:
        print(json.dumps(payload, indent=2))


def _root_config(args) -> RootConfig:
    return RootConfig(
        tol_radius=args.tol_radius,
        tol_residual=args.tol_residual,
        max_iter=args.max_iter,
        cluster_radius=args.cluster_radius,
        grid_size=args.grid_size,
    )


def parse_points(text: str) -> Divisor:
    """Parse ``theta:mult,theta:mult,...`` with pi-expressions allowed."""
    items = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise UnsupportedConstruct(f"point {chunk!r} needs the form theta:mult")
        theta_text, mult_text = chunk.rsplit(":", 1)
        theta = parse_constant(theta_text, "point angle")
        try:
            mult = int(mult_text)
        except ValueError:
            raise UnsupportedConstruct(f"multiplicity {mult_text!r} is not an integer") from None
        if mult < 1:
            raise UnsupportedConstruct(f"multiplicity must be positive, got {mult}")
        items.append((theta, mult))
    if not items:
        raise UnsupportedConstruct("no points given")
    return Divisor.of(items)


# -- subcommands -------------------------------------------------------------


def cmd_roots(args) -> int:
    cfg = _root_config(args)
    report = find_circle_zeros(parse_trigpoly(args.expr), cfg)
    zeros = [{"theta": _angle(p.theta), "mult": m} for p, m in report.divisor]
    total = report.divisor.degree()
    payload = {
        "schema": SCHEMA_VERSION,
        "zeros": zeros,
        "total": total,
        "even": total % 2 == 0,
    }
    for w in report.warnings:
        print(w, file=sys.stderr)
    lines = [f"{len(zeros)} zero location(s), total multiplicity {total}"]
    lines += [f"  theta = {z['theta']:.12g}  multiplicity {z['mult']}" for z in zeros]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ideal(args) -> int:
    cfg = _root_config(args)
    gens = [parse_trigpoly(e) for e in args.exprs]
    divisor = divisor_of_ideal(gens, cfg)
    ideal = IdealR(divisor)
    principal = is_principal(ideal)
    payload = {
        "schema": SCHEMA_VERSION,
        "divisor": _divisor_json(divisor),
        "degree": divisor.degree(),
        "principal": principal,
        "class": _CLASS_NAMES[class_of(ideal)],
    }
    lines = [
        f"divisor degree {divisor.degree()}: "
        + (", ".join(f"{_angle(p.theta)}:{m}" for p, m in divisor) or "(unit ideal)"),
        f"principal: {principal}   class: {payload['class']}",
    ]
    if principal:
        g = real_generator(ideal)
        payload["generator"] = _trigpoly_json(g)
        lines.append(f"generator: {g}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_generator(args) -> int:
    cfg = _root_config(args)
    divisor = parse_points(args.points)
    ideal = IdealR(divisor)
    if not is_principal(ideal):
        payload = {
            "schema": SCHEMA_VERSION,
            "error": "OddDegree",
            "detail": f"divisor degree {divisor.degree()} is odd; no single generator exists",
            "class": _CLASS_NAMES[class_of(ideal)],
        }
        _emit(args, payload, [payload["detail"] + " (class NonPrincipal)"])
        return EXIT_USAGE
    g = real_generator(ideal)
    recovered = find_circle_zeros(g, cfg).divisor
    matches = verify.divisors_match(divisor, recovered)
    payload = {
        "schema": SCHEMA_VERSION,
        "points": _divisor_json(divisor),
        "generator": _trigpoly_json(g),
        "roundtrip": {"divisor": _divisor_json(recovered), "matches": matches},
    }
    lines = [f"generator: {g}", f"round-trip divisor matches: {matches}"]
    _emit(args, payload, lines)
    return EXIT_OK if matches else EXIT_NUMERICAL


def cmd_factorizations(args) -> int:
    divisor = parse_points(args.points)
    factorizations = enumerate_factorizations(divisor)
    report = is_half_factorial(divisor)
    payload = {
        "schema": SCHEMA_VERSION,
        "divisor": _divisor_json(divisor),
        "factorizations": [
            {
                "pairs": [[_angle(a), _angle(b)] for a, b in f.signature()],
                "length": f.length,
            }
            for f in factorizations
        ],
        "count": report.count,
        "half_factorial": report.ok,
        "expected_length": report.expected_length,
    }
    lines = [f"{report.count} distinct factorization(s), all of length {report.expected_length}"]
    for f in factorizations:
        pairs = "  ".join(f"({_angle(a)}, {_angle(b)})" for a, b in f.signature())
        lines.append(f"  {pairs}")
    lines.append(f"half-factorial: {report.ok}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_complex_generator(args) -> int:
    divisor = parse_points(args.points)
    lp = complex_generator(IdealR(divisor))
    coeffs = lp.polynomial_coeffs()
    payload = {
        "schema": SCHEMA_VERSION,
        "points": _divisor_json(divisor),
        "degree": len(coeffs) - 1,
        "coefficients": [[c.real, c.imag] for c in coeffs],
    }
    lines = [f"z-polynomial of degree {len(coeffs) - 1}:"]
    lines += [f"  z^{k}: {c.real:+.12g} {c.imag:+.12g}i" for k, c in enumerate(coeffs)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_demo(args) -> int:
    cfg = _root_config(args)
    report = demo_nonufd(cfg)
    payload = {
        "schema": SCHEMA_VERSION,
        "identity": {
            "lhs": "cos(x)^2",
            "rhs": "(1+sin(x))*(1-sin(x))",
            "coefficients_match": report.coefficients_match,
            "max_coeff_diff": report.max_coeff_diff,
        },
        "product": _trigpoly_json(report.product),
        "product_divisor": _divisor_json(report.product_divisor),
        "factor_divisors": {
            name: _divisor_json(d) for name, d in report.factor_divisors.items()
        },
        "factorizations": [
            {"pairs": [[_angle(a), _angle(b)] for a, b in f.signature()], "length": f.length}
            for f in report.factorizations
        ],
        "factorization_count": report.half_factorial.count,
        "half_factorial": report.half_factorial.ok,
    }
    color = _color_enabled(args)
    ok = report.coefficients_match and report.half_factorial.ok
    lines = [
        f"cos(x)^2 == (1+sin(x))*(1-sin(x)) coefficientwise: "
        f"{_status(report.coefficients_match, color)} (max diff {report.max_coeff_diff:.2e})",
        "factor divisors:",
    ]
    for name, d in report.factor_divisors.items():
        desc = ", ".join(f"{_angle(p.theta)}:{m}" for p, m in d)
        lines.append(f"  {name}: {desc}")
    lines.append(
        f"{report.half_factorial.count} factorizations of the product divisor, "
        f"all of length {report.half_factorial.expected_length}: "
        f"{_status(report.half_factorial.ok, color)}"
    )
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify(args) -> int:
    cfg = _root_config(args)
    results = verify.run_all(seed=args.seed, cases=args.cases, cfg=cfg)
    all_passed = all(r.passed for r in results)
    payload = {
        "schema": SCHEMA_VERSION,
        "seed": args.seed,
        "cases": args.cases,
        "backend": backend.BACKEND,
        "checks": [
            {"name": r.name, "cases": r.cases, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "all_passed": all_passed,
    }
    color = _color_enabled(args)
    lines = [
        f"{_status(r.passed, color)} {r.name} ({r.cases} cases): {r.detail}" for r in results
    ]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(args, payload, lines)
    return EXIT_OK if all_passed else EXIT_VERIFY


# -- argument plumbing -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--tol-radius", type=float, default=RootConfig.tol_radius)
    sub.add_argument("--tol-residual", type=float, default=RootConfig.tol_residual)
    sub.add_argument("--max-iter", type=int, default=RootConfig.max_iter)
    sub.add_argument("--cluster-radius", type=float, default=RootConfig.cluster_radius)
    sub.add_argument("--grid-size", type=int, default=RootConfig.grid_size)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="circlering",
        description="Ideal arithmetic for analytic functions on the circle, "
        "computed through trigonometric polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="circle divisor of an expression")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("ideal", help="standard form of the ideal generated by expressions")
    p.add_argument("exprs", nargs="+")
    _add_common(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("generator", help="single generator of an even divisor")
    p.add_argument("--points", required=True, help="theta:mult,... (pi allowed)")
    _add_common(p)
    p.set_defaults(func=cmd_generator)

    p = sub.add_parser("factorizations", help="all factorizations of an even divisor")
    p.add_argument("--points", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_factorizations)

    p = sub.add_parser("complex-generator", help="generator over the complexified ring")
    p.add_argument("--points", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_complex_generator)

    p = sub.add_parser("demo", help="built-in demonstrations")
    p.add_argument("topic", choices=("nonufd",))
    _add_common(p)
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("verify", help="run the seeded invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=25)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse --help exits 0; usage errors exit 1
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, UnsupportedConstruct) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonConvergence as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        for key, value in exc.diagnostics.items():
            print(f"  {key}: {value}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (EngineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
