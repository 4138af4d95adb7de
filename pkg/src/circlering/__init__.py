"""Computable ideal theory for analytic functions on the unit circle.

Trigonometric polynomials stand in for the real-analytic functions; ideals
are represented by divisors of circle points; principality, class-group
arithmetic, explicit generators and irreducible factorizations are all
computed and cross-checked numerically through certified root finding.
"""

from .backend import BACKEND
from .divisor import CirclePoint, Divisor, POINT_TOL, circle_dist, wrap_angle
from .errors import (
    AllZeroGenerators,
    EngineError,
    EvenDegree,
    NonConvergence,
    OddDegree,
    ParseError,
    TooLarge,
    UnsupportedConstruct,
    ZeroPolynomial,
)
from .exprs import format_trigpoly, parse, parse_trigpoly
from .factorization import (
    Factorization,
    HalfFactorialReport,
    Irreducible,
    NonUfdReport,
    demo_nonufd,
    enumerate_factorizations,
    is_half_factorial,
)
from .ideals import (
    GeneratorSet,
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
from .roots import (
    RootConfig,
    ZeroSearchReport,
    circle_divisor,
    find_circle_zeros,
    sign_changes,
    zero_order,
)
from .trigpoly import LaurentPoly, TrigPoly, pair_generator

__version__ = "0.1.0"

__all__ = [
    "AllZeroGenerators",
    "BACKEND",
    "CirclePoint",
    "Divisor",
    "EngineError",
    "EvenDegree",
    "Factorization",
    "GeneratorSet",
    "HalfFactorialReport",
    "IdealClass",
    "IdealR",
    "Irreducible",
    "LaurentPoly",
    "NonConvergence",
    "NonUfdReport",
    "OddDegree",
    "POINT_TOL",
    "ParseError",
    "RootConfig",
    "TooLarge",
    "TrigPoly",
    "UnsupportedConstruct",
    "ZeroPolynomial",
    "ZeroSearchReport",
    "circle_dist",
    "circle_divisor",
    "class_mul",
    "class_of",
    "complex_generator",
    "contains",
    "demo_nonufd",
    "divisor_of_ideal",
    "enumerate_factorizations",
    "find_circle_zeros",
    "format_trigpoly",
    "is_half_factorial",
    "is_principal",
    "odd_case_decomposition",
    "pair_generator",
    "parse",
    "parse_trigpoly",
    "product",
    "real_generator",
    "sign_changes",
    "wrap_angle",
    "zero_order",
]
