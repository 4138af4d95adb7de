"""Root-iteration kernel selection.

The compiled extension is preferred when it was built; otherwise the numpy
fallback is used. Both kernels implement the same iteration with the same
deterministic initial guesses, so results agree to rounding.
"""

from __future__ import annotations

import math

import numpy as np

try:  # pragma: no cover - which branch runs depends on the build
    from . import _aberth as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    from . import _aberth_py as _impl

    BACKEND = "python"

from . import _aberth_py

# Initial guesses sit on a circle slightly outside the unit circle, rotated
# by an irrational offset so they never align with root symmetries.
INITIAL_RADIUS = 1.1
ANGULAR_OFFSET = math.sqrt(2.0)
STOP_TOL = 1e-14


def initial_guesses(n: int) -> np.ndarray:
    angles = 2.0 * math.pi * np.arange(n) / n + ANGULAR_OFFSET
    return INITIAL_RADIUS * np.exp(1j * angles)


def aberth_roots(coeffs, max_iter: int = 200, impl=None):
    """All complex roots of ``sum coeffs[j] z^j`` (ascending, nonzero leading).

    Returns ``(roots, iterations, converged)``. ``impl`` overrides the kernel
    module (used by the benchmark and the backend-parity tests).
    """
    c = np.asarray(coeffs, dtype=complex)
    if len(c) == 0 or c[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    n = len(c) - 1
    if n == 0:
        return np.empty(0, dtype=complex), 0, True
    c = c / np.max(np.abs(c))
    kernel = impl if impl is not None else _impl
    z, iters, ok = kernel.iterate(c, initial_guesses(n), max_iter, STOP_TOL)
    return np.asarray(z), int(iters), bool(ok)


def available_kernels() -> dict:
    """Importable kernel modules keyed by name; used for benchmarking."""
    kernels = {"python": _aberth_py}
    if BACKEND == "compiled":
        kernels["compiled"] = _impl
    return kernels
