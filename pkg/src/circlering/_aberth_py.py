"""Pure-Python (numpy) Aberth-Ehrlich kernel.

Fallback used when the compiled extension is unavailable. Mirrors the
compiled kernel operation for operation: Jacobi-style simultaneous updates,
sticky freezing of roots whose residual has reached the evaluation noise
floor, and a correction-size stopping rule.
"""

from __future__ import annotations

import numpy as np

_EPS = float(np.finfo(float).eps)


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, coeffs[-1])
    for j in range(len(coeffs) - 2, -1, -1):
        acc = acc * z + coeffs[j]
    return acc


def iterate(coeffs, z0, max_iter: int, stop_tol: float):
    """Run the simultaneous iteration from the guesses ``z0``.

    ``coeffs`` are ascending complex coefficients with nonzero leading term.
    Returns ``(roots, iterations, converged)``.
    """
    c = np.asarray(coeffs, dtype=complex)
    n = len(c) - 1
    dc = c[1:] * np.arange(1, n + 1)
    abs_c = np.abs(c)
    floor_scale = 4.0 * (n + 1) * _EPS

    z = np.array(z0, dtype=complex, copy=True)
    frozen = np.zeros(n, dtype=bool)
    for it in range(1, max_iter + 1):
        p = _horner(c, z)
        noise = floor_scale * _horner(abs_c, np.abs(z).astype(complex)).real
        frozen |= np.abs(p) <= noise
        if frozen.all():
            return z, it, True
        dp = _horner(dc, z)
        dp = np.where(dp == 0, _EPS, dp)
        w = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        diff = np.where(diff == 0, 1e-30, diff)
        repulsion = (1.0 / diff).sum(axis=1)
        denom = 1.0 - w * repulsion
        denom = np.where(denom == 0, _EPS, denom)
        corr = np.where(frozen, 0.0, w / denom)
        z = z - corr
        if np.all(frozen | (np.abs(corr) <= stop_tol * (1.0 + np.abs(z)))):
            return z, it, True
    return z, max_iter, False
