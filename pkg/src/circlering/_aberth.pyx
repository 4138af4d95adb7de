# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Aberth-Ehrlich kernel.

Same algorithm as ``_aberth_py``: Jacobi-style simultaneous updates, sticky
freezing at the evaluation noise floor, correction-size stopping rule.
"""

import numpy as np

cdef double _EPS = 2.220446049250313e-16


def iterate(coeffs, z0, int max_iter, double stop_tol):
    """Run the simultaneous iteration from the guesses ``z0``.

    ``coeffs`` are ascending complex coefficients with nonzero leading term.
    Returns ``(roots, iterations, converged)``.
    """
    cdef double complex[::1] c = np.ascontiguousarray(coeffs, dtype=complex)
    cdef int n = c.shape[0] - 1
    z_arr = np.array(z0, dtype=complex, copy=True)
    cdef double complex[::1] z = z_arr
    new_arr = np.empty(n, dtype=complex)
    cdef double complex[::1] z_new = new_arr
    frozen_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] frozen = frozen_arr

    cdef double floor_scale = 4.0 * (n + 1) * _EPS
    cdef int it, i, j, k
    cdef double complex p, dp, w, diff, repulsion, denom, corr, zi
    cdef double az, noise, cmax
    cdef bint all_frozen, all_small

    for it in range(1, max_iter + 1):
        all_frozen = True
        all_small = True
        for i in range(n):
            zi = z[i]
            if frozen[i]:
                z_new[i] = zi
                continue
            # Horner for p, p' and the |coeff|-|z| noise floor in one pass.
            p = c[n]
            dp = 0
            az = abs(zi)
            noise = abs(c[n])
            for k in range(n - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + c[k]
                noise = noise * az + abs(c[k])
            if abs(p) <= floor_scale * noise:
                frozen[i] = 1
                z_new[i] = zi
                continue
            all_frozen = False
            if dp == 0:
                dp = _EPS
            w = p / dp
            repulsion = 0
            for j in range(n):
                if j == i:
                    continue
                diff = zi - z[j]
                if diff == 0:
                    diff = 1e-30
                repulsion = repulsion + 1.0 / diff
            denom = 1.0 - w * repulsion
            if denom == 0:
                denom = _EPS
            corr = w / denom
            z_new[i] = zi - corr
            if abs(corr) > stop_tol * (1.0 + abs(z_new[i])):
                all_small = False
        for i in range(n):
            z[i] = z_new[i]
        if all_frozen or all_small:
            return z_arr, it, True
    return z_arr, max_iter, False
