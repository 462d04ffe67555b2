"""Closed-form occupancy probabilities for sticky-channel output.

Notation: ``N'_x`` counts letter ``x`` in the interior ``X_2..X_{n-1}``, and
"off the ends" means ``X_1 != x`` and ``X_n != x``. Every function accepts
scalars or broadcastable arrays of letter masses.
"""

import numpy as np

from stickymass.analytics._numeric import check_alpha, pow1m, scalarize

PAIR_TOL = 1e-12


def _check_n(n, least):
    if n < least:
        raise ValueError(f"closed form needs n >= {least}, got n={n}")


def _pair(px, py):
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    s = px + py
    if np.any(s > 1 + PAIR_TOL):
        raise ValueError("p_x + p_y must not exceed 1")
    # clamp rounding noise so (1 - s) never goes negative
    return px, py, s, np.clip(1.0 - s, 0.0, None)


def q_x0(px, alpha, n):
    """``Pr(N_x = 0) = (1 - p)(1 - (1 - alpha) p)^(n-1)``."""
    check_alpha(alpha)
    _check_n(n, 1)
    px = np.asarray(px, dtype=float)
    return scalarize((1.0 - px) * pow1m((1.0 - alpha) * px, n - 1))


def q_x1(px, alpha, n):
    """``Pr(N'_x = 1, x off the ends)``; summed over the ``n - 2`` interior slots."""
    check_alpha(alpha)
    _check_n(n, 3)
    px = np.asarray(px, dtype=float)
    b = 1.0 - alpha
    return scalarize((n - 2) * b**2 * px * (1.0 - px) ** 2 * pow1m(b * px, n - 3))


def q_xy00(px, py, alpha, n):
    """Neither ``x`` nor ``y`` appears anywhere."""
    check_alpha(alpha)
    _check_n(n, 1)
    _, _, s, u = _pair(px, py)
    return scalarize(u * pow1m((1.0 - alpha) * s, n - 1))


def q_xy10(px, py, alpha, n):
    """``x`` is an interior singleton off the ends and ``y`` never appears."""
    check_alpha(alpha)
    _check_n(n, 3)
    px, _, s, u = _pair(px, py)
    b = 1.0 - alpha
    return scalarize((n - 2) * b**2 * px * u**2 * pow1m(b * s, n - 3))


def q_xy01(px, py, alpha, n):
    return q_xy10(py, px, alpha, n)


def q_xy11(px, py, alpha, n):
    """Both ``x`` and ``y`` are interior singletons off the ends.

    Sums the adjacent placements (``2(n-3)`` ordered slot pairs) and the
    separated ones (``(n-3)(n-4)``).
    """
    check_alpha(alpha)
    _check_n(n, 5)
    px, py, s, u = _pair(px, py)
    b = 1.0 - alpha
    r = 1.0 - b * s
    return scalarize(
        (n - 3) * b**3 * px * py * pow1m(b * s, n - 5) * u**2 * (2.0 * r + (n - 4) * b * u)
    )


def t_xy(px, py, alpha, n):
    """Cross term of the squared error for an ordered pair ``x != y``."""
    _check_n(n, 5)
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    c1 = (1.0 - alpha) ** 2 * (n - 2)
    return scalarize(
        px * py * q_xy00(px, py, alpha, n)
        + q_xy11(px, py, alpha, n) / c1**2
        - (px * q_xy01(px, py, alpha, n) + py * q_xy10(px, py, alpha, n)) / c1
    )
