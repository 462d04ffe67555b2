import numpy as np


def pow1m(c, m):
    """``(1 - c)^m`` as ``exp(m * log1p(-c))``, with ``0^0 = 1``.

    Accurate for tiny ``c`` at large ``m`` where the naive power loses digits.
    """
    c = np.asarray(c, dtype=float)
    m = np.asarray(m, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.exp(m * np.log1p(-c))
    return np.where(m == 0, 1.0, out)


def scalarize(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def check_alpha(alpha):
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
