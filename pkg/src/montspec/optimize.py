"""One-dimensional golden-section search for smooth unimodal functions."""

import math

_INV_GOLD = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi


def minimize_golden(f, a: float, b: float, xtol: float = 1e-10, maxiter: int = 400):
    """Minimize a unimodal f on [a, b]; returns (x_min, f(x_min)).

    Shrinks the bracket by the golden ratio until its width drops below
    xtol.  Fully deterministic.  Below width ~sqrt(eps) the comparisons of
    a smooth f are rounding noise, so the returned minimizer is accurate
    to about max(xtol, sqrt(eps)) while the value is accurate to O(that^2).
    """
    if not b > a:
        raise ValueError("need a < b")
    c = b - _INV_GOLD * (b - a)
    d = a + _INV_GOLD * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if b - a <= xtol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLD * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLD * (b - a)
            fd = f(d)
    if fc < fd:
        return c, fc
    return d, fd


def maximize_golden(f, a: float, b: float, xtol: float = 1e-10, maxiter: int = 400):
    """Maximize a unimodal f on [a, b]; returns (x_max, f(x_max))."""
    x, neg = minimize_golden(lambda t: -f(t), a, b, xtol=xtol, maxiter=maxiter)
    return x, -neg
