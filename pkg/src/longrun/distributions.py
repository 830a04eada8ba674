"""Tail probabilities for the chi-square, F and normal distributions.

The incomplete gamma and beta functions are evaluated with the classic
series-plus-continued-fraction scheme (Press et al., Numerical Recipes,
ch. 6): the series converges fast for small arguments, the Lentz continued
fraction everywhere else.  Target absolute error is 1e-10, comfortably
tighter than any p-value comparison made downstream.
"""

from __future__ import annotations

import math

from .errors import DomainError

_TOL = 1e-15
_MAX_ITER = 400
_TINY = 1e-300


def _gamma_series(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) by power series (x < a + 1)."""
    if x <= 0.0:
        return 0.0
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _TOL:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_cf(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) by continued fraction (x >= a + 1)."""
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _TOL:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def gamma_sf(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) = P(X > x) for X ~ Gamma(a, 1)."""
    if a <= 0.0:
        raise DomainError("shape must be positive")
    if x < 0.0:
        raise DomainError("x must be non-negative")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_cf(a, x)


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the regularized incomplete beta (Lentz's method)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _TOL:
            break
    return h


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if a <= 0.0 or b <= 0.0:
        raise DomainError("beta parameters must be positive")
    if x < 0.0 or x > 1.0:
        raise DomainError("x must lie in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    front = math.exp(
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b) + a * math.log(x) + b * math.log1p(-x)
    )
    # The continued fraction converges fast only for x below the mean a/(a+b);
    # use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) otherwise.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def chi2_sf(x: float, df: int) -> float:
    """Upper-tail probability P(X > x) for X ~ chi-square(df)."""
    if df < 1:
        raise DomainError("df must be >= 1")
    if x < 0.0:
        raise DomainError("chi-square statistic must be non-negative")
    return gamma_sf(df / 2.0, x / 2.0)


def chi2_ppf(p: float, df: int) -> float:
    """Quantile x with P(X <= x) = p for X ~ chi-square(df), by bisection."""
    if not 0.0 < p < 1.0:
        raise DomainError("p must lie strictly between 0 and 1")
    if df < 1:
        raise DomainError("df must be >= 1")
    q = 1.0 - p
    lo, hi = 0.0, float(max(df, 1))
    while chi2_sf(hi, df) > q:
        hi *= 2.0
        if hi > 1e308:
            raise DomainError("quantile out of range")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if chi2_sf(mid, df) > q:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def f_sf(f: float, d1: int, d2: int) -> float:
    """Upper-tail probability P(X > f) for X ~ F(d1, d2)."""
    if d1 < 1 or d2 < 1:
        raise DomainError("degrees of freedom must be >= 1")
    if f < 0.0:
        raise DomainError("F statistic must be non-negative")
    if f == 0.0:
        return 1.0
    return betainc(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f))


def norm_cdf(z: float) -> float:
    """Standard normal CDF."""
    return 0.5 * math.erfc(-z / math.sqrt(2.0))
