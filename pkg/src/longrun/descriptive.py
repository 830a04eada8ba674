"""Summary statistics, Jarque-Bera normality test, and Pearson correlation.

Moment conventions: skewness and kurtosis use population moments (divisor n)
and kurtosis is reported non-excess, while the reported standard deviation
uses the sample divisor (n - 1).  This is the one pairing under which the
mean/sum, std-dev/sum-of-squared-deviations and Jarque-Bera identities all
hold simultaneously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import chi2_sf
from .errors import ConstantColumn, ConstantSeries, TooShort
from .series import Panel, Series


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    median: float
    maximum: float
    minimum: float
    std_dev: float
    skewness: float
    kurtosis: float  # non-excess (normal = 3)
    jarque_bera: float
    jb_probability: float
    sum: float
    sum_sq_dev: float
    observations: int


def jarque_bera(skewness: float, kurtosis: float, n: int) -> float:
    """JB = (n/6) (S^2 + (K - 3)^2 / 4), asymptotically chi-square(2)."""
    return (n / 6.0) * (skewness ** 2 + (kurtosis - 3.0) ** 2 / 4.0)


def summarize(s: Series) -> SummaryStats:
    """Full descriptive-statistics block for one monthly series."""
    x = np.asarray(s.values, dtype=float)
    n = len(x)
    if n < 4:
        raise TooShort("need at least 4 observations for kurtosis")
    mean = float(np.mean(x))
    centered = x - mean
    # second centering pass removes the rounding error of the mean itself,
    # which otherwise contaminates the odd moments when |mean| >> std
    centered = centered - centered.mean()
    m2 = float(np.mean(centered ** 2))
    if m2 == 0.0:
        raise ConstantSeries(f"series {s.name!r} is constant")
    m3 = float(np.mean(centered ** 3))
    m4 = float(np.mean(centered ** 4))
    skew = m3 / m2 ** 1.5
    kurt = m4 / m2 ** 2
    jb = jarque_bera(skew, kurt, n)
    ssd = float(centered @ centered)
    return SummaryStats(
        mean=mean,
        median=float(np.median(x)),
        maximum=float(np.max(x)),
        minimum=float(np.min(x)),
        std_dev=math.sqrt(ssd / (n - 1)),
        skewness=skew,
        kurtosis=kurt,
        jarque_bera=jb,
        jb_probability=chi2_sf(jb, 2),
        sum=float(np.sum(x)),
        sum_sq_dev=ssd,
        observations=n,
    )


def correlation(p: Panel) -> np.ndarray:
    """Pearson correlation matrix of the panel columns.

    Exactly symmetric with a unit diagonal by construction.
    """
    data = p.data
    if len(p) < 3:
        raise TooShort("need at least 3 observations for a correlation")
    centered = data - data.mean(axis=0)
    centered = centered - centered.mean(axis=0)
    norms = np.sqrt(np.sum(centered ** 2, axis=0))
    for j, nrm in enumerate(norms):
        if nrm == 0.0:
            raise ConstantColumn(f"column {p.labels[j]!r} is constant")
    m = p.m
    corr = np.eye(m)
    for i in range(m):
        for j in range(i + 1, m):
            r = float(centered[:, i] @ centered[:, j]) / (norms[i] * norms[j])
            corr[i, j] = r
            corr[j, i] = r
    return corr
