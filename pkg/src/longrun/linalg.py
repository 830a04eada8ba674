"""Least squares and small symmetric eigenproblems.

Everything downstream (unit-root regressions, VAR equations, the reduced-rank
cointegration step) funnels through these few routines.  Least squares is
solved through a QR factorization rather than the normal equations: price
levels around 5e4 make X'X badly scaled, while QR works on X directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError, NotPositiveDefinite, RankDeficient, TooShort

# Columns whose smallest/largest singular value ratio falls below this are
# treated as numerically dependent.
RANK_RTOL = 1e-12

LN_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class OlsFit:
    """Result of an ordinary least-squares fit.

    Attributes
    ----------
    coefficients : (k,) array
    residuals : (T,) array, y - X @ coefficients
    ssr : float, sum of squared residuals
    sigma2 : float, ssr / (T - k)
    df_resid : int, T - k
    loglik : float, Gaussian log-likelihood -(T/2) (1 + ln 2pi + ln(ssr/T));
        +inf for an exact fit (ssr == 0)
    """

    coefficients: np.ndarray
    residuals: np.ndarray
    ssr: float
    sigma2: float
    df_resid: int
    loglik: float


def _as_design(X, y):
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2 or y.ndim != 1:
        raise DimensionMismatch("X must be 2-D and y 1-D")
    if X.shape[0] != y.shape[0]:
        raise DimensionMismatch(f"X has {X.shape[0]} rows but y has {y.shape[0]}")
    if not (np.isfinite(X).all() and np.isfinite(y).all()):
        raise DomainError("non-finite values in regression inputs")
    return X, y


def _check_rank(X):
    sv = np.linalg.svd(X, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] / sv[0] <= RANK_RTOL:
        raise RankDeficient(
            f"design matrix is numerically singular (sv ratio {0.0 if sv[0] == 0 else sv[-1] / sv[0]:.2e})"
        )


def ols_fit(X, y) -> OlsFit:
    """Fit y = X b by least squares via QR.

    Requires T > k and a full-column-rank X (relative singular-value
    threshold 1e-12).  Raises DimensionMismatch, TooShort or RankDeficient.
    """
    X, y = _as_design(X, y)
    T, k = X.shape
    if k < 1:
        raise DimensionMismatch("X needs at least one column")
    if T <= k:
        raise TooShort(f"need more observations ({T}) than regressors ({k})")
    _check_rank(X)
    Q, R = np.linalg.qr(X)
    beta = np.linalg.solve(R, Q.T @ y)
    resid = y - X @ beta
    ssr = float(resid @ resid)
    df = T - k
    sigma2 = ssr / df
    loglik = math.inf if ssr <= 0.0 else -(T / 2.0) * (1.0 + LN_2PI + math.log(ssr / T))
    return OlsFit(beta, resid, ssr, sigma2, df, loglik)


def coef_covariance_unscaled(X) -> np.ndarray:
    """(X'X)^-1 computed from the QR factor (multiply by sigma2 for the OLS
    coefficient covariance)."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    _check_rank(X)
    R = np.linalg.qr(X, mode="r")
    Rinv = np.linalg.solve(R, np.eye(R.shape[0]))
    return Rinv @ Rinv.T


def residuals_of(Y, Z) -> np.ndarray:
    """Residuals of each column of Y regressed on the columns of Z.

    Z with zero columns returns Y unchanged.
    """
    Y = np.asarray(Y, dtype=float)
    Z = np.asarray(Z, dtype=float)
    if Y.ndim == 1:
        Y = Y[:, None]
    if Z.size == 0:
        return Y.copy()
    if Z.ndim == 1:
        Z = Z[:, None]
    if Z.shape[0] != Y.shape[0]:
        raise DimensionMismatch("Y and Z row counts differ")
    Q, _ = np.linalg.qr(Z)
    return Y - Q @ (Q.T @ Y)


def solve_generalized_eig(A, B):
    """Solve A v = lambda B v for symmetric PSD A and symmetric PD B.

    Reduced to a standard symmetric problem through the Cholesky factor of B,
    which keeps every intermediate real and symmetric.  Returns (eigenvalues
    sorted descending, eigenvector matrix with matching columns).  Raises
    NotPositiveDefinite if B has no Cholesky factorization.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch("A and B must be square with equal shapes")
    scale = max(1.0, float(np.abs(A).max()))
    if np.abs(A - A.T).max() > 1e-10 * scale:
        raise DomainError("A is not symmetric within tolerance")
    try:
        L = np.linalg.cholesky(B)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("B is not positive definite") from exc
    # C = L^-1 A L^-T via two triangular solves, then symmetrize roundoff away.
    Y = np.linalg.solve(L, A)
    C = np.linalg.solve(L, Y.T).T
    C = 0.5 * (C + C.T)
    w, V = np.linalg.eigh(C)
    U = np.linalg.solve(L.T, V)
    order = np.argsort(w)[::-1]
    return w[order], U[:, order]


def log_det(M) -> float:
    """ln det M for symmetric positive definite M, via Cholesky.

    Never forms the raw determinant, so it stays accurate when det M would
    overflow or underflow.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch("M must be square")
    scale = max(1.0, float(np.abs(M).max()))
    if np.abs(M - M.T).max() > 1e-10 * scale:
        raise NotPositiveDefinite("M is not symmetric")
    try:
        L = np.linalg.cholesky(M)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("M is not positive definite") from exc
    return float(2.0 * np.sum(np.log(np.diag(L))))
