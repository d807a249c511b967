"""Dense linear algebra for design systems: pivoted-QR least squares,
SVD with relative truncation, Thomas tridiagonal solve, coordinate descent
for L1/elastic-net penalties, and the ridge closed form."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from numpy.polynomial import legendre as _leg
from numpy.polynomial import polynomial as _poly

from .core import Basis, NodeSet


class NumericError(RuntimeError):
    """Numerical failure: singular system, non-convergence, full truncation."""


def design_matrix(nodes: NodeSet, degree: int, basis: Basis = Basis.MONOMIAL) -> np.ndarray:
    """(len(nodes)) x (degree+1) matrix; column j holds basis_j at each node.

    Chebyshev/Legendre columns are evaluated after the affine map to [-1, 1].
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if basis is Basis.MONOMIAL:
        return _poly.polyvander(nodes.xs, degree)
    t = nodes.interval.to_unit(nodes.xs)
    if basis is Basis.CHEBYSHEV_T:
        return _cheb.chebvander(t, degree)
    return _leg.legvander(t, degree)


def lstsq(A: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Least squares via Householder QR with column pivoting.

    Rank-deficient trailing pivot columns get zero coefficients.
    """
    A = np.asarray(A, dtype=float)
    y = np.asarray(y, dtype=float)
    if A.ndim != 2 or A.size == 0:
        raise ValueError("A must be a non-empty 2-D matrix")
    m, n = A.shape
    if len(y) != m:
        raise ValueError("rhs length must match row count")

    R = A.copy()
    b = y.copy()
    perm = np.arange(n)
    steps = min(m, n)
    for k in range(steps):
        norms = np.linalg.norm(R[k:, k:], axis=0)
        p = k + int(np.argmax(norms))
        if p != k:
            R[:, [k, p]] = R[:, [p, k]]
            perm[[k, p]] = perm[[p, k]]
        x = R[k:, k]
        alpha = -np.copysign(np.linalg.norm(x), x[0] if x[0] != 0 else 1.0)
        if alpha == 0.0:
            continue
        v = x.copy()
        v[0] -= alpha
        vnorm2 = v @ v
        if vnorm2 == 0.0:
            continue
        R[k:, k:] -= np.outer(v, (2.0 / vnorm2) * (v @ R[k:, k:]))
        b[k:] -= (2.0 * (v @ b[k:]) / vnorm2) * v
        R[k + 1:, k] = 0.0
        R[k, k] = alpha

    diag = np.abs(np.diag(R[:steps, :steps]))
    rank = steps
    if diag[0] == 0.0:
        rank = 0
    else:
        tol = max(m, n) * np.finfo(float).eps * diag[0]
        small = np.nonzero(diag <= tol)[0]
        if len(small):
            rank = int(small[0])

    c = np.zeros(n)
    if rank > 0:
        c[:rank] = np.linalg.solve(np.triu(R[:rank, :rank]), b[:rank])
    out = np.zeros(n)
    out[perm] = c
    return out


@dataclass(frozen=True)
class SvdFactors:
    U: np.ndarray
    singular_values: np.ndarray
    Vt: np.ndarray


def svd(A: np.ndarray) -> SvdFactors:
    """Thin SVD, singular values sorted non-increasing."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or min(A.shape) < 1:
        raise ValueError("A must be a non-empty 2-D matrix")
    try:
        U, s, Vt = np.linalg.svd(A, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD failed to converge on {A.shape} matrix: {exc}") from exc
    return SvdFactors(U=U, singular_values=s, Vt=Vt)


def truncated_pinv_solve(A: np.ndarray, y: np.ndarray, threshold: float) -> tuple[np.ndarray, int]:
    """Pseudo-inverse solve keeping singular values with sigma/sigma_max >= threshold.

    Returns the coefficient vector and the kept rank.
    """
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    y = np.asarray(y, dtype=float)
    f = svd(A)
    if len(y) != f.U.shape[0]:
        raise ValueError("rhs length must match row count")
    s = f.singular_values
    smax = s[0] if len(s) else 0.0
    keep = (s > 0) & (s >= threshold * smax) if smax > 0 else np.zeros(len(s), dtype=bool)
    kept_rank = int(np.count_nonzero(keep))
    if kept_rank == 0:
        raise NumericError("fully truncated: no singular values survive the threshold")
    coeffs = f.Vt[keep].T @ ((f.U[:, keep].T @ y) / s[keep])
    return coeffs, kept_rank


def solve_tridiagonal(sub: np.ndarray, diag: np.ndarray, sup: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Thomas algorithm for a tridiagonal system."""
    sub = np.asarray(sub, dtype=float)
    diag = np.asarray(diag, dtype=float)
    sup = np.asarray(sup, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    n = len(diag)
    if len(rhs) != n or len(sub) != n - 1 or len(sup) != n - 1:
        raise ValueError("band lengths inconsistent with system size")
    c = np.zeros(n - 1) if n > 1 else np.zeros(0)
    d = np.zeros(n)
    piv = diag[0]
    if piv == 0.0:
        raise NumericError("zero pivot in tridiagonal solve at row 0")
    if n > 1:
        c[0] = sup[0] / piv
    d[0] = rhs[0] / piv
    for i in range(1, n):
        piv = diag[i] - sub[i - 1] * c[i - 1]
        if piv == 0.0:
            raise NumericError(f"zero pivot in tridiagonal solve at row {i}")
        if i < n - 1:
            c[i] = sup[i] / piv
        d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / piv
    x = d
    for i in range(n - 2, -1, -1):
        x[i] -= c[i] * x[i + 1]
    return x


@dataclass(frozen=True)
class CdResult:
    coeffs: np.ndarray
    converged: bool
    n_sweeps: int
    objectives: np.ndarray = field(repr=False)


def elastic_net_objective(A: np.ndarray, y: np.ndarray, w: np.ndarray, alpha: float, rho: float) -> float:
    r = y - A @ w
    n = len(y)
    return float(
        0.5 / n * (r @ r)
        + alpha * rho * np.sum(np.abs(w))
        + 0.5 * alpha * (1.0 - rho) * (w @ w)
    )


def elastic_net_cd(
    A: np.ndarray,
    y: np.ndarray,
    alpha: float,
    rho: float,
    tol: float = 1e-8,
    max_iter: int = 100_000,
) -> CdResult:
    """Cyclic coordinate descent on
    (1/2N)||y - Aw||^2 + alpha*rho*||w||_1 + alpha*(1-rho)/2*||w||_2^2.

    Soft-threshold update per coordinate; stops once the largest coordinate
    change in a sweep drops below tol. Non-convergence is reported in the
    result, not raised.
    """
    A = np.asarray(A, dtype=float)
    y = np.asarray(y, dtype=float)
    if A.ndim != 2 or A.shape[0] != len(y) or A.shape[0] < 1:
        raise ValueError("A rows must match rhs length")
    if not 0.0 <= rho <= 1.0:
        raise ValueError("rho must lie in [0, 1]")
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    n_obs, p = A.shape
    z = np.einsum("ij,ij->j", A, A) / n_obs
    w = np.zeros(p)
    r = y.copy()  # residual y - A w
    lam1 = alpha * rho
    lam2 = alpha * (1.0 - rho)
    objectives = [elastic_net_objective(A, y, w, alpha, rho)]
    converged = False
    sweeps = 0
    for sweeps in range(1, max_iter + 1):
        max_delta = 0.0
        for j in range(p):
            if z[j] + lam2 == 0.0:
                continue
            rho_j = (A[:, j] @ r) / n_obs + z[j] * w[j]
            wj_new = np.sign(rho_j) * max(abs(rho_j) - lam1, 0.0) / (z[j] + lam2)
            delta = wj_new - w[j]
            if delta != 0.0:
                r -= delta * A[:, j]
                w[j] = wj_new
                max_delta = max(max_delta, abs(delta))
        objectives.append(elastic_net_objective(A, y, w, alpha, rho))
        if max_delta < tol:
            converged = True
            break
    return CdResult(coeffs=w, converged=converged, n_sweeps=sweeps, objectives=np.asarray(objectives))


def ridge_closed_form(A: np.ndarray, y: np.ndarray, alpha: float, n_scale: int | None = None) -> np.ndarray:
    """Solve (A^T A + n_scale*alpha*I) c = A^T y by Cholesky.

    n_scale defaults to the number of rows, matching the 1/2N data-term
    normalization used by the coordinate-descent objective at rho = 0.
    """
    A = np.asarray(A, dtype=float)
    y = np.asarray(y, dtype=float)
    if A.ndim != 2 or A.size == 0 or A.shape[0] != len(y):
        raise ValueError("A must be non-empty with rows matching rhs length")
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if n_scale is None:
        n_scale = A.shape[0]
    M = A.T @ A + n_scale * alpha * np.eye(A.shape[1])
    try:
        L = np.linalg.cholesky(M)
    except np.linalg.LinAlgError as exc:
        raise NumericError("ridge system not positive definite") from exc
    z = np.linalg.solve(L, A.T @ y)
    return np.linalg.solve(L.T, z)
