"""Mitigation methods for the Runge phenomenon, each returning an approximant.

Exact interpolation (barycentric Lagrange, Chebyshev-node, cubic spline,
mock-Chebyshev subset), penalized fits (ridge/lasso/elastic net, Tikhonov),
curvature-constrained fits near the endpoints, three-interval piecewise
strategies, and truncated-SVD solves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as _poly

from . import linalg
from .core import (
    Approximant,
    Barycentric,
    Basis,
    BasisPoly,
    Interval,
    NodeFamily,
    NodeSet,
    Piecewise,
    SampleSet,
    TargetFunction,
)
from .linalg import NumericError
from .nodes import chebyshev_roots, equispaced, mock_chebyshev_subset


# ---------------------------------------------------------------------------
# Exact interpolation


def lagrange_interpolate(samples: SampleSet) -> Barycentric:
    """Barycentric Lagrange interpolant through every sample."""
    return Barycentric.fit(samples)


def chebyshev_interpolate(f: TargetFunction, n: int, interval: Interval = Interval()) -> Barycentric:
    """Interpolate f at the n+1 roots of T_{n+1} on the interval."""
    nodes = chebyshev_roots(n, interval)
    if len(nodes) < 2:
        # degenerate single-node case: pad with the midpoint-adjacent root of T_2
        nodes = chebyshev_roots(1, interval)
    return Barycentric.fit(f.sample(nodes))


def _piece_from_moments(x0, x1, y0, y1, m0, m1) -> BasisPoly:
    h = x1 - x0
    X = _poly.Polynomial([0.0, 1.0])
    p = (
        m0 * (x1 - X) ** 3 / (6 * h)
        + m1 * (X - x0) ** 3 / (6 * h)
        + (y0 / h - m0 * h / 6) * (x1 - X)
        + (y1 / h - m1 * h / 6) * (X - x0)
    )
    return BasisPoly(Basis.MONOMIAL, p.coef, Interval(float(x0), float(x1)))


def cubic_spline(samples: SampleSet) -> Piecewise:
    """Natural cubic spline through the samples via the tridiagonal moment system."""
    if len(samples) < 3:
        raise ValueError("cubic spline needs at least three samples")
    x = samples.xs
    y = samples.ys
    h = np.diff(x)
    n = len(x)
    # interior second-derivative moments; natural ends are zero
    diag = (h[:-1] + h[1:]) / 3.0
    sub = h[1:-1] / 6.0
    sup = h[1:-1] / 6.0
    rhs = np.diff(y[1:]) / h[1:] - np.diff(y[:-1]) / h[:-1]
    m = np.zeros(n)
    if n > 2:
        m[1:-1] = linalg.solve_tridiagonal(sub, diag, sup, rhs)
    pieces = [
        _piece_from_moments(x[i], x[i + 1], y[i], y[i + 1], m[i], m[i + 1])
        for i in range(n - 1)
    ]
    return Piecewise(breakpoints=x, pieces=tuple(pieces))


# ---------------------------------------------------------------------------
# Penalized polynomial fits


class PenaltyKind(enum.Enum):
    NONE = "none"
    RIDGE = "ridge"
    LASSO = "lasso"
    ELASTIC_NET = "elastic_net"


def fit_regularized(
    samples: SampleSet,
    degree: int,
    penalty: PenaltyKind | str = PenaltyKind.NONE,
    alpha: float = 0.0,
    rho: float = 0.5,
    tol: float = 1e-8,
    max_iter: int = 100_000,
) -> BasisPoly:
    """Monomial fit of the given degree under the chosen penalty.

    With no penalty this is the plain (overfit-prone) least-squares baseline;
    ridge takes the closed form, lasso and elastic net run coordinate descent.
    """
    penalty = PenaltyKind(penalty)
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    A = linalg.design_matrix(samples.nodes, degree, Basis.MONOMIAL)
    y = samples.ys
    if penalty is PenaltyKind.NONE:
        coeffs = linalg.lstsq(A, y)
    elif penalty is PenaltyKind.RIDGE:
        coeffs = linalg.ridge_closed_form(A, y, alpha)
    elif penalty is PenaltyKind.LASSO:
        coeffs = linalg.elastic_net_cd(A, y, alpha, rho=1.0, tol=tol, max_iter=max_iter).coeffs
    else:
        coeffs = linalg.elastic_net_cd(A, y, alpha, rho=rho, tol=tol, max_iter=max_iter).coeffs
    return BasisPoly(Basis.MONOMIAL, coeffs, samples.interval)


class TikhonovOperator(enum.Enum):
    IDENTITY = "identity"
    SECOND_DIFFERENCE = "second_difference"


def _second_difference_matrix(p: int) -> np.ndarray:
    if p < 3:
        return np.zeros((0, p))
    D = np.zeros((p - 2, p))
    for i in range(p - 2):
        D[i, i : i + 3] = (1.0, -2.0, 1.0)
    return D


def tikhonov_fit(
    samples: SampleSet,
    degree: int,
    lam: float,
    operator: TikhonovOperator | str = TikhonovOperator.IDENTITY,
) -> BasisPoly:
    """Stacked least squares [A; L] c = [y; 0] with L = lam*I or lam*D2."""
    operator = TikhonovOperator(operator)
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    A = linalg.design_matrix(samples.nodes, degree, Basis.MONOMIAL)
    p = degree + 1
    if operator is TikhonovOperator.IDENTITY:
        L = lam * np.eye(p)
    else:
        L = lam * _second_difference_matrix(p)
    stacked = np.vstack([A, L])
    rhs = np.concatenate([samples.ys, np.zeros(L.shape[0])])
    coeffs = linalg.lstsq(stacked, rhs)
    return BasisPoly(Basis.MONOMIAL, coeffs, samples.interval)


# ---------------------------------------------------------------------------
# External fake-constraint interpolation (curvature pinned near the endpoints)


@dataclass(frozen=True)
class EfciConfig:
    degree: int = 10
    m: int = 4
    epsilon: float = 0.1
    search: bool = False
    constraint_weight: float = 10.0

    def __post_init__(self):
        if self.m < 2 or self.m % 2:
            raise ValueError("m must be an even integer >= 2")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")
        if self.constraint_weight <= 0:
            raise ValueError("constraint_weight must be > 0")


def _second_derivative_row(x: float, degree: int) -> np.ndarray:
    row = np.zeros(degree + 1)
    j = np.arange(2, degree + 1)
    row[2:] = j * (j - 1) * x ** (j - 2)
    return row


def _efc_positions(interval: Interval, m: int, epsilon: float) -> np.ndarray:
    half = m // 2
    left = np.linspace(interval.lo, interval.lo + epsilon, half)
    right = np.linspace(interval.hi - epsilon, interval.hi, half)
    return np.concatenate([left, right])


def _efci_single(samples: SampleSet, f: TargetFunction, cfg: EfciConfig, m: int):
    interval = samples.interval
    positions = _efc_positions(interval, m, cfg.epsilon)
    A = linalg.design_matrix(samples.nodes, cfg.degree, Basis.MONOMIAL)
    C = np.array([_second_derivative_row(x, cfg.degree) for x in positions])
    w = np.sqrt(cfg.constraint_weight)
    stacked = np.vstack([A, w * C])
    rhs = np.concatenate([samples.ys, np.zeros(len(positions))])
    coeffs = linalg.lstsq(stacked, rhs)
    approx = BasisPoly(Basis.MONOMIAL, coeffs, interval)
    data_term = float(np.sum((approx.evaluate(samples.xs) - samples.ys) ** 2))
    efc_term = float(np.sum((approx.evaluate(positions) - f(positions)) ** 2))
    return approx, positions, data_term + efc_term


def efci_fit(samples: SampleSet, f: TargetFunction, cfg: EfciConfig):
    """Fit a polynomial matching the samples while flattening its curvature at
    auxiliary points inside the two epsilon-wide end bands.

    Curvature conditions enter as weighted penalty rows. With cfg.search the
    external-point count sweeps {2,4,6,8,10} and the candidate with the
    smallest two-term objective (data mismatch plus deviation from f at the
    auxiliary points) wins; ties go to the smaller count.

    Returns (approximant, efc_positions, objective).
    """
    if cfg.degree < 2:
        raise ValueError("degree must be >= 2 to carry curvature constraints")
    if cfg.epsilon >= samples.interval.width / 2:
        raise ValueError("epsilon must be smaller than half the interval width")
    if not cfg.search:
        return _efci_single(samples, f, cfg, cfg.m)
    best = None
    for m in (2, 4, 6, 8, 10):
        candidate = _efci_single(samples, f, cfg, m)
        if best is None or candidate[2] < best[2]:
            best = candidate
    return best


# ---------------------------------------------------------------------------
# Mock-Chebyshev subset methods


def mock_chebyshev_interpolate(full: SampleSet, m: int, exclude_endpoints: bool = False) -> Barycentric:
    """Interpolate on the subset of the full grid nearest the Lobatto targets."""
    if len(full) < 2:
        raise ValueError("need at least two samples")
    sel = mock_chebyshev_subset(full.nodes, m, exclude_endpoints=exclude_endpoints)
    idx = list(sel.indices)
    if len(idx) < 2:
        raise ValueError("mock-Chebyshev subset collapsed below two nodes")
    subset = SampleSet(sel.node_set(), full.ys[idx])
    return Barycentric.fit(subset)


def constrained_mock_chebyshev_lstsq(
    full: SampleSet,
    m: int,
    ls_degree: int | None = None,
) -> BasisPoly:
    """Least squares over the full grid, constrained to interpolate exactly on
    the mock-Chebyshev subset; solved through the KKT system of the
    equality-constrained problem in the monomial basis.

    ls_degree defaults to |subset| + (|full| - |subset|) // 2.
    """
    sel = mock_chebyshev_subset(full.nodes, m)
    idx = list(sel.indices)
    k = len(idx)
    if ls_degree is None:
        ls_degree = k + (len(full) - k) // 2
    if not (k <= ls_degree + 1 <= len(full)):
        raise ValueError(
            f"need subset size ({k}) <= ls_degree+1 ({ls_degree + 1}) <= grid size ({len(full)})"
        )
    A = linalg.design_matrix(full.nodes, ls_degree, Basis.MONOMIAL)
    C = A[idx]
    d = full.ys[idx]
    p = ls_degree + 1
    kkt = np.zeros((p + k, p + k))
    kkt[:p, :p] = 2.0 * A.T @ A
    kkt[:p, p:] = C.T
    kkt[p:, :p] = C
    rhs = np.concatenate([2.0 * A.T @ full.ys, d])
    try:
        sol = np.linalg.solve(kkt, rhs)
    except np.linalg.LinAlgError as exc:
        raise NumericError("singular KKT system in constrained least squares") from exc
    return BasisPoly(Basis.MONOMIAL, sol[:p], full.interval)


# ---------------------------------------------------------------------------
# Three-interval strategies


class BandStrategy(enum.Enum):
    LAGRANGE_EQUISPACED = "lagrange_equispaced"
    LAGRANGE_CHEB = "lagrange_cheb"
    SPLINE_LOCAL = "spline_local"


@dataclass(frozen=True)
class TisiConfig:
    epsilon: float = 0.2
    left_strategy: BandStrategy = BandStrategy.LAGRANGE_EQUISPACED
    center_strategy: BandStrategy = BandStrategy.LAGRANGE_EQUISPACED
    right_strategy: BandStrategy = BandStrategy.LAGRANGE_EQUISPACED
    nodes_per_interval: int = 11

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be > 0")
        if self.nodes_per_interval < 2:
            raise ValueError("nodes_per_interval must be >= 2")

    @classmethod
    def improved(cls, epsilon: float = 0.2, nodes_per_interval: int = 11) -> "TisiConfig":
        """End bands on equispaced Lagrange, Chebyshev clustering in the center."""
        return cls(
            epsilon=epsilon,
            left_strategy=BandStrategy.LAGRANGE_EQUISPACED,
            center_strategy=BandStrategy.LAGRANGE_CHEB,
            right_strategy=BandStrategy.LAGRANGE_EQUISPACED,
            nodes_per_interval=nodes_per_interval,
        )


def _band_nodes(band: Interval, strategy: BandStrategy, n: int) -> NodeSet:
    if strategy is BandStrategy.LAGRANGE_CHEB:
        # Chebyshev clustering inside the band, with both band endpoints forced
        # in so adjacent pieces share a node and the join stays continuous.
        interior = chebyshev_roots(max(n - 3, 0), band).xs if n >= 3 else np.array([])
        xs = np.unique(np.concatenate([[band.lo], interior, [band.hi]]))
        return NodeSet(band, xs, NodeFamily.CUSTOM)
    return equispaced(n, band)


def _fit_band(f: TargetFunction, band: Interval, strategy: BandStrategy, n: int) -> Approximant:
    nodes = _band_nodes(band, strategy, n)
    samples = f.sample(nodes)
    if strategy is BandStrategy.SPLINE_LOCAL:
        if n < 3:
            raise ValueError("spline band needs nodes_per_interval >= 3")
        return cubic_spline(samples)
    return Barycentric.fit(samples)


def tisi_fit(f: TargetFunction, interval: Interval, cfg: TisiConfig) -> Piecewise:
    """Split the interval into [lo, lo+eps], [lo+eps, hi-eps], [hi-eps, hi] and
    fit each band independently by its configured strategy, sampling f fresh in
    each band. Shared band-endpoint nodes make the result continuous."""
    if cfg.epsilon >= interval.width / 2:
        raise ValueError("epsilon must be smaller than half the interval width")
    breaks = np.array([interval.lo, interval.lo + cfg.epsilon, interval.hi - cfg.epsilon, interval.hi])
    strategies = (cfg.left_strategy, cfg.center_strategy, cfg.right_strategy)
    pieces = tuple(
        _fit_band(f, Interval(float(breaks[i]), float(breaks[i + 1])), strategies[i], cfg.nodes_per_interval)
        for i in range(3)
    )
    return Piecewise(breakpoints=breaks, pieces=pieces)


# ---------------------------------------------------------------------------
# Truncated-SVD fits


def svd_truncated_fit(
    samples: SampleSet,
    degree: int,
    threshold: float,
    basis: Basis = Basis.LEGENDRE,
) -> BasisPoly:
    """Design matrix in the chosen basis, solved through the relative-threshold
    truncated pseudo-inverse."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if basis is Basis.CHEBYSHEV_T:
        raise ValueError("svd_truncated_fit supports the monomial and Legendre bases")
    A = linalg.design_matrix(samples.nodes, degree, basis)
    coeffs, _ = linalg.truncated_pinv_solve(A, samples.ys, threshold)
    return BasisPoly(basis, coeffs, samples.interval)
