"""Core value types: intervals, node sets, samples, target functions, approximants.

Everything here is an immutable value object; construction validates, evaluation
never mutates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from numpy.polynomial import legendre as _leg
from numpy.polynomial import polynomial as _poly


class NodeFamily(enum.Enum):
    EQUISPACED = "equispaced"
    CHEBYSHEV_ROOTS = "chebyshev_roots"
    CHEBYSHEV_LOBATTO = "chebyshev_lobatto"
    MOCK_CHEBYSHEV_SUBSET = "mock_chebyshev_subset"
    CUSTOM = "custom"


class Basis(enum.Enum):
    MONOMIAL = "monomial"
    CHEBYSHEV_T = "chebyshev_t"
    LEGENDRE = "legendre"


@dataclass(frozen=True)
class Interval:
    lo: float = -1.0
    hi: float = 1.0

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"interval requires lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def to_unit(self, x):
        """Affine map of x from [lo, hi] onto [-1, 1]."""
        return (2.0 * (np.asarray(x, dtype=float) - self.lo) / self.width) - 1.0

    def from_unit(self, t):
        """Inverse of :meth:`to_unit`."""
        return self.lo + (np.asarray(t, dtype=float) + 1.0) * self.width / 2.0

    def contains(self, x, slack: float = 1e-12) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lo - slack) and np.all(x <= self.hi + slack))


def _frozen_array(values) -> np.ndarray:
    a = np.asarray(values, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class NodeSet:
    """Ordered abscissae on an interval, tagged with the generating family.

    A single node is permitted so degenerate generators (a single Chebyshev
    root) stay representable; interpolation routines impose their own minimum
    counts.
    """

    interval: Interval
    xs: np.ndarray
    family: NodeFamily = NodeFamily.CUSTOM

    def __post_init__(self):
        object.__setattr__(self, "xs", _frozen_array(self.xs))
        if self.xs.ndim != 1 or len(self.xs) < 1:
            raise ValueError("node set needs at least one abscissa")
        if not np.all(np.isfinite(self.xs)):
            raise ValueError("node abscissae must be finite")
        if np.any(np.diff(self.xs) <= 0):
            raise ValueError("node abscissae must be strictly increasing")
        if not self.interval.contains(self.xs):
            raise ValueError("node abscissae must lie within the interval")

    def __len__(self) -> int:
        return len(self.xs)


@dataclass(frozen=True)
class SampleSet:
    """Paired abscissae/ordinates sampled from some target function."""

    nodes: NodeSet
    ys: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "ys", _frozen_array(self.ys))
        if len(self.ys) != len(self.nodes):
            raise ValueError("ys must match node count")
        if not np.all(np.isfinite(self.ys)):
            raise ValueError("sample ordinates must be finite")

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def xs(self) -> np.ndarray:
        return self.nodes.xs

    @property
    def interval(self) -> Interval:
        return self.nodes.interval


@dataclass(frozen=True)
class TargetFunction:
    name: str
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))

    def sample(self, nodes: NodeSet) -> SampleSet:
        return SampleSet(nodes=nodes, ys=self(nodes.xs))


def runge(x):
    """The classic 1/(1 + 25 x^2) bump."""
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + 25.0 * x * x)


RUNGE = TargetFunction("runge", runge)


def polynomial_target(coeffs: Sequence[float], name: str | None = None) -> TargetFunction:
    """Target polynomial with the given monomial coefficients (low to high)."""
    c = np.asarray(coeffs, dtype=float)
    return TargetFunction(name or f"poly_deg{len(c) - 1}", lambda x: _poly.polyval(x, c))


TARGETS: dict[str, TargetFunction] = {
    "runge": RUNGE,
    "poly3": polynomial_target([0.0, -1.0, 0.0, 2.0], "poly3"),
    "poly5": polynomial_target([1.0, 0.0, -3.0, 0.0, 1.0, 0.5], "poly5"),
}


def get_target(name: str) -> TargetFunction:
    try:
        return TARGETS[name]
    except KeyError:
        raise KeyError(f"unknown target function {name!r}; known: {sorted(TARGETS)}")


@dataclass(frozen=True)
class Tolerances:
    node_match: float = 1e-9
    continuity: float = 1e-8
    linalg_rel: float = 1e-10

    def __post_init__(self):
        if min(self.node_match, self.continuity, self.linalg_rel) <= 0:
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOLERANCES = Tolerances()


class Approximant:
    """Base class for evaluable approximations."""

    def evaluate(self, xs) -> np.ndarray:  # pragma: no cover - abstract
        raise NotImplementedError

    def __call__(self, xs) -> np.ndarray:
        return self.evaluate(xs)

    @property
    def n_params(self) -> int:  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class BasisPoly(Approximant):
    """Polynomial in a fixed basis. Orthogonal bases live on [-1, 1] behind an
    affine pre-map of the interval; the monomial basis uses raw coordinates."""

    basis: Basis
    coeffs: np.ndarray
    interval: Interval = field(default_factory=Interval)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frozen_array(self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("coefficient vector must be non-empty")

    def evaluate(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        if self.basis is Basis.MONOMIAL:
            return _poly.polyval(xs, self.coeffs)
        t = self.interval.to_unit(xs)
        if self.basis is Basis.CHEBYSHEV_T:
            return _cheb.chebval(t, self.coeffs)
        return _leg.legval(t, self.coeffs)

    @property
    def n_params(self) -> int:
        return len(self.coeffs)


def barycentric_weights(xs: np.ndarray) -> np.ndarray:
    """Classic product-form barycentric weights, capacity-rescaled so the
    products stay in range for a few dozen nodes."""
    xs = np.asarray(xs, dtype=float)
    n = len(xs)
    if n < 2:
        raise ValueError("barycentric weights need at least two nodes")
    cap = (xs[-1] - xs[0]) / 4.0
    diffs = (xs[:, None] - xs[None, :]) / cap
    np.fill_diagonal(diffs, 1.0)
    return 1.0 / np.prod(diffs, axis=1)


@dataclass(frozen=True)
class Barycentric(Approximant):
    """Second-form barycentric Lagrange interpolant.

    Node hits are detected by exact floating equality, returning the stored
    ordinate, which sidesteps the 0/0 case without a fuzzy epsilon.
    """

    nodes: NodeSet
    ys: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "ys", _frozen_array(self.ys))
        object.__setattr__(self, "weights", _frozen_array(self.weights))
        if len(self.ys) != len(self.nodes) or len(self.weights) != len(self.nodes):
            raise ValueError("ys and weights must match node count")
        if np.any(self.weights == 0.0):
            raise ValueError("barycentric weights must be nonzero")

    @classmethod
    def fit(cls, samples: SampleSet) -> "Barycentric":
        if len(samples) < 2:
            raise ValueError("need at least two samples to interpolate")
        return cls(samples.nodes, samples.ys, barycentric_weights(samples.xs))

    @property
    def interval(self) -> Interval:
        return self.nodes.interval

    def evaluate(self, xs) -> np.ndarray:
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        diff = xs[:, None] - self.nodes.xs[None, :]
        hit_rows, hit_cols = np.nonzero(diff == 0.0)
        diff[hit_rows, hit_cols] = 1.0  # dummy, overwritten below
        terms = self.weights[None, :] / diff
        out = (terms @ self.ys) / terms.sum(axis=1)
        out[hit_rows] = self.ys[hit_cols]
        return out

    @property
    def n_params(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Piecewise(Approximant):
    """Piecewise approximant dispatching on subinterval: left-closed/right-open
    pieces, the last piece closed on both ends."""

    breakpoints: np.ndarray
    pieces: tuple[Approximant, ...]

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", _frozen_array(self.breakpoints))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if np.any(np.diff(self.breakpoints) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        if len(self.pieces) != len(self.breakpoints) - 1:
            raise ValueError("need exactly one piece per breakpoint gap")

    @property
    def interval(self) -> Interval:
        return Interval(float(self.breakpoints[0]), float(self.breakpoints[-1]))

    def evaluate(self, xs) -> np.ndarray:
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        lo, hi = self.breakpoints[0], self.breakpoints[-1]
        if np.any(xs < lo) or np.any(xs > hi):
            raise ValueError(f"evaluation point outside span [{lo}, {hi}]")
        idx = np.searchsorted(self.breakpoints, xs, side="right") - 1
        idx = np.clip(idx, 0, len(self.pieces) - 1)
        out = np.empty_like(xs)
        for i, piece in enumerate(self.pieces):
            mask = idx == i
            if np.any(mask):
                out[mask] = piece.evaluate(xs[mask])
        return out

    @property
    def n_params(self) -> int:
        return sum(p.n_params for p in self.pieces)


def evaluate(approx: Approximant, xs) -> np.ndarray:
    """Evaluate any approximant at the given abscissae."""
    return approx.evaluate(np.asarray(xs, dtype=float))
