"""Benchmark harness: named experiment dispatch, the paper-style figure
reproductions, and deterministic CSV/SVG emission."""

from __future__ import annotations

import csv
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import interpolants, metrics, nodes
from .core import (
    Approximant,
    Basis,
    Interval,
    RUNGE,
    SampleSet,
    TargetFunction,
)
from .interpolants import (
    BandStrategy,
    EfciConfig,
    PenaltyKind,
    TikhonovOperator,
    TisiConfig,
)
from .metrics import ErrorReport, error_report

SUPPORTED_FIGURES = (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13)
UNSUPPORTED_FIGURE_NOTE = {10: "not reproducible - undefined in source"}
SVD_THRESHOLDS = (1e-2, 1e-5, 1e-10, 1e-15)


class UsageError(ValueError):
    """Bad command-line or configuration input; maps to exit code 2."""


@dataclass(frozen=True)
class Curve:
    label: str
    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self):
        if len(self.xs) != len(self.ys):
            raise ValueError("curve xs/ys length mismatch")


@dataclass
class ExperimentConfig:
    method: str = "lagrange"
    figure_id: int | None = None
    interval: Interval = field(default_factory=Interval)
    n_samples: int = 11
    degree: int = 10
    method_params: dict = field(default_factory=dict)
    grid_size: int = 1001
    output_dir: str | None = None
    emit_svg: bool = False

    def __post_init__(self):
        if self.figure_id is not None and self.figure_id not in SUPPORTED_FIGURES:
            raise UsageError(_figure_error(self.figure_id))


@dataclass
class ReportBundle:
    config_echo: ExperimentConfig
    curves: list[Curve]
    reports: list[ErrorReport]
    node_markers: list[Curve] = field(default_factory=list)

    def __post_init__(self):
        labels = [c.label for c in self.curves]
        if len(set(labels)) != len(labels):
            raise ValueError("curve labels must be unique")


def _figure_error(fid) -> str:
    msg = f"unsupported figure id {fid}; supported: {', '.join(map(str, SUPPORTED_FIGURES))}"
    if fid in UNSUPPORTED_FIGURE_NOTE:
        msg += f" (figure {fid}: {UNSUPPORTED_FIGURE_NOTE[fid]})"
    return msg


# ---------------------------------------------------------------------------
# Method registry


@dataclass(frozen=True)
class MethodInfo:
    name: str
    params: dict  # key -> python type of the value
    build: Callable


def _coerce_params(info: MethodInfo, raw: dict) -> dict:
    out = {}
    for key, value in raw.items():
        if key not in info.params:
            raise UsageError(
                f"unknown parameter {key!r} for method {info.name!r}; "
                f"allowed: {sorted(info.params) or 'none'}"
            )
        typ = info.params[key]
        try:
            if typ is bool and isinstance(value, str):
                if value.lower() not in ("true", "false", "1", "0"):
                    raise ValueError(value)
                out[key] = value.lower() in ("true", "1")
            else:
                out[key] = typ(value)
        except (TypeError, ValueError):
            raise UsageError(f"parameter {key!r} for method {info.name!r} must be {typ.__name__}")
    return out


def _equispaced_samples(cfg: ExperimentConfig, f: TargetFunction) -> SampleSet:
    return f.sample(nodes.equispaced(cfg.n_samples, cfg.interval))


def _build_lagrange(cfg, f, p):
    return interpolants.lagrange_interpolate(_equispaced_samples(cfg, f))


def _build_chebyshev(cfg, f, p):
    return interpolants.chebyshev_interpolate(f, cfg.n_samples - 1, cfg.interval)


def _build_spline(cfg, f, p):
    return interpolants.cubic_spline(_equispaced_samples(cfg, f))


def _build_penalized(kind):
    def build(cfg, f, p):
        kwargs = {"alpha": p.get("alpha", 0.01)}
        if kind is PenaltyKind.ELASTIC_NET:
            kwargs["rho"] = p.get("rho", 0.5)
        if kind is PenaltyKind.NONE:
            kwargs = {}
        return interpolants.fit_regularized(
            _equispaced_samples(cfg, f), cfg.degree, penalty=kind, **kwargs
        )

    return build


def _build_tikhonov(cfg, f, p):
    return interpolants.tikhonov_fit(
        _equispaced_samples(cfg, f),
        cfg.degree,
        lam=p.get("lam", 0.01),
        operator=p.get("operator", "identity"),
    )


def _build_efci(cfg, f, p):
    efci_cfg = EfciConfig(
        degree=cfg.degree,
        m=p.get("m", 4),
        epsilon=p.get("epsilon", 0.1),
        search=p.get("search", False),
        constraint_weight=p.get("weight", 10.0),
    )
    approx, _, _ = interpolants.efci_fit(_equispaced_samples(cfg, f), f, efci_cfg)
    return approx


def _build_mock_chebyshev(cfg, f, p):
    return interpolants.mock_chebyshev_interpolate(
        _equispaced_samples(cfg, f), p.get("m", 10)
    )


def _build_constrained_mock(cfg, f, p):
    return interpolants.constrained_mock_chebyshev_lstsq(
        _equispaced_samples(cfg, f), p.get("m", 10), p.get("ls_degree")
    )


def _band_strategy(name: str) -> BandStrategy:
    try:
        return BandStrategy(name)
    except ValueError:
        raise UsageError(
            f"unknown band strategy {name!r}; allowed: {[s.value for s in BandStrategy]}"
        )


def _build_tisi(cfg, f, p):
    if p.get("improved", False):
        tisi_cfg = TisiConfig.improved(
            epsilon=p.get("epsilon", 0.2),
            nodes_per_interval=p.get("nodes_per_interval", 11),
        )
    else:
        tisi_cfg = TisiConfig(
            epsilon=p.get("epsilon", 0.2),
            left_strategy=_band_strategy(p.get("left", "lagrange_equispaced")),
            center_strategy=_band_strategy(p.get("center", "lagrange_equispaced")),
            right_strategy=_band_strategy(p.get("right", "lagrange_equispaced")),
            nodes_per_interval=p.get("nodes_per_interval", 11),
        )
    return interpolants.tisi_fit(f, cfg.interval, tisi_cfg)


def _svd_basis(name: str) -> Basis:
    if name == "monomial":
        return Basis.MONOMIAL
    if name == "legendre":
        return Basis.LEGENDRE
    raise UsageError(f"unknown basis {name!r}; allowed: ['monomial', 'legendre']")


def _build_svd(cfg, f, p):
    return interpolants.svd_truncated_fit(
        _equispaced_samples(cfg, f),
        cfg.degree,
        threshold=p.get("threshold", 1e-10),
        basis=_svd_basis(p.get("basis", "legendre")),
    )


METHODS: dict[str, MethodInfo] = {
    "lagrange": MethodInfo("lagrange", {}, _build_lagrange),
    "chebyshev": MethodInfo("chebyshev", {}, _build_chebyshev),
    "spline": MethodInfo("spline", {}, _build_spline),
    "unregularized": MethodInfo("unregularized", {}, _build_penalized(PenaltyKind.NONE)),
    "ridge": MethodInfo("ridge", {"alpha": float}, _build_penalized(PenaltyKind.RIDGE)),
    "lasso": MethodInfo("lasso", {"alpha": float}, _build_penalized(PenaltyKind.LASSO)),
    "elastic_net": MethodInfo(
        "elastic_net", {"alpha": float, "rho": float}, _build_penalized(PenaltyKind.ELASTIC_NET)
    ),
    "tikhonov": MethodInfo("tikhonov", {"lam": float, "operator": str}, _build_tikhonov),
    "efci": MethodInfo(
        "efci", {"m": int, "epsilon": float, "weight": float, "search": bool}, _build_efci
    ),
    "mock_chebyshev": MethodInfo("mock_chebyshev", {"m": int}, _build_mock_chebyshev),
    "constrained_mock_chebyshev": MethodInfo(
        "constrained_mock_chebyshev", {"m": int, "ls_degree": int}, _build_constrained_mock
    ),
    "tisi": MethodInfo(
        "tisi",
        {
            "epsilon": float,
            "left": str,
            "center": str,
            "right": str,
            "nodes_per_interval": int,
            "improved": bool,
        },
        _build_tisi,
    ),
    "svd": MethodInfo("svd", {"threshold": float, "basis": str}, _build_svd),
}


# ---------------------------------------------------------------------------
# Experiment and figure runners


def _grid(cfg: ExperimentConfig) -> np.ndarray:
    return np.linspace(cfg.interval.lo, cfg.interval.hi, cfg.grid_size)


def run_experiment(cfg: ExperimentConfig, f: TargetFunction = RUNGE) -> ReportBundle:
    """Dispatch to a registered method and package truth + fit curves."""
    info = METHODS.get(cfg.method)
    if info is None:
        raise UsageError(f"unknown method {cfg.method!r}; known: {sorted(METHODS)}")
    params = _coerce_params(info, cfg.method_params)
    approx = info.build(cfg, f, params)
    xs = _grid(cfg)
    bundle = ReportBundle(
        config_echo=cfg,
        curves=[
            Curve(f.name, xs, f(xs)),
            Curve(cfg.method, xs, approx.evaluate(xs)),
        ],
        reports=[
            error_report(approx, f, cfg.interval, cfg.grid_size, method=cfg.method)
        ],
    )
    try:
        samples = _equispaced_samples(cfg, f)
        bundle.node_markers.append(Curve("sample nodes", samples.xs, samples.ys))
    except ValueError:
        pass
    _maybe_write(bundle, cfg, name=cfg.method)
    return bundle


def _bundle(cfg, f, fits, markers=()) -> ReportBundle:
    """Assemble truth + labelled approximants into a bundle."""
    xs = _grid(cfg)
    curves = [Curve(f.name, xs, f(xs))]
    reports = []
    for label, approx in fits:
        curves.append(Curve(label, xs, approx.evaluate(xs)))
        reports.append(error_report(approx, f, cfg.interval, cfg.grid_size, method=label))
    return ReportBundle(
        config_echo=cfg,
        curves=curves,
        reports=reports,
        node_markers=[Curve(lbl, np.asarray(mx), np.asarray(my)) for lbl, mx, my in markers],
    )


def run_figure(
    figure_id: int,
    grid_size: int = 1001,
    n_samples: int | None = None,
    output_dir: str | None = None,
    emit_svg_file: bool = False,
) -> ReportBundle:
    """Reproduce one of the paper-style figures as curves plus error reports."""
    if figure_id not in SUPPORTED_FIGURES:
        raise UsageError(_figure_error(figure_id))
    f = RUNGE
    cfg = ExperimentConfig(
        method=f"figure{figure_id}",
        figure_id=figure_id,
        grid_size=grid_size,
        output_dir=output_dir,
        emit_svg=emit_svg_file,
    )
    interval = cfg.interval

    if figure_id == 1:
        fits = []
        for n in (5, 10, 15, 20):
            samples = f.sample(nodes.equispaced(n, interval))
            fits.append((f"equispaced n={n}", interpolants.lagrange_interpolate(samples)))
        bundle = _bundle(cfg, f, fits)

    elif figure_id == 2:
        cheb = interpolants.chebyshev_interpolate(f, 10, interval)
        uni = f.sample(nodes.equispaced(11, interval))
        spline = interpolants.cubic_spline(uni)
        markers = [
            ("equispaced nodes", uni.xs, uni.ys),
            ("chebyshev nodes", cheb.nodes.xs, cheb.ys),
        ]
        bundle = _bundle(cfg, f, [("chebyshev", cheb), ("spline", spline)], markers)

    elif figure_id == 3:
        samples = f.sample(nodes.equispaced(11, interval))
        deg = 10
        fits = [
            ("no regularization", interpolants.fit_regularized(samples, deg, PenaltyKind.NONE)),
            ("ridge", interpolants.fit_regularized(samples, deg, PenaltyKind.RIDGE, alpha=0.01)),
            ("lasso", interpolants.fit_regularized(samples, deg, PenaltyKind.LASSO, alpha=0.01)),
            (
                "elastic net",
                interpolants.fit_regularized(samples, deg, PenaltyKind.ELASTIC_NET, alpha=0.01, rho=0.5),
            ),
        ]
        bundle = _bundle(cfg, f, fits, [("sample nodes", samples.xs, samples.ys)])

    elif figure_id == 4:
        samples = f.sample(nodes.equispaced(11, interval))
        fit = interpolants.tikhonov_fit(samples, degree=12, lam=0.01)
        bundle = _bundle(cfg, f, [("tikhonov lambda=0.01", fit)], [("sample nodes", samples.xs, samples.ys)])

    elif figure_id == 5:
        samples = f.sample(nodes.equispaced(11, interval))
        efci_cfg = EfciConfig(degree=10, epsilon=0.1, search=True, constraint_weight=10.0)
        approx, positions, _ = interpolants.efci_fit(samples, f, efci_cfg)
        markers = [
            ("sample nodes", samples.xs, samples.ys),
            ("efc positions", positions, f(positions)),
        ]
        bundle = _bundle(cfg, f, [("efci", approx)], markers)

    elif figure_id == 6:
        samples = f.sample(nodes.equispaced(20, interval))
        ls = interpolants.fit_regularized(samples, 10, PenaltyKind.NONE)
        mock = interpolants.mock_chebyshev_interpolate(samples, 10)
        bundle = _bundle(
            cfg,
            f,
            [("least squares", ls), ("mock-chebyshev", mock)],
            [("grid points", samples.xs, samples.ys)],
        )

    elif figure_id in (7, 8):
        tisi_cfg = TisiConfig() if figure_id == 7 else TisiConfig.improved()
        label = "tisi" if figure_id == 7 else "tisi improved"
        bundle = _bundle(cfg, f, [(label, interpolants.tisi_fit(f, interval, tisi_cfg))])

    elif figure_id == 9:
        uni = f.sample(nodes.equispaced(21, interval))
        lob = f.sample(nodes.chebyshev_lobatto(20, interval))
        sel = nodes.every_other_subset(uni.nodes)
        sub = SampleSet(sel.node_set(), uni.ys[list(sel.indices)])
        fits = [
            ("equispaced", interpolants.lagrange_interpolate(uni)),
            ("chebyshev-lobatto", interpolants.lagrange_interpolate(lob)),
            ("every-other subset", interpolants.lagrange_interpolate(sub)),
        ]
        bundle = _bundle(cfg, f, fits)

    else:  # 11, 12, 13: truncated-SVD threshold sweeps
        if figure_id == 11:
            samples = f.sample(nodes.equispaced(11, interval))
            degree = 10
        elif figure_id == 12:
            n = n_samples or 21
            samples = f.sample(nodes.equispaced(n, interval))
            degree = len(samples) - 1
        else:
            samples = f.sample(nodes.chebyshev_roots(10, interval))
            degree = 10
        fits = [
            (
                f"svd threshold={t:g}",
                interpolants.svd_truncated_fit(samples, degree, t, Basis.LEGENDRE),
            )
            for t in SVD_THRESHOLDS
        ]
        bundle = _bundle(cfg, f, fits, [("sample nodes", samples.xs, samples.ys)])

    _maybe_write(bundle, cfg, name=f"figure{figure_id}")
    return bundle


# ---------------------------------------------------------------------------
# Output emission


def default_output_dir() -> str:
    return os.environ.get("RUNGE_LAB_OUT", "out")


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise OSError(f"failed writing {path}: {exc}") from exc


def _maybe_write(bundle: ReportBundle, cfg: ExperimentConfig, name: str) -> None:
    if cfg.output_dir is None:
        return
    out = Path(cfg.output_dir)
    emit_csv(bundle, out / f"{name}.csv")
    if cfg.emit_svg:
        emit_svg(bundle, out / f"{name}.svg")


def emit_csv(bundle: ReportBundle, path) -> None:
    """Curve table `x,<label>,...` with shortest round-trip decimals, plus a
    sibling `<path>.report.csv` carrying the error reports."""
    path = Path(path)
    curves = bundle.curves
    if curves:
        base_xs = curves[0].xs
        for c in curves[1:]:
            if len(c.xs) != len(base_xs) or not np.array_equal(c.xs, base_xs):
                raise ValueError("emit_csv requires all curves on a shared grid")
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x"] + [c.label for c in curves])
    if curves:
        for i in range(len(base_xs)):
            writer.writerow([repr(float(base_xs[i]))] + [repr(float(c.ys[i])) for c in curves])
    _atomic_write(path, buf.getvalue().encode("utf-8"))

    rbuf = io.StringIO()
    writer = csv.writer(rbuf, lineterminator="\n")
    writer.writerow(["method", "n_params", "max_abs", "rms", "argmax_x", "endpoint_max_abs"])
    for r in bundle.reports:
        writer.writerow(
            [r.method, r.n_params, repr(r.max_abs), repr(r.rms), repr(r.argmax_x), repr(r.endpoint_max_abs)]
        )
    _atomic_write(path.with_name(path.name + ".report.csv"), rbuf.getvalue().encode("utf-8"))


_PALETTE = ("#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")
_DASHES = ("none", "8 4", "2 3", "8 4 2 4", "4 4", "1 3", "10 2", "6 2 2 2")

_VIEW_W, _VIEW_H = 800, 500
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 60, 20, 20, 40


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def emit_svg(bundle: ReportBundle, path) -> None:
    """Standalone SVG 1.1, 800x500, axes auto-scaled with 5% padding, one
    polyline per curve, legend, circle markers for sample nodes. Byte output is
    deterministic for identical input."""
    if not bundle.curves:
        raise ValueError("emit_svg needs at least one curve")
    path = Path(path)
    all_x = np.concatenate([c.xs for c in bundle.curves] + [m.xs for m in bundle.node_markers])
    all_y = np.concatenate([c.ys for c in bundle.curves] + [m.ys for m in bundle.node_markers])
    x_lo, x_hi = float(all_x.min()), float(all_x.max())
    y_lo, y_hi = float(all_y.min()), float(all_y.max())
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    else:
        pad = 0.05 * (x_hi - x_lo)
        x_lo, x_hi = x_lo - pad, x_hi + pad
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    else:
        pad = 0.05 * (y_hi - y_lo)
        y_lo, y_hi = y_lo - pad, y_hi + pad

    plot_w = _VIEW_W - _MARGIN_L - _MARGIN_R
    plot_h = _VIEW_H - _MARGIN_T - _MARGIN_B

    def sx(v):
        return _MARGIN_L + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v):
        return _MARGIN_T + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_VIEW_W}" height="{_VIEW_H}" '
        f'viewBox="0 0 {_VIEW_W} {_VIEW_H}">\n',
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="white" stroke="#333333" stroke-width="1"/>\n',
        f'<text x="{_MARGIN_L}" y="{_VIEW_H - 10}" font-size="12" font-family="monospace">{_fmt(x_lo)}</text>\n',
        f'<text x="{_VIEW_W - _MARGIN_R - 40}" y="{_VIEW_H - 10}" font-size="12" '
        f'font-family="monospace">{_fmt(x_hi)}</text>\n',
        f'<text x="5" y="{_MARGIN_T + 12}" font-size="12" font-family="monospace">{_fmt(y_hi)}</text>\n',
        f'<text x="5" y="{_VIEW_H - _MARGIN_B}" font-size="12" font-family="monospace">{_fmt(y_lo)}</text>\n',
    ]
    for i, c in enumerate(bundle.curves):
        color = _PALETTE[i % len(_PALETTE)]
        dash = _DASHES[i % len(_DASHES)]
        pts = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in zip(c.xs, c.ys))
        dash_attr = "" if dash == "none" else f' stroke-dasharray="{dash}"'
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash_attr} points="{pts}"/>\n'
        )
    for j, mk in enumerate(bundle.node_markers):
        color = _PALETTE[(len(bundle.curves) + j) % len(_PALETTE)]
        for x, y in zip(mk.xs, mk.ys):
            parts.append(
                f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="3" fill="{color}" stroke="none"/>\n'
            )
    # legend, top-right inside the plot area
    lx = _VIEW_W - _MARGIN_R - 220
    ly = _MARGIN_T + 14
    entries = [(c.label, _PALETTE[i % len(_PALETTE)], _DASHES[i % len(_DASHES)], "line")
               for i, c in enumerate(bundle.curves)]
    entries += [
        (m.label, _PALETTE[(len(bundle.curves) + j) % len(_PALETTE)], "none", "dot")
        for j, m in enumerate(bundle.node_markers)
    ]
    for label, color, dash, kind in entries:
        if kind == "line":
            dash_attr = "" if dash == "none" else f' stroke-dasharray="{dash}"'
            parts.append(
                f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 30}" y2="{ly - 4}" stroke="{color}" '
                f'stroke-width="1.5"{dash_attr}/>\n'
            )
        else:
            parts.append(f'<circle cx="{lx + 15}" cy="{ly - 4}" r="3" fill="{color}"/>\n')
        label_esc = label.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        parts.append(
            f'<text x="{lx + 36}" y="{ly}" font-size="12" font-family="monospace">{label_esc}</text>\n'
        )
        ly += 16
    parts.append("</svg>\n")
    _atomic_write(path, "".join(parts).encode("utf-8"))


def read_curve_csv(path) -> list[Curve]:
    """Parse a curve CSV written by emit_csv back into curves."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    header = rows[0]
    cols = [[] for _ in header]
    for row in rows[1:]:
        for i, v in enumerate(row):
            cols[i].append(float(v))
    xs = np.asarray(cols[0])
    return [Curve(header[i], xs, np.asarray(cols[i])) for i in range(1, len(header))]


def sweep(method: str, grid, f: TargetFunction = RUNGE, grid_size: int = 1001) -> list[metrics.StudyEntry]:
    """Convergence study of a registered method over sample counts."""
    info = METHODS.get(method)
    if info is None:
        raise UsageError(f"unknown method {method!r}; known: {sorted(METHODS)}")

    def handle(func, n):
        cfg = ExperimentConfig(method=method, n_samples=n, degree=max(n - 1, 1), grid_size=grid_size)
        return info.build(cfg, func, {})

    return metrics.convergence_study(handle, f, list(grid), grid_size=grid_size, method_name=method)
