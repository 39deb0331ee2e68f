"""
Experiment harness: evolutions recorded to CSV, transient detection and the
entropy surface over ``(theta, Pi_L)``.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, TextIO, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import NoValidPhaseError
from .gaussian import (
    GaussianInitParams,
    build_gaussian_state,
    design_from_entropy,
    s0_from_pi_left,
    solve_delta,
)
from .observables import entanglement_entropy, reduced_density
from .walk import CoinParams, WalkerState, init_localized, position_spread, trajectory

__all__ = [
    "EVOLUTION_COLUMNS",
    "SWEEP_COLUMNS",
    "InitSpec",
    "RunConfig",
    "Evolution",
    "ConvergenceReport",
    "initial_state",
    "run_evolution",
    "detect_t0",
    "sweep_entropy_surface",
    "level_crossings",
    "write_csv",
    "read_csv",
]

EVOLUTION_COLUMNS = ("t", "p_left", "p_right", "re_q", "im_q", "entropy", "sigma", "norm")
SWEEP_COLUMNS = ("theta", "pi_left", "s0", "feasible")

PathLike = Union[str, Path]


def _fmt(value: float) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def write_csv(path: Optional[PathLike], columns: Sequence[str], rows: Iterable[Sequence[Any]],
              stream: Optional[TextIO] = None) -> None:
    """Write ``rows`` under a header; floats keep 17 significant digits."""
    def _dump(fh: TextIO) -> None:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])

    if path is None:
        if stream is None:
            raise ValueError("either a path or a stream is required")
        _dump(stream)
        return
    with open(path, "w", newline="") as fh:
        _dump(fh)


def read_csv(path: PathLike) -> dict[str, NDArray[np.float64]]:
    """Read a CSV written by :func:`write_csv` into float columns."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        data = [[float(v) for v in row] for row in reader if row]
    arr = np.array(data, dtype=np.float64).reshape(-1, len(header))
    return {name: arr[:, i] for i, name in enumerate(header)}


@dataclass
class InitSpec:
    """How to build the initial walker state.

    ``kind`` is ``"localized"``, ``"gaussian"`` or ``"designed"``.  For a
    Gaussian, give ``alpha`` or ``pi_left`` (= cos^2 alpha); a missing
    ``delta`` is solved from the stationarity condition.
    """

    kind: str = "localized"
    c_left: complex = 1.0
    c_right: complex = 0.0
    site: int = 0
    sigma0: float = 100.0
    k0: int = 0
    alpha: Optional[float] = None
    pi_left: Optional[float] = None
    delta: Optional[float] = None
    s0_target: Optional[float] = None
    branch: str = "left"

    @classmethod
    def from_dict(cls, data: dict) -> "InitSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown init fields: {sorted(unknown)}")
        data = dict(data)
        for key in ("c_left", "c_right"):
            if isinstance(data.get(key), (list, tuple)):
                re, im = data[key]
                data[key] = complex(re, im)
        return cls(**data)

    def gaussian_params(self, coin: CoinParams) -> GaussianInitParams:
        if self.kind == "designed":
            if self.s0_target is None:
                raise ValueError("designed init needs s0_target")
            return design_from_entropy(self.s0_target, coin, self.branch, self.sigma0, self.k0)
        if self.kind != "gaussian":
            raise ValueError(f"init kind {self.kind!r} has no Gaussian parameters")
        if self.alpha is not None:
            alpha = self.alpha
        elif self.pi_left is not None:
            alpha = math.acos(math.sqrt(self.pi_left))
        else:
            raise ValueError("gaussian init needs alpha or pi_left")
        delta = self.delta if self.delta is not None else solve_delta(alpha, coin)
        return GaussianInitParams(self.sigma0, self.k0, alpha, delta)


@dataclass
class RunConfig:
    theta: float
    init: InitSpec = field(default_factory=InitSpec)
    max_time: int = 1000
    record_stride: int = 1
    output: Optional[str] = None
    window: int = 50
    epsilon: float = 0.01

    def __post_init__(self) -> None:
        if isinstance(self.init, dict):
            self.init = InitSpec.from_dict(self.init)
        if self.max_time < 1:
            raise ValueError(f"max_time must be >= 1, got {self.max_time}")
        if self.record_stride < 1:
            raise ValueError(f"record_stride must be >= 1, got {self.record_stride}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.window < 2:
            raise ValueError(f"window must be >= 2, got {self.window}")

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path: PathLike) -> "RunConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("c_left", "c_right"):
            z = complex(d["init"][key])
            d["init"][key] = [z.real, z.imag]
        return d


def initial_state(spec: InitSpec, coin: CoinParams) -> WalkerState:
    if spec.kind == "localized":
        return init_localized((spec.c_left, spec.c_right), spec.site)
    if spec.kind in ("gaussian", "designed"):
        return build_gaussian_state(spec.gaussian_params(coin))
    raise ValueError(f"unknown init kind {spec.kind!r}")


@dataclass
class Evolution:
    """Recorded time series (one row per recorded step) and the final state."""

    table: NDArray[np.float64]
    final_state: WalkerState

    def column(self, name: str) -> NDArray[np.float64]:
        return self.table[:, EVOLUTION_COLUMNS.index(name)]


def _record(state: WalkerState) -> list[float]:
    rc = reduced_density(state)
    return [
        state.time,
        rc.p_left,
        rc.p_right,
        rc.q.real,
        rc.q.imag,
        entanglement_entropy(rc).entropy,
        position_spread(state),
        state.norm(),
    ]


def run_evolution(config: RunConfig) -> Evolution:
    """Evolve the configured initial state and record every ``record_stride`` steps.

    Rows are written to ``config.output`` when it is set.
    """
    coin = CoinParams(config.theta)
    state = initial_state(config.init, coin)
    if config.output is not None:
        # fail before the (possibly long) evolution if the path is unwritable
        open(config.output, "a").close()
    rows = []
    for state in trajectory(state, coin, config.max_time):
        if state.time % config.record_stride == 0:
            rows.append(_record(state))
    table = np.array(rows, dtype=np.float64).reshape(-1, len(EVOLUTION_COLUMNS))
    if config.output is not None:
        write_csv(config.output, EVOLUTION_COLUMNS, ([int(r[0]), *r[1:]] for r in rows))
    return Evolution(table, state)


@dataclass(frozen=True)
class ConvergenceReport:
    """Outcome of transient detection; ``t0`` is ``None`` if nothing settled."""

    t0: Optional[int]
    asymptotic_mean: float
    max_residual: float
    converged: bool = True

    def to_dict(self) -> dict:
        """JSON-ready dict; NaN becomes ``None``."""
        return {k: (None if isinstance(v, float) and math.isnan(v) else v)
                for k, v in asdict(self).items()}


def detect_t0(
    series: ArrayLike,
    epsilon: float = 0.01,
    window: int = 50,
    times: Optional[ArrayLike] = None,
) -> ConvergenceReport:
    """Onset of the asymptotic regime of a time series.

    ``t0`` is the earliest time (``>= 1``) from which ``window + 1``
    consecutive samples all stay within ``epsilon`` of the mean of the
    remaining series.  ``times`` defaults to ``1, 2, ...``.
    """
    x = np.asarray(series, dtype=np.float64)
    n = x.size
    if times is None:
        t = np.arange(1, n + 1)
    else:
        t = np.asarray(times)
        if t.shape != x.shape:
            raise ValueError("times and series must have the same length")
    if window < 1 or n <= window:
        raise ValueError(f"series of length {n} is too short for window {window}")

    tail_mean = np.cumsum(x[::-1])[::-1] / np.arange(n, 0, -1)
    spans = np.lib.stride_tricks.sliding_window_view(x, window + 1)
    lo, hi = spans.min(axis=1), spans.max(axis=1)
    m = tail_mean[: spans.shape[0]]
    ok = (hi - m < epsilon) & (m - lo < epsilon) & (t[: spans.shape[0]] >= 1)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return ConvergenceReport(None, math.nan, math.nan, converged=False)
    i = int(hits[0])
    mean = float(np.mean(x[i:]))
    return ConvergenceReport(
        t0=int(t[i]),
        asymptotic_mean=mean,
        max_residual=float(np.max(np.abs(x[i:] - mean))),
    )


def sweep_entropy_surface(
    theta_list: Iterable[float],
    pi_grid: Iterable[float],
    output: Optional[PathLike] = None,
) -> NDArray[np.float64]:
    """Asymptotic entanglement entropy on a ``(theta, Pi_L)`` grid.

    Returns rows ``(theta, pi_left, s0, feasible)``; points outside the band
    ``|2 Pi_L - 1| <= cos theta`` get ``s0 = nan`` and ``feasible = 0``.
    """
    pis = [float(p) for p in pi_grid]
    rows = []
    for theta in theta_list:
        coin = CoinParams(theta).require_interior()
        for p in pis:
            try:
                rows.append((coin.theta, p, s0_from_pi_left(p, coin), 1.0))
            except NoValidPhaseError:
                rows.append((coin.theta, p, math.nan, 0.0))
    table = np.array(rows, dtype=np.float64).reshape(-1, len(SWEEP_COLUMNS))
    if output is not None:
        write_csv(output, SWEEP_COLUMNS, ([*r[:3], int(r[3])] for r in table))
    return table


def level_crossings(
    pi_grid: ArrayLike, s0_values: ArrayLike, level: float
) -> NDArray[np.float64]:
    """``Pi_L`` values where a sampled ``S0`` curve crosses ``level``.

    Linear interpolation between neighbouring feasible samples; infeasible
    (nan) samples break the curve.
    """
    p = np.asarray(pi_grid, dtype=np.float64)
    s = np.asarray(s0_values, dtype=np.float64) - level
    roots = []
    for i in range(p.size - 1):
        s1, s2 = s[i], s[i + 1]
        if math.isnan(s1) or math.isnan(s2):
            continue
        if s1 == 0.0:
            roots.append(p[i])
        elif s1 * s2 < 0:
            roots.append(p[i] + (p[i + 1] - p[i]) * s1 / (s1 - s2))
    if s.size and not math.isnan(s[-1]) and s[-1] == 0.0:
        roots.append(p[-1])
    return np.array(roots)
