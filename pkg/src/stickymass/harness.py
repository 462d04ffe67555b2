"""Monte Carlo MSE experiments for the modified Good-Turing estimator."""

from __future__ import annotations

import csv
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from stickymass.analytics.mse import exact_mse
from stickymass.channel import ChannelParams, simulate_markov
from stickymass.distributions import DiscreteDistribution, parse_dist_spec
from stickymass.errors import ResourceLimitError
from stickymass.estimators import alpha_from_changes, modified_good_turing_value
from stickymass.stats import missing_mass, phi1_interior, state_changes

log = logging.getLogger(__name__)

ALPHA_MODES = ("known", "estimated", "both")
CSV_FIELDS = (
    "alpha",
    "n",
    "trials",
    "mse_known",
    "se_known",
    "mse_estimated",
    "se_estimated",
    "mean_alpha_hat",
    "exact_mse",
)
FIGURE_NS = (100, 200, 400, 800, 1600, 3200, 6400)
FIGURE_ALPHAS = (0.5, 0.75, 0.95)
FIGURE_DISTS = {
    "fig1": "powerlaw:1.2n,0.1",
    "fig2": "nearly:1.2n,0.1,0.5",
}


@dataclass(frozen=True)
class ExperimentSpec:
    """Grid of ``(alpha, n)`` cells, each run for ``trials`` independent sequences.

    ``dist_spec`` follows :func:`stickymass.distributions.parse_dist_spec`;
    an alphabet size like ``1.2n`` is resolved separately for every ``n``.
    """

    dist_spec: str
    alphas: Tuple[float, ...]
    ns: Tuple[int, ...]
    trials: int
    seed: int = 0
    alpha_mode: str = "both"
    exact: bool = True

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        problems = []
        if self.trials < 1:
            problems.append(f"trials: must be >= 1, got {self.trials}")
        bad_n = [n for n in self.ns if n < 3]
        if bad_n:
            problems.append(f"ns: every n must be >= 3, got {bad_n}")
        bad_a = [a for a in self.alphas if not 0 <= a < 1]
        if bad_a:
            problems.append(f"alphas: every alpha must lie in [0, 1), got {bad_a}")
        if self.alpha_mode not in ALPHA_MODES:
            problems.append(f"alpha_mode: must be one of {ALPHA_MODES}, got {self.alpha_mode!r}")
        if not 0 <= self.seed < 2**64:
            problems.append(f"seed: must be an unsigned 64-bit integer, got {self.seed}")
        try:
            parse_dist_spec(self.dist_spec, n=max(self.ns, default=3))
        except ValueError as exc:
            problems.append(f"dist_spec: {exc}")
        if problems:
            raise ValueError("invalid experiment spec: " + "; ".join(problems))

    @property
    def wants_known(self) -> bool:
        return self.alpha_mode in ("known", "both")

    @property
    def wants_estimated(self) -> bool:
        return self.alpha_mode in ("estimated", "both")


@dataclass(frozen=True)
class MseRow:
    alpha: float
    n: int
    trials: int
    mse_known: Optional[float] = None
    se_known: Optional[float] = None
    mse_estimated: Optional[float] = None
    se_estimated: Optional[float] = None
    mean_alpha_hat: Optional[float] = None
    exact_mse: Optional[float] = None


@dataclass
class MseReport:
    rows: List[MseRow] = field(default_factory=list)

    def sorted(self) -> "MseReport":
        return MseReport(sorted(self.rows, key=lambda r: (r.alpha, r.n)))

    def cell(self, alpha: float, n: int) -> MseRow:
        for row in self.rows:
            if row.alpha == alpha and row.n == n:
                return row
        raise KeyError((alpha, n))


def trial_rng(seed: int, alpha_idx: int, n_idx: int, trial: int) -> np.random.Generator:
    """Independent stream per trial, fixed by its grid position alone."""
    return np.random.default_rng(np.random.SeedSequence([seed, alpha_idx, n_idx, trial]))


def _run_trials(dist, alpha, n, seed, ai, ni, start, stop, known, estimated):
    """Squared errors and alpha estimates for trials ``start..stop-1``."""
    params = ChannelParams(alpha)
    count = stop - start
    sq_known = np.full(count, np.nan)
    sq_est = np.full(count, np.nan)
    a_hat = np.full(count, np.nan)
    for i, t in enumerate(range(start, stop)):
        seq = simulate_markov(dist, params, n, trial_rng(seed, ai, ni, t))
        m0 = missing_mass(seq, dist)
        phi = phi1_interior(seq)
        if known:
            sq_known[i] = (modified_good_turing_value(phi, n, alpha) - m0) ** 2
        if estimated:
            # the same sequence feeds both estimates (paired comparison)
            ah = alpha_from_changes(state_changes(seq), n)
            a_hat[i] = ah
            sq_est[i] = (modified_good_turing_value(phi, n, ah) - m0) ** 2
    return sq_known, sq_est, a_hat


def _mean_se(x: np.ndarray) -> Tuple[float, float]:
    mean = float(np.mean(x))
    se = float(np.std(x, ddof=1) / np.sqrt(x.size)) if x.size > 1 else 0.0
    return mean, se


def _chunks(trials: int, workers: int):
    size = max(1, -(-trials // (4 * workers)))
    return [(lo, min(lo + size, trials)) for lo in range(0, trials, size)]


def resolve_threads(threads: Optional[int]) -> int:
    if threads is None or threads <= 0:
        return os.cpu_count() or 1
    return threads


def run_mse_experiment(spec: ExperimentSpec, threads: Optional[int] = 1) -> MseReport:
    """Run every ``(alpha, n)`` cell of ``spec``.

    Per-trial seeds depend only on ``(seed, alpha index, n index, trial)``
    and results are reduced in trial order, so the report is identical for
    any ``threads``.
    """
    workers = resolve_threads(threads)
    dists = {n: parse_dist_spec(spec.dist_spec, n=n) for n in spec.ns}
    jobs = []
    for ai, alpha in enumerate(spec.alphas):
        for ni, n in enumerate(spec.ns):
            for lo, hi in _chunks(spec.trials, workers):
                jobs.append(((ai, ni), (dists[n], alpha, n, spec.seed, ai, ni, lo, hi, spec.wants_known, spec.wants_estimated)))

    if workers == 1:
        results = [_run_trials(*args) for _, args in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_trials, *args) for _, args in jobs]
            results = [f.result() for f in futures]

    by_cell = {}
    for (key, _), res in zip(jobs, results):
        by_cell.setdefault(key, []).append(res)

    rows = []
    for ai, alpha in enumerate(spec.alphas):
        for ni, n in enumerate(spec.ns):
            parts = by_cell[(ai, ni)]
            sq_known = np.concatenate([p[0] for p in parts])
            sq_est = np.concatenate([p[1] for p in parts])
            a_hat = np.concatenate([p[2] for p in parts])
            values = {}
            if spec.wants_known:
                values["mse_known"], values["se_known"] = _mean_se(sq_known)
            if spec.wants_estimated:
                values["mse_estimated"], values["se_estimated"] = _mean_se(sq_est)
                values["mean_alpha_hat"] = float(np.mean(a_hat))
            if spec.exact:
                values["exact_mse"] = _exact_or_none(dists[n], alpha, n)
            rows.append(MseRow(alpha=alpha, n=n, trials=spec.trials, **values))
    return MseReport(rows).sorted()


def _exact_or_none(dist: DiscreteDistribution, alpha: float, n: int) -> Optional[float]:
    if n < 5:
        return None
    try:
        return exact_mse(dist, alpha, n)
    except ResourceLimitError as exc:
        log.info("skipping exact MSE for n=%d: %s", n, exc)
        return None


def figure_spec(figure: str, trials: int, seed: int = 0, exact: bool = True) -> ExperimentSpec:
    if figure not in FIGURE_DISTS:
        raise ValueError(f"unknown figure {figure!r}; choose from {sorted(FIGURE_DISTS)}")
    return ExperimentSpec(
        dist_spec=FIGURE_DISTS[figure],
        alphas=FIGURE_ALPHAS,
        ns=FIGURE_NS,
        trials=trials,
        seed=seed,
        alpha_mode="both",
        exact=exact,
    )


def figdata(figure: str, trials: int = 16000, seed: int = 0, threads: Optional[int] = 1, exact: bool = True) -> MseReport:
    """Run the full grid behind one of the two MSE-vs-n figures."""
    return run_mse_experiment(figure_spec(figure, trials, seed, exact), threads=threads)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_csv(report: MseReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in report.sorted().rows:
        writer.writerow([_fmt(v) for v in astuple(row)])
    return buf.getvalue()


def emit_csv(report: MseReport, path: Union[str, Path, io.TextIOBase]) -> None:
    """Write the report as CSV, one row per cell sorted by ``(alpha, n)``."""
    text = format_csv(report)
    if hasattr(path, "write"):
        path.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"could not write CSV to {path}: {exc}") from exc


def parse_csv(source: Union[str, Path]) -> MseReport:
    """Inverse of :func:`emit_csv`; accepts a path or the CSV text itself."""
    text = source
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        text = Path(source).read_text()
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {header}")
    rows = []
    for raw in reader:
        vals = {}
        for name, cell in zip(CSV_FIELDS, raw):
            if name in ("n", "trials"):
                vals[name] = int(cell)
            else:
                vals[name] = float(cell) if cell != "" else None
        rows.append(MseRow(**vals))
    return MseReport(rows)
