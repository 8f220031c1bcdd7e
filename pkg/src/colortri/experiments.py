"""Repeated-trial experiments and their reports."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field
from fractions import Fraction

from ._pool import ordered_map
from .control import EstimatorConfig, adaptive_estimate, median_boost
from .errors import ContractError
from .exact import count_triangles_exact
from .graph import Graph
from .rng import derive_seed
from .sampler import Estimate, estimate_once, independent_edge_estimate


class UsageError(ContractError):
    """Conflicting or missing experiment options."""


@dataclass
class ExperimentReport:
    graph_id: str
    method: str
    exact_t: int | None
    estimates: list = field(default_factory=list)
    raw_counts: list[int] = field(default_factory=list)
    epsilon: float = 0.1
    N: int | None = None
    p: Fraction | None = None
    exact_work_ops: int | None = None
    sampled_work_ops: list[int] = field(default_factory=list)
    exact_seconds: float | None = None
    sampled_seconds: float | None = None

    @property
    def trials(self) -> int:
        return len(self.estimates)

    @property
    def mean(self) -> float:
        return float(statistics.fmean(float(x) for x in self.estimates)) if self.estimates else math.nan

    @property
    def std(self) -> float:
        if len(self.estimates) < 2:
            return 0.0
        return statistics.stdev(float(x) for x in self.estimates)

    @property
    def median(self):
        return median_boost(self.estimates) if self.estimates else math.nan

    @property
    def mean_raw(self) -> float:
        return statistics.fmean(self.raw_counts) if self.raw_counts else math.nan

    @property
    def zero_fraction(self) -> float:
        return sum(1 for r in self.raw_counts if r == 0) / len(self.raw_counts) if self.raw_counts else math.nan

    def _rel(self, x) -> float | None:
        if self.exact_t is None or not self.estimates:
            return None
        if self.exact_t == 0:
            return 0.0 if float(x) == 0 else math.inf
        return abs(float(x) - self.exact_t) / self.exact_t

    @property
    def rel_err_mean(self) -> float | None:
        return self._rel(self.mean)

    @property
    def rel_err_median(self) -> float | None:
        return self._rel(self.median)

    @property
    def frac_within_eps(self) -> float | None:
        if self.exact_t is None or not self.estimates:
            return None
        ok = sum(1 for x in self.estimates if abs(x - self.exact_t) <= self.epsilon * self.exact_t)
        return ok / len(self.estimates)

    @property
    def work_ratio(self) -> float | None:
        if not self.exact_work_ops or not self.sampled_work_ops:
            return None
        return statistics.fmean(self.sampled_work_ops) / self.exact_work_ops

    def kv_lines(self, timing: bool = False) -> list[tuple[str, object]]:
        def fmt(x):
            if x is None:
                return "NA"
            if isinstance(x, float):
                return f"{x:.6g}"
            return x

        items: list[tuple[str, object]] = [
            ("graph", self.graph_id),
            ("method", self.method),
            ("trials", self.trials),
            ("N", fmt(self.N)),
            ("p", fmt(self.p)),
            ("exact_t", fmt(self.exact_t)),
        ]
        if self.estimates:
            items += [
                ("mean", fmt(self.mean)),
                ("std", fmt(self.std)),
                ("median", fmt(float(self.median))),
                ("mean_raw_T", fmt(self.mean_raw)),
                ("zero_raw_fraction", fmt(self.zero_fraction)),
                ("rel_err_mean", fmt(self.rel_err_mean)),
                ("rel_err_median", fmt(self.rel_err_median)),
                ("epsilon", fmt(self.epsilon)),
                ("frac_within_eps", fmt(self.frac_within_eps)),
            ]
        items.append(("exact_work_ops", fmt(self.exact_work_ops)))
        if self.sampled_work_ops:
            items.append(("sampled_work_ops_total", sum(self.sampled_work_ops)))
            items.append(("work_ratio", fmt(self.work_ratio)))
            if self.p is not None and self.method == "colorful":
                items.append(("predicted_work_ratio", fmt(float(self.p) ** 2)))
        if timing:
            items.append(("exact_seconds", fmt(self.exact_seconds)))
            items.append(("sampled_seconds", fmt(self.sampled_seconds)))
        return items

    def format(self, timing: bool = False) -> str:
        rows = self.kv_lines(timing)
        width = max(len(k) for k, _ in rows)
        return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


def _fill(report: ExperimentReport, estimates: list[Estimate]) -> None:
    report.estimates = [e.scaled for e in estimates]
    report.raw_counts = [e.raw_T for e in estimates]
    report.sampled_work_ops = [e.work_ops for e in estimates]


def _exact(graph: Graph):
    t0 = time.perf_counter()
    res = count_triangles_exact(graph)
    return res, time.perf_counter() - t0


def run_trials(graph: Graph, N: int, trials: int, seed: int, workers: int = 1) -> list[Estimate]:
    """``trials`` colorful estimates; trial ``i`` uses ``derive_seed(seed, i)``."""
    seeds = [derive_seed(seed, i) for i in range(trials)]
    return ordered_map(lambda s: estimate_once(graph, N, s), seeds, workers)


def run_report(
    graph: Graph,
    mode: str = "estimate",
    config: EstimatorConfig = EstimatorConfig(),
    seed: int = 0,
    *,
    N: int | None = None,
    trials: int = 1,
    compute_exact: bool = True,
    graph_id: str = "graph",
    workers: int = 1,
) -> ExperimentReport:
    """Run one experiment.

    ``mode`` is ``"exact"`` (exact count only), ``"estimate"`` (``trials``
    colorful runs at ``N`` colors) or ``"auto"`` (``trials`` adaptive runs).
    """
    if mode not in ("exact", "estimate", "auto"):
        raise UsageError(f"unknown mode {mode!r}")
    if mode == "exact" and not compute_exact:
        raise UsageError("exact mode requires computing the exact count")
    if mode == "exact" and N is not None:
        raise UsageError("--colors makes no sense in exact mode")
    if mode == "estimate" and N is None:
        raise UsageError("estimate mode needs a color count")
    if mode == "auto" and N is not None:
        raise UsageError("auto mode picks its own color count")
    if trials < 1:
        raise UsageError(f"trials must be >= 1, got {trials}")

    report = ExperimentReport(graph_id=graph_id, method=mode if mode != "estimate" else "colorful",
                              exact_t=None, epsilon=config.epsilon)
    if compute_exact:
        res, secs = _exact(graph)
        report.exact_t, report.exact_work_ops, report.exact_seconds = res.t, res.work_ops, secs
    if mode == "exact":
        return report

    t0 = time.perf_counter()
    if mode == "estimate":
        report.N, report.p = N, Fraction(1, N)
        _fill(report, run_trials(graph, N, trials, seed, workers))
    else:
        results = [adaptive_estimate(graph, config, derive_seed(seed, i), workers) for i in range(trials)]
        report.estimates = [r.estimate for r in results]
        report.raw_counts = [r.trace[-1][1] for r in results]
    report.sampled_seconds = time.perf_counter() - t0
    return report


def compare_samplers(
    graph: Graph,
    N: int,
    trials: int,
    seed: int,
    *,
    graph_id: str = "graph",
    epsilon: float = 0.1,
    workers: int = 1,
) -> tuple[ExperimentReport, ExperimentReport]:
    """Colorful sampling with ``N`` colors against independent edge sampling at ``p = 1/N``.

    Both keep each edge with probability ``1/N``. Colorful trial ``i`` uses
    ``derive_seed(seed, 0, i)``, independent trial ``i`` uses
    ``derive_seed(seed, 1, i)``.
    """
    if trials < 1:
        raise UsageError(f"trials must be >= 1, got {trials}")
    exact, secs = _exact(graph)
    reports = []
    for arm, method in enumerate(("colorful", "independent")):
        seeds = [derive_seed(seed, arm, i) for i in range(trials)]
        if method == "colorful":
            fn = lambda s: estimate_once(graph, N, s)  # noqa: E731
        else:
            fn = lambda s: independent_edge_estimate(graph, 1, N, s)  # noqa: E731
        t0 = time.perf_counter()
        ests = ordered_map(fn, seeds, workers)
        rep = ExperimentReport(graph_id=graph_id, method=method, exact_t=exact.t, epsilon=epsilon,
                               N=N if method == "colorful" else None, p=Fraction(1, N),
                               exact_work_ops=exact.work_ops, exact_seconds=secs)
        _fill(rep, ests)
        rep.sampled_seconds = time.perf_counter() - t0
        reports.append(rep)
    return reports[0], reports[1]
