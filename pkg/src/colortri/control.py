"""Choosing the number of colors.

Two closed-form lower bounds on the sampling rate ``p`` (natural logs), and
an adaptive procedure that needs no prior knowledge of the triangle count:
start with many colors, halve the color count until the sample holds at
least ``tau`` triangles, then return the median of a few fresh estimates at
that color count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ._pool import ordered_map
from .errors import ContractError, NoTrianglesError
from .exact import count_triangles_exact
from .graph import Graph
from .rng import derive_seed
from .sampler import Estimate, estimate_once

# derive_seed path prefixes for the two phases of adaptive_estimate
_PROBE = 0
_FINAL = 1


class PBound(NamedTuple):
    p: float
    N: int


def colors_for(p: float) -> int:
    """Largest integer color count whose rate ``1/N`` is still at least ``p``."""
    return max(1, math.floor(1.0 / p))


def _bound(p: float) -> PBound:
    p = min(1.0, p)
    return PBound(p, colors_for(p))


def sufficient_p_second_moment(t: int, Delta: int, n: int) -> PBound:
    """``max(Delta*ln(n)/t, ln(n)/sqrt(t))``, clamped to 1."""
    if t == 0:
        raise NoTrianglesError("no triangles; sampling unnecessary")
    if t < 1 or Delta < 1 or n < 3:
        raise ContractError(f"need t>=1, Delta>=1, n>=3; got t={t}, Delta={Delta}, n={n}")
    ln = math.log(n)
    return _bound(max(Delta * ln / t, ln / math.sqrt(t)))


def sufficient_p_chernoff(t: int, t_max: int, n: int, epsilon: float, d: float) -> PBound:
    """``sqrt(4(d+3) t_max ln(n) / (epsilon**2 t))``, clamped to 1."""
    if t == 0:
        raise NoTrianglesError("no triangles; sampling unnecessary")
    if t < 1 or t_max < 1 or n < 2 or not 0 < epsilon < 1 or d <= 0:
        raise ContractError(
            f"need t>=1, t_max>=1, 0<epsilon<1, d>0; got t={t}, t_max={t_max}, epsilon={epsilon}, d={d}"
        )
    p2 = 4 * (d + 3) * t_max * math.log(n) / (epsilon**2 * t)
    return _bound(math.sqrt(p2))


def median_boost(values: Sequence):
    """Middle element of the sorted values; the lower middle for even length."""
    if len(values) == 0:
        raise ContractError("median of an empty list")
    s = sorted(values)
    return s[(len(s) - 1) // 2]


def default_n_max(m: int) -> int:
    """``2**ceil(log2(sqrt(m)))``, at least 1."""
    if m <= 1:
        return 1
    return 1 << math.ceil(math.log2(math.sqrt(m)))


@dataclass(frozen=True)
class EstimatorConfig:
    epsilon: float = 0.25
    d: float = 1.0
    repetitions: int = 5
    tau: int = 32
    N_max: int | None = None  # None: default_n_max(m)

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ContractError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if self.d <= 0:
            raise ContractError(f"d must be positive, got {self.d}")
        if self.repetitions < 1 or self.repetitions % 2 == 0:
            raise ContractError(f"repetitions must be odd and >= 1, got {self.repetitions}")
        if self.tau < 1:
            raise ContractError(f"tau must be >= 1, got {self.tau}")
        if self.N_max is not None and self.N_max < 1:
            raise ContractError(f"N_max must be >= 1, got {self.N_max}")


@dataclass(frozen=True)
class AdaptiveResult:
    N: int
    estimate: int
    trace: list[tuple[int, int]]
    final_estimates: list[Estimate] = field(default_factory=list)


def adaptive_estimate(graph: Graph, config: EstimatorConfig, seed: int, workers: int = 1) -> AdaptiveResult:
    """Halve the color count until a probe sees ``tau`` triangles, then median-boost.

    Probe ``k`` uses seed ``derive_seed(seed, 0, k)`` and final repetition
    ``r`` uses ``derive_seed(seed, 1, r)``. ``trace`` lists ``(N, raw_T)`` for
    every probe. Reaching ``N = 1`` means the probe counted exactly, and that
    count is returned as is.
    """
    N = config.N_max if config.N_max is not None else default_n_max(graph.m)
    trace: list[tuple[int, int]] = []
    k = 0
    while True:
        if N == 1:
            t = count_triangles_exact(graph).t
            trace.append((1, t))
            return AdaptiveResult(1, t, trace)
        est = estimate_once(graph, N, derive_seed(seed, _PROBE, k))
        trace.append((N, est.raw_T))
        k += 1
        if est.raw_T >= config.tau:
            break
        N = max(1, N // 2)
    seeds = [derive_seed(seed, _FINAL, r) for r in range(config.repetitions)]
    finals = ordered_map(lambda s: estimate_once(graph, N, s), seeds, workers)
    return AdaptiveResult(N, median_boost([e.scaled for e in finals]), trace, finals)
