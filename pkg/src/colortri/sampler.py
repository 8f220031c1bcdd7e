"""Colorful triangle sampling and the independent edge-sampling baseline.

Colorful sampling paints every vertex with one of ``N`` colors uniformly at
random, keeps the monochromatic edges and counts triangles among them. A
triangle survives with probability ``1/N**2`` and two surviving edges of a
triangle always force the third, so ``raw_T * N**2`` is an unbiased estimate
of the triangle count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ContractError
from .exact import count_triangles_exact
from .graph import Graph
from .rng import generator


@dataclass(frozen=True)
class Coloring:
    colors: np.ndarray
    N: int
    seed: int | None = None

    def __post_init__(self):
        self.colors.flags.writeable = False

    def __len__(self) -> int:
        return len(self.colors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.N == other.N and self.seed == other.seed and np.array_equal(self.colors, other.colors)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Estimate:
    """One estimator run.

    ``scaled`` is exact: an ``int`` for colorful sampling (``raw_T * N**2``)
    and a ``Fraction`` for independent edge sampling (``raw_T / p**3``).
    ``N`` is ``None`` for independent edge sampling.
    """

    raw_T: int
    N: int | None
    p: Fraction
    scaled: int | Fraction
    seed: int | None
    sampled_edges: int
    work_ops: int
    method: str = "colorful"


def random_coloring(n: int, N: int, seed: int) -> Coloring:
    if N < 1:
        raise ContractError(f"need at least one color, got N={N}")
    if n < 0:
        raise ContractError(f"negative vertex count {n}")
    colors = generator(seed).integers(0, N, size=n, dtype=np.int64)
    return Coloring(colors, int(N), int(seed))


def monochromatic_mask(graph: Graph, coloring: Coloring) -> np.ndarray:
    if len(coloring) != graph.n:
        raise ContractError(f"coloring has {len(coloring)} entries, graph has {graph.n} vertices")
    c = coloring.colors
    return c[graph.edges[:, 0]] == c[graph.edges[:, 1]]


def monochromatic_subgraph(graph: Graph, coloring: Coloring) -> Graph:
    """Same vertex set, keeping exactly the edges whose endpoints share a color."""
    mask = monochromatic_mask(graph, coloring)
    # A subset of canonical edges is still canonical.
    return Graph(graph.n, graph.edges[mask], graph.labels)


def estimate_with_coloring(graph: Graph, coloring: Coloring) -> Estimate:
    sample = monochromatic_subgraph(graph, coloring)
    raw, ops = count_triangles_exact(sample)
    N = coloring.N
    return Estimate(
        raw_T=raw,
        N=N,
        p=Fraction(1, N),
        scaled=raw * N * N,
        seed=coloring.seed,
        sampled_edges=sample.m,
        work_ops=ops,
    )


def estimate_once(graph: Graph, N: int, seed: int) -> Estimate:
    """Run colorful sampling once with ``N`` colors (``p = 1/N``)."""
    return estimate_with_coloring(graph, random_coloring(graph.n, N, seed))


def independent_edge_estimate(graph: Graph, p_num: int, p_den: int, seed: int) -> Estimate:
    """Keep each edge independently with probability ``p_num/p_den``; scale by ``1/p**3``."""
    p = Fraction(p_num, p_den)
    if not 0 < p <= 1:
        raise ContractError(f"keep probability {p} not in (0, 1]")
    draws = generator(seed).integers(0, p.denominator, size=graph.m, dtype=np.int64)
    sample = Graph(graph.n, graph.edges[draws < p.numerator], graph.labels)
    raw, ops = count_triangles_exact(sample)
    scaled = raw / p**3
    return Estimate(
        raw_T=raw,
        N=None,
        p=p,
        scaled=scaled,
        seed=seed,
        sampled_edges=sample.m,
        work_ops=ops,
        method="independent",
    )
