"""In-process simulation of the two-round map/shuffle/reduce triangle counter.

Round one: mappers see each edge with its endpoint colors and emit the
monochromatic ones keyed by color; the shuffle routes each color to its own
reducer (one reducer per color), which counts triangles locally. Round two:
the driver sums the reducer counts and scales by ``N**2``.

The vertex coloring is the output of an implicit earlier round and is passed
in, drawn exactly as :func:`colortri.sampler.estimate_once` draws it, so a
pipeline run and a direct run with the same seed agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import ContractError
from .exact import count_triangles_exact
from .graph import Graph
from .sampler import Coloring, Estimate, random_coloring

ROUNDS = 2


class KeyedEdge(NamedTuple):
    key: int
    edge: tuple[int, int]


@dataclass(frozen=True)
class ShuffleMetrics:
    emitted_total: int
    per_color: dict[int, int]
    max_reducer_load: int
    reducer_triangles: dict[int, int]
    reducer_work_ops: dict[int, int]
    rounds: int = ROUNDS

    def mean_reducer_load(self) -> float:
        return self.emitted_total / len(self.per_color) if self.per_color else 0.0

    def kv_lines(self) -> list[tuple[str, object]]:
        items: list[tuple[str, object]] = [
            ("emitted_total", self.emitted_total),
            ("max_reducer_load", self.max_reducer_load),
            ("mean_reducer_load", f"{self.mean_reducer_load():.6g}"),
            ("rounds", self.rounds),
        ]
        for c in sorted(self.per_color):
            items.append((f"load.{c}", self.per_color[c]))
        for c in sorted(self.reducer_triangles):
            items.append((f"triangles.{c}", self.reducer_triangles[c]))
        return items


def _mapper(edges: np.ndarray, colors: np.ndarray) -> list[KeyedEdge]:
    cu = colors[edges[:, 0]]
    keep = cu == colors[edges[:, 1]]
    return [KeyedEdge(int(c), (int(u), int(v))) for c, (u, v) in zip(cu[keep], edges[keep])]


def map_phase(graph: Graph, coloring: Coloring, mapper_count: int = 1) -> list[KeyedEdge]:
    """Emit every monochromatic edge once, keyed by its color.

    Edges are split into ``mapper_count`` contiguous ranges; mapper outputs
    are concatenated in range order, so the result does not depend on the
    mapper count.
    """
    if mapper_count < 1:
        raise ContractError(f"mapper_count must be >= 1, got {mapper_count}")
    if len(coloring) != graph.n:
        raise ContractError(f"coloring has {len(coloring)} entries, graph has {graph.n} vertices")
    out: list[KeyedEdge] = []
    for chunk in np.array_split(graph.edges, mapper_count):
        out.extend(_mapper(chunk, coloring.colors))
    return out


def shuffle(keyed: list[KeyedEdge]) -> dict[int, list[tuple[int, int]]]:
    """Group by color; keys ascending and each edge list sorted."""
    groups: dict[int, list[tuple[int, int]]] = {}
    for key, edge in keyed:
        groups.setdefault(key, []).append(edge)
    return {k: sorted(groups[k]) for k in sorted(groups)}


def _reduce(edges: list[tuple[int, int]]):
    if not edges:
        return count_triangles_exact(Graph(0, np.zeros((0, 2), dtype=np.int64)))
    return count_triangles_exact(Graph.from_labelled_edges(edges))


def reduce_phase(color: int, edges: list[tuple[int, int]]) -> int:
    """Exact triangle count of the subgraph formed by one color's edges."""
    return _reduce(edges).t


def run_pipeline(graph: Graph, N: int, seed: int, mapper_count: int = 1) -> tuple[Estimate, ShuffleMetrics]:
    coloring = random_coloring(graph.n, N, seed)
    keyed = map_phase(graph, coloring, mapper_count)
    groups = shuffle(keyed)
    loads = {c: 0 for c in range(N)}
    triangles = {c: 0 for c in range(N)}
    ops = {c: 0 for c in range(N)}
    for c, edges in groups.items():
        res = _reduce(edges)
        loads[c] = len(edges)
        triangles[c] = res.t
        ops[c] = res.work_ops
    # second round: the driver folds reducer counts and scales once
    raw = sum(triangles.values())
    metrics = ShuffleMetrics(
        emitted_total=len(keyed),
        per_color=loads,
        max_reducer_load=max(loads.values()),
        reducer_triangles=triangles,
        reducer_work_ops=ops,
    )
    estimate = Estimate(
        raw_T=raw,
        N=N,
        p=Fraction(1, N),
        scaled=raw * N * N,
        seed=seed,
        sampled_edges=len(keyed),
        work_ops=sum(ops.values()),
        method="pipeline",
    )
    return estimate, metrics
