"""Exact triangle counting with the forward (rank-ordered) node iterator.

Every edge is oriented from the endpoint with lower ``(degree, id)`` rank to
the higher one, and for each oriented edge ``u -> v`` the out-lists of ``u``
and ``v`` are merged; each common out-neighbor ``w`` closes exactly one
triangle, found once, from its lowest-ranked vertex.

``work_ops`` is the machine-independent cost proxy: for every oriented edge
``u -> v`` it adds ``len(out(u)) + len(out(v))``, the number of list elements
the merge may touch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

import numba
import numpy as np

from .errors import OracleLimitError
from .graph import Graph

ORACLE_LIMIT = 500


@numba.njit(cache=True, nogil=True)
def _forward_count(n, optr, oidx):
    t = 0
    ops = 0
    for u in range(n):
        a0 = optr[u]
        a1 = optr[u + 1]
        for k in range(a0, a1):
            v = oidx[k]
            b0 = optr[v]
            b1 = optr[v + 1]
            ops += (a1 - a0) + (b1 - b0)
            i = a0
            j = b0
            while i < a1 and j < b1:
                x = oidx[i]
                y = oidx[j]
                if x == y:
                    t += 1
                    i += 1
                    j += 1
                elif x < y:
                    i += 1
                else:
                    j += 1
    return t, ops


@numba.njit(cache=True, nogil=True)
def _forward_fill(n, optr, oidx, oeid, t, tri, tri_edges):
    # tri rows are (u, v, w) in discovery order; tri_edges are the ids of
    # edges uv, uw, vw.
    r = 0
    for u in range(n):
        a0 = optr[u]
        a1 = optr[u + 1]
        for k in range(a0, a1):
            v = oidx[k]
            b0 = optr[v]
            b1 = optr[v + 1]
            i = a0
            j = b0
            while i < a1 and j < b1:
                x = oidx[i]
                y = oidx[j]
                if x == y:
                    tri[r, 0] = u
                    tri[r, 1] = v
                    tri[r, 2] = x
                    tri_edges[r, 0] = oeid[k]
                    tri_edges[r, 1] = oeid[i]
                    tri_edges[r, 2] = oeid[j]
                    r += 1
                    i += 1
                    j += 1
                elif x < y:
                    i += 1
                else:
                    j += 1
    return r


def _oriented(graph: Graph):
    """Out-CSR of the rank orientation: ``(indptr, targets, edge_ids)``."""
    n = graph.n
    e = graph.edges
    deg = graph.degrees
    u, v = e[:, 0], e[:, 1]
    # u < v always, so ties on degree resolve towards the lower id.
    forward = deg[u] <= deg[v]
    src = np.where(forward, u, v)
    dst = np.where(forward, v, u)
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    optr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=optr[1:])
    return optr, dst, order.astype(np.int64)


class ExactCount(NamedTuple):
    t: int
    work_ops: int


def count_triangles_exact(graph: Graph) -> ExactCount:
    """Count triangles exactly; returns ``(t, work_ops)``."""
    if graph.m == 0:
        return ExactCount(0, 0)
    optr, dst, _ = _oriented(graph)
    t, ops = _forward_count(graph.n, optr, dst)
    return ExactCount(int(t), int(ops))


def _triangle_arrays(graph: Graph):
    if graph.m == 0:
        empty = np.zeros((0, 3), dtype=np.int64)
        return empty, empty.copy()
    optr, dst, eid = _oriented(graph)
    t, _ = _forward_count(graph.n, optr, dst)
    tri = np.empty((t, 3), dtype=np.int64)
    tri_edges = np.empty((t, 3), dtype=np.int64)
    _forward_fill(graph.n, optr, dst, eid, t, tri, tri_edges)
    return tri, tri_edges


def triangle_array(graph: Graph) -> np.ndarray:
    """All triangles as a ``(t, 3)`` array of sorted rows in lexicographic order."""
    tri, _ = _triangle_arrays(graph)
    tri = np.sort(tri, axis=1)
    if len(tri):
        tri = tri[np.lexsort((tri[:, 2], tri[:, 1], tri[:, 0]))]
    return tri


def enumerate_triangles(graph: Graph) -> Iterator[tuple[int, int, int]]:
    """Yield each triangle once as ``(u, v, w)`` with ``u < v < w``, lexicographically."""
    for row in triangle_array(graph):
        yield (int(row[0]), int(row[1]), int(row[2]))


@dataclass(frozen=True)
class TriangleStats:
    t: int
    delta_per_edge: np.ndarray
    Delta: int
    t_per_vertex: np.ndarray
    t_max: int
    sum_delta_sq: int
    bound_3_Delta_t: int

    def row(self) -> dict[str, int]:
        return {
            "t": self.t,
            "Delta": self.Delta,
            "t_max": self.t_max,
            "sum_delta_sq": self.sum_delta_sq,
            "bound_3_Delta_t": self.bound_3_Delta_t,
        }


def triangle_stats(graph: Graph) -> TriangleStats:
    """Exact per-edge and per-vertex triangle statistics.

    ``delta_per_edge[i]`` belongs to ``graph.edges[i]``.
    """
    tri, tri_edges = _triangle_arrays(graph)
    delta = np.bincount(tri_edges.ravel(), minlength=graph.m).astype(np.int64)
    per_vertex = np.bincount(tri.ravel(), minlength=graph.n).astype(np.int64)
    t = len(tri)
    Delta = int(delta.max()) if graph.m else 0
    t_max = int(per_vertex.max()) if graph.n else 0
    # Python ints: sum of squares overflows int64 on nothing realistic, but be safe.
    sum_sq = sum(int(x) * int(x) for x in delta[delta > 0])
    return TriangleStats(
        t=t,
        delta_per_edge=delta,
        Delta=Delta,
        t_per_vertex=per_vertex,
        t_max=t_max,
        sum_delta_sq=sum_sq,
        bound_3_Delta_t=3 * Delta * t,
    )


def _dense(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n), dtype=bool)
    a[graph.edges[:, 0], graph.edges[:, 1]] = True
    a[graph.edges[:, 1], graph.edges[:, 0]] = True
    return a


def brute_force_count(graph: Graph, limit: int = ORACLE_LIMIT) -> int:
    """Count vertex triples ``a < b < c`` that are pairwise adjacent. Test oracle only.

    Works on a dense adjacency matrix, one row of triples at a time, so it
    shares nothing with the forward counter.
    """
    if graph.n > limit:
        raise OracleLimitError(f"brute force refuses n={graph.n} > {limit}")
    a = _dense(graph)
    count = 0
    for i in range(graph.n):
        rest = a[i, i + 1 :]
        sub = a[i + 1 :, i + 1 :][np.ix_(rest, rest)]
        count += int(np.triu(sub, 1).sum())
    return count


def brute_force_triples(graph: Graph, limit: int = ORACLE_LIMIT) -> list[tuple[int, int, int]]:
    if graph.n > limit:
        raise OracleLimitError(f"brute force refuses n={graph.n} > {limit}")
    adj = [set() for _ in range(graph.n)]
    for u, v in graph.edges.tolist():
        adj[u].add(v)
        adj[v].add(u)
    return [
        (a, b, c)
        for a, b, c in combinations(range(graph.n), 3)
        if b in adj[a] and c in adj[a] and c in adj[b]
    ]
