"""
Colorful triangle sampling
==========================

Paint vertices with N colors, keep the edges whose endpoints match, count
triangles in what is left and multiply by N**2.
"""

# %%
# A random graph and its exact count
import itertools
from fractions import Fraction

import numpy as np

import colortri as ct
from colortri.sampler import Coloring, estimate_with_coloring

g = ct.generate_gnp(400, 1, 10, seed=1)
exact = ct.count_triangles_exact(g)
print(g, "triangles:", exact.t, "work_ops:", exact.work_ops)

# %%
# One estimate per seed. The sample holds roughly m/N edges.
for seed in range(5):
    e = ct.estimate_once(g, 4, seed)
    print(f"seed={seed} kept={e.sampled_edges:5d} raw_T={e.raw_T:4d} scaled={e.scaled}")

# %%
# Many seeds: the average settles on the exact count.
scaled = [ct.estimate_once(g, 4, s).scaled for s in range(2000)]
print("mean of 2000 estimates:", np.mean(scaled), "exact:", exact.t)

# %%
# On a tiny graph every coloring can be listed, and the average is exact.
k4 = ct.generate_gnp(4, 1, 1, 0)
values = [estimate_with_coloring(k4, Coloring(np.array(c), 3)).scaled
          for c in itertools.product(range(3), repeat=4)]
print("K4, N=3, average over all 81 colorings:", Fraction(sum(values), len(values)))

# %%
# Two kept edges of a triangle force the third: a triangle with colors
# (0, 0, 1) keeps only one edge.
tri = ct.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
print(ct.monochromatic_subgraph(tri, Coloring(np.array([0, 0, 1]), 2)).edges.tolist())
