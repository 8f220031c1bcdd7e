"""
Colorful vs independent edge sampling
=====================================

Both samplers keep each edge with probability 1/100. On 10,000 disjoint
triangles independent sampling almost never keeps a whole triangle, while
colorful sampling keeps about one per run.
"""

# %%
import colortri as ct

g = ct.generate_disjoint_triangles(10_000)
col, ind = ct.compare_samplers(g, 100, trials=2000, seed=0, graph_id="disjoint-10k")
print(col.format())
print(ind.format())
print("runs with no triangle left: colorful", col.zero_fraction, "independent", ind.zero_fraction)
