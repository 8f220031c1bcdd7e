"""
Counting work on the sample
===========================

The exact counter reports ``work_ops``, the number of adjacency-list elements
its merges may touch. On a heavy-tailed graph the sample needs about 1/N**2
of the work.
"""

# %%
import numpy as np

import colortri as ct
from colortri.generators import generate_chung_lu

g = generate_chung_lu(36692, 183831, 2.1, seed=10)
exact = ct.count_triangles_exact(g)
for N in (2, 4, 8, 16):
    ops = np.mean([ct.estimate_once(g, N, s).work_ops for s in range(30)])
    print(f"N={N:2d} work ratio {ops / exact.work_ops:.5f}  1/N^2 = {1 / N**2:.5f}")
