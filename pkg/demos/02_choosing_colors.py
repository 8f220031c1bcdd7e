"""
How many colors?
================

Closed-form lower bounds on the sampling rate, then the adaptive procedure
that finds a color count without knowing the answer in advance.
"""

# %%
import colortri as ct

# Table values for the AS graph: n, t, Delta, t_max.
print(ct.sufficient_p_second_moment(6584, 344, 7716))
print(ct.sufficient_p_chernoff(6584, 2047, 7716, epsilon=0.1, d=1))

# %%
# On 10**5 vertex-disjoint triangles the second-moment rate is small.
g = ct.generate_disjoint_triangles(100_000)
s = ct.triangle_stats(g)
bound = ct.sufficient_p_second_moment(s.t, s.Delta, g.n)
print("p >=", round(bound.p, 5), "-> N =", bound.N)
runs = [ct.estimate_once(g, bound.N, seed).scaled for seed in range(9)]
print("nine runs:", runs, "median:", ct.median_boost(runs))

# %%
# Adaptive: halve N from 1024 until a probe sees 32 triangles, then take the
# median of five fresh runs.
res = ct.adaptive_estimate(g, ct.EstimatorConfig(N_max=1024, tau=32), seed=3)
for N, raw in res.trace:
    print(f"probe N={N:5d} raw_T={raw}")
print("chosen N:", res.N, "estimate:", res.estimate, "exact:", s.t)
