"""
Cores and the degree-sum objective
==================================

A (k_1, ..., k_T)-core is the maximal vertex set inducing minimum degree
k_i in every frame, found by peeling violators.  Maximizing the sum of the
thresholds over nonempty cores solves the sum-of-minimum-degrees problem
exactly; restricting thresholds to a geometric grid trades a (1+eps)
factor for far fewer vectors.
"""

from fractions import Fraction

from dcs import TemporalGraph, core, exact_am, fpt_approx_am, threshold_grid

# frame 0 is a clique on four vertices, frame 1 a path
k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
path = [(0, 1), (1, 2), (2, 3)]
g = TemporalGraph(4, [k4, path])

print("core at thresholds (2, 1):", core(g, (2, 1)))
print("core at thresholds (3, 2):", core(g, (3, 2)), "(empty: path endpoints cascade)")

solution, value = exact_am(g)
print("exact degree-sum optimum:", value, "attained by", solution)

# the grid drops intermediate thresholds as eps grows
for eps in (Fraction(1, 10), Fraction(1, 2), Fraction(1), Fraction(10)):
    grid = threshold_grid(eps, g.n - 1)
    _, approx = fpt_approx_am(g, eps)
    print(f"eps={str(eps):>6}  grid={grid}  value={approx}"
          f"  (guarantee: >= {value}/(1+eps) = {Fraction(value) / (1 + eps)})")
