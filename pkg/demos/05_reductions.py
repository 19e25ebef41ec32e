"""
Covering problems as graph-sequence problems
============================================

Two reductions turn classic covering problems into dense-common-subgraph
instances with known optima, which makes them sharp test generators:

* a MinRep instance becomes a sequence whose best min-over-frames density
  is exactly 1 / (minimum cover + 2);
* an independent-set instance becomes a sequence of stars whose best
  degree-sum equals the maximum independent set size.
"""

from fractions import Fraction

from dcs import (
    AM,
    MA,
    MinRepInstance,
    TemporalGraph,
    exact_best,
    exact_minrep,
    exact_mis,
    random_minrep,
    reduce_minrep_to_ma,
    reduce_mis_to_am,
)

# --- MinRep -> min-over-frames density --------------------------------------
mr = MinRepInstance(
    a_parts=(("a1", "a2"),),
    b_parts=(("b1",),),
    edges=(("a1", "b1"),),
)
g, names = reduce_minrep_to_ma(mr)
print("reduced instance:", g, "with fresh vertices",
      {i: names[i] for i in (g.n - 2, g.n - 1)})
cover = exact_minrep(mr)
opt = exact_best(g, MA)[1].value
print(f"minimum cover = {cover}; density optimum = {opt} = 1/(cover+2):",
      opt == Fraction(1, cover + 2))

for seed in range(5):
    mr = random_minrep(parts=2, part_size=2, edge_prob=0.4, seed=seed)
    g, _ = reduce_minrep_to_ma(mr)
    cover = exact_minrep(mr)
    assert exact_best(g, MA)[1].value == Fraction(1, cover + 2)
    print(f"seed {seed}: cover {cover}, identity holds on {g}")

# --- independent set -> degree sums -----------------------------------------
paw = TemporalGraph(4, [[(0, 1), (1, 2), (2, 0), (2, 3)]])
red = reduce_mis_to_am(paw)
print("\nindependent-set reduction frames:", red.frames)
print("max independent set:", exact_mis(paw),
      "== degree-sum optimum:", exact_best(red, AM)[1].value)
