"""
A near-linear integrality gap for the density relaxation
========================================================

On the star-sequence family the LP relaxation admits a harmonic fractional
solution of value 1/(1 + H_{n-1}) while the best integral solution scores
exactly 1/n, so the ratio grows like n / log n.  Everything here is exact:
the fractional solution is verified constraint by constraint and the
integral side is brute-forced.
"""

from dcs import build_lp, check_feasible, export_lp, gap_report, harmonic_solution

# the harmonic assignment is tight on every frame
g, f = harmonic_solution(4)
feasible, value, violations = check_feasible(g, f)
print("n=4 harmonic solution: feasible =", feasible, " value =", value)
print("vertex masses:", {v: str(f.y[v]) for v in sorted(f.y)})

# certified LP value vs enumerated integral optimum, exact ratios
print(f"\n{'n':>3} {'lp_value':>10} {'integral':>9} {'ratio':>9} {'float':>7}")
for n in range(3, 11):
    r = gap_report(n)
    print(f"{n:>3} {str(r.lp_value):>10} {str(r.integral_opt):>9}"
          f" {str(r.ratio):>9} {float(r.ratio):>7.3f}")

# models export as CPLEX-LP text for any external solver
model = build_lp(harmonic_solution(3)[0])
print("\nexported model for n=3:")
print(export_lp(model))
