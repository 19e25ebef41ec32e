"""Brute-force oracles: golden examples, naive cross-checks, determinism."""

import random
from fractions import Fraction

import pytest

from dcs import (
    AA,
    AM,
    BudgetExceeded,
    EdgeSolution,
    InfeasibleFrame,
    KMA,
    MA,
    MM,
    MinRepInstance,
    OracleBudget,
    SetCoverInstance,
    TemporalGraph,
    Uncoverable,
    check_spanning,
    ekvc_to_setcover,
    exact_best,
    exact_mcss,
    exact_minrep,
    exact_mis,
    exact_setcover,
    gen_gap_instance,
    parse,
    reduce_setcover_to_mcss,
    score,
)
from helpers import naive_best, random_connected, random_temporal

TINY = parse("3 2\n0 0 1\n1 0 1\n1 1 2\n")


def test_exact_best_examples():
    s, sc = exact_best(gen_gap_instance(3), MA)
    assert s.members == (0, 1, 2) and sc.value == Fraction(1, 3)
    s, sc = exact_best(TINY, MA)
    assert s.members == (0, 1) and sc.value == Fraction(1, 2)
    s, sc = exact_best(TINY, AM)
    assert s.members == (0, 1) and sc.value == 2


def test_exact_best_matches_naive_enumeration():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 7)
        g = random_temporal(rng, n, rng.randint(1, 3))
        for kind, name, k in (
            (MM, "mm", None),
            (MA, "ma", None),
            (AM, "am", None),
            (AA, "aa", None),
            (KMA(1), "kma", 1),
        ):
            got_set, got = exact_best(g, kind)
            _, want = naive_best(g, name, k)
            assert got.value == want
            assert score(g, got_set, kind).value == want


def test_exact_best_tie_break_smallest_then_lexicographic():
    # two disjoint edges tie at MA = 1/2; {0,1} beats {2,3}
    g = TemporalGraph(4, [[(0, 1), (2, 3)]])
    s, sc = exact_best(g, MA)
    assert s.members == (0, 1) and sc.value == Fraction(1, 2)
    # all-isolated graph: everything scores 0; smallest then lexicographic
    g0 = TemporalGraph(3, [[]])
    s, sc = exact_best(g0, MA)
    assert s.members == (0,) and sc.value == 0


def test_exact_best_relabel_invariance():
    rng = random.Random(29)
    for _ in range(15):
        n = rng.randint(2, 8)
        g = random_temporal(rng, n, rng.randint(1, 3))
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = TemporalGraph(
            n, [[(perm[u], perm[v]) for u, v in fr] for fr in g.frames]
        )
        for kind in (MM, MA, AM, AA):
            assert exact_best(g, kind)[1].value == exact_best(relabeled, kind)[1].value


def test_kma_optimum_dominates_ma_optimum():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(2, 7)
        g = random_temporal(rng, n, rng.randint(2, 4))
        ma_opt = exact_best(g, MA)[1].value
        for k in range(1, g.T + 1):
            assert exact_best(g, KMA(k))[1].value >= ma_opt


def test_exact_best_budget():
    g = random_temporal(random.Random(1), 5, 2)
    with pytest.raises(BudgetExceeded):
        exact_best(g, MA, OracleBudget(max_vertices=4))


def test_exact_mcss_examples():
    tri = TemporalGraph(3, [[(0, 1), (0, 2), (1, 2)], [(0, 1), (1, 2)]])
    assert exact_mcss(tri).edges == ((0, 1), (1, 2))
    tree = TemporalGraph(4, [[(0, 1), (1, 2), (2, 3)]])
    assert exact_mcss(tree).edges == ((0, 1), (1, 2), (2, 3))
    g, _ = reduce_setcover_to_mcss(SetCoverInstance(1, [{0}]))
    assert len(exact_mcss(g)) == 3  # m + cover + 1 with m = 1, cover = 1


def test_exact_mcss_minimality_witness():
    rng = random.Random(37)
    for _ in range(10):
        g = random_connected(rng, rng.randint(3, 6), rng.randint(1, 3), max_union=12)
        best = exact_mcss(g)
        assert check_spanning(g, best)
        for drop in best.edges:
            reduced = EdgeSolution(e for e in best.edges if e != drop)
            assert not check_spanning(g, reduced)


def test_exact_mcss_errors():
    disconnected = TemporalGraph(3, [[(0, 1)]])
    with pytest.raises(InfeasibleFrame):
        exact_mcss(disconnected)
    big = random_connected(random.Random(3), 8, 2, extra=0.9)
    with pytest.raises(BudgetExceeded):
        exact_mcss(big, OracleBudget(max_union_edges=5))


def test_exact_minrep_examples():
    mr = MinRepInstance((("a1", "a2"),), (("b1",),), (("a1", "b1"),))
    assert exact_minrep(mr) == 2
    empty = MinRepInstance((("a1",),), (("b1",),), ())
    assert exact_minrep(empty) == 0
    disjoint = MinRepInstance(
        (("a1",), ("a2",)),
        (("b1",), ("b2",)),
        (("a1", "b1"), ("a2", "b2")),
    )
    assert exact_minrep(disjoint) == 4


def test_exact_minrep_budget():
    parts = tuple((f"a{i}",) for i in range(11))
    bparts = tuple((f"b{i}",) for i in range(11))
    mr = MinRepInstance(parts, bparts, (("a0", "b0"),))
    with pytest.raises(BudgetExceeded):
        exact_minrep(mr, OracleBudget(max_vertices=20))


def test_exact_mis_examples():
    path = TemporalGraph(3, [[(0, 1), (1, 2)]])
    assert exact_mis(path) == 2
    triangle = TemporalGraph(3, [[(0, 1), (0, 2), (1, 2)]])
    assert exact_mis(triangle) == 1
    empty = TemporalGraph(4, [[]])
    assert exact_mis(empty) == 4


def test_exact_mis_budget_and_frame_count():
    with pytest.raises(BudgetExceeded):
        exact_mis(TemporalGraph(6, [[]]), OracleBudget(max_vertices=5))
    with pytest.raises(ValueError):
        exact_mis(TemporalGraph(2, [[], []]))


def test_exact_setcover_examples():
    assert exact_setcover(SetCoverInstance(1, [{0}])) == 1
    # each element belongs to exactly one set: all m sets are forced
    forced = SetCoverInstance(3, [{0}, {1}, {2}])
    assert exact_setcover(forced) == 3
    triangle = ekvc_to_setcover(3, [(0, 1), (1, 2), (0, 2)])
    assert exact_setcover(triangle) == 2


def test_exact_setcover_uncoverable():
    with pytest.raises(Uncoverable):
        exact_setcover(SetCoverInstance(2, [{0}]))


def test_exact_mcss_first_feasible_in_lexicographic_order():
    cycle = TemporalGraph(3, [[(0, 1), (0, 2), (1, 2)]])
    # any two cycle edges span; (size, lexicographic) order picks the first
    assert exact_mcss(cycle).edges == ((0, 1), (0, 2))


def test_exact_mcss_pruning_preserves_plain_enumeration_order():
    from itertools import combinations

    from dcs.mcss import component_count

    def reference(g):
        union = g.union_edges
        for k in range(g.n - 1, len(union) + 1):
            for combo in combinations(union, k):
                chosen = set(combo)
                if all(
                    component_count(g.n, [e for e in fr if e in chosen]) == 1
                    for fr in g.frames
                ):
                    return tuple(sorted(combo))
        return None

    rng = random.Random(12345)
    for _ in range(40):
        n = rng.randint(2, 6)
        g = random_connected(rng, n, rng.randint(1, 3),
                             extra=rng.random() * 0.7, max_union=10)
        assert exact_mcss(g).edges == reference(g)
