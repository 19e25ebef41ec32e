"""Brute-force exact solvers used as ground truth in tests.

Subset enumeration is the whole point here: these solvers try every
candidate (vertex subsets, edge subsets, cover subsets) and therefore stay
independent of the approximation algorithms they validate.  Vertex-subset
scoring is vectorized with numpy bit tricks so instances up to the budget
caps finish quickly, but the semantics are plain exhaustive search.

Tie-breaking is fully deterministic: among optimal vertex sets, the
smallest, then lexicographically smallest member list wins; the edge-subset
search returns the first feasible set in (size, lexicographic) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import BudgetExceeded, InfeasibleFrame, KOrderOutOfRange, Uncoverable
from .generators import MinRepInstance, SetCoverInstance
from .mcss import EdgeSolution, component_count
from .objectives import ObjectiveKind, Score, score
from .temporal import TemporalGraph, VertexSet

_CHUNK = 1 << 16


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps on enumeration size; exceeding one raises, never truncates."""

    max_vertices: int = 20
    max_union_edges: int = 22

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_union_edges < 1:
            raise ValueError("budget caps must be positive")


def _chunk_tables(adj_mats, n, lo, hi, need_mindeg, need_edges):
    """Per-frame induced stats for all subset masks in [lo, hi).

    Returns (sizes, mindegs, edges): sizes per mask, then per frame the
    minimum induced degree and the induced edge count.  Uses a 0/1 matmul,
    exact in float64 at these sizes.
    """
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1).astype(
        np.float64
    )
    sizes = bits.sum(axis=1).astype(np.int64)
    mindegs, edges = [], []
    for adj in adj_mats:
        deg = bits @ adj
        if need_edges:
            edges.append(((bits * deg).sum(axis=1) / 2).astype(np.int64))
        if need_mindeg:
            masked = np.where(bits > 0, deg, np.inf).min(axis=1)
            mindegs.append(np.where(np.isfinite(masked), masked, 0).astype(np.int64))
    return sizes, mindegs, edges


def _members(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def exact_best(
    g: TemporalGraph, kind: ObjectiveKind, budget: OracleBudget | None = None
) -> tuple[VertexSet, Score]:
    """Best nonempty vertex set under `kind`, by enumerating all 2^n - 1.

    Ties go to the smaller set, then the lexicographically smallest member
    list, so outputs are stable golden values.
    """
    budget = budget or OracleBudget()
    n = g.n
    if n > budget.max_vertices:
        raise BudgetExceeded(f"n = {n} exceeds subset budget {budget.max_vertices}")
    if kind.name == "kma" and kind.k > g.T:
        raise KOrderOutOfRange(f"KMA order {kind.k} exceeds frame count {g.T}")

    ratio = kind.name in ("ma", "aa", "kma")
    need_mindeg = kind.name in ("mm", "am")
    adj_mats = []
    for t in range(g.T):
        mat = np.zeros((n, n), dtype=np.float64)
        for u, v in g.frames[t]:
            mat[u, v] = mat[v, u] = 1.0
        adj_mats.append(mat)

    full = 1 << n
    nums = np.empty(full, dtype=np.int64)
    sizes = np.empty(full, dtype=np.int64)
    for lo in range(0, full, _CHUNK):
        hi = min(lo + _CHUNK, full)
        sz, mindegs, edges = _chunk_tables(
            adj_mats, n, lo, hi, need_mindeg, not need_mindeg
        )
        if kind.name == "mm":
            num = np.min(np.stack(mindegs), axis=0)
        elif kind.name == "am":
            num = np.sum(np.stack(mindegs), axis=0)
        elif kind.name == "ma":
            num = np.min(np.stack(edges), axis=0)
        elif kind.name == "aa":
            num = 2 * np.sum(np.stack(edges), axis=0)
        else:  # kma: k-th largest per-frame edge count (shared denominator |S|)
            stack = np.stack(edges)
            num = np.partition(stack, g.T - kind.k, axis=0)[g.T - kind.k]
        nums[lo:hi] = num
        sizes[lo:hi] = sz

    best_val = Fraction(-1)
    per_size_max: dict[int, int] = {}
    for s0 in range(1, n + 1):
        sel = sizes == s0
        if not sel.any():
            continue
        x = int(nums[sel].max())
        per_size_max[s0] = x
        val = Fraction(x, s0) if ratio else Fraction(x)
        if val > best_val:
            best_val = val
    s_star = min(
        s0
        for s0, x in per_size_max.items()
        if (Fraction(x, s0) if ratio else Fraction(x)) == best_val
    )
    target = per_size_max[s_star]
    candidates = np.nonzero((sizes == s_star) & (nums == target))[0]
    best_mask = min((int(m) for m in candidates), key=lambda m: _members(m, n))
    solution = VertexSet(_members(best_mask, n))
    return solution, score(g, solution, kind)


def exact_mcss(g: TemporalGraph, budget: OracleBudget | None = None) -> EdgeSolution:
    """Minimum edge set spanning every frame, by increasing-size enumeration.

    Candidate subsets are visited in (size, lexicographic) order so the
    first feasible hit is a deterministic optimum.  Branches are pruned
    only when no feasible completion can exist (an edge merging nothing is
    redundant in any minimum solution; a frame needing more merges than the
    remaining suffix provides is a dead end).
    """
    budget = budget or OracleBudget()
    union = g.union_edges
    m = len(union)
    if m > budget.max_union_edges:
        raise BudgetExceeded(
            f"|E| = {m} exceeds edge-subset budget {budget.max_union_edges}"
        )
    n, T = g.n, g.T
    for t, frame_edges in enumerate(g.frames):
        if component_count(n, frame_edges) != 1:
            raise InfeasibleFrame(f"frame {t} is disconnected")
    if n == 1:
        return EdgeSolution(())

    frame_sets = [set(fr) for fr in g.frames]
    edge_frames = [
        tuple(t for t in range(T) if union[i] in frame_sets[t]) for i in range(m)
    ]
    # avail[t][i]: edges at index >= i usable by frame t; max_gain[i]: best
    # per-pick merge count in the suffix from i.
    avail = [[0] * (m + 1) for _ in range(T)]
    max_gain = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        for t in range(T):
            avail[t][i] = avail[t][i + 1] + (t in edge_frames[i])
        max_gain[i] = max(max_gain[i + 1], len(edge_frames[i]))

    def search(k: int) -> list[int] | None:
        comps = [list(range(n)) for _ in range(T)]
        counts = [n] * T
        return _mcss_dfs(0, k, comps, counts, n * T - T, [])

    def _mcss_dfs(start, remaining, comps, counts, rho, chosen):
        if rho == 0:
            return chosen
        if remaining == 0 or m - start < remaining:
            return None
        if rho > remaining * max_gain[start]:
            return None
        for t in range(T):
            if counts[t] - 1 > avail[t][start]:
                return None
        for i in range(start, m - remaining + 1):
            u, v = union[i]
            merge_frames = [t for t in edge_frames[i] if comps[t][u] != comps[t][v]]
            if not merge_frames:
                continue
            new_comps = list(comps)
            new_counts = list(counts)
            for t in merge_frames:
                keep, drop = comps[t][u], comps[t][v]
                new_comps[t] = [keep if c == drop else c for c in comps[t]]
                new_counts[t] -= 1
            res = _mcss_dfs(
                i + 1,
                remaining - 1,
                new_comps,
                new_counts,
                rho - len(merge_frames),
                chosen + [i],
            )
            if res is not None:
                return res
        return None

    for k in range(n - 1, m + 1):
        found = search(k)
        if found is not None:
            return EdgeSolution(union[i] for i in found)
    raise AssertionError("unreachable: the full union spans connected frames")


def exact_minrep(mr: MinRepInstance, budget: OracleBudget | None = None) -> int:
    """Minimum |A'| + |B'| covering every superedge, by subset enumeration."""
    budget = budget or OracleBudget()
    labels = list(mr.a_vertices) + list(mr.b_vertices)
    nv = len(labels)
    if nv > budget.max_vertices:
        raise BudgetExceeded(f"{nv} vertices exceed budget {budget.max_vertices}")
    bit = {lab: 1 << i for i, lab in enumerate(labels)}
    pair_masks = []
    for i, j in mr.superedges():
        pairs = [bit[a] | bit[b] for a, b in mr.superedge_edges(i, j)]
        if not pairs:
            raise Uncoverable(f"superedge ({i}, {j}) has no edges")
        pair_masks.append(pairs)
    if not pair_masks:
        return 0
    for size in range(0, nv + 1):
        for combo in combinations(range(nv), size):
            chosen = 0
            for i in combo:
                chosen |= 1 << i
            if all(any(p & chosen == p for p in pairs) for pairs in pair_masks):
                return size
    raise Uncoverable("no subset covers all superedges")


def exact_mis(graph: TemporalGraph, budget: OracleBudget | None = None) -> int:
    """Maximum independent set size of a single-frame graph."""
    budget = budget or OracleBudget()
    if graph.T != 1:
        raise ValueError("input must be a single-frame graph")
    n = graph.n
    if n > budget.max_vertices:
        raise BudgetExceeded(f"n = {n} exceeds budget {budget.max_vertices}")
    nbr = [0] * n
    for u, v in graph.frames[0]:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    memo: dict[int, int] = {0: 0}

    def mis(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v = (mask & -mask).bit_length() - 1
        without = mis(mask & ~(1 << v))
        with_v = 1 + mis(mask & ~(nbr[v] | (1 << v)))
        memo[mask] = best = max(without, with_v)
        return best

    return mis((1 << n) - 1)


def exact_setcover(sc: SetCoverInstance, budget: OracleBudget | None = None) -> int:
    """Minimum number of sets covering the universe, by increasing-size search."""
    budget = budget or OracleBudget()
    m = len(sc.sets)
    if m > budget.max_vertices:
        raise BudgetExceeded(f"m = {m} sets exceed budget {budget.max_vertices}")
    universe = (1 << sc.n_elems) - 1
    masks = []
    for s in sc.sets:
        mask = 0
        for x in s:
            mask |= 1 << x
        masks.append(mask)
    reachable = 0
    for mask in masks:
        reachable |= mask
    if reachable != universe:
        raise Uncoverable("some element belongs to no set")
    for size in range(0, m + 1):
        for combo in combinations(range(m), size):
            got = 0
            for j in combo:
                got |= masks[j]
            if got == universe:
                return size
    raise AssertionError("unreachable: all sets cover the universe")
