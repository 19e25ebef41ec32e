"""Shared instance builders and naive reference implementations.

The naive functions deliberately re-derive quantities with double loops
and plain subset enumeration so the fast library paths are checked against
an independent computation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from dcs import TemporalGraph, VertexSet


def random_temporal(rng: random.Random, n: int, t_count: int,
                    density: float | None = None) -> TemporalGraph:
    """Random instance; each frame gets its own Bernoulli(p) edges.

    With density=None, p is drawn uniformly per frame.
    """
    frames = []
    for _ in range(t_count):
        p = rng.random() if density is None else density
        frames.append(
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        )
    return TemporalGraph(n, frames)


def random_nonedgeless(rng: random.Random, n: int, t_count: int,
                       density: float | None = None) -> TemporalGraph:
    """As random_temporal, but every frame is patched to hold >= 1 edge."""
    frames = []
    for _ in range(t_count):
        p = rng.random() if density is None else density
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        if not edges:
            u = rng.randrange(n - 1)
            edges = [(u, rng.randrange(u + 1, n))]
        frames.append(edges)
    return TemporalGraph(n, frames)


def random_connected(rng: random.Random, n: int, t_count: int,
                     extra: float = 0.3, max_union: int | None = None) -> TemporalGraph:
    """Every frame connected, with the union edge count capped.

    Draws a connected edge pool of at most max_union edges, then builds
    each frame as a random spanning tree of the pool plus extra pool edges,
    so frames are connected and the union stays within the pool.
    """
    cap = max_union if max_union is not None else n * (n - 1) // 2
    order = list(range(n))
    rng.shuffle(order)
    pool = set()
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        pool.add((min(u, v), max(u, v)))
    others = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in pool
    ]
    rng.shuffle(others)
    for e in others:
        if len(pool) >= cap:
            break
        if rng.random() < extra:
            pool.add(e)
    pool_edges = sorted(pool)
    frames = []
    for _ in range(t_count):
        shuffled = list(pool_edges)
        rng.shuffle(shuffled)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        edges = set()
        for u, v in shuffled:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                edges.add((u, v))
        for e in pool_edges:
            if e not in edges and rng.random() < extra:
                edges.add(e)
        frames.append(sorted(edges))
    return TemporalGraph(n, frames)


def naive_stats(g: TemporalGraph, t: int, members) -> tuple[int, int]:
    """(edge count, min degree) of an induced frame subgraph, by double loop."""
    members = sorted(set(members))
    edges = set(g.frames[t])
    count = 0
    for u in members:
        for v in members:
            if u < v and (u, v) in edges:
                count += 1
    min_deg = min(
        sum(1 for w in members if w != v and (min(v, w), max(v, w)) in edges)
        for v in members
    )
    return count, min_deg


def naive_value(g: TemporalGraph, members, kind_name: str, k: int | None = None) -> Fraction:
    """Objective value straight from the defining formulas."""
    members = sorted(set(members))
    size = len(members)
    stats = [naive_stats(g, t, members) for t in range(g.T)]
    if kind_name == "mm":
        return Fraction(min(md for _, md in stats))
    if kind_name == "ma":
        return min(Fraction(ec, size) for ec, _ in stats)
    if kind_name == "am":
        return Fraction(sum(md for _, md in stats))
    if kind_name == "aa":
        return sum((Fraction(2 * ec, size) for ec, _ in stats), Fraction(0))
    densities = sorted((Fraction(ec, size) for ec, _ in stats), reverse=True)
    return densities[k - 1]


def naive_best(g: TemporalGraph, kind_name: str, k: int | None = None):
    """Exhaustive optimum with the library tie-break: size, then member order."""
    best = None
    for size in range(1, g.n + 1):
        for members in combinations(range(g.n), size):
            value = naive_value(g, members, kind_name, k)
            if best is None or value > best[0]:
                best = (value, VertexSet(members))
    return best[1], best[0]


def naive_core(g: TemporalGraph, thresholds, rng: random.Random) -> frozenset[int]:
    """Peel in a random victim order; used to confirm order independence."""
    alive = set(range(g.n))
    while True:
        violating = [
            v for v in alive
            if any(
                sum(1 for w in g.adjacency(t)[v] if w in alive) < thresholds[t]
                for t in range(g.T)
            )
        ]
        if not violating:
            return frozenset(alive)
        alive.remove(rng.choice(violating))
