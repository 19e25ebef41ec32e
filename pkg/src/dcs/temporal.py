"""Graph sequences on a shared vertex set, and the .dcs text format.

A temporal graph is a sequence of T simple undirected graphs (frames)
over the same vertices 0..n-1.  The on-disk format is plain text:

    line 1:             "<n> <T>"
    every other line:   "<t> <u> <v>"   one edge of frame t, 0-based
    lines starting with '#' are comments; blank lines are ignored

Parsing is whitespace-tolerant; serialization is canonical (edges sorted
by (t, u, v) with u < v, single spaces, trailing newline) so equal graphs
produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    EdgeOutOfRange,
    FrameIndexOutOfRange,
    MalformedEdgeLine,
    MalformedHeader,
    SelfLoop,
)

Edge = tuple[int, int]


class TemporalGraph:
    """Immutable sequence of frames over vertices 0..n-1.

    Frames are stored as sorted tuples of normalized edges (u < v), with a
    per-frame adjacency index built at construction.  The union edge set
    is computed lazily.  Instances never mutate after ``__init__``, so all
    reads are safe under concurrent use.
    """

    __slots__ = ("n", "frames", "_adj", "_union")

    def __init__(self, n: int, frames: Iterable[Iterable[Edge]]):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        normalized: list[tuple[Edge, ...]] = []
        for t, frame in enumerate(frames):
            seen: set[Edge] = set()
            for u, v in frame:
                if u == v:
                    raise SelfLoop(f"self-loop at vertex {u} in frame {t}", line=0)
                if not (0 <= u < n and 0 <= v < n):
                    raise EdgeOutOfRange(
                        f"edge ({u}, {v}) outside vertex range [0, {n}) in frame {t}",
                        line=0,
                    )
                e = (u, v) if u < v else (v, u)
                if e in seen:
                    raise DuplicateEdge(f"duplicate edge {e} in frame {t}", line=0)
                seen.add(e)
            normalized.append(tuple(sorted(seen)))
        if not normalized:
            raise ValueError("at least one frame is required")
        self.n = n
        self.frames = tuple(normalized)
        adj: list[tuple[frozenset[int], ...]] = []
        for frame_edges in self.frames:
            nbrs: list[set[int]] = [set() for _ in range(n)]
            for u, v in frame_edges:
                nbrs[u].add(v)
                nbrs[v].add(u)
            adj.append(tuple(frozenset(s) for s in nbrs))
        self._adj = tuple(adj)
        self._union: tuple[Edge, ...] | None = None

    @property
    def T(self) -> int:
        return len(self.frames)

    @property
    def union_edges(self) -> tuple[Edge, ...]:
        """Sorted union of all frame edge sets (computed once, then cached)."""
        if self._union is None:
            merged: set[Edge] = set()
            for frame_edges in self.frames:
                merged.update(frame_edges)
            self._union = tuple(sorted(merged))
        return self._union

    def adjacency(self, t: int) -> tuple[frozenset[int], ...]:
        """Neighbor sets of frame t, indexed by vertex."""
        self._check_frame(t)
        return self._adj[t]

    def degree(self, t: int, v: int) -> int:
        return len(self.adjacency(t)[v])

    def max_degree(self, t: int) -> int:
        return max((len(s) for s in self.adjacency(t)), default=0)

    def _check_frame(self, t: int) -> None:
        if not (0 <= t < self.T):
            raise FrameIndexOutOfRange(f"frame {t} not in [0, {self.T})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return self.n == other.n and self.frames == other.frames

    def __hash__(self) -> int:
        return hash((self.n, self.frames))

    def __repr__(self) -> str:
        return f"TemporalGraph(n={self.n}, T={self.T})"


class VertexSet:
    """Canonical subset of a vertex range: sorted, deduplicated members."""

    __slots__ = ("members",)

    def __init__(self, members: Iterable[int]):
        ms = tuple(sorted(set(members)))
        if ms and ms[0] < 0:
            raise ValueError(f"negative vertex {ms[0]}")
        self.members = ms

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"VertexSet({list(self.members)})"


@dataclass(frozen=True)
class FrameStats:
    """Edge count and minimum degree of one induced frame subgraph."""

    edge_count: int
    min_degree: int


def as_vertex_set(s: VertexSet | Iterable[int]) -> VertexSet:
    return s if isinstance(s, VertexSet) else VertexSet(s)


def check_members(g: TemporalGraph, s: VertexSet) -> None:
    if s.members and s.members[-1] >= g.n:
        raise ValueError(
            f"vertex {s.members[-1]} outside graph range [0, {g.n})"
        )


def induced_stats(g: TemporalGraph, t: int, s: VertexSet | Iterable[int]) -> FrameStats:
    """Exact edge count and minimum induced degree of frame t restricted to s."""
    s = as_vertex_set(s)
    g._check_frame(t)
    check_members(g, s)
    if not s.members:
        raise ValueError("vertex set must be nonempty")
    degs = induced_degrees(g, t, s.members)
    return FrameStats(edge_count=sum(degs) // 2, min_degree=min(degs))


def induced_degrees(g: TemporalGraph, t: int, members: tuple[int, ...]) -> list[int]:
    """Degrees of each member inside the induced subgraph of frame t."""
    adj = g.adjacency(t)
    inside = set(members)
    return [len(adj[v] & inside) for v in members]


def parse(text: str | bytes) -> TemporalGraph:
    """Parse a .dcs text stream into a validated TemporalGraph.

    Tolerates extra whitespace, blank lines, and '#' comments.  Raises a
    ParseError subclass naming the offending 1-based line on bad input.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header: tuple[int, int] | None = None
    frames: list[set[Edge]] = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise MalformedHeader(
                    f"expected '<n> <T>', got {raw!r}", line=lineno
                )
            try:
                n, t_count = int(fields[0]), int(fields[1])
            except ValueError:
                raise MalformedHeader(
                    f"non-integer header fields in {raw!r}", line=lineno
                ) from None
            if n < 1 or t_count < 1:
                raise MalformedHeader(
                    f"need n >= 1 and T >= 1, got n={n}, T={t_count}", line=lineno
                )
            header = (n, t_count)
            frames = [set() for _ in range(t_count)]
            continue
        if len(fields) != 3:
            raise MalformedEdgeLine(
                f"expected '<t> <u> <v>', got {raw!r}", line=lineno
            )
        try:
            t, u, v = (int(f) for f in fields)
        except ValueError:
            raise MalformedEdgeLine(
                f"non-integer edge fields in {raw!r}", line=lineno
            ) from None
        if not (0 <= t < header[1]):
            raise EdgeOutOfRange(
                f"frame index {t} not in [0, {header[1]})", line=lineno
            )
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeOutOfRange(
                f"edge ({u}, {v}) outside vertex range [0, {n})", line=lineno
            )
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", line=lineno)
        e = (u, v) if u < v else (v, u)
        if e in frames[t]:
            raise DuplicateEdge(f"duplicate edge {e} in frame {t}", line=lineno)
        frames[t].add(e)
    if header is None:
        raise MalformedHeader("empty input", line=1)
    return TemporalGraph(header[0], frames)


def serialize(g: TemporalGraph) -> str:
    """Canonical .dcs text for g; parse(serialize(g)) == g, byte for byte."""
    out = [f"{g.n} {g.T}\n"]
    for t, frame_edges in enumerate(g.frames):
        for u, v in frame_edges:
            out.append(f"{t} {u} {v}\n")
    return "".join(out)


def load(path: str) -> TemporalGraph:
    with open(path, "rb") as fh:
        return parse(fh.read())


def save(g: TemporalGraph, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(serialize(g))
