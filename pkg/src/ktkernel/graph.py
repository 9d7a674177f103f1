"""Simple undirected graphs, the edge-list file format, and fixed-size clique enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]
VertexSet = tuple[int, ...]
EdgeSet = tuple[Edge, ...]


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


def vertex_set(members: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(members)))


def edge_set(members: Iterable[Edge]) -> EdgeSet:
    return tuple(sorted({canonical_edge(u, v) for u, v in members}))


def edge_set_of(x: Iterable[int]) -> EdgeSet:
    """All unordered pairs over ``x`` in canonical order."""
    members = vertex_set(x)
    if len(members) < 2:
        raise ValueError(f"edge_set_of needs at least 2 vertices, got {members}")
    return tuple(combinations(members, 2))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` is normalised to a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    Adjacency is kept as one bitmask per vertex.
    """

    n: int
    edges: EdgeSet = ()
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = edge_set(self.edges)
        adj = [0] * self.n
        for u, v in edges:
            if v >= self.n or u < 0:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        drop = {canonical_edge(u, v) for u, v in removed}
        return Graph(self.n, tuple(e for e in self.edges if e not in drop))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, tuple(canonical_edge(i, (i + 1) % n) for i in range(n)))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_t_cliques(g: Graph, t: int) -> Iterator[VertexSet]:
    """Yield every ``t``-clique of ``g`` once, in lexicographic order.

    Cliques are grown by extending only with vertices larger than the current
    maximum, so no deduplication is needed.
    """
    if t < 2:
        raise ValueError(f"clique size must be >= 2, got {t}")
    adj = g.adj

    def extend(clique: list[int], candidates: int) -> Iterator[VertexSet]:
        if len(clique) == t:
            yield tuple(clique)
            return
        need = t - len(clique)
        while candidates and candidates.bit_count() >= need:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            clique.append(v)
            yield from extend(clique, candidates & adj[v])
            clique.pop()

    for v in range(g.n):
        higher = adj[v] >> (v + 1) << (v + 1)
        yield from extend([v], higher)


def enumerate_t_cliques(g: Graph, t: int) -> list[VertexSet]:
    return list(iter_t_cliques(g, t))


def first_t_clique(g: Graph, t: int) -> VertexSet | None:
    return next(iter_t_cliques(g, t), None)


def parse_graph(text: str) -> Graph:
    """Parse the ``p edge n m`` / ``e u v`` format (1-indexed) into a 0-indexed graph.

    Comment lines start with ``c``; blank lines are ignored. Repeated edge
    lines collapse to one edge.
    """
    n: int | None = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError("malformed header, expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError("malformed header, non-integer counts", lineno) from None
            if n < 0 or m < 0:
                raise GraphParseError("malformed header, negative counts", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphParseError("malformed edge line, expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError("malformed edge line, non-integer vertex", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError("self-loop", lineno)
            edges.add(canonical_edge(u - 1, v - 1))
        else:
            raise GraphParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing header 'p edge <n> <m>'")
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as f:
        return parse_graph(f.read())


def write_graph(path, g: Graph, comments: Iterable[str] = ()) -> None:
    with open(path, "w", newline="\n") as f:
        f.write(serialize_graph(g, comments))
