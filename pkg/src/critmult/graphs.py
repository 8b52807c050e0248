"""Bit-vector graphs and exact clique counting.

Vertices are labeled 0..n-1 and each adjacency row is a single int used
as a bitmask, so neighborhood intersection is one AND. Cliques are
counted by ordered extension (only vertices of higher index are added),
which visits every clique exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

# One machine word per adjacency row; every target in this package fits.
MAX_VERTICES = 64


class EdgeNotPresentError(ValueError):
    """An operation named an edge the graph does not contain."""


@dataclass(frozen=True, order=True)
class Edge:
    """Unordered vertex pair, normalized so u < v."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"self-loop ({self.u},{self.v})")
        if self.u < 0 or self.v < 0:
            raise ValueError(f"negative vertex in ({self.u},{self.v})")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def __iter__(self) -> Iterator[int]:
        return iter((self.u, self.v))


class Graph:
    """Immutable undirected simple graph; all mutators return copies."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits beyond vertex {n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(n):
            for v in range(u + 1, n):
                if (rows[u] >> v & 1) != (rows[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int] | Edge]) -> "Graph":
        rows = [0] * n
        for e in edges:
            u, v = e
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u},{v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                out.append(Edge(u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()


def complete_graph(n: int) -> Graph:
    """K_n: every pair of distinct vertices joined."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    full = (1 << n) - 1
    return Graph(n, (full ^ (1 << u) for u in range(n)))


def remove_edges(g: Graph, edges: Iterable[tuple[int, int] | Edge]) -> Graph:
    """Copy of g with the given edges deleted; each must be present."""
    rows = list(g.adj)
    for e in edges:
        u, v = e
        if not g.has_edge(u, v) or not (rows[u] >> v & 1):
            raise EdgeNotPresentError(f"edge ({u},{v}) not present")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, rows)


def _count_extensions(adj: tuple[int, ...], cand: int, need: int) -> int:
    # Number of `need`-subsets of `cand` that are cliques; candidates are
    # popped in increasing index order so each subset is seen once.
    if need == 1:
        return cand.bit_count()
    total = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        total += _count_extensions(adj, cand & adj[v], need - 1)
    return total


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-vertex subsets inducing complete subgraphs."""
    if s < 1:
        raise ValueError(f"clique size must be positive, got {s}")
    if s > g.n:
        return 0
    if s == 1:
        return g.n
    return _count_extensions(g.adj, (1 << g.n) - 1, s)


def count_cliques_through_edge(g: Graph, s: int, e: Edge) -> int:
    """Number of s-cliques whose vertex set contains both endpoints of e."""
    if s < 2:
        raise ValueError(f"clique size must be at least 2, got {s}")
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(f"edge ({u},{v}) not present")
    if s == 2:
        return 1
    if s > g.n:
        return 0
    return _count_extensions(g.adj, g.adj[u] & g.adj[v], s - 2)


def cliques_through_edge(g: Graph, s: int, e: Edge) -> list[tuple[int, ...]]:
    """All s-cliques containing edge e, as sorted vertex tuples."""
    if s < 2:
        raise ValueError(f"clique size must be at least 2, got {s}")
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeNotPresentError(f"edge ({u},{v}) not present")
    cand = g.adj[u] & g.adj[v]
    rest = [w for w in range(g.n) if cand >> w & 1]
    found = []
    for extra in combinations(rest, s - 2):
        if all(g.adj[a] >> b & 1 for a, b in combinations(extra, 2)):
            found.append(tuple(sorted((u, v) + extra)))
    return found
