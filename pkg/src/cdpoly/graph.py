"""Immutable simple graphs with bitset adjacency.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Every
subgraph is named by such a mask relative to one fixed parent graph, which is
what lets the polynomial engine share memo tables across subgraphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 128

VertexSet = int

INFINITE = math.inf
"""Distance between vertices in different components."""


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``origin`` is set on graphs produced by :func:`induced` and maps each
    vertex back to its index in the parent graph.
    """

    n: int
    adj: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None
    origin: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has wrong number of rows")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        """Build a graph, rejecting self-loops and repeated edges."""
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, u: int, within: Optional[VertexSet] = None) -> int:
        row = self.adj[u] if within is None else self.adj[u] & within
        return popcount(row)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced on ``s``, relabelled ``0..|s|-1`` in index order."""
    if s & ~g.full:
        raise ValueError("vertex set not contained in the graph")
    keep = list(bits(s))
    pos = {v: i for i, v in enumerate(keep)}
    adj = tuple(mask_of(pos[w] for w in bits(g.adj[v] & s)) for v in keep)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), adj, labels, origin=tuple(keep))


def closed_neighborhood(g: Graph, h: VertexSet) -> VertexSet:
    out = h
    for v in bits(h):
        out |= g.adj[v]
    return out


def is_independent(g: Graph, s: VertexSet) -> bool:
    return not any(g.adj[v] & s for v in bits(s))


def find_claw(g: Graph) -> Optional[VertexSet]:
    """Return the vertex set of an induced K_{1,3}, or None if claw-free."""
    for u in range(g.n):
        nbrs = list(bits(g.adj[u]))
        if len(nbrs) < 3:
            continue
        for a, b in combinations(nbrs, 2):
            if g.adj[a] >> b & 1:
                continue
            # any third neighbour of u adjacent to neither a nor b
            rest = g.adj[u] & ~g.adj[a] & ~g.adj[b] & ~(1 << a | 1 << b)
            if rest:
                c = (rest & -rest).bit_length() - 1
                return 1 << u | 1 << a | 1 << b | 1 << c
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def component_of(g: Graph, start: int, within: VertexSet) -> VertexSet:
    """Vertices reachable from ``start`` inside the induced subgraph on ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph, h: VertexSet) -> bool:
    """True iff the induced subgraph on ``h`` is connected; the empty set is not."""
    if not h:
        return False
    start = (h & -h).bit_length() - 1
    return component_of(g, start, h) == h


def components(g: Graph, s: Optional[VertexSet] = None) -> list[VertexSet]:
    rest = g.full if s is None else s
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_of(g, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


def bipartition(g: Graph, h: VertexSet) -> Optional[tuple[VertexSet, VertexSet]]:
    """2-colouring of the connected induced subgraph on ``h``.

    The class containing the lowest-index vertex of ``h`` comes first.
    Returns None when the subgraph has an odd cycle.
    """
    if not is_connected(g, h):
        raise ValueError("bipartition needs a nonempty connected vertex set")
    start = h & -h
    side_a, side_b = start, 0
    frontier, colour_a = start, True
    seen = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= h
        if nxt & (side_a if colour_a else side_b):
            return None
        nxt &= ~seen
        if colour_a:
            side_b |= nxt
        else:
            side_a |= nxt
        seen |= nxt
        frontier = nxt
        colour_a = not colour_a
    return side_a, side_b


def distance(g: Graph, u: int, v: int, within: Optional[VertexSet] = None) -> float | int:
    """BFS distance from ``u`` to ``v``; ``INFINITE`` when unreachable.

    With ``within`` the search is confined to that induced subgraph, which is
    how ``d_H(u, v)`` is measured for a subgraph ``H``.
    """
    allowed = g.full if within is None else within
    if not (allowed >> u & 1 and allowed >> v & 1):
        raise ValueError("endpoints must lie in the vertex set")
    if u == v:
        return 0
    target = 1 << v
    seen = frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= allowed & ~seen
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return INFINITE


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of ``g``, two edges adjacent when they share an endpoint."""
    es = g.edges()
    pairs = [(i, j) for i, j in combinations(range(len(es)), 2) if set(es[i]) & set(es[j])]
    return Graph.from_edges(len(es), pairs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(g.n + h.n, g.edges() + [(a + shift, b + shift) for a, b in h.edges()])
