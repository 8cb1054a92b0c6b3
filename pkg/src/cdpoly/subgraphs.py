"""Enumeration of induced connected bipartite subgraphs and simple paths."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph, VertexSet, bits, distance, popcount


@dataclass(frozen=True)
class BipartiteSubgraph:
    """An induced connected bipartite subgraph ``H`` with a fixed colouring.

    ``class_a`` holds the first anchor when anchors are given, otherwise the
    lowest-index vertex of ``H``.
    """

    vertices: VertexSet
    class_a: VertexSet
    class_b: VertexSet
    anchor_u: Optional[int] = None
    anchor_v: Optional[int] = None
    dist_uv: Optional[int] = None

    @property
    def a(self) -> int:
        return popcount(self.class_a)

    @property
    def b(self) -> int:
        return popcount(self.class_b)

    @property
    def size(self) -> int:
        return popcount(self.vertices)


def _grow_bipartite(g: Graph, root: int, excluded: VertexSet) -> list[tuple[VertexSet, VertexSet]]:
    """All (vertex set, colour class of root) for connected bipartite sets containing
    ``root`` and avoiding ``excluded``.

    Each set is reached once: a child extends by a candidate ``w`` and every
    earlier sibling is excluded from its subtree.  Adding a vertex whose
    neighbours in the set are split across both colours closes an odd cycle,
    and since bipartiteness is hereditary that whole branch is dropped.
    """
    adj = g.adj
    out: list[tuple[VertexSet, VertexSet]] = []

    def rec(s: VertexSet, col: VertexSet, cand: VertexSet, excl: VertexSet):
        out.append((s, col))
        while cand:
            w = cand & -cand
            cand ^= w
            wi = w.bit_length() - 1
            touch = adj[wi] & s
            if touch & col and touch & ~col:
                excl |= w
                continue
            new_col = col if touch & col else col | w
            ns = s | w
            rec(ns, new_col, (cand | adj[wi]) & ~ns & ~excl, excl)
            excl |= w

    start = 1 << root
    rec(start, start, adj[root] & ~excluded & ~start, excluded | start)
    return out


def enum_bipartite(g: Graph, anchors: Sequence[int] = ()) -> Iterator[BipartiteSubgraph]:
    """Induced connected bipartite subgraphs, optionally containing the anchors.

    Yields in increasing order of the vertex bitmask.  With two anchors the
    distance between them inside ``H`` is filled in.
    """
    anchors = tuple(anchors)
    if len(anchors) > 2:
        raise ValueError("at most two anchors")
    for a in anchors:
        if not 0 <= a < g.n:
            raise ValueError(f"anchor {a} not a vertex")
    if len(anchors) == 2 and anchors[0] == anchors[1]:
        raise ValueError("the two anchors must be distinct")

    found: list[BipartiteSubgraph] = []
    if not anchors:
        for r in range(g.n):
            below = (1 << r) - 1
            for s, col in _grow_bipartite(g, r, below):
                found.append(BipartiteSubgraph(s, col, s & ~col))
    else:
        u = anchors[0]
        v = anchors[1] if len(anchors) == 2 else None
        for s, col in _grow_bipartite(g, u, 0):
            if v is None:
                found.append(BipartiteSubgraph(s, col, s & ~col, anchor_u=u))
            elif s >> v & 1:
                found.append(BipartiteSubgraph(
                    s, col, s & ~col, anchor_u=u, anchor_v=v,
                    dist_uv=distance(g, u, v, within=s)))
    found.sort(key=lambda h: h.vertices)
    return iter(found)


def enum_paths(g: Graph, start: int, end: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Simple paths from ``start``; all of them (including the one-vertex path)
    when ``end`` is None, otherwise only those ending at ``end``."""
    if not 0 <= start < g.n or (end is not None and not 0 <= end < g.n):
        raise ValueError("path endpoints must be vertices")
    if end == start:
        raise ValueError("start and end must differ")
    adj = g.adj
    path = [start]

    def dfs(last: int, used: VertexSet) -> Iterator[tuple[int, ...]]:
        if end is None:
            yield tuple(path)
        elif last == end:
            yield tuple(path)
            return
        for w in bits(adj[last] & ~used):
            path.append(w)
            yield from dfs(w, used | 1 << w)
            path.pop()

    yield from dfs(start, 1 << start)


def enum_odd_paths(g: Graph) -> Iterator[tuple[int, ...]]:
    """Simple paths with an odd number of vertices, each listed once with the
    smaller endpoint first; single vertices included."""
    for s in range(g.n):
        for p in enum_paths(g, s):
            if len(p) % 2 == 1 and (len(p) == 1 or p[0] < p[-1]):
                yield p


def path_vertex_set_counts(g: Graph, start: int, end: Optional[int] = None) -> Counter:
    """Multiplicity of each vertex set among the simple paths of :func:`enum_paths`.

    Dynamic programme over (visited set, last vertex); it never lists the
    paths, so dense graphs with billions of paths stay tractable.
    """
    if not 0 <= start < g.n or (end is not None and not 0 <= end < g.n):
        raise ValueError("path endpoints must be vertices")
    if end == start:
        raise ValueError("start and end must differ")
    if end is None:
        return path_counts_by_end(g, start)[None]
    return path_counts_by_end(g, start).get(end, Counter())


def path_counts_by_end(g: Graph, start: int) -> dict[Optional[int], Counter]:
    """Vertex-set multiplicities of simple paths from ``start``, grouped by last vertex.

    Key ``None`` aggregates every path from ``start`` (the single vertex
    included); key ``v`` covers the paths that end at ``v``.  A simple path
    visits ``v`` at most once, so those are exactly the ``start``-``v`` paths.
    """
    adj = g.adj
    total: Counter = Counter()
    by_end: dict[Optional[int], Counter] = {None: total}
    layer = {(1 << start, start): 1}
    while layer:
        nxt: dict[tuple[VertexSet, int], int] = {}
        for (used, last), c in layer.items():
            total[used] += c
            if last != start:
                by_end.setdefault(last, Counter())[used] += c
            for w in bits(adj[last] & ~used):
                key = (used | 1 << w, w)
                nxt[key] = nxt.get(key, 0) + c
        layer = nxt
    return by_end
