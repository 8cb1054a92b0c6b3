"""Independence and matching polynomials of induced subgraphs.

:class:`GraphPolys` binds one parent graph to memo tables keyed by vertex
bitmask, so ``I(G - S)`` for many ``S`` is computed once per subset.  The
``*_oracle`` functions enumerate subsets directly and share no code with the
recurrences.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .graph import Graph, VertexSet, bits, popcount
from .poly import UniPoly

ORACLE_MAX_VERTICES = 25
ORACLE_MAX_EDGES = 20

_ONE = UniPoly.const(1)


class GraphPolys:
    """Memoised independence and matching polynomials over subsets of ``g``.

    One instance belongs to one verification session; it is not safe to
    share between threads.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.ind_memo: dict[VertexSet, UniPoly] = {0: _ONE}
        self.match_memo: dict[VertexSet, UniPoly] = {0: _ONE}
        self._ind_sq: dict[VertexSet, UniPoly] = {}
        self._match_sq: dict[VertexSet, UniPoly] = {}

    def independence(self, s: Optional[VertexSet] = None) -> UniPoly:
        """``I(G[s], x)``; the whole graph when ``s`` is None."""
        s = self.g.full if s is None else s
        memo = self.ind_memo
        hit = memo.get(s)
        if hit is not None:
            return hit
        adj = self.g.adj
        # pivot on a maximum-degree vertex inside s, lowest index on ties
        pivot, best = -1, -1
        for v in bits(s):
            d = popcount(adj[v] & s)
            if d > best:
                pivot, best = v, d
        if best == 0:
            # edgeless: (1 + x)^|s|
            result = UniPoly((1, 1)) ** popcount(s)
        else:
            without = self.independence(s & ~(1 << pivot))
            closed = self.independence(s & ~(adj[pivot] | 1 << pivot))
            result = without + closed.shift(1)
        memo[s] = result
        return result

    def matching(self, s: Optional[VertexSet] = None) -> UniPoly:
        """Signed matching polynomial ``mu(G[s], x)``."""
        s = self.g.full if s is None else s
        memo = self.match_memo
        hit = memo.get(s)
        if hit is not None:
            return hit
        u = (s & -s).bit_length() - 1
        rest = s & ~(1 << u)
        result = self.matching(rest).shift(1)
        for v in bits(self.g.adj[u] & rest):
            result = result - self.matching(rest & ~(1 << v))
        memo[s] = result
        return result

    def independence_squared(self, s: VertexSet) -> UniPoly:
        hit = self._ind_sq.get(s)
        if hit is None:
            p = self.independence(s)
            hit = self._ind_sq[s] = p * p
        return hit

    def matching_squared(self, s: VertexSet) -> UniPoly:
        hit = self._match_sq.get(s)
        if hit is None:
            p = self.matching(s)
            hit = self._match_sq[s] = p * p
        return hit


def independence_poly(g: Graph, s: Optional[VertexSet] = None,
                      memo: Optional[GraphPolys] = None) -> UniPoly:
    engine = memo if memo is not None else GraphPolys(g)
    if engine.g is not g:
        raise ValueError("memo table belongs to a different graph")
    return engine.independence(s)


def matching_poly(g: Graph, s: Optional[VertexSet] = None,
                  memo: Optional[GraphPolys] = None) -> UniPoly:
    engine = memo if memo is not None else GraphPolys(g)
    if engine.g is not g:
        raise ValueError("memo table belongs to a different graph")
    return engine.matching(s)


def independence_poly_oracle(g: Graph, s: Optional[VertexSet] = None) -> UniPoly:
    """Count independent subsets of ``s`` by size, scanning all ``2^|s|`` subsets."""
    s = g.full if s is None else s
    verts = list(bits(s))
    if len(verts) > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {len(verts)}")
    counts = [0] * (len(verts) + 1)
    for k in range(len(verts) + 1):
        for combo in combinations(verts, k):
            if all(not g.has_edge(a, b) for a, b in combinations(combo, 2)):
                counts[k] += 1
    return UniPoly(counts)


def matching_poly_oracle(g: Graph, s: Optional[VertexSet] = None) -> UniPoly:
    """Enumerate edge subsets of ``G[s]``, keep matchings, sum ``(-1)^k x^(n-2k)``."""
    s = g.full if s is None else s
    n = popcount(s)
    edges = [(a, b) for a, b in g.edges() if s >> a & 1 and s >> b & 1]
    if len(edges) > ORACLE_MAX_EDGES:
        raise ValueError(f"oracle limited to {ORACLE_MAX_EDGES} edges, got {len(edges)}")
    coeffs = [0] * (n + 1)
    for k in range(len(edges) + 1):
        for combo in combinations(edges, k):
            ends = [v for e in combo for v in e]
            if len(set(ends)) == 2 * k:
                coeffs[n - 2 * k] += (-1) ** k
    return UniPoly(coeffs)


def independence_derivative_check(g: Graph, memo: Optional[GraphPolys] = None) -> bool:
    """``I'(G) == sum over u of I(G - N[u])``."""
    engine = memo if memo is not None else GraphPolys(g)
    total = UniPoly()
    for u in range(g.n):
        total = total + engine.independence(g.full & ~(g.adj[u] | 1 << u))
    return engine.independence().derivative() == total
