"""Deterministic graph corpora.

Random graphs come from SplitMix64 (Steele, Lea and Flood), a fixed 64-bit
generator implemented here so that a seed names the same corpus on every
platform and Python version.  Exhaustive corpora are isomorphism-free, using
nauty canonical labelling through pynauty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

import pynauty

from .graph import Graph, bipartition, components, find_claw, is_connected, line_graph
from .io import render_graph6

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection (no modulo bias)."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def chance(self, p: Fraction) -> bool:
        return self.below(p.denominator) < p.numerator


def gnp(rng: SplitMix64, n: int, p: Fraction) -> Graph:
    """Erdos-Renyi graph; pairs (i, j), i < j, drawn in lexicographic order."""
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                if rng.chance(p)])


def random_bipartite(rng: SplitMix64, n: int, p: Fraction) -> Graph:
    """Random sides by fair coin, then each cross pair is an edge with probability ``p``."""
    side = [rng.below(2) for _ in range(n)]
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                if side[i] != side[j] and rng.chance(p)])


def is_bipartite(g: Graph) -> bool:
    return all(bipartition(g, c) is not None for c in components(g))


def _nauty(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={u: [v for v in range(g.n) if g.has_edge(u, v)]
                                              for u in range(g.n)})


def certificate(g: Graph) -> bytes:
    if g.n < 2:
        return bytes([g.n])
    return bytes([g.n]) + pynauty.certificate(_nauty(g))


def canonical(g: Graph) -> Graph:
    """Relabelled copy of ``g`` in nauty canonical order."""
    if g.n < 2:
        return Graph.empty(g.n)
    lab = pynauty.canon_label(_nauty(g))
    pos = {old: new for new, old in enumerate(lab)}
    return Graph.from_edges(g.n, [(pos[a], pos[b]) for a, b in g.edges()])


def _sorted_canonical(graphs: Iterable[Graph]) -> list[Graph]:
    canon = [canonical(h) for h in graphs]
    return sorted(canon, key=lambda h: (h.n, h.m, render_graph6(h)))


def _extend(g: Graph, nbrs: int) -> Graph:
    adj = list(g.adj)
    new = g.n
    for v in range(g.n):
        if nbrs >> v & 1:
            adj[v] |= 1 << new
    adj.append(nbrs)
    return Graph(g.n + 1, tuple(adj))


def exhaustive(max_n: int, claw_free: bool = False, bipartite: bool = False,
               connected: bool = False, min_n: int = 0) -> list[Graph]:
    """Every graph up to isomorphism with ``min_n <= n <= max_n`` vertices.

    Graphs on ``k`` vertices are grown from those on ``k - 1`` by adding a
    vertex with every possible neighbourhood.  Claw-freeness and
    bipartiteness are hereditary, so filtering each level is exact; for
    connected graphs the parent can be taken connected because deleting a
    non-cut vertex keeps a graph connected.
    """
    def ok(g: Graph) -> bool:
        if claw_free and find_claw(g) is not None:
            return False
        if bipartite and not is_bipartite(g):
            return False
        return True

    level = [Graph.empty(0)]
    out: list[Graph] = []
    if min_n == 0 and not connected:
        out.extend(level)
    for k in range(1, max_n + 1):
        seen: dict[bytes, Graph] = {}
        for parent in level:
            first = 1 if connected and k > 1 else 0
            for nbrs in range(first, 1 << parent.n):
                child = _extend(parent, nbrs)
                if not ok(child):
                    continue
                cert = certificate(child)
                if cert not in seen:
                    seen[cert] = child
        level = _sorted_canonical(seen.values())
        if k >= min_n:
            out.extend(level)
    return out


def graphs_by_edges(max_edges: int) -> list[Graph]:
    """Every graph without isolated vertices having 1..``max_edges`` edges, up to isomorphism."""
    level = [Graph.empty(0)]
    out: list[Graph] = []
    for _ in range(max_edges):
        seen: dict[bytes, Graph] = {}
        for g in level:
            n = g.n
            cands = [(i, j) for i in range(n) for j in range(i + 1, n) if not g.has_edge(i, j)]
            cands += [(i, n) for i in range(n)] + [(n, n + 1)]
            for a, b in cands:
                size = max(n, b + 1)
                child = Graph.from_edges(size, g.edges() + [(a, b)])
                cert = certificate(child)
                if cert not in seen:
                    seen[cert] = child
        level = _sorted_canonical(seen.values())
        out.extend(level)
    return out


DRAWS_PER_SAMPLE = 10_000


class CorpusExhausted(ValueError):
    """Too few random samples passed the filters within the draw limit."""


MODELS = ("gnp", "bipartite", "exhaustive", "linegraphs")
FILTERS = ("claw_free", "bipartite", "connected")


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate.

    ``gnp`` and ``bipartite`` keep drawing graphs on ``n`` vertices until
    ``count`` of them pass the filters, giving up after ``max_draws`` draws
    (default ``DRAWS_PER_SAMPLE * count``).  ``exhaustive``
    lists every graph with at most ``n`` vertices and ``linegraphs`` the line
    graphs of every graph with at most ``n`` edges; ``count`` and ``seed``
    are ignored for these two.
    """

    model: str
    n: int
    p: Fraction = Fraction(1, 2)
    count: int = 1
    seed: int = 0
    filters: frozenset[str] = field(default_factory=frozenset)
    max_draws: Optional[int] = None

    @property
    def draw_limit(self) -> int:
        return DRAWS_PER_SAMPLE * self.count if self.max_draws is None else self.max_draws

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODELS}")
        bad = set(self.filters) - set(FILTERS)
        if bad:
            raise ValueError(f"unknown filters {sorted(bad)}")
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if self.n < 0 or self.count < 0:
            raise ValueError("n and count must be nonnegative")
        if self.max_draws is not None and self.max_draws < 0:
            raise ValueError("max_draws must be nonnegative")


def passes(g: Graph, filters: Iterable[str]) -> bool:
    for f in filters:
        if f == "claw_free" and find_claw(g) is not None:
            return False
        if f == "bipartite" and not is_bipartite(g):
            return False
        if f == "connected" and not is_connected(g, g.full):
            return False
    return True


def generate(spec: CorpusSpec) -> Iterator[tuple[str, Graph]]:
    """Yield ``(graph id, graph)`` in a fixed order."""
    if spec.model in ("gnp", "bipartite"):
        rng = SplitMix64(spec.seed)
        draw = gnp if spec.model == "gnp" else random_bipartite
        kept = 0
        for _ in range(spec.draw_limit):
            if kept == spec.count:
                return
            g = draw(rng, spec.n, spec.p)
            if passes(g, sorted(spec.filters)):
                yield f"{spec.model}-{kept:05d}", g
                kept += 1
        if kept < spec.count:
            raise CorpusExhausted(f"only {kept} of {spec.count} samples passed the filters "
                                  f"in {spec.draw_limit} draws")
    elif spec.model == "exhaustive":
        graphs = exhaustive(spec.n, claw_free="claw_free" in spec.filters,
                            bipartite="bipartite" in spec.filters,
                            connected="connected" in spec.filters)
        for i, g in enumerate(graphs):
            yield f"ex-{i:05d}", g
    else:
        for i, h in enumerate(graphs_by_edges(spec.n)):
            lg = line_graph(h)
            if passes(lg, sorted(spec.filters)):
                yield f"lg-{i:05d}", lg
