"""Graph ingestion: a plain edge-list format and graph6."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph


class GraphFormatError(ValueError):
    """Malformed graph input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based); ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise GraphFormatError("empty input: expected a header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header values must be integers", lineno) from None
    if not 0 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count must be in 0..{MAX_VERTICES}", lineno)
    if m < 0:
        raise GraphFormatError("edge count must be nonnegative", lineno)
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(rows) - 1}",
                               rows[-1][0] if len(rows) > 1 else lineno)
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def render_edgelist(g: Graph) -> str:
    es = g.edges()
    return "".join([f"{g.n} {len(es)}\n"] + [f"{u} {v}\n" for u, v in es])


_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optionally with the ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string", 1)
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError("graph6 characters must lie in '?'..'~'", 1)
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise GraphFormatError("graph6 graphs this large are not supported", 1)
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field", 1)
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} exceeds {MAX_VERTICES}", 1)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}", 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if any(body[k // 6] >> (5 - k % 6) & 1 for k in range(nbits, 6 * len(body))):
        raise GraphFormatError("nonzero padding bits in graph6 body", 1)
    return Graph.from_edges(n, edges)


def render_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    else:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    bitlist = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = [int("".join(map(str, bitlist[k:k + 6])), 2) for k in range(0, len(bitlist), 6)]
    return "".join(chr(d + 63) for d in head + body)


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    raise ValueError(f"unknown format {fmt!r}")
