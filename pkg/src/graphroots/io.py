"""Text formats: graph6, plain edge lists, and DOT output."""

from __future__ import annotations

from typing import Iterable

from .graph import Edge, Graph, canonical_edge

GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed input text; ``offset`` is the 0-based byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0 or n >= 1 << 36:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    out = [_encode_n(g.n)]
    adj = g.adjacency
    acc = 0
    count = 0
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = 0
                count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string. Surrounding whitespace and the optional header are skipped."""
    start = len(text) - len(text.lstrip())
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        start += len(GRAPH6_HEADER)
    if not data:
        raise ParseError("empty graph6 string", start)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", start + k)

    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 36-bit vertex count", start + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise ParseError("truncated 18-bit vertex count", start + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != nbytes:
        raise ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(body)}",
            start + pos + min(len(body), nbytes),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits", start + pos + nbytes - 1)
    return Graph(n, edges)


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``. Blank lines and ``#`` comments are ignored."""
    records: list[tuple[int, list[str]]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        content = line.split("#", 1)[0]
        if content.strip():
            records.append((offset + len(content) - len(content.lstrip()), content.split()))
        offset += len(line.encode())
    if not records:
        raise ParseError("missing 'n m' header", 0)

    def ints(rec: tuple[int, list[str]]) -> tuple[int, int]:
        off, toks = rec
        if len(toks) != 2:
            raise ParseError(f"expected two integers, found {len(toks)} fields", off)
        try:
            return int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"non-integer field in {' '.join(toks)!r}", off) from None

    n, m = ints(records[0])
    if n < 0 or m < 0:
        raise ParseError("negative count in header", records[0][0])
    if len(records) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(records) - 1}", offset)
    edges = set()
    for rec in records[1:]:
        u, v = ints(rec)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"invalid edge {u} {v} for n={n}", rec[0])
        e = canonical_edge(u, v)
        if e in edges:
            raise ParseError(f"duplicate edge {u} {v}", rec[0])
        edges.add(e)
    return Graph(n, edges)


def emit_dot(g: Graph, highlighted: Iterable[Edge] | None = None, name: str = "G") -> str:
    """DOT text for ``g``.

    When ``highlighted`` is given (typically a square root), those edges are
    drawn solid and all other edges dashed.
    """
    marked = None if highlighted is None else {canonical_edge(*e) for e in highlighted}
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    for u, v in g.edges():
        if marked is None:
            lines.append(f"  {u} -- {v};")
        else:
            style = "solid" if (u, v) in marked else "dashed"
            lines.append(f"  {u} -- {v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return emit_edgelist(g)
    raise ValueError(f"unknown graph format {fmt!r}")
