"""Edge-list and graph6 readers and writers.

Edge-list format::

    # comment lines start with '#'
    4          <- vertex count, first non-comment line
    0 1
    1 2

graph6 follows McKay's format; both the short (n <= 62) and the 4-byte
(n <= 258047) size headers are handled.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphParseError
from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphParseError(f"expected vertex count, got {line!r}", lineno)
            n = _parse_int(fields[0], lineno)
            if n < 0:
                raise GraphParseError(f"negative vertex count {n}", lineno)
            continue
        if len(fields) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = (_parse_int(f, lineno) for f in fields)
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphParseError(f"vertex {w} out of range for n={n}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphParseError("missing vertex count line")
    return Graph(n, sorted(edges))


def _parse_int(field, lineno):
    try:
        return int(field)
    except ValueError:
        raise GraphParseError(f"not an integer: {field!r}", lineno) from None


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise GraphParseError("empty graph6 string")
    codes = []
    for ch in data:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise GraphParseError(f"invalid graph6 character {ch!r}")
        codes.append(c)

    if codes[0] != 63:
        n, body = codes[0], codes[1:]
    elif len(codes) >= 4 and codes[1] != 63:
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        raise GraphParseError("unsupported graph6 size header (8-byte form)")

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise GraphParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = [n]
    elif n <= 258047:
        header = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        raise ValueError(f"graph6 writer supports n <= 258047, got {n}")
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(c + 63) for c in header + body)


def detect_format(path) -> str:
    return "graph6" if Path(path).suffix.lower() in (".g6", ".graph6") else "edgelist"


def read_graphs(path, fmt: str | None = None) -> list[Graph]:
    """All graphs stored in ``path``: one per line for graph6, one per file otherwise."""
    fmt = fmt or detect_format(path)
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "graph6":
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(g: Graph, path, fmt: str | None = None) -> None:
    fmt = fmt or detect_format(path)
    if fmt == "graph6":
        text = to_graph6(g) + "\n"
    elif fmt == "edgelist":
        text = format_edge_list(g)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    Path(path).write_text(text, encoding="utf-8", newline="\n")
