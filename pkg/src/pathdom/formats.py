"""Text encodings for graphs: graph6 and a plain edge list.

graph6 packs the upper adjacency triangle column-wise, 6 bits per
printable character (offset 63), preceded by the vertex count.  The edge
list format is a "n m" header line followed by one "u v" pair per line,
0-indexed, with '#' starting a comment.
"""

from .graphs import Graph, from_edge_mask, edge_mask

__all__ = [
    "GraphFormatError",
    "emit_graph6",
    "parse_graph6",
    "emit_edge_list",
    "parse_edge_list",
    "detect_format",
    "load_graphs",
]

_G6_HEADER = ">>graph6<<"
_MAX_N = 1 << 36


class GraphFormatError(ValueError):
    """Malformed graph text; ``offset`` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n >= _MAX_N:
        raise GraphFormatError(f"graph6 cannot encode n={n}")
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        prefix = [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    npairs = n * (n - 1) // 2
    mask = edge_mask(g)
    body = []
    for i in range(0, npairs, 6):
        chunk = 0
        for j in range(6):
            if i + j < npairs and mask >> (i + j) & 1:
                chunk |= 1 << (5 - j)
        body.append(chunk + 63)
    return "".join(map(chr, prefix + body))


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126", i)
        vals.append(c - 63)

    # vertex count: 1 char (n <= 62), '~' + 3 chars, or '~~' + 6 chars
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated vertex count", len(s))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise GraphFormatError("truncated vertex count", len(s))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8

    npairs = n * (n - 1) // 2
    nchars = (npairs + 5) // 6
    if len(vals) - pos != nchars:
        raise GraphFormatError(
            f"expected {nchars} adjacency characters for n={n}, got {len(vals) - pos}",
            pos,
        )
    mask = 0
    for i in range(npairs):
        chunk = vals[pos + i // 6]
        if chunk >> (5 - i % 6) & 1:
            mask |= 1 << i
    return from_edge_mask(n, mask)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    if len(tokens) < 2:
        raise GraphFormatError("edge list needs an 'n m' header")
    try:
        numbers = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer token in edge list: {exc}") from None
    n, m = numbers[0], numbers[1]
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be nonnegative")
    if len(numbers) != 2 + 2 * m:
        raise GraphFormatError(
            f"header declares {m} edges but {(len(numbers) - 2) / 2:g} pairs follow"
        )
    edges = [(numbers[i], numbers[i + 1]) for i in range(2, len(numbers), 2)]
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def detect_format(text: str) -> str:
    """Guess 'edgelist' vs 'graph6' from the first meaningful line."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return "edgelist"
        return "graph6"
    raise GraphFormatError("no graph data found")


def load_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Read one edge-list graph or any number of graph6 lines."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt == "graph6":
        out = []
        for raw in text.splitlines():
            line = raw.strip()
            if line and not line.startswith("#"):
                out.append(parse_graph6(line))
        if not out:
            raise GraphFormatError("no graph6 lines found")
        return out
    raise ValueError(f"unknown format {fmt!r}")
