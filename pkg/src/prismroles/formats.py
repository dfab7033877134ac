"""graph6 and edge-list readers/writers."""

from __future__ import annotations

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph input.  ``where`` locates the problem (line or byte)."""

    def __init__(self, message: str, where: str) -> None:
        super().__init__(f"{where}: {message}")
        self.where = where


# -- graph6 --------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
                  | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_size(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise ParseError("empty graph6 string", f"byte {offset}")
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range", f"byte {offset + k}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte size prefix", f"byte {offset + len(vals)}")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte size prefix", f"byte {offset + len(vals)}")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}",
                         f"byte {offset + pos + min(len(body), need)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and body[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise ParseError("non-zero padding bits", f"byte {offset + pos + need - 1}")
    return Graph(n, tuple(rows))


# -- edge list -----------------------------------------------------------

def to_edgelist(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """First non-comment line ``n``, then one ``u v`` pair per line (0-based).

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", f"line {lineno}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError("first line must be a vertex count", f"line {lineno}")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", f"line {lineno}")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", f"line {lineno}")
        if u == v:
            raise ParseError(f"self-loop at {u}", f"line {lineno}")
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count", "line 1")
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse ``text`` as ``fmt`` ('graph6' or 'edgelist'); sniff when ``None``."""
    if fmt is None:
        stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if len(stripped) == 1 and not stripped[0].strip().isdigit():
            fmt = "graph6"
        else:
            fmt = "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError("expected exactly one graph6 line", "line 1")
        return from_graph6(lines[0])
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ValueError(f"unknown format {fmt!r}")


def format_graph(g: Graph, fmt: str, comments: list[str] | None = None) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g, comments)
    raise ValueError(f"unknown format {fmt!r}")
