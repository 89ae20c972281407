"""graph6 and DOT serialization.

graph6 layout: a size header (one byte ``n+63`` for ``n <= 62``, otherwise
``'~'`` followed by three bytes of 6-bit big-endian ``n``), then the upper
triangle of the adjacency matrix in column-major order, i.e. pairs
``(0,1), (0,2), (1,2), (0,3), ...``, packed 6 bits per byte, most
significant bit first, each byte offset by 63 and the final byte zero-padded.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import MAX_N, Graph, members

_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]
    value = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(value + 63))
                value = nbits = 0
    if nbits:
        out.append(chr((value << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 string; errors carry the offending byte offset."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte", exc.start) from None
    text = text.rstrip("\r\n")
    start = len(_HEADER) if text.startswith(_HEADER) else 0
    data = text[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the printable range 63..126", start + i)
    if data[0] != "~":
        n = ord(data[0]) - 63
        pos = 1
    else:
        if len(data) >= 2 and data[1] == "~":
            raise Graph6Error("8-byte size header (n > 258047) is not supported", start + 1)
        if len(data) < 4:
            raise Graph6Error("truncated size header", start + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error(f"long size header used for n={n}", start + 1)
        pos = 4
    if n > MAX_N:
        raise Graph6Error(f"graph has {n} vertices; limit is {MAX_N}", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, found {len(body)}", start + len(data))
    if len(body) > nbytes:
        raise Graph6Error(f"{len(body) - nbytes} trailing bytes", start + pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", start + pos + nbytes - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def emit_dot(g: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for v in range(g.n):
        for u in members(g.adj[v] >> (v + 1) << (v + 1)):
            lines.append(f"  {v} -- {u};")
    lines.append("}")
    return "\n".join(lines) + "\n"
