"""graph6 encoding for graphs with at most 62 vertices.

Format: one header byte ``63 + n`` followed by the upper triangle of the
adjacency matrix in column-major order (``(0,1), (0,2), (1,2), (0,3), ...``),
packed big-endian into 6-bit groups, each group offset by 63. The last
group is zero-padded on the right.
"""

from __future__ import annotations

from .graph import Graph, build

MAX_GRAPH6_ORDER = 62


class Graph6Error(ValueError):
    pass


def _pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise Graph6Error(f"graph6 multi-byte headers are not supported (n={g.n})")
    out = [chr(63 + g.n)]
    group = count = 0
    for i, j in _pairs(g.n):
        group = (group << 1) | (g.adj[i] >> j & 1)
        count += 1
        if count == 6:
            out.append(chr(63 + group))
            group = count = 0
    if count:
        out.append(chr(63 + (group << (6 - count))))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 string")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    codes = [ord(c) - 63 for c in text]
    if codes[0] == 63:
        raise Graph6Error("graph6 multi-byte headers are not supported (n > 62)")
    if not 0 <= codes[0] <= 62:
        raise Graph6Error(f"malformed graph6 header byte {text[0]!r}")
    n = codes[0]
    if n == 0:
        raise Graph6Error("graph6 string encodes the null graph")
    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = codes[1:]
    for pos, c in enumerate(body, start=1):
        if not 0 <= c <= 63:
            raise Graph6Error(f"invalid graph6 byte {text[pos]!r} at offset {pos}")
    if len(body) < ngroups:
        raise Graph6Error(f"truncated graph6 data: need {ngroups} bytes after header, got {len(body)}")
    if len(body) > ngroups:
        raise Graph6Error(f"trailing garbage after graph6 data at offset {1 + ngroups}")
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        if body[k // 6] >> (5 - k % 6) & 1:
            edges.append((i, j))
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits in final graph6 byte")
    return build(n, edges)
