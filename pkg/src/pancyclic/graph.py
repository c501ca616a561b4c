"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bitset per vertex; bit ``u`` of ``adj[v]``
is set when ``uv`` is an edge. Graphs are immutable values.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

MAX_ORDER = 64


class GraphError(ValueError):
    pass


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in bits(self.adj[v]):
                if u in index:
                    rows[i] |= 1 << index[u]
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        return build(self.n, self.edges() + [(u, v)])

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _check_capacity(total: int):
    if total > MAX_ORDER:
        raise GraphError(f"combined order {total} exceeds capacity {MAX_ORDER}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_capacity(g.n + h.n)
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    _check_capacity(g.n + h.n)
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << g.n
    rows = tuple(row | h_all for row in g.adj) + tuple((row << g.n) | g_all for row in h.adj)
    return Graph(g.n + h.n, rows)


def replicate(k: int, g: Graph) -> Graph:
    if k < 1:
        raise GraphError("replication count must be at least 1")
    _check_capacity(k * g.n)
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def complete(n: int) -> Graph:
    return build(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    return build(n, ())


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides of K{a,b} need at least one vertex")
    return join(empty(a), empty(b))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return build(n, ((i, i + 1) for i in range(n - 1)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def components(g: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by smallest vertex."""
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """A 2-coloring as two vertex lists, or None when ``g`` has an odd cycle."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return [v for v in range(g.n) if color[v] == 0], [v for v in range(g.n) if color[v] == 1]


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


@dataclass(frozen=True)
class DegreeSequence:
    """Nondecreasing degree list ``d_1 <= ... <= d_n``."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        d = self.degrees
        n = len(d)
        if n == 0:
            raise GraphError("empty degree sequence")
        if any(x < 0 or x > n - 1 for x in d):
            raise GraphError(f"degree outside [0, {n - 1}]")
        if any(a > b for a, b in zip(d, d[1:])):
            raise GraphError("degree sequence must be nondecreasing")
        if sum(d) % 2:
            raise GraphError("degree sum is odd")

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __getitem__(self, k: int) -> int:
        """One-based access, ``seq[k] == d_k``."""
        if not 1 <= k <= self.n:
            raise IndexError(k)
        return self.degrees[k - 1]

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return self.n


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees)))


def triangle_counts(g: Graph) -> tuple[int, ...]:
    """Number of triangles through each vertex."""
    out = []
    for v in range(g.n):
        t = 0
        for u in bits(g.adj[v]):
            t += (g.adj[u] & g.adj[v]).bit_count()
        out.append(t // 2)
    return tuple(out)
