"""Isomorphism testing for small graphs by backtracking.

Vertices are first split into classes by (degree, triangles through the
vertex); a mapping may only send a vertex to one of the same class. Vertices
of ``g`` are placed in an order that keeps each new vertex adjacent to
already placed ones where possible, so adjacency conflicts surface early.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, bits, triangle_counts


def _invariants(g: Graph) -> list[tuple[int, int]]:
    return list(zip(g.degrees, triangle_counts(g)))


def _search_order(g: Graph, inv) -> list[int]:
    sizes = Counter(inv)
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        # prefer vertices touching the placed set, then rare invariant classes
        v = min(remaining, key=lambda u: (-(g.adj[u] & placed).bit_count(), sizes[inv[u]], -g.degrees[u], u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def isomorphisms(g: Graph, h: Graph):
    """Yield every isomorphism ``g -> h`` as a list ``f`` with ``f[v]`` in h."""
    if g.n != h.n or g.m != h.m:
        return
    inv_g, inv_h = _invariants(g), _invariants(h)
    if Counter(inv_g) != Counter(inv_h):
        return
    candidates = {}
    for v in range(h.n):
        candidates[inv_h[v]] = candidates.get(inv_h[v], 0) | 1 << v
    order = _search_order(g, inv_g)
    f = [-1] * g.n
    used = 0

    def extend(depth):
        nonlocal used
        if depth == g.n:
            yield list(f)
            return
        v = order[depth]
        # images already fixed for placed neighbours / non-neighbours of v
        need_adj = need_non = 0
        for u in order[:depth]:
            if g.adj[v] >> u & 1:
                need_adj |= 1 << f[u]
            else:
                need_non |= 1 << f[u]
        for w in bits(candidates[inv_g[v]] & ~used):
            if (h.adj[w] & need_adj) != need_adj or h.adj[w] & need_non:
                continue
            f[v] = w
            used |= 1 << w
            yield from extend(depth + 1)
            used &= ~(1 << w)
            f[v] = -1

    yield from extend(0)


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    return next(isomorphisms(g, h), None)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def automorphism_count(g: Graph) -> int:
    return sum(1 for _ in isomorphisms(g, g))
