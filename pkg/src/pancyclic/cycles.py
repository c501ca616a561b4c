"""Exact cycle-length search by anchored backtracking.

A cycle of length l is searched from each anchor ``s`` in ascending order,
using only vertices larger than ``s``, so every cycle is found from its
smallest vertex only. A branch is cut when the vertices still reachable from
the path end (avoiding the path) cannot supply the remaining length, or when
none of them closes back to the anchor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits

DEFAULT_ORDER_GUARD = 16


class OrderGuardError(ValueError):
    pass


def _reach(g: Graph, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``start`` through ``allowed``."""
    seen = 0
    frontier = g.adj[start] & allowed
    while frontier:
        seen |= frontier
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
    return seen


def _search(g: Graph, length: int):
    adj = g.adj
    n = g.n
    for s in range(n - length + 1):
        higher = ((1 << n) - 1) & ~((2 << s) - 1)
        if (adj[s] & higher).bit_count() < 2:
            continue
        closers = adj[s] & higher
        path = [s]

        def extend(v, free):
            # path has len(path) vertices ending at v; free = unused vertices > s
            need = length - len(path)
            if need == 0:
                return adj[v] >> s & 1
            reach = _reach(g, v, free)
            if reach.bit_count() < need or not reach & closers:
                return False
            for u in bits(adj[v] & free):
                if need == 1 and not adj[u] >> s & 1:
                    continue
                path.append(u)
                if extend(u, free & ~(1 << u)):
                    return True
                path.pop()
            return False

        for first in bits(closers):
            path.append(first)
            if extend(first, higher & ~(1 << first)):
                return list(path)
            del path[1:]
    return None


def has_cycle_of_length(g: Graph, length: int) -> list[int] | None:
    """A witness cycle ``[v0, ..., v_{l-1}]`` of the given length, or None."""
    if not 3 <= length <= g.n:
        raise ValueError(f"cycle length {length} outside [3, {g.n}]")
    return _search(g, length)


def is_cycle(g: Graph, walk: list[int], length: int | None = None) -> bool:
    """Check that ``walk`` lists distinct vertices forming a closed cycle."""
    if len(walk) < 3 or len(set(walk)) != len(walk):
        return False
    if length is not None and len(walk) != length:
        return False
    if any(not 0 <= v < g.n for v in walk):
        return False
    return all(g.has_edge(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def lengths(self) -> frozenset[int]:
        return frozenset(self.witnesses)

    @property
    def max_length(self) -> int | None:
        return max(self.witnesses) if self.witnesses else None

    @property
    def pancyclic(self) -> bool:
        return self.n >= 3 and self.lengths == frozenset(range(3, self.n + 1))


def cycle_spectrum(g: Graph, order_guard: int = DEFAULT_ORDER_GUARD) -> CycleSpectrum:
    if g.n > order_guard:
        raise OrderGuardError(f"order {g.n} exceeds the cycle-search guard {order_guard}")
    witnesses = {}
    for length in range(3, g.n + 1):
        w = _search(g, length)
        if w is not None:
            if not is_cycle(g, w, length):
                raise AssertionError(f"invalid witness for length {length}: {w}")
            witnesses[length] = tuple(w)
    return CycleSpectrum(g.n, witnesses)


def is_pancyclic(g: Graph, order_guard: int = DEFAULT_ORDER_GUARD) -> bool:
    if g.n < 3:
        raise ValueError("pancyclicity needs at least 3 vertices")
    if g.n > order_guard:
        raise OrderGuardError(f"order {g.n} exceeds the cycle-search guard {order_guard}")
    return all(_search(g, length) is not None for length in range(3, g.n + 1))
