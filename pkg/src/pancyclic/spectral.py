"""Adjacency and signless-Laplacian spectral radii, and the edge-count bounds.

Radii come from power iteration, one connected component at a time. The
adjacency matrix is shifted to ``A + I`` first: a bipartite graph has both
``mu`` and ``-mu`` in its spectrum, which stalls the unshifted iteration.
``Q = D + A`` has a nonnegative spectrum and needs no shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import graph as gr
from .graph import Graph, bits
from .isomorphism import is_isomorphic

DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 10**6


class Kind(str, Enum):
    ADJACENCY = "adjacency"
    SIGNLESS_LAPLACIAN = "signless-laplacian"


class SpectralConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(f"{message} (residual {residual:.3e} after {iterations} iterations)")
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    iterations: int
    residual: float
    perron_vector: tuple[float, ...]


def eigen_residual(g: Graph, value: float, vector, kind: Kind = Kind.ADJACENCY) -> float:
    """Max over vertices of the eigen-equation defect, for ``vector`` scaled to max 1.

    Adjacency: ``value * x_v - sum_{u ~ v} x_u``.
    Signless Laplacian: ``(value - d_v) * x_v - sum_{u ~ v} x_u``.
    """
    x = [float(t) for t in vector]
    scale = max(abs(t) for t in x)
    if scale == 0:
        raise ValueError("zero vector is not an eigenvector")
    x = [t / scale for t in x]
    worst = 0.0
    for v in range(g.n):
        lhs = value - g.degrees[v] if kind is Kind.SIGNLESS_LAPLACIAN else value
        worst = max(worst, abs(lhs * x[v] - sum(x[u] for u in bits(g.adj[v]))))
    return worst


def _component_radius(g: Graph, verts: list[int], kind: Kind, tol: float, max_iter: int):
    k = len(verts)
    if k == 1:
        return 0.0, np.ones(1), 0, 0.0
    sub = g.induced(verts)
    a = sub.adjacency_matrix()
    if kind is Kind.SIGNLESS_LAPLACIAN:
        m, shift = a + np.diag(a.sum(axis=1)), 0.0
    else:
        m, shift = a + np.eye(k), 1.0
    target = m - shift * np.eye(k)
    x = np.ones(k)
    residual = math.inf
    for it in range(1, max_iter + 1):
        y = target @ x
        lam = float(x @ y / (x @ x))
        residual = float(np.abs(y - lam * x).max())
        # absolute, with headroom so an independent recomputation also stays under tol
        if residual <= 0.5 * tol:
            return lam, x, it, residual
        x = y + shift * x
        x /= np.abs(x).max()
    raise SpectralConvergenceError("power iteration did not converge", residual, max_iter)


def _radius(g: Graph, kind: Kind, tol: float, max_iter: int) -> SpectralResult:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    best = None
    total = 0
    for comp in gr.components(g):
        verts = list(bits(comp))
        lam, x, it, res = _component_radius(g, verts, kind, tol, max_iter)
        total += it
        if best is None or lam > best[0]:
            best = (lam, verts, x, res)
    lam, verts, x, res = best
    vec = [0.0] * g.n
    for v, t in zip(verts, x):
        vec[v] = float(t)
    return SpectralResult(lam, total, res, tuple(vec))


def adjacency_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    return _radius(g, Kind.ADJACENCY, tol, max_iter)


def signless_laplacian_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    return _radius(g, Kind.SIGNLESS_LAPLACIAN, tol, max_iter)


# -- edge-count bounds -------------------------------------------------------

FAMILY_COMPLETE = "K_n"
FAMILY_STAR = "K_{1,n-1}"
FAMILY_CLIQUE_PLUS_VERTEX = "K_{n-1}+v"


@dataclass(frozen=True)
class BoundReport:
    bound_value: float
    radius: float
    satisfied: bool
    equality: bool
    equality_family: str | None
    near_equal: bool  # numeric diagnostic only


def _connected_family(g: Graph) -> str | None:
    if is_isomorphic(g, gr.complete(g.n)):
        return FAMILY_COMPLETE
    if g.n >= 2 and is_isomorphic(g, gr.complete_bipartite(1, g.n - 1)):
        return FAMILY_STAR
    return None


def _report(bound: float, radius: float, family: str | None, tol: float) -> BoundReport:
    slack = tol * max(1.0, bound)
    return BoundReport(
        bound_value=bound,
        radius=radius,
        satisfied=radius <= bound + slack,
        equality=family is not None,
        equality_family=family,
        near_equal=abs(radius - bound) <= max(slack, 1e-6),
    )


def adjacency_bound(g: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    """``mu(G) <= sqrt(2m - n + 1)`` for connected G; equality iff K_n or a star."""
    if not gr.is_connected(g):
        raise ValueError("the adjacency bound is stated for connected graphs only")
    bound = math.sqrt(2 * g.m - g.n + 1)
    return _report(bound, adjacency_radius(g, tol).radius, _connected_family(g), tol)


def signless_bound(g: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    """``q(G) <= 2m/(n-1) + n - 2``; equality iff K_n or a star (connected), K_{n-1}+v otherwise."""
    if g.n <= 1:
        raise ValueError("the signless-Laplacian bound needs n >= 2")
    bound = 2 * g.m / (g.n - 1) + g.n - 2
    if gr.is_connected(g):
        family = _connected_family(g)
    else:
        target = gr.disjoint_union(gr.complete(g.n - 1), gr.empty(1))
        family = FAMILY_CLIQUE_PLUS_VERTEX if is_isomorphic(g, target) else None
    return _report(bound, signless_laplacian_radius(g, tol).radius, family, tol)
