"""The exceptional graphs that meet the edge-count condition without being pancyclic.

Nine fixed graphs plus one family on every order n >= 5,
``K2 v (K{n-4} + 2*K1)``. Members are named by their expression in the
grammar of :mod:`pancyclic.expr`.

The list is audited by the cycle oracle rather than trusted: see
:func:`audit`. A listed graph that turns out to be pancyclic is reported by
the audit and is not treated as an exception by the certifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb

from . import graph as gr
from .cycles import cycle_spectrum
from .expr import graph_from_expr
from .graph import Graph
from .isomorphism import is_isomorphic

PARAMETRIC_NAME = "K2 v (K{n-4} + 2*K1)"

FIXED_EXPRESSIONS = (
    "K5 v 6*K1",
    "K3 v (K2 + 3*K1)",
    "K3 v (K1 + K{1,4})",
    "K3 v (K2 + K{1,3})",
    "(K2 v 2*K1) v 5*K1",
    "K4 v 5*K1",
    "K{1,2} v 4*K1",
    "K2 v (K1 + K{1,3})",
    "K3 v 4*K1",
)

# Subset carried into the spectral proofs, kept by name only.
NP2_EXPRESSIONS = (
    "K3 v (K1 + K{1,4})",
    "K3 v (K2 + K{1,3})",
    "(K2 v 2*K1) v 5*K1",
    "K4 v 5*K1",
    "K{1,2} v 4*K1",
    "K2 v (K1 + K{1,3})",
    "K3 v 4*K1",
)

# The one graph allowed to meet the signless-radius condition.
SIGNLESS_EXCEPTION = "K3 v 4*K1"


def edge_threshold(n: int) -> int:
    return comb(n - 2, 2) + 4


@dataclass(frozen=True)
class Member:
    name: str
    graph: Graph


@cache
def fixed_members() -> tuple[Member, ...]:
    return tuple(Member(e, graph_from_expr(e)) for e in FIXED_EXPRESSIONS)


def member(name: str) -> Member:
    for mem in fixed_members():
        if mem.name == name:
            return mem
    raise KeyError(name)


def np2_members() -> tuple[Member, ...]:
    return tuple(member(e) for e in NP2_EXPRESSIONS)


def parametric_member(n: int) -> Graph:
    if n < 5:
        raise ValueError("the parametric family starts at n = 5")
    return graph_from_expr(f"K2 v (K{n - 4} + 2*K1)")


def parametric_tag(n: int) -> str:
    return f"{PARAMETRIC_NAME} [n={n}]"


def is_parametric_member(g: Graph) -> bool:
    """Structural test for ``K2 v (K{n-4} + 2*K1)``.

    Two dominating vertices; removing them leaves a clique on n-4 vertices
    plus two isolated vertices.
    """
    n = g.n
    if n < 5:
        return False
    dominating = [v for v in range(n) if g.degrees[v] == n - 1]
    if len(dominating) != 2:
        return False
    rest = g.induced([v for v in range(n) if g.degrees[v] != n - 1])
    # n-4 vertices of degree n-5 leave no room for edges to the two isolated ones
    return sorted(rest.degrees) == [0, 0] + [n - 5] * (n - 4)


def recognize_exceptional(g: Graph) -> str | None:
    """Name of the listed exceptional graph isomorphic to ``g``, if any."""
    if is_parametric_member(g):
        return parametric_tag(g.n)
    seq = gr.degree_sequence(g)
    for mem in fixed_members():
        if mem.graph.n == g.n and gr.degree_sequence(mem.graph) == seq and is_isomorphic(mem.graph, g):
            return mem.name
    return None


@dataclass(frozen=True)
class MemberAudit:
    name: str
    n: int
    m: int
    edge_threshold: int
    connected: bool
    min_degree: int
    bipartite: bool
    pancyclic: bool
    max_cycle: int | None

    @property
    def valid_exception(self) -> bool:
        return (
            self.connected and self.min_degree >= 2 and not self.bipartite
            and not self.pancyclic and self.m >= self.edge_threshold
        )

    @property
    def meets_threshold_exactly(self) -> bool:
        return self.m == self.edge_threshold


def audit_graph(name: str, g: Graph) -> MemberAudit:
    cs = cycle_spectrum(g)
    return MemberAudit(
        name=name,
        n=g.n,
        m=g.m,
        edge_threshold=edge_threshold(g.n),
        connected=gr.is_connected(g),
        min_degree=g.min_degree,
        bipartite=gr.is_bipartite(g),
        pancyclic=cs.pancyclic,
        max_cycle=cs.max_length,
    )


@cache
def audit() -> tuple[MemberAudit, ...]:
    """Oracle check of every fixed member."""
    return tuple(audit_graph(mem.name, mem.graph) for mem in fixed_members())


def audit_parametric(orders=range(5, 13)) -> tuple[MemberAudit, ...]:
    return tuple(audit_graph(parametric_tag(n), parametric_member(n)) for n in orders)


@cache
def confirmed_exception_names() -> frozenset[str]:
    return frozenset(a.name for a in audit() if a.valid_exception)


def recognize_confirmed(g: Graph) -> str | None:
    """Like :func:`recognize_exceptional`, restricted to oracle-confirmed members."""
    tag = recognize_exceptional(g)
    if tag is None:
        return None
    if tag.startswith(PARAMETRIC_NAME) or tag in confirmed_exception_names():
        return tag
    return None
