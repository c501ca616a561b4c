"""Deciding pancyclicity from sufficient conditions, with a cycle oracle fallback.

Three theorem conditions apply to connected graphs on n >= 5 vertices with
minimum degree at least 2:

* edge count      m >= C(n-2, 2) + 4      (pancyclic, bipartite, or a listed exception)
* signless radius q >= 10/(n-1) + 2n - 6  (pancyclic, bipartite, or K3 v 4*K1)
* adjacency radius mu >= sqrt(n^2 - 6n + 15)  (pancyclic or bipartite)

The degree-sequence condition needs no hypothesis: if every k with
``d_k <= k < n/2`` has ``d_{n-k} >= n-k``, the graph is pancyclic or bipartite.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from enum import Enum

from . import catalog
from . import graph as gr
from .cycles import DEFAULT_ORDER_GUARD, cycle_spectrum
from .graph import DegreeSequence, Graph
from .isomorphism import is_isomorphic
from .spectral import DEFAULT_TOL, adjacency_radius, signless_laplacian_radius


class Verdict(str, Enum):
    PANCYCLIC = "pancyclic"
    BIPARTITE = "bipartite"
    EXCEPTIONAL = "exceptional"
    INCONCLUSIVE = "inconclusive"
    ORACLE_CONFIRMED = "oracle-confirmed"


class Condition(str, Enum):
    DEGREE_SEQUENCE = "degree-sequence"
    EDGE_COUNT = "edge-count"
    ADJACENCY_RADIUS = "adjacency-radius"
    SIGNLESS_RADIUS = "signless-radius"
    ORACLE = "oracle"
    NONE = "none"


def mu_threshold(n: int) -> float:
    return math.sqrt(n * n - 6 * n + 15)


def q_threshold(n: int) -> float:
    return 10 / (n - 1) + 2 * n - 6


edge_threshold = catalog.edge_threshold


@dataclass(frozen=True)
class Lemma21Result:
    holds: bool
    violations: tuple[int, ...]
    trace: tuple[tuple[int, int, int], ...]  # (k, d_k, d_{n-k}) for each k with d_k <= k < n/2


def lemma21_check(d: DegreeSequence) -> Lemma21Result:
    n = d.n
    if n < 3:
        raise ValueError("the degree-sequence condition needs n >= 3")
    trace, violations = [], []
    k = 1
    while 2 * k < n:
        if d[k] <= k:
            trace.append((k, d[k], d[n - k]))
            if d[n - k] < n - k:
                violations.append(k)
        k += 1
    return Lemma21Result(not violations, tuple(violations), tuple(trace))


@dataclass
class Evidence:
    n: int
    m: int
    connected: bool
    min_degree: int
    bipartite: bool
    hypothesis_reason: str | None = None
    edge_threshold: int | None = None
    mu: float | None = None
    mu_threshold: float | None = None
    mu_near_threshold: bool = False
    q: float | None = None
    q_threshold: float | None = None
    q_near_threshold: bool = False
    degree_sequence: tuple[int, ...] | None = None
    lemma21_holds: bool | None = None
    lemma21_violations: tuple[int, ...] | None = None
    cycle_lengths: tuple[int, ...] | None = None
    witnesses: dict[int, tuple[int, ...]] | None = None

    @property
    def hypothesis_ok(self) -> bool:
        return self.hypothesis_reason is None


@dataclass
class Certificate:
    verdict: Verdict
    fired_condition: Condition
    evidence: Evidence
    exceptional_name: str | None = None
    oracle_pancyclic: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        ev = asdict(self.evidence)
        if ev["witnesses"] is not None:
            ev["witnesses"] = {str(k): list(v) for k, v in sorted(ev["witnesses"].items())}
        for key in ("degree_sequence", "lemma21_violations", "cycle_lengths"):
            if ev[key] is not None:
                ev[key] = list(ev[key])
        return {
            "verdict": self.verdict.value,
            "fired_condition": self.fired_condition.value,
            "exceptional_name": self.exceptional_name,
            "oracle_pancyclic": self.oracle_pancyclic,
            "notes": list(self.notes),
            "evidence": ev,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)


def _evidence(g: Graph) -> Evidence:
    ev = Evidence(
        n=g.n,
        m=g.m,
        connected=gr.is_connected(g),
        min_degree=g.min_degree,
        bipartite=gr.is_bipartite(g),
    )
    if g.n < 5:
        ev.hypothesis_reason = f"order {g.n} < 5"
    elif not ev.connected:
        ev.hypothesis_reason = "graph is disconnected"
    elif ev.min_degree < 2:
        ev.hypothesis_reason = f"minimum degree {ev.min_degree} < 2"
    return ev


def _inconclusive(ev: Evidence, cond=Condition.NONE) -> Certificate:
    return Certificate(Verdict.INCONCLUSIVE, cond, ev)


def _edge_stage(g: Graph, ev: Evidence) -> Certificate:
    if not ev.hypothesis_ok:
        return _inconclusive(ev)
    ev.edge_threshold = edge_threshold(g.n)
    if g.m < ev.edge_threshold:
        return _inconclusive(ev)
    if ev.bipartite:
        return Certificate(Verdict.BIPARTITE, Condition.EDGE_COUNT, ev)
    name = catalog.recognize_confirmed(g)
    if name is not None:
        return Certificate(Verdict.EXCEPTIONAL, Condition.EDGE_COUNT, ev, exceptional_name=name)
    cert = Certificate(Verdict.PANCYCLIC, Condition.EDGE_COUNT, ev)
    listed = catalog.recognize_exceptional(g)
    if listed is not None:
        cert.notes.append(f"{listed} is listed as exceptional but the cycle oracle finds it pancyclic")
    return cert


def _q_stage(g: Graph, ev: Evidence, tol: float) -> Certificate:
    if not ev.hypothesis_ok:
        return _inconclusive(ev)
    ev.q = signless_laplacian_radius(g, tol).radius
    ev.q_threshold = q_threshold(g.n)
    ev.q_near_threshold = abs(ev.q - ev.q_threshold) <= tol
    if ev.q < ev.q_threshold - tol:
        return _inconclusive(ev)
    if ev.bipartite:
        return Certificate(Verdict.BIPARTITE, Condition.SIGNLESS_RADIUS, ev)
    exception = catalog.member(catalog.SIGNLESS_EXCEPTION).graph
    if is_isomorphic(g, exception):
        return Certificate(Verdict.EXCEPTIONAL, Condition.SIGNLESS_RADIUS, ev, exceptional_name=catalog.SIGNLESS_EXCEPTION)
    return Certificate(Verdict.PANCYCLIC, Condition.SIGNLESS_RADIUS, ev)


def _mu_stage(g: Graph, ev: Evidence, tol: float) -> Certificate:
    if not ev.hypothesis_ok:
        return _inconclusive(ev)
    ev.mu = adjacency_radius(g, tol).radius
    ev.mu_threshold = mu_threshold(g.n)
    ev.mu_near_threshold = abs(ev.mu - ev.mu_threshold) <= tol
    if ev.mu < ev.mu_threshold - tol:
        return _inconclusive(ev)
    if ev.bipartite:
        cert = Certificate(Verdict.BIPARTITE, Condition.ADJACENCY_RADIUS, ev)
        cert.notes.append("bipartite graph meets the adjacency-radius condition")
        return cert
    return Certificate(Verdict.PANCYCLIC, Condition.ADJACENCY_RADIUS, ev)


def _lemma_stage(g: Graph, ev: Evidence) -> Certificate:
    seq = gr.degree_sequence(g)
    res = lemma21_check(seq)
    ev.degree_sequence = seq.degrees
    ev.lemma21_holds = res.holds
    ev.lemma21_violations = res.violations
    if not res.holds:
        return _inconclusive(ev)
    verdict = Verdict.BIPARTITE if ev.bipartite else Verdict.PANCYCLIC
    return Certificate(verdict, Condition.DEGREE_SEQUENCE, ev)


def certify_edges(g: Graph) -> Certificate:
    return _edge_stage(g, _evidence(g))


def certify_q(g: Graph, tol: float = DEFAULT_TOL) -> Certificate:
    return _q_stage(g, _evidence(g), tol)


def certify_mu(g: Graph, tol: float = DEFAULT_TOL) -> Certificate:
    return _mu_stage(g, _evidence(g), tol)


def certify(g: Graph, tol: float = DEFAULT_TOL, oracle_max_n: int = DEFAULT_ORDER_GUARD) -> Certificate:
    """Cheapest conclusive answer: edges, then q, then mu, then degrees, then the oracle."""
    ev = _evidence(g)
    if g.n < 3:
        cert = _inconclusive(ev)
        cert.notes.append("pancyclicity is defined for n >= 3")
        return cert
    for stage in (
        lambda: _edge_stage(g, ev),
        lambda: _q_stage(g, ev, tol),
        lambda: _mu_stage(g, ev, tol),
        lambda: _lemma_stage(g, ev),
    ):
        cert = stage()
        if cert.verdict is not Verdict.INCONCLUSIVE:
            return cert
    if g.n > oracle_max_n:
        cert = _inconclusive(ev)
        cert.notes.append(f"order {g.n} exceeds the oracle limit {oracle_max_n}")
        return cert
    cs = cycle_spectrum(g, order_guard=oracle_max_n)
    ev.cycle_lengths = tuple(sorted(cs.lengths))
    ev.witnesses = dict(cs.witnesses)
    return Certificate(Verdict.ORACLE_CONFIRMED, Condition.ORACLE, ev, oracle_pancyclic=cs.pancyclic)
