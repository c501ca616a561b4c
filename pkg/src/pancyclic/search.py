"""Exhaustive labeled enumeration that checks the three theorem conditions.

Every graph on n labeled vertices is an edge bitmask of length C(n, 2).
Masks are processed in contiguous ranges: connectivity, minimum degree and
both spectral radii are computed for a whole range at once with numpy, and
only graphs meeting a theorem's hypothesis go to the cycle oracle.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import catalog
from .certify import edge_threshold, mu_threshold, q_threshold
from .cycles import is_pancyclic
from .graph import Graph, build, is_bipartite
from .graph6 import encode
from .isomorphism import is_isomorphic

log = logging.getLogger(__name__)

THEOREMS = ("3.1", "3.2", "3.3")
CHUNK = 1 << 16


def pair_list(n: int) -> list[tuple[int, int]]:
    """Bit ``e`` of an edge mask is the pair ``pair_list(n)[e]``."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    return build(n, [pairs[e] for e in range(len(pairs)) if mask >> e & 1])


@dataclass
class TheoremTally:
    hypothesis_met: int = 0
    confirmed: int = 0
    bipartite_escapes: int = 0
    exceptional_escapes: Counter = field(default_factory=Counter)
    would_be_counterexamples: list[str] = field(default_factory=list)

    def merge(self, other: TheoremTally) -> TheoremTally:
        return TheoremTally(
            self.hypothesis_met + other.hypothesis_met,
            self.confirmed + other.confirmed,
            self.bipartite_escapes + other.bipartite_escapes,
            self.exceptional_escapes + other.exceptional_escapes,
            sorted(self.would_be_counterexamples + other.would_be_counterexamples, key=str.encode),
        )

    @property
    def verified(self) -> bool:
        return not self.would_be_counterexamples

    @property
    def consistent(self) -> bool:
        escapes = sum(self.exceptional_escapes.values())
        return self.hypothesis_met == (
            self.confirmed + self.bipartite_escapes + escapes + len(self.would_be_counterexamples)
        )

    def to_dict(self) -> dict:
        return {
            "hypothesis_met": self.hypothesis_met,
            "confirmed": self.confirmed,
            "bipartite_escapes": self.bipartite_escapes,
            "exceptional_escapes": dict(sorted(self.exceptional_escapes.items())),
            "would_be_counterexamples": list(self.would_be_counterexamples),
            "verified": self.verified,
        }


@dataclass
class SearchReport:
    n: int
    theorems: tuple[str, ...]
    graphs_enumerated: int = 0
    hypothesis_survivors: int = 0  # connected with minimum degree >= 2
    tallies: dict[str, TheoremTally] = field(default_factory=dict)

    def merge(self, other: SearchReport) -> SearchReport:
        return SearchReport(
            self.n,
            self.theorems,
            self.graphs_enumerated + other.graphs_enumerated,
            self.hypothesis_survivors + other.hypothesis_survivors,
            {t: self.tallies[t].merge(other.tallies[t]) for t in self.theorems},
        )

    @property
    def verified(self) -> bool:
        return all(t.verified for t in self.tallies.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "theorems": list(self.theorems),
            "graphs_enumerated": self.graphs_enumerated,
            "hypothesis_survivors": self.hypothesis_survivors,
            "tallies": {t: self.tallies[t].to_dict() for t in self.theorems},
            "verified": self.verified,
        }

    def lines(self) -> list[str]:
        out = [
            f"n={self.n}: {self.graphs_enumerated} labeled graphs, "
            f"{self.hypothesis_survivors} connected with min degree >= 2"
        ]
        for t in self.theorems:
            tally = self.tallies[t]
            status = "VERIFIED" if tally.verified else "COUNTEREXAMPLE"
            out.append(
                f"  theorem {t}: {status}  hypothesis met {tally.hypothesis_met}, "
                f"pancyclic {tally.confirmed}, bipartite {tally.bipartite_escapes}, "
                f"exceptional {sum(tally.exceptional_escapes.values())}"
            )
            for name, count in sorted(tally.exceptional_escapes.items()):
                out.append(f"    escape {name}: {count} labeled copies")
            for g6 in tally.would_be_counterexamples:
                out.append(f"    counterexample {g6}")
        return out


def _empty_report(n: int, theorems) -> SearchReport:
    return SearchReport(n, tuple(theorems), tallies={t: TheoremTally() for t in theorems})


def _range_arrays(n: int, lo: int, hi: int):
    """Survivor masks in [lo, hi) and their adjacency/degree arrays."""
    pairs = pair_list(n)
    masks = np.arange(lo, hi, dtype=np.int64)
    nbr = [np.zeros(len(masks), dtype=np.int64) for _ in range(n)]
    deg = np.zeros((n, len(masks)), dtype=np.int64)
    for e, (i, j) in enumerate(pairs):
        bit = (masks >> e) & 1
        nbr[i] |= bit << j
        nbr[j] |= bit << i
        deg[i] += bit
        deg[j] += bit
    ok = deg.min(axis=0) >= 2
    reach = np.ones(len(masks), dtype=np.int64)
    for _ in range(n - 1):
        grown = reach.copy()
        for v in range(n):
            grown |= np.where((reach >> v) & 1 == 1, nbr[v], 0)
        reach = grown
    ok &= reach == (1 << n) - 1
    masks, deg = masks[ok], deg[:, ok]
    adj = np.zeros((len(masks), n, n))
    for e, (i, j) in enumerate(pairs):
        bit = (masks >> e) & 1
        adj[:, i, j] = bit
        adj[:, j, i] = bit
    return masks, adj, deg


class _Oracle:
    """Per-mask cache of the facts the tallies need."""

    def __init__(self, n: int):
        self.n = n
        self.cache: dict[int, tuple] = {}
        self.signless_exception = catalog.member(catalog.SIGNLESS_EXCEPTION).graph

    def facts(self, mask: int):
        if mask not in self.cache:
            g = graph_from_mask(self.n, mask)
            self.cache[mask] = (g, is_pancyclic(g), is_bipartite(g))
        return self.cache[mask]

    def classify(self, mask: int, theorem: str, tally: TheoremTally):
        g, pancyclic, bipartite = self.facts(mask)
        tally.hypothesis_met += 1
        if pancyclic:
            tally.confirmed += 1
            return
        if bipartite:
            tally.bipartite_escapes += 1
            return
        name = None
        if theorem == "3.1":
            name = catalog.recognize_exceptional(g)
        elif theorem == "3.3" and is_isomorphic(g, self.signless_exception):
            name = catalog.SIGNLESS_EXCEPTION
        if name is not None:
            tally.exceptional_escapes[name] += 1
        else:
            tally.would_be_counterexamples.append(encode(g))


def search_range(n: int, theorems, lo: int, hi: int, tol: float = 1e-9) -> SearchReport:
    report = _empty_report(n, theorems)
    report.graphs_enumerated = hi - lo
    oracle = _Oracle(n)
    for start in range(lo, hi, CHUNK):
        masks, adj, deg = _range_arrays(n, start, min(hi, start + CHUNK))
        report.hypothesis_survivors += len(masks)
        if not len(masks):
            continue
        met = {}
        if "3.1" in theorems:
            met["3.1"] = masks[deg.sum(axis=0) // 2 >= edge_threshold(n)]
        if "3.2" in theorems:
            mu = np.linalg.eigvalsh(adj)[:, -1]
            met["3.2"] = masks[mu >= mu_threshold(n) - tol]
        if "3.3" in theorems:
            q = np.linalg.eigvalsh(adj + deg.T[:, :, None] * np.eye(n))[:, -1]
            met["3.3"] = masks[q >= q_threshold(n) - tol]
        for t in theorems:
            for mask in met[t].tolist():
                oracle.classify(mask, t, report.tallies[t])
    for t in theorems:
        report.tallies[t].would_be_counterexamples.sort(key=str.encode)
    return report


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    step = math.ceil(total / parts)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _run(args):
    return search_range(*args)


def search(n: int, theorems=THEOREMS, workers: int = 1, tol: float = 1e-9, max_n: int = 7,
           progress: bool = False) -> SearchReport:
    if not 5 <= n <= max_n:
        raise ValueError(f"search order {n} outside [5, {max_n}]")
    theorems = tuple(t for t in THEOREMS if t in theorems)
    if not theorems:
        raise ValueError("no theorem selected")
    total = 1 << (n * (n - 1) // 2)
    # many more ranges than workers, so progress can be reported
    ranges = _split(total, max(workers * 8, total // (CHUNK * 16), 1))
    report = _empty_report(n, theorems)
    jobs = [(n, theorems, lo, hi, tol) for lo, hi in ranges]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(_run, jobs)
            for i, part in enumerate(parts, 1):
                report = report.merge(part)
                if progress:
                    log.info("range %d/%d done", i, len(jobs))
    else:
        for i, job in enumerate(jobs, 1):
            report = report.merge(_run(job))
            if progress:
                log.info("range %d/%d done", i, len(jobs))
    return report
