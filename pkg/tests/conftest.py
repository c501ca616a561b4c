from __future__ import annotations

import random

import networkx as nx
import pytest

from pancyclic import graph as gr

_CRITERIA: list[str] = []


def random_graph(rng: random.Random, n: int, p: float | None = None) -> gr.Graph:
    p = rng.random() if p is None else p
    return gr.build(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int) -> gr.Graph:
    """Random spanning tree plus edges of a random density."""
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    p = rng.random() ** 2
    edges += [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return gr.build(n, edges)


def to_nx(g: gr.Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_cycle_lengths(g: gr.Graph) -> set[int]:
    return {len(c) for c in nx.simple_cycles(to_nx(g))}


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def report(number: int, ok: bool, detail: str):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        _CRITERIA.append(line)
        print(line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
