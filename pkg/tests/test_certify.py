import itertools
import json

import numpy as np
import pytest

from pancyclic import graph as gr
from pancyclic.certify import (
    Condition, Verdict, certify, certify_edges, certify_mu, certify_q, lemma21_check, mu_threshold,
    q_threshold,
)
from pancyclic.cycles import is_pancyclic
from pancyclic.expr import graph_from_expr
from pancyclic.graph import DegreeSequence, degree_sequence
from pancyclic.search import graph_from_mask


def test_lemma21_examples():
    assert lemma21_check(degree_sequence(gr.complete(7))).holds
    c5 = lemma21_check(DegreeSequence((2, 2, 2, 2, 2)))
    assert not c5.holds and c5.violations == (2,)
    np1 = lemma21_check(DegreeSequence((3, 3, 3, 4, 4, 7, 7, 7)))
    assert np1.violations == (3,)
    assert np1.trace == ((3, 3, 4),)


def test_lemma21_definition_bruteforce():
    for n in range(3, 9):
        for degs in itertools.combinations_with_replacement(range(n), n):
            if sum(degs) % 2:
                continue
            d = DegreeSequence(degs)
            expected = [k for k in range(1, n) if k < n / 2 and degs[k - 1] <= k and degs[n - k - 1] < n - k]
            assert list(lemma21_check(d).violations) == expected


def test_thresholds():
    assert mu_threshold(7) == pytest.approx(4.6904, abs=5e-5)
    assert mu_threshold(9) == pytest.approx(6.4807, abs=5e-5)
    assert q_threshold(7) == pytest.approx(9.6667, abs=5e-5)
    assert q_threshold(9) == pytest.approx(13.25)


def test_certify_edges_examples():
    k7 = certify_edges(gr.complete(7))
    assert k7.verdict is Verdict.PANCYCLIC and k7.evidence.edge_threshold == 14
    k5 = certify_edges(graph_from_expr("K5 v 6*K1"))
    assert k5.verdict is Verdict.EXCEPTIONAL and k5.exceptional_name == "K5 v 6*K1"
    assert k5.evidence.m == 40 == k5.evidence.edge_threshold
    k44 = certify_edges(gr.complete_bipartite(4, 4))
    assert k44.verdict is Verdict.INCONCLUSIVE and k44.evidence.edge_threshold == 19


@pytest.mark.parametrize(
    "g, reason",
    [(gr.complete(4), "order"), (gr.disjoint_union(gr.complete(4), gr.complete(3)), "disconnected"),
     (graph_from_expr("K1 v (K5 + K1)"), "minimum degree")],
)
def test_hypothesis_failures_are_inconclusive(g, reason):
    for fn in (certify_edges, certify_mu, certify_q):
        cert = fn(g)
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert reason in cert.evidence.hypothesis_reason


def test_certify_mu_examples():
    k7 = certify_mu(gr.complete(7))
    assert k7.verdict is Verdict.PANCYCLIC and k7.evidence.mu == pytest.approx(6)
    for expr, mu, thr in (("K3 v 4*K1", 4.6056, 4.6904), ("K4 v 5*K1", 6.2170, 6.4807)):
        cert = certify_mu(graph_from_expr(expr))
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.evidence.mu == pytest.approx(mu, abs=5e-4)
        assert cert.evidence.mu_threshold == pytest.approx(thr, abs=5e-4)


def test_certify_q_examples():
    ex = certify_q(graph_from_expr("K3 v 4*K1"))
    assert ex.verdict is Verdict.EXCEPTIONAL and ex.exceptional_name == "K3 v 4*K1"
    assert ex.evidence.q == pytest.approx(9.7720, abs=5e-4)
    k4 = certify_q(graph_from_expr("K4 v 5*K1"))
    assert k4.verdict is Verdict.INCONCLUSIVE and k4.evidence.q == pytest.approx(13.1789, abs=5e-4)
    k9 = certify_q(gr.complete(9))
    assert k9.verdict is Verdict.PANCYCLIC and k9.evidence.q == pytest.approx(16)


def test_cascade_examples():
    p = certify(gr.petersen())
    assert p.verdict is Verdict.ORACLE_CONFIRMED and p.oracle_pancyclic is False
    assert 3 not in p.evidence.cycle_lengths
    c5 = certify(gr.cycle(5))
    assert c5.verdict is Verdict.ORACLE_CONFIRMED and c5.oracle_pancyclic is False
    good = certify(graph_from_expr("K2 v (K2 + K{1,2})"))
    assert good.verdict is Verdict.PANCYCLIC or good.oracle_pancyclic is True


def test_cascade_order():
    assert certify(gr.complete(7)).fired_condition is Condition.EDGE_COUNT
    assert certify(graph_from_expr("K3 v 4*K1")).fired_condition is Condition.EDGE_COUNT
    # n < 5 skips the theorems; degree sequence settles K4
    assert certify(gr.complete(4)).fired_condition is Condition.DEGREE_SEQUENCE
    assert certify(gr.complete_bipartite(3, 3)).verdict is Verdict.BIPARTITE


def test_refuted_member_gets_pancyclic_with_note():
    cert = certify(graph_from_expr("K3 v (K2 + K{1,3})"))
    assert cert.verdict is Verdict.PANCYCLIC
    assert cert.notes and "pancyclic" in cert.notes[0]


def test_small_and_large_orders():
    assert certify(gr.complete(2)).verdict is Verdict.INCONCLUSIVE
    big = gr.cycle(20)
    cert = certify(big)
    assert cert.verdict is Verdict.INCONCLUSIVE and "oracle limit" in cert.notes[0]
    assert certify(big, oracle_max_n=20).oracle_pancyclic is False


def test_deterministic_and_serializable():
    g = gr.petersen()
    a, b = certify(g), certify(g)
    assert a.to_dict() == b.to_dict()
    data = json.loads(a.to_json())
    assert data["verdict"] == "oracle-confirmed"
    assert data["fired_condition"] == "oracle"
    assert set(data["evidence"]["witnesses"]) == {"5", "6", "8", "9"}


@pytest.mark.parametrize("n", [5, 6])
def test_soundness_exhaustive(n):
    """Every theorem-stage or degree-stage verdict agrees with the oracle."""
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        g = graph_from_mask(n, mask)
        if not gr.is_connected(g) or g.min_degree < 2:
            continue
        cert = certify(g)
        truth = is_pancyclic(g)
        if cert.verdict is Verdict.PANCYCLIC:
            assert truth
        elif cert.verdict in (Verdict.BIPARTITE, Verdict.EXCEPTIONAL):
            assert not truth
        else:
            assert cert.oracle_pancyclic == truth
        if cert.fired_condition is Condition.DEGREE_SEQUENCE:
            assert cert.verdict is not Verdict.PANCYCLIC or not gr.is_bipartite(g)


def test_lemma_stage_never_pancyclic_on_bipartite():
    for g in (gr.complete_bipartite(3, 3), gr.complete_bipartite(4, 4), gr.cycle(6)):
        cert = certify(g)
        assert cert.verdict is not Verdict.PANCYCLIC


@pytest.mark.slow
def test_degree_stage_soundness_n7():
    from pancyclic.search import _range_arrays

    n = 7
    checked = 0
    for lo in range(0, 1 << 21, 1 << 16):
        masks, _, deg = _range_arrays(n, lo, lo + (1 << 16))
        seqs = np.sort(deg, axis=0)
        holds = np.ones(len(masks), dtype=bool)
        for k in range(1, 4):
            holds &= ~((seqs[k - 1] <= k) & (seqs[n - k - 1] < n - k))
        for mask in masks[holds].tolist():
            g = graph_from_mask(n, mask)
            assert lemma21_check(degree_sequence(g)).holds
            assert is_pancyclic(g) or gr.is_bipartite(g)
            checked += 1
    assert checked > 0
