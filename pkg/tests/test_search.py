import pytest

from pancyclic import catalog
from pancyclic import graph as gr
from pancyclic import search as srch
from pancyclic.graph6 import decode


def test_n5_all_theorems():
    report = srch.search(5)
    assert report.graphs_enumerated == 1024
    assert report.verified
    for tally in report.tallies.values():
        assert tally.consistent
    assert dict(report.tallies["3.1"].exceptional_escapes) == {catalog.parametric_tag(5): 10}


def test_n5_survivor_count_independent():
    count = 0
    for mask in range(1024):
        g = srch.graph_from_mask(5, mask)
        if gr.is_connected(g) and g.min_degree >= 2:
            count += 1
    assert srch.search(5, ("3.1",)).hypothesis_survivors == count


def test_n5_survivors_by_complement():
    # connected with min degree >= 2 <=> not (disconnected or has a vertex of degree <= 1)
    total = 1024
    bad = 0
    for mask in range(total):
        g = srch.graph_from_mask(5, mask)
        if not gr.is_connected(g) or g.min_degree <= 1:
            bad += 1
    assert srch.search(5, ("3.2",)).hypothesis_survivors == total - bad


def test_n6_spectral():
    report = srch.search(6, ("3.2", "3.3"))
    assert report.verified
    assert report.tallies["3.2"].hypothesis_met > 0


def test_determinism_across_workers():
    one = srch.search(6, workers=1)
    two = srch.search(6, workers=2)
    assert one.to_dict() == two.to_dict()


def test_range_split_is_associative():
    whole = srch.search_range(5, srch.THEOREMS, 0, 1024)
    parts = srch._empty_report(5, srch.THEOREMS)
    for lo, hi in srch._split(1024, 7):
        parts = parts.merge(srch.search_range(5, srch.THEOREMS, lo, hi))
    assert parts.to_dict() == whole.to_dict()


@pytest.mark.parametrize("n", [4, 8, 9])
def test_order_guard(n):
    with pytest.raises(ValueError):
        srch.search(n)


def test_mask_layout_matches_pairs():
    g = srch.graph_from_mask(4, 0b000001)
    assert g.edges() == [(0, 1)]
    assert srch.graph_from_mask(4, 0b111111) == gr.complete(4)


def test_counterexamples_are_reported(monkeypatch):
    # hide the exception list; its members must then show up as counterexamples
    monkeypatch.setattr(catalog, "recognize_exceptional", lambda g: None)
    report = srch.search(6, ("3.1",))
    tally = report.tallies["3.1"]
    assert not report.verified and tally.consistent
    assert len(tally.would_be_counterexamples) == 90
    assert tally.would_be_counterexamples == sorted(tally.would_be_counterexamples, key=str.encode)
    assert all(catalog.is_parametric_member(decode(g6)) for g6 in tally.would_be_counterexamples)
