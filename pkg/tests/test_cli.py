import io
import json

import pytest

from pancyclic import catalog
from pancyclic import graph as gr
from pancyclic import search as srch
from pancyclic.cli import main
from pancyclic.graph6 import encode


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def certificate(text):
    return json.loads(text[text.index("\n{") + 1:])


def test_check_expression():
    code, text = run("check", "--expr", "K3 v 4*K1")
    assert code == 0
    assert certificate(text)["verdict"] == "exceptional"


def test_check_graph6():
    code, text = run("check", encode(gr.complete(7)))
    assert code == 0 and certificate(text)["verdict"] == "pancyclic"


@pytest.mark.parametrize("argv", [("check", "--expr", "K3 v ("), ("check", "C~~"), ("construct", "K0")])
def test_input_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_construct():
    code, text = run("construct", "K2 v (K4 + 2*K1)")
    assert code == 0
    assert "n: 8" in text and "m: 19" in text
    _, text = run("construct", "K{3,3}")
    assert "bipartite: True" in text and "m: 9" in text
    _, text = run("construct", "2*K3")
    assert "connected: False" in text


def test_tables_exit_and_json(tmp_path):
    path = tmp_path / "tables.json"
    code, text = run("tables", "--json", str(path))
    # two published longest-cycle values disagree with the oracle
    assert code == 2
    assert text.count("[FAIL]") == 2
    cells = json.loads(path.read_text())
    assert len(cells) == 52 and sum(not c["passed"] for c in cells) == 2


def test_search_command(tmp_path):
    path = tmp_path / "search.json"
    code, text = run("search", "--n", "5", "--theorem", "all", "--json", str(path))
    assert code == 0 and "VERIFIED" in text
    data = json.loads(path.read_text())
    assert data["graphs_enumerated"] == 1024 and data["verified"]


@pytest.mark.parametrize("n", ["4", "8"])
def test_search_order_refused(n):
    assert run("search", "--n", n)[0] == 1


def test_bad_flag_values():
    assert run("check", "--tol", "0", "--expr", "K3")[0] == 1
    assert run("bogus")[0] == 1


def test_counterexample_round_trips_through_check(monkeypatch):
    monkeypatch.setattr(catalog, "recognize_exceptional", lambda g: None)
    report = srch.search(6, ("3.1",))
    monkeypatch.undo()
    for g6 in report.tallies["3.1"].would_be_counterexamples[:5]:
        code, text = run("check", g6)
        cert = certificate(text)
        assert code == 0 and cert["verdict"] == "exceptional"
