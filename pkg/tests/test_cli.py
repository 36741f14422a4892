import io
import json

import pytest

from dtdlab.cli import run


def _run(*argv, stdin=""):
    out = io.StringIO()
    code = run(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_solve_family_json():
    code, text = _run("solve", "--family", "C(7)", "--json")
    assert code == 0
    assert json.loads(text) == {"gamma_td": 4, "witness": [0, 1, 2, 3]}


def test_solve_edges_and_total():
    assert json.loads(_run("solve", "--edges", "4:0-1,1-2,2-3,3-0", "--json")[1])["gamma_td"] == 2
    assert json.loads(_run("solve", "--edges", "6:0-1,1-2,2-3,3-4,4-5,5-0", "--total", "--json")[1])["gamma_t"] == 4


def test_solve_constraints_and_infeasible():
    code, text = _run("solve", "--family", "C(5)", "--include", "0", "--exclude", "1", "--json")
    d = json.loads(text)
    assert code == 0 and 0 in d["witness"] and 1 not in d["witness"]
    code, text = _run("solve", "--family", "C(5)", "--target", "1", "--json")
    assert code == 0 and json.loads(text)["witness"] is None


def test_gen_then_solve_round_trip():
    _, g6 = _run("gen", "--n", "6")
    assert len(g6.split()) == 61
    code, solved = _run("solve", "--stdin-graph6", "--json", stdin=g6)
    assert code == 0 and len(solved.splitlines()) == 61
    _, again = _run("gen", "--family", "Db(3,4,1)")
    _, via_family = _run("solve", "--family", "Db(3,4,1)", "--json")
    assert _run("solve", "--stdin-graph6", "--json", stdin=again)[1] == via_family


def test_gen_sample_is_seeded():
    a = _run("gen", "--sample", "--count", "4", "--seed", "7")[1]
    assert a == _run("gen", "--sample", "--count", "4", "--seed", "7")[1]
    assert len(a.split()) == 4


def test_formula_verbs():
    assert json.loads(_run("formula", "cycle", "12", "--json")[1]) == {"value": 6}
    assert json.loads(_run("formula", "key", "3,1", "--json")[1])["flags"] == ["star"]
    assert json.loads(_run("formula", "bound", "20,2", "--connected", "--json")[1])["value"] == 9
    assert _run("formula", "bound", "5,1")[1].strip() == "no bound applies"


def test_iso_and_classify():
    d = json.loads(_run("iso", "Db(3,3,3)", "G(0;2,0)", "--json")[1])
    assert d["isomorphic"] and d["canonical"][0] == d["canonical"][1]
    assert _run("iso", "C(6)", "6:0-1,1-2,2-0,3-4,4-5,5-3")[1].strip() == "not isomorphic"
    assert json.loads(_run("classify", "--family", "C(8)", "--json")[1])["tag"] == "thm4-equality"


def test_census_and_verify():
    d = json.loads(_run("census", "--n", "5", "--json")[1])
    assert d["graphs"] == 11
    code, text = _run("verify", "--suite", "named", "--json")
    assert code == 0 and json.loads(text)["summary"]["pass"] == 1


@pytest.mark.parametrize("argv", [
    ("solve", "--family", "Q(3)"),
    ("solve", "--edges", "3:0-9"),
    ("verify", "--suite", "bogus"),
    ("gen",),
    ("gen", "--n", "12"),
    ("census",),
    ("formula", "key", "3"),
    ("nonsense",),
])
def test_usage_errors_exit_2(argv):
    assert _run(*argv)[0] == 2


def test_failing_suite_exits_1():
    # the observation suite has known red statements
    code, _ = _run("verify", "--suite", "observations", "--cap-order", "9")
    assert code == 1
