import json

import pytest

from dtdlab import census as cz
from dtdlab.generate import SamplerConfig, enumerate_connected_min2
from dtdlab.io import emit_graph6


def _check_invariant(r):
    assert (r.status == cz.PASS) == (not r.counterexamples and r.instances_checked > 0)
    assert r.counterexamples == sorted(r.counterexamples)


def test_report_status_rules():
    assert cz._report("x", 0, [], 0.0).status == cz.SKIPPED
    assert cz._report("x", 3, [], 0.0).status == cz.PASS
    r = cz._report("x", 3, [("b", "2"), ("a", "1")], 0.0)
    assert r.status == cz.FAIL and r.counterexamples == [("a", "1"), ("b", "2")]
    merged = cz.merge("m", [cz._report("p", 2, [], 0.0), r])
    assert merged.status == cz.FAIL and merged.instances_checked == 5


def test_formulas_small_caps():
    r = cz.verify_formulas(cycle_cap=12, path_cap=12, key_r=7, key_s=5)
    _check_invariant(r)
    assert r.passed


def test_named_values():
    assert cz.verify_named_values().passed


def test_daisies_and_dumbbells_small():
    for r in (cz.verify_daisies(10), cz.verify_dumbbells(10)):
        _check_invariant(r)
        assert r.passed


def test_half_n_census_small_order():
    # the n/2 bound needs order >= 8; at order 7 a census still runs cleanly
    r = cz.verify_theorem_n2(7)
    _check_invariant(r)


@pytest.mark.parametrize("n, names", [(3, {"C(3)"}), (5, {"C(5)", "B1", "D(3,3)"})])
def test_half_minimal_small(n, names):
    r = cz.verify_half_minimal_census(n)
    assert r.passed
    assert set(cz.expected_half_minimal(n).values()) == names


def test_threads_do_not_change_report():
    one = cz.verify_theorem_n2(8, threads=1)
    two = cz.verify_theorem_n2(8, threads=2)
    a, b = one.to_dict(), two.to_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_graph6_ingestion_matches_enumeration():
    gs = list(enumerate_connected_min2(7))
    streamed = cz.verify_half_minimal_census(7, graphs=gs)
    direct = cz.verify_half_minimal_census(7)
    assert streamed.instances_checked == direct.instances_checked == len(gs)
    assert streamed.counterexamples == direct.counterexamples


def test_exhausted_sampler_is_skipped():
    cfg = SamplerConfig(seed=0, count=2, min_order=3, max_order=3, constraints=("min-degree-2",),
                        edge_factor=0.05, budget=20)
    r = cz.verify_sampled_nminus1(cfg)
    assert r.status == cz.SKIPPED and r.instances_checked == 0
    assert cz.verify_structural_properties(cfg).status == cz.SKIPPED


def test_small_property_run():
    r = cz.verify_structural_properties(cz.default_property_sampler(seed=3, count=60))
    _check_invariant(r)
    assert r.passed


def test_json_document():
    reports = [cz.verify_named_values(), cz._report("empty", 0, [], 0.0)]
    doc = json.loads(cz.dump_reports(reports))
    assert doc["summary"] == {"pass": 1, "fail": 0, "skipped": 1}
    assert {"claim_id", "instances_checked", "counterexamples", "elapsed", "status"} <= set(doc["reports"][0])
    assert cz.summary_table(reports).splitlines()[1].split()[:2] == ["named-values", "pass"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        cz.run_suite("nope")


def test_stream_round_trip_via_graph6():
    g6 = [emit_graph6(g) for g in enumerate_connected_min2(6)]
    assert len(set(g6)) == len(g6) == 61
