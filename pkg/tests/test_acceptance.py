"""One test per acceptance criterion, each asserted as written.

Every test records a PASS/FAIL line through ``acceptance_line`` before it
asserts, so the terminal summary lists all eleven even when some are red.
"""

import time

import pytest

from dtdlab import census as cz
from dtdlab.canon import canonical_form
from dtdlab.engine import dtd_number, good_edges, good_vertices, td_number
from dtdlab.families import build_graph
from dtdlab.generate import enumerate_all
from dtdlab.graph import GraphError, is_connected
from dtdlab.io import parse_graph6
from tests.oracles import brute_dtd, brute_good_edges, brute_good_vertices, brute_td


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def _parts(report):
    return ", ".join(f"{k} {v['status']} ({v['counterexamples']} cex)" for k, v in report.details.items()
                     if isinstance(v, dict) and "status" in v)


def test_ac1_cycles(acceptance_line):
    r, dt = _timed(cz.verify_cycles, 25)
    ok = r.passed and r.instances_checked == 23 and dt < 10
    acceptance_line("AC1", ok, f"C3..C25 {r.status}, {len(r.counterexamples)} mismatches, {dt:.2f}s")
    assert ok, r.counterexamples


def test_ac2_paths(acceptance_line):
    r, _ = _timed(cz.verify_paths, 25)
    ok = r.passed and r.instances_checked == 24
    acceptance_line("AC2", ok, f"P2..P25 {r.status}, {len(r.counterexamples)} mismatches")
    assert ok, r.counterexamples


def test_ac3_keys(acceptance_line):
    r = cz.verify_keys(range(3, 13), range(1, 11))
    under = r.details["understated_flags"]
    ok = r.passed
    acceptance_line("AC3", ok, f"{r.instances_checked} keys, r=4 values and printed flags {r.status}; "
                               f"{len(under)} cells with unprinted extra flags")
    assert ok, r.counterexamples


def test_ac4_named_values(acceptance_line):
    r = cz.verify_named_values()
    acceptance_line("AC4", r.passed, f"{r.instances_checked} named values, {len(r.counterexamples)} mismatches")
    assert r.passed, r.counterexamples


def test_ac5_daisies_dumbbells(acceptance_line):
    t0 = time.perf_counter()
    d, b = cz.verify_daisies(13), cz.verify_dumbbells(14)
    dt = time.perf_counter() - t0
    ok = d.passed and b.passed and dt < 120
    acceptance_line("AC5", ok, f"daisies <=13: {d.status} ({d.instances_checked}), dumb-bells <=14: {b.status} "
                               f"({b.instances_checked}), {dt:.1f}s")
    assert ok, d.counterexamples + b.counterexamples


def test_ac6_half_n_census(acceptance_line):
    t0 = time.perf_counter()
    r8, r9 = cz.verify_theorem_n2(8), cz.verify_theorem_n2(9)
    dt = time.perf_counter() - t0
    classes = r8.details["equality_classes"]
    ok = r8.passed and classes == 11 and r9.passed and r9.details["equality_classes"] == 0 and dt < 300
    acceptance_line("AC6", ok, f"n=8 {r8.status} over {r8.instances_checked} graphs with {classes} equality classes "
                               f"(criterion asks 11; F5 and F6 are isomorphic), n=9 {r9.status} with "
                               f"{r9.details['equality_classes']} classes, {dt:.1f}s")
    assert ok


def test_ac7_half_minimal_census(acceptance_line):
    literal = {}
    for name in cz.LISTED_HALF_MINIMAL:
        g = build_graph(name)
        literal.setdefault(g.n, set()).add(canonical_form(g))
    mismatches = []
    for n in range(3, 8):
        _, hits = cz.half_minimal_classes(n)
        found = {canonical_form(parse_graph6(h)) for h in hits}
        if found != literal.get(n, set()):
            extra = len(found - literal.get(n, set()))
            missing = len(literal.get(n, set()) - found)
            mismatches.append(f"n={n}: {extra} unlisted, {missing} listed but absent")
    r8 = cz.verify_half_minimal_census(8)
    ok = not mismatches and r8.passed
    detail = "; ".join(mismatches) or "n=3..7 match the ten graphs"
    acceptance_line("AC7", ok, f"{detail} (C7 is half-minimal but unlisted); n=8 {r8.status} with "
                               f"{r8.details['classes']} classes")
    assert ok


def test_ac8_nminus1_bound(acceptance_line):
    t0 = time.perf_counter()
    h = cz.verify_h_members(range(17, 22))
    s = cz.verify_sampled_nminus1(cz.default_thm6_sampler())
    dt = time.perf_counter() - t0
    ok = h.passed and s.passed and s.instances_checked == 300 and dt < 600
    acceptance_line("AC8", ok, f"{h.instances_checked} H members {h.status}, {s.instances_checked} samples "
                               f"{s.status}, {dt:.1f}s")
    assert ok, h.counterexamples + s.counterexamples


def test_ac9_properties(acceptance_line):
    r = cz.verify_structural_properties(cz.default_property_sampler())
    ok = r.passed and r.instances_checked == 1000
    acceptance_line("AC9", ok, f"{r.instances_checked} graphs, {len(r.counterexamples)} violations")
    assert ok, r.counterexamples[:5]


def test_ac10_observations(acceptance_line):
    r, dt = _timed(cz.verify_family_observations, 17)
    literal = {k: v for k, v in r.details.items() if k != "obs-ndtd1-pendant-sized"}
    ok = all(v["status"] == cz.PASS for v in literal.values() if isinstance(v, dict) and "status" in v) and dt < 600
    acceptance_line("AC10", ok, f"{_parts(r)}; {dt:.1f}s")
    assert ok, r.counterexamples[:5]


def _connected(max_n):
    for n in range(1, max_n + 1):
        yield from (g for g in enumerate_all(n) if is_connected(g))


def test_ac11_oracle_equivalence(acceptance_line):
    bad = []
    count = 0
    for g in _connected(7):
        count += 1
        value, _ = brute_dtd(g)
        if dtd_number(g).value != value:
            bad.append(("dtd", g))
        if td_number(g).value != brute_td(g):
            bad.append(("td", g))
        if value is None:
            # no DTD-set: neither good set exists
            for fn in (good_vertices, good_edges):
                with pytest.raises(GraphError):
                    fn(g)
            continue
        if good_vertices(g).to_list() != brute_good_vertices(g):
            bad.append(("good_vertices", g))
        if sorted(good_edges(g)) != brute_good_edges(g):
            bad.append(("good_edges", g))
    ok = not bad and count == 996
    acceptance_line("AC11", ok, f"{count} connected graphs n<=7, {len(bad)} discrepancies")
    assert ok, bad[:5]
