import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import c5_thread_c5, load_connected
from rainroman.constructions import build_cycle, build_path, c1c2_graph
from rainroman.graph import parse_graph6, write_graph6
from rainroman.harness import (
    CHECKS,
    EQUALITY,
    FAIL,
    NOT_APPLICABLE,
    PASS,
    BoundReport,
    SweepParseError,
    SweepSummary,
    check_bounds,
    evaluate_checks,
    selftest_families,
    sweep,
)


def lines_of(graphs):
    return [write_graph6(g) + "\n" for g in graphs]


def test_check_bounds_c5():
    report = check_bounds(build_cycle(5))
    assert (report.gamma_r2, report.gamma_R) == (3, 4)
    assert report.is_C5
    assert report.checks["SUM_4_3_MINDEG2"] == NOT_APPLICABLE
    assert report.checks["T_AVG_6_4"] == PASS


def test_check_bounds_two_c5_bridge():
    report = check_bounds(c5_thread_c5(1))
    assert report.n == 10 and (report.gamma_r2, report.gamma_R) == (6, 7)
    assert report.checks["SUM_4_3_MINDEG2"] == PASS
    assert report.checks["R_8_11_MINDEG2"] == PASS


def test_check_bounds_two_c5_long_thread():
    report = check_bounds(c5_thread_c5(3))
    assert report.n == 12
    assert report.checks["SUM_4_3_MINDEG2"] == PASS
    assert 3 * (report.gamma_r2 + report.gamma_R) <= 4 * 12


def test_check_bounds_c1c2():
    report = check_bounds(c1c2_graph())
    assert report.checks["T_AVG_6_4"] == EQUALITY
    assert report.in_G
    assert report.checks["WEIGHTED_9_4"] == PASS
    assert 4 * (2 * report.gamma_r2 + report.gamma_R) == 9 * 8


def test_hypotheses_for_disconnected_and_tiny_graphs():
    from rainroman.graph import Graph
    report = check_bounds(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert all(report.checks[c] == NOT_APPLICABLE for c in CHECKS if c != "CHAIN")
    report = check_bounds(build_path(2))
    assert report.checks["T_AVG_6_4"] == NOT_APPLICABLE


def _expected(n, r2, rom, connected, delta, c5):
    """Same verdicts, computed with exact fractions instead of cross-multiplication."""
    def v(applies, lhs, bound):
        if not applies:
            return NOT_APPLICABLE
        return PASS if lhs <= bound else FAIL
    base = connected and n >= 3
    md2 = base and delta >= 2
    avg = v(base, r2 + rom, Fraction(6, 4) * n)
    if avg == PASS and r2 + rom == Fraction(6, 4) * n:
        avg = EQUALITY
    return {
        "CHAIN": PASS if r2 <= rom <= Fraction(3, 2) * r2 else FAIL,
        "R2_3_4": v(base, r2, Fraction(3, 4) * n),
        "R_4_5": v(base, rom, Fraction(4, 5) * n),
        "R2_2_3_MINDEG2": v(md2, r2, Fraction(2, 3) * n),
        "R_8_11_MINDEG2": v(md2 and n >= 9, rom, Fraction(8, 11) * n),
        "T_AVG_6_4": avg,
        "SUM_4_3_MINDEG2": v(md2 and not c5, r2 + rom, Fraction(4, 3) * n),
        "WEIGHTED_9_4": v(base, 2 * r2 + rom, Fraction(9, 4) * n),
    }


@given(st.integers(1, 64), st.integers(0, 64), st.integers(0, 64), st.booleans(),
       st.integers(0, 63), st.booleans())
def test_verdicts_match_fraction_arithmetic(n, r2, rom, connected, delta, c5):
    assert evaluate_checks(n, r2, rom, connected, delta, c5) == _expected(n, r2, rom, connected, delta, c5)


def test_sweep_n4():
    summary = sweep(lines_of(load_connected(4)))
    assert summary.graphs_processed == 6
    assert summary.counterexamples == []
    # the fixture labels P4 differently from build_path, so compare structure
    (line,) = summary.equality_graphs
    g = parse_graph6(line)
    assert g.edge_count() == 3 and sorted(g.degrees()) == [1, 1, 2, 2]
    assert summary.in_G_graphs == summary.equality_graphs


def test_sweep_empty_stream():
    summary = sweep([])
    assert summary.graphs_processed == 0
    assert all(count == 0 for tally in summary.tallies.values() for count in tally.values())
    assert summary.equality_graphs == summary.counterexamples == []


def test_sweep_tallies_sum_to_processed():
    summary = sweep(lines_of(load_connected(6)))
    for tally in summary.tallies.values():
        assert sum(tally.values()) == summary.graphs_processed == 112


def test_sweep_filters():
    graphs = load_connected(5)
    summary = sweep(lines_of(graphs), min_degree=2, exclude_c5=True)
    n_mindeg2 = sum(1 for g in graphs if min(g.degrees()) >= 2)
    assert summary.graphs_processed == n_mindeg2 - 1
    assert summary.graphs_filtered == len(graphs) - n_mindeg2 + 1
    assert summary.tallies["SUM_4_3_MINDEG2"][NOT_APPLICABLE] == 0


def test_sweep_parse_errors():
    lines = ["C~\n", "bogus line\n", "\n", "@\n"]
    summary = sweep(lines)
    assert summary.graphs_processed == 2
    assert summary.parse_errors[0]["line"] == 2
    with pytest.raises(SweepParseError, match="line 2"):
        sweep(lines, strict=True)


def test_sweep_connected_only():
    summary = sweep(["Cc\n", "C~\n"], connected_only=True)
    assert summary.graphs_processed == 1 and summary.graphs_filtered == 1


def test_sweep_is_deterministic_and_order_independent():
    lines = lines_of(load_connected(6))
    first = sweep(lines).to_json()
    assert sweep(lines).to_json() == first
    assert sweep(list(reversed(lines))).to_json() == first
    assert sweep(lines, jobs=2).to_json() == first


def test_counterexample_surfaces_graph6():
    summary = SweepSummary()
    checks = dict.fromkeys(CHECKS, PASS)
    checks["SUM_4_3_MINDEG2"] = FAIL
    summary.add(BoundReport("Dhc", 5, 3, 4, True, 2, True, checks, False))
    assert summary.counterexamples == [
        {"graph6": "Dhc", "check": "SUM_4_3_MINDEG2", "gamma_r2": 3, "gamma_R": 4}
    ]


def test_iff_mismatch_is_a_counterexample():
    summary = SweepSummary()
    checks = dict.fromkeys(CHECKS, PASS)
    summary.add(BoundReport("Cr", 4, 2, 3, True, 1, False, checks, True))
    assert summary.counterexamples[0]["check"] == "EQUALITY_IFF_G"


def test_summary_json_round_trip():
    data = json.loads(sweep(lines_of(load_connected(4))).to_json())
    assert data["graphs_processed"] == 6
    assert set(data["tallies"]) == set(CHECKS)


def test_selftest_k2():
    summary = selftest_families(2)
    assert summary.counterexamples == []
    assert summary.tallies["TK_EXACT"][PASS] == 2
    assert summary.tallies["TK_RECOGNIZED"][PASS] == 2


def test_selftest_spider_set():
    summary = selftest_families(1)
    # 25 leg tuples with 3-4 legs of length <= 3; those with < 3 good legs are filtered
    assert summary.graphs_filtered + summary.tallies["SPIDER_4_3"][PASS] == 25
    assert summary.tallies["SPIDER_4_3"][FAIL] == 0
    for tally in summary.tallies.values():
        assert sum(tally.values()) == summary.graphs_processed


def test_selftest_k3():
    summary = selftest_families(3)
    assert summary.counterexamples == []
    assert summary.tallies["TK_EXACT"][PASS] == 1 + 1 + 3
