"""Bound checks per graph, sweeps over graph6 streams and family self-tests.

Every bound is compared by cross-multiplying integers; no floats are used.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .constructions import (
    TkSpec,
    build_spider,
    build_Tk,
    canonical_fk,
    canonical_gk,
    is_in_G,
    is_in_T,
    labeled_trees,
    spider_leg_sets,
)
from .domination import (
    DEFAULT_BUDGET,
    gamma_R_exact,
    gamma_r2_exact,
    is_valid_rainbow,
    is_valid_roman,
    rainbow_weight,
    roman_weight,
)
from .graph import Graph, Graph6Error, is_connected, is_cycle, min_degree, parse_graph6, write_graph6

log = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
NOT_APPLICABLE = "NOT_APPLICABLE"
EQUALITY = "EQUALITY"
VERDICTS = (PASS, FAIL, NOT_APPLICABLE, EQUALITY)

# check id -> human description
CHECKS = {
    "CHAIN": "gamma_r2 <= gamma_R <= 3/2 gamma_r2",
    "R2_3_4": "gamma_r2 <= 3/4 n (connected, n >= 3)",
    "R_4_5": "gamma_R <= 4/5 n (connected, n >= 3)",
    "R2_2_3_MINDEG2": "gamma_r2 <= 2/3 n (connected, min degree >= 2)",
    "R_8_11_MINDEG2": "gamma_R <= 8/11 n (connected, n >= 9, min degree >= 2)",
    "T_AVG_6_4": "gamma_r2 + gamma_R <= 6/4 n (connected, n >= 3)",
    "SUM_4_3_MINDEG2": "gamma_r2 + gamma_R <= 4/3 n (connected, min degree >= 2, not C5)",
    "WEIGHTED_9_4": "2 gamma_r2 + gamma_R <= 9/4 n (connected, n >= 3)",
}


@dataclass
class BoundReport:
    graph6: str
    n: int
    gamma_r2: int
    gamma_R: int
    connected: bool
    min_degree: int
    is_C5: bool
    checks: dict[str, str]
    in_G: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _verdict(applies: bool, lhs: int, rhs: int) -> str:
    if not applies:
        return NOT_APPLICABLE
    return PASS if lhs <= rhs else FAIL


def evaluate_checks(n: int, r2: int, rom: int, connected: bool, delta: int,
                    is_c5: bool) -> dict[str, str]:
    """Verdict for every check from the two optima and the graph's hypotheses."""
    base = connected and n >= 3
    mindeg2 = base and delta >= 2
    avg = _verdict(base, 4 * (r2 + rom), 6 * n)
    if avg == PASS and 4 * (r2 + rom) == 6 * n:
        avg = EQUALITY
    return {
        "CHAIN": PASS if r2 <= rom and 2 * rom <= 3 * r2 else FAIL,
        "R2_3_4": _verdict(base, 4 * r2, 3 * n),
        "R_4_5": _verdict(base, 5 * rom, 4 * n),
        "R2_2_3_MINDEG2": _verdict(mindeg2, 3 * r2, 2 * n),
        "R_8_11_MINDEG2": _verdict(mindeg2 and n >= 9, 11 * rom, 8 * n),
        "T_AVG_6_4": avg,
        "SUM_4_3_MINDEG2": _verdict(mindeg2 and not is_c5, 3 * (r2 + rom), 4 * n),
        "WEIGHTED_9_4": _verdict(base, 4 * (2 * r2 + rom), 9 * n),
    }


def check_bounds(g: Graph, budget: int = DEFAULT_BUDGET) -> BoundReport:
    r2, _ = gamma_r2_exact(g, budget)
    rom, _ = gamma_R_exact(g, budget)
    connected = is_connected(g)
    delta = min_degree(g)
    c5 = is_cycle(g, 5)
    return BoundReport(
        graph6=write_graph6(g),
        n=g.n,
        gamma_r2=r2,
        gamma_R=rom,
        connected=connected,
        min_degree=delta,
        is_C5=c5,
        checks=evaluate_checks(g.n, r2, rom, connected, delta, c5),
        in_G=connected and is_in_G(g),
    )


@dataclass
class SweepSummary:
    graphs_processed: int = 0
    graphs_filtered: int = 0
    tallies: dict[str, dict[str, int]] = field(
        default_factory=lambda: {check: dict.fromkeys(VERDICTS, 0) for check in CHECKS}
    )
    equality_graphs: list[str] = field(default_factory=list)
    in_G_graphs: list[str] = field(default_factory=list)
    weighted_equality_graphs: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)

    def add(self, report: BoundReport) -> None:
        self.graphs_processed += 1
        for check, verdict in report.checks.items():
            self.tallies[check][verdict] += 1
            if verdict == FAIL:
                self.counterexamples.append(
                    {"graph6": report.graph6, "check": check,
                     "gamma_r2": report.gamma_r2, "gamma_R": report.gamma_R}
                )
        equality = report.checks["T_AVG_6_4"] == EQUALITY
        if equality:
            self.equality_graphs.append(report.graph6)
        if report.in_G:
            self.in_G_graphs.append(report.graph6)
        if report.checks["WEIGHTED_9_4"] == PASS and 4 * (2 * report.gamma_r2 + report.gamma_R) == 9 * report.n:
            self.weighted_equality_graphs.append(report.graph6)
        # equality in the 6/4 bound must coincide with membership in G
        if report.checks["T_AVG_6_4"] != NOT_APPLICABLE and equality != report.in_G:
            self.counterexamples.append(
                {"graph6": report.graph6, "check": "EQUALITY_IFF_G",
                 "gamma_r2": report.gamma_r2, "gamma_R": report.gamma_R,
                 "equality": equality, "in_G": report.in_G}
            )

    def finalize(self) -> "SweepSummary":
        self.equality_graphs.sort()
        self.in_G_graphs.sort()
        self.weighted_equality_graphs.sort()
        self.counterexamples.sort(key=lambda c: (c["graph6"], c["check"]))
        self.parse_errors.sort(key=lambda e: e["line"])
        return self

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


class SweepParseError(ValueError):
    pass


def _passes_filters(g: Graph, min_deg: Optional[int], exclude_c5: bool, connected_only: bool) -> bool:
    if connected_only and not is_connected(g):
        return False
    if min_deg is not None and min_degree(g) < min_deg:
        return False
    if exclude_c5 and is_cycle(g, 5):
        return False
    return True


def _check_line(args: tuple[str, int]) -> BoundReport:
    line, budget = args
    return check_bounds(parse_graph6(line), budget)


def sweep(
    lines: Iterable[str],
    min_degree: Optional[int] = None,
    exclude_c5: bool = False,
    connected_only: bool = False,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    strict: bool = False,
) -> SweepSummary:
    """Run :func:`check_bounds` over a graph6 stream and aggregate the verdicts.

    Graphs failing a filter are counted in ``graphs_filtered`` and otherwise
    ignored. Unparseable lines raise :class:`SweepParseError` when ``strict``
    is set and are recorded in ``parse_errors`` otherwise.
    """
    summary = SweepSummary()
    todo: list[str] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise SweepParseError(f"line {lineno}: {exc}") from exc
            summary.parse_errors.append({"line": lineno, "text": line, "error": str(exc)})
            continue
        if not _passes_filters(g, min_degree, exclude_c5, connected_only):
            summary.graphs_filtered += 1
            continue
        todo.append(write_graph6(g))

    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = pool.map(_check_line, ((line, budget) for line in todo), chunksize=64)
            for report in reports:
                summary.add(report)
    else:
        for line in todo:
            summary.add(_check_line((line, budget)))
    log.info("swept %d graphs (%d filtered)", summary.graphs_processed, summary.graphs_filtered)
    return summary.finalize()


def selftest_families(k_max: int = 3, budget: int = DEFAULT_BUDGET) -> SweepSummary:
    """Check the exact values on every T_k member and the 4/3 bound on small spiders.

    Members of T_k come from every labelled tree on ``k <= k_max`` blocks.
    Spiders have 3 or 4 legs of length at most 3 and at least three good legs.
    """
    summary = SweepSummary()
    summary.tallies = {check: dict.fromkeys(VERDICTS, 0)
                       for check in ("TK_EXACT", "TK_RECOGNIZED", "SPIDER_4_3")}

    def record(graph: Graph, results: dict[str, bool], **detail) -> None:
        summary.graphs_processed += 1
        for check, tally in summary.tallies.items():
            if check not in results:
                tally[NOT_APPLICABLE] += 1
            elif results[check]:
                tally[PASS] += 1
            else:
                tally[FAIL] += 1
                summary.counterexamples.append(
                    {"graph6": write_graph6(graph), "check": check, **detail})

    for k in range(1, k_max + 1):
        for tree in labeled_trees(k):
            spec = TkSpec(k, tree)
            t = build_Tk(spec)
            r2, _ = gamma_r2_exact(t, budget)
            rom, _ = gamma_R_exact(t, budget)
            fk, gk = canonical_fk(spec), canonical_gk(spec)
            exact = (r2 == rom == 3 * k
                      and is_valid_rainbow(t, fk) and rainbow_weight(fk) == 3 * k
                      and is_valid_roman(t, gk) and roman_weight(gk) == 3 * k)
            recognized = is_in_T(t) == (True, k) and is_in_G(t)
            record(t, {"TK_EXACT": exact, "TK_RECOGNIZED": recognized},
                   k=k, gamma_r2=r2, gamma_R=rom)

    for legs in spider_leg_sets(4, 3):
        if sum(1 for length in legs if length % 3) < 3:
            summary.graphs_filtered += 1
            continue
        s = build_spider(legs)
        r2, _ = gamma_r2_exact(s, budget)
        rom, _ = gamma_R_exact(s, budget)
        record(s, {"SPIDER_4_3": 3 * (r2 + rom) <= 4 * s.n}, legs=list(legs), gamma_r2=r2, gamma_R=rom)

    return summary.finalize()
