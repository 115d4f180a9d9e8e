"""Contracting a reducible P5 and lifting dominating functions back.

For an induced path ``x u v w y`` whose inner vertices have degree 2, the
reduced graph drops ``u, v, w`` and joins ``x`` to ``y``. Any rainbow or
Roman dominating function of the reduced graph extends to the original
graph at exactly two more weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .domination import (
    BOTH,
    EMPTY,
    ONE,
    TWO,
    RainbowAssignment,
    RomanAssignment,
    is_valid_rainbow,
    is_valid_roman,
)
from .graph import Graph, is_reducible_p5


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Reduction:
    original: Graph
    reduced: Graph
    path: tuple[int, int, int, int, int]
    id_map: dict[int, int]

    @property
    def survivors(self) -> list[int]:
        return sorted(self.id_map)


def contract_p5(g: Graph, path: Sequence[int]) -> Reduction:
    path = tuple(path)
    if len(path) != 5 or len(set(path)) != 5:
        raise ReductionError(f"path {path} does not have five distinct vertices")
    x, u, v, w, y = path
    if g.has_edge(x, y):
        raise ReductionError(f"endpoints {x} and {y} are already adjacent")
    if not is_reducible_p5(g, path):
        raise ReductionError(f"{path} is not an induced P5 with inner degrees 2")

    dropped = {u, v, w}
    survivors = [z for z in range(g.n) if z not in dropped]
    id_map = {old: new for new, old in enumerate(survivors)}
    edges = [(id_map[a], id_map[b]) for a, b in g.edges() if a in id_map and b in id_map]
    edges.append((id_map[x], id_map[y]))
    return Reduction(g, Graph.from_edges(len(survivors), edges), path, id_map)


def _lift(r: Reduction, values: Sequence[int], inner: dict[int, int]) -> tuple[int, ...]:
    out = [0] * r.original.n
    for old, new in r.id_map.items():
        out[old] = values[new]
    for z, value in inner.items():
        out[z] = value
    return tuple(out)


def extend_rainbow(r: Reduction, f_reduced: RainbowAssignment) -> RainbowAssignment:
    if not is_valid_rainbow(r.reduced, f_reduced):
        raise ReductionError("rainbow assignment is not valid on the reduced graph")
    x, u, v, w, y = r.path
    fx = f_reduced.labels[r.id_map[x]]
    fy = f_reduced.labels[r.id_map[y]]
    if (fx == EMPTY) == (fy == EMPTY):
        inner = {u: EMPTY, v: BOTH, w: EMPTY}
    else:
        if fx == EMPTY:
            # mirror the path so the nonempty endpoint is x
            x, u, w, y = y, w, u, x
            fx = fy
        if fx == BOTH:
            inner = {u: EMPTY, v: EMPTY, w: BOTH}
        else:
            other = TWO if fx == ONE else ONE
            inner = {u: EMPTY, v: other, w: fx}
    return RainbowAssignment(_lift(r, f_reduced.labels, inner))


def extend_roman(r: Reduction, g_reduced: RomanAssignment) -> RomanAssignment:
    if not is_valid_roman(r.reduced, g_reduced):
        raise ReductionError("Roman assignment is not valid on the reduced graph")
    x, u, v, w, y = r.path
    gx = g_reduced.values[r.id_map[x]]
    gy = g_reduced.values[r.id_map[y]]
    if {gx, gy} == {0, 2}:
        if gx == 0:
            u, w = w, u
        inner = {u: 0, v: 0, w: 2}
    else:
        inner = {u: 0, v: 2, w: 0}
    return RomanAssignment(_lift(r, g_reduced.values, inner))
