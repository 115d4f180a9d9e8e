"""2-rainbow and Roman dominating functions: verifiers, conversions, solvers.

A rainbow label is stored as a two-bit mask: bit 0 for colour 1, bit 1 for
colour 2, so ``0`` is the empty set and ``3`` is ``{1, 2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits

EMPTY, ONE, TWO, BOTH = 0, 1, 2, 3

_RAINBOW_CHARS = "012B"

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than its budget allows."""


@dataclass(frozen=True)
class RainbowAssignment:
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(label not in (EMPTY, ONE, TWO, BOTH) for label in self.labels):
            raise ValueError(f"rainbow labels must be in 0..3, got {self.labels}")

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return "".join(_RAINBOW_CHARS[label] for label in self.labels)

    @classmethod
    def parse(cls, text: str) -> "RainbowAssignment":
        try:
            return cls(tuple(_RAINBOW_CHARS.index(c) for c in text.strip().upper()))
        except ValueError:
            raise ValueError(f"bad rainbow assignment string {text!r}") from None

    @classmethod
    def from_sets(cls, sets: Sequence[set[int] | frozenset[int]]) -> "RainbowAssignment":
        return cls(tuple((1 in s) | (2 in s) << 1 for s in sets))

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(c for c in (1, 2) if label >> (c - 1) & 1) for label in self.labels]

    def swap_colors(self) -> "RainbowAssignment":
        return RainbowAssignment(tuple((x & 1) << 1 | x >> 1 for x in self.labels))


@dataclass(frozen=True)
class RomanAssignment:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(value not in (0, 1, 2) for value in self.values):
            raise ValueError(f"Roman values must be in 0..2, got {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "".join(map(str, self.values))

    @classmethod
    def parse(cls, text: str) -> "RomanAssignment":
        if any(c not in "012" for c in text.strip()):
            raise ValueError(f"bad Roman assignment string {text!r}")
        return cls(tuple(int(c) for c in text.strip()))


def rainbow_weight(f: RainbowAssignment) -> int:
    return sum(label.bit_count() for label in f.labels)


def roman_weight(g: RomanAssignment) -> int:
    return sum(g.values)


def _check_length(graph: Graph, length: int) -> None:
    if length != graph.n:
        raise ValueError(f"assignment has {length} entries, graph has {graph.n} vertices")


def is_valid_rainbow(graph: Graph, f: RainbowAssignment) -> bool:
    _check_length(graph, len(f))
    ones = twos = 0
    for v, label in enumerate(f.labels):
        if label & ONE:
            ones |= 1 << v
        if label & TWO:
            twos |= 1 << v
    return all(
        graph.adj[v] & ones and graph.adj[v] & twos
        for v, label in enumerate(f.labels)
        if label == EMPTY
    )


def is_valid_roman(graph: Graph, g: RomanAssignment) -> bool:
    _check_length(graph, len(g))
    twos = sum(1 << v for v, value in enumerate(g.values) if value == 2)
    return all(graph.adj[v] & twos for v, value in enumerate(g.values) if value == 0)


def roman_to_rainbow(g: RomanAssignment) -> RainbowAssignment:
    return RainbowAssignment(tuple((EMPTY, ONE, BOTH)[value] for value in g.values))


def rainbow_to_roman(f: RainbowAssignment) -> RomanAssignment:
    """Map ``f`` to a Roman function of weight at most ``3 * w(f) / 2``.

    The more frequent singleton colour becomes 1; the other singleton and
    ``{1, 2}`` become 2. Colours are swapped first when ``{2}`` is the more
    frequent singleton.
    """
    if f.labels.count(TWO) > f.labels.count(ONE):
        f = f.swap_colors()
    return RomanAssignment(tuple((0, 1, 2, 2)[label] for label in f.labels))


# exact solvers ---------------------------------------------------------------

def _search_order(graph: Graph) -> list[int]:
    """Breadth-first order from a vertex of maximum degree, per component."""
    order: list[int] = []
    seen = 0
    degrees = graph.degrees()
    while len(order) < graph.n:
        start = max((v for v in range(graph.n) if not seen >> v & 1), key=lambda v: (degrees[v], -v))
        queue = [start]
        seen |= 1 << start
        for v in queue:
            order.append(v)
            for u in sorted(iter_bits(graph.adj[v] & ~seen), key=lambda u: (-degrees[u], u)):
                seen |= 1 << u
                queue.append(u)
    return order


def _closing_lists(graph: Graph, order: list[int]) -> list[list[int]]:
    """``closing[i]``: vertices whose closed neighbourhood is fully assigned at depth ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[int]] = [[] for _ in order]
    for v in range(graph.n):
        last = max([pos[v]] + [pos[u] for u in iter_bits(graph.adj[v])])
        closing[last].append(v)
    return closing


def _greedy_dominating_set(graph: Graph) -> int:
    closed = [row | 1 << v for v, row in enumerate(graph.adj)]
    undominated = graph.full_mask
    chosen = 0
    while undominated:
        v = max(range(graph.n), key=lambda v: ((closed[v] & undominated).bit_count(), -v))
        chosen |= 1 << v
        undominated &= ~closed[v]
    return chosen


def _packing_bound(needs: list[tuple[int, int]]) -> int:
    """Lower bound from needy vertices whose supplier sets are pairwise disjoint."""
    used = 0
    total = 0
    for need, suppliers in needs:
        if not suppliers & used:
            used |= suppliers
            total += need
    return total


def gamma_r2_exact(graph: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, RainbowAssignment]:
    """Minimum weight of a 2-rainbow dominating function, with a witness.

    Depth-first branch and bound over vertices in breadth-first order. Raises
    :class:`BudgetExceeded` after ``budget`` search nodes.
    """
    n = graph.n
    adj = graph.adj
    order = _search_order(graph)
    closing = _closing_lists(graph, order)

    dom = _greedy_dominating_set(graph)
    if dom.bit_count() * 2 < n:
        best_labels = [BOTH if dom >> v & 1 else EMPTY for v in range(n)]
    else:
        best_labels = [ONE] * n
    best = sum(label.bit_count() for label in best_labels)

    labels = [EMPTY] * n
    nodes = 0

    def lower_bound(depth: int, assigned: int, ones: int, twos: int, empties: int) -> int:
        free = ~assigned & graph.full_mask
        needs = []
        for v in range(n):
            nb = adj[v]
            missing = (not nb & ones) + (not nb & twos)
            if not missing:
                continue
            if empties >> v & 1:
                needs.append((missing, nb & free))
            elif not assigned >> v & 1:
                needs.append((1, (nb | 1 << v) & free))
        needs.sort(key=lambda item: item[1].bit_count())
        return _packing_bound(needs)

    def dfs(depth: int, weight: int, assigned: int, ones: int, twos: int, empties: int,
            swapped_free: bool) -> None:
        nonlocal best, best_labels, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"rainbow search exceeded {budget} nodes")
        if depth == n:
            if weight < best:
                best = weight
                best_labels = labels.copy()
            return
        if weight + lower_bound(depth, assigned, ones, twos, empties) >= best:
            return
        v = order[depth]
        bit = 1 << v
        assigned_next = assigned | bit
        # colour symmetry: until a singleton appears, {2} mirrors {1}
        for label in (EMPTY, ONE, TWO, BOTH):
            if label == TWO and swapped_free:
                continue
            w = weight + label.bit_count()
            if w >= best:
                continue
            o = ones | bit if label & ONE else ones
            t = twos | bit if label & TWO else twos
            e = empties | bit if label == EMPTY else empties
            ok = True
            for u in closing[depth]:
                if e >> u & 1 and not (adj[u] & o and adj[u] & t):
                    ok = False
                    break
            if not ok:
                continue
            labels[v] = label
            dfs(depth + 1, w, assigned_next, o, t, e,
                swapped_free and label not in (ONE, TWO))
        labels[v] = EMPTY

    dfs(0, 0, 0, 0, 0, 0, True)
    return best, RainbowAssignment(tuple(best_labels))


def gamma_R_exact(graph: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, RomanAssignment]:
    """Minimum weight of a Roman dominating function, with a witness."""
    n = graph.n
    adj = graph.adj
    order = _search_order(graph)
    closing = _closing_lists(graph, order)

    dom = _greedy_dominating_set(graph)
    if dom.bit_count() * 2 < n:
        best_values = [2 if dom >> v & 1 else 0 for v in range(n)]
    else:
        best_values = [1] * n
    best = sum(best_values)

    values = [0] * n
    nodes = 0

    def lower_bound(assigned: int, twos: int, zeros: int) -> int:
        free = ~assigned & graph.full_mask
        needs = []
        for v in range(n):
            if adj[v] & twos:
                continue
            if zeros >> v & 1:
                needs.append((2, adj[v] & free))
            elif not assigned >> v & 1:
                needs.append((1, (adj[v] | 1 << v) & free))
        needs.sort(key=lambda item: item[1].bit_count())
        return _packing_bound(needs)

    def dfs(depth: int, weight: int, assigned: int, twos: int, zeros: int) -> None:
        nonlocal best, best_values, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"Roman search exceeded {budget} nodes")
        if depth == n:
            if weight < best:
                best = weight
                best_values = values.copy()
            return
        if weight + lower_bound(assigned, twos, zeros) >= best:
            return
        v = order[depth]
        bit = 1 << v
        for value in (0, 1, 2):
            w = weight + value
            if w >= best:
                continue
            t = twos | bit if value == 2 else twos
            z = zeros | bit if value == 0 else zeros
            if any(z >> u & 1 and not adj[u] & t for u in closing[depth]):
                continue
            values[v] = value
            dfs(depth + 1, w, assigned | bit, t, z)
        values[v] = 0

    dfs(0, 0, 0, 0, 0)
    return best, RomanAssignment(tuple(best_values))


def optimal_pair(graph: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """``(gamma_r2, gamma_R)`` of ``graph``."""
    return gamma_r2_exact(graph, budget)[0], gamma_R_exact(graph, budget)[0]
