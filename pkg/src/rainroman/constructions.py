"""Named graph families, their canonical dominating functions and recognizers.

Block ``i`` (1-based) of a member of T_k occupies vertex ids
``4(i-1) .. 4i-1`` in the order a, b, c, d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence

from .domination import BOTH, EMPTY, ONE, RainbowAssignment, RomanAssignment
from .graph import Graph, component_mask, is_connected, is_tree

C1C2 = "C1C2"
B_EXTRA = "B_EXTRA"


@dataclass(frozen=True)
class TkSpec:
    k: int
    b_tree_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "b_tree_edges", tuple(tuple(e) for e in self.b_tree_edges))
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if len(self.b_tree_edges) != self.k - 1:
            raise ValueError(f"a tree on {self.k} blocks needs {self.k - 1} edges")
        _check_block_edges(self.k, self.b_tree_edges)
        if self.k > 1 and not is_connected(_block_graph(self.k, self.b_tree_edges)):
            raise ValueError(f"edges {self.b_tree_edges} do not form a tree on 1..{self.k}")


@dataclass(frozen=True)
class GFamilySpec:
    variant: str
    tk: Optional[TkSpec] = None
    extra_b_edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "extra_b_edges", tuple(tuple(e) for e in self.extra_b_edges))
        if self.variant == C1C2:
            if self.tk is not None or self.extra_b_edges:
                raise ValueError("the C1C2 variant takes no parameters")
        elif self.variant == B_EXTRA:
            if self.tk is None:
                raise ValueError("B_EXTRA needs a TkSpec")
            _check_block_edges(self.tk.k, self.tk.b_tree_edges + self.extra_b_edges)
        else:
            raise ValueError(f"unknown G-family variant {self.variant!r}")


def _check_block_edges(k: int, edges: Sequence[tuple[int, int]]) -> None:
    seen = set()
    for i, j in edges:
        if not (1 <= i <= k and 1 <= j <= k) or i == j:
            raise ValueError(f"bad block edge ({i}, {j}) for k={k}")
        key = frozenset((i, j))
        if key in seen:
            raise ValueError(f"duplicate block edge ({i}, {j})")
        seen.add(key)


def _block_graph(k: int, edges: Sequence[tuple[int, int]]) -> Graph:
    return Graph.from_edges(k, [(i - 1, j - 1) for i, j in edges])


def block_vertices(i: int) -> tuple[int, int, int, int]:
    """Ids of ``(a_i, b_i, c_i, d_i)`` for 1-based block ``i``."""
    base = 4 * (i - 1)
    return base, base + 1, base + 2, base + 3


# generators ------------------------------------------------------------------

def build_path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_spider(leg_lengths: Sequence[int]) -> Graph:
    """Spider with centre 0 and legs laid out consecutively."""
    if len(leg_lengths) < 3:
        raise ValueError("a spider needs at least 3 legs")
    if any(length < 1 for length in leg_lengths):
        raise ValueError("leg lengths must be positive")
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph.from_edges(nxt, edges)


def _tk_edges(k: int, b_edges: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    edges = []
    for i in range(1, k + 1):
        a, b, c, d = block_vertices(i)
        edges += [(a, b), (b, c), (c, d)]
    edges += [(block_vertices(i)[1], block_vertices(j)[1]) for i, j in b_edges]
    return edges


def build_Tk(spec: TkSpec) -> Graph:
    return Graph.from_edges(4 * spec.k, _tk_edges(spec.k, spec.b_tree_edges))


def build_G_family(spec: GFamilySpec) -> Graph:
    if spec.variant == C1C2:
        edges = _tk_edges(2, [(1, 2)]) + [(block_vertices(1)[2], block_vertices(2)[2])]
        return Graph.from_edges(8, edges)
    tk = spec.tk
    return Graph.from_edges(4 * tk.k, _tk_edges(tk.k, tk.b_tree_edges + spec.extra_b_edges))


def c1c2_graph() -> Graph:
    return build_G_family(GFamilySpec(C1C2))


def canonical_fk(spec: TkSpec) -> RainbowAssignment:
    return RainbowAssignment((EMPTY, BOTH, EMPTY, ONE) * spec.k)


def canonical_gk(spec: TkSpec) -> RomanAssignment:
    return RomanAssignment((0, 2, 0, 1) * spec.k)


def labeled_trees(k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every labelled tree on ``1..k`` as an edge tuple, via Prüfer sequences."""
    if k == 1:
        yield ()
        return
    if k == 2:
        yield ((1, 2),)
        return
    for seq in product(range(1, k + 1), repeat=k - 2):
        degree = [1] * (k + 1)
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(1, k + 1) if degree[v] == 1)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = (v for v in range(1, k + 1) if degree[v] == 1)
        edges.append((u, w))
        yield tuple(sorted(edges))


def spider_leg_sets(max_legs: int = 4, max_length: int = 3) -> Iterator[tuple[int, ...]]:
    """Non-increasing leg-length tuples with 3..max_legs legs."""
    def rec(prefix: tuple[int, ...], cap: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) >= 3:
            yield prefix
        if len(prefix) == max_legs:
            return
        for length in range(cap, 0, -1):
            yield from rec(prefix + (length,), length)

    yield from rec((), max_length)


# recognizers -----------------------------------------------------------------

def _is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test; only meant for small fixed targets."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gdeg, hdeg = g.degrees(), h.degrees()
    mapping: list[int] = []
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == g.n:
            return True
        for w in range(h.n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, mapping[u]) for u in range(v)):
                mapping.append(w)
                used |= 1 << w
                if extend(v + 1):
                    return True
                mapping.pop()
                used &= ~(1 << w)
        return False

    return extend(0)


def _blocks(g: Graph) -> Optional[list[tuple[int, int, int, int]]]:
    """Split ``g`` into a-b-c-d blocks whose extra edges join b-vertices only.

    Returns the blocks ordered by their b-vertex, or ``None``.
    """
    n = g.n
    if n % 4:
        return None
    k = n // 4
    degrees = g.degrees()
    if k == 1:
        if sorted(degrees) != [1, 1, 2, 2] or not is_connected(g):
            return None
        a = degrees.index(1)
        b = g.neighbors(a)[0]
        c = (g.adj[b] & ~(1 << a)).bit_length() - 1
        d = (g.adj[c] & ~(1 << b)).bit_length() - 1
        return [(a, b, c, d)]

    a_of: dict[int, int] = {}
    c_of: dict[int, int] = {}
    d_of: dict[int, int] = {}
    for leaf in range(n):
        if degrees[leaf] != 1:
            continue
        p = g.neighbors(leaf)[0]
        if degrees[p] == 2:
            b = (g.adj[p] & ~(1 << leaf)).bit_length() - 1
            if b in c_of:
                return None
            c_of[b] = p
            d_of[b] = leaf
        else:
            if p in a_of:
                return None
            a_of[p] = leaf
    if len(a_of) != k or set(a_of) != set(c_of):
        return None
    blocks = [(a_of[b], b, c_of[b], d_of[b]) for b in sorted(a_of)]
    if len({v for block in blocks for v in block}) != n:
        return None
    bmask = sum(1 << b for b in a_of)
    for a, b, c, d in blocks:
        if g.adj[b] & ~bmask != (1 << a | 1 << c):
            return None
    b_graph_start = blocks[0][1]
    reach = component_mask(Graph(n, tuple(row & bmask if bmask >> v & 1 else 0
                                          for v, row in enumerate(g.adj))), b_graph_start)
    if reach != bmask:
        return None
    return blocks


def is_in_T(g: Graph) -> tuple[bool, Optional[int]]:
    if not is_tree(g):
        return False, None
    blocks = _blocks(g)
    if blocks is None:
        return False, None
    return True, len(blocks)


def is_in_G(g: Graph) -> bool:
    if not is_connected(g):
        return False
    if g.n == 8 and _is_isomorphic(g, c1c2_graph()):
        return True
    return _blocks(g) is not None


def b_subgraph_edges(g: Graph) -> Optional[list[tuple[int, int]]]:
    """Block-index edges among b-vertices of a recognized B_EXTRA graph."""
    blocks = _blocks(g)
    if blocks is None:
        return None
    index = {block[1]: i + 1 for i, block in enumerate(blocks)}
    return [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]

