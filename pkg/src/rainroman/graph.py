"""Bitset graphs, graph6 I/O and the structural queries used by the solvers.

Each vertex's neighbourhood is a Python int used as a bitset, so a graph on
at most 64 vertices fits one machine word per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6RangeError(Graph6Error):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph on ``vertices``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges)

    def __str__(self) -> str:
        return write_graph6(self)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# graph6 ----------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line.

    Raises :class:`Graph6HeaderError` for a bad size prefix or stray
    characters, :class:`Graph6TruncatedError` when the edge field is short
    and :class:`Graph6RangeError` when the order is outside 1..64.
    """
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6HeaderError("empty graph6 line")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6HeaderError(f"invalid graph6 character in {s!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6RangeError("8-byte graph6 size prefix: order exceeds 64")
        if len(s) < 4:
            raise Graph6HeaderError("incomplete 4-byte graph6 size prefix")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6RangeError(f"graph order {n} outside 1..{MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise Graph6TruncatedError(f"edge field has {len(body)} bytes, expected {need}")
    if len(body) > need:
        raise Graph6HeaderError(f"edge field has {len(body)} bytes, expected {need}")

    value = 0
    for c in body:
        value = (value << 6) | (ord(c) - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6HeaderError("nonzero padding bits in graph6 edge field")
    value >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# structural queries ----------------------------------------------------------

def component_mask(g: Graph, start: int = 0) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g) == g.full_mask


def components(g: Graph) -> list[list[int]]:
    left = g.full_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = component_mask(g, start)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def is_tree(g: Graph) -> bool:
    return g.edge_count() == g.n - 1 and is_connected(g)


def is_cycle(g: Graph, n: int) -> bool:
    return g.n == n and n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


@dataclass(frozen=True)
class SpiderProfile:
    center: int
    legs: tuple[int, ...]

    @property
    def good_count(self) -> int:
        return sum(1 for length in self.legs if length % 3)


def spider_profile(g: Graph) -> Optional[SpiderProfile]:
    """Centre and leg lengths of ``g`` if it is a spider, else ``None``.

    Legs are listed in the order of the centre's neighbours.
    """
    if not is_tree(g):
        return None
    degrees = g.degrees()
    branch = [v for v, d in enumerate(degrees) if d >= 3]
    if len(branch) != 1:
        return None
    center = branch[0]
    legs = []
    for first in iter_bits(g.adj[center]):
        prev, cur, length = center, first, 1
        while degrees[cur] == 2:
            nxt = (g.adj[cur] & ~(1 << prev)).bit_length() - 1
            prev, cur, length = cur, nxt, length + 1
        legs.append(length)
    return SpiderProfile(center, tuple(legs))


def is_reducible_p5(g: Graph, path: Sequence[int]) -> bool:
    """Whether ``path`` is an induced P5 whose three inner vertices have degree 2."""
    if len(path) != 5 or len(set(path)) != 5:
        return False
    if any(not 0 <= v < g.n for v in path):
        return False
    for i, j in combinations(range(5), 2):
        if g.has_edge(path[i], path[j]) != (j == i + 1):
            return False
    return all(g.degree(v) == 2 for v in path[1:4])


def find_reducible_p5(g: Graph) -> Optional[tuple[int, int, int, int, int]]:
    """Lexicographically least reducible P5 ``(x, u, v, w, y)``, or ``None``."""
    best = None
    deg2 = [g.degree(v) == 2 for v in range(g.n)]
    for v in range(g.n):
        if not deg2[v]:
            continue
        a, b = g.neighbors(v)
        for u, w in ((a, b), (b, a)):
            if not (deg2[u] and deg2[w]):
                continue
            x = (g.adj[u] & ~(1 << v)).bit_length() - 1
            y = (g.adj[w] & ~(1 << v)).bit_length() - 1
            cand = (x, u, v, w, y)
            if is_reducible_p5(g, cand) and (best is None or cand < best):
                best = cand
    return best
