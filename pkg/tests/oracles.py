"""Plain exhaustive enumeration, kept independent of the package's solvers.

Graphs are taken as adjacency lists; validity is rechecked with Python sets.
"""

from itertools import product

RAINBOW_LABELS = (frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2}))


def adjacency(graph):
    return [set(graph.neighbors(v)) for v in range(graph.n)]


def rainbow_ok(nbrs, labels):
    for v, label in enumerate(labels):
        if not label:
            seen = set()
            for u in nbrs[v]:
                seen |= labels[u]
            if seen != {1, 2}:
                return False
    return True


def roman_ok(nbrs, values):
    return all(values[v] or any(values[u] == 2 for u in nbrs[v]) for v in range(len(values)))


def all_rainbow(graph):
    nbrs = adjacency(graph)
    for labels in product(RAINBOW_LABELS, repeat=graph.n):
        if rainbow_ok(nbrs, labels):
            yield labels


def all_roman(graph):
    nbrs = adjacency(graph)
    for values in product((0, 1, 2), repeat=graph.n):
        if roman_ok(nbrs, values):
            yield values


def brute_gamma_r2(graph):
    return min(sum(map(len, labels)) for labels in all_rainbow(graph))


def brute_gamma_R(graph):
    return min(sum(values) for values in all_roman(graph))


def optimal_rainbow(graph):
    valid = list(all_rainbow(graph))
    best = min(sum(map(len, labels)) for labels in valid)
    return best, [labels for labels in valid if sum(map(len, labels)) == best]


def optimal_roman(graph):
    valid = list(all_roman(graph))
    best = min(map(sum, valid))
    return best, [values for values in valid if sum(values) == best]


def _union_table(graph):
    table = [0] * (1 << graph.n)
    for mask in range(1, 1 << graph.n):
        low = mask & -mask
        table[mask] = table[mask ^ low] | graph.adj[low.bit_length() - 1]
    return table


def mask_gamma_r2(graph):
    """γ_r2 over all (colour-1 set, colour-2 set) pairs; usable up to n = 12."""
    full = (1 << graph.n) - 1
    nb = _union_table(graph)
    pop = [bin(m).count("1") for m in range(1 << graph.n)]
    best = 2 * graph.n
    for ones in range(1 << graph.n):
        need = full & ~ones
        nb1 = nb[ones]
        p1 = pop[ones]
        for twos in range(1 << graph.n):
            if p1 + pop[twos] < best and not need & ~(twos | (nb1 & nb[twos])):
                best = p1 + pop[twos]
    return best


def mask_gamma_R(graph):
    """γ_R: for each 2-set, every undominated vertex takes value 1."""
    full = (1 << graph.n) - 1
    nb = _union_table(graph)
    return min(
        2 * bin(twos).count("1") + bin(full & ~(twos | nb[twos])).count("1")
        for twos in range(1 << graph.n)
    )
