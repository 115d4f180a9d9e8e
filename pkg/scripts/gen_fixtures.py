#!/usr/bin/env python3
"""Regenerate the bundled graph6 fixture files (needs ``pynauty``).

Isomorph-free generation by vertex augmentation: every graph on n vertices
is some graph on n-1 vertices plus one vertex, deduplicated by nauty's
canonical certificate.

    python scripts/gen_fixtures.py tests/fixtures
"""

import argparse
import gzip
from pathlib import Path

import pynauty

from rainroman.graph import Graph, is_connected, min_degree, write_graph6


def certificate(g: Graph) -> bytes:
    nauty = pynauty.Graph(g.n, adjacency_dict={v: g.neighbors(v) for v in range(g.n)})
    return pynauty.certificate(nauty)


def extend(graphs, keep=lambda g: True):
    out = {}
    for g in graphs:
        n = g.n
        for mask in range(1 << n):
            rows = [row | (mask >> v & 1) << n for v, row in enumerate(g.adj)]
            h = Graph(n + 1, tuple(rows) + (mask,))
            if not keep(h):
                continue
            out.setdefault(certificate(h), h)
    return sorted(out.values(), key=write_graph6)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--nmax", type=int, default=8)
    parser.add_argument("--mindeg2-n", type=int, default=9)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    level = [Graph(1, (0,))]
    for n in range(2, args.nmax + 1):
        level = extend(level)
        connected = [g for g in level if is_connected(g)]
        if n >= 3:
            path = args.outdir / f"connected_n{n}.g6"
            path.write_text("".join(write_graph6(g) + "\n" for g in connected))
            print(path, len(connected))

    n = args.mindeg2_n
    if n == args.nmax + 1:
        graphs = extend(level, lambda g: min_degree(g) >= 2 and is_connected(g))
        path = args.outdir / f"connected_mindeg2_n{n}.g6.gz"
        with gzip.open(path, "wt") as fh:
            fh.writelines(write_graph6(g) + "\n" for g in graphs)
        print(path, len(graphs))


if __name__ == "__main__":
    main()
