"""Test corpora: the named family of known codes and random small graphs."""
from __future__ import annotations

from typing import Iterator

import numpy as np

from .graph import Graph, cycle, hamming74_code, hypercube


def named_cprc_corpus() -> list:
    """(label, graph, members) for sets known to be completely regular codes."""
    out = [(f"cycle({2 * m}) C={{0}}", cycle(2 * m), [0]) for m in range(2, 9)]
    out += [(f"hypercube({k}) C={{0}}", hypercube(k), [0]) for k in range(2, 6)]
    out.append(("hypercube(7) C=Hamming(7,4)", hypercube(7), hamming74_code()))
    return out


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p) with a random spanning tree added, so the result is connected."""
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        u, v = int(order[i]), int(order[rng.integers(i)])
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_instances(count: int, seed: int = 0, max_n: int = 16) -> Iterator[tuple]:
    """Yield ``count`` pairs (graph, members) with 2 <= n <= max_n and nonempty C."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        g = random_connected_graph(n, float(rng.uniform(0.05, 0.6)), rng)
        size = int(rng.integers(1, n + 1)) if rng.random() < 0.5 else int(rng.integers(1, 3))
        members = sorted(int(i) for i in rng.choice(n, size=size, replace=False))
        yield g, members
