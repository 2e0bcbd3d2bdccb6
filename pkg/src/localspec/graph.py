"""Graphs, vertex sets, named generators and distance partitions.

Vertices are the integers ``0..n-1`` and are never relabelled, so every
report can be traced back to the input file.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Base class for malformed graph input."""

    def __init__(self, msg, line=None):
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)
        self.line = line


class GraphParseError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class VertexSetError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable connected simple graph on ``range(n)``."""

    n: int
    edges: frozenset
    adjacency: tuple = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen = set()
        adj = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        g = cls(n, frozenset(seen), tuple(tuple(sorted(a)) for a in adj))
        if n == 0:
            raise GraphError("graph has no vertices")
        if len(bfs_distances(g, [0])) != n:
            raise DisconnectedGraphError("graph is not connected")
        return g

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        a.setflags(write=False)
        return a

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adjacency}) == 1

    def neighbors(self, i: int) -> tuple:
        return self.adjacency[i]


@dataclass(frozen=True)
class VertexSet:
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.members

    def indicator(self, n: int) -> np.ndarray:
        x = np.zeros(n)
        x[list(self.members)] = 1.0
        return x


def vertex_set(g: Graph, members: Iterable[int]) -> VertexSet:
    """Validate and canonicalise a nonempty vertex set of ``g``."""
    m = sorted(set(int(i) for i in members))
    if not m:
        raise VertexSetError("vertex set is empty")
    if m[0] < 0 or m[-1] >= g.n:
        raise VertexSetError(f"vertex index out of range [0, {g.n})")
    return VertexSet(tuple(m))


def load_graph(text: str) -> Graph:
    """Parse an edge-list document: lines ``u v``, optional ``n <count>`` header."""
    n = None
    edges = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None:
                raise GraphParseError("bad vertex-count header", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphParseError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("negative vertex index", lineno)
        edges.append((u, v))
        lines.append(lineno)

    if n is None:
        if not edges:
            raise GraphParseError("no edges and no vertex-count header")
        n = 1 + max(max(e) for e in edges)

    seen = set()
    for (u, v), lineno in zip(edges, lines):
        if u >= n or v >= n:
            raise GraphParseError(f"vertex index >= n={n}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}", lineno)
        seen.add(e)
    return Graph.from_edges(n, edges)


def dump_graph(g: Graph) -> str:
    out = [f"n {g.n}"]
    out += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"


# -- generators ---------------------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def hypercube(k: int) -> Graph:
    """Vertices are k-bit words; adjacent iff they differ in one bit."""
    if k < 1:
        raise ValueError("hypercube needs k >= 1")
    n = 1 << k
    return Graph.from_edges(n, [(x, x ^ (1 << b)) for x in range(n)
                                for b in range(k) if x < x ^ (1 << b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


GENERATORS = {
    "cycle": (cycle, 1),
    "hypercube": (hypercube, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "petersen": (petersen, 0),
}


def generate(name: str, params: Sequence[int] = ()) -> Graph:
    try:
        fn, arity = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}; "
                         f"choose from {sorted(GENERATORS)}") from None
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))


def hamming74_code() -> list[int]:
    """Codewords of the cyclic [7,4] Hamming code, generator x^3 + x + 1.

    Each codeword is a hypercube(7) label; bit j is the coefficient of x^j.
    """
    gen = 0b1011
    words = []
    for msg in range(16):
        w = 0
        for j in range(4):
            if msg >> j & 1:
                w ^= gen << j
        words.append(w)
    return sorted(words)


# -- distances ----------------------------------------------------------------

def bfs_distances(g: Graph, sources: Iterable[int]) -> dict:
    """Multi-source BFS; returns ``{vertex: distance}`` for reachable vertices."""
    dist = {}
    queue = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class DistancePartition:
    """Layers ``C_0 = C, C_1, ..., C_ecc`` of vertices at distance k from C."""

    layers: tuple
    distance: tuple

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    @property
    def antipodal(self) -> VertexSet:
        return self.layers[-1]

    def layer_of(self, i: int) -> int:
        return self.distance[i]


def distance_partition(g: Graph, c: VertexSet) -> DistancePartition:
    if len(c) == 0:
        raise VertexSetError("vertex set is empty")
    dist = bfs_distances(g, c)
    ecc = max(dist.values())
    layers = [[] for _ in range(ecc + 1)]
    for i in range(g.n):
        layers[dist[i]].append(i)
    return DistancePartition(tuple(VertexSet(tuple(l)) for l in layers),
                             tuple(dist[i] for i in range(g.n)))
