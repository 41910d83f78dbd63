"""Seeded random graphs and small structured families used by tests and benches."""
from __future__ import annotations

import itertools

import numpy as np

from .graph import DIRECTED, UNDIRECTED, Graph


def random_digraph(n: int, density: float, seed: int, self_loops: bool = False) -> Graph:
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    if not self_loops:
        np.fill_diagonal(mask, False)
    us, vs = np.nonzero(mask)
    return Graph(DIRECTED, n, frozenset(zip(us.tolist(), vs.tolist())))


def random_graph(n: int, density: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    mask = np.triu(rng.random((n, n)) < density, k=1)
    us, vs = np.nonzero(mask)
    return Graph(UNDIRECTED, n, frozenset(zip(us.tolist(), vs.tolist())))


def all_graphs(n: int):
    """Every labelled undirected graph on n vertices (edge subsets of K_n)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(UNDIRECTED, n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))


def all_digraphs(n: int, self_loops: bool = True):
    pairs = [(u, v) for u in range(n) for v in range(n) if self_loops or u != v]
    for bits in range(1 << len(pairs)):
        yield Graph(DIRECTED, n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))


def directed_cycle(n: int) -> Graph:
    return Graph.from_edges(DIRECTED, n, [(i, (i + 1) % n) for i in range(n)])


def undirected_cycle(n: int) -> Graph:
    return Graph.from_edges(UNDIRECTED, n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(UNDIRECTED, n, itertools.combinations(range(n), 2))


def complete_digraph(n: int) -> Graph:
    return Graph.from_edges(DIRECTED, n, [(u, v) for u in range(n) for v in range(n) if u != v])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(UNDIRECTED, 10, outer + spokes + inner)
