import itertools
import math

import numpy as np
import pytest
from hypothesis import strategies as st

from modcycle.graph import DIRECTED, UNDIRECTED, Graph
from modcycle.residues import ResidueSet, complement_closed


def dense(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = 1
        if not g.directed:
            a[v, u] = 1
    return a


def walk_exists_dp(g, max_len):
    """reach[l][i, j] = a walk of exactly l steps from i to j exists, l = 0..max_len."""
    a = dense(g)
    cur = np.eye(g.n, dtype=np.int64)
    out = [cur.astype(bool)]
    for _ in range(max_len):
        cur = (cur @ a > 0).astype(np.int64)
        out.append(cur.astype(bool))
    return out


def closed_walk_residues_dp(g, m):
    reach = walk_exists_dp(g, g.n * m)
    return frozenset(l % m for l in range(1, g.n * m + 1) if reach[l].diagonal().any())


def shortest_closed_walk_dp(g, rs, bound=None):
    bound = bound or g.n * rs.m
    reach = walk_exists_dp(g, bound)
    for l in range(1, bound + 1):
        if l % rs.m in rs and reach[l].diagonal().any():
            return l
    return None


def brute_cycles(g):
    """Independent enumeration: every vertex subset in every cyclic order."""
    found = set()
    for k in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            first = subset[0]
            for rest in itertools.permutations(subset[1:]):
                cyc = (first,) + rest
                if not g.directed and (k < 3 or cyc[1] > cyc[-1]):
                    continue
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    found.add(cyc)
    return found


def closed_sets(max_m):
    """All (S, m) with 0 not in S, S nonempty, and closed complement."""
    out = []
    for m in range(1, max_m + 1):
        for mask in range(0, 1 << m, 2):
            rs = ResidueSet(m, mask)
            if mask and complement_closed(rs)[0]:
                out.append(rs)
    return out


@st.composite
def digraphs(draw, max_n=8, loops=True):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(DIRECTED, n, edges)


@st.composite
def ugraphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(UNDIRECTED, n, edges)


@st.composite
def residue_sets(draw, max_m=8):
    m = draw(st.integers(1, max_m))
    mask = draw(st.integers(0, (1 << m) - 1))
    return ResidueSet(m, mask)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
