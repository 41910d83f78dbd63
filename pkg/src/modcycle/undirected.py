"""Undirected cases that need no tree-width machinery.

* odd cycles: a graph has one iff it is not bipartite;
* even cycles: a graph has none iff every block is a bridge or an odd cycle;
* "some cycle not divisible by g": the divisor route for closed complements.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import ConditionUnsupported, PreconditionError
from .graph import CycleWitness, Graph
from .oracle import MAX_ORACLE_VERTICES, oracle_decide
from .residues import ResidueSet, thm7_reduce


def _require_undirected(g: Graph) -> None:
    if g.directed:
        raise ValueError("operation requires an undirected graph")


def _bfs_forest(g: Graph, allowed=None):
    """BFS parents and depths over the vertices in ``allowed`` (default: all)."""
    parent = {}
    depth = {}
    order = range(g.n) if allowed is None else sorted(allowed)
    for root in order:
        if root in depth:
            continue
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if allowed is not None and v not in allowed:
                    continue
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
    return parent, depth


def _tree_cycle(parent, depth, x: int, y: int) -> list:
    """Cycle formed by non-tree edge (x, y): x up to the common ancestor, then down to y."""
    left, right = [x], [y]
    a, b = x, y
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()  # common ancestor already closes ``left``
    return left + right[::-1]


def odd_cycle(g: Graph) -> Optional[CycleWitness]:
    """An odd simple cycle, or None iff ``g`` is bipartite."""
    _require_undirected(g)
    parent, depth = _bfs_forest(g)
    for u, v in g.sorted_edges():
        if depth[u] == depth[v]:
            return CycleWitness(tuple(_tree_cycle(parent, depth, u, v)))
    return None


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple  # each a frozenset of canonical edges
    cut_vertices: frozenset


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components via iterative Hopcroft-Tarjan with an edge stack."""
    _require_undirected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cuts = set()
    edge_stack: list = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, par, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    descended = True
                    break
                if w != par and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                if u == root:
                    root_children += 1
                else:
                    cuts.add(u)
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.add((a, b) if a < b else (b, a))
                    if (a, b) == (u, v):
                        break
                blocks.append(frozenset(block))
        if root_children >= 2:
            cuts.add(root)
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def _block_graph(g: Graph, block) -> tuple:
    verts = sorted({x for e in block for x in e})
    local = {v: i for i, v in enumerate(verts)}
    sub = Graph.from_edges("undirected", len(verts), [(local[a], local[b]) for a, b in block])
    return sub, verts


def _ear(g: Graph, cycle: list) -> tuple:
    """A path outside ``cycle`` joining two distinct cycle vertices (g 2-connected, not just the cycle)."""
    on_cycle = set(cycle)
    cyc_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    for a in cycle:
        for w in g.neighbors(a):
            if frozenset((a, w)) in cyc_edges:
                continue
            if w in on_cycle:
                return [a, w]
            prev = {w: a}
            queue = deque([w])
            while queue:
                x = queue.popleft()
                for y in g.neighbors(x):
                    if y == a or y in prev:
                        continue
                    prev[y] = x
                    if y in on_cycle:
                        path = [y]
                        while path[-1] != a:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    queue.append(y)
    raise AssertionError("no ear found; block is not 2-connected")


def _even_cycle_in_block(sub: Graph) -> Optional[list]:
    if len(sub.edges) < 2:
        return None
    parent, depth = _bfs_forest(sub)
    tree = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
    chords = [e for e in sub.sorted_edges() if e not in tree]
    if len(chords) == 1:
        cyc = _tree_cycle(parent, depth, *chords[0])
        return cyc if len(cyc) % 2 == 0 else None
    for x, y in chords:
        cyc = _tree_cycle(parent, depth, x, y)
        if len(cyc) % 2 == 0:
            return cyc
    # every fundamental cycle is odd: route an ear around the first one
    cyc = _tree_cycle(parent, depth, *chords[0])
    path = _ear(sub, cyc)
    a, b = path[0], path[-1]
    ia, ib = cyc.index(a), cyc.index(b)
    k = len(cyc)
    forward = [cyc[(ia + t) % k] for t in range((ib - ia) % k + 1)]
    backward = [cyc[(ia - t) % k] for t in range((ia - ib) % k + 1)]
    ear_len = len(path) - 1
    arc = forward if (len(forward) - 1) % 2 == ear_len % 2 else backward
    return arc + path[-2:0:-1]


def even_cycle(g: Graph) -> Optional[CycleWitness]:
    """An even simple cycle, or None iff every block is a bridge or an odd cycle."""
    _require_undirected(g)
    for block in block_decomposition(g).blocks:
        if len(block) < 2:
            continue
        sub, verts = _block_graph(g, block)
        cyc = _even_cycle_in_block(sub)
        if cyc is not None:
            return CycleWitness(tuple(verts[i] for i in cyc))
    return None


def decide_uc_condition_case(g: Graph, rs: ResidueSet, max_vertices: Optional[int] = MAX_ORACLE_VERTICES) -> bool:
    """Decide UC(S, m) when 0 is not in S and S's complement is closed.

    Reduces to "is there a cycle whose length is not a multiple of g".
    """
    _require_undirected(g)
    try:
        red = thm7_reduce(rs)
    except PreconditionError as exc:
        raise ConditionUnsupported(str(exc)) from None
    if red.g == 1:
        return False
    if red.g == 2:
        return odd_cycle(g) is not None
    return oracle_decide(g, red.reduced, max_vertices=max_vertices)
