"""Closed-walk residues on directed graphs.

When the complement of S is closed under addition mod m, a closed walk with
residue in S always yields a simple cycle with residue in S, so detecting
closed walks decides the cycle question. Two independent routes compute the
realized residues: strongly-connected-component periods (fast) and
reachability in the layered product graph ``(v, r)`` (reference).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import ConditionUnsupported
from .graph import Graph
from .residues import ResidueSet, complement_closed


def _require_directed(g: Graph) -> None:
    if not g.directed:
        raise ValueError("operation requires a directed graph")


def strongly_connected_components(g: Graph) -> list[int]:
    """Component id per vertex (iterative Tarjan; ids in reverse topological order)."""
    n = g.n
    adj = g.adjacency()
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


@dataclass(frozen=True)
class SccPeriodTable:
    scc_id: tuple
    period: tuple  # indexed by component id; 0 when the component has no internal edge

    def vertex_period(self, v: int) -> int:
        return self.period[self.scc_id[v]]


def scc_periods(g: Graph) -> SccPeriodTable:
    _require_directed(g)
    comp = strongly_connected_components(g)
    ncomp = max(comp) + 1 if comp else 0
    adj = g.adjacency()
    level = [-1] * g.n
    period = [0] * ncomp
    for root in range(g.n):
        c = comp[root]
        if level[root] != -1:
            continue
        level[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if comp[v] != c:
                    continue
                if level[v] == -1:
                    level[v] = level[u] + 1
                    queue.append(v)
                period[c] = math.gcd(period[c], abs(level[u] + 1 - level[v]))
    # an internal edge with zero level slack would leave period 0; impossible
    # in a component with internal edges since some edge closes back to the root
    return SccPeriodTable(tuple(comp), tuple(period))


def closed_walk_residues(g: Graph, m: int) -> frozenset:
    """Residues ``l mod m`` over all closed-walk lengths ``l >= 1`` (period route)."""
    _require_directed(g)
    if not 1 <= m <= 64:
        raise ValueError(f"modulus {m} outside [1, 64]")
    out = set()
    for p in set(scc_periods(g).period):
        if p:
            step = math.gcd(p, m)
            out.update(range(0, m, step))
    return frozenset(out)


@dataclass(frozen=True)
class ProductGraph:
    """Layered graph on pairs ``(v, r)``; each base edge ``u -> v`` gives ``(u, r) -> (v, r+1 mod m)``."""

    base: Graph
    m: int

    @property
    def n(self) -> int:
        return self.base.n * self.m

    def successors(self, state: tuple) -> list:
        v, r = state
        nr = (r + 1) % self.m
        return [(w, nr) for w in self.base.neighbors(v)]


def closed_walk_residues_product(g: Graph, m: int) -> frozenset:
    """Reference route: residue r is realized iff some (v,0) reaches (v,r) in >= 1 step."""
    _require_directed(g)
    pg = ProductGraph(g, m)
    out = set()
    for v in range(g.n):
        seen = set()
        queue = deque()
        for s in pg.successors((v, 0)):
            if s not in seen:
                seen.add(s)
                queue.append(s)
        while queue:
            state = queue.popleft()
            for s in pg.successors(state):
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        out.update(r for (w, r) in seen if w == v)
        if len(out) == m:
            break
    return frozenset(out)


def _check_condition(rs: ResidueSet) -> None:
    if 0 in rs:
        raise ConditionUnsupported(f"0 is in S for {rs}; closed-walk detection is unsound here")
    ok, witness = complement_closed(rs)
    if not ok:
        p, d1, d2 = witness
        raise ConditionUnsupported(
            f"{rs}: {d1}+{d2} = {p} (mod {rs.m}) with {d1},{d2} outside S; instance is NP-complete"
        )


def decide_dc(g: Graph, rs: ResidueSet) -> bool:
    """Does ``g`` have a simple directed cycle whose length mod m lies in S?"""
    _require_directed(g)
    _check_condition(rs)
    return bool(closed_walk_residues(g, rs.m) & set(rs.members))


def shortest_closed_walk(g: Graph, rs: ResidueSet) -> Optional[tuple]:
    """Shortest closed walk with length mod m in S, as ``(length, walk)``.

    ``walk`` lists the vertices without repeating the start. Ties go to the
    lowest start vertex. BFS from each (v, 0) is confined to v's strongly
    connected component and cut off at the best length found so far.
    """
    _require_directed(g)
    if not len(rs):
        raise ValueError("residue set is empty")
    m = rs.m
    targets = rs.mask
    comp = strongly_connected_components(g)
    adj = g.adjacency()
    best_len = None
    best_walk = None
    for v in range(g.n):
        c = comp[v]
        parent: dict = {}
        frontier = [(v, 0)]
        depth = 0
        found = None
        while frontier and found is None:
            depth += 1
            if best_len is not None and depth >= best_len:
                break
            r = depth % m
            nxt = []
            for state in frontier:
                for w in adj[state[0]]:
                    if comp[w] != c:
                        continue
                    s = (w, r)
                    if s in parent:
                        continue
                    parent[s] = state
                    if w == v and targets >> r & 1:
                        found = s
                        break
                    nxt.append(s)
                if found is not None:
                    break
            frontier = nxt
        if found is not None:
            walk = []
            s = found
            while True:
                s = parent[s]
                walk.append(s[0])
                if s == (v, 0):
                    break
            walk.reverse()
            best_len, best_walk = depth, tuple(walk)
    if best_len is None:
        return None
    return best_len, best_walk


def product_path(g: Graph, m: int, v: int, r: int) -> Optional[tuple]:
    """Shortest walk from v back to v with length = r (mod m) and >= 1 edge.

    BFS from (v, 0) to (v, r) in the product graph; returns the vertex sequence
    without the repeated endpoint, or None when unreachable.
    """
    adj = g.adjacency()
    parent: dict = {}
    frontier = [(v, 0)]
    depth = 0
    while frontier:
        depth += 1
        nr = depth % m
        nxt = []
        for state in frontier:
            for w in adj[state[0]]:
                s = (w, nr)
                if s in parent:
                    continue
                parent[s] = state
                if w == v and nr == r:
                    walk = []
                    while True:
                        s = parent[s]
                        walk.append(s[0])
                        if s == (v, 0):
                            return tuple(reversed(walk))
                nxt.append(s)
        frontier = nxt
    return None
