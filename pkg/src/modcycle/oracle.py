"""Brute-force ground truth: enumerate every simple cycle.

Directed graphs use Johnson's blocking search anchored at the least vertex
of each cycle. Undirected graphs run the same search on the symmetric
digraph, dropping 2-cycles and keeping the orientation whose second vertex
is smaller than its last, so each cycle appears once in canonical form.
"""
from __future__ import annotations

import math
import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import OracleLimit
from .graph import CycleWitness, Graph
from .residues import ResidueSet

DEFAULT_CAP = 10**6
MAX_ORACLE_VERTICES = 16


def default_cap() -> int:
    env = os.environ.get("MODCYCLE_ORACLE_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class CycleInventory:
    lengths: frozenset
    count: int
    truncated: bool


def _johnson(adj, n: int) -> Iterator[list]:
    for s in range(n):
        blocked = {s}
        block_map: dict = defaultdict(set)
        path = [s]
        stack = [iter(adj[s])]
        closed = [False]
        while stack:
            for w in stack[-1]:
                if w < s:
                    continue
                if w == s:
                    yield list(path)
                    closed[-1] = True
                elif w not in blocked:
                    path.append(w)
                    stack.append(iter(adj[w]))
                    closed.append(False)
                    blocked.add(w)
                    break
            else:
                v = path.pop()
                stack.pop()
                was_closed = closed.pop()
                if was_closed:
                    if closed:
                        closed[-1] = True
                    todo = [v]
                    while todo:
                        x = todo.pop()
                        if x in blocked:
                            blocked.discard(x)
                            todo.extend(block_map.pop(x, ()))
                else:
                    for w in adj[v]:
                        if w >= s:
                            block_map[w].add(v)


def enumerate_cycles(
    g: Graph, cap: Optional[int] = None, max_vertices: Optional[int] = MAX_ORACLE_VERTICES
) -> Iterator[CycleWitness]:
    """Yield each simple cycle once, deterministically.

    Raises OracleLimit if ``g`` has more than ``max_vertices`` vertices (pass
    None to lift the gate) or more than ``cap`` cycles.
    """
    if max_vertices is not None and g.n > max_vertices:
        raise OracleLimit(f"oracle gated to n <= {max_vertices}, got n = {g.n}")
    cap = default_cap() if cap is None else cap
    count = 0
    for cyc in _johnson(g.adjacency(), g.n):
        if not g.directed and (len(cyc) < 3 or cyc[1] > cyc[-1]):
            continue
        if count == cap:
            raise OracleLimit(f"more than {cap} cycles; enumeration truncated")
        count += 1
        yield CycleWitness(tuple(cyc))


def cycle_inventory(g: Graph, cap: Optional[int] = None, max_vertices: Optional[int] = MAX_ORACLE_VERTICES) -> CycleInventory:
    lengths = set()
    count = 0
    try:
        for c in enumerate_cycles(g, cap, max_vertices):
            lengths.add(c.length)
            count += 1
    except OracleLimit:
        if max_vertices is not None and g.n > max_vertices:
            raise
        return CycleInventory(frozenset(lengths), count, True)
    return CycleInventory(frozenset(lengths), count, False)


def oracle_decide(g: Graph, rs: ResidueSet, cap: Optional[int] = None, max_vertices: Optional[int] = MAX_ORACLE_VERTICES) -> bool:
    """Literal definition: is there a simple cycle with length mod m in S?"""
    for c in enumerate_cycles(g, cap, max_vertices):
        if c.length % rs.m in rs:
            return True
    return False


def period(g: Graph, cap: Optional[int] = None, max_vertices: Optional[int] = MAX_ORACLE_VERTICES) -> int:
    """gcd of all simple-cycle lengths; 0 for acyclic graphs."""
    p = 0
    for c in enumerate_cycles(g, cap, max_vertices):
        p = math.gcd(p, c.length)
    return p


def oracle_shortest(g: Graph, rs: ResidueSet, cap: Optional[int] = None, max_vertices: Optional[int] = MAX_ORACLE_VERTICES) -> Optional[CycleWitness]:
    best = None
    for c in enumerate_cycles(g, cap, max_vertices):
        if c.length % rs.m not in rs:
            continue
        if best is None or (c.length, c.vertices) < (best.length, best.vertices):
            best = c
    return best
