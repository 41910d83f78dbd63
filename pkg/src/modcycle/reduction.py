"""Subdivision gadget mapping "cycle through s and t?" onto DC(S, m).

Every edge into s becomes a path of length d1, every edge into t a path of
length d2, and every other edge a path of length m. Cycles of the result then
have length 0, d1, d2 or d1+d2 = p (mod m) depending on which of s and t they
pass through.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import DIRECTED, Graph
from .oracle import MAX_ORACLE_VERTICES, enumerate_cycles
from .residues import ResidueSet


@dataclass(frozen=True)
class ReductionParams:
    m: int
    p: int
    d1: int
    d2: int

    def validate(self, rs: ResidueSet) -> None:
        if rs.m != self.m:
            raise ValueError(f"params modulus {self.m} differs from residue set modulus {rs.m}")
        if 0 in rs:
            raise ValueError("0 must not be in S")
        if self.p not in rs:
            raise ValueError(f"p = {self.p} is not in S")
        for name, d in (("d1", self.d1), ("d2", self.d2)):
            if not 1 <= d < self.m:
                raise ValueError(f"{name} = {d} outside [1, {self.m})")
            if d in rs:
                raise ValueError(f"{name} = {d} is in S")
        if (self.d1 + self.d2) % self.m != self.p:
            raise ValueError(f"d1 + d2 = {self.d1 + self.d2} is not {self.p} mod {self.m}")


def expected_vertex_count(g: Graph, s: int, t: int, params: ReductionParams) -> int:
    into_s = sum(1 for _, v in g.edges if v == s)
    into_t = sum(1 for _, v in g.edges if v == t)
    other = len(g.edges) - into_s - into_t
    return g.n + (params.d1 - 1) * into_s + (params.d2 - 1) * into_t + (params.m - 1) * other


def reduce_st_cycle(g: Graph, s: int, t: int, params: ReductionParams, rs: ResidueSet) -> Graph:
    """Build the subdivided graph; fresh vertices follow the originals in sorted edge order."""
    if not g.directed:
        raise ValueError("reduction takes a directed graph")
    if s == t:
        raise ValueError("s and t must differ")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError("s or t is not a vertex")
    params.validate(rs)
    n = g.n
    edges = []
    for u, v in g.sorted_edges():
        length = params.d1 if v == s else params.d2 if v == t else params.m
        chain = [u] + list(range(n, n + length - 1)) + [v]
        n += length - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(DIRECTED, n, edges)


def cycle_through_pair(g: Graph, s: int, t: int, max_vertices: Optional[int] = MAX_ORACLE_VERTICES) -> bool:
    """Brute force: does some simple directed cycle visit both s and t?"""
    for c in enumerate_cycles(g, max_vertices=max_vertices):
        if s in c.vertices and t in c.vertices:
            return True
    return False
