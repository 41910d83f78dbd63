"""Graph values and the edge-list text format.

Format::

    # optional comments
    directed 3
    0 1
    1 2
    2 0

Vertices are dense ids ``0..n-1``. Undirected edges are stored as ``(u, v)``
with ``u < v``.
"""
from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphFormatError, NotAWalk

DIRECTED = "directed"
UNDIRECTED = "undirected"
MAX_VERTICES = 1 << 20


@dataclass(frozen=True)
class Graph:
    kind: str
    n: int
    edges: frozenset
    _succ: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in (DIRECTED, UNDIRECTED):
            raise GraphFormatError(f"unknown graph kind {self.kind!r}")
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphFormatError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        succ: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) has endpoint outside [0, {self.n})")
            if self.kind == UNDIRECTED:
                if u == v:
                    raise GraphFormatError(f"self-loop at {u} in undirected graph")
                if u > v:
                    raise GraphFormatError("undirected edges must be stored canonically (u < v)")
                succ[u].append(v)
                succ[v].append(u)
            else:
                succ[u].append(v)
        object.__setattr__(self, "_succ", tuple(tuple(sorted(s)) for s in succ))

    @classmethod
    def from_edges(cls, kind: str, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, canonicalizing undirected pairs and collapsing duplicates."""
        if kind == UNDIRECTED:
            canon = set()
            for u, v in edges:
                if u == v:
                    raise GraphFormatError(f"self-loop at {u} in undirected graph")
                canon.add((u, v) if u < v else (v, u))
        else:
            canon = {(u, v) for u, v in edges}
        return cls(kind, n, frozenset(canon))

    @property
    def directed(self) -> bool:
        return self.kind == DIRECTED

    def neighbors(self, v: int) -> tuple:
        """Out-neighbours (directed) or neighbours (undirected), ascending."""
        return self._succ[v]

    def adjacency(self) -> tuple:
        return self._succ

    def has_edge(self, u: int, v: int) -> bool:
        if self.kind == UNDIRECTED:
            return (min(u, v), max(u, v)) in self.edges
        return (u, v) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def serialize(self) -> str:
        lines = [f"{self.kind} {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode()).hexdigest()[:16]


def parse_graph(text) -> Graph:
    """Parse the edge-list format from ``str`` or ``bytes``.

    Duplicate edges emit a ``UserWarning`` and are collapsed.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2 or parts[0] not in (DIRECTED, UNDIRECTED):
                raise GraphFormatError(f"line {lineno}: expected '<directed|undirected> <n>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if not 0 <= n <= MAX_VERTICES:
                raise GraphFormatError(f"line {lineno}: vertex count {n} outside [0, {MAX_VERTICES}]")
            header = (parts[0], n)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        if not (0 <= u < header[1] and 0 <= v < header[1]):
            raise GraphFormatError(f"line {lineno}: endpoint out of range [0, {header[1]})")
        if header[0] == UNDIRECTED and u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u} in undirected graph")
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing header line")
    kind, n = header
    g = Graph.from_edges(kind, n, edges)
    if len(g.edges) != len(edges):
        warnings.warn(f"{len(edges) - len(g.edges)} duplicate edge(s) collapsed", UserWarning, stacklevel=2)
    return g


def walk_is_cycle(g: Graph, walk: Sequence[int]) -> bool:
    """True iff the closed walk ``walk`` (closing edge implicit) is a simple cycle.

    Raises NotAWalk if some consecutive pair, including the closing pair, is
    not an edge of ``g``.
    """
    k = len(walk)
    if k == 0:
        raise NotAWalk("empty vertex sequence")
    for i in range(k):
        u, v = walk[i], walk[(i + 1) % k]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise NotAWalk(f"({u}, {v}) is not an edge")
    if len(set(walk)) != k:
        return False
    return g.directed or k >= 3


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle given by its vertex sequence; the closing edge is implicit."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        if not walk_is_cycle(g, self.vertices):
            raise ValueError(f"{self.vertices} is not a simple cycle of the graph")
