"""Bit-packed boolean matrices and shortest-cycle search by length doubling.

``WalkMatrixFamily`` holds one matrix per residue r: entry (i, j) is set iff a
walk i -> j of length l with ``0 < l <= k`` and ``l = r (mod m)`` exists.
Families for k = 1, 2, 4, ... are built by doubling; ``k_min`` is then found by
binary search over sums of those powers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ConditionUnsupported
from .graph import CycleWitness, Graph, walk_is_cycle
from .residues import ResidueSet
from .walks import _check_condition, _require_directed, product_path

WORD = 64
MAX_MATRIX_N = 4096
_WORD_DTYPE = np.dtype("<u8")


def _nwords(n: int) -> int:
    return max(1, -(-n // WORD))


@dataclass(frozen=True, eq=False)
class BoolMatrix:
    n: int
    words: np.ndarray  # shape (n, nwords), little-endian uint64, padding bits zero

    @classmethod
    def zeros(cls, n: int) -> "BoolMatrix":
        return cls(n, np.zeros((n, _nwords(n)), dtype=_WORD_DTYPE))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls.from_dense(np.eye(n, dtype=bool))

    @classmethod
    def from_dense(cls, dense) -> "BoolMatrix":
        dense = np.asarray(dense, dtype=bool)
        n = dense.shape[0]
        if dense.shape != (n, n):
            raise ValueError("matrix must be square")
        padded = np.zeros((n, _nwords(n) * WORD), dtype=bool)
        padded[:, :n] = dense
        packed = np.packbits(padded, axis=1, bitorder="little")
        return cls(n, packed.view(_WORD_DTYPE).copy())

    @classmethod
    def adjacency(cls, g: Graph) -> "BoolMatrix":
        dense = np.zeros((g.n, g.n), dtype=bool)
        if g.edges:
            e = np.array(sorted(g.edges))
            dense[e[:, 0], e[:, 1]] = True
            if not g.directed:
                dense[e[:, 1], e[:, 0]] = True
        return cls.from_dense(dense)

    def to_dense(self) -> np.ndarray:
        bits = np.unpackbits(self.words.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.n].astype(bool)

    def entry(self, i: int, j: int) -> bool:
        return bool(int(self.words[i, j // WORD]) >> (j % WORD) & 1)

    def diagonal(self) -> np.ndarray:
        idx = np.arange(self.n)
        w = self.words[idx, idx // WORD]
        return ((w >> (idx % WORD).astype(_WORD_DTYPE)) & np.uint64(1)).astype(bool)

    def any(self) -> bool:
        return bool(self.words.any())

    def __or__(self, other: "BoolMatrix") -> "BoolMatrix":
        _same_dim(self, other)
        return BoolMatrix(self.n, self.words | other.words)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolMatrix) and self.n == other.n and np.array_equal(self.words, other.words)

    def __repr__(self):
        return f"BoolMatrix(n={self.n}, ones={int(self.to_dense().sum())})"


def _same_dim(a: BoolMatrix, b: BoolMatrix) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def _mul_many(lefts: Sequence[BoolMatrix], right: BoolMatrix) -> list[np.ndarray]:
    """Boolean products ``L @ right`` for each L, sharing four-Russians tables.

    Columns of L are taken 8 at a time; for each block a 256-entry table of
    ORs of the matching 8 rows of ``right`` is built once and then gathered
    by the row bytes of every left operand.
    """
    n, nw = right.n, right.words.shape[1]
    outs = [np.zeros((n, nw), dtype=_WORD_DTYPE) for _ in lefts]
    if n == 0 or not right.any():
        return outs
    live = [(k, a.words.view(np.uint8)) for k, a in enumerate(lefts) if a.any()]
    if not live:
        return outs
    table = np.zeros((256, nw), dtype=_WORD_DTYPE)
    for block in range(-(-n // 8)):
        lo = block * 8
        rows = right.words[lo : lo + 8]
        if not rows.any():
            continue
        for bit in range(len(rows)):
            span = 1 << bit
            np.bitwise_or(table[:span], rows[bit], out=table[span : 2 * span])
        for bit in range(len(rows), 8):
            span = 1 << bit
            table[span : 2 * span] = table[:span]
        for k, abytes in live:
            col = abytes[:, block]
            if col.any():
                outs[k] |= table[col]
    return outs


def bool_mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    _same_dim(a, b)
    return BoolMatrix(a.n, _mul_many([a], b)[0])


@dataclass(frozen=True)
class WalkMatrixFamily:
    k: int
    m: int
    mats: tuple  # BoolMatrix per residue

    @property
    def n(self) -> int:
        return self.mats[0].n

    @classmethod
    def zero(cls, n: int, m: int) -> "WalkMatrixFamily":
        return cls(0, m, tuple(BoolMatrix.zeros(n) for _ in range(m)))

    @classmethod
    def base(cls, g: Graph, m: int) -> "WalkMatrixFamily":
        """Walks of length exactly 1: the adjacency matrix sits at residue 1 mod m."""
        mats = [BoolMatrix.zeros(g.n) for _ in range(m)]
        mats[1 % m] = BoolMatrix.adjacency(g)
        return cls(1, m, tuple(mats))

    def diagonal_hit(self, rs: ResidueSet) -> Optional[tuple]:
        """Lowest ``(i, r)`` with r in S and a closed walk at i, or None."""
        best = None
        for r in rs.members:
            diag = self.mats[r].diagonal()
            if diag.any():
                i = int(np.argmax(diag))
                if best is None or i < best[0]:
                    best = (i, r)
        return best


def combine(f1: WalkMatrixFamily, f2: WalkMatrixFamily) -> WalkMatrixFamily:
    """Family for length bound ``f1.k + f2.k``.

    ``out[r] = OR_i (f1[i] * f2[r-i]) | f1[r] | f2[r]``. A walk longer than
    ``f1.k`` splits into a prefix of length exactly ``f1.k`` (covered by f1)
    and a suffix no longer than ``f2.k``.
    """
    if f1.m != f2.m or f1.n != f2.n:
        raise ValueError("families differ in modulus or dimension")
    m = f1.m
    acc = [f1.mats[r].words | f2.mats[r].words for r in range(m)]
    for j in range(m):
        products = _mul_many(f1.mats, f2.mats[j])
        for i, prod in enumerate(products):
            acc[(i + j) % m] |= prod
    return WalkMatrixFamily(f1.k + f2.k, m, tuple(BoolMatrix(f1.n, w) for w in acc))


def walk_family(g: Graph, m: int, k: int) -> WalkMatrixFamily:
    """Family for an arbitrary bound k, via the binary expansion of k."""
    fam = WalkMatrixFamily.zero(g.n, m)
    power = WalkMatrixFamily.base(g, m)
    while k:
        if k & 1:
            fam = combine(fam, power)
        k >>= 1
        if k:
            power = combine(power, power)
    return fam


def _check_size(g: Graph) -> None:
    _require_directed(g)
    if g.n > MAX_MATRIX_N:
        raise ValueError(f"matrix engine accepts n <= {MAX_MATRIX_N}, got {g.n}")


def kmin_search(g: Graph, rs: ResidueSet) -> Optional[tuple]:
    """Least ``k <= n`` with a closed walk of length k and ``k mod m`` in S.

    Returns ``(k_min, start vertex, residue)`` or None.
    """
    _check_size(g)
    n, m = g.n, rs.m
    if n == 0 or not len(rs):
        return None
    powers = [WalkMatrixFamily.base(g, m)]
    while powers[-1].k < n:
        powers.append(combine(powers[-1], powers[-1]))
    cur = WalkMatrixFamily.zero(n, m)
    for fam in reversed(powers):
        if cur.k + fam.k > n:
            continue
        cand = combine(cur, fam)
        if cand.diagonal_hit(rs) is None:
            cur = cand
    if cur.k >= n:
        return None
    final = combine(cur, powers[0])
    hit = final.diagonal_hit(rs)
    assert hit is not None, "binary search invariant broken"
    return final.k, hit[0], hit[1]


def shortest_cycle_mod(g: Graph, rs: ResidueSet) -> Optional[CycleWitness]:
    """Shortest simple cycle with length mod m in S (requires the closure condition)."""
    _check_size(g)
    _check_condition(rs)
    found = kmin_search(g, rs)
    if found is None:
        return None
    k, i, r = found
    walk = product_path(g, rs.m, i, r)
    if walk is None or len(walk) != k or not walk_is_cycle(g, walk):
        raise ConditionUnsupported(f"witness extraction failed for k_min={k} at vertex {i}")
    return CycleWitness(tuple(walk))
