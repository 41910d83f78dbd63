"""Arithmetic on residue sets and the tractability verdict tables.

Everything here is pure and depends only on ``(S, m)``, never on a graph.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PreconditionError

MAX_MODULUS = 64


@dataclass(frozen=True)
class ResidueSet:
    m: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_MODULUS:
            raise ValueError(f"modulus {self.m} outside [1, {MAX_MODULUS}]")
        if self.mask < 0 or self.mask >> self.m:
            raise ValueError(f"mask {self.mask:#x} has bits outside [0, {self.m})")

    @classmethod
    def of(cls, m: int, members: Iterable[int]) -> "ResidueSet":
        mask = 0
        for r in members:
            if not 0 <= r < m:
                raise ValueError(f"residue {r} outside [0, {m})")
            mask |= 1 << r
        return cls(m, mask)

    @classmethod
    def parse(cls, m: int, text: str) -> "ResidueSet":
        """Parse ``"a,b,c"``; the empty string is the empty set."""
        text = text.strip()
        if not text:
            return cls(m, 0)
        try:
            members = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"residue set {text!r} is not a comma-separated integer list") from None
        return cls.of(m, members)

    @property
    def members(self) -> tuple:
        return tuple(r for r in range(self.m) if self.mask >> r & 1)

    def __contains__(self, r: int) -> bool:
        return 0 <= r < self.m and bool(self.mask >> r & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.m, ((1 << self.m) - 1) & ~self.mask)

    def is_full(self) -> bool:
        return self.mask == (1 << self.m) - 1

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + f"}} mod {self.m}"


class Verdict(enum.Enum):
    TRACTABLE_HERE = "TractableHere"
    TRACTABLE_EXTERNAL = "TractableExternal"
    NP_COMPLETE = "NpComplete"
    OPEN = "Open"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    citation: str
    witness: Optional[tuple] = None  # (p, d1, d2) for NP_COMPLETE

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict.value, "citation": self.citation}
        if self.witness is not None:
            p, d1, d2 = self.witness
            out["witness"] = {"p": p, "d1": d1, "d2": d2}
        return out


@dataclass(frozen=True)
class DivisorReduction:
    g: int
    reduced: ResidueSet
    generators: tuple  # nonzero members a_i of the closed set, ascending
    coefficients: tuple  # nonnegative k_i' with sum(k_i' a_i) = g (mod m)


def complement_closed(rs: ResidueSet):
    """Check the tractability condition on ``(S, m)``.

    Returns ``(True, None)`` when every ``d1 + d2 = p (mod m)`` with ``p`` in S
    has ``d1`` or ``d2`` in S, else ``(False, (p, d1, d2))`` for the first
    violation in ``(d1, d2)`` lexicographic order.
    """
    m = rs.m
    outside = [d for d in range(m) if d not in rs]
    for d1 in outside:
        for d2 in outside:
            p = (d1 + d2) % m
            if p in rs:
                return False, (p, d1, d2)
    return True, None


def classify_dc(rs: ResidueSet) -> Classification:
    if 0 not in rs:
        ok, witness = complement_closed(rs)
        if not ok:
            # d1 = 0 or d2 = 0 would force p = d2 or p = d1, so both are nonzero
            return Classification(Verdict.NP_COMPLETE, "thm1i", witness)
        if rs.mask == ((1 << rs.m) - 1) & ~1:
            return Classification(Verdict.TRACTABLE_HERE, "cor3")
        return Classification(Verdict.TRACTABLE_HERE, "thm1ii")
    if rs.is_full():
        return Classification(Verdict.TRACTABLE_HERE, "trivial")
    if rs.mask == 1 and rs.m <= 2:
        return Classification(Verdict.TRACTABLE_EXTERNAL, "rst-pfaffian")
    return Classification(Verdict.OPEN, "open")


def _all_but_one(rs: ResidueSet) -> Optional[int]:
    comp = rs.complement()
    if len(comp) == 1:
        return comp.members[0]
    return None


def classify_uc(rs: ResidueSet) -> Classification:
    missing = _all_but_one(rs)
    if missing is not None and (missing == 0 or rs.m == 2):
        # odd cycles, even cycles, and "some cycle not divisible by m" are wired here
        return Classification(Verdict.TRACTABLE_HERE, "thm6")
    if 0 in rs:
        return Classification(Verdict.TRACTABLE_EXTERNAL, "thm4")
    if missing is not None:
        return Classification(Verdict.TRACTABLE_EXTERNAL, "thm6")
    if complement_closed(rs)[0]:
        return Classification(Verdict.TRACTABLE_HERE, "thm7")
    return Classification(Verdict.OPEN, "open")


def is_additively_closed(rs: ResidueSet):
    """Return ``(True, None)`` or ``(False, (d1, d2))`` with ``d1 + d2 mod m`` outside."""
    members = rs.members
    for d1 in members:
        for d2 in members:
            if (d1 + d2) % rs.m not in rs:
                return False, (d1, d2)
    return True, None


def _bezout(values: list[int]) -> tuple[int, list[int]]:
    """gcd of ``values`` with integer coefficients, by iterated extended Euclid."""

    def egcd(a: int, b: int) -> tuple[int, int, int]:
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            q, a, b = a // b, b, a % b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        return a, x0, y0

    g, coeffs = values[0], [1]
    for v in values[1:]:
        g, x, y = egcd(g, v)
        coeffs = [c * x for c in coeffs] + [y]
    return g, coeffs


def lemma8_divisor(rs: ResidueSet) -> DivisorReduction:
    """Identify a nonempty addition-closed residue set as the multiples of some ``g | m``.

    ``g = gcd(a_1, ..., a_n, m)`` over the nonzero members. The returned
    coefficients are ``k_i + m*|k_i|`` for a Bezout combination
    ``sum k_i a_i + k_{n+1} m = g``, hence nonnegative with
    ``sum k_i' a_i = g (mod m)``.
    """
    if not len(rs):
        raise PreconditionError("residue set is empty")
    ok, pair = is_additively_closed(rs)
    if not ok:
        raise PreconditionError(f"set not closed under addition mod {rs.m}: {pair[0]}+{pair[1]}", pair)
    m = rs.m
    gens = tuple(a for a in rs.members if a)
    if not gens:
        g, coeffs = m, ()
    else:
        g, ks = _bezout(list(gens) + [m])
        coeffs = tuple(k + m * abs(k) for k in ks[:-1])
        assert g == math.gcd(*gens, m)
    if g > 1:
        reduced = ResidueSet.of(g, range(1, g))
    else:
        reduced = ResidueSet(1, 0)
    return DivisorReduction(g, reduced, gens, coeffs)


def thm7_reduce(rs: ResidueSet) -> DivisorReduction:
    """Reduce ``(S, m)`` with closed complement to ``({1..g-1}, g)``.

    For every ``x >= 1``: ``x mod m`` in S iff ``g`` does not divide ``x``.
    """
    if 0 in rs:
        raise PreconditionError("0 is in S", (0,))
    ok, witness = complement_closed(rs)
    if not ok:
        raise PreconditionError(f"complement of {rs} not closed under addition", witness)
    return lemma8_divisor(rs.complement())
