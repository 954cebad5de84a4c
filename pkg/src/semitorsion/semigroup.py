"""Numerical semigroups: construction, membership, gaps, Apery sets, symmetry."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable


class NumericalSemigroup:
    """A submonoid of the non-negative integers with finite complement.

    Stores the minimal generating set, the Frobenius number (largest
    integer not in the semigroup, -1 for the full monoid) and a boolean
    membership table over [0, frobenius] so that `contains` is O(1).
    Instances are immutable and hashable.
    """

    __slots__ = ("generators", "frobenius", "multiplicity", "_table", "_hash")

    generators: tuple[int, ...]
    frobenius: int
    multiplicity: int

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise ValueError("generator list must be non-empty")
        if gens[0] < 1:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        if math.gcd(*gens) != 1:
            raise ValueError(
                f"gcd of generators is {math.gcd(*gens)}, not 1: "
                "the complement would be infinite"
            )

        table = _membership_table(gens)
        frob = len(table) - 1
        while frob >= 0 and table[frob]:
            frob -= 1

        minimal = tuple(
            g for g in gens
            if not any(table[m] and table[g - m] for m in range(1, g))
        )
        self.generators = minimal
        self.frobenius = frob
        self.multiplicity = minimal[0]
        # Queries above the Frobenius number never touch the table.
        self._table = bytes(table[: max(frob + 1, 1)])
        self._hash = hash(minimal)

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z > self.frobenius:
            return True
        return bool(self._table[z])

    __contains__ = contains

    def gaps(self) -> list[int]:
        """The non-members in [0, frobenius], ascending."""
        return [z for z in range(self.frobenius + 1) if not self._table[z]]

    def genus(self) -> int:
        return (self.frobenius + 1) - sum(self._table[: self.frobenius + 1])

    def is_symmetric(self) -> bool:
        """True iff z is a member exactly when frobenius - z is not.

        Checking z in [-1, frobenius + 1] suffices: outside that window
        one side is forced negative and the other forced above F.
        """
        f = self.frobenius
        return all(
            self.contains(z) != self.contains(f - z) for z in range(-1, f + 2)
        )

    def members_upto(self, bound: int) -> list[int]:
        """All members in [0, bound]."""
        return [z for z in range(bound + 1) if self.contains(z)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NumericalSemigroup)
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"


def _membership_table(gens: list[int]) -> bytearray:
    """Boolean table of non-negative combinations of `gens`.

    The bound starts at the product of the two largest generators, which
    is past the Frobenius number for any generating set with gcd 1, and
    doubles until the tail of the table is a full run of length
    min(gens) (past that point every integer decomposes).
    """
    lead = gens[-1] * (gens[-2] if len(gens) > 1 else gens[-1])
    bound = max(lead, gens[-1] + 1, 2)
    step = gens[0]
    while True:
        table = bytearray(bound + 1)
        table[0] = 1
        for z in range(gens[0], bound + 1):
            for g in gens:
                if g > z:
                    break
                if table[z - g]:
                    table[z] = 1
                    break
        if all(table[bound - step + 1 : bound + 1]):
            return table
        bound *= 2


@lru_cache(maxsize=None)
def _cached(generators: tuple[int, ...]) -> NumericalSemigroup:
    return NumericalSemigroup(generators)


def make_semigroup(generators: Iterable[int]) -> NumericalSemigroup:
    """Build the numerical semigroup generated by `generators`.

    The stored generating set is reduced to the minimal one. Repeated
    calls with the same generators return a shared instance.
    """
    return _cached(tuple(sorted(set(int(g) for g in generators))))


def contains(s: NumericalSemigroup, z: int) -> bool:
    return s.contains(z)


def gaps(s: NumericalSemigroup) -> list[int]:
    return s.gaps()


def is_symmetric(s: NumericalSemigroup) -> bool:
    return s.is_symmetric()
