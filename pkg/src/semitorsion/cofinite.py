"""Cofinite integer sets: a finite sorted head plus a full tail [threshold, oo)."""

from __future__ import annotations

from typing import Iterable

import numpy as np


class CofiniteSet:
    """Set of integers containing every z >= threshold.

    `below` holds the members strictly less than `threshold`, sorted.
    The constructor normalizes: duplicates and elements >= threshold are
    dropped, then the threshold is pulled down while threshold - 1 is a
    member, so equal sets always have equal (threshold, below) pairs.
    """

    __slots__ = ("threshold", "below", "_head")

    threshold: int
    below: tuple[int, ...]

    def __init__(self, threshold: int, below: Iterable[int] = ()):
        t = int(threshold)
        head = sorted(set(int(x) for x in below if x < t))
        while head and head[-1] == t - 1:
            head.pop()
            t -= 1
        self.threshold = t
        self.below = tuple(head)
        self._head = frozenset(head)

    def contains(self, z: int) -> bool:
        return z >= self.threshold or z in self._head

    __contains__ = contains

    @property
    def min_element(self) -> int:
        return self.below[0] if self.below else self.threshold

    def members_upto(self, bound: int) -> list[int]:
        """All members z <= bound, ascending."""
        out = [x for x in self.below if x <= bound]
        out.extend(range(self.threshold, bound + 1))
        return out

    def intersect(self, other: "CofiniteSet") -> "CofiniteSet":
        t = max(self.threshold, other.threshold)
        head = [x for x in self.members_upto(t - 1) if x in other]
        return CofiniteSet(t, head)

    def union(self, other: "CofiniteSet") -> "CofiniteSet":
        t = min(self.threshold, other.threshold)
        head = set(x for x in self.below if x < t)
        head.update(x for x in other.below if x < t)
        return CofiniteSet(t, head)

    def shift(self, c: int) -> "CofiniteSet":
        return CofiniteSet(self.threshold + c, (x + c for x in self.below))

    def sumset(self, other: "CofiniteSet") -> "CofiniteSet":
        """{x + y : x in self, y in other}.

        Every z >= min(self) + other.threshold (and symmetrically) is a
        sum, so only head-by-head sums below that bound are enumerated.
        """
        t = min(self.min_element + other.threshold,
                other.min_element + self.threshold)
        if len(self.below) * len(other.below) > 4096:
            sums = _sumset_by_convolution(self.below, other.below, t)
        else:
            sums = {x + y for x in self.below for y in other.below if x + y < t}
        return CofiniteSet(t, sums)

    def difference(self, other: "CofiniteSet") -> list[int]:
        """Sorted members of self not in other; always finite.

        Both sets contain everything at or above the larger threshold,
        so the difference lives below it.
        """
        t = max(self.threshold, other.threshold)
        return [x for x in self.members_upto(t - 1) if x not in other]

    def issubset(self, other: "CofiniteSet") -> bool:
        return not self.difference(other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CofiniteSet)
            and self.threshold == other.threshold
            and self.below == other.below
        )

    def __hash__(self) -> int:
        return hash((self.threshold, self.below))

    def __repr__(self) -> str:
        head = ",".join(str(x) for x in self.below)
        sep = "," if head else ""
        return f"{{{head}{sep}{self.threshold}->}}"


def _sumset_by_convolution(xs: tuple[int, ...], ys: tuple[int, ...],
                           bound: int) -> list[int]:
    lo = xs[0] + ys[0]
    if bound <= lo:
        return []
    a = np.zeros(xs[-1] - xs[0] + 1, dtype=np.int32)
    a[[x - xs[0] for x in xs]] = 1
    b = np.zeros(ys[-1] - ys[0] + 1, dtype=np.int32)
    b[[y - ys[0] for y in ys]] = 1
    hits = np.convolve(a, b).nonzero()[0]
    return [int(h) + lo for h in hits if h + lo < bound]


def set_difference_card(x: CofiniteSet, y: CofiniteSet) -> int:
    """|x \\ y|.

    For this representation the difference is always finite: above
    max(threshold_x, threshold_y) both sets contain every integer.
    """
    return len(x.difference(y))
