"""Shared brute-force oracles, kept independent of the library internals."""

from __future__ import annotations

import pytest


def knapsack_members(gens: list[int], bound: int) -> set[int]:
    """Non-negative integer combinations of gens up to bound, by BFS."""
    reached = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y <= bound and y not in reached:
                reached.add(y)
                frontier.append(y)
    return reached


def naive_ideal_members(semi_gens: list[int], ideal_gens: list[int],
                        bound: int) -> set[int]:
    """Union of g + S truncated at bound, built from scratch."""
    base = knapsack_members(semi_gens, bound - min(ideal_gens))
    return {g + s for g in ideal_gens for s in base if g + s <= bound}


def naive_dual_members(semi_gens: list[int], ideal_gens: list[int],
                       lo: int, hi: int) -> set[int]:
    """{z in [lo, hi] : z + every ideal generator is a combination}."""
    top = hi + max(ideal_gens)
    base = knapsack_members(semi_gens, top)
    return {
        z for z in range(lo, hi + 1)
        if all(z + g >= 0 and (z + g) in base for g in ideal_gens)
    }


@pytest.fixture
def oracles():
    return knapsack_members, naive_ideal_members, naive_dual_members
