"""Exhaustive and seeded verification campaigns over two-generated semigroups.

Campaigns enumerate coprime pairs (a, b) with b > a > 1 and a*b capped,
and for each semigroup all canonical ideals: minimal generator sets
containing 0 drawn from a window [0, W). Torsion totals are shift
invariant, so anchoring the least generator at 0 loses nothing.

The torsion totals for the pair sweeps are computed by a vectorized
engine that evaluates the fiber edge masks for a whole batch of ideals
at once and memoizes component counts per edge mask; it is checked
against the definitional graph construction in the test suite.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import random
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .hypersurface import dual_formula, dual_symmetric, make_hypersurface
from .huneke_wiegand import hw_check_semigroup
from .ideals import ideal_dual, make_ideal
from .semigroup import NumericalSemigroup, make_semigroup
from .torsion import fiber_class_count, fiber_graph, scan_window

__all__ = [
    "SearchSpec",
    "SearchSummary",
    "MODES",
    "coprime_pairs",
    "canonical_ideal_gens",
    "TauEngine",
    "run_search",
]

MODES = ("half-mu-bound", "dual-consistency", "hw", "oracle-compare")


def coprime_pairs(ab_max: int) -> list[tuple[int, int]]:
    """All (a, b) with b > a > 1, gcd 1 and a*b <= ab_max, sorted."""
    out = []
    a = 2
    while a * (a + 1) <= ab_max:
        for b in range(a + 1, ab_max // a + 1):
            if math.gcd(a, b) == 1:
                out.append((a, b))
        a += 1
    return out


def canonical_ideal_gens(s: NumericalSemigroup, window: int,
                         mu_max: int) -> list[tuple[int, ...]]:
    """Minimal generator tuples (0, ...) with entries in [0, window).

    A tuple qualifies when no two entries differ by a semigroup member,
    which makes it the minimal generating set of the ideal it spans.
    """
    out: list[tuple[int, ...]] = []

    def extend(cur: list[int], start: int) -> None:
        out.append(tuple(cur))
        if len(cur) == mu_max:
            return
        for g in range(start, window):
            if all(not s.contains(g - h) for h in cur):
                cur.append(g)
                extend(cur, g + 1)
                cur.pop()

    extend([0], 1)
    return out


# component counts per edge mask are shape-dependent but semigroup-free
_MASK_TAU: dict[tuple[int, int, int], int] = {}


def _tau_of_mask(mask: int, ma: int, mb: int) -> int:
    """Torsion at one z from the edge bitmask (bit i*mb + j for v_i w_j).

    Every present vertex carries at least one edge (membership in an
    ideal means membership in some generator translate), so components
    are exactly the transitive row-merge groups of the mask.
    """
    key = (mask, ma, mb)
    cached = _MASK_TAU.get(key)
    if cached is not None:
        return cached
    full = (1 << mb) - 1
    rows = [(mask >> (i * mb)) & full for i in range(ma)]
    rows = [r for r in rows if r]
    comps = 0
    while rows:
        cur = rows.pop()
        changed = True
        while changed:
            changed = False
            rest = []
            for r in rows:
                if r & cur:
                    cur |= r
                    changed = True
                else:
                    rest.append(r)
            rows = rest
        comps += 1
    tau = max(0, comps - 1)
    _MASK_TAU[key] = tau
    return tau


class TauEngine:
    """Vectorized torsion totals for generator tuples over one semigroup."""

    def __init__(self, s: NumericalSemigroup):
        self.s = s
        self.f = s.frobenius
        self._mem = np.zeros(max(self.f + 1, 1), dtype=bool)
        for z in range(self.f + 1):
            self._mem[z] = s.contains(z)

    def _member(self, idx: np.ndarray) -> np.ndarray:
        out = idx > self.f
        if self.f >= 0:
            inside = (idx >= 0) & (idx <= self.f)
            out |= inside & self._mem[np.where(inside, idx, 0)]
        return out

    def tau_support_batch(
        self, ga: tuple[int, ...], gbs: list[tuple[int, ...]]
    ) -> tuple[np.ndarray, np.ndarray]:
        """(tau totals, support sizes) of (ga, gb) for gbs of equal length.

        Generator tuples must be sorted minimal sets. A shared z-window
        covers the whole batch; the extra fibers it adds for pairs with
        smaller spread carry no torsion.
        """
        mb = len(gbs[0])
        ma = len(ga)
        gb_arr = np.asarray(gbs, dtype=np.int64)  # (nB, mb)
        lo = ga[0] + int(gb_arr[:, 0].min())
        hi = self.f + ga[-1] + int(gb_arr[:, -1].max())
        if hi < lo:
            n = len(gbs)
            return np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64)
        z = np.arange(lo, hi + 1, dtype=np.int64)
        sums = np.asarray(ga, dtype=np.int64)[:, None] + gb_arr[:, None, :]
        # idx[k, w, i, j] = z[w] - ga[i] - gb[k][j]
        idx = z[None, :, None, None] - sums[:, None, :, :]
        edges = self._member(idx).reshape(len(gbs), len(z), ma * mb)
        pow2 = (1 << np.arange(ma * mb, dtype=np.int64))
        masks = edges.astype(np.int64) @ pow2
        vals, inv = np.unique(masks, return_inverse=True)
        lut = np.array([_tau_of_mask(int(v), ma, mb) for v in vals],
                       dtype=np.int64)
        tau_z = lut[inv].reshape(len(gbs), len(z))
        return tau_z.sum(axis=1), (tau_z > 0).sum(axis=1)

    def tau_support(self, ga: tuple[int, ...],
                    gb: tuple[int, ...]) -> tuple[int, int]:
        t, c = self.tau_support_batch(ga, [gb])
        return int(t[0]), int(c[0])


@dataclass
class SearchSpec:
    ab_max: int
    mode: str
    gen_window: int = 0  # 0 means a + b per semigroup
    mu_max: int = 4
    output_path: str | None = None
    parallelism: int = 1
    seed: int = 0
    samples: int = 200

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.ab_max < 6 or self.mu_max < 1 or self.parallelism < 1:
            raise ValueError("caps must be positive (ab_max >= 6)")
        if self.gen_window < 0 or self.samples < 1:
            raise ValueError("caps must be positive")

    def window_for(self, a: int, b: int) -> int:
        return self.gen_window if self.gen_window else a + b


@dataclass
class SearchSummary:
    mode: str
    records: int = 0
    violation_count: int = 0
    violations: list[dict] = field(default_factory=list)  # first 100 kept
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def _fold_min(self, key: str, value) -> None:
        if key not in self.stats or value < self.stats[key]:
            self.stats[key] = value

    def _fold_max(self, key: str, value) -> None:
        if key not in self.stats or value > self.stats[key]:
            self.stats[key] = value


def _gens_key(gens: tuple[int, ...]) -> str:
    return ",".join(str(g) for g in gens)


def _half_mu_records(a: int, b: int, window: int,
                     mu_max: int) -> Iterator[dict]:
    s = make_semigroup((a, b))
    engine = TauEngine(s)
    ideals = [g for g in canonical_ideal_gens(s, window, mu_max)
              if len(g) >= 2]
    by_mu: dict[int, list[tuple[int, ...]]] = {}
    for g in ideals:
        by_mu.setdefault(len(g), []).append(g)
    for ga in ideals:
        for mb, group in sorted(by_mu.items()):
            taus, supports = engine.tau_support_batch(ga, group)
            for gb, tau, support in zip(group, taus, supports):
                mm = len(ga) * mb
                yield {
                    "a": a, "b": b,
                    "gens_A": _gens_key(ga), "gens_B": _gens_key(gb),
                    "tau": int(tau), "support": int(support),
                    "mu_A": len(ga), "mu_B": mb,
                    "bound_ok": bool(int(tau) + int(support) >= mm
                                     and 2 * int(tau) >= mm),
                }


def _dual_records(a: int, b: int, window: int, mu_max: int) -> Iterator[dict]:
    h = make_hypersurface(a, b)
    s = h.base
    for gens in canonical_ideal_gens(s, window, mu_max):
        ideal = make_ideal(s, gens)
        via_formula = dual_formula(h, ideal)
        via_scan = ideal_dual(ideal)
        via_reflection = dual_symmetric(h, ideal)
        routes_agree = (via_formula == via_scan == via_reflection)
        bidual_ok = dual_formula(h, via_formula) == ideal
        yield {
            "a": a, "b": b,
            "gens_A": _gens_key(gens),
            "dual": _gens_key(via_formula.min_gens),
            "routes_agree": routes_agree,
            "bidual_ok": bidual_ok,
            "bound_ok": routes_agree and bidual_ok,
        }


def _hw_records(a: int, b: int, window: int, mu_max: int) -> Iterator[dict]:
    report = hw_check_semigroup(make_semigroup((a, b)))
    counts = list(report.per_gap.values())
    yield {
        "a": a, "b": b,
        "gap_count": len(counts),
        "min_count": min(counts) if counts else None,
        "max_count": max(counts) if counts else None,
        "all_positive": report.all_positive,
        "bound_ok": report.all_positive,
    }


_MODE_RUNNERS = {
    "half-mu-bound": _half_mu_records,
    "dual-consistency": _dual_records,
    "hw": _hw_records,
}


def _fold_record(summary: SearchSummary, record: dict) -> None:
    summary.records += 1
    if not record["bound_ok"]:
        summary.violation_count += 1
        if len(summary.violations) < 100:
            summary.violations.append(record)
    if summary.mode == "half-mu-bound":
        mm = record["mu_A"] * record["mu_B"]
        summary._fold_min("min_two_tau_minus_mu_mu", 2 * record["tau"] - mm)
        summary._fold_min("min_tau_plus_support_minus_mu_mu",
                          record["tau"] + record["support"] - mm)
        summary._fold_max("max_tau", record["tau"])
    elif summary.mode == "hw":
        if record["min_count"] is not None:
            summary._fold_min("min_count", record["min_count"])
            summary._fold_max("max_count", record["max_count"])


def _run_task(args: tuple) -> list[dict]:
    mode, a, b, window, mu_max = args
    return list(_MODE_RUNNERS[mode](a, b, window, mu_max))


def _oracle_compare_records(spec: SearchSpec) -> Iterator[dict]:
    """Seeded random tuples; on each, compare the two fiber routes on
    every z in the scan window."""
    rng = random.Random(spec.seed)
    pairs = coprime_pairs(spec.ab_max)
    ideal_cache: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for _ in range(spec.samples):
        a, b = rng.choice(pairs)
        s = make_semigroup((a, b))
        key = (a, b)
        if key not in ideal_cache:
            ideal_cache[key] = canonical_ideal_gens(
                s, spec.window_for(a, b), spec.mu_max)
        gens = ideal_cache[key]
        ia = make_ideal(s, rng.choice(gens))
        ib = make_ideal(s, rng.choice(gens))
        lo, hi = scan_window(ia, ib)
        agree = all(
            fiber_graph(ia, ib, z).component_count
            == fiber_class_count(ia, ib, z)
            for z in range(lo, hi + 1)
        )
        yield {
            "a": a, "b": b,
            "gens_A": _gens_key(ia.min_gens), "gens_B": _gens_key(ib.min_gens),
            "fibers": hi - lo + 1,
            "bound_ok": agree,
        }


def run_search(spec: SearchSpec) -> SearchSummary:
    """Run a campaign, optionally writing one JSON line per record.

    Records are emitted in sorted input order regardless of worker
    scheduling, so identical specs produce identical files.
    """
    summary = SearchSummary(mode=spec.mode)
    out = open(spec.output_path, "w") if spec.output_path else None
    pool = None
    try:
        if spec.mode == "oracle-compare":
            chunks: Iterator[list[dict]] = iter(
                [list(_oracle_compare_records(spec))])
        else:
            tasks = [(spec.mode, a, b, spec.window_for(a, b), spec.mu_max)
                     for a, b in coprime_pairs(spec.ab_max)]
            if spec.parallelism > 1 and len(tasks) > 1:
                pool = multiprocessing.Pool(spec.parallelism)
                chunks = pool.imap(_run_task, tasks)
            else:
                chunks = (_run_task(t) for t in tasks)
        for chunk in chunks:
            for record in chunk:
                _fold_record(summary, record)
                if out is not None:
                    out.write(json.dumps(record, sort_keys=True,
                                         separators=(",", ":")))
                    out.write("\n")
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if out is not None:
            out.close()
    return summary
