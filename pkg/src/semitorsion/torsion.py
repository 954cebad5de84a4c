"""Torsion numbers of semigroup tensor products.

For relative ideals A, B over the same semigroup, the tensor classes
lying over an integer z correspond to connected components of a
bipartite graph on the minimal generators of A and B. The torsion
number at z is one less than the component count (floored at 0), and
the total over all z is the torsion number of the pair.

Two independent computations are provided: the bipartite graph route
(`fiber_graph`) and a direct union-find closure of the fiber itself
(`fiber_class_count`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cofinite import CofiniteSet
from .ideals import (RelativeIdeal, _check_same, ideal_intersect, ideal_sum,
                     make_ideal)

__all__ = [
    "FiberGraph",
    "TorsionProfile",
    "fiber_graph",
    "tau_at",
    "torsion_profile",
    "fiber_class_count",
    "splits_torsion_free",
    "torsion_bound_with_correction",
    "graph_to_dot",
]


class UnionFind:
    """Union-find over arbitrary hashable keys with path compression."""

    def __init__(self):
        self.parent: dict = {}
        self.count = 0

    def add(self, k):
        if k not in self.parent:
            self.parent[k] = k
            self.count += 1

    def find(self, k):
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


@dataclass(frozen=True)
class FiberGraph:
    """Bipartite graph over z: v_i for generators of A, w_j for B.

    Vertex indices are 1-based. v_i is present when z - a_i lies in B,
    w_j when z - b_j lies in A, and the edge (i, j) when z - a_i - b_j
    lies in the semigroup. Isolated vertices count as components.
    """

    z: int
    left_vertices: tuple[int, ...]
    right_vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    component_count: int


def fiber_graph(a: RelativeIdeal, b: RelativeIdeal, z: int) -> FiberGraph:
    _check_same(a, b)
    s = a.semigroup
    lefts = tuple(i for i, g in enumerate(a.min_gens, 1) if (z - g) in b.set)
    rights = tuple(j for j, g in enumerate(b.min_gens, 1) if (z - g) in a.set)
    edges = frozenset(
        (i, j)
        for i, ga in enumerate(a.min_gens, 1)
        for j, gb in enumerate(b.min_gens, 1)
        if s.contains(z - ga - gb)
    )
    uf = UnionFind()
    for i in lefts:
        uf.add(("v", i))
    for j in rights:
        uf.add(("w", j))
    for i, j in edges:
        uf.add(("v", i))
        uf.add(("w", j))
        uf.union(("v", i), ("w", j))
    return FiberGraph(z, lefts, rights, edges, uf.count)


def tau_at(a: RelativeIdeal, b: RelativeIdeal, z: int) -> int:
    """Torsion number at z: components of the fiber graph minus one."""
    return max(0, fiber_graph(a, b, z).component_count - 1)


@dataclass(frozen=True)
class TorsionProfile:
    """Torsion numbers of a pair of ideals, indexed by degree."""

    window: tuple[int, int]
    tau_by_z: dict[int, int] = field(compare=False)
    total: int = 0
    support_size: int = 0


def scan_window(a: RelativeIdeal, b: RelativeIdeal) -> tuple[int, int]:
    """Closed z-interval outside which the torsion number vanishes.

    Below min(A) + min(B) the fiber is empty. Above F + max + max every
    z - a_i - b_j exceeds the Frobenius number, so the graph is complete
    bipartite and connected.
    """
    f = a.semigroup.frobenius
    return (a.min_gens[0] + b.min_gens[0],
            f + a.min_gens[-1] + b.min_gens[-1])


def torsion_profile(a: RelativeIdeal, b: RelativeIdeal) -> TorsionProfile:
    _check_same(a, b)
    lo, hi = scan_window(a, b)
    by_z = {}
    for z in range(lo, hi + 1):
        t = tau_at(a, b, z)
        if t:
            by_z[z] = t
    return TorsionProfile((lo, hi), by_z, sum(by_z.values()), len(by_z))


def fiber_class_count(a: RelativeIdeal, b: RelativeIdeal, z: int) -> int:
    """Number of tensor classes over z, by closing the fiber directly.

    Nodes are the x with x in A and z - x in B; x and x' < x fall in
    the same class exactly when x - x' is a semigroup member. Pairs at
    distance past the Frobenius number are always joined, so only
    member-differences up to F are probed individually and the far
    pairs are merged through a running prefix.
    """
    _check_same(a, b)
    s = a.semigroup
    nodes = [x for x in a.set.members_upto(z - b.set.min_element)
             if (z - x) in b.set]
    if not nodes:
        return 0
    f = s.frobenius
    small = [m for m in range(1, f + 1) if s.contains(m)]
    index = {x: i for i, x in enumerate(nodes)}
    uf = UnionFind()
    for i in range(len(nodes)):
        uf.add(i)
    far = 0  # nodes[0..prefix] are known to share a component
    prefix = 0
    for j, x in enumerate(nodes):
        for m in small:
            i = index.get(x - m)
            if i is not None:
                uf.union(i, j)
        while far < j and nodes[far + 1] <= x - f - 1:
            far += 1
        if nodes[far] <= x - f - 1:
            # every node up to `far` joins j directly; chain them once
            for t in range(prefix, far):
                uf.union(t, t + 1)
            prefix = max(prefix, far)
            uf.union(far, j)
    return uf.count


def splits_torsion_free(a: RelativeIdeal, b: RelativeIdeal,
                        cap: int = 20) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Generator-split criterion for torsion freeness of the pair.

    For every proper bipartition of the generators of A into P | Q,
    tests (P meet Q) + B == (P + B) meet (Q + B). Returns (True, None)
    when all splits pass, else (False, first failing bipartition).
    """
    _check_same(a, b)
    n = a.mu
    if n > cap:
        raise ValueError(f"{n} generators exceeds split cap {cap}")
    s = a.semigroup
    gens = a.min_gens
    # Fixing the first generator on the left halves the subset count;
    # a split and its complement give the same identity.
    for bits in range(0, 1 << (n - 1)):
        left = [gens[0]]
        right = []
        for k in range(1, n):
            (left if (bits >> (k - 1)) & 1 else right).append(gens[k])
        if not right:
            continue
        p = make_ideal(s, left)
        q = make_ideal(s, right)
        lhs = ideal_sum(ideal_intersect(p, q), b)
        rhs = ideal_intersect(ideal_sum(p, b), ideal_sum(q, b))
        if lhs != rhs:
            return False, (tuple(left), tuple(right))
    return True, None


def torsion_bound_with_correction(a: RelativeIdeal, b: RelativeIdeal,
                                  c: CofiniteSet) -> int:
    """Torsion total minus the correction |c \\ (a+b)|.

    `c` must contain the sum ideal's set (it plays the role of a product
    set that may be strictly larger than the sum of the summand sets).
    """
    total = torsion_profile(a, b).total
    sum_set = ideal_sum(a, b).set
    if not sum_set.issubset(c):
        raise ValueError("correction set does not contain the sum ideal")
    return total - len(c.difference(sum_set))


def graph_to_dot(g: FiberGraph) -> str:
    """DOT rendering with vertex names v1..vm and w1..wn."""
    lines = [f'graph fiber_{g.z} {{']
    for i in g.left_vertices:
        lines.append(f"  v{i};")
    for j in g.right_vertices:
        lines.append(f"  w{j};")
    for i, j in sorted(g.edges):
        lines.append(f"  v{i} -- w{j};")
    lines.append("}")
    return "\n".join(lines)
