"""Restrained chromatic polynomial engine.

The central recursion follows edge deletion-contraction: deleting an edge
keeps every forbidden set, while contracting it merges the endpoints and
forbids the union of their sets at the merged vertex.  The base case on an
edgeless graph is the product of (x - |forbidden set|) over the vertices.
The resulting polynomial agrees with the permitted proper-colouring count
for every x at or above the largest forbidden colour; below that threshold
the brute-force counter is the ground truth.

Also includes the closed-form coefficient formulas for the three top
non-trivial coefficients, with the full additive term breakdown for the
x^(n-3) coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .graphs import CapError, Graph
from .polynomials import IntPolynomial, elementary_symmetric
from .restraints import Restraint, empty_restraint, transport

ORACLE_VERTEX_CAP = 8
ORACLE_WORK_BUDGET = 10_000_000


class MemoCache:
    """Memo table for the recursion, keyed on the exact labeled subproblem.

    Behaves as a single logical map with atomic get-or-insert semantics
    (dict.setdefault), so concurrent per-class computations may share it.
    """

    __slots__ = ("_table", "hits", "misses", "peak_entries")

    def __init__(self):
        self._table: dict = {}
        self.hits = 0
        self.misses = 0
        self.peak_entries = 0

    def get(self, key):
        val = self._table.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key, value):
        self._table.setdefault(key, value)
        if len(self._table) > self.peak_entries:
            self.peak_entries = len(self._table)

    def __len__(self) -> int:
        return len(self._table)

    def stats(self) -> dict[str, int]:
        return {"hits": self.hits, "misses": self.misses, "peak_entries": self.peak_entries}


def _smallest_edge(edges):
    return min(edges)


def restrained_poly(
    g: Graph,
    r: Restraint,
    cache: MemoCache | None | bool = None,
    pivot=None,
) -> IntPolynomial:
    """Restrained chromatic polynomial via deletion-contraction.

    Monic of degree n; exact integer coefficients; valid as a colouring
    count for every x >= the largest forbidden colour.  The result is
    independent of the pivot-edge order.

    cache: None for a private memo table, False to disable memoization,
    or a shared MemoCache instance.  pivot: optional callable mapping the
    sorted edge list of a subproblem to the edge to branch on (defaults to
    the lexicographically smallest, for cache reproducibility).
    """
    if len(r) != g.n:
        raise ValueError(f"restraint has {len(r)} sets for a graph on {g.n} vertices")
    memo: MemoCache | None
    if cache is False:
        memo = None
    elif cache is None or cache is True:
        memo = MemoCache()
    else:
        memo = cache
    choose = pivot if pivot is not None else _smallest_edge
    return _rec(g, r, memo, choose)


def _rec(g: Graph, r: Restraint, memo: MemoCache | None, choose) -> IntPolynomial:
    key = (g.n, g.edges, r.sets)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if not g.edges:
        poly = IntPolynomial.from_roots(len(s) for s in r.sets)
    else:
        comps = g.components()
        if len(comps) > 1:
            poly = IntPolynomial.one()
            for sub, back in comps:
                poly = poly * _rec(sub, Restraint(r[v] for v in back), memo, choose)
        else:
            e = choose(sorted(g.edges))
            u, v = e
            deleted = g.delete_edge(e)
            contracted, merged, relabel = g.contract_edge(e)
            moved = transport(r, relabel, merged, u, v)
            poly = _rec(deleted, r, memo, choose) - _rec(contracted, moved, memo, choose)
    if memo is not None:
        memo.put(key, poly)
    return poly


def chromatic_poly(g: Graph, cache: MemoCache | None | bool = None) -> IntPolynomial:
    """Chromatic polynomial: the all-empty restraint special case."""
    return restrained_poly(g, empty_restraint(g), cache=cache)


def count_colourings(
    g: Graph,
    r: Restraint,
    x: int,
    vertex_cap: int = ORACLE_VERTEX_CAP,
    work_budget: int = ORACLE_WORK_BUDGET,
) -> int:
    """Brute-force count of proper colourings with colours 1..x avoiding r.

    Exact for every x >= 0, including below the largest forbidden colour
    where the polynomial form is not authoritative.  Backtracks over the
    vertices in index order; refuses instances beyond the work budget.
    """
    if len(r) != g.n:
        raise ValueError(f"restraint has {len(r)} sets for a graph on {g.n} vertices")
    if x < 0:
        raise ValueError("colour count x must be nonnegative")
    if g.n > vertex_cap and x ** g.n > work_budget:
        raise CapError(f"colouring oracle budget exceeded (n={g.n}, x={x})")
    if g.n == 0:
        return 1
    adj = g.adjacency_masks()
    colours = [0] * g.n

    def count_from(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        forbidden = r[v]
        for c in range(1, x + 1):
            if c in forbidden:
                continue
            mask = adj[v]
            ok = True
            while mask:
                w = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if w < v and colours[w] == c:
                    ok = False
                    break
            if ok:
                colours[v] = c
                total += count_from(v + 1)
        colours[v] = 0
        return total

    return count_from(0)


# -- closed-form coefficients ---------------------------------------------------
#
# Sign convention: with p = restrained_poly(g, r) monic of degree n, the
# value a_i satisfies p.coefficient(i) == (-1)**(n - i) * a_i.


def coeff_n1(g: Graph, r: Restraint) -> int:
    """a_{n-1}: edge count plus the total size of the forbidden sets."""
    return g.m + sum(len(s) for s in r.sets)


def _edge_intersections(g: Graph, r: Restraint) -> int:
    return sum(len(r[u] & r[v]) for u, v in g.edges)


def coeff_n2(g: Graph, r: Restraint) -> int:
    """a_{n-2} from the census and the pairwise set-size sums."""
    sizes = r.sizes()
    census = g.census()
    return (
        comb(g.m, 2)
        - census.triangles
        + elementary_symmetric(sizes, 2)
        + g.m * sum(sizes)
        - _edge_intersections(g, r)
    )


@dataclass(frozen=True)
class CoefficientBreakdown:
    """The three top non-trivial coefficient values with the additive terms
    of the x^(n-3) one.

    a_n_3 always equals the sum of the terms.  The terms carrying 1/2 and
    1/6 weights are exact rationals: they are individually half-integral
    whenever the triangle triple-overlap total is odd, and only their sum
    is guaranteed integral (asserted here).
    """

    a_n_1: int
    a_n_2: int
    a_n_3: int
    terms: dict = field(compare=False)


def coeff_n3(g: Graph, r: Restraint) -> CoefficientBreakdown:
    """a_{n-3} via the named additive terms; requires n >= 3.

    A0 depends only on the graph census; A1..A3 and A5 only on set sizes;
    A4, A6, A7', A8 vanish on proper restraints.  A7'' charges every
    unordered pair of vertices once per common neighbour.
    """
    if g.n < 3:
        raise ValueError("coefficient undefined for graphs on fewer than 3 vertices")
    sizes = r.sizes()
    total = sum(sizes)
    census = g.census()
    m = g.m
    adj = g.adjacency_masks()

    a0 = comb(m, 3) - (m - 2) * census.triangles - census.induced_c4 + 2 * census.k4
    a1 = elementary_symmetric(sizes, 3)
    a2 = (m - 1) * elementary_symmetric(sizes, 2)
    a3 = sum(
        sizes[i] * sizes[j]
        for i, j in combinations(range(g.n), 2)
        if not adj[i] >> j & 1
    )
    a4 = -sum(len(r[u] & r[v]) * (total - sizes[u] - sizes[v]) for u, v in g.edges)
    a5 = (comb(m, 2) - census.triangles) * total
    a6 = -(m - 1) * _edge_intersections(g, r)
    a7p = sum(bin(adj[u] & adj[v]).count("1") * len(r[u] & r[v]) for u, v in g.edges)
    a7pp = common_neighbor_overlap(g, r)
    a8p = Fraction(0)
    a8pp = Fraction(0)
    for u, v in g.edges:
        both = adj[u] & adj[v]
        either = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
        mask = either
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            a8p += Fraction(len(r[u] & r[v] & r[w]), 2)
        mask = both
        while mask:
            w = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            a8pp += Fraction(len(r[u] & r[v] & r[w]), 6)
    a8 = a8p + a8pp
    if a8.denominator != 1:
        raise AssertionError(f"triple-overlap terms did not sum to an integer: {a8p} + {a8pp}")
    total_n3 = a0 + a1 + a2 + a3 + a4 + a5 + a6 + a7p + a7pp + int(a8)
    terms = {
        "A0": a0,
        "A1": a1,
        "A2": a2,
        "A3": a3,
        "A4": a4,
        "A5": a5,
        "A6": a6,
        "A7'": a7p,
        "A7''": a7pp,
        "A8'": a8p,
        "A8''": a8pp,
    }
    return CoefficientBreakdown(
        a_n_1=coeff_n1(g, r),
        a_n_2=coeff_n2(g, r),
        a_n_3=total_n3,
        terms=terms,
    )


def common_neighbor_overlap(g: Graph, r: Restraint) -> int:
    """Negated overlap total over neighbour pairs, the A7'' term.

    Each unordered vertex pair is charged once per common neighbour; the
    minimization of this quantity over proper k-restraints is a necessary
    condition for a class to permit the most colourings.
    """
    adj = g.adjacency_masks()
    total = 0
    for v in range(g.n):
        neigh = [w for w in range(g.n) if adj[v] >> w & 1]
        for i, j in combinations(neigh, 2):
            total -= len(r[i] & r[j])
    return total


def shared_pair_overlap(g: Graph, r: Restraint) -> int:
    """Negated overlap total over vertex pairs that share a common neighbour.

    Unlike common_neighbor_overlap, each unordered pair is counted once no
    matter how many common neighbours it has; the two agree exactly on
    graphs where every such pair has a unique common neighbour.
    """
    adj = g.adjacency_masks()
    total = 0
    for i, j in combinations(range(g.n), 2):
        if adj[i] & adj[j]:
            total -= len(r[i] & r[j])
    return total
