"""Restraints: per-vertex forbidden colour sets.

Covers the named constructions (constant, alternating), properness,
the equivalence relation (graph automorphism composed with a bijective
colour renaming), canonical class representatives, and exhaustive
enumeration of k-restraints up to equivalence.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import CapError, Graph, ParseError

# Enumeration is exponential in n; these defaults keep every search desk scale.
ENUM_CAPS = {1: 8, 2: 5}
DEFAULT_ENUM_CAP = 4


class Restraint:
    """Immutable vector of forbidden colour sets, one per vertex."""

    __slots__ = ("sets",)

    def __init__(self, sets: Iterable[Iterable[int]]):
        norm = []
        for s in sets:
            fs = frozenset(int(c) for c in s)
            if any(c < 1 for c in fs):
                raise ValueError("colours must be positive integers")
            norm.append(fs)
        self.sets: tuple[frozenset[int], ...] = tuple(norm)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.sets[v]

    def __iter__(self):
        return iter(self.sets)

    def __eq__(self, other) -> bool:
        return isinstance(other, Restraint) and self.sets == other.sets

    def __hash__(self) -> int:
        return hash(self.sets)

    def __repr__(self) -> str:
        return f"Restraint({render_restraint(self)!r})"

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def m_value(self) -> int:
        """Largest forbidden colour anywhere; 0 when every set is empty."""
        top = 0
        for s in self.sets:
            if s:
                top = max(top, max(s))
        return top

    def colours(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.sets:
            out |= s
        return frozenset(out)

    def is_k_restraint(self, k: int) -> bool:
        """Every set has size k and colours stay within 1..k*n."""
        n = len(self.sets)
        return all(len(s) == k for s in self.sets) and all(c <= k * n for s in self.sets for c in s)


def m_value(r: Restraint) -> int:
    return r.m_value()


def empty_restraint(g: Graph) -> Restraint:
    return Restraint([()] * g.n)


def constant_restraint(g: Graph, k: int) -> Restraint:
    """Forbid {1..k} at every vertex."""
    if k < 1:
        raise ValueError("k must be at least 1")
    block = tuple(range(1, k + 1))
    return Restraint([block] * g.n)


def alternating_restraint(g: Graph, k: int) -> Restraint:
    """Forbid {1..k} on one side of a bipartition and {k+1..2k} on the other.

    Requires a connected bipartite graph.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    parts = g.bipartition()
    if parts is None:
        raise ValueError("graph is not bipartite")
    v1, v2 = parts
    low = tuple(range(1, k + 1))
    high = tuple(range(k + 1, 2 * k + 1))
    sets: list[tuple[int, ...]] = [()] * g.n
    for v in v1:
        sets[v] = low
    for v in v2:
        sets[v] = high
    return Restraint(sets)


def is_proper(g: Graph, r: Restraint) -> bool:
    """True iff adjacent vertices have disjoint forbidden sets."""
    return all(not (r[u] & r[v]) for u, v in g.edges)


def transport(r: Restraint, relabel: tuple[int, ...], merged: int, u: int, v: int) -> Restraint:
    """Carry a restraint across an edge contraction.

    The merged vertex inherits the union of its parents' sets; every other
    vertex keeps its set under the relabeling.
    """
    n = len(r)
    if len(relabel) != n:
        raise ValueError("inconsistent relabeling: wrong length")
    if relabel[u] != merged or relabel[v] != merged:
        raise ValueError("inconsistent relabeling: endpoints do not map to the merged vertex")
    new_sets: list[frozenset[int] | None] = [None] * (n - 1)
    for w in range(n):
        if w in (u, v):
            continue
        slot = relabel[w]
        if not (0 <= slot < n - 1) or new_sets[slot] is not None:
            raise ValueError("inconsistent relabeling: not a bijection off the merged pair")
        new_sets[slot] = r[w]
    if new_sets[merged] is not None:
        raise ValueError("inconsistent relabeling: merged slot collides")
    new_sets[merged] = r[u] | r[v]
    return Restraint(new_sets)


# -- literal / JSON syntax -----------------------------------------------------


def render_restraint(r: Restraint) -> str:
    """Literal form '[{1},{2},{1,3}]' with colours ascending."""
    parts = ["{" + ",".join(str(c) for c in sorted(s)) + "}" for s in r.sets]
    return "[" + ",".join(parts) + "]"


def parse_restraint(text: str) -> Restraint:
    """Parse the literal syntax '[{1},{2},{1,3}]' or JSON '[[1],[2],[1,3]]'."""
    s = text.strip()
    if not s:
        raise ParseError("empty restraint input")
    if "{" not in s:
        # JSON form: array of arrays of integers
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad restraint input {text!r}") from exc
        if not isinstance(data, list) or not all(isinstance(item, list) for item in data):
            raise ParseError("restraint JSON must be an array of arrays of integers")
        try:
            return Restraint(data)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad restraint JSON: {exc}") from exc
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"restraint literal must look like [{{1}},{{2}}], got {text!r}")
    body = s[1:-1].strip()
    sets: list[list[int]] = []
    i = 0
    while i < len(body):
        if body[i] in ", \t":
            i += 1
            continue
        if body[i] != "{":
            raise ParseError(f"expected '{{' at position {i} of {text!r}")
        j = body.find("}", i)
        if j == -1:
            raise ParseError(f"unclosed set in {text!r}")
        inner = body[i + 1:j].strip()
        try:
            colours = [int(tok) for tok in inner.split(",") if tok.strip()] if inner else []
        except ValueError as exc:
            raise ParseError(f"bad colour in {text!r}: {exc}") from exc
        sets.append(colours)
        i = j + 1
    try:
        return Restraint(sets)
    except ValueError as exc:
        raise ParseError(f"bad restraint literal: {exc}") from exc


def restraint_to_json(r: Restraint) -> str:
    return json.dumps([sorted(s) for s in r.sets])


# -- equivalence classes ------------------------------------------------------------


@dataclass(frozen=True)
class RestraintClass:
    """Canonical representative of a restraint-equivalence class.

    canon is the minimum, over the automorphism group, of the sorted tuple
    of colour incidence bitmasks (bit v set when the colour is forbidden at
    vertex v).  Two restraints are equivalent exactly when their canons
    coincide, because a colour bijection preserves the incidence multiset
    and an automorphism permutes the vertex bits.
    """

    n: int
    k: int | None
    canon: tuple[int, ...]
    representative: Restraint

    def class_id(self) -> str:
        return render_restraint(self.representative)


def _incidence_masks(r: Restraint) -> list[int]:
    masks: dict[int, int] = {}
    for v, s in enumerate(r.sets):
        for c in s:
            masks[c] = masks.get(c, 0) | 1 << v
    return list(masks.values())


def _apply_perm(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out |= 1 << perm[v]
    return out


def _representative_from_canon(n: int, canon: tuple[int, ...]) -> Restraint:
    sets: list[set[int]] = [set() for _ in range(n)]
    for j, mask in enumerate(canon):
        for v in range(n):
            if mask >> v & 1:
                sets[v].add(j + 1)
    return Restraint(sets)


def canonicalize(g: Graph, r: Restraint, cap: int | None = None) -> RestraintClass:
    """Canonical class of a restraint under automorphism x colour bijection."""
    if len(r) != g.n:
        raise ValueError(f"restraint has {len(r)} sets for a graph on {g.n} vertices")
    masks = _incidence_masks(r)
    autos = g.automorphisms() if cap is None else g.automorphisms(cap)
    best: tuple[int, ...] | None = None
    for perm in autos:
        cand = tuple(sorted(_apply_perm(m, perm) for m in masks))
        if best is None or cand < best:
            best = cand
    assert best is not None
    sizes = set(r.sizes())
    k = sizes.pop() if len(sizes) == 1 else None
    return RestraintClass(n=g.n, k=k, canon=best, representative=_representative_from_canon(g.n, best))


def equivalent(g: Graph, r1: Restraint, r2: Restraint) -> bool:
    return canonicalize(g, r1).canon == canonicalize(g, r2).canon


def _normal_form_assignments(n: int, k: int):
    """Yield all k-set sequences in first-use colour normal form.

    Scanning vertices 0..n-1, any colours a vertex introduces are the next
    consecutive integers; previously used colours may repeat freely.  Every
    k-restraint is colour-equivalent to at least one generated sequence, and
    colours never exceed k*n.
    """
    chosen: list[tuple[int, ...]] = []

    def rec(v: int, used: int):
        if v == n:
            yield tuple(chosen)
            return
        for t in range(k + 1):
            fresh = tuple(range(used + 1, used + t + 1))
            for old in combinations(range(1, used + 1), k - t):
                chosen.append(old + fresh)
                yield from rec(v + 1, used + t)
                chosen.pop()

    yield from rec(0, 0)


def enumerate_k_restraints(
    g: Graph,
    k: int,
    n_cap: int | None = None,
    shuffle_seed: int | None = None,
) -> list[RestraintClass]:
    """One representative per equivalence class of k-restraints on g.

    Generates candidates in first-use colour normal form, dedupes first by
    the raw incidence multiset and then by full canonical form, and returns
    the classes sorted by canon.  shuffle_seed randomizes the generation
    order only; the result set is order-independent.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cap = n_cap if n_cap is not None else ENUM_CAPS.get(k, DEFAULT_ENUM_CAP)
    if g.n > cap:
        raise CapError(f"enumeration cap exceeded (n={g.n} > cap={cap} for k={k})")
    candidates = list(_normal_form_assignments(g.n, k))
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(candidates)
    seen_raw: set[tuple[int, ...]] = set()
    classes: dict[tuple[int, ...], RestraintClass] = {}
    for sets in candidates:
        r = Restraint(sets)
        raw = tuple(sorted(_incidence_masks(r)))
        if raw in seen_raw:
            continue
        seen_raw.add(raw)
        cls = canonicalize(g, r)
        classes.setdefault(cls.canon, cls)
    return [classes[c] for c in sorted(classes)]
