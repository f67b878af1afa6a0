"""Labeled simple graphs with the structural operations the recursion needs.

Vertices are 0..n-1; edges are unordered pairs stored as sorted tuples.
Graph values are immutable after construction and safe to share across
workers.  Includes generators for the standard small families, edge-list
and graph6 ingestion, and an exhaustive connected-graph catalog with
isomorphism rejection (desk scale, n <= 7 or so).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]

AUTOMORPHISM_CAP = 10


class ParseError(ValueError):
    """Malformed graph or restraint input."""


class CapError(RuntimeError):
    """A configured size cap or work budget was exceeded."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SubgraphCensus:
    """Exact small-subgraph counts used by the coefficient formulas."""

    m: int
    triangles: int
    induced_c4: int
    k4: int


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj", "_autos")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            norm.add(_norm_edge(u, v))
        self.n = n
        self.edges: frozenset[Edge] = frozenset(norm)
        self._adj: tuple[int, ...] | None = None
        self._autos: list[tuple[int, ...]] | None = None

    # -- basics -----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (cached)."""
        if self._adj is None:
            adj = [0] * self.n
            for u, v in self.edges:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            self._adj = tuple(adj)
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        mask = self.adjacency_masks()[v]
        return frozenset(i for i in range(self.n) if mask >> i & 1)

    def degree(self, v: int) -> int:
        return bin(self.adjacency_masks()[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {sorted(self.edges)})"

    # -- deletion / contraction --------------------------------------------

    def delete_edge(self, e) -> "Graph":
        """Remove one edge, keeping the vertex set."""
        e = _norm_edge(*e)
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, self.edges - {e})

    def contract_edge(self, e) -> tuple["Graph", int, tuple[int, ...]]:
        """Identify the endpoints of an edge and simplify.

        The merged vertex takes the smaller endpoint's slot; vertices above
        the vacated slot shift down by one.  Returns the contracted graph,
        the merged vertex id, and the old-id -> new-id relabeling so the
        caller can transport per-vertex data unambiguously.
        """
        e = _norm_edge(*e)
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        u, v = e
        relabel = []
        for w in range(self.n):
            if w == v:
                relabel.append(u)
            elif w > v:
                relabel.append(w - 1)
            else:
                relabel.append(w)
        new_edges = set()
        for a, b in self.edges:
            na, nb = relabel[a], relabel[b]
            if na != nb:
                new_edges.add(_norm_edge(na, nb))
        return Graph(self.n - 1, new_edges), u, tuple(relabel)

    # -- connectivity ---------------------------------------------------------

    def components(self) -> list[tuple["Graph", tuple[int, ...]]]:
        """Connected components with back-maps new-id -> original-id."""
        adj = self.adjacency_masks()
        seen = 0
        out = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp_mask = 0
            frontier = 1 << start
            while frontier:
                comp_mask |= frontier
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= adj[v]
                frontier = nxt & ~comp_mask
            seen |= comp_mask
            verts = [i for i in range(self.n) if comp_mask >> i & 1]
            index = {old: new for new, old in enumerate(verts)}
            sub_edges = [
                (index[a], index[b]) for a, b in self.edges if comp_mask >> a & 1 and comp_mask >> b & 1
            ]
            out.append((Graph(len(verts), sub_edges), tuple(verts)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """BFS 2-colouring of a connected graph.

        Returns the bipartition with vertex 0's side first, or None when an
        odd cycle exists.  Raises on disconnected input (split by components
        first).
        """
        if self.n == 0:
            return ((), ())
        if not self.is_connected():
            raise ValueError("graph is disconnected; bipartition is per-component")
        side = [-1] * self.n
        side[0] = 0
        queue = [0]
        adj = self.adjacency_masks()
        while queue:
            v = queue.pop()
            mask = adj[v]
            while mask:
                w = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
        v1 = tuple(i for i in range(self.n) if side[i] == 0)
        v2 = tuple(i for i in range(self.n) if side[i] == 1)
        return (v1, v2)

    # -- census -----------------------------------------------------------------

    def census(self) -> SubgraphCensus:
        """Exact triangle / induced-C4 / K4 counts by exhaustive enumeration."""
        adj = self.adjacency_masks()
        tri = 0
        for a, b, c in combinations(range(self.n), 3):
            if adj[a] >> b & 1 and adj[a] >> c & 1 and adj[b] >> c & 1:
                tri += 1
        ind_c4 = 0
        k4 = 0
        for quad in combinations(range(self.n), 4):
            degs = []
            edge_count = 0
            for x in quad:
                d = sum(adj[x] >> y & 1 for y in quad)
                degs.append(d)
                edge_count += d
            edge_count //= 2
            if edge_count == 6:
                k4 += 1
            elif edge_count == 4 and all(d == 2 for d in degs):
                ind_c4 += 1
        return SubgraphCensus(m=self.m, triangles=tri, induced_c4=ind_c4, k4=k4)

    # -- automorphisms --------------------------------------------------------------

    def automorphisms(self, cap: int = AUTOMORPHISM_CAP) -> list[tuple[int, ...]]:
        """Full automorphism group as explicit vertex permutations.

        Exhaustive backtracking with colour-refinement pruning; capped by
        default at n = 10 since every search here is desk scale.
        """
        if self.n > cap:
            raise CapError(f"graph too large for automorphism enumeration (n={self.n} > cap={cap})")
        if self._autos is None:
            self._autos = sorted(_isomorphisms(self, self, find_all=True))
        return list(self._autos)


def _wl_colors(g: Graph) -> tuple[int, ...]:
    """Stable colour refinement classes (degree-based, iterated)."""
    adj = g.adjacency_masks()
    colors = [bin(adj[v]).count("1") for v in range(g.n)]
    while True:
        sigs = []
        for v in range(g.n):
            neigh = sorted(colors[w] for w in range(g.n) if adj[v] >> w & 1)
            sigs.append((colors[v], tuple(neigh)))
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def _isomorphisms(g: Graph, h: Graph, find_all: bool) -> list[tuple[int, ...]]:
    """Backtracking vertex-bijection search preserving adjacency.

    Returns all isomorphisms g -> h when find_all, else at most one.
    """
    if g.n != h.n or g.m != h.m:
        return []
    cg, ch = _wl_colors(g), _wl_colors(h)
    if sorted(cg) != sorted(ch):
        return []
    adj_g, adj_h = g.adjacency_masks(), h.adjacency_masks()
    n = g.n
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            found.append(tuple(image))
            return not find_all
        for w in range(n):
            if used[w] or ch[w] != cg[v]:
                continue
            ok = True
            for u in range(v):
                if (adj_g[v] >> u & 1) != (adj_h[image[u]] >> w & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    extend(0)
    return found


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and bool(_isomorphisms(g, h, find_all=False))


# -- generators ---------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """Star with a centre (vertex 0) and the given number of leaves."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


_NAMED_PREFIXES = "CPKSE"


def from_name(name: str) -> Graph:
    """Build a standard graph from a short name: C5, P4, K6, K2,3, S3, E4."""
    name = name.strip()
    if len(name) < 2 or name[0] not in _NAMED_PREFIXES:
        raise ParseError(f"unknown graph name {name!r}")
    kind, rest = name[0], name[1:]
    try:
        if kind == "K" and "," in rest:
            a, b = (int(t) for t in rest.split(",", 1))
            return complete_bipartite_graph(a, b)
        size = int(rest)
        if kind == "C":
            return cycle_graph(size)
        if kind == "P":
            return path_graph(size)
        if kind == "K":
            return complete_graph(size)
        if kind == "S":
            return star_graph(size)
        if kind == "E":
            return empty_graph(size)
    except ValueError as exc:
        raise ParseError(f"bad graph name {name!r}: {exc}") from exc
    raise ParseError(f"unknown graph name {name!r}")


# -- ingestion ------------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse edge-list text: header line 'n <count>' then one 'u v' per line.

    Vertices are 0-based; blank lines and '#' comments are skipped; loops,
    duplicates and out-of-range endpoints are rejected.
    """
    lines = [ln.strip() for ln in text.replace(";", "\n").splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "n":
        raise ParseError(f"edge-list header must be 'n <count>', got {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise ParseError(f"bad vertex count {header[1]!r}") from exc
    if n < 0:
        raise ParseError("vertex count must be nonnegative")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) outside 0..{n - 1}")
        e = _norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge ({u}, {v})")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def parse_graph6(line: str) -> Graph:
    """Parse a single graph6 line (n <= 62, no extended sizes)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input")
    vals = []
    for ch in s:
        o = ord(ch)
        if not (63 <= o <= 126):
            raise ParseError(f"invalid graph6 character {ch!r}")
        vals.append(o - 63)
    n = vals[0]
    if n > 62:
        raise ParseError("graph6 inputs beyond 62 vertices are not supported")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(vals) - 1 != need_bytes:
        raise ParseError(f"graph6 body length {len(vals) - 1} does not match n={n}")
    bits = []
    for v in vals[1:]:
        for shift in range(5, -1, -1):
            bits.append(v >> shift & 1)
    if any(bits[need_bits:]):
        raise ParseError("graph6 padding bits must be zero")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a single graph6 line (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 output beyond 62 vertices is not supported")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def load_graph6_file(path: str) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs


def load_graph(source: str, fmt: str = "auto") -> Graph:
    """Load a graph from a file path, a short name, or inline text.

    fmt 'edgelist' or 'graph6' forces the parser; 'auto' tries file, then
    named family (C7, P4, K5, K2,3, S3, E4), then graph6, then edge list.
    """
    text = source
    if os.path.isfile(source):
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt != "auto":
        raise ParseError(f"unknown graph format {fmt!r}")
    stripped = text.strip()
    if stripped[:1] in _NAMED_PREFIXES and not os.path.isfile(source):
        try:
            return from_name(stripped)
        except ParseError:
            pass
    if stripped.startswith("n ") or "\n" in stripped or ";" in stripped:
        return parse_edgelist(text)
    return parse_graph6(stripped)


# -- exhaustive small-graph catalog ------------------------------------------------


_CONNECTED_CACHE: dict[int, list[Graph]] = {}


def all_connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class.

    Exhaustive edge-mask sweep with invariant bucketing and backtracking
    isomorphism rejection; intended for n <= 7.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n in _CONNECTED_CACHE:
        return list(_CONNECTED_CACHE[n])
    pairs = list(combinations(range(n), 2))
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        colors = _wl_colors(g)
        key = (g.m, tuple(sorted(colors)), g.census().triangles)
        bucket = buckets.setdefault(key, [])
        if any(is_isomorphic(g, rep) for rep in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    reps.sort(key=lambda g: (g.m, to_graph6(g)))
    _CONNECTED_CACHE[n] = reps
    return list(reps)


def connected_catalog(n_max: int, graph6_path: str | None = None) -> list[Graph]:
    """Connected graphs with 1..n_max vertices, generated or read from a file."""
    if graph6_path is not None:
        graphs = [g for g in load_graph6_file(graph6_path) if g.n <= n_max and g.is_connected()]
        return graphs
    out: list[Graph] = []
    for n in range(1, n_max + 1):
        out.extend(all_connected_graphs(n))
    return out
