"""Finite undirected graphs with optional loops and positive vertex weights.

Vertices are 0..n-1.  Loops are stored as (v, v) pairs.  A loop counts
once in the degree (the vertex is a neighbor of itself); no formula in
scope depends on the doubled convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import HcsfError
from .partitions import Partition, as_partition

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    weights: tuple[int, ...] | None = None

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]] = (), weights=None) -> "Graph":
        if n < 0:
            raise HcsfError("invalid-parameter", "vertex count must be >= 0")
        norm: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise HcsfError("invalid-parameter", f"edge ({u},{v}) out of range for n={n}")
            norm.add(_norm_edge(u, v))
        w = None
        if weights is not None:
            w = tuple(int(x) for x in weights)
            if len(w) != n or any(x < 1 for x in w):
                raise HcsfError("invalid-parameter", "weights must be n positive integers")
        return cls(n, frozenset(norm), w)

    # -- structure ---------------------------------------------------

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets; v is in adj[v] iff v carries a loop."""
        sets: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            sets[u].add(v)
            sets[v].add(u)
        return tuple(frozenset(s) for s in sets)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))

    def has_loop(self, v: int | None = None) -> bool:
        if v is None:
            return any(u == w for u, w in self.edges)
        return (v, v) in self.edges

    def loop_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if (v, v) in self.edges)

    def simple_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(e for e in self.edges if e[0] != e[1]))

    def num_edges(self) -> int:
        return len(self.edges)

    def weight(self, v: int) -> int:
        return 1 if self.weights is None else self.weights[v]

    def total_weight(self) -> int:
        return self.n if self.weights is None else sum(self.weights)

    def is_weighted(self) -> bool:
        return self.weights is not None and any(w != 1 for w in self.weights)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply vertex -> perm[vertex]."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        weights = None
        if self.weights is not None:
            weights = [0] * self.n
            for v in range(self.n):
                weights[perm[v]] = self.weights[v]
        return Graph.build(self.n, edges, weights)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to 0..k-1 in sorted vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        weights = [self.weight(v) for v in keep] if self.weights is not None else None
        return Graph.build(len(keep), edges, weights)


# ---------------------------------------------------------------------------
# connectivity and bipartitions
# ---------------------------------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of components, each sorted, ordered by minimum vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class ComponentBipartition:
    big: frozenset[int]
    small: frozenset[int]

    @property
    def sizes(self) -> tuple[int, int]:
        return (len(self.big), len(self.small))


def bipartition(g: Graph) -> list[ComponentBipartition] | None:
    """Per-component two-colorings with k1 >= k2, or None on an odd cycle.

    Loops make a graph non-bipartite.  A single-vertex component is
    recorded as (1, 0).
    """
    if g.has_loop():
        return None
    color = [-1] * g.n
    out: list[ComponentBipartition] = []
    for comp in connected_components(g):
        root = comp[0]
        color[root] = 0
        sides: tuple[list[int], list[int]] = ([root], [])
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    sides[color[u]].append(u)
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
        a, b = frozenset(sides[0]), frozenset(sides[1])
        if len(a) < len(b):
            a, b = b, a
        out.append(ComponentBipartition(a, b))
    return out


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def part_size_pairs(g: Graph) -> list[tuple[int, int]] | None:
    bp = bipartition(g)
    if bp is None:
        return None
    return [cb.sizes for cb in bp]


# ---------------------------------------------------------------------------
# contraction
# ---------------------------------------------------------------------------


def contract(g: Graph, blocks: Iterable[Iterable[int]], variant: str = "quotient") -> Graph:
    """Contract each block of a partition of V(g) to one weighted vertex.

    ``variant="quotient"`` (homomorphism counting): a block containing an
    edge is invalid, since adjacent vertices cannot share an image.
    ``variant="weighted"``: such a block yields a loop on the contracted
    vertex.  New weights are block weight sums; blocks are numbered by
    their minimum vertex.
    """
    if variant not in ("quotient", "weighted"):
        raise HcsfError("invalid-parameter", f"unknown contract variant {variant!r}")
    blist = [sorted(set(b)) for b in blocks]
    covered = sorted(v for b in blist for v in b)
    if covered != list(range(g.n)):
        raise HcsfError("invalid-partition", "blocks must partition the vertex set")
    blist.sort(key=lambda b: b[0])
    owner = {}
    for i, b in enumerate(blist):
        for v in b:
            owner[v] = i
    edges: set[Edge] = set()
    for u, v in g.edges:
        bu, bv = owner[u], owner[v]
        if bu == bv:
            if variant == "quotient":
                raise HcsfError(
                    "adjacent-identification",
                    f"block {blist[bu]} contains the edge ({u},{v})",
                )
            edges.add((bu, bu))
        else:
            edges.add(_norm_edge(bu, bv))
    weights = [sum(g.weight(v) for v in b) for b in blist]
    return Graph.build(len(blist), edges, weights)


def quotient_by_partition(g: Graph, blocks: Iterable[Iterable[int]]) -> Graph:
    """Unweighted quotient used for coefficient formulas: internal block
    edges (and loops) become a loop on the contracted vertex."""
    blist = sorted((sorted(set(b)) for b in blocks), key=lambda b: b[0])
    owner = {}
    for i, b in enumerate(blist):
        for v in b:
            owner[v] = i
    edges = {_norm_edge(owner[u], owner[v]) for u, v in g.edges}
    return Graph.build(len(blist), edges)


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------


def edgeless(n: int) -> Graph:
    return Graph.build(n, [])


def complete(n: int) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    lam = as_partition(parts)
    if not lam:
        raise HcsfError("invalid-parameter", "multipartite graph needs at least one part")
    bounds = []
    start = 0
    for p in lam:
        bounds.append(range(start, start + p))
        start += p
    edges = [
        (u, v)
        for i in range(len(bounds))
        for j in range(i + 1, len(bounds))
        for u in bounds[i]
        for v in bounds[j]
    ]
    return Graph.build(start, edges)


def complete_bipartite(m: int, n: int) -> Graph:
    return complete_multipartite((m, n))


def path(n: int) -> Graph:
    if n < 1:
        raise HcsfError("invalid-parameter", "path needs n >= 1")
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise HcsfError("invalid-parameter", "cycle needs n >= 3")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """n-vertex star, center 0."""
    if n < 1:
        raise HcsfError("invalid-parameter", "star needs n >= 1")
    return Graph.build(n, [(0, i) for i in range(1, n)])


def star_with_center_loop(n: int) -> Graph:
    """n-vertex star with a loop at the center (vertex 0)."""
    g = star(n)
    return Graph.build(n, list(g.edges) + [(0, 0)])


def complete_with_loop(n: int) -> Graph:
    """K_n with a loop on vertex 0."""
    g = complete(n)
    return Graph.build(n, list(g.edges) + [(0, 0)])


def edgeless_with_loops(n: int) -> Graph:
    """n isolated vertices, each carrying a loop."""
    return Graph.build(n, [(v, v) for v in range(n)])


def path_with_end_loop(n: int) -> Graph:
    """n-vertex path with a loop attached to vertex 0."""
    g = path(n)
    return Graph.build(n, list(g.edges) + [(0, 0)])


def loop_vertex() -> Graph:
    return Graph.build(1, [(0, 0)])


def spider(legs: Sequence[int]) -> Graph:
    """Spider with torso 0 and legs that are paths of the given lengths.

    Leg i occupies consecutively numbered vertices; its tip is the last.
    """
    lam = as_partition(legs)
    if not lam or lam[-1] < 1:
        raise HcsfError("invalid-parameter", "leg lengths must be positive")
    edges = []
    nxt = 1
    for length in lam:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.build(nxt, edges)


def spider_leg_partition_ok(legs: Sequence[int]) -> bool:
    return len(as_partition(legs)) >= 3


def spider_leaves(legs: Sequence[int]) -> tuple[int, ...]:
    lam = as_partition(legs)
    out = []
    nxt = 1
    for length in lam:
        nxt += length
        out.append(nxt - 1)
    return tuple(out)


def caterpillar(leaf_counts: Sequence[int]) -> Graph:
    """Caterpillar with spine 0..s and leaf_counts[i] leaves at spine vertex i."""
    f = tuple(int(x) for x in leaf_counts)
    if len(f) < 2 or f[0] < 1 or f[-1] < 1 or any(x < 0 for x in f):
        raise HcsfError("invalid-parameter", "need s >= 1 and f_0, f_s >= 1")
    s = len(f) - 1
    edges = [(i, i + 1) for i in range(s)]
    nxt = s + 1
    for i, cnt in enumerate(f):
        for _ in range(cnt):
            edges.append((i, nxt))
            nxt += 1
    return Graph.build(nxt, edges)


def caterpillar_spine_degrees(leaf_counts: Sequence[int]) -> tuple[int, ...]:
    f = tuple(leaf_counts)
    s = len(f) - 1
    return tuple(f[i] + (1 if i in (0, s) else 2) for i in range(s + 1))


def disjoint_union(*graphs: Graph) -> Graph:
    n = 0
    edges: list[Edge] = []
    weights: list[int] = []
    weighted = any(g.weights is not None for g in graphs)
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        weights.extend(g.weight(v) for v in range(g.n))
        n += g.n
    return Graph.build(n, edges, weights if weighted else None)


# ---------------------------------------------------------------------------
# text and graph6 input/output
# ---------------------------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    if g.weights is not None:
        lines.append("w: " + " ".join(map(str, g.weights)))
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise HcsfError("parse-error", "empty graph text")
    n = int(lines[0])
    edges = []
    weights = None
    for ln in lines[1:]:
        if ln.startswith("w:"):
            weights = [int(x) for x in ln[2:].split()]
            continue
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph.build(n, edges, weights)


def from_graph6(s: str) -> Graph:
    """Decode a graph6 string (simple graphs, n <= 62)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise HcsfError("parse-error", "invalid graph6 characters")
    n = data[0]
    if n == 63:
        raise HcsfError("parse-error", "graph6 inputs above 62 vertices unsupported")
    bits = []
    for b in data[1:]:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if idx < len(bits) and bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.build(n, edges)


def to_graph6(g: Graph) -> str:
    if g.has_loop():
        raise HcsfError("invalid-parameter", "graph6 encodes simple graphs only")
    if g.n > 62:
        raise HcsfError("invalid-parameter", "graph6 export limited to 62 vertices")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if _norm_edge(u, v) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)
