"""Exact canonical forms, isomorphism tests and automorphism counts.

Color-refinement (weights, loops, degrees, iterated neighbor colors)
followed by individualization backtracking.  All workloads in scope stay
at or below 16 vertices, so no external canonical-labeling tooling is
used; exactness and determinism are the requirements.
"""

from __future__ import annotations

from .graphs import Graph

_Coloring = tuple[int, ...]


def _refine(g: Graph, colors: _Coloring) -> _Coloring:
    """Iterate (color, sorted neighbor-color multiset) to a fixpoint.

    New color ids are assigned by sorting the signature keys, so the
    result does not depend on vertex numbering beyond the input colors.
    """
    n = g.n
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted(colors[u] for u in g.adj[v]))
            sigs.append((colors[v], nbr))
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = tuple(ranking[s] for s in sigs)
        if new == colors:
            return new
        if len(set(new)) == n:
            return new
        colors = new


def _initial_colors(g: Graph) -> _Coloring:
    sigs = [(g.weight(v), g.has_loop(v)) for v in range(g.n)]
    ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
    return tuple(ranking[s] for s in sigs)


def _cells(colors: _Coloring) -> list[list[int]]:
    buckets: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        buckets.setdefault(c, []).append(v)
    return [buckets[c] for c in sorted(buckets)]


def _is_twin_cell(g: Graph, cell: list[int]) -> bool:
    """True when every ordering within the cell is equivalent: the cell is
    uniformly complete or edgeless inside and uniform toward every
    outside vertex."""
    cs = set(cell)
    first = cell[0]
    inner = g.adj[first] & cs
    inner_complete = len(inner) == len(cs) - (0 if first in inner else 1)
    inner_empty = not inner
    if not (inner_complete or inner_empty):
        return False
    outside_ref = g.adj[first] - cs
    for v in cell[1:]:
        inn = g.adj[v] & cs
        if inner_empty and inn:
            return False
        if inner_complete and len(inn) != len(inner):
            return False
        if (g.adj[v] - cs) != outside_ref:
            return False
    return True


def _encode(g: Graph, order: list[int]) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    bits = []
    for j in range(g.n):
        vj = order[j]
        row = 0
        for i in range(j + 1):
            if (min(order[i], vj), max(order[i], vj)) in g.edges:
                row |= 1 << i
        bits.append(row)
    weights = tuple(g.weight(v) for v in order)
    return (g.n, weights, tuple(bits))


def _canonical_encoding(g: Graph, colors: _Coloring) -> tuple:
    colors = _refine(g, colors)
    cells = _cells(colors)
    target = next((c for c in cells if len(c) > 1), None)
    if target is None:
        order = sorted(range(g.n), key=lambda v: colors[v])
        return _encode(g, order)
    candidates = target[:1] if _is_twin_cell(g, target) else target
    best = None
    fresh = g.n + max(colors) + 1
    for v in candidates:
        nxt = list(colors)
        nxt[v] = fresh
        enc = _canonical_encoding(g, tuple(nxt))
        if best is None or enc < best:
            best = enc
    return best


def canonical_form(g: Graph) -> str:
    """String equal between two graphs iff they are isomorphic
    (respecting loops and vertex weights)."""
    n, weights, bits = _canonical_encoding(g, _initial_colors(g))
    return f"{n}|{','.join(map(str, weights))}|{','.join(map(str, bits))}"


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by backtracking over color-compatible bijections."""
    if g.n == 0:
        return 1
    colors = _refine(g, _initial_colors(g))
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    order = sorted(range(g.n), key=lambda v: (len(by_color[colors[v]]), colors[v], v))
    image = [-1] * g.n
    used = [False] * g.n
    placed_nbrs: list[list[int]] = []
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        placed_nbrs.append([u for u in g.adj[v] if u != v and pos[u] < pos[v]])

    def rec(i: int) -> int:
        if i == g.n:
            return 1
        v = order[i]
        total = 0
        for w in by_color[colors[v]]:
            if used[w]:
                continue
            if g.has_loop(v) != g.has_loop(w):
                continue
            ok = True
            for u in placed_nbrs[i]:
                if w not in g.adj[image[u]]:
                    ok = False
                    break
            if ok and len(g.adj[v]) == len(g.adj[w]):
                image[v] = w
                used[w] = True
                total += rec(i + 1)
                used[w] = False
                image[v] = -1
        return total

    return rec(0)
