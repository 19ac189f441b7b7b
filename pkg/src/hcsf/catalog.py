"""Catalogs of small graphs: isomorphism-class enumeration, trees and
forests, family descriptors for the CLI, and named fixture graphs."""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from .errors import HcsfError
from .graphs import (
    Graph,
    caterpillar,
    complete,
    complete_multipartite,
    complete_with_loop,
    cycle,
    disjoint_union,
    edgeless,
    edgeless_with_loops,
    from_graph6,
    is_bipartite,
    path,
    path_with_end_loop,
    spider,
    star,
    star_with_center_loop,
)
from .isomorphism import canonical_form

# ---------------------------------------------------------------------------
# all graphs on n vertices, up to isomorphism
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """Simple loopless graphs on n vertices up to isomorphism, in canonical
    order.  Generated by scanning edge subsets with canonical-form dedup;
    guarded to n <= 7."""
    if n < 0 or n > 7:
        raise HcsfError("n-too-large", "isomorphism-class enumeration capped at 7 vertices")
    pairs = list(combinations(range(n), 2))
    seen: dict[str, Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.build(n, edges)
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def bipartite_graphs(n: int) -> tuple[Graph, ...]:
    """Bipartite graphs on n vertices up to isomorphism, enumerated as
    spanning subgraphs of complete bipartite graphs over all splits (so
    the cap is 8 rather than the all-graphs cap)."""
    if n < 0 or n > 8:
        raise HcsfError("n-too-large", "bipartite enumeration capped at 8 vertices")
    if n == 0:
        return (Graph.build(0),)
    seen: dict[str, Graph] = {}
    for a in range(n // 2 + 1):
        b = n - a
        cross = [(u, a + v) for u in range(a) for v in range(b)]
        for mask in range(1 << len(cross)):
            edges = [cross[i] for i in range(len(cross)) if mask >> i & 1]
            g = Graph.build(n, edges)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(seen[k] for k in sorted(seen))


def connected_bipartite_graphs(n: int) -> tuple[Graph, ...]:
    from .graphs import connected_components

    return tuple(g for g in bipartite_graphs(n) if len(connected_components(g)) == 1)


# ---------------------------------------------------------------------------
# trees and forests
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _rooted_trees(n: int) -> tuple[tuple, ...]:
    """Canonical rooted trees as nested tuples of children.

    Children are listed in nonincreasing (size, rank) order, which makes
    each multiset of subtrees appear exactly once.
    """
    if n == 1:
        return ((),)
    out: list[tuple] = []

    def rec(budget: int, max_size: int, max_rank: int, acc: list):
        if budget == 0:
            out.append(tuple(acc))
            return
        for size in range(min(budget, max_size), 0, -1):
            trees = _rooted_trees(size)
            top = max_rank if size == max_size else len(trees) - 1
            for rank in range(top, -1, -1):
                acc.append(trees[rank])
                rec(budget - size, size, rank, acc)
                acc.pop()

    rec(n - 1, n - 1, len(_rooted_trees(n - 1)) - 1, [])
    return tuple(out)


def _rooted_to_graph(tree: tuple) -> Graph:
    edges: list[tuple[int, int]] = []
    counter = [0]

    def build(node: tuple, my_id: int):
        for child in node:
            counter[0] += 1
            cid = counter[0]
            edges.append((my_id, cid))
            build(child, cid)

    build(tree, 0)
    return Graph.build(counter[0] + 1, edges)


def _tree_centroids(g: Graph) -> list[int]:
    n = g.n
    if n == 1:
        return [0]
    size = [1] * n
    order: list[int] = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for u in g.adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best: list[int] = []
    best_val = n + 1
    for v in range(n):
        heaviest = max(
            [size[u] for u in g.adj[v] if parent[u] == v] + ([n - size[v]] if parent[v] >= 0 else [])
        )
        if heaviest < best_val:
            best_val, best = heaviest, [v]
        elif heaviest == best_val:
            best.append(v)
    return best


def _ahu_code(g: Graph, root: int) -> str:
    def rec(v: int, par: int) -> str:
        return "(" + "".join(sorted(rec(u, v) for u in g.adj[v] if u != par)) + ")"

    return rec(root, -1)


def tree_canonical_key(g: Graph) -> str:
    """Canonical code of a free tree (centroid-rooted AHU encoding)."""
    return min(_ahu_code(g, c) for c in _tree_centroids(g))


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[Graph, ...]:
    """All free trees on n vertices up to isomorphism."""
    if n < 1:
        raise HcsfError("invalid-parameter", "trees need n >= 1")
    found: dict[str, Graph] = {}
    for rooted in _rooted_trees(n):
        g = _rooted_to_graph(rooted)
        key = tree_canonical_key(g)
        if key not in found:
            found[key] = g
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def forests(n: int) -> tuple[Graph, ...]:
    """All forests on n vertices up to isomorphism (multisets of trees)."""
    out: list[Graph] = []

    def rec(budget: int, max_size: int, max_rank: int, acc: tuple[Graph, ...]):
        if budget == 0:
            out.append(disjoint_union(*acc) if acc else Graph.build(0))
            return
        for size in range(min(budget, max_size), 0, -1):
            trees = free_trees(size)
            top = max_rank if size == max_size else len(trees) - 1
            for rank in range(top, -1, -1):
                rec(budget - size, size, rank, acc + (trees[rank],))

    rec(n, n, len(free_trees(n)) - 1, ())
    return tuple(out)


# ---------------------------------------------------------------------------
# family descriptors
# ---------------------------------------------------------------------------

_COMPACT = re.compile(r"^([A-Za-z]+)(\d+)$")


def _build_one(token: str) -> Graph:
    token = token.strip()
    if token.startswith("g6:"):
        return from_graph6(token[3:])
    if ":" in token:
        name, _, arg = token.partition(":")
        params = [int(x) for x in arg.split(",")] if arg else []
    else:
        m = _COMPACT.match(token)
        if not m:
            raise HcsfError("invalid-parameter", f"cannot parse family {token!r}")
        name, params = m.group(1), [int(m.group(2))]
    name = name.strip()
    try:
        if name == "K" and len(params) >= 2:
            return complete_multipartite(params)
        if name in ("K", "Kn"):
            return complete(params[0])
        if name in ("Kbar", "empty", "E"):
            return edgeless(params[0])
        if name == "P":
            return path(params[0])
        if name == "C":
            return cycle(params[0])
        if name == "S":
            return star(params[0])
        if name == "Sn1":
            return star_with_center_loop(params[0])
        if name == "Kn1":
            return complete_with_loop(params[0])
        if name == "loops":
            return edgeless_with_loops(params[0])
        if name == "Ploop":
            return path_with_end_loop(params[0])
        if name == "spider":
            return spider(params)
        if name in ("caterpillar", "cat"):
            return caterpillar(params)
    except IndexError:
        raise HcsfError("invalid-parameter", f"missing parameters in {token!r}") from None
    raise HcsfError("invalid-parameter", f"unknown family {name!r}")


def parse_family(descriptor: str) -> Graph:
    """Build a graph from a descriptor like ``spider:3,2,1,1,1,1,1,1``,
    ``K:2,3``, ``Kn1:5``, ``Sn1:4`` or unions like ``P:3+Kn:1``."""
    pieces = [p for p in descriptor.split("+") if p.strip()]
    if not pieces:
        raise HcsfError("invalid-parameter", "empty family descriptor")
    return disjoint_union(*(_build_one(p) for p in pieces))


# ---------------------------------------------------------------------------
# named fixtures
# ---------------------------------------------------------------------------


def stanley_pair() -> tuple[Graph, Graph]:
    """Two 5-vertex graphs with equal chromatic symmetric function: two
    triangles sharing a vertex, and a diamond with a pendant edge."""
    bowtie = Graph.build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    other = Graph.build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1), (2, 4)])
    return bowtie, other


def twelve_vertex_spiders() -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Leg partitions of the two hard 12-vertex spiders."""
    return (3, 2, 1, 1, 1, 1, 1, 1), (2, 2, 2, 1, 1, 1, 1, 1)


def loop_edge_iso() -> Graph:
    """Three vertices: a looped vertex joined to a second, one isolated."""
    return Graph.build(3, [(0, 0), (0, 1)])


def fixed_g_fixture(n: int) -> tuple[Graph, list[Graph]]:
    """The fixed-G loop-target basis examples for degrees 4 and 5."""
    lv = Graph.build(1, [(0, 0)])
    lv_plus_iso = disjoint_union(lv, edgeless(1))
    if n == 4:
        g = disjoint_union(path(3), edgeless(1))
        hs = [lv, lv_plus_iso, complete(2), loop_edge_iso(), g]
        return g, hs
    if n == 5:
        g = disjoint_union(cycle(4), edgeless(1))
        hs = [
            lv,
            lv_plus_iso,
            complete(2),
            disjoint_union(complete(2), edgeless(1)),
            loop_edge_iso(),
            disjoint_union(path(3), edgeless(1)),
            g,
        ]
        return g, hs
    raise HcsfError("invalid-parameter", "fixed-G fixtures exist for n=4 and n=5")
