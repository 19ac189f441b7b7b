"""Recursive H-CSF identities: disjoint-union targets and the looped
clique target expressed through weighted contractions."""

from __future__ import annotations

from itertools import product
from math import factorial

from .errors import HcsfError
from .graphs import Graph, connected_components
from .homs import hcsf, weighted_csf
from .symfunc import SymFunc, augmented_form, odot


def hcsf_disjoint_h(g: Graph, pieces: list[Graph]) -> SymFunc:
    """Augmented-basis H-CSF of g against the disjoint union of pieces,
    assembled from the pieces' H-CSFs.

    Sums over all assignments of g's connected components to the pieces
    (empty assignments contribute the multiplicative identity) and glues
    with the augmented-monomial product.
    """
    comps = connected_components(g)
    total = SymFunc.zero("mt", g.n)
    for choice in product(range(len(pieces)), repeat=len(comps)):
        term = SymFunc.unit("mt")
        for i, piece in enumerate(pieces):
            vertices = [v for comp, c in zip(comps, choice) if c == i for v in comp]
            if vertices:
                part = augmented_form(hcsf(g.induced(vertices), piece))
            else:
                part = SymFunc.unit("mt")
            term = odot(term, part)
        total = total + term
    return total


def _contract_subset_loopless(g: Graph, subset: tuple[int, ...]) -> Graph:
    """Contract one vertex subset to a single vertex of summed weight,
    discarding internal edges; the proper-coloring contraction."""
    inside = set(subset)
    keep = [v for v in range(g.n) if v not in inside]
    index = {v: i + 1 for i, v in enumerate(keep)}
    edges = set()
    for u, v in g.edges:
        ui, vi = u in inside, v in inside
        if ui and vi:
            continue
        if ui:
            edges.add((0, index[v]))
        elif vi:
            edges.add((0, index[u]))
        else:
            a, b = index[u], index[v]
            edges.add((min(a, b), max(a, b)))
    weights = [sum(g.weight(v) for v in subset)] + [g.weight(v) for v in keep]
    return Graph.build(len(keep) + 1, edges, weights)


def kn1_csf(g: Graph, n: int) -> SymFunc:
    """X_G^{K_n^1} through classic and contracted weighted CSFs:
    n! X_G plus (n-1)! times the sum over vertex subsets W in which every
    vertex has a neighbor, of the weighted CSF of G/W."""
    if g.has_loop():
        raise HcsfError("g-has-loop", "source must be loopless")
    if g.n > n:
        raise HcsfError("g-too-large", f"source has {g.n} > {n} vertices")
    total = weighted_csf(g).scale(factorial(n))
    for mask in range(1, 1 << g.n):
        subset = tuple(v for v in range(g.n) if mask >> v & 1)
        inside = set(subset)
        if any(not (g.adj[v] & (inside - {v})) for v in subset):
            continue
        contracted = _contract_subset_loopless(g, subset)
        total = total + weighted_csf(contracted).scale(factorial(n - 1))
    return total
