"""Graph homomorphism enumeration and type counting, H-CSFs, weighted
CSFs, and the quotient-based coefficient formula.

A homomorphism maps every edge of G (loops included) onto an edge of H,
so merging adjacent vertices of G requires a looped image vertex.  The
type of a map is the partition of |V(G)| by nonzero preimage sizes.

``hom_type_counts`` is the workhorse.  It never materializes individual
maps; partial assignments are merged whenever they agree on (a) the
images of placed vertices that still have unplaced neighbors and (b) the
multiset of preimage sizes accumulated so far.  Sweeps with 10^7+ maps
(stars, the 12-vertex spiders) collapse to a few hundred thousand
states.  ``enumerate_homs`` is the plain lexicographic backtracker; the
two are cross-checked in the test suite.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import HcsfError
from .graphs import Graph, bipartition, connected_components, quotient_by_partition, spider
from .partitions import (
    Partition,
    as_partition,
    set_partitions_of_type,
)
from .symfunc import SymFunc

TypeCounts = dict[Partition, int]


# ---------------------------------------------------------------------------
# plain enumeration
# ---------------------------------------------------------------------------


def is_homomorphism(g: Graph, h: Graph, image: tuple[int, ...]) -> bool:
    return all(image[v] in h.adj[image[u]] for u, v in g.edges)


def enumerate_homs(g: Graph, h: Graph):
    """Yield every homomorphism g -> h as an image tuple, in lexicographic
    order of the image array."""
    n = g.n
    if h.n == 0:
        if n == 0:
            yield ()
        return
    image = [0] * n
    placed_nbrs = [[u for u in g.adj[v] if u != v and u < v] for v in range(n)]
    loops = [g.has_loop(v) for v in range(n)]

    def rec(v: int):
        if v == n:
            yield tuple(image)
            return
        for u in range(h.n):
            if loops[v] and not h.has_loop(u):
                continue
            if any(u not in h.adj[image[w]] for w in placed_nbrs[v]):
                continue
            image[v] = u
            yield from rec(v + 1)

    yield from rec(0)


def hom_type(image: tuple[int, ...], h_n: int) -> Partition:
    counts = [0] * h_n
    for u in image:
        counts[u] += 1
    return tuple(sorted((c for c in counts if c), reverse=True))


# ---------------------------------------------------------------------------
# merged-state type counting
# ---------------------------------------------------------------------------


def _component_order(g: Graph, comp: list[int]) -> list[int]:
    """DFS preorder from a max-degree root: every vertex after the first
    has an already-placed neighbor, which keeps candidate sets tight."""
    root = max(comp, key=lambda v: (g.degree(v), -v))
    seen = {root}
    stack = [root]
    visit: list[int] = []
    while stack:
        v = stack.pop()
        visit.append(v)
        nbrs = sorted(
            (u for u in g.adj[v] if u != v and u not in seen),
            key=lambda u: (-g.degree(u), u),
        )
        seen.update(nbrs)
        stack.extend(reversed(nbrs))
    return visit


def hom_type_counts(g: Graph, h: Graph) -> TypeCounts:
    """Exact big-integer count of homomorphisms g -> h per type."""
    if g.n == 0:
        return {(): 1}
    if h.n == 0:
        return {}
    order: list[int] = []
    for comp in connected_components(g):
        order.extend(_component_order(g, comp))
    pos = {v: i for i, v in enumerate(order)}
    nH = h.n
    base = g.n + 1
    powers = [base**u for u in range(nH)]
    nbr_mask = [0] * nH
    for u in range(nH):
        for w in h.adj[u]:
            nbr_mask[u] |= 1 << w
    all_mask = (1 << nH) - 1
    loop_mask = 0
    for u in range(nH):
        if h.has_loop(u):
            loop_mask |= 1 << u

    last_pos = [max((pos[u] for u in g.adj[v] if u != v), default=-1) for v in range(g.n)]

    states: dict[tuple, int] = {((), 0): 1}
    prev_frontier: list[int] = []
    for j, v in enumerate(order):
        keep_idx = [i for i, u in enumerate(prev_frontier) if last_pos[u] > j]
        nbr_idx = [i for i, u in enumerate(prev_frontier) if v in g.adj[u]]
        v_stays = last_pos[v] > j
        v_loop = g.has_loop(v)
        base_mask = (loop_mask if v_loop else all_mask)
        new_states: dict[tuple, int] = {}
        get = new_states.get
        for (imgs, vec), cnt in states.items():
            mask = base_mask
            for i in nbr_idx:
                mask &= nbr_mask[imgs[i]]
            if not mask:
                continue
            kept = tuple(imgs[i] for i in keep_idx)
            m = mask
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                key = (kept + (u,) if v_stays else kept, vec + powers[u])
                prev = get(key)
                new_states[key] = cnt if prev is None else prev + cnt
        states = new_states
        prev_frontier = [u for u in prev_frontier if last_pos[u] > j]
        if v_stays:
            prev_frontier.append(v)

    result: TypeCounts = {}
    for (_, vec), cnt in states.items():
        counts = []
        x = vec
        for _ in range(nH):
            x, r = divmod(x, base)
            if r:
                counts.append(r)
        lam = tuple(sorted(counts, reverse=True))
        result[lam] = result.get(lam, 0) + cnt
    return dict(sorted(result.items()))


def hom_count(g: Graph, h: Graph) -> int:
    return sum(hom_type_counts(g, h).values())


# ---------------------------------------------------------------------------
# H-CSFs
# ---------------------------------------------------------------------------


def hcsf(g: Graph, h: Graph) -> SymFunc:
    """X_G^H in the scaled-monomial basis m^{|V(H)|}: the coefficient of
    mn_lam is the number of homomorphisms of type lam."""
    if h.n < 1:
        raise HcsfError("invalid-parameter", "target graph needs at least one vertex")
    counts = hom_type_counts(g, h)
    return SymFunc("mn", g.n, {lam: Fraction(c) for lam, c in counts.items()}, h.n)


def self_csf(g: Graph) -> SymFunc:
    return hcsf(g, g)


def endomorphism_count(g: Graph) -> int:
    return hom_count(g, g)


def is_rigid(g: Graph) -> bool:
    return endomorphism_count(g) == 1


# ---------------------------------------------------------------------------
# weighted CSFs (proper colorings with weight exponents)
# ---------------------------------------------------------------------------


def weighted_csf(g: Graph) -> SymFunc:
    """Weighted chromatic symmetric function in the mt basis.

    Each set partition of V into independent blocks contributes the
    augmented monomial indexed by sorted block weight sums.  A looped
    vertex admits no proper coloring, so the result is zero.
    """
    degree = g.total_weight()
    if g.has_loop():
        return SymFunc.zero("mt", degree)
    coeffs: dict[Partition, Fraction] = {}
    blocks: list[list[int]] = []

    def rec(v: int):
        if v == g.n:
            lam = as_partition(sum(g.weight(x) for x in b) for b in blocks)
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + 1
            return
        for b in blocks:
            if all(v not in g.adj[u] for u in b):
                b.append(v)
                rec(v + 1)
                b.pop()
        blocks.append([v])
        rec(v + 1)
        blocks.pop()

    rec(0)
    return SymFunc("mt", degree, coeffs)


# ---------------------------------------------------------------------------
# coefficient via quotient graphs
# ---------------------------------------------------------------------------


def count_injective_homs(a: Graph, b: Graph) -> int:
    """Injective edge-preserving maps a -> b.  Equals S(a, b) * |Aut(a)|
    where S counts subgraphs of b isomorphic to a."""
    if a.n > b.n:
        return 0
    order: list[int] = []
    for comp in connected_components(a):
        order.extend(_component_order(a, comp))
    pos = {v: i for i, v in enumerate(order)}
    placed = [[u for u in a.adj[v] if u != v and pos[u] < pos[v]] for v in order]
    image = {}
    used = [False] * b.n

    def rec(i: int) -> int:
        if i == a.n:
            return 1
        v = order[i]
        total = 0
        for u in range(b.n):
            if used[u]:
                continue
            if a.has_loop(v) and not b.has_loop(u):
                continue
            if any(u not in b.adj[image[w]] for w in placed[i]):
                continue
            image[v] = u
            used[u] = True
            total += rec(i + 1)
            used[u] = False
        return total

    return rec(0)


def coefficient_via_quotients(g: Graph, h: Graph, lam) -> int:
    """[mn_lam] X_G^H as a sum over set partitions of type lam of the
    number of embeddings of the quotient graph into H."""
    lam = as_partition(lam)
    if sum(lam) != g.n:
        raise HcsfError("size-mismatch", f"|lam|={sum(lam)} but |V(G)|={g.n}")
    total = 0
    for blocks in set_partitions_of_type(range(g.n), lam):
        q = quotient_by_partition(g, blocks)
        if q.has_loop() and not h.has_loop():
            continue
        total += count_injective_homs(q, h)
    return total


# ---------------------------------------------------------------------------
# spider endomorphisms
# ---------------------------------------------------------------------------


def _spider_walk_vectors(legs: Partition) -> tuple[Graph, list[list[int]]]:
    t = spider(legs)
    vecs = [[1] * t.n]
    for _ in range(legs[0]):
        prev = vecs[-1]
        vecs.append([sum(prev[u] for u in t.adj[v]) for v in range(t.n)])
    return t, vecs


def spider_endomorphism_count(legs) -> int:
    """|End(T_legs)| = sum_u prod_i (A^{leg_i} 1)_u with exact integers."""
    lam = as_partition(legs)
    if len(lam) < 3:
        raise HcsfError("not-a-spider", "a spider needs at least 3 legs")
    _, vecs = _spider_walk_vectors(lam)
    total = 0
    n = len(vecs[0])
    for u in range(n):
        prod = 1
        for leg in lam:
            prod *= vecs[leg][u]
        total += prod
    return total


def spider_endo_approximation(legs) -> float:
    """Leading eigenvalue approximation of |End(T_legs)|.

    Uses the dominant eigenpair of the adjacency matrix; validates the
    equal-norm split of the Perron vector across the bipartition to 1e-9
    before trusting the decomposition.
    """
    lam = as_partition(legs)
    if len(lam) < 3:
        raise HcsfError("not-a-spider", "a spider needs at least 3 legs")
    t = spider(lam)
    a = np.zeros((t.n, t.n))
    for u, v in t.edges:
        a[u, v] = a[v, u] = 1.0
    evals, evecs = np.linalg.eigh(a)
    rho = float(evals[-1])
    x = evecs[:, -1]
    if float(np.linalg.norm(a @ x - rho * x)) > 1e-9 * max(rho, 1.0):
        raise HcsfError("eigen-convergence-failure", "eigen residual too large")
    if x.sum() < 0:
        x = -x
    if float(x.min()) <= 0:
        raise HcsfError("eigen-convergence-failure", "dominant eigenvector not positive")
    bp = bipartition(t)
    assert bp is not None and len(bp) == 1
    side0 = sorted(bp[0].big)
    side1 = sorted(bp[0].small)
    x0 = x[side0]
    x1 = x[side1]
    for half in (x0, x1):
        if abs(float(np.linalg.norm(half)) - 2 ** -0.5) > 1e-9:
            raise HcsfError("eigen-convergence-failure", "bipartition norms not 2^-1/2")
    ell = len(lam)
    e = sum(1 for p in lam if p % 2 == 0)
    o = ell - e
    n1_0 = float(np.sum(x0))
    n1_1 = float(np.sum(x1))
    nl_0 = float(np.sum(x0**ell))
    nl_1 = float(np.sum(x1**ell))
    bracket = nl_0 * n1_0**e * n1_1**o + nl_1 * n1_0**o * n1_1**e
    return (2**ell) * rho ** (t.n - 1) * bracket


def classical_csf(g: Graph) -> SymFunc:
    """Stanley's chromatic symmetric function (mt basis), via independent
    set partitions; this is the unit-weight weighted CSF."""
    return weighted_csf(Graph.build(g.n, g.edges))
