"""Exact span and rank analysis of H-CSF families in the degree-n
symmetric functions: basis constructions, non-spanning certificates, the
span statistic over all targets, and fixed-source loop-target fixtures.

Ranks are computed over the rationals by fraction-free (Bareiss)
elimination on integer matrices after clearing denominators; pivoting is
deterministic (first nonzero in canonical partition order).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import ceil, lcm

from .errors import HcsfError
from .graphs import (
    Graph,
    complete,
    complete_multipartite,
    connected_components,
    disjoint_union,
    edgeless,
    edgeless_with_loops,
    path,
    path_with_end_loop,
)
from .homs import count_injective_homs, hcsf
from .isomorphism import canonical_form, is_isomorphic
from .partitions import Partition, conjugate, num_partitions, partitions_of
from .symfunc import SymFunc, convert

# ---------------------------------------------------------------------------
# exact rank
# ---------------------------------------------------------------------------


def _integer_rank(matrix: list[list[int]]) -> int:
    m = [row[:] for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) // prev
            m[i][c] = 0
        prev = m[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


def coefficient_matrix(
    rows: list[SymFunc], degree: int, columns: tuple[Partition, ...] | None = None
) -> list[list[Fraction]]:
    """Rows converted to the m basis over the canonical column order."""
    cols = columns if columns is not None else partitions_of(degree)
    out = []
    for f in rows:
        if f.degree != degree:
            raise HcsfError("degree-mismatch", f"row of degree {f.degree} in degree {degree}")
        fm = convert(f, "m")
        out.append([fm[lam] for lam in cols])
    return out


def span_rank(rows: list[SymFunc], degree: int) -> int:
    """Rank over the rationals of the given symmetric functions."""
    matrix = coefficient_matrix(rows, degree)
    int_rows = []
    for row in matrix:
        denom = lcm(*(c.denominator for c in row)) if row else 1
        int_rows.append([int(c * denom) for c in row])
    return _integer_rank(int_rows)


def is_lower_triangular(matrix: list[list[Fraction]]) -> bool:
    """Square matrix with zero above the diagonal, nonzero on it."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        return False
    for i, row in enumerate(matrix):
        if row[i] == 0:
            return False
        if any(row[j] != 0 for j in range(i + 1, size)):
            return False
    return True


# ---------------------------------------------------------------------------
# basis constructions
# ---------------------------------------------------------------------------


def _revlex_key(lam: Partition) -> tuple[int, ...]:
    return tuple(-p for p in lam)


def _by_length_desc(degree: int) -> tuple[Partition, ...]:
    """Length descending, reverse-lexicographic within a length."""
    return tuple(sorted(partitions_of(degree), key=lambda lam: (-len(lam), _revlex_key(lam))))


def multipartite_self_rows(n: int) -> tuple[list[Partition], list[SymFunc]]:
    """Self-CSFs of complete multipartite graphs, one per partition of n,
    ordered so the shortest-monomial triangularity is lower triangular."""
    order = list(_by_length_desc(n))
    rows = [hcsf(complete_multipartite(lam), complete_multipartite(lam)) for lam in order]
    return order, rows


def clique_rows(h: Graph, n: int) -> tuple[list[Partition], list[SymFunc]]:
    """X_{K_lam}^H for lam over partitions of n; H must contain K_n."""
    if count_injective_homs(complete(n), h) == 0:
        raise HcsfError("hypothesis-violated", f"target has no {n}-vertex clique")
    order = list(_by_length_desc(n))
    rows = [hcsf(complete_multipartite(lam), h) for lam in order]
    return order, rows


def _clique_components(h: Graph) -> list[int]:
    sizes = []
    for comp in connected_components(h):
        sub = h.induced(comp)
        need = len(comp) * (len(comp) - 1) // 2
        if sub.has_loop() or len(sub.edges) != need:
            raise HcsfError("hypothesis-violated", "target is not a disjoint union of cliques")
        sizes.append(len(comp))
    return sorted(sizes, reverse=True)


def union_cliques_source(lam: Partition, clique_sizes: list[int]) -> Graph:
    """The source graph for one partition in the union-of-cliques basis.

    Components are complete multipartite graphs whose part counts follow
    the clique sizes; when the last component would be a single part of
    size above one, the largest part moves there to keep it connected.
    """
    n = sum(lam)
    if len(lam) == 1:
        return edgeless(n)
    parts = list(lam)
    groups: list[list[int]] = []
    idx = 0
    for h_size in clique_sizes:
        take = min(h_size, len(parts) - idx)
        groups.append(parts[idx : idx + take])
        idx += take
        if idx == len(parts):
            break
    if len(groups[-1]) == 1 and groups[-1][0] > 1 and len(groups) > 1:
        moved = groups[0].pop(0)
        groups[-1].append(moved)
    comps = [complete_multipartite(grp) for grp in groups]
    return disjoint_union(*comps)


def union_cliques_rows(h: Graph) -> tuple[list[Partition], list[SymFunc], list[Graph]]:
    """Source graphs and rows for a disjoint-union-of-cliques target."""
    sizes = _clique_components(h)
    n = h.n
    if sizes[0] < 3:
        raise HcsfError("hypothesis-violated", "need a clique of size at least 3")
    if sum(1 for s in sizes if s == 1) > ceil(n / 2):
        raise HcsfError("hypothesis-violated", "too many singleton cliques")
    bands: list[Partition] = []
    upper = 0
    prev_upper = 1
    for s in sizes:
        upper += s
        band = [
            lam
            for lam in partitions_of(n)
            if prev_upper < len(lam) <= upper and len(lam) >= 2
        ]
        band.sort(key=lambda lam: (-len(lam), _revlex_key(lam)))
        bands.extend(band)
        prev_upper = upper
    order = bands + [(n,)]
    sources = [union_cliques_source(lam, sizes) for lam in order]
    rows = [hcsf(g, h) for g in sources]
    return order, rows, sources


def loop_basis_rows(kind: str, n: int) -> tuple[list[Partition], list[SymFunc], Graph]:
    """Loop-target bases: ``edgeless`` (isolated looped vertices) or
    ``path`` (path with a loop on one end)."""
    if kind == "edgeless":
        h = edgeless_with_loops(n)
        order = sorted(partitions_of(n), key=lambda lam: (len(lam), _revlex_key(lam)))
        sources = [disjoint_union(*(path(p) for p in lam)) for lam in order]
    elif kind == "path":
        h = path_with_end_loop(n)
        order = sorted(partitions_of(n))  # increasing lexicographic
        sources = [disjoint_union(*(path_with_end_loop(p) for p in lam)) for lam in order]
    else:
        raise HcsfError("invalid-parameter", f"unknown loop basis kind {kind!r}")
    rows = [hcsf(g, h) for g in sources]
    return order, rows, h


def loop_basis_columns(kind: str, order: list[Partition]) -> tuple[Partition, ...]:
    """Column order making each loop basis lower triangular."""
    if kind == "edgeless":
        return tuple(order)
    return tuple(conjugate(lam) for lam in order)


# ---------------------------------------------------------------------------
# spans over all sources
# ---------------------------------------------------------------------------


def all_graphs_span_rank(h: Graph) -> int:
    """Rank of {X_G^H : G over all |V(H)|-vertex graphs up to iso}."""
    from .catalog import all_graphs

    rows = [hcsf(g, h) for g in all_graphs(h.n)]
    return span_rank(rows, h.n)


def p_h_statistic(n: int) -> dict:
    """Fraction of n-vertex targets H whose H-CSFs span everything, with
    the spanning and non-spanning classes listed."""
    from .catalog import all_graphs

    classes = all_graphs(n)
    target_rank = num_partitions(n)
    good, bad = [], []
    for h in classes:
        (good if all_graphs_span_rank(h) == target_rank else bad).append(h)
    return {
        "n": n,
        "fraction": Fraction(len(good), len(classes)),
        "good": good,
        "bad": bad,
    }


# ---------------------------------------------------------------------------
# non-spanning certificates
# ---------------------------------------------------------------------------


def complete_minus_disjoint_edges(n: int, k: int) -> Graph:
    if 2 * k > n:
        raise HcsfError("invalid-parameter", "too many disjoint edges to remove")
    g = complete(n)
    removed = {(2 * i, 2 * i + 1) for i in range(k)}
    return Graph.build(n, [e for e in g.edges if e not in removed])


def removed_edges_rank_check(n: int, k: int) -> dict:
    """Span dimension for K_n minus k disjoint edges: the number of
    partitions of n with at most n-k parts."""
    h = complete_minus_disjoint_edges(n, k)
    rank = all_graphs_span_rank(h)
    expected = sum(1 for lam in partitions_of(n) if len(lam) <= n - k)
    return {"n": n, "k": k, "rank": rank, "expected": expected, "ok": rank == expected}


def matching_pexp_check(k: int, n: int, samples: int = 50, seed: int = 20240) -> dict:
    """Target of k disjoint edges plus isolated vertices: every p term of
    every sampled bipartite X_G^H has at most 2k parts above 1."""
    if k > n // 4 - 1:
        raise HcsfError("hypothesis-violated", "need k <= floor(n/4) - 1")
    h = disjoint_union(*([complete(2)] * k + [edgeless(n - 2 * k)]))
    rng = random.Random(seed)
    seen: set[str] = set()
    checked = 0
    violations = []
    attempts = 0
    while checked < samples and attempts < samples * 40:
        attempts += 1
        left = rng.randint(1, n - 1)
        edges = [
            (u, v)
            for u in range(left)
            for v in range(left, n)
            if rng.random() < 0.45
        ]
        g = Graph.build(n, edges)
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        x = convert(hcsf(g, h), "p")
        checked += 1
        for lam in x.coeffs:
            if sum(1 for p in lam if p > 1) > 2 * k:
                violations.append((sorted(g.edges), lam))
    return {"k": k, "n": n, "checked": checked, "violations": violations, "ok": not violations}


def _vertex_transitive(h: Graph) -> bool:
    if h.n == 0:
        return True
    marked0 = Graph.build(h.n, h.edges, [2 if v == 0 else 1 for v in range(h.n)])
    for w in range(1, h.n):
        marked = Graph.build(h.n, h.edges, [2 if v == w else 1 for v in range(h.n)])
        if not is_isomorphic(marked0, marked):
            return False
    return True


def clone_pair(h: Graph) -> tuple[int, int] | None:
    """A nonadjacent pair with identical neighborhoods, if any."""
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if v in h.adj[u]:
                continue
            if h.adj[u] - {v} == h.adj[v] - {u}:
                return u, v
    return None


def clone_check(h: Graph) -> dict:
    """Verify the clone-vertex non-spanning statement on an instance: the
    span of the X_G^H equals the span of the X_G^{H'} and misses at
    least one dimension."""
    from .catalog import all_graphs

    pair = clone_pair(h)
    if pair is None:
        raise HcsfError("hypothesis-violated", "no nonadjacent clone pair")
    u, v = pair
    reduced = h.induced([w for w in range(h.n) if w != u])
    if not _vertex_transitive(reduced):
        raise HcsfError("hypothesis-violated", "reduced target is not vertex-transitive")
    n = h.n
    sources = all_graphs(n)
    rank_h = span_rank([hcsf(g, h) for g in sources], n)
    rank_reduced = span_rank([hcsf(g, reduced) for g in sources], n)
    return {
        "pair": pair,
        "rank": rank_h,
        "reduced_rank": rank_reduced,
        "codimension_at_least_1": rank_h <= num_partitions(n) - 1,
        "ok": rank_h == rank_reduced and rank_h <= num_partitions(n) - 1,
    }


# ---------------------------------------------------------------------------
# fixed-source analysis
# ---------------------------------------------------------------------------


def two_vertex_loop_graphs() -> list[Graph]:
    """The six isomorphism classes of two-vertex graphs with loops."""
    out = []
    for edge in (False, True):
        for loops in ((), (0,), (0, 1)):
            edges = ([(0, 1)] if edge else []) + [(v, v) for v in loops]
            out.append(Graph.build(2, edges))
    return out


def length2_projection_dimension(g: Graph) -> int:
    """Dimension of the span of the length-2 monomial projections of
    X_G^{H_i} over the six two-vertex loop graphs."""
    if g.n < 4:
        raise HcsfError("invalid-parameter", "projection analysis needs at least 4 vertices")
    cols = tuple(lam for lam in partitions_of(g.n) if len(lam) == 2)
    rows = []
    for h in two_vertex_loop_graphs():
        fm = convert(hcsf(g, h), "m")
        rows.append([fm[lam] for lam in cols])
    int_rows = []
    for row in rows:
        denom = lcm(*(c.denominator for c in row)) if row else 1
        int_rows.append([int(c * denom) for c in row])
    return _integer_rank(int_rows)


def verify_fixed_g_basis(g: Graph, targets: list[Graph]) -> tuple[bool, int]:
    """Whether {X_G^{H_i}} spans the full degree-|V(G)| space."""
    rows = [hcsf(g, h) for h in targets]
    rank = span_rank(rows, g.n)
    return rank == num_partitions(g.n), rank
