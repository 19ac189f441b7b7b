"""What a self-CSF reveals: bipartite degree data, component differences,
tree detection, and the spider and caterpillar special cases.

All operations here read coefficients of X_G^G in the scaled-monomial
basis (the basis ``hcsf`` produces, where the coefficient of mn_lam is
the number of self-maps of type lam) and invert the counting formulas.
Every recovery has a hom-engine cross-check in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from math import comb, factorial, isqrt

from .errors import HcsfError
from .graphs import Graph, connected_components, spider
from .homs import count_injective_homs, hom_type_counts
from .partitions import (
    Partition,
    as_partition,
    multiplicities,
    multiplicity_factorial,
    stirling2,
)
from .symfunc import SymFunc


def _ensure_self_csf_basis(x: SymFunc) -> SymFunc:
    if x.basis != "mn":
        raise HcsfError("wrong-basis", "expected a self-CSF in the mn basis")
    return x


def _length2_items(x: SymFunc) -> list[tuple[Partition, int]]:
    out = []
    for lam, c in x.items_sorted():
        if len(lam) == 2:
            if c.denominator != 1:
                raise HcsfError("inconsistent-coefficients", "non-integer type count")
            out.append((lam, c.numerator))
    return out


# ---------------------------------------------------------------------------
# connected bipartite graphs: star sums and degree power sums
# ---------------------------------------------------------------------------


def star_sums_from_self_csf(x: SymFunc, assume_connected: bool = True):
    """Recover sum_v C(deg v, l) for l = 1..k from a connected bipartite
    self-CSF, where k is the smaller part size.

    Returns (star_sums, power_sums), both lists indexed by l-1, with
    power_sums[l-1] = sum_v deg(v)^l by binomial inversion.
    """
    x = _ensure_self_csf_basis(x)
    if not assume_connected:
        raise HcsfError("invalid-parameter", "recovery requires the connectivity assumption")
    n = x.degree
    if n == 1 and x[(1,)] != 0:
        return [], []
    length2 = _length2_items(x)
    if not length2:
        raise HcsfError("not-bipartite", "no length-2 scaled monomial present")
    if len(length2) > 1:
        raise HcsfError("ambiguous", "several length-2 monomials contradict connectivity")
    (big, small), _ = length2[0]
    n = x.degree
    k = small
    star_sums: list[int] = []
    for ell in range(1, k + 1):
        if ell < k:
            lam = as_partition((big, k - ell + 1) + (1,) * (ell - 1))
            divisor = factorial(ell) * comb(k, ell - 1)
        else:
            lam = as_partition((big,) + (1,) * k)
            divisor = factorial(k)
        # swapping which side collapses gives a second family of maps,
        # except at l = 1 where the swapped map is the same map
        if big == small and ell >= 2:
            divisor *= 2
        coeff = x[lam]
        value = Fraction(coeff, divisor)
        if value.denominator != 1 or value < 0:
            raise HcsfError("inconsistent-coefficients", f"bad star-sum value at l={ell}")
        star_sums.append(int(value))
    power_sums = []
    for ell in range(1, k + 1):
        total = sum(stirling2(ell, j) * factorial(j) * star_sums[j - 1] for j in range(1, ell + 1))
        power_sums.append(total)
    return star_sums, power_sums


def degree_power_sums(g: Graph) -> list[int]:
    """Direct sum_v deg(v)^l for l = 1..k(smaller part); test oracle."""
    return [sum(g.degree(v) ** ell for v in range(g.n)) for ell in range(1, g.n + 1)]


# ---------------------------------------------------------------------------
# disconnected bipartite graphs: part-size difference multiset
# ---------------------------------------------------------------------------


def diff_multiset_from_self_csf(x: SymFunc) -> tuple[list[int], int]:
    """Recover the multiset of nonzero part-size differences across the
    components of a bipartite graph, plus the value |E| * 2^(e+1).

    Greedy peeling: the widest length-2 monomial fixes the total
    difference S and the unit B = |E| * 2^(e+1); each next unexplained
    monomial reveals the smallest new difference and its multiplicity.
    """
    x = _ensure_self_csf_basis(x)
    n = x.degree
    if n and x[(n,)] != 0:
        # a full collapse is possible only for the edgeless graph, whose
        # components are all singletons with difference 1 and no edges
        return [1] * n, 0
    length2 = _length2_items(x)
    if not length2:
        raise HcsfError("not-bipartite", "no length-2 scaled monomial present")
    obs = {big - small: c for (big, small), c in length2}
    gaps = sorted(obs, reverse=True)
    s = gaps[0]
    if s == 0:
        return [], 2 * obs[0]
    if any((s - gap) % 2 for gap in gaps):
        raise HcsfError("inconsistent-coefficients", "gap parity mismatch")
    unit = obs[s]

    def weight(gap: int) -> int:
        raw = obs.get(gap, 0)
        if gap == 0:
            raw *= 2
        value = Fraction(raw, unit)
        if value.denominator != 1:
            raise HcsfError("inconsistent-coefficients", f"unit does not divide gap {gap}")
        return int(value)

    observed = {gap: weight(gap) for gap in obs}
    known: list[tuple[int, int]] = []

    def predicted() -> dict[int, int]:
        acc = {s: 1}
        for d, c in known:
            nxt: dict[int, int] = {}
            for gap, w in acc.items():
                for flips in range(c + 1):
                    key = gap - 2 * d * flips
                    nxt[key] = nxt.get(key, 0) + w * comb(c, flips)
            acc = nxt
        return {gap: w for gap, w in acc.items() if gap >= 0}

    while True:
        pred = predicted()
        residual_gap = None
        for gap in sorted(set(observed) | set(pred), reverse=True):
            diff = observed.get(gap, 0) - pred.get(gap, 0)
            if diff < 0:
                raise HcsfError("inconsistent-coefficients", f"overshoot at gap {gap}")
            if diff > 0:
                residual_gap = gap
                residual = diff
                break
        if residual_gap is None:
            break
        d_new = (s - residual_gap) // 2
        if d_new <= 0 or (known and d_new <= known[-1][0]):
            raise HcsfError("inconsistent-coefficients", "peeling order violated")
        known.append((d_new, residual))
        if sum(d * c for d, c in known) > s:
            raise HcsfError("inconsistent-coefficients", "differences exceed total")
    if sum(d * c for d, c in known) != s:
        raise HcsfError("inconsistent-coefficients", "differences do not sum to the total")
    out: list[int] = []
    for d, c in known:
        out.extend([d] * c)
    return sorted(out), unit


def diff_multiset_direct(g: Graph) -> list[int]:
    """Ground truth from components + bipartition; test oracle."""
    from .graphs import bipartition

    bp = bipartition(g)
    if bp is None:
        raise HcsfError("not-bipartite", "graph has an odd cycle or loop")
    return sorted(d for d in (len(cb.big) - len(cb.small) for cb in bp) if d)


# ---------------------------------------------------------------------------
# tree detection
# ---------------------------------------------------------------------------


def tree_verdict(x: SymFunc) -> str:
    """Classify a self-CSF as from a tree, a non-tree, or the one shared
    value X_{P3}^{P3} = X_{K1+K2}^{K1+K2} ("exceptional")."""
    x = _ensure_self_csf_basis(x)
    n = x.degree
    if n == 0:
        return "non-tree"
    if n == 1:
        return "tree"
    if n == 2:
        return "non-tree" if x[(2,)] != 0 else "tree"
    length2 = _length2_items(x)
    if len(length2) != 1:
        return "non-tree"
    _, coeff = length2[0]
    if coeff != 2 * (n - 1):
        return "non-tree"
    return "exceptional" if n == 3 else "tree"


def is_tree(g: Graph) -> bool:
    return (
        g.n >= 1
        and not g.has_loop()
        and len(g.edges) == g.n - 1
        and len(connected_components(g)) == 1
    )


# ---------------------------------------------------------------------------
# the near-injective self-map coefficient of a tree, three ways
# ---------------------------------------------------------------------------


def _check_tree(t: Graph) -> None:
    if not is_tree(t):
        raise HcsfError("not-a-tree", "operation requires a tree")


def _merge_pair_quotient(t: Graph, u: int, w: int) -> Graph:
    blocks = [[u, w]] + [[v] for v in range(t.n) if v not in (u, w)]
    from .graphs import quotient_by_partition

    return quotient_by_partition(t, blocks)


def _distance2_pairs(t: Graph):
    for v in range(t.n):
        nbrs = sorted(t.adj[v])
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, w = nbrs[i], nbrs[j]
                if w not in t.adj[u]:
                    yield u, v, w


def _in_L(du: int, dv: int, dw: int) -> bool:
    return dv >= 2 and (du == 1 or dw == 1)


def _in_J(du: int, dv: int, dw: int) -> bool:
    return (du >= 2 and dv == du + 1 and dw == 2) or (dw >= 2 and dv == dw + 1 and du == 2)


def tree_m21_coefficient(t: Graph) -> dict[str, int]:
    """[mn_{2,1^{n-2}}] X_T^T via three routes that must agree:

    ``distance2``       embeddings of T/uw over distance-2 pairs
    ``degree_filtered`` same sum restricted by the degree-triple filter
    ``leaf_form``       leaf/grandneighbor form with double-count fix
    """
    _check_tree(t)
    dist2 = 0
    filtered = 0
    j_part = 0
    for u, v, w in _distance2_pairs(t):
        emb = count_injective_homs(_merge_pair_quotient(t, u, w), t)
        dist2 += emb
        du, dv, dw = t.degree(u), t.degree(v), t.degree(w)
        if _in_L(du, dv, dw) or _in_J(du, dv, dw):
            filtered += emb
        if _in_J(du, dv, dw):
            j_part += emb
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    leaf_sum = 0
    removed_emb = {}
    for leaf in leaves:
        sub = t.induced([v for v in range(t.n) if v != leaf])
        removed_emb[leaf] = count_injective_homs(sub, t)
        nei = next(iter(t.adj[leaf]))
        leaf_sum += (t.degree(nei) - 1) * removed_emb[leaf]
    pair_fix = 0
    for u, v, w in _distance2_pairs(t):
        if t.degree(u) == 1 and t.degree(w) == 1:
            pair_fix += removed_emb[u]
    leaf_form = j_part + leaf_sum - pair_fix
    return {"distance2": dist2, "degree_filtered": filtered, "leaf_form": leaf_form}


# ---------------------------------------------------------------------------
# spiders
# ---------------------------------------------------------------------------


def spider_leg_count_from_self_csf(x: SymFunc) -> tuple[int, bool]:
    """Number of legs of a spider from its self-CSF.

    Returns (legs, is_star).  Stars are recognized by the (n-1, 1)
    monomial; otherwise the squared-degree power sum is inverted.
    Behavior on inputs that are not spider self-CSFs is undefined.
    """
    x = _ensure_self_csf_basis(x)
    n = x.degree
    if x[(n - 1, 1)] != 0:
        return n - 1, True
    _, power_sums = star_sums_from_self_csf(x, assume_connected=True)
    if len(power_sums) < 2:
        raise HcsfError("inconsistent-coefficients", "squared degree sum unavailable")
    p2 = power_sums[1]
    disc = 9 - 16 * (n - 1) + 4 * p2
    root = isqrt(disc) if disc >= 0 else -1
    if root < 0 or root * root != disc or (3 + root) % 2:
        raise HcsfError("inconsistent-coefficients", "leg-count equation has no integer root")
    return (3 + root) // 2, False


def spider_aut_count(legs) -> int:
    """|Aut(T_legs)| = prod_i r_i(legs)!."""
    lam = as_partition(legs)
    if len(lam) < 3:
        raise HcsfError("not-a-spider", "a spider needs at least 3 legs")
    return multiplicity_factorial(lam)


def spider_m21_ratio(legs) -> Fraction:
    """Closed form for [mn_{2,1^{n-2}}] / [mn_{1^n}] of a spider self-CSF."""
    lam = as_partition(legs)
    ell = len(lam)
    if ell < 4:
        raise HcsfError("legs-below-4", "ratio formula requires at least 4 legs")
    r = multiplicities(lam)
    r1 = r.get(1, 0)
    cross = sum(r.get(j - 1, 0) * r.get(j, 0) for j in range(2, sum(lam) + 1))
    return (
        Fraction(r1 * ell + ell)
        - Fraction(3, 2) * r1
        - Fraction(1, 2) * r1 * r1
        + cross
    )


def spider_m21_ratio_via_hom_engine(legs) -> Fraction:
    lam = as_partition(legs)
    t = spider(lam)
    counts = hom_type_counts(t, t)
    n = t.n
    return Fraction(counts[as_partition((2,) + (1,) * (n - 2))], counts[(1,) * n])


# ---------------------------------------------------------------------------
# caterpillars
# ---------------------------------------------------------------------------


def caterpillar_aut_count(leaf_counts) -> int:
    f = tuple(int(v) for v in leaf_counts)
    if len(f) < 2 or f[0] < 1 or f[-1] < 1 or any(v < 0 for v in f):
        raise HcsfError("invalid-parameter", "need s >= 1 and f_0, f_s >= 1")
    total = 2 if tuple(reversed(f)) == f else 1
    for v in f:
        total *= factorial(v)
    return total


def _newton_elementary(power_sums: list[int], count: int) -> list[Fraction]:
    """First ``count`` elementary symmetric functions from power sums."""
    e: list[Fraction] = [Fraction(1)]
    for j in range(1, count + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            acc += (-1) ** (i - 1) * e[j - i] * power_sums[i - 1]
        e.append(acc / j)
    return e


def _integer_roots(monic: list[Fraction], bound: int) -> list[int]:
    """All roots (with multiplicity) of a monic polynomial whose roots are
    integers in 1..bound; exact synthetic division."""
    coeffs = [Fraction(c) for c in monic]
    roots: list[int] = []
    degree = len(coeffs) - 1
    while degree > 0:
        found = None
        for cand in range(1, bound + 1):
            acc = Fraction(0)
            for c in coeffs:
                acc = acc * cand + c
            if acc == 0:
                found = cand
                break
        if found is None:
            raise HcsfError("root-extraction-failure", "non-integer spine degree")
        new = []
        acc = Fraction(0)
        for c in coeffs[:-1]:
            acc = acc * found + c
            new.append(acc)
        coeffs = new
        roots.append(found)
        degree -= 1
    return sorted(roots)


def caterpillar_spine_degrees_from_self_csf(x: SymFunc, s: int) -> list[int]:
    """Recover the multiset of spine-vertex degrees of a caterpillar with
    known spine length s from its self-CSF.

    Newton's identities turn recovered degree power sums into a monic
    integer polynomial whose roots are the spine degrees; when fewer
    power sums than spine vertices are available, the shortfall is made
    up by forced degree-2 vertices.
    """
    x = _ensure_self_csf_basis(x)
    n = x.degree
    _, power_sums = star_sums_from_self_csf(x, assume_connected=True)
    k = len(power_sums)
    leaves = n - s - 1
    spine_power_sums = [power_sums[j - 1] - leaves for j in range(1, k + 1)]
    unknowns = s + 1
    forced_twos = 0
    if k < unknowns:
        forced_twos = unknowns - k
        unknowns = k
        spine_power_sums = [spine_power_sums[j - 1] - forced_twos * 2**j for j in range(1, k + 1)]
    e = _newton_elementary(spine_power_sums[:unknowns], unknowns)
    monic = [Fraction(1)]
    for j in range(1, unknowns + 1):
        monic.append((-1) ** j * e[j])
    roots = _integer_roots(monic, n)
    return sorted(roots + [2] * forced_twos)


def caterpillar_f0fs_from_self_csf(x: SymFunc, leaf_counts) -> int:
    """The value (1 + [rev(f) = f]) * f_0 * f_s, read off the self-CSF.

    ``leaf_counts`` supplies only the spine length; the automorphism
    coefficient and recovered spine degrees do the rest.
    """
    x = _ensure_self_csf_basis(x)
    f = tuple(leaf_counts)
    s = len(f) - 1
    n = x.degree
    aut = x[(1,) * n]
    if aut.denominator != 1:
        raise HcsfError("inconsistent-coefficients", "non-integer automorphism count")
    degrees = caterpillar_spine_degrees_from_self_csf(x, s)
    denom = 1
    for d in degrees:
        denom *= factorial(d - 2)
    value = Fraction(int(aut), denom)
    if value.denominator != 1:
        raise HcsfError("inconsistent-coefficients", "factorial product does not divide")
    return int(value)


# ---------------------------------------------------------------------------
# forests
# ---------------------------------------------------------------------------


def forest_component_theorem_check(n: int) -> dict:
    """Exhaustively verify over all n-vertex forests that equal self-CSFs
    force equal component counts, listing any violating pairs."""
    if n < 1 or n > 9:
        raise HcsfError("invalid-parameter", "forest sweep supported for 1 <= n <= 9")
    from .catalog import forests
    from .homs import self_csf

    all_forests = forests(n)
    groups: dict[tuple, list[Graph]] = {}
    for g in all_forests:
        groups.setdefault(self_csf(g).key(), []).append(g)
    violations = []
    collisions = 0
    for members in groups.values():
        if len(members) < 2:
            continue
        collisions += 1
        kappas = {len(connected_components(g)) for g in members}
        if len(kappas) > 1:
            violations.append(
                [
                    {"edges": sorted(g.edges), "components": len(connected_components(g))}
                    for g in members
                ]
            )
    return {
        "n": n,
        "forests": len(all_forests),
        "csf_collisions": collisions,
        "violations": violations,
        "ok": (n != 3 and not violations) or (n == 3 and len(violations) == 1),
    }


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


@dataclass
class SelfCsfReport:
    n: int
    automorphism_count: int
    bipartite: bool
    tree_verdict: str
    star_sums: list[int] | None = None
    degree_power_sums: list[int] | None = None
    diff_multiset: list[int] | None = None
    edge_component_value: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def self_csf_report(x: SymFunc, assume_connected: bool = False) -> SelfCsfReport:
    x = _ensure_self_csf_basis(x)
    n = x.degree
    aut = x[(1,) * n] if n else Fraction(1)
    bip = any(len(lam) == 2 for lam in x.coeffs)
    report = SelfCsfReport(
        n=n,
        automorphism_count=int(aut),
        bipartite=bip,
        tree_verdict=tree_verdict(x),
    )
    if bip:
        diffs, value = diff_multiset_from_self_csf(x)
        report.diff_multiset = diffs
        report.edge_component_value = value
        if assume_connected:
            star, power = star_sums_from_self_csf(x, assume_connected=True)
            report.star_sums = star
            report.degree_power_sums = power
    return report
