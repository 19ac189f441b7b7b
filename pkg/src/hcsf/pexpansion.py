"""Closed-form power-sum expansions for star and complete-bipartite
targets, and sign/shape checks for general complete-bipartite targets.

The expansions assume the target is large enough (n at least the sum of
the larger part sizes over the components of G); below that threshold the
printed forms would need re-expression into shorter power sums, so the
operations refuse instead, and the generic route (hcsf + conversion)
covers small targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial

from .errors import HcsfError
from .graphs import Graph, bipartition
from .partitions import Partition, as_partition
from .symfunc import SymFunc, omega


@dataclass(frozen=True)
class BipartiteProfile:
    """Per-component part sizes (k1 >= k2) of a bipartite graph."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def num_components(self) -> int:
        return len(self.pairs)

    @property
    def sum_big(self) -> int:
        return sum(a for a, _ in self.pairs)

    @property
    def sum_small(self) -> int:
        return sum(b for _, b in self.pairs)

    @property
    def num_vertices(self) -> int:
        return self.sum_big + self.sum_small


def bipartite_profile(g: Graph) -> BipartiteProfile:
    bp = bipartition(g)
    if bp is None:
        raise HcsfError("not-bipartite", "graph has an odd cycle or a loop")
    return BipartiteProfile(tuple(cb.sizes for cb in bp))


def _side_sum_table(profile: BipartiteProfile) -> dict[tuple[int, ...], list[int]]:
    """For each choice vector b (which side of each component is forced),
    the counts N_b[s] of ways to send exactly s vertices to the forced
    target: the forced sides entirely, plus chosen extras from the other
    sides."""
    nv = profile.num_vertices
    out: dict[tuple[int, ...], list[int]] = {}
    for b in product((0, 1), repeat=profile.num_components):
        counts = [0] * (nv + 1)
        counts[0] = 1
        for (k1, k2), choice in zip(profile.pairs, b):
            forced, other = (k1, k2) if choice == 0 else (k2, k1)
            nxt = [0] * (nv + 1)
            for s, c in enumerate(counts):
                if not c:
                    continue
                for extra in range(other + 1):
                    nxt[s + forced + extra] += c * comb(other, extra)
            counts = nxt
        out[b] = counts
    return out


def _signed_totals(profile: BipartiteProfile) -> list[int]:
    """F[s] = sum over side choices b of (-1)^(s - forced(b)) * N_b[s]."""
    nv = profile.num_vertices
    table = _side_sum_table(profile)
    totals = [0] * (nv + 1)
    for b, counts in table.items():
        forced = sum(
            (k1 if choice == 0 else k2) for (k1, k2), choice in zip(profile.pairs, b)
        )
        for s, c in enumerate(counts):
            if c:
                totals[s] += (-1) ** (s - forced) * c
    return totals


def _hook(j: int, nv: int) -> Partition:
    """Partition (j, 1^(nv-j)); j = 0 or 1 degenerates to all ones."""
    if j <= 1:
        return (1,) * nv
    return as_partition((j,) + (1,) * (nv - j))


def _guard(g: Graph, n: int) -> BipartiteProfile:
    profile = bipartite_profile(g)
    if n < 1:
        raise HcsfError("invalid-parameter", "target size must be >= 1")
    if n < profile.sum_big:
        raise HcsfError(
            "n-too-small",
            f"need n >= {profile.sum_big}; below that the expansion changes shape",
        )
    return profile


def star_p_expansion(g: Graph, n: int) -> SymFunc:
    """p expansion of X_G^{S_{n+1}} by inclusion-exclusion over the
    vertices forced onto the star center; G bipartite, n >= sum of the
    larger part sizes."""
    profile = _guard(g, n)
    nv = profile.num_vertices
    totals = _signed_totals(profile)
    coeffs: dict[Partition, Fraction] = {}
    for j, f in enumerate(totals):
        if not f:
            continue
        lam = _hook(j, nv)
        # with no vertex pinned to the center, the center label is free
        scale = factorial(n + 1) if j == 0 else factorial(n)
        coeffs[lam] = coeffs.get(lam, Fraction(0)) + f * scale
    return SymFunc("p", nv, coeffs)


def predicted_star_sign(g: Graph) -> int:
    """Shared sign of the p coefficients of omega(X_G^{S_{n+1}})."""
    profile = bipartite_profile(g)
    return -1 if (profile.sum_small - 1) % 2 else 1


def p_monotone_verdict(f: SymFunc) -> str:
    """Sign pattern of the nonzero p coefficients of omega(f):
    all-nonnegative, all-nonpositive, zero, or mixed."""
    if f.basis != "p":
        raise HcsfError("wrong-basis", "verdict expects the p basis")
    w = omega(f)
    if not w.coeffs:
        return "zero"
    signs = {c > 0 for c in w.coeffs.values()}
    if signs == {True}:
        return "all-nonnegative"
    if signs == {False}:
        return "all-nonpositive"
    return "mixed"


def k2n_p_expansion(g: Graph, n: int) -> SymFunc:
    """p expansion of X_G^{K_{2,n}}; G bipartite, n >= sum of the larger
    part sizes.

    Two coefficient families: pairs (j >= j' >= 2) mapping onto the two
    small-side vertices, and hooks (j, 1^...) with a correction that
    removes, once per unordered pair summing to j, the diagonal where
    both power-sum factors pick the same variable.
    """
    profile = _guard(g, n)
    nv = profile.num_vertices
    totals = _signed_totals(profile)

    def f(s: int) -> int:
        return totals[s] if 0 <= s <= nv else 0

    coeffs: dict[Partition, Fraction] = {}
    pair_coeff: dict[tuple[int, int], Fraction] = {}
    for j in range(2, nv + 1):
        for jp in range(2, j + 1):
            if j + jp > nv:
                continue
            c = Fraction(2 * factorial(n) * comb(j + jp, j) * f(j + jp))
            if c:
                pair_coeff[(j, jp)] = c
                lam = as_partition((j, jp) + (1,) * (nv - j - jp))
                coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
    for j in range(1, nv + 1):
        c = Fraction(2 * factorial(n + 1) * f(j))
        c += Fraction(2 * factorial(n) * (j + 1) * f(j + 1))
        for jp in range(2, j // 2 + 1):
            c -= pair_coeff.get((j - jp, jp), Fraction(0))
        if c:
            lam = _hook(j, nv)
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
    # with no vertex pinned to the small side, all n+2 labels are free
    if f(0):
        lam = _hook(0, nv)
        coeffs[lam] = coeffs.get(lam, Fraction(0)) + Fraction(factorial(n + 2) * f(0))
    return SymFunc("p", nv, coeffs)


def kmn_property_check(g: Graph, m: int, n: int) -> dict:
    """Check the three structural properties of the p expansion of
    X_G^{K_{m,n}} on a concrete instance, reporting violations."""
    from .graphs import complete_bipartite
    from .homs import hcsf
    from .symfunc import convert

    if n < m:
        raise HcsfError("invalid-parameter", "need n >= m")
    x = convert(hcsf(g, complete_bipartite(m, n)), "p")
    report: dict = {"empty": x.is_zero(), "violations": [], "ok": True}
    if x.is_zero():
        return report
    profile = _guard(g, n)
    sum_small = profile.sum_small
    w = omega(x)
    expected_sign = -1 if (m + sum_small) % 2 else 1
    for lam, c in x.items_sorted():
        big_parts = [p for p in lam if p > 1]
        if len(big_parts) > m:
            report["violations"].append(("parts-above-one", lam))
        if sum(sorted(lam, reverse=True)[:m]) < sum_small:
            report["violations"].append(("largest-parts-sum", lam))
        if len(big_parts) == m:
            sign = 1 if w[lam] > 0 else -1
            if sign != expected_sign:
                report["violations"].append(("sign", lam))
    report["ok"] = not report["violations"]
    return report
