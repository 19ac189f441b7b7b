"""H-chromatic polynomials: the image-size-profile formula, the 4-cycle
closed form for trees, the looped-star independent-set machinery, and a
bounded search for equal-polynomial/different-CSF pairs.

Also hosts an independent deletion-contraction chromatic polynomial used
to cross-check clique-target homomorphism counts.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import HcsfError
from .graphs import Graph, star_with_center_loop
from .homs import hcsf, hom_type_counts
from .isomorphism import canonical_form
from .partitions import stirling2
from .symfunc import (
    Polynomial,
    SymFunc,
    convert,
    evaluate_ones_poly,
    falling_binomial_poly,
)


def length_profile(g: Graph, h: Graph) -> dict[int, int]:
    """Number of homomorphisms whose type has each given length."""
    profile: dict[int, int] = {}
    for lam, c in hom_type_counts(g, h).items():
        profile[len(lam)] = profile.get(len(lam), 0) + c
    return dict(sorted(profile.items()))


def _poly_from_length_profile(profile: dict[int, int], target_size: int) -> Polynomial:
    poly = Polynomial.zero()
    for length, count in profile.items():
        if length == 0:
            continue
        scale = Fraction(factorial(target_size) * count, comb(target_size, length))
        poly = poly + falling_binomial_poly(length) * scale
    return poly


def h_chromatic_polynomial(g: Graph, h: Graph) -> Polynomial:
    """The polynomial k -> X_G^H(1^k), computed along two routes that
    must agree exactly: the image-size-profile formula and evaluation of
    the monomial expansion."""
    counts = hom_type_counts(g, h)
    profile: dict[int, int] = {}
    for lam, c in counts.items():
        profile[len(lam)] = profile.get(len(lam), 0) + c
    formula = _poly_from_length_profile(profile, h.n)
    via_eval = evaluate_ones_poly(convert(hcsf(g, h), "m"))
    if formula != via_eval:
        raise HcsfError("inconsistent-coefficients", "polynomial routes disagree")
    return formula


def c4_tree_polynomial(a: int, b: int) -> Polynomial:
    """Closed-form 4-cycle chromatic polynomial of any tree with
    bipartition sizes (a, b)."""
    if a < 1 or b < 1:
        raise HcsfError("invalid-parameter", "bipartition sizes must be positive")
    k = Polynomial((0, 1))
    k1 = Polynomial((-1, 1))
    k2 = Polynomial((-2, 1))
    k3 = Polynomial((-3, 1))
    t2 = 16 * (k * k1)
    t3 = (2 ** (a + 2) + 2 ** (b + 2) - 16) * (k * k1 * k2)
    t4 = (2 ** (a + b + 1) - 2 ** (a + 2) - 2 ** (b + 2) + 8) * (k * k1 * k2 * k3)
    return t2 + t3 + t4


def c4_tree_cumulative_counts(a: int, b: int) -> list[int]:
    """Maps into the 4-cycle using at most L image vertices, L = 1..4."""
    return [0, 8, 2 ** (a + 2) + 2 ** (b + 2) - 8, 2 ** (a + b + 1)]


# ---------------------------------------------------------------------------
# independent sets and the looped-star target
# ---------------------------------------------------------------------------


def independent_set_profile(g: Graph) -> dict[int, int]:
    """i_j = number of independent vertex sets of size j, for j >= 1."""
    if g.has_loop():
        raise HcsfError("invalid-parameter", "independent sets need a loopless graph")
    profile: dict[int, int] = {}
    chosen: list[int] = []

    # depth-first over increasing vertex choices; each set counted once
    def walk(start: int):
        for u in range(start, g.n):
            if all(u not in g.adj[w] for w in chosen):
                chosen.append(u)
                profile[len(chosen)] = profile.get(len(chosen), 0) + 1
                walk(u + 1)
                chosen.pop()

    walk(0)
    return dict(sorted(profile.items()))


def sn1_length_profile(profile: dict[int, int], n: int) -> dict[int, int]:
    """Image-size profile of maps into the n-vertex looped star from an
    independent-set profile of a non-edgeless source."""
    full = dict(profile)
    full[0] = 1
    out: dict[int, int] = {}
    for length in range(1, n + 1):
        total = sum(
            cnt * stirling2(j, length - 1)
            for j, cnt in full.items()
            if j >= length - 1
        )
        value = comb(n - 1, length - 1) * factorial(length - 1) * total
        if value:
            out[length] = value
    return out


def sn1_polynomial_from_profile(profile: dict[int, int], n: int) -> Polynomial:
    """Looped-star chromatic polynomial assembled from independent-set
    counts of a non-edgeless source."""
    return _poly_from_length_profile(sn1_length_profile(profile, n), n)


def find_sn1_collision(n: int, max_vertices: int):
    """Bounded search for two non-edgeless graphs with equal looped-star
    chromatic polynomial but different independent-set profiles (hence
    different CSFs).  Returns (G, G') or None."""
    from .catalog import all_graphs

    target = star_with_center_loop(n)
    buckets: dict[tuple, list[tuple[Graph, tuple]]] = {}
    for size in range(2, max_vertices + 1):
        for g in all_graphs(size):
            if not g.edges:
                continue
            profile = independent_set_profile(g)
            poly = sn1_polynomial_from_profile(profile, n)
            key = poly.coeffs
            profile_key = tuple(sorted(profile.items()))
            for other, other_profile in buckets.get(key, ()):
                if other_profile != profile_key:
                    if _validate_collision(other, g, target):
                        return other, g
            buckets.setdefault(key, []).append((g, profile_key))
    return None


def _validate_collision(g1: Graph, g2: Graph, target: Graph) -> bool:
    if h_chromatic_polynomial(g1, target) != h_chromatic_polynomial(g2, target):
        return False
    x1, x2 = hcsf(g1, target), hcsf(g2, target)
    if x1.degree == x2.degree and x1 == x2:
        return False
    return True


# ---------------------------------------------------------------------------
# classic chromatic polynomial (independent oracle)
# ---------------------------------------------------------------------------


_chromatic_memo: dict[str, Polynomial] = {}


def chromatic_polynomial_classic(g: Graph) -> Polynomial:
    """Deletion-contraction chromatic polynomial; independent of the
    homomorphism engine."""
    if g.has_loop():
        return Polynomial.zero()
    key = canonical_form(g)
    cached = _chromatic_memo.get(key)
    if cached is not None:
        return cached
    if not g.edges:
        result = Polynomial([Fraction(0)] * g.n + [Fraction(1)])
    else:
        u, v = sorted(g.edges)[0]
        deleted = Graph.build(g.n, [e for e in g.edges if e != (u, v)])
        blocks = [[u, v]] + [[w] for w in range(g.n) if w not in (u, v)]
        owner = {}
        for i, b in enumerate(blocks):
            for w in b:
                owner[w] = i
        merged_edges = set()
        for a, b2 in deleted.edges:
            x, y = owner[a], owner[b2]
            if x != y:
                merged_edges.add((min(x, y), max(x, y)))
        contracted = Graph.build(len(blocks), merged_edges)
        result = chromatic_polynomial_classic(deleted) + chromatic_polynomial_classic(
            contracted
        ) * -1
    _chromatic_memo[key] = result
    return result
