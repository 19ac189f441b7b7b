"""Homogeneous symmetric functions in four bases, with exact rationals.

Bases:
  ``m``   monomial
  ``mt``  augmented monomial,  mt_lam = m_lam * prod_i r_i(lam)!
  ``mn``  vertex-count-scaled monomial (carries nvars = n), with
          mn_lam = prod_i r_i(lam)! * (n - len(lam))! * m_lam
  ``p``   power sum

Everything is exact (``fractions.Fraction`` over big ints).  Partitions
indexing a SymFunc all share one size, the degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import HcsfError
from .partitions import (
    Partition,
    as_partition,
    binomial,
    merge,
    multiplicities,
    multiplicity_factorial,
    partitions_of,
)

BASES = ("m", "mt", "mn", "p")

Coeffs = dict[Partition, Fraction]


class SymFunc:
    """Immutable-by-convention sparse symmetric function."""

    __slots__ = ("basis", "degree", "nvars", "coeffs")

    def __init__(self, basis: str, degree: int, coeffs: dict, nvars: int | None = None):
        if basis not in BASES:
            raise HcsfError("wrong-basis", f"unknown basis {basis!r}")
        if basis == "mn":
            if nvars is None or nvars < 1:
                raise HcsfError("invalid-parameter", "mn basis needs nvars >= 1")
        else:
            nvars = None
        clean: Coeffs = {}
        for lam, c in coeffs.items():
            lam = tuple(lam)
            frac = Fraction(c)
            if frac == 0:
                continue
            if sum(lam) != degree:
                raise HcsfError("degree-mismatch", f"{lam} in degree-{degree} function")
            if basis == "mn" and len(lam) > nvars:
                raise HcsfError("length-exceeds-n", f"len{lam} > n={nvars}")
            clean[lam] = frac
        self.basis = basis
        self.degree = degree
        self.nvars = nvars
        self.coeffs = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, basis: str, degree: int, nvars: int | None = None) -> "SymFunc":
        return cls(basis, degree, {}, nvars)

    @classmethod
    def single(cls, basis: str, lam, coeff=1, nvars: int | None = None) -> "SymFunc":
        lam = as_partition(lam)
        return cls(basis, sum(lam), {lam: Fraction(coeff)}, nvars)

    @classmethod
    def unit(cls, basis: str = "mt") -> "SymFunc":
        """Degree-0 multiplicative identity."""
        return cls(basis, 0, {(): Fraction(1)})

    # -- basics ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    def items_sorted(self) -> list[tuple[Partition, Fraction]]:
        order = {lam: i for i, lam in enumerate(partitions_of(self.degree))}
        return sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])

    def key(self) -> tuple:
        """Hashable canonical identity, usable as a dict key."""
        return (self.basis, self.degree, self.nvars, tuple(self.items_sorted()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymFunc)
            and self.basis == other.basis
            and self.degree == other.degree
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymFunc(self.basis, self.degree, out, self.nvars)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = Fraction(c)
        return SymFunc(
            self.basis, self.degree, {lam: v * c for lam, v in self.coeffs.items()}, self.nvars
        )

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis != other.basis or self.degree != other.degree or self.nvars != other.nvars:
            raise HcsfError(
                "wrong-basis",
                f"cannot combine {self.basis}/{self.degree} with {other.basis}/{other.degree}",
            )

    def __repr__(self):
        return f"SymFunc({to_text(self)!r})"


# ---------------------------------------------------------------------------
# basis conversion
# ---------------------------------------------------------------------------


def _mn_scale(lam: Partition, n: int) -> int:
    """mn_lam = _mn_scale(lam, n) * m_lam."""
    return multiplicity_factorial(lam) * factorial(n - len(lam))


@lru_cache(maxsize=None)
def _power_to_augmented(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """Expansion of p_lam in the mt basis, by iterated multiplication.

    p_r * mt_mu = sum_j mt_(mu with part j bumped by r) + mt_(mu | r).
    """
    if not lam:
        return (((), 1),)
    prev = _power_to_augmented(lam[1:])
    r = lam[0]
    out: dict[Partition, int] = {}
    for mu, c in prev:
        for j in range(len(mu)):
            bumped = as_partition(mu[:j] + (mu[j] + r,) + mu[j + 1 :])
            out[bumped] = out.get(bumped, 0) + c
        appended = merge(mu, (r,))
        out[appended] = out.get(appended, 0) + c
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _monomial_in_power(degree: int) -> dict[Partition, dict[Partition, Fraction]]:
    """m_lam -> its p expansion, for all lam of the given degree.

    p_mu expands over coarsenings of mu, so ordering partitions by
    (length, reverse-lex) makes the transition lower triangular and a
    forward substitution inverts it.
    """
    parts = sorted(partitions_of(degree), key=lambda lam: (len(lam), lam))
    p_in_m: dict[Partition, dict[Partition, Fraction]] = {}
    for mu in parts:
        row: dict[Partition, Fraction] = {}
        for lam, c in _power_to_augmented(mu):
            row[lam] = Fraction(c * multiplicity_factorial(lam))
        p_in_m[mu] = row
    result: dict[Partition, dict[Partition, Fraction]] = {}
    for i, lam in enumerate(parts):
        # solve sum_mu x_mu * p_mu = m_lam; the nonzero m-coordinates of
        # p_mu sit at or before mu, so substitute from the back
        acc: dict[Partition, Fraction] = {}
        sol: dict[Partition, Fraction] = {}
        for mu in reversed(parts[: i + 1]):
            target = Fraction(1) if mu == lam else Fraction(0)
            residual = target - acc.get(mu, Fraction(0))
            if residual == 0:
                continue
            x = residual / p_in_m[mu][mu]
            sol[mu] = x
            for lam2, c in p_in_m[mu].items():
                acc[lam2] = acc.get(lam2, Fraction(0)) + x * c
        result[lam] = sol
    return result


def _to_monomial(f: SymFunc) -> SymFunc:
    if f.basis == "m":
        return f
    out: Coeffs = {}
    if f.basis == "mt":
        for lam, c in f.coeffs.items():
            out[lam] = c * multiplicity_factorial(lam)
    elif f.basis == "mn":
        for lam, c in f.coeffs.items():
            out[lam] = c * _mn_scale(lam, f.nvars)
    elif f.basis == "p":
        for mu, c in f.coeffs.items():
            for lam, k in _power_to_augmented(mu):
                out[lam] = out.get(lam, Fraction(0)) + c * k * multiplicity_factorial(lam)
    return SymFunc("m", f.degree, out)


def convert(f: SymFunc, basis: str, nvars: int | None = None) -> SymFunc:
    """Exact change of basis; round trips are the identity."""
    if basis not in BASES:
        raise HcsfError("wrong-basis", f"unknown basis {basis!r}")
    if basis == f.basis and (basis != "mn" or nvars == f.nvars):
        return f
    m = _to_monomial(f)
    if basis == "m":
        return m
    if basis == "mt":
        return SymFunc(
            "mt",
            m.degree,
            {lam: c / multiplicity_factorial(lam) for lam, c in m.coeffs.items()},
        )
    if basis == "mn":
        if nvars is None:
            raise HcsfError("invalid-parameter", "mn basis needs nvars")
        for lam in m.coeffs:
            if len(lam) > nvars:
                raise HcsfError("length-exceeds-n", f"len{lam} > n={nvars}")
        return SymFunc(
            "mn",
            m.degree,
            {lam: c / _mn_scale(lam, nvars) for lam, c in m.coeffs.items()},
            nvars,
        )
    # p
    table = _monomial_in_power(m.degree)
    out: Coeffs = {}
    for lam, c in m.coeffs.items():
        for mu, k in table[lam].items():
            out[mu] = out.get(mu, Fraction(0)) + c * k
    return SymFunc("p", m.degree, out)


def augmented_form(f: SymFunc) -> SymFunc:
    """Coefficient-preserving retag mn -> mt ([mt_lam] := [mn_lam]).

    This is the modified function used by the disjoint-union recursion; it
    is not equal to ``convert(f, "mt")`` as a symmetric function.
    """
    if f.basis != "mn":
        raise HcsfError("wrong-basis", "augmented_form expects the mn basis")
    return SymFunc("mt", f.degree, dict(f.coeffs))


def omega(f: SymFunc) -> SymFunc:
    """Sign involution on the p basis: p_lam -> (-1)^(|lam|-len(lam)) p_lam."""
    if f.basis != "p":
        raise HcsfError("wrong-basis", "omega expects the p basis")
    out = {
        lam: c * ((-1) ** (sum(lam) - len(lam)))
        for lam, c in f.coeffs.items()
    }
    return SymFunc("p", f.degree, out)


def odot(f: SymFunc, g: SymFunc) -> SymFunc:
    """Bilinear product with mt_lam (.) mt_mu = mt_(lam | mu)."""
    if f.basis != "mt" or g.basis != "mt":
        raise HcsfError("wrong-basis", "odot expects both operands in the mt basis")
    out: Coeffs = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            key = merge(lam, mu)
            out[key] = out.get(key, Fraction(0)) + a * b
    return SymFunc("mt", f.degree + g.degree, out)


# ---------------------------------------------------------------------------
# evaluation at x_1 = ... = x_k = 1
# ---------------------------------------------------------------------------


class Polynomial:
    """Univariate polynomial with exact rational coefficients, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        return "Polynomial(" + ", ".join(str(c) for c in self.coeffs) + ")"


def falling_binomial_poly(length: int) -> Polynomial:
    """C(k, length) as an exact polynomial in k."""
    poly = Polynomial((1,))
    for i in range(length):
        poly = poly * Polynomial((-i, 1))
    return poly * Fraction(1, factorial(length))


def monomial_ones_count(lam: Partition, k: int) -> int:
    """m_lam(1^k) = C(k, len) * len! / prod r_i!."""
    ell = len(lam)
    return binomial(k, ell) * factorial(ell) // multiplicity_factorial(lam)


def evaluate_ones(f: SymFunc, k: int) -> Fraction:
    m = _to_monomial(f)
    total = Fraction(0)
    for lam, c in m.coeffs.items():
        total += c * monomial_ones_count(lam, k)
    return total


def evaluate_ones_poly(f: SymFunc) -> Polynomial:
    m = _to_monomial(f)
    poly = Polynomial.zero()
    for lam, c in m.coeffs.items():
        ell = len(lam)
        scale = c * Fraction(factorial(ell), multiplicity_factorial(lam))
        poly = poly + falling_binomial_poly(ell) * scale
    return poly


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------


def _basis_token(f: SymFunc) -> str:
    return f"m^{f.nvars}" if f.basis == "mn" else f.basis


def _parse_basis_token(token: str) -> tuple[str, int | None]:
    token = token.strip()
    if token.startswith("m^"):
        return "mn", int(token[2:])
    if token in ("m", "mt", "p"):
        return token, None
    raise HcsfError("parse-error", f"unknown basis token {token!r}")


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(f: SymFunc) -> str:
    """One-line form ``basis; coeff*[parts]; ...`` in canonical term order."""
    head = _basis_token(f)
    if f.is_zero():
        return f"{head}; deg:{f.degree}"
    terms = [
        f"{_fmt_frac(c)}*[{','.join(map(str, lam))}]" for lam, c in f.items_sorted()
    ]
    return "; ".join([head] + terms)


def from_text(s: str) -> SymFunc:
    pieces = [p.strip() for p in s.split(";") if p.strip()]
    if not pieces:
        raise HcsfError("parse-error", "empty symmetric function text")
    basis, nvars = _parse_basis_token(pieces[0])
    degree = 0
    coeffs: Coeffs = {}
    for term in pieces[1:]:
        if term.startswith("deg:"):
            degree = int(term[4:])
            continue
        coeff_s, _, part_s = term.partition("*")
        part_s = part_s.strip()
        if not (part_s.startswith("[") and part_s.endswith("]")):
            raise HcsfError("parse-error", f"bad term {term!r}")
        inner = part_s[1:-1].strip()
        lam = tuple(int(x) for x in inner.split(",")) if inner else ()
        coeffs[lam] = Fraction(coeff_s.strip())
        degree = sum(lam)
    return SymFunc(basis, degree, coeffs, nvars)


def to_lines(f: SymFunc) -> str:
    """Machine-readable lines ``basis lam numerator denominator``."""
    head = _basis_token(f)
    lines = [f"# {head} deg {f.degree}"]
    for lam, c in f.items_sorted():
        lam_s = ",".join(map(str, lam)) if lam else "-"
        lines.append(f"{head} {lam_s} {c.numerator} {c.denominator}")
    return "\n".join(lines)


def from_lines(text: str) -> SymFunc:
    basis = None
    nvars = None
    degree = 0
    coeffs: Coeffs = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            basis, nvars = _parse_basis_token(fields[0])
            degree = int(fields[2])
            continue
        token, lam_s, num, den = line.split()
        basis, nvars = _parse_basis_token(token)
        lam = () if lam_s == "-" else tuple(int(x) for x in lam_s.split(","))
        coeffs[lam] = Fraction(int(num), int(den))
        degree = sum(lam)
    if basis is None:
        raise HcsfError("parse-error", "no symmetric function lines found")
    return SymFunc(basis, degree, coeffs, nvars)
