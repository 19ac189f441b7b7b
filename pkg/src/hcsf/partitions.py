"""Integer partitions, set partitions and small combinatorial numbers.

Partitions are tuples of weakly decreasing positive ints; the empty tuple
is the unique partition of 0.  The canonical order within a fixed size is
reverse-lexicographic (largest first part first), as produced by
:func:`partitions_of`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Iterator

from .errors import HcsfError

Partition = tuple[int, ...]


def is_partition(parts: Iterable[int]) -> bool:
    t = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in t) and all(
        t[i] >= t[i + 1] for i in range(len(t) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Sort into weakly decreasing order, rejecting non-positive parts."""
    t = tuple(sorted(parts, reverse=True))
    if t and t[-1] < 1:
        raise HcsfError("invalid-partition", f"non-positive part in {t}")
    return t


@lru_cache(maxsize=None)
def partitions_of(n: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, largest part first."""
    if n < 0:
        raise HcsfError("invalid-parameter", "n must be >= 0")

    def gen(rem: int, cap: int, room: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first, room - 1):
                yield (first,) + rest

    room = n if max_length is None else max_length
    return tuple(gen(n, n, room))


def num_partitions(n: int) -> int:
    return len(partitions_of(n))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part value i -> r_i(lam), the number of parts equal to i."""
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def multiplicity_factorial(lam: Partition) -> int:
    """prod_i r_i(lam)!."""
    out = 1
    for r in multiplicities(lam).values():
        out *= factorial(r)
    return out


def conjugate(lam: Partition) -> Partition:
    """Transpose partition: i-th part counts parts of lam that are >= i."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def even_odd_counts(lam: Partition) -> tuple[int, int]:
    e = sum(1 for p in lam if p % 2 == 0)
    return e, len(lam) - e


def rev(lam: Partition) -> tuple[int, ...]:
    """Parts in increasing order."""
    return tuple(reversed(lam))


def merge(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of two partitions."""
    return tuple(sorted(lam + mu, reverse=True))


@lru_cache(maxsize=None)
def stirling2(j: int, t: int) -> int:
    """Set partitions of a j-set into t nonempty blocks."""
    if j < 0 or t < 0:
        raise HcsfError("invalid-parameter", "stirling2 needs j,t >= 0")
    if j == t == 0:
        return 1
    if j == 0 or t == 0:
        return 0
    return t * stirling2(j - 1, t) + stirling2(j - 1, t - 1)


def set_partitions_of_type(ground: Iterable, lam: Partition) -> Iterator[tuple[frozenset, ...]]:
    """Yield each set partition of ``ground`` with block sizes lam exactly once.

    Count is |lam|! / (prod lam_i! * prod r_i(lam)!).
    """
    elems = sorted(ground)
    if len(elems) != sum(lam):
        raise HcsfError("size-mismatch", f"|ground|={len(elems)} but |lam|={sum(lam)}")

    def rec(remaining: tuple, sizes: tuple[int, ...]) -> Iterator[tuple[frozenset, ...]]:
        if not remaining:
            yield ()
            return
        anchor, rest = remaining[0], remaining[1:]
        seen: set[int] = set()
        for idx, s in enumerate(sizes):
            if s in seen:
                continue
            seen.add(s)
            next_sizes = sizes[:idx] + sizes[idx + 1 :]
            for companions in combinations(rest, s - 1):
                block = frozenset((anchor,) + companions)
                left = tuple(x for x in rest if x not in block)
                for tail in rec(left, next_sizes):
                    yield (block,) + tail

    return rec(tuple(elems), lam)


def set_partition_count_of_type(lam: Partition) -> int:
    n = sum(lam)
    out = factorial(n) // multiplicity_factorial(lam)
    for p in lam:
        out //= factorial(p)
    return out


def compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer tuples of given length summing to total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def binomial(n: int, k: int) -> int:
    """C(n, k), zero for k outside 0..n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)
