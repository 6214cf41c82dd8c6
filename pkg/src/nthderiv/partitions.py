"""Restricted set partitions and their exact counts.

Two families of partitions of a ground set {1, ..., m} index the
coefficients of closed-form higher derivatives of parametric and
implicit functions.  In the parametric family only the block containing
the element 1 may be a singleton; in the implicit family the ground set
splits into "small" and "large" elements and no large element may sit
in a singleton block.  Both families are enumerated in a canonical
deterministic order and counted exactly without enumeration.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "SetPartition",
    "RoleSplit",
    "enumerate_parametric_partitions",
    "enumerate_implicit_partitions",
    "count_parametric_partitions",
    "count_implicit_partitions",
    "count_restricted_partitions",
    "double_factorial",
]


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., m} into nonempty disjoint blocks.

    Blocks are stored canonically: elements ascending within each block,
    blocks ordered by their minimum element.  Any iterable of iterables
    is accepted and canonicalized.

    >>> print(SetPartition([[3, 4], [2, 1]]))
    {1,2}{3,4}
    """

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        object.__setattr__(self, "blocks", blocks)
        elements = sorted(e for b in blocks for e in b)
        if elements != list(range(1, len(elements) + 1)):
            raise ValueError("blocks must partition {1, ..., m}")

    @property
    def ground_size(self):
        return sum(len(b) for b in self.blocks)

    @property
    def num_blocks(self):
        return len(self.blocks)

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def block_containing(self, x):
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def __str__(self):
        return "".join("{%s}" % ",".join(map(str, b)) for b in self.blocks)


@dataclass(frozen=True)
class RoleSplit:
    """Marks elements 1..small_count as small; all higher labels are large."""

    small_count: int

    def __post_init__(self):
        if self.small_count < 0:
            raise ValueError("small_count must be >= 0")

    def is_small(self, x):
        return x <= self.small_count


def _restricted_partitions(m, num_blocks, singleton_ok):
    # Generate partitions of {1..m} into num_blocks blocks where {x} is an
    # admissible block only if singleton_ok(x).  Blocks are grown in order
    # of first appearance, so the output order is the lexicographic order
    # of the restricted growth strings.  Branches that cannot reach the
    # required block count, or cannot rescue an inadmissible singleton,
    # are pruned.
    if num_blocks <= 0 or num_blocks > m:
        return
    blocks = []

    def stuck_singletons():
        return sum(1 for b in blocks if len(b) == 1 and not singleton_ok(b[0]))

    def extend(e):
        missing = num_blocks - len(blocks)
        if missing + stuck_singletons() > m - e + 1:
            return
        if e > m:
            yield SetPartition(tuple(map(tuple, blocks)))
            return
        for b in blocks:
            b.append(e)
            yield from extend(e + 1)
            b.pop()
        if missing:
            blocks.append([e])
            yield from extend(e + 1)
            blocks.pop()

    yield from extend(1)


def enumerate_parametric_partitions(n, k):
    """Partitions of {1, ..., k+n} into k+1 blocks in which only the block
    containing 1 may be a singleton.

    The sequence is empty exactly when k < 0 or k > n-1; out-of-range k is
    not an error, so sums over k may be left unrestricted.

    >>> for p in enumerate_parametric_partitions(3, 1):
    ...     print(p)
    {1,2}{3,4}
    {1,3}{2,4}
    {1,4}{2,3}
    {1}{2,3,4}
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0 or k > n - 1:
        return []
    return list(_restricted_partitions(n + k, k + 1, lambda x: x == 1))


def enumerate_implicit_partitions(n, k):
    """Partitions of {1, ..., n+k-1} into k blocks in which no large element
    (those above n) is a singleton.

    The sequence is empty exactly when k < 1 or k > 2n-1: beyond that the
    k-1 large elements cannot all find blockmates.

    >>> for p in enumerate_implicit_partitions(2, 3):
    ...     print(p)
    {1}{2}{3,4}
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1 or k > 2 * n - 1:
        return []
    roles = RoleSplit(n)
    return list(_restricted_partitions(n + k - 1, k, roles.is_small))


@lru_cache(maxsize=None)
def _count_no_singletons(m, j):
    # Partitions of m labeled elements into j blocks, every block of size
    # >= 2 (associated Stirling numbers of the second kind).  The new
    # element m either joins one of the j blocks of a smaller partition or
    # pairs up with one of the other m-1 elements to found a new block.
    if j < 0 or m < 2 * j:
        return 0
    if j == 0:
        return 1 if m == 0 else 0
    return j * _count_no_singletons(m - 1, j) + (m - 1) * _count_no_singletons(m - 2, j - 1)


def count_restricted_partitions(free, bound, num_blocks):
    """Count partitions of free + bound labeled elements into num_blocks
    blocks where only the free elements may form singleton blocks.

    Sums over the number i of singleton blocks: choose which free elements
    they hold, then partition the rest with no singletons at all.  With
    bound = 0 every element is free and the result is the Stirling number
    of the second kind S(free, num_blocks).

    >>> count_restricted_partitions(6, 0, 3)
    90
    """
    return sum(
        comb(free, i) * _count_no_singletons(free - i + bound, num_blocks - i)
        for i in range(min(free, num_blocks) + 1)
    )


def count_parametric_partitions(n, k):
    """Number of partitions returned by enumerate_parametric_partitions(n, k),
    computed by dynamic programming instead of enumeration.

    >>> count_parametric_partitions(4, 2)
    25
    >>> count_parametric_partitions(6, 3)
    1750
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0 or k > n - 1:
        return 0
    return count_restricted_partitions(1, n + k - 1, k + 1)


def count_implicit_partitions(n, k):
    """Number of partitions returned by enumerate_implicit_partitions(n, k).

    >>> count_implicit_partitions(3, 4)
    10
    >>> count_implicit_partitions(4, 3)
    61
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1 or k > 2 * n - 1:
        return 0
    return count_restricted_partitions(n, k - 1, k)


def double_factorial(m):
    """m(m-2)(m-4)..., the empty product 1 when m <= 1 (so (-1)!! = 1).

    Odd double factorials count perfect matchings: (2j-1)!! is the number
    of ways to split 2j elements into j doubletons.

    >>> [double_factorial(m) for m in (-1, 0, 1, 3, 5, 7)]
    [1, 1, 1, 3, 15, 105]
    """
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out
