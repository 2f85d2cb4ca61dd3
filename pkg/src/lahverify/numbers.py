"""Lah numbers and signed Stirling numbers of the first kind.

Each family is computable by several independent methods (closed form,
triangular recurrence, polynomial expansion, series extraction, brute-force
enumeration) so that the methods can be played against each other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .exact import as_integer, binomial_general, factorial, reciprocal_factorial_weight
from .series import rising_factorial_poly, series_from_coeffs, series_log1p, series_mul, series_scale

BRUTEFORCE_MAX_N = 9


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular integer table indexed by (n, k), 0 <= k <= n <= max_n."""

    max_n: int
    entries: dict[tuple[int, int], int]

    def value(self, n: int, k: int) -> int:
        """Entry (n, k); positions with k < 0 or k > n read as 0."""
        if not 0 <= n <= self.max_n:
            raise ValueError(f"row {n} is outside the table (max_n={self.max_n})")
        if k < 0 or k > n:
            return 0
        return self.entries[(n, k)]

    def row(self, n: int) -> list[int]:
        return [self.value(n, k) for k in range(n + 1)]


def lah(n: int, k: int) -> int:
    """Lah number L(n, k): the number of ways to partition an n-element set
    into k nonempty linearly ordered blocks.

    >>> lah(3, 2)
    6
    >>> lah(4, 1)
    24
    """
    if n < 0 or k < 0:
        raise ValueError("Lah indices must be non-negative")
    if n == 0 and k == 0:
        return 1
    if k < 1 or k > n:
        return 0
    return binomial_general(n - 1, k - 1) * (factorial(n) // factorial(k))


def _set_partitions(items: list[int], k: int) -> Iterator[list[list[int]]]:
    # Yields each partition of items into exactly k nonempty blocks once:
    # the first item either opens its own block or joins one block of a
    # partition of the rest.
    n = len(items)
    if k < 0 or k > n:
        return
    if n == 0:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest, k - 1):
        yield [[head]] + part
    for part in _set_partitions(rest, k):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]


def ordered_block_partitions(n: int, k: int | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Enumerate partitions of {1, ..., n} into nonempty ordered blocks.

    Each partition appears exactly once as a tuple of blocks, where every
    block is a tuple giving the order of its elements and the outer tuple
    carries no meaning (the family of blocks is unordered). With ``k`` set,
    only partitions into exactly k blocks are produced.
    """
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    items = list(range(1, n + 1))
    block_counts = range(1, n + 1) if k is None else [k]
    for kk in block_counts:
        for blocks in _set_partitions(items, kk):
            for arrangement in product(*(permutations(b) for b in blocks)):
                yield arrangement


def lah_bruteforce(n: int, k: int) -> int:
    """Count partitions into k nonempty ordered blocks by full enumeration.

    Deliberately formula-free so it can serve as an independent oracle;
    bounded to n <= 9 to keep single calls fast.
    """
    if not 1 <= n <= BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force supports 1 <= n <= {BRUTEFORCE_MAX_N}")
    if k < 1:
        raise ValueError("brute force needs k >= 1")
    return sum(1 for _ in ordered_block_partitions(n, k))


def lah_triangle(max_n: int) -> Triangle:
    """Lah table built by the additive recurrence
    L(n+1, k) = L(n, k-1) + (n+k) L(n, k), independent of the closed form."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    entries = {(0, 0): 1}
    for n in range(max_n):
        for k in range(n + 2):
            entries[(n + 1, k)] = entries.get((n, k - 1), 0) + (n + k) * entries.get((n, k), 0)
    return Triangle(max_n, entries)


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k), by the recurrence
    s(n+1, k) = s(n, k-1) - n s(n, k) with s(0, 0) = 1.

    >>> stirling1(3, 2)
    -3
    """
    if n < 0 or k < 0:
        raise ValueError("Stirling indices must be non-negative")
    return _stirling1_rec(n, k)


@lru_cache(maxsize=None)
def _stirling1_rec(n: int, k: int) -> int:
    if k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return _stirling1_rec(n - 1, k - 1) - (n - 1) * _stirling1_rec(n - 1, k)


def stirling1_triangle(max_n: int) -> Triangle:
    """Table of s(n, k) for 0 <= k <= n <= max_n, built row by row."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    entries = {(0, 0): 1}
    for n in range(max_n):
        for k in range(n + 2):
            entries[(n + 1, k)] = entries.get((n, k - 1), 0) - n * entries.get((n, k), 0)
    return Triangle(max_n, entries)


def stirling1_from_rising_poly(n: int) -> list[int]:
    """Recover s(n, 0..n) from the monomial expansion of x(x+1)...(x+n-1),
    whose coefficient at x^k is (-1)^(n-k) s(n, k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = rising_factorial_poly(n)
    coeffs = list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs))
    return [(-1 if (n - k) % 2 else 1) * as_integer(c) for k, c in enumerate(coeffs)]


def stirling1_from_log_series(max_n: int, k: int) -> list[Fraction]:
    """Coefficients of t^0 .. t^max_n in log(1+t)^k / k!.

    The coefficient of t^n equals s(n, k) / n!, which gives a third,
    series-based computation path for the Stirling numbers.
    """
    if not 0 <= k <= max_n:
        raise ValueError("need 0 <= k <= max_n")
    acc = series_from_coeffs([1], max_n)
    log_series = series_log1p(max_n)
    for _ in range(k):
        acc = series_mul(acc, log_series)
    acc = series_scale(acc, reciprocal_factorial_weight(k))
    return list(acc.coeffs)
