"""Unbounded exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision); rationals are
``fractions.Fraction``, which normalizes eagerly to lowest terms with a
positive denominator. Every function here is pure and exact: no rounding,
no overflow, ever.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Scalar = int | Fraction


class ConsistencyError(ArithmeticError):
    """Two computations that must agree exactly produced different values."""


@lru_cache(maxsize=None)
def factorial(m: int) -> int:
    """Product 1*2*...*m as a plain iterative product; factorial(0) == 1."""
    if m < 0:
        raise ValueError("factorial is undefined for negative integers")
    out = 1
    for j in range(2, m + 1):
        out *= j
    return out


def binomial_general(r: int, j: int) -> int:
    """Binomial coefficient C(r, j) for arbitrary integer upper argument.

    Follows the convention C(r, j) = 0 for j < 0, which makes alternating
    sums over an unrestricted index terminate on their own. For negative r
    the value alternates in sign, e.g.

    >>> binomial_general(-1, 3)
    -1
    >>> binomial_general(-3, 2)
    6
    """
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= r - i
    # a product of j consecutive integers is divisible by j!, so this is exact
    return num // factorial(j)


def rising(x: Scalar, n: int) -> Scalar:
    """Rising factorial x(x+1)...(x+n-1); 1 when n == 0."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    out: Scalar = 1
    for i in range(n):
        out *= x + i
    return out


def falling(x: Scalar, n: int) -> Scalar:
    """Falling factorial x(x-1)...(x-n+1); 1 when n == 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    out: Scalar = 1
    for i in range(n):
        out *= x - i
    return out


def reciprocal_factorial_weight(m: int) -> Fraction:
    """1/m! for m >= 0, and 0 for negative m.

    The zero value for negative arguments is the convention that lets sums
    with a 1/(l-1)! weight run from l = 0 without a special case.
    """
    if m < 0:
        return Fraction(0)
    return Fraction(1, factorial(m))


def as_integer(value: Scalar) -> int:
    """Integral value of an exact scalar; a genuine fraction is an error."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ConsistencyError(f"expected an integer, got {value}")
    return value.numerator
