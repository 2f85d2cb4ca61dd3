"""Six independent computation routes for the alternating factorial-Lah sum.

The quantity under test is

    S(k, n) = sum over l in 1..k of (-1)^l (n+l)! L(k, l),   k >= 2, n >= 0,

which collapses to 0 for 0 <= n <= k-2 and to (-1)^k n! (n+1)! / (n-k+1)!
for n >= k-1. ``rhs_reference`` evaluates that closed form, ``lhs_direct``
evaluates the literal sum, and routes r1..r6 reach the same value through
unrelated machinery: a double-binomial convolution identity, the factorial
generating function of the Lah numbers, power-series coefficient
extraction, binomial inversion, a terminating Gauss hypergeometric sum,
and a symbolic differentiation chain over exponential moments. Exact
agreement across all of them is the point of the package.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import (
    ConsistencyError,
    as_integer,
    binomial_general,
    factorial,
    falling,
    reciprocal_factorial_weight,
    rising,
)
from .numbers import lah
from .series import series_binomial_power, series_mul
from .symbolic import route6_coefficient_chain


def _sgn(i: int) -> int:
    return -1 if i % 2 else 1


@dataclass(frozen=True)
class IdentityInstance:
    """A single (k, n) parameter pair; the sum is only claimed for k >= 2."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("identity instances need k >= 2")
        if self.n < 0:
            raise ValueError("identity instances need n >= 0")


@dataclass(frozen=True)
class VerificationReport:
    """Reference value and per-route values for one instance."""

    instance: IdentityInstance
    reference: int
    route_values: dict[str, int]
    all_match: bool


def rhs_reference(inst: IdentityInstance) -> int:
    """Closed-form value: 0 below the diagonal band, otherwise the signed
    ratio (-1)^k n! (n+1)! / (n-k+1)!."""
    k, n = inst.k, inst.n
    if n <= k - 2:
        return 0
    return _sgn(k) * (factorial(n) * factorial(n + 1) // factorial(n - k + 1))


def lhs_direct(inst: IdentityInstance) -> int:
    """The literal alternating sum; the independent oracle for every route."""
    k, n = inst.k, inst.n
    return sum(_sgn(l) * factorial(n + l) * lah(k, l) for l in range(1, k + 1))


def gkp_identity(l: int, m: int, s: int, n: int) -> tuple[int, int]:
    """Both sides of the alternating double-binomial identity

        sum over i of C(l, m+i) C(s+i, n) (-1)^i = (-1)^(l+m) C(s-m, n-l)

    for l >= 0 and arbitrary integers m, s, n (identity (5.24) in
    Graham/Knuth/Patashnik, Concrete Mathematics). The sum has finite
    support 0 <= m+i <= l."""
    if l < 0:
        raise ValueError("l must be non-negative")
    lhs = sum(
        _sgn(i) * binomial_general(l, m + i) * binomial_general(s + i, n)
        for i in range(-m, l - m + 1)
    )
    rhs = _sgn(l + m) * binomial_general(s - m, n - l)
    return lhs, rhs


def chu_vandermonde_binomial(r: int, m: int, s: int, n: int) -> tuple[int, int]:
    """Both sides of the Chu-Vandermonde convolution
    sum over j of C(r, m+j) C(s, n-j) = C(r+s, m+n), for r, s >= 0."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    lhs = sum(
        binomial_general(r, m + j) * binomial_general(s, n - j)
        for j in range(-m, r - m + 1)
    )
    rhs = binomial_general(r + s, m + n)
    return lhs, rhs


def binomial_inversion(values: Sequence[int]) -> list[int]:
    """The self-inverse binomial transform
    T(h)(k) = sum over l in 0..k of C(k, l) (-1)^l h(l)."""
    seq = list(values)
    return [
        sum(_sgn(l) * binomial_general(j, l) * seq[l] for l in range(j + 1))
        for j in range(len(seq))
    ]


def hypergeom_2f1_terminating(a: int, b: int, c: int) -> Fraction:
    """Terminating 2F1(a, b; c; 1) for a <= 0, summed term by term from
    rising factorials. The non-positive upper parameter makes the series a
    finite sum, so the value is an exact rational."""
    if a > 0:
        raise ValueError("upper parameter must be a non-positive integer")
    if c < 1:
        raise ValueError("lower parameter must be a positive integer")
    total = Fraction(0)
    for l in range(-a + 1):
        total += Fraction(rising(a, l) * rising(b, l), rising(c, l) * factorial(l))
    return total


def chu_vandermonde_closed(a: int, b: int, c: int) -> Fraction:
    """Closed form of the terminating 2F1 at unit argument:
    2F1(-N, b; c; 1) = (c-b)_N / (c)_N with N = -a."""
    if a > 0:
        raise ValueError("upper parameter must be a non-positive integer")
    if c < 1:
        raise ValueError("lower parameter must be a positive integer")
    return Fraction(rising(c - b, -a), rising(c, -a))


def route1_gkp(inst: IdentityInstance) -> int:
    """Route 1: divide the sum by k! n! to get an alternating binomial sum,
    close it with the double-binomial identity at (l, m, s) = (k-1, -1, n),
    and scale back."""
    k, n = inst.k, inst.n
    reduced = sum(
        _sgn(l) * binomial_general(n + l, n) * binomial_general(k - 1, l - 1)
        for l in range(1, k + 1)
    )
    lhs, rhs = gkp_identity(k - 1, -1, n, n)
    if not (reduced == lhs == rhs == _sgn(k) * binomial_general(n + 1, k)):
        raise ConsistencyError(f"binomial-identity route broke at k={k}, n={n}")
    return factorial(k) * factorial(n) * reduced


def route2_factorial_gf(inst: IdentityInstance) -> int:
    """Route 2: instantiate the factorial generating function of row k,

        sum over l of L(k, l) <t>_l = (-1)^k <-t>_k,

    at t = -(n+1), where n! <-(n+1)>_l = (-1)^l (n+l)! turns the row sum
    into the target and the right side collapses to a falling factorial
    that vanishes by itself whenever n <= k-2."""
    k, n = inst.k, inst.n
    n_fact = factorial(n)
    row_sum = n_fact * sum(lah(k, l) * falling(-(n + 1), l) for l in range(k + 1))
    closed = _sgn(k) * n_fact * falling(n + 1, k)
    if row_sum != closed:
        raise ConsistencyError(f"factorial generating function broke at k={k}, n={n}")
    return closed


def route3_convolution(inst: IdentityInstance) -> int:
    """Route 3: the coefficient of x^k in (1+x)^-(n+1) * (1+x)^(k-1) must
    equal the coefficient of x^k in (1+x)^-(n-k+2); scaling it by k! n!
    gives the sum."""
    k, n = inst.k, inst.n
    convolved = series_mul(
        series_binomial_power(-(n + 1), k), series_binomial_power(k - 1, k)
    )
    direct = series_binomial_power(-(n - k + 2), k)
    if convolved.coeff(k) != direct.coeff(k):
        raise ConsistencyError(f"convolution route broke at k={k}, n={n}")
    return as_integer(convolved.coeff(k)) * factorial(k) * factorial(n)


def route4_inversion(inst: IdentityInstance) -> int:
    """Route 4: with a(l) = (n+l)!/(l-1)! and
    b(l) = (-1)^l n! (n+1)! / ((n-l+1)! (l-1)!), check by direct summation
    that the binomial transform sends b to a; the transform is an
    involution, so it also sends a to b, and b(k) (k-1)! is the sum. The
    1/(-1)! weights are taken as 0, which confines both sequences to their
    natural support."""
    k, n = inst.k, inst.n
    n_fact, n1_fact = factorial(n), factorial(n + 1)
    a_seq = [
        as_integer(factorial(n + l) * reciprocal_factorial_weight(l - 1))
        for l in range(k + 1)
    ]
    b_seq = [
        as_integer(
            _sgn(l)
            * n_fact
            * n1_fact
            * reciprocal_factorial_weight(n - l + 1)
            * reciprocal_factorial_weight(l - 1)
        )
        for l in range(k + 1)
    ]
    if binomial_inversion(b_seq) != a_seq:
        raise ConsistencyError(f"inversion dual identity broke at k={k}, n={n}")
    return b_seq[k] * factorial(k - 1)


def route5_hypergeom(inst: IdentityInstance) -> int:
    """Route 5: the sum equals -k! (n+1)! 2F1(1-k, n+2; 2; 1); the
    terminating series and its Chu-Vandermonde closed form are evaluated
    independently and must agree, and the scaled value must be integral."""
    k, n = inst.k, inst.n
    closed = chu_vandermonde_closed(1 - k, n + 2, 2)
    summed = hypergeom_2f1_terminating(1 - k, n + 2, 2)
    if closed != summed:
        raise ConsistencyError(f"hypergeometric route broke at k={k}, n={n}")
    return as_integer(-factorial(k) * factorial(n + 1) * closed)


def route6_stirling(inst: IdentityInstance) -> int:
    """Route 6: run the symbolic moment-differentiation chain at
    m = max(k, n+1), the smallest order whose coefficient range covers
    i = n, and read the bracketed sum off the i = n slot. The bracket is
    the target sum up to the sign (-1)^k from reversing the summation
    index."""
    k, n = inst.k, inst.n
    m = max(k, n + 1)
    brackets = route6_coefficient_chain(m, k)
    return _sgn(k) * brackets[n]


ROUTE_FUNCTIONS: dict[str, Callable[[IdentityInstance], int]] = {
    "r1": route1_gkp,
    "r2": route2_factorial_gf,
    "r3": route3_convolution,
    "r4": route4_inversion,
    "r5": route5_hypergeom,
    "r6": route6_stirling,
}

ROUTE_NAMES: tuple[str, ...] = tuple(sorted(ROUTE_FUNCTIONS))


def verify_instance(inst: IdentityInstance, routes: Iterable[str] = ROUTE_NAMES) -> VerificationReport:
    """Evaluate the reference, the direct sum, and the requested routes at
    one (k, n); all_match is True only if every value agrees exactly."""
    names = sorted(set(routes))
    for name in names:
        if name not in ROUTE_FUNCTIONS:
            raise ValueError(f"unknown route {name!r}")
    reference = rhs_reference(inst)
    values: dict[str, int] = {"lhs_direct": lhs_direct(inst)}
    for name in names:
        values[name] = ROUTE_FUNCTIONS[name](inst)
    all_match = all(v == reference for v in values.values())
    return VerificationReport(inst, reference, values, all_match)


def _verify_job(args: tuple[IdentityInstance, tuple[str, ...]]) -> VerificationReport:
    inst, routes = args
    return verify_instance(inst, routes)


def verify_grid(
    k_values: Iterable[int],
    n_values: Iterable[int],
    routes: Iterable[str] = ROUTE_NAMES,
    jobs: int = 1,
) -> list[VerificationReport]:
    """One report per (k, n), in (k, n)-lexicographic order.

    With jobs > 1 the instances are evaluated in a process pool; the
    report order (and therefore any serialized output) is identical
    regardless of the job count. Mismatches are reported, not raised.
    """
    ks = sorted(set(k_values))
    ns = sorted(set(n_values))
    route_names = tuple(sorted(set(routes)))
    instances = [IdentityInstance(k, n) for k in ks for n in ns]
    if jobs <= 1 or len(instances) < 2:
        return [verify_instance(inst, route_names) for inst in instances]
    chunk = max(1, len(instances) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(
            pool.map(_verify_job, ((inst, route_names) for inst in instances), chunksize=chunk)
        )
