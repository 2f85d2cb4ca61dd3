from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lahverify.exact import ConsistencyError, factorial, falling
from lahverify.numbers import lah
from lahverify.series import falling_factorial_poly, poly_add, poly_scale, rising_factorial_poly, POLY_ZERO
from lahverify.verify import (
    ROUTE_FUNCTIONS,
    ROUTE_NAMES,
    IdentityInstance,
    binomial_inversion,
    chu_vandermonde_binomial,
    chu_vandermonde_closed,
    gkp_identity,
    hypergeom_2f1_terminating,
    lhs_direct,
    rhs_reference,
    route1_gkp,
    route2_factorial_gf,
    route3_convolution,
    route4_inversion,
    route5_hypergeom,
    route6_stirling,
    verify_grid,
    verify_instance,
)

# computed by the literal alternating sum, which is the oracle for every route
SPOT_VALUES = {
    (2, 0): 0,
    (2, 1): 2,
    (4, 1): 0,
    (3, 5): -14400,
    (5, 4): -2880,
}


class TestInstance:
    def test_hypothesis_bounds_enforced(self):
        with pytest.raises(ValueError):
            IdentityInstance(1, 0)
        with pytest.raises(ValueError):
            IdentityInstance(3, -1)

    def test_valid_instance(self):
        inst = IdentityInstance(2, 0)
        assert (inst.k, inst.n) == (2, 0)


class TestReferenceSides:
    def test_rhs_examples(self):
        assert rhs_reference(IdentityInstance(2, 0)) == 0
        assert rhs_reference(IdentityInstance(2, 1)) == 2
        assert rhs_reference(IdentityInstance(5, 4)) == -2880

    def test_lhs_examples(self):
        assert lhs_direct(IdentityInstance(2, 1)) == 2
        assert lhs_direct(IdentityInstance(4, 1)) == 0
        assert lhs_direct(IdentityInstance(3, 5)) == -14400

    def test_sides_agree_on_block(self):
        for k in range(2, 10):
            for n in range(0, 16):
                inst = IdentityInstance(k, n)
                assert lhs_direct(inst) == rhs_reference(inst)

    def test_zero_band(self):
        for k in range(2, 9):
            for n in range(0, k - 1):
                assert rhs_reference(IdentityInstance(k, n)) == 0


class TestGkpIdentity:
    def test_examples(self):
        assert gkp_identity(0, 2, 5, 3) == (1, 1)
        assert gkp_identity(1, 0, 2, 1) == (-1, -1)

    def test_substitution_reproduces_reduced_identity(self):
        # (l, m, s) = (k-1, -1, n) is the specialization route 1 relies on
        for k, n in ((2, 1), (3, 2), (5, 3)):
            lhs, rhs = gkp_identity(k - 1, -1, n, n)
            assert lhs == rhs
            reduced = sum(
                (-1) ** l * _pascal(n + l, n) * _pascal(k - 1, l - 1)
                for l in range(1, k + 1)
            )
            assert reduced == lhs

    def test_negative_l_rejected(self):
        with pytest.raises(ValueError):
            gkp_identity(-1, 0, 0, 0)

    def test_exhaustive_small(self):
        for l in range(5):
            for m in range(-4, 5):
                for s in range(-4, 5):
                    for n in range(-4, 5):
                        lhs, rhs = gkp_identity(l, m, s, n)
                        assert lhs == rhs


def _pascal(r: int, j: int) -> int:
    # local additive oracle for non-negative upper index
    if j < 0 or j > r:
        return 0
    if j == 0 or j == r:
        return 1
    return _pascal(r - 1, j - 1) + _pascal(r - 1, j)


class TestChuVandermonde:
    def test_binomial_form_spot(self):
        lhs, rhs = chu_vandermonde_binomial(4, 1, 3, 2)
        assert lhs == rhs

    def test_binomial_form_block(self):
        for r in range(7):
            for s in range(7):
                for m in range(-3, 6):
                    for n in range(-3, 6):
                        lhs, rhs = chu_vandermonde_binomial(r, m, s, n)
                        assert lhs == rhs

    def test_negative_r_rejected(self):
        with pytest.raises(ValueError):
            chu_vandermonde_binomial(-1, 0, 2, 1)


class TestHypergeometric:
    def test_empty_sum_is_one(self):
        for b in (-3, 0, 2, 11):
            for c in (1, 2, 7):
                assert hypergeom_2f1_terminating(0, b, c) == 1
                assert chu_vandermonde_closed(0, b, c) == 1

    def test_examples(self):
        assert hypergeom_2f1_terminating(-1, 3, 2) == Fraction(-1, 2)
        assert hypergeom_2f1_terminating(-2, 3, 2) == 0
        assert chu_vandermonde_closed(-1, 3, 2) == Fraction(-1, 2)
        assert chu_vandermonde_closed(-2, 3, 2) == 0

    def test_invalid_parameters_rejected(self):
        with pytest.raises(ValueError):
            hypergeom_2f1_terminating(1, 2, 3)
        with pytest.raises(ValueError):
            hypergeom_2f1_terminating(-1, 2, 0)
        with pytest.raises(ValueError):
            chu_vandermonde_closed(2, 2, 3)
        with pytest.raises(ValueError):
            chu_vandermonde_closed(-1, 2, -2)

    def test_series_matches_closed_form_block(self):
        for a in range(-8, 1):
            for b in range(-8, 9):
                for c in range(1, 9):
                    assert hypergeom_2f1_terminating(a, b, c) == chu_vandermonde_closed(a, b, c)


class TestBinomialInversion:
    def test_examples(self):
        assert binomial_inversion([1, 2, 3]) == [1, -1, 0]
        assert binomial_inversion([1, 0, 0]) == [1, 1, 1]

    def test_double_application_on_example(self):
        assert binomial_inversion(binomial_inversion([1, 2, 3])) == [1, 2, 3]

    def test_empty_sequence(self):
        assert binomial_inversion([]) == []

    @given(st.lists(st.integers(-10**6, 10**6), max_size=20))
    def test_involution(self, seq):
        assert binomial_inversion(binomial_inversion(seq)) == seq


class TestRoutes:
    @pytest.mark.parametrize("route", [route1_gkp, route2_factorial_gf, route3_convolution,
                                       route4_inversion, route5_hypergeom, route6_stirling])
    def test_spot_values(self, route):
        for (k, n), expected in SPOT_VALUES.items():
            assert route(IdentityInstance(k, n)) == expected

    @pytest.mark.parametrize("name", ROUTE_NAMES)
    def test_agreement_with_direct_sum(self, name):
        route = ROUTE_FUNCTIONS[name]
        k_top, n_top = (6, 8) if name == "r6" else (9, 14)
        for k in range(2, k_top):
            for n in range(0, n_top):
                inst = IdentityInstance(k, n)
                assert route(inst) == lhs_direct(inst)

    def test_route2_display_identity(self):
        # n! <-(n+1)>_l = (-1)^l (n+l)!, the sign flip route 2 rests on
        for n in range(8):
            for l in range(8):
                assert factorial(n) * falling(-(n + 1), l) == (-1) ** l * factorial(n + l)

    def test_factorial_generating_function_as_polynomials(self):
        # row identity behind route 2: x(x+1)...(x+n-1) equals the
        # Lah-weighted sum of falling factorial polynomials
        for n in range(13):
            acc = POLY_ZERO
            for k in range(n + 1):
                acc = poly_add(acc, poly_scale(falling_factorial_poly(k), lah(n, k)))
            assert acc == rising_factorial_poly(n)


class TestInternalGuards:
    def test_route5_raises_on_closed_form_disagreement(self, monkeypatch):
        import lahverify.verify as verify_mod

        monkeypatch.setattr(verify_mod, "chu_vandermonde_closed", lambda a, b, c: Fraction(7))
        with pytest.raises(ConsistencyError):
            route5_hypergeom(IdentityInstance(3, 4))

    def test_symbolic_chain_raises_on_side_mismatch(self, monkeypatch):
        import lahverify.symbolic as symbolic_mod
        from lahverify.symbolic import laurent_from_terms, route6_coefficient_chain

        monkeypatch.setattr(
            symbolic_mod, "stirling_weighted_moment", lambda m: laurent_from_terms([(1, 0)])
        )
        with pytest.raises(ConsistencyError):
            route6_coefficient_chain(3, 2)


class TestVerifyInstance:
    def test_report_contents(self):
        report = verify_instance(IdentityInstance(2, 1), routes=("r1", "r5"))
        assert report.reference == 2
        assert list(report.route_values) == ["lhs_direct", "r1", "r5"]
        assert report.all_match

    def test_empty_route_set(self):
        report = verify_instance(IdentityInstance(4, 1), routes=())
        assert list(report.route_values) == ["lhs_direct"]
        assert report.reference == 0
        assert report.all_match

    def test_unknown_route_rejected(self):
        with pytest.raises(ValueError):
            verify_instance(IdentityInstance(2, 1), routes=("r9",))


class TestVerifyGrid:
    def test_lexicographic_order_and_matches(self):
        reports = verify_grid(range(2, 4), range(0, 3), routes=ROUTE_NAMES)
        assert len(reports) == 6
        assert [(r.instance.k, r.instance.n) for r in reports] == [
            (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2)
        ]
        assert all(r.all_match for r in reports)

    def test_k_below_two_rejected(self):
        with pytest.raises(ValueError):
            verify_grid(range(1, 3), range(0, 2), routes=("r1",))

    def test_jobs_do_not_change_reports(self):
        serial = verify_grid(range(2, 5), range(0, 4), routes=("r1", "r4"), jobs=1)
        parallel = verify_grid(range(2, 5), range(0, 4), routes=("r1", "r4"), jobs=3)
        assert serial == parallel

    def test_mismatch_is_reported_not_raised(self, monkeypatch):
        monkeypatch.setitem(ROUTE_FUNCTIONS, "r1", lambda inst: 10**9)
        reports = verify_grid(range(2, 3), range(0, 2), routes=("r1",))
        assert all(not r.all_match for r in reports)
        assert all(r.route_values["r1"] == 10**9 for r in reports)
