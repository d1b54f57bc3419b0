"""Symmetric polynomials, the row identity, and zeta ratio identities."""

from decimal import Decimal
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from gencosec.symzeta import (
    PowerSums,
    SymTable,
    _hurwitz_rhs,
    _hurwitz_rhs_fast,
    harmonic_power_sum,
    hurwitz_identity,
    identity_nine,
    riemann_limit,
    sym_closed_low,
    sym_high_partition,
    sym_poly,
)


class TestSymPoly:
    def test_quoted_values(self):
        assert sym_poly(5, 1) == 30  # 1 + 4 + 9 + 16
        assert sym_poly(4, 2) == 49
        assert sym_poly(1, 0) == 1

    @given(st.integers(min_value=2, max_value=12))
    @settings(deadline=None, max_examples=11)
    def test_newton_recurrence(self, v):
        squares = [j * j for j in range(1, v)]
        power = [None] + [
            Fraction(sum(x**j for x in squares)) for j in range(1, v)
        ]
        elem = [Fraction(1)]
        for n in range(1, v):
            acc = sum(
                ((-1) ** (j - 1) * elem[n - j] * power[j] for j in range(1, n + 1)),
                Fraction(0),
            )
            elem.append(acc / n)
        for n in range(v):
            assert elem[n] == sym_poly(v, n)

    @given(st.integers(min_value=2, max_value=15))
    @settings(deadline=None, max_examples=14)
    def test_table_invariants(self, v):
        table = SymTable.build(v)
        assert table.value(0) == 1
        assert table.value(v - 1) == factorial(v - 1) ** 2
        assert all(x > 0 for x in table.values)

    def test_bounds(self):
        with pytest.raises(ValueError):
            SymTable.build(0)
        with pytest.raises(ValueError):
            SymTable.build(4).value(4)


class TestClosedLow:
    def test_matches_product(self):
        for v in range(2, 25):
            assert sym_closed_low(v, 0) == sym_poly(v, 0)
            assert sym_closed_low(v, 1) == sym_poly(v, 1)
            if v >= 3:
                assert sym_closed_low(v, 2) == sym_poly(v, 2)

    def test_domain(self):
        with pytest.raises(ValueError):
            sym_closed_low(2, 2)
        with pytest.raises(ValueError):
            sym_closed_low(5, 3)


class TestSymHigh:
    def test_agrees_with_product(self):
        for v in range(1, 16):
            for ell in range(1, min(v, 6) + 1):
                assert sym_high_partition(v, ell) == sym_poly(v, v - ell), (v, ell)

    def test_domain(self):
        with pytest.raises(ValueError):
            sym_high_partition(3, 4)
        with pytest.raises(ValueError):
            sym_high_partition(3, 0)


class TestPowerSums:
    def test_quoted_values(self):
        assert harmonic_power_sum(3, 2) == Fraction(5, 4)
        assert harmonic_power_sum(2, 10) == 1
        assert harmonic_power_sum(5, 2) == Fraction(205, 144)

    def test_domain(self):
        with pytest.raises(ValueError):
            harmonic_power_sum(1, 2)
        with pytest.raises(ValueError):
            harmonic_power_sum(5, 3)

    def test_exactness(self):
        sums = PowerSums.build(6, 3)
        assert sums.t(1) == sum(Fraction(1, j**2) for j in range(1, 6))
        assert sums.t(3) == sum(Fraction(1, j**6) for j in range(1, 6))


class TestIdentityNine:
    def test_quoted_instances(self):
        rep = identity_nine(5, 4)
        assert rep.equal and rep.left == "128/315"
        rep = identity_nine(3, 1)
        assert rep.equal and rep.left == "1"

    def test_sweep(self):
        for v in range(1, 13):
            for i in range(v):
                rep = identity_nine(v, i)
                assert rep.equal, rep.params
                if i == 0:
                    assert rep.left == "1"

    def test_domain(self):
        with pytest.raises(ValueError):
            identity_nine(4, 4)


class TestHurwitz:
    def test_quoted_instance(self):
        rep = hurwitz_identity(3, 1)
        assert rep.equal and rep.left == "5/4" == rep.right
        assert rep.asserted

    def test_boundary_reported_not_asserted(self):
        rep = hurwitz_identity(2, 1)
        assert not rep.asserted
        assert rep.note
        assert rep.left == "1" == rep.right  # happens to hold at the boundary

    def test_high_order_instance(self):
        rep = hurwitz_identity(10, 4)
        assert rep.equal and rep.asserted

    def test_sweep(self):
        for m in range(1, 6):
            for v in range(m + 2, 22):
                assert hurwitz_identity(v, m).equal, (v, m)

    def test_fast_route_equals_row_route(self):
        for m in range(1, 6):
            for v in range(m + 2, 18):
                assert _hurwitz_rhs(v, m) == _hurwitz_rhs_fast(v, m), (v, m)

    def test_domain(self):
        with pytest.raises(ValueError):
            hurwitz_identity(1, 1)
        with pytest.raises(ValueError):
            hurwitz_identity(10, 6)


class TestRiemannLimit:
    def test_bracket(self):
        for m in (1, 2, 3, 4, 5):
            for v in (m + 2, 12, 30, 80):
                res = riemann_limit(m, v, 40)
                assert res.bounds[0] < res.deviation < res.bounds[1], (m, v)

    def test_quoted_m2_v10(self):
        res = riemann_limit(2, 10, 40)
        assert Decimal(1) / (3 * 10**3) < res.deviation < Decimal(1) / (3 * 9**3)

    def test_estimate_approaches_zeta2(self):
        res = riemann_limit(1, 100, 40)
        pi2_6 = Decimal("1.6449340668482264364724151666460251892")
        assert abs(res.estimate - pi2_6) <= res.bounds[1]

    def test_deviation_scaling(self):
        d = [riemann_limit(2, v, 40).deviation for v in (10, 20, 40)]
        assert Decimal(7) < d[0] / d[1] < Decimal(9)
        assert Decimal(7) < d[1] / d[2] < Decimal(9)

    def test_domain(self):
        with pytest.raises(ValueError):
            riemann_limit(1, 2, 40)
        with pytest.raises(ValueError):
            riemann_limit(2, 10, 20)
        with pytest.raises(ValueError):
            riemann_limit(0, 10, 40)
