"""Series rows: partition transform, exp-log oracle, and consequences."""

from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from gencosec.exactnum import RhoPolynomial, hp_context, pi_hp, poly_eval
from gencosec.genseries import (
    COSECANT,
    SECANT,
    OracleStream,
    SeriesTable,
    bernoulli_from_cosecant,
    cosecant_number,
    gen_cosecant,
    gen_secant,
    oracle_explog,
    partition_transform,
    zeta_even_from_cosecant,
)


class TestRows:
    def test_first_rows(self):
        assert gen_cosecant(0) == RhoPolynomial.one()
        assert gen_cosecant(1) == RhoPolynomial([0, Fraction(1, 6)])
        # 2/6! (2 rho + 5 rho^2)
        assert gen_cosecant(2) == RhoPolynomial(
            [0, Fraction(4, 720), Fraction(10, 720)]
        )

    def test_secant_first_rows(self):
        assert gen_secant(0) == RhoPolynomial.one()
        assert gen_secant(1) == RhoPolynomial([0, Fraction(1, 2)])
        # sec z = 1 + z^2/2 + 5 z^4/24: row 2 at rho = 1 is 5/24
        assert poly_eval(gen_secant(2), 1) == Fraction(5, 24)

    def test_cosecant_number(self):
        assert cosecant_number(2) == Fraction(7, 360)
        assert cosecant_number(1) == Fraction(1, 6)

    @given(st.integers(min_value=1, max_value=15))
    @settings(deadline=None, max_examples=15)
    def test_row_shape(self, k):
        row = gen_cosecant(k)
        assert row.degree == k
        assert row.coefficient(0) == 0
        # leading coefficient 1/(6^k k!)
        assert row.coefficient(k) == Fraction(1, 6**k * factorial(k))
        assert all(c >= 0 for c in row.coefficients)

    @given(st.integers(min_value=1, max_value=12))
    @settings(deadline=None, max_examples=12)
    def test_rho_collapses(self, k):
        row = gen_cosecant(k)
        # rho = -1: the series inverts to sin(z)/z
        assert poly_eval(row, -1) == Fraction((-1) ** k, factorial(2 * k + 1))
        # rho = 2: reduces to the plain cosecant numbers
        expected = (2 * k - 1) * cosecant_number(k) / (1 - Fraction(2) ** (1 - 2 * k))
        assert poly_eval(row, 2) == expected


class TestOracle:
    def test_matches_partition_transform(self):
        table = oracle_explog(12)
        for k in range(13):
            assert table.row(k) == gen_cosecant(k)
        table = oracle_explog(10, kind="secant")
        for k in range(11):
            assert table.row(k) == gen_secant(k)

    def test_stream_grows_incrementally(self):
        stream = OracleStream(COSECANT)
        assert stream.k_max == 0
        stream.extend()
        assert stream.k_max == 1
        assert stream.row(1) == gen_cosecant(1)
        got = stream.table(5)
        assert isinstance(got, SeriesTable)
        assert got.k_max == 5

    def test_row_out_of_range(self):
        table = oracle_explog(3)
        with pytest.raises(ValueError):
            table.row(4)
        with pytest.raises(ValueError):
            table.row(-1)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            oracle_explog(3, kind="tangent")


class TestParallel:
    def test_parallel_equals_sequential(self):
        for k in (8, 11):
            seq = partition_transform(k, COSECANT)
            par = partition_transform(k, COSECANT, jobs=3)
            assert seq == par
        assert partition_transform(9, SECANT, jobs=2) == gen_secant(9)

    def test_small_work_falls_back(self):
        # too few partitions to split: same answer either way
        assert partition_transform(2, COSECANT, jobs=8) == gen_cosecant(2)


def bernoulli_oracle(n_max):
    """B_0..B_{n_max} via sum_j C(m+1,j) B_j = 0, independent of any series."""
    values = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = sum(comb(m + 1, j) * values[j] for j in range(m))
        values.append(-acc / (m + 1))
    return values


def test_bernoulli_cross_check():
    oracle = bernoulli_oracle(30)
    for k in range(1, 16):
        assert bernoulli_from_cosecant(k) == oracle[2 * k]


class TestZetaEven:
    def test_matches_pi_formula(self):
        # zeta(2) = pi^2/6 to 30 digits
        got = zeta_even_from_cosecant(1, 30)
        with localcontext(hp_context(30)):
            want = pi_hp(40) ** 2 / 6
        assert str(got)[:31] == str(want)[:31]

    def test_high_order_precision(self):
        # k = 10 at P = 90: the value is so much more accurate than a
        # 59-term partial sum that their difference IS the tail, which
        # the integral test brackets between 60^-19/19 and 59^-19/19.
        got = zeta_even_from_cosecant(10, 90)
        direct = sum(Fraction(1, n**20) for n in range(1, 60))
        with localcontext(hp_context(90)):
            approx = Decimal(direct.numerator) / Decimal(direct.denominator)
            lower = Decimal(60) ** -19 / 19
            upper = Decimal(59) ** -19 / 19
        assert lower < abs(got - approx) < upper

    def test_preconditions(self):
        with pytest.raises(ValueError):
            zeta_even_from_cosecant(0, 50)
        with pytest.raises(ValueError):
            zeta_even_from_cosecant(1, 10)
