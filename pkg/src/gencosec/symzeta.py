"""Symmetric polynomials over squared integers and even zeta identities.

s(v,n) is the nth elementary symmetric polynomial of {1^2, ..., (v-1)^2}.
These connect to the cosecant rows through c_{2v,i} = 4**i * s(v,i) *
Gamma(2v-2i)/Gamma(2v), and from there to exact identities expressing the
partial sums sum_{k<v} k**(-2m) (equivalently zeta(2m) - zeta(2m,v)) as
rational combinations of row-value ratios.  Everything rational here is
exact; Decimals appear only in the v -> infinity limit report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .exactnum import hp_context, pi_hp, poly_eval, to_decimal
from .genseries import gen_cosecant
from .partitions import enumerate_partitions

__all__ = [
    "IdentityReport",
    "PowerSums",
    "RiemannLimit",
    "SymTable",
    "ZETA_EVEN_FACTOR",
    "harmonic_power_sum",
    "hurwitz_identity",
    "identity_nine",
    "riemann_limit",
    "sym_closed_low",
    "sym_high_partition",
    "sym_poly",
]

#: zeta(2m) = ZETA_EVEN_FACTOR[m] * pi**(2m) for the orders used here.
ZETA_EVEN_FACTOR = {
    1: Fraction(1, 6),
    2: Fraction(1, 90),
    3: Fraction(1, 945),
    4: Fraction(1, 9450),
    5: Fraction(1, 93555),
}


@lru_cache(maxsize=None)
def _sym_values(v: int) -> tuple[int, ...]:
    # coefficients of prod_{j=1}^{v-1} (1 + j**2 * t), ascending in t
    values = [1]
    for j in range(1, v):
        jj = j * j
        values.append(0)
        for i in range(len(values) - 1, 0, -1):
            values[i] += jj * values[i - 1]
    return tuple(values)


@dataclass(frozen=True)
class SymTable:
    """All s(v,n) for one v, built by the iterative product."""

    v: int
    values: tuple[int, ...]

    @classmethod
    def build(cls, v: int) -> "SymTable":
        if v < 1:
            raise ValueError(f"needs v >= 1, got {v}")
        return cls(v=v, values=_sym_values(v))

    def value(self, n: int) -> int:
        if not 0 <= n <= self.v - 1:
            raise ValueError(f"index must be in 0..{self.v - 1}, got {n}")
        return self.values[n]


def sym_poly(v: int, n: int) -> int:
    """s(v,n), the nth elementary symmetric polynomial of the v-1 squares.

    v = 1 is allowed as the empty-set edge case (only n = 0, value 1).
    """
    return SymTable.build(v).value(n)


def sym_closed_low(v: int, n: int) -> Fraction:
    """Closed forms for the three lowest-order symmetric polynomials.

    s(v,0) = 1, s(v,1) = (v-1)v(2v-1)/6, and s(v,2) as (5v+1)/(4*6!)
    times the rising factorial (2v-4)_5.
    """
    if v < 2:
        raise ValueError(f"needs v >= 2, got {v}")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction((v - 1) * v * (2 * v - 1), 6)
    if n == 2:
        if v < 3:
            raise ValueError("s(v,2) requires v >= 3")
        rising = 1
        for t in range(2 * v - 4, 2 * v + 1):
            rising *= t
        return Fraction((5 * v + 1) * rising, 4 * factorial(6))
    raise ValueError(f"no closed form for n={n}; available: 0, 1, 2")


@dataclass(frozen=True)
class PowerSums:
    """Exact power sums T_m = sum_{j=1}^{v-1} j**(-2m).

    T_m equals zeta(2m) - zeta(2m,v); keeping it as a Fraction is what
    makes every identity in this module testable with zero tolerance.
    """

    v: int
    values: tuple[Fraction, ...]

    @classmethod
    def build(cls, v: int, m_max: int) -> "PowerSums":
        if v < 1:
            raise ValueError(f"needs v >= 1, got {v}")
        if m_max < 1:
            raise ValueError(f"needs m_max >= 1, got {m_max}")
        values = tuple(
            sum((Fraction(1, j ** (2 * m)) for j in range(1, v)), Fraction(0))
            for m in range(1, m_max + 1)
        )
        return cls(v=v, values=values)

    def t(self, m: int) -> Fraction:
        if not 1 <= m <= len(self.values):
            raise ValueError(f"m must be in 1..{len(self.values)}, got {m}")
        return self.values[m - 1]


def harmonic_power_sum(v: int, r: int) -> Fraction:
    """Generalized harmonic number H_{v-1,r} = sum_{k=1}^{v-1} k**-r."""
    if v < 2:
        raise ValueError(f"needs v >= 2, got {v}")
    if r not in (2, 4, 6, 8, 10):
        raise ValueError(f"r must be one of 2,4,6,8,10, got {r}")
    return PowerSums.build(v, r // 2).t(r // 2)


def sym_high_partition(v: int, ell: int) -> Fraction:
    """s(v, v-ell) by the partition expansion over power sums.

    Removing the all-distinct constraint from the defining sum leaves one
    term per partition of ell-1:

        s(v,v-ell) = ((v-1)!)**2 * sum over partitions of ell-1 of
                     (-1)**((ell-1) - N) * prod_m T_m**lam_m / (lam_m! m**lam_m)

    with N the partition length.  The per-partition factor is the
    exponential cycle-index weight; the worked {2,1} case gives weight
    3!/(2 * 1! * 1 * 1!) = 3 before the overall 1/(ell-1)! is applied,
    and the all-ones partition always enters positively.
    """
    if ell < 1:
        raise ValueError(f"needs ell >= 1, got {ell}")
    if ell > v:
        raise ValueError(f"needs ell <= v, got ell={ell}, v={v}")
    sums = PowerSums.build(v, max(ell - 1, 1))
    total = Fraction(0)
    for pm in enumerate_partitions(ell - 1):
        term = Fraction(1)
        for part, mult in pm.counts:
            term *= sums.t(part) ** mult
            term /= factorial(mult) * part**mult
        if (ell - 1 - pm.length) % 2:
            term = -term
        total += term
    return factorial(v - 1) ** 2 * total


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity instance, CLI- and JSON-friendly."""

    name: str
    params: dict = field(default_factory=dict)
    left: str = ""
    right: str = ""
    equal: bool = False
    asserted: bool = True
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "identity": self.name,
            "params": dict(self.params),
            "left": self.left,
            "right": self.right,
            "equal": self.equal,
            "asserted": self.asserted,
            "note": self.note,
        }


def _c2v(v: int, i: int) -> Fraction:
    return poly_eval(gen_cosecant(i), 2 * v)


def identity_nine(v: int, i: int) -> IdentityReport:
    """Check c_{2v,i} = 2**(2i) * (Gamma(2v-2i)/Gamma(2v)) * s(v,i).

    The Gamma ratio is the reciprocal of the integer product
    (2v-2i)(2v-2i+1)...(2v-1); no gamma function is evaluated.
    """
    if not 0 <= i < v:
        raise ValueError(f"needs 0 <= i < v, got v={v}, i={i}")
    left = _c2v(v, i)
    ratio_den = 1
    for t in range(2 * v - 2 * i, 2 * v):
        ratio_den *= t
    right = Fraction(4**i, ratio_den) * sym_poly(v, i)
    return IdentityReport(
        name="nine",
        params={"v": v, "i": i},
        left=str(left),
        right=str(right),
        equal=left == right,
    )


# R_j combinations equal to H_{v-1,2m}; coefficients are fixed rationals.
def _hurwitz_rhs(v: int, m: int) -> Fraction:
    r = [None] + [_c2v(v, v - 1 - j) / _c2v(v, v - 1) for j in range(1, m + 1)]
    return _combine_ratios(r, m)


def _combine_ratios(r: list, m: int) -> Fraction:
    if m == 1:
        return Fraction(2, 3) * r[1]
    if m == 2:
        return Fraction(4, 9) * r[1] ** 2 - Fraction(4, 15) * r[2]
    if m == 3:
        return (
            Fraction(4, 105) * r[3]
            - Fraction(4, 15) * r[2] * r[1]
            + Fraction(8, 27) * r[1] ** 3
        )
    if m == 4:
        return Fraction(8, 14175) * (
            350 * r[1] ** 4
            - 420 * r[2] * r[1] ** 2
            + 63 * r[2] ** 2
            + 60 * r[3] * r[1]
            - 5 * r[4]
        )
    if m == 5:
        return Fraction(4, 93555) * (
            3080 * r[1] ** 5
            - 4620 * r[2] * r[1] ** 3
            + 1386 * r[2] ** 2 * r[1]
            + 660 * r[3] * r[1] ** 2
            - 198 * r[3] * r[2]
            - 55 * r[4] * r[1]
            + 3 * r[5]
        )
    raise ValueError(f"m must be in 1..5, got {m}")


def hurwitz_identity(v: int, m: int) -> IdentityReport:
    """Check H_{v-1,2m} against its ratio combination, exactly.

    Stated validity is v >= m+2.  The boundary v = m+1 still has all the
    needed row indices (down to c_{2v,0}), so it is evaluated and
    reported but flagged as not asserted.
    """
    if not 1 <= m <= 5:
        raise ValueError(f"m must be in 1..5, got {m}")
    if v < m + 1:
        raise ValueError(f"needs v >= m+1 to form the ratios, got v={v}, m={m}")
    left = PowerSums.build(v, m).t(m)
    right = _hurwitz_rhs(v, m)
    boundary = v == m + 1
    return IdentityReport(
        name="hurwitz",
        params={"v": v, "m": m},
        left=str(left),
        right=str(right),
        equal=left == right,
        asserted=not boundary,
        note="below stated validity (v = m+1); reported, not asserted"
        if boundary
        else "",
    )


def _hurwitz_rhs_fast(v: int, m: int) -> Fraction:
    """Same value as _hurwitz_rhs, but without building any series row.

    Each ratio reduces exactly to power sums:

        R_j = (2j+1)!/4**j * s(v,v-1-j)/s(v,v-1)

    and the s-ratio is the cycle-index sum over partitions of j (the
    ((v-1)!)**2 prefactors cancel).  Cost is O(v*m) instead of the
    partition count of v-1, which is what makes large v usable.  The
    two routes are checked equal over the row-route range in the tests.
    """
    sums = PowerSums.build(v, max(m, 1))
    r: list[Fraction | None] = [None]
    for j in range(1, m + 1):
        total = Fraction(0)
        for pm in enumerate_partitions(j):
            term = Fraction(1)
            for part, mult in pm.counts:
                term *= sums.t(part) ** mult
                term /= factorial(mult) * part**mult
            if (j - pm.length) % 2:
                term = -term
            total += term
        r.append(Fraction(factorial(2 * j + 1), 4**j) * total)
    return _combine_ratios(r, m)


class RiemannLimit(NamedTuple):
    estimate: Decimal
    deviation: Decimal
    bounds: tuple[Decimal, Decimal]


def riemann_limit(m: int, v: int, precision: int) -> RiemannLimit:
    """Finite-v estimate of zeta(2m) with its analytic deviation bracket.

    The ratio combination at finite v equals zeta(2m) - zeta(2m,v)
    exactly, so the deviation from zeta(2m) is zeta(2m,v) itself, which
    the integral test pins inside

        [ v**(1-2m)/(2m-1), (v-1)**(1-2m)/(2m-1) ].
    """
    if not 1 <= m <= 5:
        raise ValueError(f"m must be in 1..5, got {m}")
    if v < m + 2:
        raise ValueError(f"needs v >= m+2, got v={v}, m={m}")
    if precision < 30:
        raise ValueError(f"precision must be at least 30, got {precision}")
    # Past the row-route range the series rows get expensive; the exact
    # power-sum reduction gives the identical rational at O(v*m) cost.
    estimate_exact = _hurwitz_rhs(v, m) if v <= 30 else _hurwitz_rhs_fast(v, m)
    factor = ZETA_EVEN_FACTOR[m]
    with localcontext(hp_context(precision)):
        pi = pi_hp(precision + 10)
        zeta_value = (
            pi ** (2 * m) * Decimal(factor.numerator) / Decimal(factor.denominator)
        )
        estimate = to_decimal(estimate_exact, precision + 10)
        deviation = zeta_value - estimate
        lower = to_decimal(Fraction(1, v ** (2 * m - 1) * (2 * m - 1)), precision + 10)
        upper = to_decimal(
            Fraction(1, (v - 1) ** (2 * m - 1) * (2 * m - 1)), precision + 10
        )
    return RiemannLimit(estimate=estimate, deviation=deviation, bounds=(lower, upper))
