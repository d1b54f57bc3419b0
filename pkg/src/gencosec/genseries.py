"""Generalized cosecant and secant numbers as polynomials in rho.

c_{rho,k} is the coefficient of z**(2k) in (z/sin z)**rho and d_{rho,k}
the coefficient in (1/cos z)**rho.  Both are computed two independent
ways:

* ``partition_transform`` sums over the partitions of k.  A partition
  with parts i of multiplicity lam_i and N parts total contributes
  (-1)**(k+N) * (rho)_N * prod_i inner(i)**lam_i / lam_i!, where inner(i)
  is 1/(2i+1)! for the cosecant family and 1/(2i)! for the secant family.
* ``oracle_explog`` never looks at a partition: it takes the logarithm of
  the base series in u = z**2 by the standard quotient recurrence, scales
  by rho, and exponentiates, so agreement with the transform is a real
  cross-check rather than two paths through shared code.

Everything downstream (Bernoulli numbers, even zeta values, coefficient
asymptotics) reads rows from here.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .exactnum import RhoPolynomial, hp_context, pi_hp, pochhammer_poly, poly_eval
from .partitions import PartitionMultiset, enumerate_partitions, partition_count

__all__ = [
    "COSECANT",
    "SECANT",
    "OracleStream",
    "SeriesSpec",
    "SeriesTable",
    "bernoulli_from_cosecant",
    "cosecant_number",
    "gen_cosecant",
    "gen_secant",
    "oracle_explog",
    "partition_transform",
    "zeta_even_from_cosecant",
]


@lru_cache(maxsize=None)
def _cosecant_inner(i: int) -> Fraction:
    return Fraction(1, factorial(2 * i + 1))


@lru_cache(maxsize=None)
def _secant_inner(i: int) -> Fraction:
    return Fraction(1, factorial(2 * i))


def _alternating_sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class SeriesSpec:
    """Defines one series family for the partition transform.

    ``inner_value(i)`` is the unsigned magnitude of the coefficient of
    u**i in the base series (u = z**2); the base series itself alternates,
    base(i) = (-1)**i * inner_value(i).  ``global_sign(k)`` is the overall
    (-1)**k prefactor applied to the partition sum at order k.
    """

    name: str
    inner_value: Callable[[int], Fraction]
    global_sign: Callable[[int], int]


COSECANT = SeriesSpec("cosecant", _cosecant_inner, _alternating_sign)
SECANT = SeriesSpec("secant", _secant_inner, _alternating_sign)

SPEC_BY_NAME = {spec.name: spec for spec in (COSECANT, SECANT)}


def _add_partition_term(
    acc: list[Fraction], pm: PartitionMultiset, spec: SeriesSpec
) -> None:
    scalar = Fraction(1)
    for part, mult in pm.counts:
        scalar *= spec.inner_value(part) ** mult
        scalar /= factorial(mult)
    if pm.length % 2:
        scalar = -scalar
    for j, c in enumerate(pochhammer_poly(pm.length).coefficients):
        if c:
            acc[j] += c * scalar


def _chunk_accumulate(spec_name: str, k: int, start: int, stop: int) -> list[Fraction]:
    # Worker for the parallel path; must stay module-level picklable.
    spec = SPEC_BY_NAME[spec_name]
    acc = [Fraction(0)] * (k + 1)
    for pm in itertools.islice(enumerate_partitions(k), start, stop):
        _add_partition_term(acc, pm, spec)
    return acc


def partition_transform(k: int, spec: SeriesSpec, jobs: int = 1) -> RhoPolynomial:
    """Order-k row of the series family as a polynomial in rho.

    The result has degree exactly k, zero constant term for k >= 1, and
    leading coefficient inner_value(1)**k / k!.  ``jobs`` > 1 splits the
    partition list into equal index ranges accumulated in separate
    processes; the merge is in fixed chunk order and the arithmetic is
    exact, so results are identical to the sequential path bit for bit.
    """
    if k < 0:
        raise ValueError(f"order must be nonnegative, got {k}")
    if jobs > 1 and partition_count(k) >= 4 * jobs:
        total = partition_count(k)
        bounds = [(total * i) // jobs for i in range(jobs + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(
                pool.map(
                    _chunk_accumulate,
                    itertools.repeat(spec.name),
                    itertools.repeat(k),
                    bounds[:-1],
                    bounds[1:],
                )
            )
        acc = [sum(col) for col in zip(*chunks)]
    else:
        acc = [Fraction(0)] * (k + 1)
        for pm in enumerate_partitions(k):
            _add_partition_term(acc, pm, spec)
    if spec.global_sign(k) < 0:
        acc = [-c for c in acc]
    return RhoPolynomial(acc)


@lru_cache(maxsize=None)
def gen_cosecant(k: int) -> RhoPolynomial:
    """c_{rho,k}: coefficient of z**(2k) in (z/sin z)**rho."""
    return partition_transform(k, COSECANT)


@lru_cache(maxsize=None)
def gen_secant(k: int) -> RhoPolynomial:
    """d_{rho,k}: coefficient of z**(2k) in sec(z)**rho."""
    return partition_transform(k, SECANT)


def cosecant_number(k: int) -> Fraction:
    """Classical cosecant number c_k, the rho = 1 value of row k."""
    return poly_eval(gen_cosecant(k), 1)


@dataclass(frozen=True)
class SeriesTable:
    """Rows 0..k_max of one series family, indexed by order."""

    name: str
    rows: tuple[RhoPolynomial, ...]

    @property
    def k_max(self) -> int:
        return len(self.rows) - 1

    def row(self, k: int) -> RhoPolynomial:
        if not 0 <= k <= self.k_max:
            raise ValueError(f"row {k} outside table range 0..{self.k_max}")
        return self.rows[k]


class OracleStream:
    """Exp-log composition oracle, extended one order at a time.

    Works in u = z**2.  With S(u) the base series (sin z / z or cos z),
    M = log S satisfies the quotient recurrence
        M_k = s_k - (1/k) * sum_{j=1}^{k-1} j * M_j * s_{k-j},
    and the target is E = exp(rho * L) with L = -M (cosecant) or L = M
    negated consistently so that E collects (base)**(-rho); its rows obey
        E_k = (rho/k) * sum_{j=1}^{k} j * L_j * E_{k-j},
    evaluated over polynomials in rho.  Incremental extension exists so
    benchmarks can time one added order at a time.
    """

    def __init__(self, spec: SeriesSpec):
        self._spec = spec
        self._s: list[Fraction] = [Fraction(1)]
        self._log: list[Fraction] = [Fraction(0)]
        self._rows: list[RhoPolynomial] = [RhoPolynomial.one()]

    @property
    def k_max(self) -> int:
        return len(self._rows) - 1

    def extend(self) -> RhoPolynomial:
        """Compute and return the next row."""
        k = len(self._rows)
        sign = -1 if k % 2 else 1
        self._s.append(sign * self._spec.inner_value(k))
        m_k = self._s[k]
        for j in range(1, k):
            m_k -= Fraction(j, k) * self._log[j] * self._s[k - j]
        self._log.append(m_k)
        # L = -log(base); E_k = (rho/k) sum_j j L_j E_{k-j}
        total = RhoPolynomial.zero()
        for j in range(1, k + 1):
            total = total + self._rows[k - j].scale(-j * self._log[j])
        self._rows.append(total.times_rho().scale(Fraction(1, k)))
        return self._rows[k]

    def row(self, k: int) -> RhoPolynomial:
        while self.k_max < k:
            self.extend()
        return self._rows[k]

    def table(self, k_max: int) -> SeriesTable:
        self.row(k_max)
        return SeriesTable(name=self._spec.name, rows=tuple(self._rows[: k_max + 1]))


def oracle_explog(k_max: int, kind: str = "cosecant") -> SeriesTable:
    """Rows 0..k_max by series composition, independent of partitions."""
    if k_max < 0:
        raise ValueError(f"order must be nonnegative, got {k_max}")
    try:
        spec = SPEC_BY_NAME[kind]
    except KeyError:
        raise ValueError(f"unknown series kind {kind!r}") from None
    return OracleStream(spec).table(k_max)


def bernoulli_from_cosecant(k: int) -> Fraction:
    """B_{2k} recovered from the classical cosecant number c_k.

    B_{2k} = (-1)**(k+1) * (2k)! * c_k / (2**(2k) - 2) for k >= 1.
    """
    if k < 1:
        raise ValueError(f"index must be positive, got {k}")
    sign = 1 if k % 2 else -1
    return sign * factorial(2 * k) * cosecant_number(k) / (2 ** (2 * k) - 2)


def zeta_even_from_cosecant(k: int, precision: int) -> Decimal:
    """zeta(2k) = c_k * pi**(2k) / (2 * (1 - 2**(1-2k))) as a Decimal.

    At least ``precision`` digits are correct.  The value is returned at
    the full working precision of 8k + 10 guard digits so that comparing
    it against deep partial sums of sum n**(-2k), whose tails can sit far
    below 10**-precision, stays meaningful.
    """
    if k < 1:
        raise ValueError(f"index must be positive, got {k}")
    if precision < 20:
        raise ValueError(f"precision must be at least 20, got {precision}")
    factor = cosecant_number(k) * Fraction(2 ** (2 * k), 2 ** (2 * k + 1) - 4)
    guard = 8 * k + 10
    with localcontext(hp_context(precision, guard)):
        pi = pi_hp(precision + guard)
        return (
            pi ** (2 * k)
            * Decimal(factor.numerator)
            / Decimal(factor.denominator)
        )
