"""Closed forms, approximations and asymptotics for row coefficients.

C_{k,i} denotes the coefficient of rho**i in the cosecant row of order k.
The first few coefficients below the leading one admit closed forms in k
(``leading_closed``); truncating the row to those four terms approximates
the whole polynomial for |rho| >> k (``approx_cosecant``), and the ratio
of the truncation to the exact value is the accuracy measure tabulated by
``beta_ratio``.  The v-1 row value at rho = 2v has its own family of
closed and asymptotic forms (``c2v_vm1_*``).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Union

from .exactnum import RhoPolynomial, hp_context, pi_hp, poly_eval, to_decimal
from .genseries import gen_cosecant
from .stirling import newton_coefficients, stirling1

__all__ = [
    "ASYMPTOTIC_VARIANTS",
    "AsymptoticContext",
    "CoeffClosedForm",
    "approx_cosecant",
    "approx_cosecant_exact",
    "asymptotic_error_report",
    "beta_alternating",
    "beta_ratio",
    "beta_ratio_exact",
    "c2v_vm1_asymptotic",
    "c2v_vm1_beta",
    "c2v_vm1_sum",
    "ckkm2_from_stirling",
    "coefficient",
    "fit_leading",
    "leading_closed",
    "near_truncation_boundary",
    "truncate_decimal_string",
]

RationalLike = Union[int, Fraction]


def coefficient(k: int, i: int) -> Fraction:
    """C_{k,i}, the coefficient of rho**i in cosecant row k."""
    if k < 0:
        raise ValueError(f"order must be nonnegative, got {k}")
    if not 0 <= i <= k:
        raise ValueError(f"power must be in 0..{k}, got {i}")
    return gen_cosecant(k).coefficient(i)


@dataclass(frozen=True)
class CoeffClosedForm:
    """Closed form C_{k,k-ell} = num(k) / (den_const * 6**(k+off) * (k-shift)!).

    ``numerator`` holds the ascending coefficients of the polynomial in k.
    Valid from k = ell + 1 on; below that the row has no rho**(k-ell) term.
    """

    ell: int
    numerator: tuple[Fraction, ...]
    den_const: int
    six_offset: int
    factorial_shift: int

    def evaluate(self, k: int) -> Fraction:
        if k < self.ell + 1:
            raise ValueError(
                f"closed form for ell={self.ell} starts at k={self.ell + 1}, got {k}"
            )
        num = Fraction(0)
        for c in reversed(self.numerator):
            num = num * k + c
        den = self.den_const * 6 ** (k + self.six_offset) * factorial(
            k - self.factorial_shift
        )
        return num / den


_CLOSED_FORMS = {
    0: CoeffClosedForm(0, (Fraction(1),), 1, 0, 0),
    1: CoeffClosedForm(1, (Fraction(1),), 5, 0, 2),
    2: CoeffClosedForm(2, (Fraction(17), Fraction(21)), 175, 1, 3),
    3: CoeffClosedForm(3, (Fraction(0), Fraction(17, 7), Fraction(1)), 125, 1, 4),
    4: CoeffClosedForm(
        4,
        (Fraction(-33510, 539), Fraction(867, 49), Fraction(306, 7), Fraction(9)),
        625,
        3,
        5,
    ),
}


def leading_closed(k: int, ell: int) -> Fraction:
    """Closed form for C_{k,k-ell}, available for ell = 0..4.

    ell = 0 gives the leading coefficient 1/(6**k k!); each deeper level
    divides by one less factorial and picks up a polynomial in k.
    """
    if ell not in _CLOSED_FORMS:
        raise ValueError(f"no closed form for ell={ell}; available: 0..4")
    return _CLOSED_FORMS[ell].evaluate(k)


def ckkm2_from_stirling(k: int) -> Fraction:
    """C_{k,k-2} assembled from its four contributing partitions.

    Only the partitions {1^k}, {2,1^(k-2)}, {3,1^(k-3)} and {2,2,1^(k-4)}
    reach the power rho**(k-2); their Pochhammer coefficients are signed
    Stirling numbers and the signs all cancel to plus:

        C_{k,k-2} = s_k^(k-2)/(6**k k!) + s_{k-1}^(k-2)/(5! 6**(k-2) (k-2)!)
                  + 1/(7! 6**(k-3) (k-3)!) + 1/(2! (5!)**2 6**(k-4) (k-4)!).
    """
    if k < 4:
        raise ValueError(f"needs k >= 4, got {k}")
    return (
        Fraction(stirling1(k, k - 2), 6**k * factorial(k))
        + Fraction(stirling1(k - 1, k - 2), factorial(5) * 6 ** (k - 2) * factorial(k - 2))
        + Fraction(1, factorial(7) * 6 ** (k - 3) * factorial(k - 3))
        + Fraction(1, 2 * factorial(5) ** 2 * 6 ** (k - 4) * factorial(k - 4))
    )


_FIT_SIX_OFFSET = {1: 0, 2: 1, 3: 2, 4: 4}


def fit_leading(ell: int, six_offset: int | None = None) -> tuple[Fraction, ...]:
    """Recover the numerator of C_{k,k-ell} by fitting exact row values.

    Conjectures C_{k,k-ell} = g(k) / (6**(k+six_offset) * (k-ell-1)!) with
    g of degree ell - 1, determines g from the ell earliest rows
    (k = ell+1 .. 2*ell), and returns its ascending coefficients.  The
    choice of six_offset only rescales g; the defaults reproduce the
    offsets under which the known solutions were first written down.
    """
    if not 1 <= ell <= 4:
        raise ValueError(f"ell must be in 1..4, got {ell}")
    if six_offset is None:
        six_offset = _FIT_SIX_OFFSET[ell]
    points = []
    for k in range(ell + 1, 2 * ell + 1):
        value = coefficient(k, k - ell) * 6 ** (k + six_offset) * factorial(k - ell - 1)
        points.append((Fraction(k), value))
    return tuple(newton_coefficients(points))


def approx_cosecant_exact(rho: RationalLike, k: int) -> Fraction:
    """Four-term large-|rho| approximation of the cosecant row, exactly.

    Sums leading_closed(k, ell) * rho**(k-ell) for ell = 0..3.  Exact in
    the sense that the truncation itself is evaluated without rounding;
    it approximates the full row only when |rho| >> k.
    """
    if k < 4:
        raise ValueError(f"needs k >= 4, got {k}")
    x = Fraction(rho)
    return sum(
        (leading_closed(k, ell) * x ** (k - ell) for ell in range(4)),
        Fraction(0),
    )


def approx_cosecant(rho: RationalLike, k: int, precision: int) -> Decimal:
    """The four-term approximation as a Decimal with ``precision`` digits."""
    if precision < 20:
        raise ValueError(f"precision must be at least 20, got {precision}")
    return to_decimal(approx_cosecant_exact(rho, k), precision)


def beta_ratio_exact(rho: RationalLike, k: int) -> Fraction:
    """Ratio of the four-term approximation to the exact row value.

    Strictly below 1 for rho > 0: every row coefficient is positive, so
    dropping terms can only lose mass.
    """
    x = Fraction(rho)
    if x < 1:
        raise ValueError(f"rho must be at least 1, got {rho}")
    if k < 4:
        raise ValueError(f"needs k >= 4, got {k}")
    return approx_cosecant_exact(x, k) / poly_eval(gen_cosecant(k), x)


def truncate_decimal_string(q: Fraction, places: int = 6) -> str:
    """Decimal expansion of q >= 0 cut after ``places`` digits, no rounding."""
    if q < 0:
        raise ValueError("negative values are not truncated here")
    scaled = (q.numerator * 10**places) // q.denominator
    return f"{scaled // 10**places}.{scaled % 10**places:0{places}d}"


def near_truncation_boundary(
    q: Fraction, places: int = 6, tolerance: Fraction = Fraction(1, 10**12)
) -> bool:
    """True when q sits within ``tolerance`` of a truncation boundary.

    Truncation boundaries are the multiples of 10**-places; a value this
    close to one means the printed digits are sensitive to any upstream
    perturbation, so emitters attach a warning.
    """
    step = Fraction(1, 10**places)
    frac = (q / step) - (q.numerator * 10**places) // q.denominator
    return frac < tolerance / step or 1 - frac < tolerance / step


def beta_ratio(rho: RationalLike, k: int) -> str:
    """beta(rho, k) truncated to six decimal places, as printed."""
    return truncate_decimal_string(beta_ratio_exact(rho, k), places=6)


# ---------------------------------------------------------------------------
# The rho = 2v value of row v-1: closed forms and asymptotics.


def c2v_vm1_beta(v: int) -> Fraction:
    """c_{2v,v-1} = B(v, 1/2) / 2, rationalized.

    B(v, 1/2)/2 = 4**v (v-1)! v! / (2 (2v)!); the half-integer gamma
    functions cancel into factorials.
    """
    if v < 2:
        raise ValueError(f"needs v >= 2, got {v}")
    return Fraction(4**v * factorial(v - 1) * factorial(v), 2 * factorial(2 * v))


def c2v_vm1_sum(v: int) -> Fraction:
    """c_{2v,v-1} as the alternating binomial sum

    2**(2-2v) * sum_{j=0}^{v-1} (-1)**(v-j-1) C(2v-1, j) / (2v-2j-1).
    """
    if v < 1:
        raise ValueError(f"needs v >= 1, got {v}")
    total = Fraction(0)
    for j in range(v):
        sign = 1 if (v - j - 1) % 2 == 0 else -1
        total += Fraction(sign * comb(2 * v - 1, j), 2 * v - 2 * j - 1)
    return Fraction(2 ** (2 - 2 * v)) * total


def beta_alternating(x: Fraction, precision: int) -> Decimal:
    """Dirichlet-style alternating sum beta(x) = sum_{j>=0} (-1)**j / (x+j).

    Summing the alternating series directly needs about 10**precision
    terms, so this uses the equivalent all-positive expansion

        beta(x) = sum_{n>=0} n! / (2**(n+1) * (x)_{n+1}),

    whose term ratio (n+1)/(2(x+n+1)) stays below 1/2, giving a tail
    bounded by the last included term and roughly 3.3 terms per digit.
    Terms are carried exactly and rounded only on accumulation.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"argument must be positive, got {x}")
    if precision < 1:
        raise ValueError(f"precision must be positive, got {precision}")
    guard = 10
    with localcontext(hp_context(precision, guard)):
        cutoff = Fraction(1, 10 ** (precision + guard - 2))
        term = Fraction(1, 2 * x)  # n = 0
        total = Decimal(0)
        n = 0
        while term >= cutoff:
            total += Decimal(term.numerator) / Decimal(term.denominator)
            n += 1
            term *= Fraction(n, 2 * (x + n))
        return +total


@dataclass(frozen=True)
class AsymptoticContext:
    """Shared high-precision ingredients for the c_{2v,v-1} asymptotics."""

    v: int
    precision: int
    pi: Decimal
    beta_half: Decimal

    @classmethod
    def build(cls, v: int, precision: int) -> "AsymptoticContext":
        if v < 2:
            raise ValueError(f"needs v >= 2, got {v}")
        if precision < 30:
            raise ValueError(f"precision must be at least 30, got {precision}")
        with localcontext(hp_context(precision)):
            return cls(
                v=v,
                precision=precision,
                pi=pi_hp(precision),
                beta_half=beta_alternating(Fraction(2 * v + 1, 2), precision),
            )


ASYMPTOTIC_VARIANTS = ("printed", "beta_flipped", "two_term")


def c2v_vm1_asymptotic(
    v: int,
    precision: int,
    leading_only: bool = False,
    variant: str = "printed",
) -> Decimal:
    """Large-v approximation to c_{2v,v-1}: prefactor times a bracket.

    The prefactor is 2**(2-2v) C(2v-1, v).  Variants of the bracket:

    - "printed": pi/4 + (-1)**(v-1) beta(v+1/2)/2 + (-1)**(v-1) floor(v/2)/(2v)
      - 5(1-(-1)**v)/(8v) + (3/(4v)) (-1)**(v-1) beta(v+1/2)/2, exactly as
      the source prints it.  The floor term is an alternating O(1)
      contribution (floor(v/2)/(2v) -> 1/4), so the relative error of
      this form settles near 0.32 instead of vanishing; at fixed parity
      it still decreases monotonically.
    - "beta_flipped": same with the two beta terms negated, the other
      reading of the ambiguous sign grouping.  Also plateaus.
    - "two_term": pi/4 * (1 + 1/(4v)), the bracket the exact values
      actually approach; its relative error falls off like 1/v**2.

    ``leading_only`` keeps just the pi/4 term, whose relative error
    decays like 1/v.
    """
    if variant not in ASYMPTOTIC_VARIANTS:
        raise ValueError(f"variant must be one of {ASYMPTOTIC_VARIANTS}, got {variant!r}")
    ctx = AsymptoticContext.build(v, precision)
    prefactor = Fraction(comb(2 * v - 1, v), 2 ** (2 * v - 2))
    sign = 1 if (v - 1) % 2 == 0 else -1
    if variant == "beta_flipped":
        beta_sign = -sign
    else:
        beta_sign = sign
    with localcontext(hp_context(precision)):
        bracket = ctx.pi / 4
        if not leading_only:
            if variant == "two_term":
                bracket += ctx.pi / (16 * v)
            else:
                half_beta = ctx.beta_half / 2
                bracket += beta_sign * half_beta
                bracket += to_decimal(Fraction(sign * (v // 2), 2 * v), precision + 10)
                bracket -= to_decimal(Fraction(5 * (1 - (-1) ** v), 8 * v), precision + 10)
                bracket += Decimal(3) / (4 * v) * beta_sign * half_beta
        return (
            bracket
            * Decimal(prefactor.numerator)
            / Decimal(prefactor.denominator)
        )


def asymptotic_error_report(
    vs: Iterable[int], precision: int = 40
) -> list[dict]:
    """Relative errors of every asymptotic variant against the exact value.

    One dict per v with the exact value and the relative error of the
    leading term and each bracket variant; used by the report tooling to
    show that the printed bracket does not converge while the two-term
    bracket does.
    """
    rows = []
    for v in vs:
        exact = c2v_vm1_beta(v)
        with localcontext(hp_context(precision)):
            exact_dec = to_decimal(exact, precision + 10)
            entry = {"v": v, "exact": str(exact_dec)}
            leading = c2v_vm1_asymptotic(v, precision, leading_only=True)
            entry["leading_rel_err"] = str(+abs(leading / exact_dec - 1))
            for variant in ASYMPTOTIC_VARIANTS:
                approx = c2v_vm1_asymptotic(v, precision, variant=variant)
                entry[f"{variant}_rel_err"] = str(+abs(approx / exact_dec - 1))
        rows.append(entry)
    return rows
