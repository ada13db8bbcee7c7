"""Standard-QM reference: exact squared Clebsch-Gordan coefficients.

The closed-form (Racah) expression is evaluated without floating point:
after squaring, every square root collapses to a rational, and the
alternating z-sum shares one z-independent radicand, so cg_squared is the
product of an exact rational prefactor with the square of a rational sum.
Only squares are exposed; sign conventions never enter.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Tuple

from .errors import InvalidQuantumNumberError
from .pathcount import Priors, probability_table
from .selection import allowed_m_pairs, check_triangle


def _check_jm(tj: int, tm: int, label: str) -> None:
    if tj < 0:
        raise InvalidQuantumNumberError(f"{label}: j must be nonnegative")
    if abs(tm) > tj or (tj + tm) % 2:
        raise InvalidQuantumNumberError(
            f"{label}: m must satisfy -j <= m <= j in integer steps"
        )


def cg_squared(tj1: int, tj2: int, tm1: int, tm2: int, tJ: int, tM: int) -> Fraction:
    """Exact square of <j1 j2 m1 m2 | j1 j2 J M>.

    Arguments are doubled integers.  Selection-rule violations give exact 0;
    malformed quantum numbers raise.
    """
    _check_jm(tj1, tm1, "(j1, m1)")
    _check_jm(tj2, tm2, "(j2, m2)")
    _check_jm(tJ, tM, "(J, M)")
    if tm1 + tm2 != tM or not check_triangle(tj1, tj2, tJ):
        return Fraction(0)

    # all of these are integers once the triangle (with integer perimeter)
    # and m-sum rules hold
    f = factorial
    pre = Fraction(
        (tJ + 1)
        * f((tj1 + tj2 - tJ) // 2)
        * f((tJ + tj1 - tj2) // 2)
        * f((tJ + tj2 - tj1) // 2),
        f((tj1 + tj2 + tJ) // 2 + 1),
    )
    radicand = (
        f((tj1 + tm1) // 2)
        * f((tj1 - tm1) // 2)
        * f((tj2 + tm2) // 2)
        * f((tj2 - tm2) // 2)
        * f((tJ + tM) // 2)
        * f((tJ - tM) // 2)
    )

    z_lo = max(0, -(tJ - tj2 + tm1) // 2, -(tJ - tj1 - tm2) // 2)
    z_hi = min((tj1 + tj2 - tJ) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    zsum = Fraction(0)
    for z in range(z_lo, z_hi + 1):
        denom = (
            f(z)
            * f((tj1 + tj2 - tJ) // 2 - z)
            * f((tj1 - tm1) // 2 - z)
            * f((tj2 + tm2) // 2 - z)
            * f((tJ - tj2 + tm1) // 2 + z)
            * f((tJ - tj1 - tm2) // 2 + z)
        )
        zsum += Fraction(-1 if z % 2 else 1, denom)
    return pre * radicand * zsum * zsum


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    tm10: int
    tm02: int
    p: Fraction
    cg2: Fraction
    delta: Fraction


def delta(priors: Priors) -> List[Tuple[int, int, Fraction]]:
    """|P - CG^2| per allowed (m10, m02) pair, exact."""
    rows = []
    for tm10, tm02, p in probability_table(priors):
        cg2 = cg_squared(
            priors.tj10, priors.tj02, tm10, tm02, priors.tj12, priors.tm12
        )
        rows.append((tm10, tm02, abs(p - cg2)))
    return rows


def convergence_scan(
    tj1: int, tj2: int, tJ: int, tM: int, n_list: Iterable[int]
) -> Tuple[List[ConvergenceRow], List[Tuple[int, str]]]:
    """One row per n per allowed pair (ascending n, descending m10),
    plus a list of (n, reason) for skipped lengths."""
    rows: List[ConvergenceRow] = []
    skipped: List[Tuple[int, str]] = []
    for n in sorted(set(n_list)):
        try:
            priors = Priors(n=n, tj10=tj1, tj02=tj2, tj12=tJ, tm12=tM)
            table = probability_table(priors)
        except (InvalidQuantumNumberError, ArithmeticError, ValueError) as exc:
            skipped.append((n, str(exc)))
            continue
        for tm10, tm02, p in table:
            cg2 = cg_squared(tj1, tj2, tm10, tm02, tJ, tM)
            rows.append(ConvergenceRow(n, tm10, tm02, p, cg2, abs(p - cg2)))
    return rows, skipped


def decimal_string(value: Fraction, digits: int = 6) -> str:
    """Round-half-even decimal rendering at a fixed digit count."""
    quantum = Decimal(1).scaleb(-digits)
    with localcontext() as ctx:
        ctx.prec = digits + 32
        d = (Decimal(value.numerator) / Decimal(value.denominator)).quantize(
            quantum, rounding=ROUND_HALF_EVEN
        )
    return str(d)
