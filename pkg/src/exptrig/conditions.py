"""Exact predicates for the sign-error regions of the original closed forms.

Three independent branch-cut flips can occur when the original formulas
recombine principal half-integer powers; each has an exact condition on
(p, q, a, b). For odd m an odd number of simultaneous flips negates the
whole result, and the combined region reduces to two clauses built from
one ratio constant K. Equality comparisons are exact float comparisons:
the conditions are exact-arithmetic statements, and callers sitting
within rounding distance of a boundary (p = -bK etc.) should expect
either answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .params import RealParams

__all__ = [
    "SignErrorReport",
    "case1_predicate",
    "case2_predicate",
    "case3_predicate",
    "k_constant",
    "overall_sign_error",
    "build_report",
]


@dataclass(frozen=True)
class SignErrorReport:
    """Per-case flip flags plus the combined verdict for one parameter point.

    case3 is reported False with y_is_zero set when Y = 0 (a = -q and
    p = b), where the original formulas are inapplicable outright.
    flip_applies is overall AND m odd: even m absorbs every flip.
    """

    case1: bool
    case2: bool
    case3: bool
    k_constant: float
    overall: bool
    flip_applies: bool
    y_is_zero: bool


def _x_is_zero(p: float, q: float, a: float, b: float) -> bool:
    return a == q and p == -b


def case1_predicate(p: float, q: float, a: float, b: float) -> bool:
    """Flip in combining X^(m/2) * conj(Y)^(m/2) into (X conj(Y))^(m/2), m odd."""
    if _x_is_zero(p, q, a, b):
        # X = 0: both sides are 0, no sign error possible.
        return False
    if ((abs(q) > abs(a)) or (q == -abs(a) and q != 0)) and p < -b * a / q:
        return True
    if q > abs(a) and p == -b * a / q:
        return True
    if q == 0 and a == 0 and p < -abs(b):
        return True
    return False


def case2_predicate(p: float, q: float, a: float, b: float) -> bool:
    """Flip in combining X^(1/2) * Y^(1/2) into sqrt(X Y)."""
    if _x_is_zero(p, q, a, b):
        return False
    if ((abs(a) > abs(q)) or (a == abs(q) and a != 0)) and p < -b * q / a:
        return True
    if a < -abs(q) and p == -b * q / a:
        return True
    if a == 0 and q == 0 and p < -abs(b):
        return True
    return False


def case3_predicate(p: float, q: float, a: float, b: float) -> bool:
    """Flip in combining Y^(-m/2) * conj(Y)^(-m/2): Y a negative real.

    Raises DomainError when a = -q and p = b (Y = 0; the quantity the
    predicate is about does not exist there). build_report converts that
    into the y_is_zero flag instead.
    """
    if a == -q and p == b:
        raise DomainError("Y = 0 (a = -q and p = b): case 3 is undefined")
    return a == -q and p < b


def k_constant(a: float, q: float) -> float:
    """The ratio constant K of the combined condition.

    q/a when |a| >= |q| with a != 0; a/q when |q| >= |a| with q != 0;
    -1 when both vanish. At |a| = |q| != 0 the two branches agree.
    """
    if a == 0 and q == 0:
        return -1.0
    if abs(a) >= abs(q) and a != 0:
        return q / a
    return a / q


def overall_sign_error(p: float, q: float, a: float, b: float) -> bool:
    """True iff the original closed form for f carries an overall flip (odd m).

    Equals the odd-parity combination of the three case predicates:
    p < -bK, or p = -bK with a < -|q| or q > |a|.
    """
    thr = -b * k_constant(a, q)
    if p < thr:
        return True
    return p == thr and (a < -abs(q) or q > abs(a))


def build_report(params: RealParams) -> SignErrorReport:
    """Evaluate every predicate for one parameter point, m-parity aware."""
    p, q, a, b = params.p, params.q, params.a, params.b
    y_is_zero = a == -q and p == b
    case3 = False if y_is_zero else case3_predicate(p, q, a, b)
    overall = overall_sign_error(p, q, a, b)
    return SignErrorReport(
        case1=case1_predicate(p, q, a, b),
        case2=case2_predicate(p, q, a, b),
        case3=case3,
        k_constant=k_constant(a, q),
        overall=overall,
        flip_applies=overall and params.m % 2 == 1,
        y_is_zero=y_is_zero,
    )
