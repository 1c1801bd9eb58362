"""Principal-branch complex arithmetic and branch-cut flip detection.

Everything here fixes one convention once: arguments live in (-pi, pi],
with the negative real axis mapping to +pi. A signed-zero imaginary part
(x - 0j, x < 0) is normalized to +0 before taking the argument, so it sits
on the +pi side of the cut rather than at -pi (which the range excludes).

Combining principal fractional powers is where sign errors come from:
z**a * w**a == (z*w)**a only while arg(z) + arg(w) stays inside the
principal range. ``power_combination_flips`` is the exact predicate for
when it does not.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "BranchDiagnostics",
    "principal_arg",
    "atan2_full",
    "cpow_int",
    "pow_int_zero_zero",
    "pow_int_over_factorial",
    "cpow_half",
    "power_combination_flips",
    "branch_diagnostics",
]


@dataclass(frozen=True)
class BranchDiagnostics:
    """Arguments of two factors and whether their sum stays principal."""

    theta_z: float
    theta_w: float
    sum_in_principal: bool


def principal_arg(z: complex) -> float:
    """Principal argument of z, in (-pi, pi].

    The negative real axis returns exactly +pi; negative-zero components
    are normalized away first so -0j does not fall below the cut.

    Raises DomainError for z = 0 (argument undefined).
    """
    re = z.real + 0.0
    im = z.imag + 0.0
    if re == 0.0 and im == 0.0:
        raise DomainError("argument of 0 is undefined")
    return math.atan2(im, re)


def atan2_full(y: float, x: float) -> float:
    """Four-quadrant inverse tangent; identical to principal_arg(x + iy).

    Raises DomainError at the origin.
    """
    return principal_arg(complex(x, y))


def cpow_int(z: complex, n: int) -> complex:
    """z**n by repeated multiplication (division for n < 0); single-valued.

    Raises DomainError for 0 raised to a non-positive power. A genuine
    0**0 limit must be requested explicitly via pow_int_zero_zero.
    """
    if z == 0 and n <= 0:
        raise DomainError(f"0**{n} is undefined; use pow_int_zero_zero for the 0**0 convention")
    out = complex(1.0, 0.0)
    for _ in range(abs(n)):
        out *= z
    if n < 0:
        out = 1.0 / out
    return out


def pow_int_zero_zero() -> complex:
    """The lim_{z->0} z**0 = 1 convention, opted into explicitly by evaluators."""
    return complex(1.0, 0.0)


def pow_int_over_factorial(z: complex, m: int) -> complex:
    """z**m / m! as the incremental product (z/1)(z/2)...(z/m).

    Same repeated-multiplication semantics as cpow_int, interleaved with
    exact real divisions so it cannot overflow for m beyond 170. m = 0
    returns 1 for every z, which is exactly the z**0 limit convention.
    """
    if m < 0:
        raise DomainError("m must be non-negative")
    if m == 0:
        return pow_int_zero_zero()
    out = complex(1.0, 0.0)
    for j in range(1, m + 1):
        out = out * z / j
    return out


def cpow_half(z: complex, m: int) -> complex:
    """Principal value of z**(m/2): |z|**(m/2) * exp(i*(m/2)*arg z).

    m = 0 returns 1 for any z (including 0, by the z**0 limit convention);
    z = 0 with m > 0 returns 0.
    """
    if m < 0:
        raise DomainError("negative half-integer exponents are not supported")
    if m == 0:
        return pow_int_zero_zero()
    if z == 0:
        return complex(0.0, 0.0)
    half = 0.5 * m
    return abs(z) ** half * cmath.exp(1j * half * principal_arg(z))


def power_combination_flips(z: complex, w: complex) -> bool:
    """True iff arg(z) + arg(w) leaves (-pi, pi].

    When true and the shared exponent is an odd multiple of 1/2,
    z**a * w**a = -(z*w)**a instead of +(z*w)**a.

    The boundary comparison (sum == pi exactly) is an exact float
    comparison and therefore fragile for inputs that land within
    rounding distance of the cut.
    """
    d = branch_diagnostics(z, w)
    return not d.sum_in_principal


def branch_diagnostics(z: complex, w: complex) -> BranchDiagnostics:
    """Arguments of z and w plus the principal-range check on their sum."""
    tz = principal_arg(z)
    tw = principal_arg(w)
    s = tz + tw
    return BranchDiagnostics(theta_z=tz, theta_w=tw, sum_in_principal=(-math.pi < s <= math.pi))
