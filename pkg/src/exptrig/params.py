"""Parameter records and the constants derived from them.

The whole library evaluates one family of integrals over [0, 2pi]:

    exp(p cos x + q sin x) * {sin, cos}(a cos x + b sin x - m x)

so every evaluator consumes the same five numbers: four coefficients
(real or complex) and a non-negative integer harmonic index m.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "RealParams",
    "ComplexParams",
    "OriginalConstants",
    "ImprovedConstants",
    "ComplexConstants",
    "IntermediateFactors",
    "Method",
    "EvalResult",
]


def _require_int_m(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m!r}")


@dataclass(frozen=True)
class RealParams:
    """Real coefficients p, q, a, b and harmonic index m >= 0."""

    p: float
    q: float
    a: float
    b: float
    m: int

    def __post_init__(self) -> None:
        _require_int_m(self.m)
        for name in ("p", "q", "a", "b"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"parameter {name} must be finite, got {v!r}")

    def to_complex(self) -> "ComplexParams":
        return ComplexParams(complex(self.p), complex(self.q), complex(self.a), complex(self.b), self.m)


@dataclass(frozen=True)
class ComplexParams:
    """Complex coefficients p, q, a, b and harmonic index m >= 0."""

    p: complex
    q: complex
    a: complex
    b: complex
    m: int

    def __post_init__(self) -> None:
        _require_int_m(self.m)
        for name in ("p", "q", "a", "b"):
            v = getattr(self, name)
            if not cmath.isfinite(v):
                raise ValueError(f"parameter {name} must be finite, got {v!r}")

    @property
    def is_real(self) -> bool:
        return self.p.imag == 0 and self.q.imag == 0 and self.a.imag == 0 and self.b.imag == 0

    def to_real(self) -> RealParams:
        if not self.is_real:
            raise ValueError("parameters have nonzero imaginary parts")
        return RealParams(self.p.real, self.q.real, self.a.real, self.b.real, self.m)


@dataclass(frozen=True)
class OriginalConstants:
    """The four constants of the book's closed forms."""

    A: float
    B: float
    C: float
    D: float

    @classmethod
    def from_params(cls, params: RealParams) -> "OriginalConstants":
        p, q, a, b = params.p, params.q, params.a, params.b
        # D carries no minus sign; the 8th-edition minus is itself a typo.
        return cls(
            A=p * p - q * q + a * a - b * b,
            B=2.0 * (p * q + a * b),
            C=p * p + q * q - a * a - b * b,
            D=2.0 * (a * p + b * q),
        )


@dataclass(frozen=True)
class ImprovedConstants:
    """Constants of the compact hypergeometric closed form."""

    A: float
    B: float
    C: float
    D: float

    @classmethod
    def from_params(cls, params: RealParams) -> "ImprovedConstants":
        p, q, a, b = params.p, params.q, params.a, params.b
        return cls(
            A=(p + b) / 2.0,
            B=(a - q) / 2.0,
            C=(p * p + q * q - a * a - b * b) / 4.0,
            D=(a * p + b * q) / 2.0,
        )


@dataclass(frozen=True)
class ComplexConstants:
    """The eight real constants of the complex-parameter closed forms.

    With all imaginary parts zero they reduce to A1=A2=A', B1=-B', B2=B',
    C1=C2=C', D1=-D', D2=D'.
    """

    A1: float
    A2: float
    B1: float
    B2: float
    C1: float
    C2: float
    D1: float
    D2: float

    @classmethod
    def from_params(cls, params: ComplexParams) -> "ComplexConstants":
        pr, pi = params.p.real, params.p.imag
        qr, qi = params.q.real, params.q.imag
        ar, ai = params.a.real, params.a.imag
        br, bi = params.b.real, params.b.imag
        return cls(
            A1=(pr + ai - qi + br) / 2.0,
            A2=(pr - ai + qi + br) / 2.0,
            B1=(pi - ar + qr + bi) / 2.0,
            B2=(pi + ar - qr + bi) / 2.0,
            C1=((pr + ai) ** 2 + (qr + bi) ** 2 - (pi - ar) ** 2 - (qi - br) ** 2) / 4.0,
            C2=((pr - ai) ** 2 + (qr - bi) ** 2 - (pi + ar) ** 2 - (qi + br) ** 2) / 4.0,
            D1=((pi - ar) * (pr + ai) + (qi - br) * (qr + bi)) / 2.0,
            D2=((pi + ar) * (pr - ai) + (qi + br) * (qr - bi)) / 2.0,
        )


@dataclass(frozen=True)
class IntermediateFactors:
    """The two complex factors the contour derivation runs through.

    X = [(p+b) + i(a-q)]/2,  Y = [(p-b) + i(a+q)]/2.
    For real parameters |Y|^2 = [(b-p)^2 + (a+q)^2]/4.
    """

    X: complex
    Y: complex

    @classmethod
    def from_params(cls, params: "RealParams | ComplexParams") -> "IntermediateFactors":
        p, q, a, b = params.p, params.q, params.a, params.b
        return cls(X=((p + b) + 1j * (a - q)) / 2.0, Y=((p - b) + 1j * (a + q)) / 2.0)


class Method(str, Enum):
    """Which closed-form route produced a value."""

    OriginalBessel = "OriginalBessel"
    CorrectedBessel = "CorrectedBessel"
    Hyp0F1Real = "Hyp0F1Real"
    Hyp0F1Complex = "Hyp0F1Complex"


@dataclass(frozen=True)
class EvalResult:
    """A closed-form value plus bookkeeping from the series underneath.

    terms_used sums over every series evaluation in the route;
    truncation_estimate is the largest first-omitted-term magnitude among
    them. imag_residual records the raw imaginary part that was clamped
    to zero for real-parameter sin/cos results (0.0 when no clamp ran).
    """

    value: complex
    method: Method
    terms_used: int
    truncation_estimate: float
    imag_residual: float = 0.0
