"""Closed-form evaluators for the integral family

    int_0^{2pi} exp(p cos x + q sin x) {sin, cos}(a cos x + b sin x - m x) dx.

Three routes are provided:

* the original book forms through I_m and principal half-integer powers,
  kept faithful to the letter, which means they reproduce the sign error
  in the regions described by the conditions module;
* the same forms with the parity correction applied where the error
  conditions hold;
* the 0F1 forms, which use only integer powers, carry no sign error,
  need no (b-p)^2 + (a+q)^2 > 0 restriction, and extend to complex
  coefficients.

For real coefficients the 0F1 sin/cos routes are conjugate-exact in IEEE
arithmetic, so their values come out exactly real; the clamp to a real
result is an invariant check, not a numerical fudge.
"""

from __future__ import annotations

import math

from .complexops import cpow_half, pow_int_over_factorial
from .conditions import overall_sign_error
from .errors import ConsistencyError, DomainError
from .params import (
    ComplexConstants,
    ComplexParams,
    EvalResult,
    ImprovedConstants,
    Method,
    OriginalConstants,
    RealParams,
)
from .series import bessel_i, hyp0f1

__all__ = [
    "eval_f_bessel",
    "eval_original_sin",
    "eval_original_cos",
    "eval_corrected_original_sin",
    "eval_corrected_original_cos",
    "eval_f_hyp",
    "eval_improved_sin",
    "eval_improved_cos",
    "eval_complex_sin",
    "eval_complex_cos",
]

TWO_PI = 2.0 * math.pi

# Real-parameter sin/cos results must be real; a larger imaginary residue
# than this means the evaluator itself is broken.
IMAG_RESIDUE_TOL = 1e-10


def eval_f_bessel(params: RealParams) -> EvalResult:
    """The original combined form: f through I_m and half-integer powers.

    f = 2pi [(b-p)^2+(a+q)^2]^(-m/2) (A-iB)^(m/2) I_m(sqrt(C+iD)),
    every fractional power on its principal branch. By construction this
    carries the branch-cut sign error wherever the error conditions hold
    and m is odd. Raises DomainError when (b-p)^2 + (a+q)^2 = 0 (Y = 0).
    """
    k = OriginalConstants.from_params(params)
    m = params.m
    ynorm2 = (params.b - params.p) ** 2 + (params.a + params.q) ** 2
    if ynorm2 == 0.0:
        raise DomainError("original formula inapplicable: (b-p)^2 + (a+q)^2 = 0 (Y = 0)")
    front = ynorm2 ** (-0.5 * m)
    power = cpow_half(complex(k.A, -k.B), m)
    root = cpow_half(complex(k.C, k.D), 1)
    bes = bessel_i(m, root)
    scale = TWO_PI * front
    return EvalResult(
        value=scale * power * bes.value,
        method=Method.OriginalBessel,
        terms_used=bes.terms_used,
        truncation_estimate=scale * abs(power) * bes.truncation_estimate,
    )


def eval_original_sin(params: RealParams) -> EvalResult:
    """Book sin form: Im(f) of the original route, sign error included."""
    f = eval_f_bessel(params)
    return EvalResult(
        value=complex(f.value.imag, 0.0),
        method=Method.OriginalBessel,
        terms_used=f.terms_used,
        truncation_estimate=f.truncation_estimate,
    )


def eval_original_cos(params: RealParams) -> EvalResult:
    """Book cos form: Re(f) of the original route, sign error included."""
    f = eval_f_bessel(params)
    return EvalResult(
        value=complex(f.value.real, 0.0),
        method=Method.OriginalBessel,
        terms_used=f.terms_used,
        truncation_estimate=f.truncation_estimate,
    )


def _corrected(res: EvalResult, params: RealParams) -> EvalResult:
    flip = -1.0 if (params.m % 2 == 1 and overall_sign_error(params.p, params.q, params.a, params.b)) else 1.0
    return EvalResult(
        value=flip * res.value,
        method=Method.CorrectedBessel,
        terms_used=res.terms_used,
        truncation_estimate=res.truncation_estimate,
    )


def eval_corrected_original_sin(params: RealParams) -> EvalResult:
    """Book sin form times (-1)^m wherever the overall error condition holds."""
    return _corrected(eval_original_sin(params), params)


def eval_corrected_original_cos(params: RealParams) -> EvalResult:
    """Book cos form times (-1)^m wherever the overall error condition holds."""
    return _corrected(eval_original_cos(params), params)


def eval_f_hyp(params: RealParams) -> EvalResult:
    """The compact corrected form: f = (2pi/m!) (A'+iB')^m 0F1(; m+1; C'+iD').

    Only integer powers appear, so there is no branch to get wrong, and
    no positivity restriction: this evaluates everywhere, with
    (A'+iB')^m read as 1 when A' = B' = m = 0.
    """
    c = ImprovedConstants.from_params(params)
    m = params.m
    power = pow_int_over_factorial(complex(c.A, c.B), m)
    ser = hyp0f1(m + 1, complex(c.C, c.D))
    return EvalResult(
        value=TWO_PI * power * ser.value,
        method=Method.Hyp0F1Real,
        terms_used=ser.terms_used,
        truncation_estimate=TWO_PI * abs(power) * ser.truncation_estimate,
    )


def _clamp_real(raw: complex, method: Method, terms: int, trunc: float) -> EvalResult:
    if abs(raw.imag) > IMAG_RESIDUE_TOL:
        raise ConsistencyError(
            f"real-parameter result has imaginary residue {raw.imag!r}; evaluator bug"
        )
    return EvalResult(
        value=complex(raw.real, 0.0),
        method=method,
        terms_used=terms,
        truncation_estimate=trunc,
        imag_residual=raw.imag,
    )


def _improved_parts(params: RealParams):
    c = ImprovedConstants.from_params(params)
    m = params.m
    t_minus = pow_int_over_factorial(complex(c.A, -c.B), m)
    t_plus = pow_int_over_factorial(complex(c.A, c.B), m)
    f_minus = hyp0f1(m + 1, complex(c.C, -c.D))
    f_plus = hyp0f1(m + 1, complex(c.C, c.D))
    terms = f_minus.terms_used + f_plus.terms_used
    trunc = math.pi * max(abs(t_minus) * f_minus.truncation_estimate,
                          abs(t_plus) * f_plus.truncation_estimate)
    return t_minus * f_minus.value, t_plus * f_plus.value, terms, trunc


def eval_improved_sin(params: RealParams) -> EvalResult:
    """Corrected sin form: (i pi/m!)[(A'-iB')^m 0F1(-iD') - (A'+iB')^m 0F1(+iD')]."""
    lo, hi, terms, trunc = _improved_parts(params)
    raw = 1j * math.pi * (lo - hi)
    return _clamp_real(raw, Method.Hyp0F1Real, terms, trunc)


def eval_improved_cos(params: RealParams) -> EvalResult:
    """Corrected cos form: (pi/m!)[(A'-iB')^m 0F1(-iD') + (A'+iB')^m 0F1(+iD')]."""
    lo, hi, terms, trunc = _improved_parts(params)
    raw = math.pi * (lo + hi)
    return _clamp_real(raw, Method.Hyp0F1Real, terms, trunc)


def _complex_parts(cparams: ComplexParams):
    c = ComplexConstants.from_params(cparams)
    m = cparams.m
    t1 = pow_int_over_factorial(complex(c.A1, c.B1), m)
    t2 = pow_int_over_factorial(complex(c.A2, c.B2), m)
    f1 = hyp0f1(m + 1, complex(c.C1, c.D1))
    f2 = hyp0f1(m + 1, complex(c.C2, c.D2))
    terms = f1.terms_used + f2.terms_used
    trunc = math.pi * max(abs(t1) * f1.truncation_estimate, abs(t2) * f2.truncation_estimate)
    return t1 * f1.value, t2 * f2.value, terms, trunc


def eval_complex_sin(cparams: ComplexParams) -> EvalResult:
    """Sin integral for complex coefficients, via the split into two
    plain-f integrals: (i pi/m!)[(A1+iB1)^m 0F1(C1+iD1) - (A2+iB2)^m 0F1(C2+iD2)].

    With all imaginary parts zero the constants collapse to the
    real-parameter ones and the value matches eval_improved_sin bit for bit.
    """
    one, two, terms, trunc = _complex_parts(cparams)
    raw = 1j * math.pi * (one - two)
    if cparams.is_real:
        return _clamp_real(raw, Method.Hyp0F1Complex, terms, trunc)
    return EvalResult(raw, Method.Hyp0F1Complex, terms, trunc)


def eval_complex_cos(cparams: ComplexParams) -> EvalResult:
    """Cos integral for complex coefficients; "+" counterpart of the sin split."""
    one, two, terms, trunc = _complex_parts(cparams)
    raw = math.pi * (one + two)
    if cparams.is_real:
        return _clamp_real(raw, Method.Hyp0F1Complex, terms, trunc)
    return EvalResult(raw, Method.Hyp0F1Complex, terms, trunc)
