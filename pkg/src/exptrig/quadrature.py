"""Ground-truth numerical integration of the target integrals.

The integrands are analytic and 2pi-periodic, where the plain equal-weight
trapezoidal rule converges spectrally: doubling the node count roughly
squares the error until rounding takes over. The oracle therefore refines
N = 16, 32, ... (reusing earlier nodes as every second point) and stops
when two successive refinements agree. Sums are accumulated with
math.fsum per component so the noise floor stays at per-point rounding.

This module deliberately never imports the closed-form evaluators: it has
to be able to falsify them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .errors import ConvergenceError, DomainError
from .params import ComplexParams, RealParams

__all__ = ["QuadratureResult", "oracle_f", "oracle_sin", "oracle_cos"]

N_START = 16
N_MAX = 2**20
# Successive refinements must agree to this, relatively above magnitude 1
# and absolutely below it (several target integrals are exactly zero).
RTOL = 1e-12
# Beyond this coefficient budget exp(p cos x + ...) strains binary64;
# refuse rather than quietly degrade.
ENVELOPE = 50.0


@dataclass(frozen=True)
class QuadratureResult:
    """Converged value; error_estimate is the final refinement delta."""

    value: complex
    error_estimate: float
    evaluations: int


def _as_complex_params(params: RealParams | ComplexParams) -> ComplexParams:
    if isinstance(params, RealParams):
        return params.to_complex()
    return params


def _check_envelope(cp: ComplexParams) -> None:
    budget = abs(cp.p) + abs(cp.q) + abs(cp.a) + abs(cp.b)
    if budget > ENVELOPE:
        raise DomainError(
            f"|p|+|q|+|a|+|b| = {budget:.3g} exceeds the oracle envelope {ENVELOPE:g}"
        )


def _csum(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _refinement_levels(fn: Callable[[np.ndarray], np.ndarray],
                       n_start: int = N_START,
                       n_max: int = N_MAX) -> Iterator[tuple[int, complex, int]]:
    """Yield (N, trapezoid value, total evaluations) for N = n_start, 2*n_start, ...

    Midpoints of the previous grid are the only new evaluations per level.
    """
    n = n_start
    step = 2.0 * math.pi / n
    vals = np.asarray(fn(np.arange(n) * step), dtype=complex)
    evals = n
    yield n, (2.0 * math.pi / n) * _csum(vals), evals
    while n < n_max:
        mids = np.asarray(fn((np.arange(n) + 0.5) * step), dtype=complex)
        evals += n
        merged = np.empty(2 * n, dtype=complex)
        merged[0::2] = vals
        merged[1::2] = mids
        vals = merged
        n *= 2
        step *= 0.5
        yield n, (2.0 * math.pi / n) * _csum(vals), evals


def _integrate(fn: Callable[[np.ndarray], np.ndarray]) -> QuadratureResult:
    prev: complex | None = None
    for n, value, evals in _refinement_levels(fn):
        if prev is not None:
            delta = abs(value - prev)
            if delta <= RTOL * max(1.0, abs(value)):
                return QuadratureResult(value=value, error_estimate=delta, evaluations=evals)
        prev = value
    raise ConvergenceError(f"trapezoid refinement did not settle by N = {N_MAX}")


def oracle_f(params: RealParams | ComplexParams) -> QuadratureResult:
    """Direct integration of exp(p cos x + q sin x) e^{i(a cos x + b sin x - m x)}."""
    cp = _as_complex_params(params)
    _check_envelope(cp)
    p, q, a, b, m = cp.p, cp.q, cp.a, cp.b, cp.m

    def fn(x: np.ndarray) -> np.ndarray:
        c, s = np.cos(x), np.sin(x)
        return np.exp(p * c + q * s + 1j * (a * c + b * s - m * x))

    return _integrate(fn)


def oracle_sin(params: RealParams | ComplexParams) -> QuadratureResult:
    """Direct integration of the sin-kind integrand (complex-valued when
    the coefficients are complex)."""
    cp = _as_complex_params(params)
    _check_envelope(cp)
    p, q, a, b, m = cp.p, cp.q, cp.a, cp.b, cp.m

    def fn(x: np.ndarray) -> np.ndarray:
        c, s = np.cos(x), np.sin(x)
        return np.exp(p * c + q * s) * np.sin(a * c + b * s - m * x)

    return _integrate(fn)


def oracle_cos(params: RealParams | ComplexParams) -> QuadratureResult:
    """Direct integration of the cos-kind integrand."""
    cp = _as_complex_params(params)
    _check_envelope(cp)
    p, q, a, b, m = cp.p, cp.q, cp.a, cp.b, cp.m

    def fn(x: np.ndarray) -> np.ndarray:
        c, s = np.cos(x), np.sin(x)
        return np.exp(p * c + q * s) * np.cos(a * c + b * s - m * x)

    return _integrate(fn)
