"""Power-series evaluation of I_m and 0F1 on complex arguments.

Both series are entire, so plain Taylor summation with factorial-squared
term decay is adequate for every finite argument this library meets.
Terms are built incrementally from the previous term (never from
standalone factorials), partial sums use Kahan compensation, and the
modified Bessel series is summed in its factored form

    I_m(z) = (z/2)^m / m! * sum_k (z^2/4)^k / (k! (m+1)_k)

which shares its tail with the 0F1 series term for term. That keeps the
two routes bit-for-bit consistent under the heavy cancellation that sets
in for arguments near the imaginary axis.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import ConvergenceError

__all__ = ["SeriesResult", "bessel_i", "hyp0f1"]

# Stop once two consecutive terms are each below TERM_EPS times the
# running partial sum; give up at MAX_TERMS.
TERM_EPS = 1e-17
MAX_TERMS = 500


@dataclass(frozen=True)
class SeriesResult:
    """Converged series value with term count and first-omitted-term size."""

    value: complex
    terms_used: int
    truncation_estimate: float


def _sum_ratio_series(w: complex, b1: int, label: str) -> tuple[complex, int, float]:
    """Kahan-sum 1 + w/(1*b1) + ... with term ratio w/((k+1)(b1+k)).

    Returns (sum, terms_used, |first omitted term|). Raises
    ConvergenceError if MAX_TERMS is hit or the terms go non-finite.
    """
    s = complex(1.0, 0.0)
    comp = complex(0.0, 0.0)
    term = complex(1.0, 0.0)
    below = 0
    k = 0
    while True:
        term = term * w / ((k + 1) * (b1 + k))
        k += 1
        if not cmath.isfinite(term):
            raise ConvergenceError(f"{label}: series terms overflowed at k={k} (|w|={abs(w):.3g})")
        mag = abs(term)
        if mag == 0.0 or mag < TERM_EPS * abs(s):
            below += 1
        else:
            below = 0
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
        if below >= 2:
            first_omitted = abs(term * w / ((k + 1) * (b1 + k)))
            return s, k + 1, first_omitted
        if k >= MAX_TERMS:
            raise ConvergenceError(
                f"{label}: no convergence within {MAX_TERMS} terms (|w|={abs(w):.3g}); "
                "argument too large for the series policy"
            )


def hyp0f1(b1: int, z: complex) -> SeriesResult:
    """Confluent hypergeometric limit function 0F1(; b1; z).

    Series sum_k z^k / (k! (b1)_k) with (b1)_k the Pochhammer symbol,
    b1 a positive integer.
    """
    if not isinstance(b1, int) or isinstance(b1, bool) or b1 < 1:
        raise ValueError(f"b1 must be a positive integer, got {b1!r}")
    s, used, omitted = _sum_ratio_series(complex(z), b1, "hyp0f1")
    return SeriesResult(value=s, terms_used=used, truncation_estimate=omitted)


def bessel_i(m: int, z: complex) -> SeriesResult:
    """Modified Bessel function of the first kind, integer order m >= 0.

    Series sum_k (z/2)^(m+2k) / (k! (m+k)!), summed as
    (z/2)^m/m! times the matching 0F1-style tail in (z/2)^2.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"order m must be a non-negative integer, got {m!r}")
    zh = complex(z) / 2.0
    prefix = complex(1.0, 0.0)
    for j in range(1, m + 1):
        prefix = prefix * zh / j
    if prefix == 0:
        # z = 0 with m > 0: every term vanishes.
        if zh == 0:
            return SeriesResult(value=complex(0.0, 0.0), terms_used=1, truncation_estimate=0.0)
        raise ConvergenceError(f"bessel_i: prefactor (z/2)^m/m! underflowed for m={m}")
    s, used, omitted = _sum_ratio_series(zh * zh, m + 1, "bessel_i")
    return SeriesResult(value=prefix * s, terms_used=used, truncation_estimate=abs(prefix) * omitted)
