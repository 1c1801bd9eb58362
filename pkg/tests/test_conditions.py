import numpy as np
import pytest

from exptrig import (
    DomainError,
    IntermediateFactors,
    RealParams,
    build_report,
    case1_predicate,
    case2_predicate,
    case3_predicate,
    k_constant,
    overall_sign_error,
    power_combination_flips,
)


def test_case1_examples():
    # |q| > |a| branch with p below -ba/q
    assert case1_predicate(-1, -2, 1, 1)
    # a = q = 0 with p < -|b|
    assert case1_predicate(-2, 0, 0, 1)
    assert not case1_predicate(5, 0, 1, 0)
    # equality branch: q > |a| and p = -ba/q exactly
    assert case1_predicate(-1.0, 2.0, 1.0, 2.0)


def test_case2_examples():
    assert case2_predicate(-1, 1, 2, 1)
    # a < -|q| with p = -bq/a exactly
    p = -2.0 * 1.0 / -3.0
    assert case2_predicate(p, 1.0, -3.0, 2.0)
    # a = q = 0, b = -1, p < -|b|
    assert case2_predicate(-2, 0, 0, -1)
    assert not case2_predicate(5, 1, 2, 0)


def test_case3_examples():
    assert case3_predicate(0, -1, 1, 1)
    assert not case3_predicate(2, -1, 1, 1)
    with pytest.raises(DomainError):
        case3_predicate(1, -1, 1, 1)


def test_x_zero_forces_cases_false():
    # a = q and p = -b makes X = 0; both half-power products vanish
    assert not case1_predicate(-1, 2, 2, 1)
    assert not case2_predicate(-1, 2, 2, 1)


def test_k_constant():
    assert k_constant(2, 1) == 0.5
    assert k_constant(0, 0) == -1.0
    assert k_constant(3, -3) == -1.0
    assert k_constant(0, 5) == 0.0
    # both defining branches agree exactly at |a| = |q| != 0
    for a, q in [(3, 3), (3, -3), (-2, 2), (-2, -2)]:
        assert q / a == a / q == k_constant(a, q)


def test_overall_examples():
    assert overall_sign_error(-2, 0, 0, 1)       # K = -1, p < b
    assert not overall_sign_error(5, 1, 2, 0)
    # equality clause: q > |a| and p = -bK
    assert overall_sign_error(-1.0, 2.0, 1.0, 2.0)


def test_build_report_examples():
    rep = build_report(RealParams(-2, 0, 0, 1, 1))
    assert (rep.case1, rep.case2, rep.case3) == (True, True, True)
    assert rep.k_constant == -1.0
    assert rep.overall and rep.flip_applies and not rep.y_is_zero

    rep = build_report(RealParams(-2, 0, 0, 1, 2))
    assert rep.overall and not rep.flip_applies

    rep = build_report(RealParams(1, 1, 1, 1, 1))
    assert not (rep.case1 or rep.case2 or rep.case3 or rep.overall)
    assert rep.k_constant == 1.0


def test_build_report_y_zero():
    rep = build_report(RealParams(1, -1, 1, 1, 1))
    assert rep.y_is_zero
    assert rep.case3 is False
    assert not rep.overall


def test_predicates_match_flip_mechanism_and_parity():
    rng = np.random.default_rng(59)
    for _ in range(5000):
        p, q, a, b = (float(v) for v in rng.uniform(-5, 5, 4))
        fac = IntermediateFactors.from_params(RealParams(p, q, a, b, 1))
        if fac.X == 0 or fac.Y == 0:
            continue
        c1 = case1_predicate(p, q, a, b)
        c2 = case2_predicate(p, q, a, b)
        c3 = case3_predicate(p, q, a, b)
        assert c1 == power_combination_flips(fac.X, fac.Y.conjugate())
        assert c2 == power_combination_flips(fac.X, fac.Y)
        assert c3 == power_combination_flips(fac.Y, fac.Y.conjugate())
        count = c1 + c2 + c3
        assert count in (0, 1, 3)
        assert overall_sign_error(p, q, a, b) == (count % 2 == 1)
