"""Acceptance suite: one test per criterion, each printing a PASS line.

Tolerances follow the convention used throughout: "within max(rtol*|v|,
atol)" against the oracle value, with exactly-zero structured components
treated as the known zero-component exception (a sign flip on a zero
component is unobservable and the affected book formula is still correct
there).
"""

import cmath
import math
import time

import numpy as np
from click.testing import CliRunner

from exptrig import (
    ComplexParams,
    IntermediateFactors,
    RealParams,
    bessel_i,
    case1_predicate,
    case2_predicate,
    case3_predicate,
    eval_complex_cos,
    eval_complex_sin,
    eval_corrected_original_cos,
    eval_corrected_original_sin,
    eval_improved_cos,
    eval_improved_sin,
    eval_original_cos,
    eval_original_sin,
    hyp0f1,
    oracle_cos,
    oracle_sin,
    power_combination_flips,
)
import exptrig.catalog as cat
from exptrig.cli import main as cli_main


def _report(name, elapsed, extra=""):
    print(f"ACCEPTANCE {name}: PASS in {elapsed:.2f}s {extra}".rstrip())


def test_criterion_1_real_oracle_sweep():
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(200):
        rp = RealParams(*(float(v) for v in rng.uniform(-5, 5, 4)), int(rng.integers(0, 9)))
        for ev, orc in ((eval_improved_sin, oracle_sin), (eval_improved_cos, oracle_cos)):
            v = ev(rp).value
            o = orc(rp).value
            err = abs(v - o)
            tol = max(1e-10 * abs(o), 1e-12)
            worst = max(worst, err / tol)
            assert err <= tol, f"{rp}: err {err:.3e} > tol {tol:.3e}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    _report("1 real oracle sweep (200 pts)", elapsed, f"worst margin {worst:.3f}")


def test_criterion_2_complex_oracle_sweep():
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(200):
        v8 = rng.uniform(-3, 3, 8)
        cp = ComplexParams(complex(v8[0], v8[1]), complex(v8[2], v8[3]),
                           complex(v8[4], v8[5]), complex(v8[6], v8[7]),
                           int(rng.integers(0, 7)))
        for ev, orc in ((eval_complex_sin, oracle_sin), (eval_complex_cos, oracle_cos)):
            v = ev(cp).value
            o = orc(cp).value
            err = abs(v - o)
            tol = max(1e-9 * abs(o), 1e-11)
            worst = max(worst, err / tol)
            assert err <= tol, f"{cp}: err {err:.3e} > tol {tol:.3e}"
    elapsed = time.perf_counter() - t0
    assert elapsed < 20.0
    _report("2 complex oracle sweep (200 pts)", elapsed, f"worst margin {worst:.3f}")


def test_criterion_3_sign_error_region_grid():
    t0 = time.perf_counter()
    grid = np.linspace(-3.0, 3.0, 61)
    flipped_set = set()
    expected_set = set()
    zero_cos_points = 0
    for i, p in enumerate(grid):
        for j, b in enumerate(grid):
            if p == b:
                continue  # Y = 0 line: original form inapplicable
            rp = RealParams(float(p), 0.0, 0.0, float(b), 1)
            oc = oracle_cos(rp).value.real
            ec = eval_original_cos(rp).value.real
            scale = max(abs(oc), abs(ec))
            if scale < 1e-9:
                # cos component exactly zero (the b = -p line): the flip,
                # if predicted, is unobservable and the formula's zero is
                # still correct; excluded from the sign dichotomy
                zero_cos_points += 1
                assert abs(p + b) < 1e-12
                continue
            if p < b:
                expected_set.add((i, j))
            if abs(ec + oc) <= 1e-9 * scale:
                flipped_set.add((i, j))
            else:
                assert abs(ec - oc) <= 1e-9 * scale, f"p={p} b={b}: neither match"
            # sin component is zero on both sides
            es = eval_original_sin(rp).value.real
            osn = oracle_sin(rp).value.real
            assert abs(es) <= 1e-9 * max(1.0, scale)
            assert abs(osn) <= 1e-9 * max(1.0, scale)
    assert flipped_set == expected_set
    elapsed = time.perf_counter() - t0
    _report("3 sign-error region 61x61 grid", elapsed,
            f"flips {len(flipped_set)}, zero-component pts {zero_cos_points}")


def test_criterion_4_predicate_mechanism_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(1)
    for _ in range(10000):
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
        assert c1 + c2 + c3 in (0, 1, 3)
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    _report("4 predicate-mechanism equivalence (10k pts)", elapsed)


def test_criterion_5_correction_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    checked = 0
    while checked < 1000:
        rp = RealParams(*(float(v) for v in rng.uniform(-5, 5, 4)), int(rng.integers(0, 9)))
        if rp.a == -rp.q and rp.p == rp.b:
            continue
        checked += 1
        for corr, impr in ((eval_corrected_original_sin, eval_improved_sin),
                           (eval_corrected_original_cos, eval_improved_cos)):
            c = corr(rp).value
            i = impr(rp).value
            assert abs(c - i) <= max(1e-10 * abs(i), 1e-12), f"{rp}: {c} vs {i}"
    elapsed = time.perf_counter() - t0
    _report("5 correction identity (1000 pts)", elapsed)


def _binding_oracle(entry, args):
    total = 0j
    for coeff, kind, params in entry.binding(*args):
        res = oracle_sin(params) if kind == "sin" else oracle_cos(params)
        total += coeff * res.value
    return total


def _close(x, y, tol=1e-10):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def test_criterion_6_catalog_golden_values():
    t0 = time.perf_counter()
    e = cat.get_entry("GR-3.931-4")
    for pp in (0, 1, -2, 2 - 3j):
        assert cat.gr_3_931_4(pp) == math.pi
        assert _close(_binding_oracle(e, (pp, 1)), math.pi)
        assert _close(_binding_oracle(e, (pp, -1)), math.pi)

    e = cat.get_entry("GR-3.932-1")
    for pp in (1.0, -2.0, 2 - 3j):
        assert cat.gr_3_932_1(pp, 0) == 0
        assert _close(_binding_oracle(e, (pp, 0)), 0)
        for m in (1, 2, 3):
            want = math.pi * pp**m / (2 * math.factorial(m))
            assert _close(cat.gr_3_932_1(pp, m), want)
            assert _close(_binding_oracle(e, (pp, m)), want)

    e = cat.get_entry("GR-3.936-1")
    for pp in (1.0, -1.5, 1j):
        for m in range(6):
            want = 2 * math.pi * pp**m / math.factorial(m)
            assert _close(cat.gr_3_936_1(pp, m), want)
            assert _close(_binding_oracle(e, (pp, m)), want)

    for ename, fn in (("GR-3.936-2", cat.gr_3_936_2), ("GR-3.936-3", cat.gr_3_936_3)):
        e = cat.get_entry(ename)
        for pp in (-2, 0, 1 + 1j):
            for m in range(5):
                assert _close(_binding_oracle(e, (pp, m)), fn(pp, m))

    e = cat.get_entry("GR-3.936-4")
    for p in (1.0, -2 + 1j, 0.5j):
        for sign in (1, -1):
            for m in (0, 1, 2, 5):
                assert cat.gr_3_936_4(p, m, sign) == 0
                assert abs(_binding_oracle(e, (p, m, sign))) <= 1e-10

    e3, e4 = cat.get_entry("GR-3.937-3"), cat.get_entry("GR-3.937-4")
    for p in (-2.0, 0.0, 1.0):
        for q in (-1.0, 0.0, 2.0):
            for m in range(5):
                o3 = _binding_oracle(e3, (p, q, m))
                o4 = _binding_oracle(e4, (p, q, m))
                assert _close(cat.gr_3_937_3_corrected(p, q, m), o3)
                assert _close(cat.gr_3_937_4_corrected(p, q, m), o4)
                if p != 0:
                    # original atan forms flip sign exactly when m odd and p < 0
                    sign = -1.0 if (m % 2 == 1 and p < 0) else 1.0
                    assert _close(cat.gr_3_937_3_original(p, q, m), sign * o3)
                    assert _close(cat.gr_3_937_4_original(p, q, m), sign * o4)
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    _report("6 catalog golden values", elapsed)


def test_criterion_7_special_function_identities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    for _ in range(1000):
        r = 20.0 * math.sqrt(rng.uniform())
        th = rng.uniform(0, 2 * math.pi)
        z = cmath.rect(r, th)
        m = int(rng.integers(0, 11))
        i_m = bessel_i(m, z).value
        assert cmath.isclose(bessel_i(m, z.conjugate()).value, i_m.conjugate(),
                             rel_tol=1e-12, abs_tol=1e-280)
        assert cmath.isclose(bessel_i(m, -z).value, (-1) ** m * i_m,
                             rel_tol=1e-12, abs_tol=1e-280)
        f = hyp0f1(m + 1, z * z / 4)
        assert cmath.isclose(hyp0f1(m + 1, (z * z / 4).conjugate()).value,
                             f.value.conjugate(), rel_tol=1e-12, abs_tol=1e-280)
        if z != 0:
            bridge = (z / 2) ** m / math.factorial(m) * f.value
            assert cmath.isclose(i_m, bridge, rel_tol=1e-12, abs_tol=1e-280)
    elapsed = time.perf_counter() - t0
    _report("7 special-function identities (1000 pts)", elapsed)


def test_criterion_8_complex_reduction_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(8)
    for _ in range(100):
        rp = RealParams(*(float(v) for v in rng.uniform(-5, 5, 4)), int(rng.integers(0, 9)))
        cp = rp.to_complex()
        assert cmath.isclose(eval_complex_sin(cp).value, eval_improved_sin(rp).value,
                             rel_tol=1e-13, abs_tol=0.0)
        assert cmath.isclose(eval_complex_cos(cp).value, eval_improved_cos(rp).value,
                             rel_tol=1e-13, abs_tol=0.0)
    elapsed = time.perf_counter() - t0
    _report("8 complex-to-real reduction (100 pts)", elapsed)


def test_criterion_9_verify_determinism():
    t0 = time.perf_counter()
    first = CliRunner().invoke(cli_main, ["verify", "--seed", "42"])
    second = CliRunner().invoke(cli_main, ["verify", "--seed", "42"])
    assert first.exit_code == 0 and second.exit_code == 0
    assert first.output == second.output
    elapsed = time.perf_counter() - t0
    _report("9 verify determinism", elapsed)
