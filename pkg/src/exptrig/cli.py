"""Command-line front end.

Subcommands: eval (one closed-form or oracle evaluation), audit
(original-vs-oracle comparison with the sign-error report, JSON lines
or CSV), scan (2-D predicate grid, CSV or JSON lines), verify (catalog
+ random oracle cross-checks), list (catalog contents).

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain or
convergence refusal. Output is deterministic for fixed flags and seed.
"""

from __future__ import annotations

import cmath
import json
import sys
from dataclasses import dataclass
from typing import Iterable

import click
import numpy as np

from . import catalog as cat
from .conditions import SignErrorReport, build_report
from .errors import ConvergenceError, DomainError
from .formulas import (
    eval_complex_cos,
    eval_complex_sin,
    eval_corrected_original_cos,
    eval_corrected_original_sin,
    eval_f_bessel,
    eval_f_hyp,
    eval_improved_cos,
    eval_improved_sin,
    eval_original_cos,
    eval_original_sin,
)
from .params import ComplexParams, EvalResult, RealParams
from .quadrature import oracle_cos, oracle_f, oracle_sin

BOUNDARY_EPS = 1e-12
SWEEP_ATOL_REAL = 1e-12
SWEEP_ATOL_COMPLEX = 1e-11


def _parse_param(text: str) -> complex:
    """Accept 're' or 're+imi' (e.g. -2, 1.5, -1+0.5i, 3i)."""
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    try:
        z = complex(cleaned)
    except ValueError:
        raise click.BadParameter(f"cannot parse {text!r}; expected 're' or 're+imi'")
    if not cmath.isfinite(z):
        raise click.BadParameter(f"parameter {text!r} is not finite")
    return z


class ParamType(click.ParamType):
    name = "number"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        return _parse_param(str(value))


PARAM = ParamType()


def _cjson(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _require_real(values: dict[str, complex], method: str) -> RealParams:
    for name, z in values.items():
        if name != "m" and z.imag != 0:
            raise click.UsageError(
                f"method '{method}' needs real parameters but {name} = {z}; use --method complex"
            )
    return RealParams(values["p"].real, values["q"].real, values["a"].real,
                      values["b"].real, values["m"])


def _param_options(fn):
    for name in ("b", "a", "q", "p"):
        fn = click.option(f"-{name}", name, type=PARAM, default="0", show_default=True,
                          help=f"coefficient {name}, 're' or 're+imi'")(fn)
    return click.option("-m", "m", type=click.IntRange(min=0), default=0, show_default=True,
                        help="harmonic index")(fn)


@click.group()
@click.version_option(package_name="exptrig")
def main() -> None:
    """Evaluate exp(p cos x + q sin x) {sin,cos}(a cos x + b sin x - mx) integrals,
    audit the original closed forms for sign errors, and verify the catalog."""


def _closed_eval(kind: str, method: str, values: dict) -> EvalResult:
    if method == "complex":
        cp = ComplexParams(values["p"], values["q"], values["a"], values["b"], values["m"])
        if kind == "sin":
            return eval_complex_sin(cp)
        if kind == "cos":
            return eval_complex_cos(cp)
        rc = eval_complex_cos(cp)
        rs = eval_complex_sin(cp)
        return EvalResult(
            value=rc.value + 1j * rs.value,
            method=rc.method,
            terms_used=rc.terms_used + rs.terms_used,
            truncation_estimate=max(rc.truncation_estimate, rs.truncation_estimate),
        )
    rp = _require_real(values, method)
    if method == "improved":
        return {"sin": eval_improved_sin, "cos": eval_improved_cos, "f": eval_f_hyp}[kind](rp)
    if method == "original":
        return {"sin": eval_original_sin, "cos": eval_original_cos, "f": eval_f_bessel}[kind](rp)
    # corrected
    if kind == "sin":
        return eval_corrected_original_sin(rp)
    if kind == "cos":
        return eval_corrected_original_cos(rp)
    res = eval_f_bessel(rp)
    flip = -1.0 if build_report(rp).flip_applies else 1.0
    return EvalResult(flip * res.value, res.method, res.terms_used, res.truncation_estimate)


@main.command("eval")
@click.option("--kind", type=click.Choice(["sin", "cos", "f"]), required=True)
@click.option("--method", type=click.Choice(["original", "corrected", "improved", "complex", "oracle"]),
              required=True)
@_param_options
def cmd_eval(kind: str, method: str, p: complex, q: complex, a: complex, b: complex, m: int) -> None:
    """Evaluate one integral; prints a single JSON object."""
    values = {"p": p, "q": q, "a": a, "b": b, "m": m}
    try:
        if method == "oracle":
            cp = ComplexParams(p, q, a, b, m)
            res = {"sin": oracle_sin, "cos": oracle_cos, "f": oracle_f}[kind](cp)
            click.echo(_dump({
                "kind": kind,
                "method": "oracle",
                "value": _cjson(res.value),
                "error_estimate": res.error_estimate,
                "evaluations": res.evaluations,
            }))
            return
        res = _closed_eval(kind, method, values)
        click.echo(_dump({
            "kind": kind,
            "method": res.method.value,
            "value": _cjson(res.value),
            "terms_used": res.terms_used,
            "truncation_estimate": res.truncation_estimate,
        }))
    except (DomainError, ConvergenceError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)


def _parse_grid(text: str, allowed: str = "pqab", max_axes: int = 2) -> list[tuple[str, np.ndarray]]:
    axes: list[tuple[str, np.ndarray]] = []
    for chunk in text.split(","):
        try:
            var, spec = chunk.split("=")
            lo_s, hi_s, n_s = spec.split(":")
            lo, hi, n = float(lo_s), float(hi_s), int(n_s)
        except ValueError:
            raise click.BadParameter(f"bad grid chunk {chunk!r}; expected var=lo:hi:count")
        var = var.strip()
        if var not in allowed:
            raise click.BadParameter(f"grid variable must be one of {','.join(allowed)}, got {var!r}")
        if n < 1:
            raise click.BadParameter("grid count must be >= 1")
        axes.append((var, np.linspace(lo, hi, n)))
    if not axes or len(axes) > max_axes:
        raise click.BadParameter(f"grid needs 1..{max_axes} axes, got {len(axes)}")
    if len({v for v, _ in axes}) != len(axes):
        raise click.BadParameter("grid variables must be distinct")
    return axes


def _grid_points(base: dict[str, float], axes: list[tuple[str, np.ndarray]]) -> Iterable[dict[str, float]]:
    if not axes:
        yield dict(base)
        return
    if len(axes) == 1:
        var, vals = axes[0]
        for v in vals:
            pt = dict(base)
            pt[var] = float(v)
            yield pt
        return
    (v1, a1), (v2, a2) = axes
    for x in a1:
        for y in a2:
            pt = dict(base)
            pt[v1] = float(x)
            pt[v2] = float(y)
            yield pt


@dataclass
class AuditRecord:
    """One audited point: parameter echo, predicate report, three values,
    and the original-vs-oracle verdict."""

    params: RealParams
    report: SignErrorReport
    boundary: bool
    original: complex | None = None
    improved: complex | None = None
    oracle: complex | None = None
    abs_discrepancy: float | None = None
    verdict: str | None = None
    detail: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "params": {"p": self.params.p, "q": self.params.q, "a": self.params.a,
                       "b": self.params.b, "m": self.params.m},
            "report": {
                "case1": self.report.case1,
                "case2": self.report.case2,
                "case3": self.report.case3,
                "k_constant": self.report.k_constant,
                "overall": self.report.overall,
                "flip_applies": self.report.flip_applies,
                "y_is_zero": self.report.y_is_zero,
            },
            "boundary": self.boundary,
            "original": None if self.original is None else _cjson(self.original),
            "improved": None if self.improved is None else _cjson(self.improved),
            "oracle": None if self.oracle is None else _cjson(self.oracle),
            "abs_discrepancy": self.abs_discrepancy,
            "verdict": self.verdict,
            "detail": self.detail,
        }

    CSV_HEADER = ("p,q,a,b,m,case1,case2,case3,k_constant,overall,flip_applies,"
                  "y_is_zero,boundary,original_re,original_im,improved_re,improved_im,"
                  "oracle_re,oracle_im,abs_discrepancy,verdict,detail")

    def to_csv_row(self) -> str:
        def num(v):
            return "" if v is None else repr(v)

        def pair(z):
            return ("", "") if z is None else (repr(z.real), repr(z.imag))

        o_re, o_im = pair(self.original)
        i_re, i_im = pair(self.improved)
        r_re, r_im = pair(self.oracle)
        detail = (self.detail or "").replace(",", ";")
        cells = [repr(self.params.p), repr(self.params.q), repr(self.params.a),
                 repr(self.params.b), str(self.params.m),
                 f"{self.report.case1:d}", f"{self.report.case2:d}", f"{self.report.case3:d}",
                 repr(self.report.k_constant), f"{self.report.overall:d}",
                 f"{self.report.flip_applies:d}", f"{self.report.y_is_zero:d}",
                 f"{self.boundary:d}", o_re, o_im, i_re, i_im, r_re, r_im,
                 num(self.abs_discrepancy), self.verdict or "", detail]
        return ",".join(cells)


def _audit_point(rp: RealParams, kind: str, tol: float) -> AuditRecord:
    report = build_report(rp)
    rec = AuditRecord(
        params=rp,
        report=report,
        boundary=abs(rp.p + rp.b * report.k_constant) < BOUNDARY_EPS * max(1.0, abs(rp.p)),
    )
    try:
        rec.improved = {"sin": eval_improved_sin, "cos": eval_improved_cos, "f": eval_f_hyp}[kind](rp).value
        rec.oracle = {"sin": oracle_sin, "cos": oracle_cos, "f": oracle_f}[kind](rp).value
    except (DomainError, ConvergenceError) as exc:
        rec.detail = f"error: {exc}"
        return rec
    if report.y_is_zero:
        rec.abs_discrepancy = abs(rec.improved - rec.oracle)
        rec.verdict = "OriginalInapplicable"
        return rec
    original = {"sin": eval_original_sin, "cos": eval_original_cos, "f": eval_f_bessel}[kind](rp).value
    rec.original = original
    rec.abs_discrepancy = abs(original - rec.oracle)
    scale = max(abs(original), abs(rec.oracle))
    tol_abs = max(tol * scale, 1e-11)
    agree = abs(original - rec.oracle) <= tol_abs
    flipped = abs(original + rec.oracle) <= tol_abs
    if agree and flipped:
        rec.verdict = "Agree"
        if report.flip_applies:
            rec.detail = "component is zero; predicted flip unobservable"
    elif flipped:
        rec.verdict = "SignFlip"
    elif agree:
        rec.verdict = "Agree"
    else:
        rec.verdict = "SignFlip" if abs(original + rec.oracle) < abs(original - rec.oracle) else "Agree"
        rec.detail = "unclassified discrepancy; neither match within tolerance"
    return rec


@main.command("audit")
@click.option("--kind", type=click.Choice(["sin", "cos", "f"]), default="f", show_default=True)
@click.option("--grid", "grid_spec", type=str, default=None,
              help="sweep 1 or 2 of p,q,a,b: 'p=-3:3:61,b=-3:3:61'")
@click.option("--tol", type=float, default=1e-9, show_default=True,
              help="relative tolerance for the verdict comparison")
@click.option("--json/--csv", "as_json", default=True,
              help="JSON lines (default) or flat CSV")
@_param_options
def cmd_audit(kind: str, grid_spec: str | None, tol: float, as_json: bool,
              p: complex, q: complex, a: complex, b: complex, m: int) -> None:
    """Compare the original formulas against the oracle, point by point."""
    values = {"p": p, "q": q, "a": a, "b": b, "m": m}
    rp = _require_real(values, "audit")
    base = {"p": rp.p, "q": rp.q, "a": rp.a, "b": rp.b}
    axes = _parse_grid(grid_spec) if grid_spec else []
    if not as_json:
        click.echo(AuditRecord.CSV_HEADER)
    for point in _grid_points(base, axes):
        rec = _audit_point(RealParams(point["p"], point["q"], point["a"], point["b"], m), kind, tol)
        click.echo(_dump(rec.to_json_dict()) if as_json else rec.to_csv_row())


@main.command("scan")
@click.option("--grid", "grid_spec", type=str, required=True,
              help="exactly two of p,q,a,b: 'p=-3:3:61,b=-3:3:61'")
@click.option("--csv/--json", "as_csv", default=True,
              help="CSV (default) or JSON lines")
@_param_options
def cmd_scan(grid_spec: str, as_csv: bool,
             p: complex, q: complex, a: complex, b: complex, m: int) -> None:
    """Predicate scan over a 2-D parameter grid."""
    values = {"p": p, "q": q, "a": a, "b": b, "m": m}
    rp = _require_real(values, "scan")
    axes = _parse_grid(grid_spec)
    if len(axes) != 2:
        raise click.UsageError("scan needs exactly two grid variables")
    base = {"p": rp.p, "q": rp.q, "a": rp.a, "b": rp.b}
    if as_csv:
        click.echo("x,y,case1,case2,case3,overall,flip_applies")
    (v1, a1), (v2, a2) = axes
    for x in a1:
        for y in a2:
            pt = dict(base)
            pt[v1] = float(x)
            pt[v2] = float(y)
            rep = build_report(RealParams(pt["p"], pt["q"], pt["a"], pt["b"], m))
            if as_csv:
                click.echo(f"{float(x)!r},{float(y)!r},{rep.case1:d},{rep.case2:d},"
                           f"{rep.case3:d},{rep.overall:d},{rep.flip_applies:d}")
            else:
                click.echo(_dump({"x": float(x), "y": float(y),
                                  "case1": rep.case1, "case2": rep.case2, "case3": rep.case3,
                                  "overall": rep.overall, "flip_applies": rep.flip_applies}))


def _sweep_real(rng: np.random.Generator, samples: int, rtol: float) -> tuple[float, list[str]]:
    worst = 0.0
    offenders: list[str] = []
    for i in range(samples):
        vals = rng.uniform(-5.0, 5.0, size=4)
        m = int(rng.integers(0, 9))
        rp = RealParams(float(vals[0]), float(vals[1]), float(vals[2]), float(vals[3]), m)
        for kind, ev, orc in (("sin", eval_improved_sin, oracle_sin),
                              ("cos", eval_improved_cos, oracle_cos)):
            v = ev(rp).value
            o = orc(rp).value
            margin = abs(v - o) / max(rtol * abs(o), SWEEP_ATOL_REAL)
            worst = max(worst, margin)
            if margin > 1.0:
                offenders.append(f"real sample {i} {kind} p={rp.p:.6g} q={rp.q:.6g} "
                                 f"a={rp.a:.6g} b={rp.b:.6g} m={m}: margin {margin:.3g}")
    return worst, offenders


def _sweep_complex(rng: np.random.Generator, samples: int, rtol: float) -> tuple[float, list[str]]:
    worst = 0.0
    offenders: list[str] = []
    for i in range(samples):
        vals = rng.uniform(-3.0, 3.0, size=8)
        m = int(rng.integers(0, 7))
        cp = ComplexParams(complex(vals[0], vals[1]), complex(vals[2], vals[3]),
                           complex(vals[4], vals[5]), complex(vals[6], vals[7]), m)
        for kind, ev, orc in (("sin", eval_complex_sin, oracle_sin),
                              ("cos", eval_complex_cos, oracle_cos)):
            v = ev(cp).value
            o = orc(cp).value
            margin = abs(v - o) / max(rtol * abs(o), SWEEP_ATOL_COMPLEX)
            worst = max(worst, margin)
            if margin > 1.0:
                offenders.append(f"complex sample {i} {kind} m={m}: margin {margin:.3g}")
    return worst, offenders


@main.command("verify")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--samples", type=int, default=200, show_default=True,
              help="random oracle cross-check points")
@click.option("--tol", type=float, default=1e-10, show_default=True,
              help="catalog and real-sweep relative tolerance; the complex sweep uses 10x this")
@click.option("--complex", "do_complex", is_flag=True, help="add a complex-parameter sweep")
@click.option("--entry", "entry_id", type=str, default=None,
              help="restrict the catalog stage to one entry id")
@click.option("--p-negative", "p_negative", is_flag=True,
              help="expected-failure mode for faithful-original entries: verify the "
                   "predicted sign flips on p < 0 samples")
def cmd_verify(seed: int, samples: int, tol: float, do_complex: bool,
               entry_id: str | None, p_negative: bool) -> None:
    """Verify catalog entries and random points against the oracle."""
    failures: list[str] = []
    try:
        entries = [cat.get_entry(entry_id)] if entry_id else list(cat.ENTRIES)
    except KeyError as exc:
        raise click.UsageError(str(exc))

    if p_negative:
        for entry in entries:
            if entry.corrected or not entry.flip_samples:
                raise click.UsageError(f"{entry.id} is not a faithful-original entry; "
                                       "--p-negative applies to *-original entries")
            findings, bad = cat.check_expected_flips(entry, tol=tol)
            click.echo(f"{entry.id}: expected-failure audit, {len(findings)} findings")
            for line in findings:
                click.echo(f"  {line}")
            failures.extend(bad)
    else:
        click.echo("catalog:")
        for entry in entries:
            res = cat.check_entry(entry, tol=tol)
            status = "ok" if not res.failures else "FAIL"
            click.echo(f"  {entry.id:22s} {status:4s} checks={res.checks:<3d} "
                       f"max_err_eval={res.max_err_eval:.3e} max_err_oracle={res.max_err_oracle:.3e}")
            failures.extend(res.failures)

        if entry_id is None and samples > 0:
            rng = np.random.default_rng(seed)
            worst, bad = _sweep_real(rng, samples, rtol=tol)
            failures.extend(bad)
            click.echo(f"sweep real: n={samples} seed={seed} worst_margin={worst:.3e} "
                       f"{'ok' if not bad else 'FAIL'}")
            if do_complex:
                worst, bad = _sweep_complex(rng, samples, rtol=10 * tol)
                failures.extend(bad)
                click.echo(f"sweep complex: n={samples} seed={seed} worst_margin={worst:.3e} "
                           f"{'ok' if not bad else 'FAIL'}")

    if failures:
        click.echo(f"FAIL: {len(failures)} checks out of tolerance")
        for line in failures:
            click.echo(f"  {line}")
        sys.exit(1)
    click.echo("PASS")


@main.command("list")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def cmd_list(as_json: bool) -> None:
    """List the catalog entries."""
    for entry in cat.ENTRIES:
        if as_json:
            click.echo(_dump({
                "id": entry.id,
                "args": entry.arg_doc,
                "corrected": entry.corrected,
                "restriction": entry.original_restriction,
                "description": entry.description,
            }))
        else:
            click.echo(cat.describe_entry(entry))


if __name__ == "__main__":
    main()
