"""Command-line front end.

Examples:

    alphagroup eval --metric m.txt --point 0,0,0,0 --d 3,4,0,0
    alphagroup classify --metric m.txt --tol 1e-9
    alphagroup length --metric m.txt --path-in path.csv --mode riemannian
    alphagroup geodesic --metric m.txt --from 0,0,0,0 --to 1,1,0,0 \
        --segments 16 --path-out path.csv
    alphagroup selftest --seed 0

Point and displacement flags take comma-separated tuples; missing
trailing components default to 0.  JSON output renders floats with 17
significant digits and is byte-stable for identical inputs.

Every failure prints a single line `error[<code>]: <message>` to stderr
and exits with that code: 1 parse error, 2 evaluation error or metric
not reducible / negative squared length, 3 internal disagreement between
the expanded and grouped evaluations, 4 geodesic non-convergence (the
result is still printed), 5 selftest failure.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import click

from . import geodesic as geo
from . import metric as met
from . import selftest as st
from .errors import (EvalError, NegativeSquaredLengthError, NotRiemannianError,
                     ParseError)
from .fields import parse_metric_file

EXIT_PARSE = 1
EXIT_EVAL = 2
EXIT_DISAGREEMENT = 3
EXIT_NOT_CONVERGED = 4
EXIT_SELFTEST = 5

_EVAL_AGREEMENT_TOL = 1e-9


def _fail(code: int, message: str):
    line = " ".join(str(message).split())
    click.echo(f"error[{code}]: {line}", err=True)
    sys.exit(code)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _to_json(obj) -> str:
    """Serialize to JSON with floats at full double precision."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, dict):
        inner = ", ".join(f"{json.dumps(k)}: {_to_json(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _parse_tuple4(text: str, flag: str) -> tuple[float, float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or len(parts) > 4 or any(p == "" for p in parts):
        _fail(EXIT_PARSE, f"{flag}: expected 1 to 4 comma-separated numbers, "
                          f"got {text!r}")
    values = []
    for part in parts:
        try:
            values.append(float(part))
        except ValueError:
            _fail(EXIT_PARSE, f"{flag}: invalid number {part!r}")
    values.extend(0.0 for _ in range(4 - len(values)))
    if not all(math.isfinite(v) for v in values):
        _fail(EXIT_PARSE, f"{flag}: components must be finite")
    return tuple(values)


def _load_tensor(path: str) -> met.MetricTensor:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(EXIT_PARSE, f"cannot read metric file: {exc}")
    try:
        return met.MetricTensor.from_definition(parse_metric_file(text))
    except ParseError as exc:
        _fail(EXIT_PARSE, str(exc))


def _alpha_json(value) -> dict:
    return value.to_json()


@click.group()
@click.version_option(package_name="alphagroup")
def main():
    """Evaluate, classify, and measure metrics over four coordinates."""


@main.command("eval")
@click.option("--metric", "metric_path", required=True, metavar="FILE",
              help="Metric-definition file.")
@click.option("--point", default="0,0,0,0", show_default=True,
              help="Evaluation point x,y,z,t.")
@click.option("--d", "displacement", required=True,
              help="Displacement dx,dy,dz,dt.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True)
def cmd_eval(metric_path, point, displacement, fmt):
    """Evaluate the squared line element in expanded and grouped form."""
    tensor = _load_tensor(metric_path)
    p = met.Point4(*_parse_tuple4(point, "--point"))
    d = met.Displacement4(*_parse_tuple4(displacement, "--d"))
    try:
        expanded = met.eval_ds2_expanded(tensor, p, d)
        grouped = met.eval_ds2_grouped(tensor, p, d)
        label = met.classify(tensor)
    except EvalError as exc:
        _fail(EXIT_EVAL, str(exc))
    scale = max(1.0, *(abs(v) for v in (expanded.a, expanded.b,
                                        expanded.c, expanded.d)))
    if not expanded.isclose(grouped, _EVAL_AGREEMENT_TOL * scale):
        _fail(EXIT_DISAGREEMENT,
              f"expanded and grouped evaluations disagree: "
              f"{expanded} vs {grouped}")
    if fmt == "json":
        click.echo(_to_json({"real": expanded.a, "i": expanded.b,
                             "mu": expanded.c, "imu": expanded.d,
                             "class": label.kind.value}))
    else:
        click.echo(f"expanded: {expanded}")
        click.echo(f"grouped:  {grouped}")
        click.echo(f"class:    {label.kind.value}")


@main.command("classify")
@click.option("--metric", "metric_path", required=True, metavar="FILE")
@click.option("--tol", default=1e-9, show_default=True, type=float)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True)
def cmd_classify(metric_path, tol, fmt):
    """Report whether the metric matches the Riemannian/Euclidean pattern."""
    tensor = _load_tensor(metric_path)
    try:
        label = met.classify(tensor, tol=tol)
    except EvalError as exc:
        _fail(EXIT_EVAL, str(exc))
    if fmt == "json":
        click.echo(_to_json({"class": label.kind.value, "tol": label.tol,
                             "offenders": list(label.offenders)}))
    else:
        click.echo(label.kind.value)
        for name in label.offenders:
            click.echo(f"offending component: {name}")


@main.command("length")
@click.option("--metric", "metric_path", required=True, metavar="FILE")
@click.option("--path-in", "path_in", required=True, metavar="CSV",
              help="Polyline CSV with columns x,y,z,t.")
@click.option("--mode", type=click.Choice(["riemannian", "alpha"]),
              required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="json", show_default=True)
def cmd_length(metric_path, path_in, mode, fmt):
    """Length of a polyline under the metric."""
    tensor = _load_tensor(metric_path)
    try:
        text = Path(path_in).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(EXIT_PARSE, f"cannot read path file: {exc}")
    try:
        path = geo.path_from_csv(text)
    except (ParseError, ValueError) as exc:
        _fail(EXIT_PARSE, str(exc))
    try:
        value = geo.curve_length(tensor, path, mode)
    except (NegativeSquaredLengthError, EvalError) as exc:
        _fail(EXIT_EVAL, str(exc))
    if mode == "riemannian":
        payload = {"mode": mode, "real_length": value}
        text_line = f"real length: {value!r}"
    else:
        payload = {"mode": mode, "alpha_length": _alpha_json(value)}
        text_line = f"alpha length: {value}"
    if fmt == "json":
        click.echo(_to_json(payload))
    else:
        click.echo(text_line)


@main.command("geodesic")
@click.option("--metric", "metric_path", required=True, metavar="FILE")
@click.option("--from", "start_text", required=True, help="Start point x,y,z,t.")
@click.option("--to", "end_text", required=True, help="End point x,y,z,t.")
@click.option("--segments", type=int, required=True)
@click.option("--path-out", "path_out", default=None, metavar="CSV",
              help="Write the final polyline to this CSV file.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
              default="json", show_default=True)
def cmd_geodesic(metric_path, start_text, end_text, segments, path_out, fmt):
    """Find a length-minimising path between two points."""
    tensor = _load_tensor(metric_path)
    start = met.Point4(*_parse_tuple4(start_text, "--from"))
    end = met.Point4(*_parse_tuple4(end_text, "--to"))
    if segments < 1:
        _fail(EXIT_PARSE, "--segments must be >= 1")
    try:
        result = geo.find_geodesic(tensor, start, end, segments)
    except (NotRiemannianError, NegativeSquaredLengthError, EvalError) as exc:
        _fail(EXIT_EVAL, str(exc))
    if path_out is not None:
        Path(path_out).write_text(geo.path_to_csv(result.path), encoding="utf-8")
    if fmt == "json":
        click.echo(_to_json({"real_length": result.real_length,
                             "alpha_length": _alpha_json(result.length),
                             "iterations": result.iterations,
                             "converged": result.converged}))
    elif fmt == "csv":
        click.echo(geo.path_to_csv(result.path), nl=False)
    else:
        click.echo(f"real length:  {result.real_length!r}")
        click.echo(f"alpha length: {result.length}")
        click.echo(f"iterations:   {result.iterations}")
        click.echo(f"converged:    {result.converged}")
    if not result.converged:
        _fail(EXIT_NOT_CONVERGED,
              "geodesic search hit the iteration cap before converging")


@main.command("selftest")
@click.option("--seed", type=int, default=0, show_default=True)
def cmd_selftest(seed):
    """Run the embedded randomized invariant suite."""
    results = st.run_selftest(seed)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "ok" if r.passed else "FAIL"
        click.echo(f"{status} {r.name} ({r.cases} cases)")
        if not r.passed:
            click.echo(f"     counterexample: {r.detail} (seed {seed})")
    if failed:
        _fail(EXIT_SELFTEST, f"selftest failed: {failed[0].name}")
    click.echo("all checks passed")


if __name__ == "__main__":
    main()
