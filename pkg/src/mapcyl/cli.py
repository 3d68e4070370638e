"""
Command-line interface for mapcyl.

Usage:
    mapcyl eval --fixture identity-line --impl printed --kind cyl --coords 3 --t 1 --s 0.38
    mapcyl verify --fixture punctured-plane --impl corrected
    mapcyl bench --fixture identity-line --grid 1000 --reps 5 --format csv
    mapcyl sample --fixture identity-line --kind base --coords 3 --steps 7

Exit codes: 0 success, 1 a (non-audit) check failed, 2 configuration error.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

import click

from . import verify as checks
from .bench import run_benchmark, sample_trajectory, trajectory_to_csv
from .closed_form import IMPL_NAMES, gamma
from .cylinder import Base, Cyl, to_dict
from .errors import MapCylError
from .homotopy_data import FIXTURE_NAMES, as_point, as_unit, fixture, validate_equivalence
from .reports import (
    bench_report_to_csv,
    bench_report_to_json,
    check_reports_to_csv,
    check_reports_to_json,
    dumps_json,
)

FORMATS = click.Choice(["json", "csv"])


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=not text.endswith("\n"))


def _point(he, kind: str, coords: str, t: Optional[float]):
    try:
        values = [float(c) for c in coords.split(",") if c.strip()]
    except ValueError:
        raise click.BadParameter(f"not a list of numbers: {coords!r}", param_hint="--coords")
    if kind == "cyl":
        if t is None:
            raise click.UsageError("--t is required for a cylinder point")
        return Cyl(as_point(values, he.dim_x), as_unit(t))
    return Base(as_point(values, he.dim_y))


def _run(fn):
    try:
        return fn()
    except MapCylError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


point_options = [
    click.option("--kind", type=click.Choice(["cyl", "base"]), default="cyl", show_default=True),
    click.option("--coords", required=True, help="Comma-separated coordinates, e.g. 3.0 or 2,0."),
    click.option("--t", "t", type=float, default=None, help="Cylinder height (cyl points only)."),
]


def with_point(f):
    for opt in reversed(point_options):
        f = opt(f)
    return f


@click.group()
def main():
    """Strong deformation retraction of a mapping cylinder onto its top."""


@main.command("eval")
@click.option("--fixture", "fixture_name", type=click.Choice(FIXTURE_NAMES), default="identity-line")
@click.option("--impl", type=click.Choice(IMPL_NAMES), default="compositional")
@with_point
@click.option("--s", "s", type=float, required=True)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", default=None)
def eval_cmd(fixture_name, impl, kind, coords, t, s, fmt, out):
    """Evaluate the retraction at a single (p, s)."""
    def go():
        he = fixture(fixture_name)
        p = _point(he, kind, coords, t)
        result = gamma(he, impl, p, s)
        if fmt == "csv":
            return trajectory_to_csv([(s, result)])
        return dumps_json({"fixture": he.name, "impl": impl, "input": to_dict(p),
                           "s": s, "output": to_dict(result)})
    _emit(_run(go), out)


@main.command("verify")
@click.option("--fixture", "fixtures", type=click.Choice(FIXTURE_NAMES), multiple=True,
              help="Repeatable; default all fixtures.")
@click.option("--impl", "impls", type=click.Choice(IMPL_NAMES), multiple=True,
              help="Repeatable; default all implementations.")
@click.option("--n", "n", type=int, default=1000, show_default=True)
@click.option("--grid", type=int, default=64, show_default=True,
              help="Lattice side for differential checks.")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--region", type=click.Choice(list(checks.REGIONS)), default=None)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", default=None)
def verify_cmd(fixtures, impls, n, grid, tol, seed, region, fmt, out):
    """Run the verification suites; exit 1 if any non-audit check fails."""
    def go():
        reports = [checks.check_phi(100, min(tol, 1e-12))]
        for name in fixtures or FIXTURE_NAMES:
            he = fixture(name)
            reports.append(validate_equivalence(he, n, seed, tol))
            reports.extend(checks.run_suite(he, impls or IMPL_NAMES, n, seed, tol, grid, region))
        return reports
    reports = _run(go)
    for r in reports:
        click.echo(r.summary(), err=True)
    _emit(check_reports_to_csv(reports) if fmt == "csv" else check_reports_to_json(reports), out)
    sys.exit(0 if all(r.passed for r in reports if not r.audit) else 1)


@main.command("bench")
@click.option("--fixture", "fixture_name", type=click.Choice(FIXTURE_NAMES), default="identity-line")
@click.option("--impl", "impls", type=click.Choice(IMPL_NAMES), multiple=True,
              help="Repeatable; default all implementations.")
@click.option("--grid", type=int, default=64 * 64, show_default=True,
              help="Number of (p, s) evaluation points.")
@click.option("--reps", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", default=None)
def bench_cmd(fixture_name, impls, grid, reps, seed, fmt, out):
    """Time every implementation on one shared grid."""
    report = _run(lambda: run_benchmark(fixture(fixture_name), impls or IMPL_NAMES, grid, reps, seed))
    _emit(bench_report_to_csv(report) if fmt == "csv" else bench_report_to_json(report), out)


@main.command("sample")
@click.option("--fixture", "fixture_name", type=click.Choice(FIXTURE_NAMES), default="identity-line")
@click.option("--impl", type=click.Choice(IMPL_NAMES), default="compositional")
@with_point
@click.option("--steps", type=int, default=7, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json")
@click.option("--out", default=None)
def sample_cmd(fixture_name, impl, kind, coords, t, steps, fmt, out):
    """Trajectory s -> Gamma(p, s) on an even grid of s."""
    def go():
        he = fixture(fixture_name)
        traj = sample_trajectory(he, impl, _point(he, kind, coords, t), steps)
        if fmt == "csv":
            return trajectory_to_csv(traj)
        return dumps_json([{"s": s, **to_dict(p)} for s, p in traj])
    _emit(_run(go), out)


if __name__ == "__main__":
    main()
