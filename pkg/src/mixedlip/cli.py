"""Command-line front end: reports, comparison verdicts, SVG, numeric oracle.

Exit codes: analyze/family/svg/oracle exit 0 on success and 2 on parse
errors; compare exits 0 (equivalent), 3 (not equivalent), 4 (inconclusive).
All JSON output is byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from typing import Optional, Sequence, Tuple

import click
import numpy as np

from mixedlip.analysis import Analysis, analyze
from mixedlip.arcs import (
    DEFAULT_RADII,
    IDENTICAL_TOL,
    RESIDUAL_TOL,
    ArcError,
    estimate_contact,
)
from mixedlip.invariants import compare, family_check
from mixedlip.poly import PolyError, parse
from mixedlip.svg import braid_svg, newton_svg

SCHEMA_VERSION = 1

_EXIT_PARSE = 2
_EXIT_NOT_EQUIVALENT = 3
_EXIT_INCONCLUSIVE = 4


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MIXEDLIP_THREADS", "1")))
    except ValueError:
        return 1


def _parse_or_exit(text: str):
    try:
        return parse(text)
    except PolyError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(_EXIT_PARSE)


def _parse_radii(spec: Optional[str]) -> Tuple[float, ...]:
    if spec is None:
        return DEFAULT_RADII
    try:
        a, b, n = spec.split(":")
        return tuple(np.geomspace(float(a), float(b), int(n)).tolist())
    except ValueError:
        click.echo(f"bad --radii spec {spec!r}; expected a:b:n", err=True)
        sys.exit(_EXIT_PARSE)


def _emit(payload: dict, json_path: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    click.echo(text, nl=False)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(a: Analysis) -> dict:
    body = a.to_json()
    return {"schema": SCHEMA_VERSION, **body}


@click.group()
def main() -> None:
    """Bilipschitz invariants of plane mixed-polynomial germs."""


@main.command("analyze")
@click.argument("poly")
@click.option("--grid", default=1024, show_default=True, help="slice grid size")
@click.option("--json", "json_path", default=None, help="also write JSON here")
def cmd_analyze(poly: str, grid: int, json_path: Optional[str]) -> None:
    """Full invariant report for one polynomial."""
    f = _parse_or_exit(poly)
    a = analyze(f, grid_size=grid)
    _emit(_report(a), json_path)


@main.command("compare")
@click.argument("poly_a")
@click.argument("poly_b")
@click.option("--grid", default=1024, show_default=True)
@click.option(
    "--assert-link-type",
    type=click.Choice(["trivial-knot", "hopf"]),
    default=None,
    help="caller-supplied link identification (trusted, not verified)",
)
@click.option("--json", "json_path", default=None)
def cmd_compare(
    poly_a: str,
    poly_b: str,
    grid: int,
    assert_link_type: Optional[str],
    json_path: Optional[str],
) -> None:
    """Decide bilipschitz equivalence of two germs."""
    fa = _parse_or_exit(poly_a)
    fb = _parse_or_exit(poly_b)
    va = analyze(fa, grid_size=grid)
    vb = analyze(fb, grid_size=grid)
    verdict = compare(va, vb, assert_link_type)
    _emit({"schema": SCHEMA_VERSION, **verdict.to_json()}, json_path)
    if verdict.decision == "not-bilipschitz-equivalent":
        sys.exit(_EXIT_NOT_EQUIVALENT)
    if verdict.decision == "inconclusive":
        sys.exit(_EXIT_INCONCLUSIVE)


@main.command("family")
@click.argument("poly_f")
@click.argument("poly_theta")
@click.option("--json", "json_path", default=None)
def cmd_family(poly_f: str, poly_theta: str, json_path: Optional[str]) -> None:
    """Check triviality of the deformation family f + s*theta."""
    f = _parse_or_exit(poly_f)
    theta = _parse_or_exit(poly_theta)
    verdict = family_check(f, theta)
    _emit({"schema": SCHEMA_VERSION, **verdict.to_json()}, json_path)


@main.command("svg")
@click.argument("poly")
@click.option(
    "--what",
    type=click.Choice(["newton", "braid"]),
    default="newton",
    show_default=True,
)
@click.option("--face", default=1, show_default=True, help="face index (braid)")
@click.option("--grid", default=1024, show_default=True)
@click.option("--svg", "svg_path", default=None, help="output path (default stdout)")
def cmd_svg(
    poly: str, what: str, face: int, grid: int, svg_path: Optional[str]
) -> None:
    """Render the boundary diagram or one face's strand diagram."""
    f = _parse_or_exit(poly)
    a = analyze(f, grid_size=grid)
    if what == "newton":
        text = newton_svg(a.f, a.gamma)
    else:
        if not 1 <= face <= a.gamma.n_faces:
            click.echo(f"face {face} out of range", err=True)
            sys.exit(_EXIT_PARSE)
        text = braid_svg(a.link_data, face)
    if svg_path:
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("oracle")
@click.argument("poly")
@click.option("--pair", nargs=2, type=int, required=True, help="component indices")
@click.option("--grid", default=1024, show_default=True)
@click.option("--radii", default=None, help="schedule a:b:n (geometric)")
@click.option("--pairs", default=32, show_default=True, help="matched-angle pairs")
@click.option("--tol-residual", default=RESIDUAL_TOL, show_default=True)
@click.option("--tol-identical", default=IDENTICAL_TOL, show_default=True)
@click.option("--csv", "csv_path", default=None, help="dump (r, distance) pairs")
@click.option("--json", "json_path", default=None)
def cmd_oracle(
    poly: str,
    pair: Tuple[int, int],
    grid: int,
    radii: Optional[str],
    pairs: int,
    tol_residual: float,
    tol_identical: float,
    csv_path: Optional[str],
    json_path: Optional[str],
) -> None:
    """Numeric contact estimate between two link components."""
    f = _parse_or_exit(poly)
    a = analyze(f, grid_size=grid)
    n = len(a.link_data.components)
    c1, c2 = pair
    if not (0 <= c1 < n and 0 <= c2 < n):
        click.echo(f"component index out of range (have {n})", err=True)
        sys.exit(_EXIT_PARSE)
    schedule = _parse_radii(radii)
    try:
        est = estimate_contact(
            f,
            a.gamma,
            a.link_data,
            c1,
            c2,
            n_pairs=pairs,
            radii=schedule,
            residual_tol=tol_residual,
            identical_tol=tol_identical,
            n_jobs=_threads(),
        )
    except ArcError as exc:
        click.echo(f"oracle failed: {exc}", err=True)
        sys.exit(1)
    payload = {"schema": SCHEMA_VERSION, "pair": [c1, c2], **est.to_json()}
    if math.isinf(est.q_hat):
        payload["qHat"] = "infinity"
    _emit(payload, json_path)
    if csv_path:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["radius", "distance"])
        for r, d in est.data:
            writer.writerow([repr(r), repr(d)])
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())


if __name__ == "__main__":
    main()
