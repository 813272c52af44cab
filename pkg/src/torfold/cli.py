"""Command-line entry point: ad-hoc operations, verification suites, service.

Exit status contract: 0 success / all assertions pass, 1 a verified
property was falsified (the report carries the witness), 2 usage or input
error. Reports are deterministic JSON; a human summary goes to standard
output (standard error when the report itself is printed to stdout).
"""

from __future__ import annotations

import json
import logging
import os
import sys

import click

from .errors import FoldingUndefinedError, TorfoldError
from .periodic import (
    admissibility_check,
    build_AQ,
    build_gamma_infinity,
    fold,
    orbit_mutate,
    periodic_from_path,
    periodic_to_json,
)
from .quiver import mutate, quiver_from_path, quiver_to_json
from .seeds import (
    build_window_seed,
    initial_orbit_seed,
    mutate_seed,
    orbit_mutate_seed,
    seed_to_json,
)
from .suites import DEFAULT_DEPTH, DEFAULT_SEED, DEFAULT_TRIALS, SUITES

log = logging.getLogger("torfold")


def _fail(message: str, code: int = 2):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_seq(seq: str):
    out = []
    for part in seq.split(","):
        part = part.strip()
        if not part:
            continue
        out.append(int(part) if part.lstrip("-").isdigit() else part)
    if not out:
        _fail("--seq is empty")
    return out


def _parse_window(window: str):
    try:
        a, b = window.split(":")
        return int(a), int(b)
    except ValueError:
        _fail(f"--window must be 'a:b', got {window!r}")


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        log.info("report written to %s", out)
    else:
        click.echo(text, nl=False)


@click.group()
def main():
    """Exact-arithmetic workbench for quiver mutation and folding."""
    level = os.environ.get("TORFOLD_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))


@main.command("mutate")
@click.option("--quiver", "quiver_path", required=True, type=click.Path(exists=True))
@click.option("--seq", required=True, help="comma-separated vertex ids")
@click.option("--out", type=click.Path(), default=None)
def mutate_cmd(quiver_path, seq, out):
    """Apply a mutation sequence to a finite ice quiver."""
    try:
        q = quiver_from_path(quiver_path)
        for z in _parse_seq(seq):
            q = mutate(q, z)
    except TorfoldError as exc:
        _fail(str(exc))
    _emit(quiver_to_json(q), out)


@main.command("orbit-mutate")
@click.option("--periodic", "periodic_path", type=click.Path(exists=True), default=None)
@click.option("--quiver", "quiver_path", type=click.Path(exists=True), default=None,
              help="cycle orientation; its periodic line quiver is built first")
@click.option("--seq", required=True, help="comma-separated orbit ids")
@click.option("--out", type=click.Path(), default=None)
def orbit_mutate_cmd(periodic_path, quiver_path, seq, out):
    """Apply an orbit-mutation sequence to a periodic quiver."""
    try:
        pq = _load_periodic(periodic_path, quiver_path)
        for k in _parse_seq(seq):
            pq = orbit_mutate(pq, k)
    except TorfoldError as exc:
        _fail(str(exc))
    payload = periodic_to_json(pq)
    payload["admissibility"] = admissibility_check(pq)
    _emit(payload, out)


def _load_periodic(periodic_path, quiver_path):
    if periodic_path and quiver_path:
        _fail("give --periodic or --quiver, not both")
    if periodic_path:
        return periodic_from_path(periodic_path)
    if quiver_path:
        return build_AQ(quiver_from_path(quiver_path))
    _fail("one of --periodic/--quiver is required")


@main.command("fold")
@click.option("--periodic", "periodic_path", type=click.Path(exists=True), default=None)
@click.option("--quiver", "quiver_path", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None)
def fold_cmd(periodic_path, quiver_path, out):
    """Fold a periodic quiver onto its site quotient."""
    try:
        pq = _load_periodic(periodic_path, quiver_path)
        folded = fold(pq)
    except FoldingUndefinedError as exc:
        click.echo(
            json.dumps({"error": str(exc), "violations": exc.violations}, indent=2),
            err=True,
        )
        sys.exit(1)
    except TorfoldError as exc:
        _fail(str(exc))
    _emit(quiver_to_json(folded), out)


@main.command("cluster")
@click.option("--periodic", "periodic_path", type=click.Path(exists=True), default=None)
@click.option("--n", "n", type=int, default=None,
              help="use the alternating strip with frozen partners, period 2n")
@click.option("--window", default=None, help="a:b window of the infinite alternating quiver")
@click.option("--seq", required=True, help="comma-separated vertex/orbit ids")
@click.option("--out", type=click.Path(), default=None)
def cluster_cmd(periodic_path, n, window, seq, out):
    """Mutate a seed along a sequence and print the resulting cluster."""
    chosen = [x for x in (periodic_path, n, window) if x is not None]
    if len(chosen) != 1:
        _fail("give exactly one of --periodic/--n/--window")
    try:
        if window is not None:
            a, b = _parse_window(window)
            s = build_window_seed(a, b)
            for v in _parse_seq(seq):
                s = mutate_seed(s, v)
            payload = seed_to_json(s)
        else:
            pq = build_gamma_infinity(n) if n is not None else periodic_from_path(periodic_path)
            os_ = initial_orbit_seed(pq)
            for k in _parse_seq(seq):
                os_ = orbit_mutate_seed(os_, k)
            payload = {
                "periodic": periodic_to_json(os_.pquiver),
                "cluster": {str(site): p.as_str() for site, p in os_.cluster.items()},
                "history": [str(k) for k in os_.history],
            }
    except TorfoldError as exc:
        _fail(str(exc))
    _emit(payload, out)


@main.command("verify")
@click.option("--suite", required=True, type=click.Choice(sorted(SUITES)))
@click.option("--n", type=int, default=3, show_default=True)
@click.option("--depth", type=int, default=DEFAULT_DEPTH, show_default=True)
@click.option("--trials", type=int, default=DEFAULT_TRIALS, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--periodic", "periodic_path", type=click.Path(exists=True), default=None)
@click.option("--quiver", "quiver_path", type=click.Path(exists=True), default=None)
@click.option("--cycle", "cycle_path", type=click.Path(exists=True), default=None,
              help="alias of --quiver: cycle orientation fed through its line quiver")
@click.option("--out", type=click.Path(), default=None)
def verify_cmd(suite, n, depth, trials, seed, periodic_path, quiver_path, cycle_path, out):
    """Run a named verification suite and emit its JSON report."""
    quiver_path = quiver_path or cycle_path
    try:
        if suite == "involution":
            report = SUITES[suite](trials=max(trials, 1000), seed=seed)
        elif suite == "foldability":
            pq = None
            if periodic_path or quiver_path:
                pq = _load_periodic(periodic_path, quiver_path)
            report = SUITES[suite](pq=pq, depth=depth, trials=trials, seed=seed)
        elif suite == "cluster-folding":
            report = SUITES[suite](n=n, depth=depth, trials=trials, seed=seed)
        elif suite == "flip-mutation":
            report = SUITES[suite](depth=depth, seed=seed)
        elif suite == "exchange-identities":
            report = SUITES[suite](n=n)
        else:  # ymonomial
            report = SUITES[suite](seed=seed)
    except TorfoldError as exc:
        _fail(str(exc))
    summary_stream = sys.stderr if out is None else sys.stdout
    for check in report["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        print(f"[{status}] {report['suite']}::{check['name']}", file=summary_stream)
    print(
        f"suite {report['suite']}: {'PASS' if report['passed'] else 'FAIL'}",
        file=summary_stream,
    )
    _emit(report, out)
    sys.exit(0 if report["passed"] else 1)


@main.command("serve")
@click.option("--port", type=int, default=8642, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
def serve_cmd(port, host):
    """Run the interactive explorer service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
