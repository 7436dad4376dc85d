"""Command line interface.

Exit codes: 0 when every requested check passes, 1 when a violation or
failed search is found (reported as JSON on stdout), 2 on usage errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import classify as cls
from . import verify as ver
from .group import (
    GroupSpec,
    brute_force_orbits,
    export_pc_presentation,
    from_squaring,
    orbit_count,
    parse_pc_presentation,
)
from .squaring import (
    SearchBudgetExceeded,
    Squaring,
    gammal1_equivalent,
    gl_equivalent,
    sigma_omega,
    singer_squaring,
)


def _parse_order(text: str) -> int:
    if text.startswith("2^"):
        return 1 << int(text[2:])
    return int(text)


def _echo_json(data):
    click.echo(json.dumps(data, indent=2, sort_keys=True))


@click.group()
def main():
    """Groups with exactly three automorphism orbits: construction, orbit
    counting, searches and verification."""


@main.command("classify")
@click.option("--max-order", "max_order", required=True, help="Largest group order, e.g. 512 or 2^9.")
@click.option("--json", "as_json", is_flag=True, help="Emit the full class entries as JSON.")
def classify_cmd(max_order, as_json):
    """List every class up to the given order, with certificates."""
    entries = cls.theorem_list(_parse_order(max_order))
    if as_json:
        _echo_json([e.to_dict() for e in entries])
    else:
        for e in entries:
            click.echo(f"order {e.order:6d}  {e.label:18s} {e.provenance}")
    sys.exit(0)


@main.command("construct", context_settings={"ignore_unknown_options": True})
@click.argument("family")
@click.argument("args", nargs=-1, type=int)
def construct_cmd(family, args):
    """Emit a group model as JSON: A n k | B n 1 | Bexc | homocyclic n | q8."""
    family = family.lower()
    try:
        if family == "a":
            n, k = args
            spec = from_squaring(singer_squaring(n, n, "a", 0, k).squaring)
        elif family == "b":
            n, eps = args
            if eps != 1:
                raise click.UsageError("only the B(n,1) family is constructible here")
            spec = from_squaring(singer_squaring(2 * n, n, "b").squaring)
        elif family == "bexc":
            spec = from_squaring(sigma_omega())
        elif family == "homocyclic":
            (n,) = args
            spec = cls.homocyclic_spec(n)
        elif family == "q8":
            spec = from_squaring(singer_squaring(2, 1, "b").squaring)
        else:
            raise click.UsageError(f"unknown family {family!r}")
    except (ValueError, TypeError) as exc:
        raise click.UsageError(str(exc)) from exc
    _echo_json(spec.to_dict())


@main.command("orbits")
@click.option("--spec", "spec_file", required=True, type=click.Path(exists=True))
@click.option("--oracle", is_flag=True, help="Use the brute-force oracle instead of the pair group.")
def orbits_cmd(spec_file, oracle):
    """Automorphism orbit count of a serialized group model."""
    with open(spec_file) as fh:
        spec = GroupSpec.from_dict(json.load(fh))
    count = brute_force_orbits(spec) if oracle else orbit_count(spec)
    _echo_json({"orbits": count, "method": "oracle" if oracle else "pair-group"})


@main.command("search-nonstandard")
@click.option("--m", "degree", required=True, type=int)
def search_nonstandard_cmd(degree):
    """Run the nonstandard pipeline at the given degree."""
    classes = cls.nonstandard_search(degree)
    payload = []
    for pred in classes:
        entry = pred.to_dict()
        if (pred.squaring.m, pred.squaring.n) == (6, 3):
            witness = gammal1_equivalent(pred.squaring, sigma_omega())
            entry["canonical_witness"] = None if witness is None else [list(w) for w in witness]
        payload.append(entry)
    _echo_json({"m": degree, "classes": payload, "count": len(classes)})


@main.group("verify")
def verify_grp():
    """Exhaustive verification suites."""


@verify_grp.command("numtheory")
@click.option("--max-m", "max_m", default=37, type=int, show_default=True)
def verify_numtheory_cmd(max_m):
    """Difference-set emptiness and the supporting digit bounds."""
    report = ver.numtheory_suite(max_m)
    _echo_json(report)
    sys.exit(1 if report["violations"] else 0)


@verify_grp.command("lemmas")
@click.option("--level", type=click.Choice(["exhaustive", "fast"]), default="exhaustive", show_default=True)
def verify_lemmas_cmd(level):
    """All lemma suites at the requested thoroughness."""
    reports = ver.lemma_suites(level)
    _echo_json(reports)
    sys.exit(1 if any(r["violations"] for r in reports) else 0)


@main.command("equiv")
@click.option("--a", "file_a", required=True, type=click.Path(exists=True))
@click.option("--b", "file_b", required=True, type=click.Path(exists=True))
@click.option("--gl", "use_gl", is_flag=True, help="Search full matrix equivalence instead of semilinear.")
@click.option("--budget", type=int, default=None, help="Node budget for the matrix scan.")
def equiv_cmd(file_a, file_b, use_gl, budget):
    """Equivalence of two serialized squarings."""
    with open(file_a) as fh:
        sq_a = Squaring.from_dict(json.load(fh))
    with open(file_b) as fh:
        sq_b = Squaring.from_dict(json.load(fh))
    try:
        if use_gl:
            witness = gl_equivalent(sq_a, sq_b, budget=budget)
            data = None if witness is None else {"T": list(witness[0]), "U": list(witness[1])}
        else:
            witness = gammal1_equivalent(sq_a, sq_b)
            data = None if witness is None else {"gamma1": list(witness[0]), "gamma2": list(witness[1])}
    except SearchBudgetExceeded as exc:
        _echo_json({"equivalent": None, "error": str(exc)})
        sys.exit(1)
    _echo_json({"equivalent": witness is not None, "witness": data})


@main.command("export")
@click.option("--spec", "spec_file", required=True, type=click.Path(exists=True))
@click.option("--format", "fmt", type=click.Choice(["json", "pc"]), default="json", show_default=True)
def export_cmd(spec_file, fmt):
    """Re-emit a group model as JSON or as a power-commutator presentation."""
    with open(spec_file) as fh:
        spec = GroupSpec.from_dict(json.load(fh))
    if fmt == "json":
        _echo_json(spec.to_dict())
    else:
        text = export_pc_presentation(spec)
        if parse_pc_presentation(text) != spec:
            raise AssertionError("presentation round trip failed")
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()
