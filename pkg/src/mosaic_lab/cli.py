"""Command-line front end: load lattice files, run constructions and checks,
render tables and reports.

Inputs are lattice JSON files or catalog names.  Exit codes are stable per
failure class: 0 all requested checks passed, 1 a check or table diff failed,
2 unusable input (parse/validation errors, unknown names).  Everything is
deterministic; the MOSAIC_LAB_SEED environment variable is ignored.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import catalog as cat
from .bits import bits
from .equivalence import OrthoPair, functor_E, is_orthomodular_mosaic, reconstruct_lattice
from .errors import MissingOrtho, MosaicLabError
from .hyperstructure import is_associative, verify_lmosaic, verify_mosaic
from .io import (
    diff_table_docs,
    lattice_to_doc,
    parse_lattice_json,
    parse_table_json,
    render_table_ascii,
    table_doc_from_mosaic,
    table_doc_to_json,
)
from .lattice_core import (
    AxiomReport,
    is_modular,
    is_orthomodular,
    orthocomplementations,
    structurally_equal,
)
from .nakano import additive_nakano, multiplicative_nakano, nakano_property_reports

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

ALL_CHECKS = (
    "mosaic",
    "lmosaic",
    "polygroup",
    "modular",
    "ortholattice",
    "orthomodular",
    "roundtrip",
    "nakano-props",
)


def _fail_input(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT_ERROR)


def _load(source: str):
    """Lattice file path or catalog name -> (lattice, ortho or None, name)."""
    try:
        if os.path.exists(source):
            with open(source, "r", encoding="utf-8") as fh:
                return parse_lattice_json(fh.read())
        entry = cat.named(source)
        return entry.lattice, entry.ortho, entry.name
    except MosaicLabError as exc:
        _fail_input(str(exc))


def _witness_labels(l, report: AxiomReport):
    if report.witness is None:
        return None
    return [l.names[i] for i in report.witness]


def _emit(results, l, fmt: str, quiet: bool, header: str):
    ok = all(r.holds for _, r in results)
    if fmt == "json":
        doc = {
            "input": header,
            "ok": ok,
            "checks": [
                {
                    "name": name,
                    "holds": r.holds,
                    "witness": _witness_labels(l, r),
                    "reason": r.reason,
                }
                for name, r in results
            ],
        }
        click.echo(json.dumps(doc, indent=2))
    elif not quiet:
        for name, r in results:
            if r.holds:
                click.echo(f"PASS {name}")
            else:
                w = ",".join(_witness_labels(l, r))
                click.echo(f"FAIL {name} witness=({w}) reason={r.reason}")
    sys.exit(EXIT_OK if ok else EXIT_CHECK_FAILED)


@click.group()
def main():
    """Finite lattice / Nakano mosaic laboratory."""


@main.command()
@click.argument("source")
def validate(source: str):
    """Parse and validate a lattice file (or catalog name)."""
    l, ortho, name = _load(source)
    click.echo(
        f"ok: {name}: {l.size} elements, bottom={l.names[l.bottom]}, top={l.names[l.top]}, "
        f"ortho={'yes' if ortho is not None else 'no'}"
    )
    sys.exit(EXIT_OK)


def _set_str(l, mask: int) -> str:
    return "{" + ",".join(l.names[z] for z in bits(mask)) + "}"


@main.command()
@click.argument("source")
@click.option("--additive/--multiplicative", "additive", default=True, help="table flavor")
@click.option("--format", "fmt", type=click.Choice(["ascii", "json"]), default="ascii")
@click.option("--diff", "diff_path", default=None, help="golden table JSON to diff against")
@click.option("--golden", "golden_path", default=None, help="write the recomputed table JSON here")
@click.option("--quiet", is_flag=True)
def table(source, additive, fmt, diff_path, golden_path, quiet):
    """Print the Nakano multioperation grid of a lattice."""
    l, _, name = _load(source)
    flavor = "additive" if additive else "multiplicative"
    nm = additive_nakano(l) if additive else multiplicative_nakano(l)
    doc = table_doc_from_mosaic(f"{name} {flavor}", l.names, nm.mosaic, provenance="recomputed")
    if golden_path:
        with open(golden_path, "w", encoding="utf-8") as fh:
            fh.write(table_doc_to_json(doc))
        if not quiet:
            click.echo(f"wrote {golden_path}")
    if diff_path:
        try:
            with open(diff_path, "r", encoding="utf-8") as fh:
                other = parse_table_json(fh.read())
            diffs = diff_table_docs(doc, other)
        except (OSError, MosaicLabError) as exc:
            _fail_input(str(exc))
        if fmt == "json":
            click.echo(json.dumps({"input": name, "diff": diffs}, indent=2))
        elif not quiet:
            for d in diffs:
                click.echo(
                    f"cell ({d['row']},{d['col']}): recomputed {{{','.join(d['recomputed'])}}}"
                    f" vs {{{','.join(d['other'])}}}"
                )
            click.echo(f"{len(diffs)} differing cell(s)")
        sys.exit(EXIT_OK if not diffs else EXIT_CHECK_FAILED)
    if fmt == "json":
        click.echo(table_doc_to_json(doc).rstrip("\n"))
    elif not quiet:
        click.echo(render_table_ascii(doc, "+" if additive else "*"), nl=False)
    sys.exit(EXIT_OK)


def _ortho_list(l, ortho):
    return [ortho] if ortho is not None else orthocomplementations(l)


def _run_checks(l, ortho, names):
    results = []
    add = additive_nakano(l)
    if "mosaic" in names:
        got = verify_mosaic(add.mosaic.op)
        for r in got.reports:
            results.append((f"mosaic.{r.axiom}", r))
    if "lmosaic" in names:
        for r in verify_lmosaic(add.mosaic):
            results.append((f"lmosaic.{r.axiom}", r))
    if "polygroup" in names:
        assoc = is_associative(add.mosaic.op)
        if assoc.holds:
            results.append(("polygroup", assoc))
        else:
            x, y, z = assoc.witness
            op = add.mosaic.op
            lhs = _set_str(l, op.right_extend(x, op.cell(y, z)))
            rhs = _set_str(l, op.left_extend(op.cell(x, y), z))
            reason = f"{l.names[x]}+({l.names[y]}+{l.names[z]})={lhs} != ({l.names[x]}+{l.names[y]})+{l.names[z]}={rhs}"
            results.append(("polygroup", AxiomReport("associative", False, assoc.witness, reason)))
    if "modular" in names:
        results.append(("modular", is_modular(l)))
    if "ortholattice" in names:
        pis = _ortho_list(l, ortho)
        if pis:
            results.append(("ortholattice", AxiomReport("ortholattice", True)))
        else:
            results.append(
                ("ortholattice", AxiomReport("ortholattice", False, (), "no orthocomplementation"))
            )
    if "orthomodular" in names or "roundtrip" in names:
        pis = _ortho_list(l, ortho)
        if not pis:
            raise MissingOrtho("input has no ortho block and no discoverable orthocomplementation")
        for k, pi in enumerate(pis):
            tag = "" if len(pis) == 1 else f"[pi{k}]"
            pair = OrthoPair(l, pi)
            if "orthomodular" in names:
                results.append((f"orthomodular{tag}", is_orthomodular(l, pi)))
                results.append((f"orthomodular-mosaic{tag}", is_orthomodular_mosaic(functor_E(pair))))
            if "roundtrip" in names:
                rebuilt = reconstruct_lattice(functor_E(pair))
                ok = structurally_equal(rebuilt.lattice, l) and rebuilt.pi == pi
                results.append(
                    (
                        f"roundtrip{tag}",
                        AxiomReport("roundtrip", True)
                        if ok
                        else AxiomReport("roundtrip", False, (), "reconstruction differs"),
                    )
                )
    if "nakano-props" in names:
        for flavor, nm in (("additive", add), ("multiplicative", multiplicative_nakano(l))):
            for r in nakano_property_reports(nm):
                results.append((f"nakano.{flavor}.{r.axiom}", r))
    return results


@main.command()
@click.argument("source")
@click.option("--checks", "checks", default=None, help="comma-separated subset of: " + ",".join(ALL_CHECKS))
@click.option("--format", "fmt", type=click.Choice(["ascii", "json"]), default="ascii")
@click.option("--quiet", is_flag=True)
def check(source, checks, fmt, quiet):
    """Run axiom checks; exit 0 iff all hold."""
    l, ortho, name = _load(source)
    if checks is None:
        requested = [c for c in ALL_CHECKS if c not in ("orthomodular", "roundtrip")]
        if _ortho_list(l, ortho):
            requested += ["orthomodular", "roundtrip"]
    else:
        requested = [c.strip() for c in checks.split(",") if c.strip()]
        unknown = [c for c in requested if c not in ALL_CHECKS]
        if unknown:
            _fail_input(f"unknown checks: {', '.join(unknown)}")
    try:
        results = _run_checks(l, ortho, requested)
    except MissingOrtho as exc:
        _fail_input(str(exc))
    _emit(results, l, fmt, quiet, name)


@main.command()
@click.argument("source")
@click.option("--format", "fmt", type=click.Choice(["ascii", "json"]), default="ascii")
def orthocomplements(source, fmt):
    """List every orthocomplementation of the lattice."""
    l, _, name = _load(source)
    pis = orthocomplementations(l)
    if fmt == "json":
        doc = {
            "input": name,
            "count": len(pis),
            "orthocomplementations": [
                [[l.names[x], l.names[pi(x)]] for x in range(l.size) if x <= pi(x)] for pi in pis
            ],
        }
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(f"{name}: {len(pis)} orthocomplementation(s)")
        for k, pi in enumerate(pis):
            pairs = " ".join(f"{l.names[x]}<->{l.names[pi(x)]}" for x in range(l.size) if x <= pi(x))
            click.echo(f"  pi{k}: {pairs}")
    sys.exit(EXIT_OK)


@main.command()
@click.argument("source")
@click.option("--format", "fmt", type=click.Choice(["ascii", "json"]), default="ascii")
@click.option("--quiet", is_flag=True)
def roundtrip(source, fmt, quiet):
    """Reconstruct the lattice from its Nakano mosaic and compare."""
    l, ortho, name = _load(source)
    try:
        results = _run_checks(l, ortho, ["roundtrip"])
    except MissingOrtho as exc:
        _fail_input(str(exc))
    _emit(results, l, fmt, quiet, name)


@main.command()
@click.argument("name", required=False)
@click.option("--enumerate", "enum_n", type=int, default=None, help="census of all n-element lattices")
@click.option("-o", "--out", "outdir", default=".", help="directory for exported files")
@click.option("--format", "fmt", type=click.Choice(["ascii", "json"]), default="ascii")
def catalog(name, enum_n, outdir, fmt):
    """Export a named lattice as JSON, or print an enumeration census."""
    if (name is None) == (enum_n is None):
        _fail_input("need exactly one of NAME or --enumerate n")
    if enum_n is not None:
        try:
            rows = cat.census(enum_n)
        except MosaicLabError as exc:
            _fail_input(str(exc))
        if fmt == "json":
            click.echo(json.dumps({"n": enum_n, "classes": rows}, indent=2))
        else:
            click.echo(f"n={enum_n}: {len(rows)} lattice class(es)")
            click.echo("id       modular ortho om      covers")
            for r in rows:
                om = ",".join(str(v) for v in r["orthomodular"]) or "-"
                covers = " ".join(f"{a}<{b}" for a, b in r["covers"])
                click.echo(f"{r['id']:<8} {str(r['modular']):<7} {r['ortho_count']:<5} {om:<7} {covers}")
        sys.exit(EXIT_OK)
    try:
        entry = cat.named(name)
    except MosaicLabError as exc:
        _fail_input(str(exc))
    doc = lattice_to_doc(entry.lattice, entry.ortho, entry.name)
    path = os.path.join(outdir, f"{entry.name}.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    click.echo(f"wrote {path}")
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
