"""Command-line front end.

    oqa check  {oqa|nonuple|hopf|qt|weakr} REF [--json]
    oqa build  {thm35|thm36|thm37|radford|tensor-oqa|bicrossed|cor39} REF... [--output PATH]
    oqa export matrix REF [--order SPEC] [--format {csv,json}] [--set N=Q] [--output PATH]
    oqa eval   REF --set NAME=RATIONAL [--set ...] [--output PATH]
    oqa catalog {list | export NAME} [--output PATH]

REF is a file path, ``-`` for stdin, or ``catalog:NAME``.  Every verb
validates its inputs through the owning checker before acting.  Exit status:
0 when all verdicts pass, 1 on a verdict failure, 2 on input or validation
errors; errors are mirrored as a JSON object on stderr.  Human-readable check
output streams one line per axiom as the checks complete; with ``--json`` the
full report is emitted atomically instead.  The environment variable
OQA_CATALOG_DIR overrides the location of the expected-data files.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog as catalog_mod
from . import serialize
from .algebra import AlgebraError
from .catalog import CatalogError, OrderingSpec, catalog_get, matrix_of
from .hopf import (
    bicrossed_coproduct,
    check_hopf,
    check_quasitriangular,
    check_weak_rmatrix,
    cor39_oqa,
)
from .nonuple import build_thm35, build_thm36, build_thm37, check_nonuple
from .oriented import check_oqa, radford_double, tensor_oqa
from .reports import CertificationError
from .scalars import EvaluationError, ScalarError

INPUT_ERRORS = (
    CatalogError,
    AlgebraError,
    ScalarError,
    EvaluationError,
    json.JSONDecodeError,
    OSError,
    ValueError,
    KeyError,
)


class VerdictFailure(Exception):
    """A checker reported failures; exit status 1."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.subject)


def _fail(message, exc_type="input-error"):
    sys.stderr.write(
        serialize.dumps({"error": {"type": exc_type, "message": message}})
    )


def _read_ref(ref):
    if ref == "-":
        return json.load(sys.stdin)
    with open(ref, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load(ref, kind=None):
    """Load an object from a catalog name or a JSON file."""
    if ref.startswith("catalog:"):
        fixture = catalog_get(ref[len("catalog:"):])
        return fixture.object, fixture
    data = _read_ref(ref)
    return serialize.from_json(data, kind), None


def _write_output(text, path):
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(report, as_json, stream_lines=True):
    if as_json:
        sys.stdout.write(serialize.dumps(report.to_json()))
    elif not stream_lines:
        sys.stdout.write(str(report) + "\n")
    else:
        sys.stdout.write(f"  => {'PASS' if report.passed else 'FAIL'}\n")
    if not report.passed:
        raise VerdictFailure(report)


def _streaming_printer(enabled):
    if not enabled:
        return None

    def printer(verdict):
        sys.stdout.write(f"  {verdict}\n")
        sys.stdout.flush()

    return printer


def _require(report, as_json):
    """Validate an input object; failure is a verdict failure (exit 1)."""
    if not report.passed:
        if as_json:
            sys.stdout.write(serialize.dumps(report.to_json()))
        else:
            sys.stdout.write(str(report) + "\n")
        raise VerdictFailure(report)


def cmd_check(args):
    as_json = args.json
    stream = _streaming_printer(not as_json)
    if not as_json:
        sys.stdout.write(f"checking {args.kind} {args.ref}\n")
    if args.kind == "oqa":
        obj, _ = _load(args.ref, "oqa")
        report = check_oqa(obj, on_verdict=stream)
    elif args.kind == "nonuple":
        obj, _ = _load(args.ref, "nonuple")
        report = check_nonuple(obj, on_verdict=stream)
    elif args.kind == "hopf":
        obj, _ = _load(args.ref, "hopf")
        report = check_hopf(obj, on_verdict=stream)
    elif args.kind == "qt":
        hopf, coupling = _load_qt_subject(args.ref)
        _require(check_hopf(hopf), as_json)
        report = check_quasitriangular(hopf, coupling, on_verdict=stream)
    else:
        left, right, coupling = _load_weakr_subject(args.ref)
        _require(check_hopf(left), as_json)
        _require(check_hopf(right), as_json)
        report = check_weak_rmatrix(left, right, coupling, on_verdict=stream)
    _emit_report(report, as_json)


def _load_qt_subject(ref):
    if ref.startswith("catalog:"):
        fixture = catalog_get(ref[len("catalog:"):])
        if fixture.kind != "hopf" or "coupling" not in fixture.aux:
            raise CatalogError(f"{fixture.name} carries no universal coupling")
        return fixture.object, fixture.aux["coupling"]
    data = _read_ref(ref)
    hopf = serialize.hopf_from_json(data["hopf"])
    resolver = serialize.Resolver()
    resolver.add(hopf.algebra)
    coupling = serialize.tensor_from_json(data["p"], resolver)
    return hopf, coupling


def _load_weakr_subject(ref):
    if ref.startswith("catalog:"):
        fixture = catalog_get(ref[len("catalog:"):])
        if fixture.kind != "weak-r":
            raise CatalogError(f"{fixture.name} is not a weak coupling fixture")
        return fixture.aux["left"], fixture.aux["right"], fixture.object
    data = _read_ref(ref)
    left = serialize.hopf_from_json(data["left"])
    right = serialize.hopf_from_json(data["right"])
    resolver = serialize.Resolver()
    resolver.add(left.algebra)
    resolver.add(right.algebra)
    coupling = serialize.tensor_from_json(data["r"], resolver)
    return left, right, coupling


def _loaded_oqa(ref):
    obj, _ = _load(ref, "oqa")
    report = check_oqa(obj)
    if not report.passed:
        raise VerdictFailure(report)
    return obj


def _loaded_nonuple(ref):
    obj, _ = _load(ref, "nonuple")
    report = check_nonuple(obj)
    if not report.passed:
        raise VerdictFailure(report)
    return obj


def _loaded_certified_hopf(ref):
    obj, fixture = _load(ref, "hopf")
    report = check_hopf(obj)
    if not report.passed:
        raise VerdictFailure(report)
    return obj, fixture


def _loaded_tensor(ref):
    if ref.startswith("catalog:"):
        fixture = catalog_get(ref[len("catalog:"):])
        if fixture.kind in ("weak-r", "tensor"):
            return fixture.object
        raise CatalogError(f"{fixture.name} is not a tensor element")
    return serialize.tensor_from_json(_read_ref(ref), serialize.Resolver())


def cmd_build(args):
    refs = args.refs
    arity = {"thm35": 2, "thm36": 1, "thm37": 1, "radford": 1,
             "tensor-oqa": 2, "bicrossed": 3, "cor39": (3, 5)}[args.construction]
    if isinstance(arity, tuple):
        if len(refs) not in arity:
            raise CatalogError(
                f"{args.construction} takes {' or '.join(map(str, arity))} references"
            )
    elif len(refs) != arity:
        raise CatalogError(f"{args.construction} takes {arity} reference(s)")

    if args.construction == "thm35":
        result = build_thm35(_loaded_nonuple(refs[0]), _loaded_nonuple(refs[1]))
    elif args.construction == "thm36":
        result = build_thm36(_loaded_nonuple(refs[0]))
    elif args.construction == "thm37":
        result = build_thm37(_loaded_oqa(refs[0]))
    elif args.construction == "radford":
        result = radford_double(_loaded_oqa(refs[0]))
    elif args.construction == "tensor-oqa":
        result = tensor_oqa(_loaded_oqa(refs[0]), _loaded_oqa(refs[1]))
    elif args.construction == "bicrossed":
        left, _ = _loaded_certified_hopf(refs[0])
        right, _ = _loaded_certified_hopf(refs[1])
        result = bicrossed_coproduct(left, right, _loaded_tensor(refs[2]))
    else:
        left, left_fixture = _loaded_certified_hopf(refs[0])
        right, right_fixture = _loaded_certified_hopf(refs[1])
        if len(refs) == 3:
            if not (left_fixture and right_fixture):
                raise CatalogError(
                    "three-reference cor39 needs catalog Hopf fixtures with couplings"
                )
            p = left_fixture.aux["coupling"]
            p2 = right_fixture.aux["coupling"]
            weak = _loaded_tensor(refs[2])
        else:
            p = _loaded_tensor(refs[2])
            p2 = _loaded_tensor(refs[3])
            weak = _loaded_tensor(refs[4])
        result = cor39_oqa(left, right, p, p2, weak)
    _write_output(serialize.dumps(serialize.to_json(result)), args.output)


def _parse_assignments(pairs):
    assignment = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise CatalogError(f"--set expects NAME=RATIONAL, got {pair!r}")
        name, _, value = pair.partition("=")
        assignment[name.strip()] = Fraction(value.strip())
    return assignment


def _export_subject(ref):
    if ref.startswith("catalog:"):
        fixture = catalog_get(ref[len("catalog:"):])
        if fixture.kind in ("oqa", "nonuple"):
            return fixture.object.r
        if fixture.kind in ("weak-r", "tensor"):
            return fixture.object
        raise CatalogError(f"{fixture.name} has no tensor to export")
    data = _read_ref(ref)
    kind = serialize.detect_kind(data)
    obj = serialize.from_json(data, kind)
    if kind in ("oqa", "nonuple"):
        return obj.r
    if kind == "tensor":
        return obj
    raise CatalogError(f"cannot export a matrix from a {kind} bundle")


def cmd_export(args):
    element = _export_subject(args.ref)
    assignment = _parse_assignments(args.set)
    if assignment:
        element = element.substitute(assignment)
    ordering = OrderingSpec.parse(args.order) if args.order else OrderingSpec()
    nrows, ncols, cells = matrix_of(element, ordering)
    if args.format == "csv":
        lines = []
        for row in range(nrows):
            lines.append(
                ",".join(str(cells.get((row, col), "0")) for col in range(ncols))
            )
        _write_output("\n".join(lines) + "\n", args.output)
    else:
        payload = {
            "rows": nrows,
            "cols": ncols,
            "ordering": ordering.short(),
            "cells": [
                {"row": row + 1, "col": col + 1, "c": str(cells[(row, col)])}
                for (row, col) in sorted(cells)
            ],
        }
        _write_output(serialize.dumps(payload), args.output)


def cmd_eval(args):
    assignment = _parse_assignments(args.set)
    if args.ref.startswith("catalog:"):
        fixture = catalog_get(args.ref[len("catalog:"):])
        obj = fixture.object
        if fixture.kind == "matrix":
            raise CatalogError("expected-matrix fixtures hold text, not scalars; export them instead")
    else:
        obj = serialize.from_json(_read_ref(args.ref))
    evaluated = obj.substitute(assignment)
    _write_output(serialize.dumps(serialize.to_json(evaluated)), args.output)


def cmd_catalog(args):
    if args.action == "list":
        lines = []
        for name in catalog_mod.catalog_names():
            if name == "mn_oqa":
                lines.extend(["mn_oqa(2)", "mn_oqa(3)"])
            elif name == "trivial_oqa":
                lines.extend(f"trivial_oqa({a})" for a in sorted(catalog_mod._ALGEBRAS))
            else:
                lines.append(name)
        _write_output("\n".join(sorted(lines)) + "\n", args.output)
        return
    fixture = catalog_get(args.name)
    if fixture.kind == "matrix":
        payload = fixture.object
    else:
        payload = serialize.to_json(fixture.object)
    _write_output(serialize.dumps(payload), args.output)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oqa",
        description="exact checks and constructions for oriented quantum algebra structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run an axiom checker on a bundle")
    check.add_argument("kind", choices=["oqa", "nonuple", "hopf", "qt", "weakr"])
    check.add_argument("ref", help="file path, '-' for stdin, or catalog:NAME")
    check.add_argument("--json", action="store_true", help="emit the report as JSON")
    check.set_defaults(func=cmd_check)

    build = sub.add_parser("build", help="run a construction and emit the result bundle")
    build.add_argument(
        "construction",
        choices=["thm35", "thm36", "thm37", "radford", "tensor-oqa", "bicrossed", "cor39"],
    )
    build.add_argument("refs", nargs="+", help="input references")
    build.add_argument("--output", help="write to a file instead of stdout")
    build.set_defaults(func=cmd_build)

    export = sub.add_parser("export", help="render a two-leg element as a matrix")
    export_sub = export.add_subparsers(dest="what", required=True)
    matrix = export_sub.add_parser("matrix")
    matrix.add_argument("ref")
    matrix.add_argument("--order", help="row-first (default), row-second, col-first, col-second")
    matrix.add_argument("--format", choices=["csv", "json"], default="csv")
    matrix.add_argument("--set", action="append", metavar="NAME=RATIONAL")
    matrix.add_argument("--output")
    matrix.set_defaults(func=cmd_export)

    evaluate = sub.add_parser("eval", help="substitute parameter values and re-emit")
    evaluate.add_argument("ref")
    evaluate.add_argument("--set", action="append", metavar="NAME=RATIONAL", required=True)
    evaluate.add_argument("--output")
    evaluate.set_defaults(func=cmd_eval)

    cat = sub.add_parser("catalog", help="list or export built-in fixtures")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cat_list = cat_sub.add_parser("list")
    cat_list.add_argument("--output")
    cat_list.set_defaults(func=cmd_catalog)
    cat_export = cat_sub.add_parser("export")
    cat_export.add_argument("name")
    cat_export.add_argument("--output")
    cat_export.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except VerdictFailure:
        return 1
    except CertificationError as err:
        _fail(str(err), "certification-failure")
        sys.stdout.write(serialize.dumps(err.report.to_json()))
        return 1
    except INPUT_ERRORS as err:
        _fail(f"{type(err).__name__}: {err}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
