"""Command-line front end: sectioned input files, subcommands, JSON reports.

Input files are plain text with fixed section order; ``#`` starts a comment:

    [generators]
    a b x
    [relators]
    x^3 b^-2 a^-2
    [inclusion]
    (a b^-1)^1 b^2
    b a (b a^-1)^1
    [basis]            # optional
    names = a u
    a = 1 0
    b = -1 3
    x = 0 2

Every command prints a single JSON report to stdout (byte-identical across
runs on the same input) and exits 0 exactly when the report carries no error
object.  ``--json`` additionally writes the report to a file; ``--plot-data``
dumps support points and hull vertices for external plotting.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .abelian import AbelianizationMap, abelianize_presentation
from .errors import FoxTorsionError, InputFileError, RankUnsupported
from .equivalence import compare_torsion
from .lyon import LyonCase, expected_torsion, lyon_input
from .polytope import (
    affine_dimension,
    newton_polytope,
    polygon_affine_equivalent,
    sfh_polytope,
    support,
)
from .sfh import torus_sfh
from .torsion import TorsionInput, sutured_torsion
from .words import Presentation, parse_word, render_word

_SECTIONS = ("generators", "relators", "inclusion", "basis")


@dataclass
class TorsionFile:
    """Parsed sectioned input: generator names, word strings, optional basis."""

    generators: tuple
    relators: tuple
    inclusion_words: tuple
    basis: Optional[tuple] = None  # (basis names, {generator: exponent vector})


def parse_torsion_file(text):
    sections = {}
    order = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise InputFileError(f"line {lineno}: unknown section [{name}]")
            if name in sections:
                raise InputFileError(f"line {lineno}: duplicate section [{name}]")
            if order and _SECTIONS.index(name) <= _SECTIONS.index(order[-1]):
                raise InputFileError(
                    f"line {lineno}: section [{name}] out of order; expected "
                    f"order {list(_SECTIONS)}"
                )
            sections[name] = []
            order.append(name)
            current = name
            continue
        if current is None:
            raise InputFileError(f"line {lineno}: content before any section header")
        sections[current].append((lineno, line))

    for required in ("generators", "relators", "inclusion"):
        if required not in sections:
            raise InputFileError(f"missing required section [{required}]")

    generators = tuple(
        name for _, line in sections["generators"] for name in line.split()
    )
    if not generators:
        raise InputFileError("section [generators] is empty")
    relators = tuple(line for _, line in sections["relators"])
    inclusion = tuple(line for _, line in sections["inclusion"])

    basis = None
    if "basis" in sections:
        names = None
        images = {}
        for lineno, line in sections["basis"]:
            if "=" not in line:
                raise InputFileError(
                    f"line {lineno}: basis lines must look like 'key = values'"
                )
            key, _, value = line.partition("=")
            key = key.strip()
            fields = value.split()
            if key == "names":
                names = tuple(fields)
            else:
                if key not in generators:
                    raise InputFileError(
                        f"line {lineno}: basis image for unknown generator {key!r}"
                    )
                try:
                    images[key] = tuple(int(f) for f in fields)
                except ValueError:
                    raise InputFileError(
                        f"line {lineno}: non-integer exponent in basis image for {key!r}"
                    ) from None
        if names is None:
            raise InputFileError("section [basis] needs a 'names = ...' line")
        basis = (names, images)
    return TorsionFile(generators, relators, inclusion, basis)


def load_torsion_file(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_torsion_file(fh.read())


def torsion_input_from_file(tfile):
    presentation = Presentation(tfile.generators, tfile.relators)
    inclusion = tuple(
        parse_word(text, presentation.generators) for text in tfile.inclusion_words
    )
    if tfile.basis is not None:
        names, images = tfile.basis
        user = AbelianizationMap(len(names), images, names)
        basis = abelianize_presentation(presentation, user)
    else:
        basis = abelianize_presentation(presentation)
    return TorsionInput(presentation, inclusion, basis)


# ---------------------------------------------------------------------------
# report construction


def _polygon_dict(polygon):
    return {
        "dimension": polygon.dimension,
        "vertices": [list(v) for v in polygon.vertices],
        "edges": [
            {"direction": list(d), "lattice_length": length}
            for d, length in polygon.edges
        ],
        "edge_length_multiset": list(polygon.edge_length_multiset()),
        "doubled_area": polygon.doubled_area(),
        "lattice_point_count": polygon.lattice_point_count(),
    }


def _torsion_body(tclass, names):
    body = {
        "variables": list(names),
        "terms": [
            [list(exps), coeff] for exps, coeff in tclass.representative.sorted_terms()
        ],
        "rendered": tclass.render(names),
        "coefficient_sum": tclass.coefficient_sum(),
        "centrally_symmetric": tclass.is_centrally_symmetric(),
    }
    if tclass.is_zero:
        body["support"] = []
        body["polygon"] = None
        body["sfh_polytope"] = None
        return body
    points = support(tclass)
    body["support"] = [list(p) for p in sorted(points.points)]
    try:
        body["polygon"] = _polygon_dict(newton_polytope(points))
        body["sfh_polytope"] = _polygon_dict(sfh_polytope(tclass))
    except RankUnsupported:
        body["polygon"] = {
            "dimension": affine_dimension(points.points),
            "note": "hull structure unavailable for rank > 2",
        }
        body["sfh_polytope"] = None
    return body


def _witness_dict(witness):
    if witness is None:
        return None
    return {
        "matrix": [list(row) for row in witness.matrix],
        "translation": list(witness.translation),
        "sign": witness.sign,
    }


def _input_echo(tinput):
    basis = tinput.abelianization
    return {
        "generators": list(tinput.presentation.generator_names),
        "relators": [render_word(r) for r in tinput.presentation.relators],
        "inclusion_words": [render_word(w) for w in tinput.inclusion_words],
        "basis": {
            "names": list(basis.basis_names),
            "images": {g: list(v) for g, v in sorted(basis.images.items())},
        },
    }


def _plot_payload(body):
    return {
        "support": body["support"],
        "hull_vertices": (body["polygon"] or {}).get("vertices", []),
        "sfh_polytope_vertices": (body["sfh_polytope"] or {}).get("vertices", []),
    }


# ---------------------------------------------------------------------------
# commands


def cmd_torsion(path):
    tinput = torsion_input_from_file(load_torsion_file(path))
    tclass = sutured_torsion(tinput)
    body = _torsion_body(tclass, tinput.abelianization.basis_names)
    report = {
        "command": "torsion",
        "arguments": {"file": path},
        "input": _input_echo(tinput),
        "torsion": body,
    }
    return report, _plot_payload(body)


def cmd_compare(path1, path2):
    in1 = torsion_input_from_file(load_torsion_file(path1))
    in2 = torsion_input_from_file(load_torsion_file(path2))
    t1 = sutured_torsion(in1)
    t2 = sutured_torsion(in2)
    body1 = _torsion_body(t1, in1.abelianization.basis_names)
    body2 = _torsion_body(t2, in2.abelianization.basis_names)
    verdict = compare_torsion(t1, t2)
    polygons = None
    if not t1.is_zero and not t2.is_zero and t1.rank <= 2 and t2.rank <= 2:
        polygons = polygon_affine_equivalent(
            newton_polytope(support(t1)), newton_polytope(support(t2))
        )
    report = {
        "command": "compare",
        "arguments": {"first": path1, "second": path2},
        "first": {"input": _input_echo(in1), "torsion": body1},
        "second": {"input": _input_echo(in2), "torsion": body2},
        "torsion_verdict": {
            "kind": verdict.kind,
            "reason": verdict.reason,
            "witness": _witness_dict(verdict.witness),
        },
        "polytopes_affine_equivalent": polygons,
    }
    return report, {"first": _plot_payload(body1), "second": _plot_payload(body2)}


def cmd_family(n, surface):
    case = LyonCase(n, surface)
    tinput = lyon_input(case)
    tclass = sutured_torsion(tinput)
    oracle = expected_torsion(case)
    names = tinput.abelianization.basis_names
    body = _torsion_body(tclass, names)
    report = {
        "command": "family",
        "arguments": {"n": n, "surface": surface},
        "input": _input_echo(tinput),
        "torsion": body,
        "expected": {
            "rendered": oracle.render(names),
            "terms": [
                [list(e), c] for e, c in oracle.representative.sorted_terms()
            ],
        },
        "oracle_match": tclass == oracle,
        "uses_positive_side_words": surface == "Sprime",
    }
    return report, _plot_payload(body)


def cmd_sfh_torus(p, q, n):
    table = torus_sfh(p, q, n)
    report = {
        "command": "sfh-torus",
        "arguments": {"p": p, "q": q, "sutures": n},
        "ranks": [[grading, rank] for grading, rank in table.ranks],
        "total_rank": table.total_rank,
    }
    return report, None


# ---------------------------------------------------------------------------
# entry point


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="foxtorsion",
        description="Exact torsion polynomials of sutured manifolds via Fox calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tor = sub.add_parser("torsion", help="torsion of one presentation file")
    p_tor.add_argument("file")

    p_cmp = sub.add_parser("compare", help="compare the torsion of two files")
    p_cmp.add_argument("file1")
    p_cmp.add_argument("file2")

    p_fam = sub.add_parser("family", help="built-in twisted-band knot family")
    p_fam.add_argument("--n", type=int, required=True)
    p_fam.add_argument("--surface", choices=("S", "Sprime"), required=True)

    p_sfh = sub.add_parser("sfh-torus", help="solid-torus graded rank table")
    p_sfh.add_argument("p", type=int)
    p_sfh.add_argument("q", type=int)
    p_sfh.add_argument("n", type=int)

    for p in (p_tor, p_cmp, p_fam, p_sfh):
        p.add_argument("--json", metavar="PATH", help="also write the report here")
        p.add_argument(
            "--plot-data", metavar="PATH", help="write support/hull points here"
        )
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    plot = None
    try:
        if args.command == "torsion":
            report, plot = cmd_torsion(args.file)
        elif args.command == "compare":
            report, plot = cmd_compare(args.file1, args.file2)
        elif args.command == "family":
            report, plot = cmd_family(args.n, args.surface)
        else:
            report, plot = cmd_sfh_torus(args.p, args.q, args.n)
        code = 0
    except FoxTorsionError as exc:
        report = {
            "command": args.command,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        code = 1
    except OSError as exc:
        report = {
            "command": args.command,
            "error": {"type": "IOError", "message": str(exc)},
        }
        code = 1

    text = json.dumps(report, indent=2) + "\n"
    sys.stdout.write(text)
    if args.json:
        with open(args.json, "w", encoding="ascii") as fh:
            fh.write(text)
    if args.plot_data and plot is not None and code == 0:
        with open(args.plot_data, "w", encoding="ascii") as fh:
            fh.write(json.dumps(plot, indent=2) + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
