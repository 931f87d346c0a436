"""Command line front-end: ``renner {classify,faces,renner,weights,oracle} FILE``.

Exit status is 0 when every requested check passes, 1 when a check fails and
2 on input errors.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from typing import TYPE_CHECKING

from . import export
from .cartan import classify_type, point_type, q_sat_member
from .coxeter import orbit_enumerate
from .exceptions import FiniteTypeRequiredError, RennerError
from .faces import format_subset
from .oracle import compare_lattices
from .problem import load_problem

if TYPE_CHECKING:  # pragma: no cover
    from typing import Any, Sequence

    from .problem import ProblemSpec

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

# Command line flag -> configuration key.
CONFIG_FLAGS = {
    "bound": "FACE_BOUND",
    "unit_bound": "UNIT_BOUND",
    "sigma_bound": "SIGMA_BOUND",
    "depth": "WEIGHT_DEPTH",
    "height": "ROOT_HEIGHT",
    "max_points": "ORACLE_MAX_POINTS",
    "max_dim": "ORACLE_MAX_DIM",
    "samples": "RANDOM_SAMPLES",
    "seed": "RANDOM_SEED",
    "orbit_cap": "ORBIT_CAP",
    "edge_cap": "EDGE_CAP",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="problem document (JSON)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", metavar="PATH", help="write the output to PATH instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="log debug output to stderr")

    parser = argparse.ArgumentParser(prog="renner", description="Orbit hulls, face lattices and Renner monoids.")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("classify", parents=[common], help="classify the Cartan matrix and mu")

    faces = commands.add_parser("faces", parents=[common], help="enumerate the faces of the orbit hull")
    faces.add_argument("--bound", type=int, help="maximal length of the face representatives")
    faces.add_argument("--dot", action="store_true", help="emit the Hasse diagram in DOT format")
    faces.add_argument("--edge-cap", type=int, help="maximal number of edge roots to list")
    faces.add_argument("--orbit-cap", type=int, help="maximal number of orbit points to enumerate")

    renner = commands.add_parser("renner", parents=[common], help="Renner monoid computations")
    action = renner.add_mutually_exclusive_group()
    action.add_argument("--mul", metavar="X;Y", help="multiply elements given in the element syntax")
    action.add_argument("--table", action="store_true", help="enumerate elements and the multiplication table")
    action.add_argument("--verify-grm", action="store_true", help="check the Renner-Coxeter axioms and monoid laws")
    action.add_argument("--dot", action="store_true", help="emit the idempotent order in DOT format")
    renner.add_argument("--unit-bound", type=int, help="maximal length of unit parts")
    renner.add_argument("--sigma-bound", type=int, help="maximal length of face representatives")
    renner.add_argument("--samples", type=int, help="random samples for the monoid laws")
    renner.add_argument("--seed", type=int, help="random seed")

    weights = commands.add_parser("weights", parents=[common], help="truncated weights and weight string laws")
    weights.add_argument("--depth", type=int, help="truncation depth")
    weights.add_argument("--height", type=int, help="maximal height of the real roots checked")

    oracle = commands.add_parser("oracle", parents=[common], help="compare with the geometric face lattice")
    oracle.add_argument("--slice", metavar="I", help="comma separated subset I: compare the faces below F_I")
    oracle.add_argument("--max-points", type=int, help="refuse orbits with more points")
    oracle.add_argument("--max-dim", type=int, help="refuse hulls of larger dimension")
    return parser


def _config(args: argparse.Namespace) -> dict[str, Any]:
    return {key: getattr(args, flag) for flag, key in CONFIG_FLAGS.items() if getattr(args, flag, None) is not None}


def cmd_classify(problem: ProblemSpec, args: argparse.Namespace) -> tuple[Any, int]:
    components = classify_type(problem.gcm)
    realization = problem.realization
    member = q_sat_member(realization, problem.mu)
    zero, positive = point_type(realization, problem.mu)
    if args.json:
        return {
            "components": [
                {
                    "component": sorted(c.component),
                    "type": c.kind.label,
                    "strongly_hyperbolic": c.strongly_hyperbolic,
                    "hyperbolic": c.hyperbolic,
                }
                for c in components
            ],
            "rank": problem.gcm.rank,
            "dim": realization.dim,
            "completion": [list(row) for row in realization.completion],
            "J0": sorted(zero),
            "Jgt": sorted(positive),
            "q_sat": member,
        }, EXIT_OK
    lines = ["%s; mu %s Q^sat" % (" + ".join(c.describe() for c in components), "in" if member else "not in")]
    for c in components:
        lines.append("component %s: %s" % (format_subset(c.component), c.describe()))
    lines.append("rank %d, realization dimension %d" % (problem.gcm.rank, realization.dim))
    lines.append("J0 = %s, J> = %s" % (format_subset(zero), format_subset(positive)))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_faces(problem: ProblemSpec, args: argparse.Namespace) -> tuple[Any, int]:
    point = problem.point
    enumeration = point.enumerate_faces(problem.config["FACE_BOUND"])
    if args.dot:
        return export.faces_to_dot(point, enumeration.faces), EXIT_OK
    orbit = orbit_enumerate(point.group, point.mu, cap=problem.config["ORBIT_CAP"])
    if args.json:
        return {
            "faces": export.faces_to_json(enumeration.faces),
            "counts": {str(d): n for d, n in enumeration.counts.items()},
            "complete": enumeration.complete,
            "orbit": {"points": len(orbit.points), "complete": orbit.complete},
        }, EXIT_OK

    edges = point.edges_at_mu(problem.config["EDGE_CAP"])
    fundamental = point.fundamental_faces()
    lines = [
        "%d faces (%s)"
        % (
            len(enumeration.faces),
            "complete" if enumeration.complete else "truncated at sigma length %d" % problem.config["FACE_BOUND"],
        ),
        "per dimension: " + ", ".join("%d: %d" % item for item in enumeration.counts.items()),
        "orbit of mu: %d points%s" % (len(orbit.points), "" if orbit.complete else " (stopped at the cap)"),
        "fundamental faces: " + " ".join(f.label() for f in fundamental.faces),
        "edge roots at mu: %s%s" % (" ".join(str(list(r)) for r in edges.roots), "" if edges.complete else " ..."),
        "hull meets the chamber in a closed set: %s" % ("yes" if edges.finite else "no"),
    ]
    lines.extend(face.label() for face in enumeration.faces)
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_renner(problem: ProblemSpec, args: argparse.Namespace) -> tuple[Any, int]:
    monoid = problem.monoid
    config = problem.config

    if args.mul:
        elements = export.parse_elements(args.mul, monoid)
        result = monoid.multiply(*elements)
        if args.json:
            return export.element_to_json(result), EXIT_OK
        return "%s\n" % result.label(), EXIT_OK

    if args.table or args.dot or args.verify_grm:
        enumeration = monoid.enumerate(config["UNIT_BOUND"], config["SIGMA_BOUND"])
        elements = enumeration.elements

        if args.dot:
            idempotents = [x for x in elements if monoid.is_idempotent(x)]
            return export.idempotents_to_dot(monoid, idempotents), EXIT_OK

        if args.table:
            table = monoid.multiplication_table(elements)
            if args.json:
                return dict(export.table_to_json(elements, table), complete=enumeration.complete), EXIT_OK
            lines = ["%d elements (%s)" % (len(elements), "complete" if enumeration.complete else "truncated")]
            for entry in monoid.cross_section_lattice():
                cell = [x for x in elements if monoid.cell_of(x) == entry]
                size = monoid.cell_size(entry)
                lines.append(
                    "cell of %s: %d elements%s" % (entry.label(), len(cell), "" if size is None else " of %d" % size)
                )
            lines.extend(" ".join("-" if j is None else str(j) for j in row) for row in table)
            return "\n".join(lines) + "\n", EXIT_OK

        axioms = monoid.verify_grm_axioms(config["UNIT_BOUND"], config["SIGMA_BOUND"])
        rng = random.Random(config["RANDOM_SEED"])
        laws = monoid.check_monoid_laws(elements, config["RANDOM_SAMPLES"], rng)
        status = EXIT_OK if axioms.passed and laws.passed else EXIT_FAILED
        if args.json:
            return {
                "elements": len(elements),
                "complete": enumeration.complete,
                "axioms": {"violations": axioms.violations, "checked": axioms.checked},
                "laws": {"violations": laws.violations, "checked": laws.checked},
                "passed": status == EXIT_OK,
            }, status
        lines = ["%d elements (%s)" % (len(elements), "complete" if enumeration.complete else "truncated")]
        for name, report in (("axiom", axioms), ("law", laws)):
            for key, found in report.violations.items():
                lines.append(
                    "%s %s: %s (%d checked)" % (name, key, "FAIL" if found else "ok", report.checked[key])
                )
                lines.extend("  " + v for v in found[:10])
        return "\n".join(lines) + "\n", status

    entries = monoid.cross_section_lattice()
    if args.json:
        return export.lattice_to_json(entries), EXIT_OK
    return export.lattice_to_text(entries), EXIT_OK


def cmd_weights(problem: ProblemSpec, args: argparse.Namespace) -> tuple[Any, int]:
    weights = problem.weights()
    height = problem.config["ROOT_HEIGHT"]
    laws = {}
    for base in problem.point.fundamental_faces().faces[1:]:
        face = problem.point.canonicalize_face(problem.group.identity, base.subset)
        laws[face.label()] = weights.verify_string_laws(face, height)
    membership = weights.dominant_membership_crosscheck()
    missing = weights.check_invariance()
    failures, _ = weights.check_simple_strings()
    passed = all(r.passed for r in laws.values()) and membership.passed and not missing and not failures
    status = EXIT_OK if passed else EXIT_FAILED

    if args.json:
        return {
            "weights": export.weights_to_json(weights),
            "string_laws": {
                label: {
                    "violations": r.violations,
                    "unresolved": r.unresolved,
                    "checked": r.checked,
                    "skipped": r.skipped,
                }
                for label, r in laws.items()
            },
            "membership_mismatches": [list(k) for k in membership.mismatches],
            "invariance_missing": [list(k) for k in missing],
            "string_length_failures": [[list(k), i] for k, i in failures],
            "passed": passed,
        }, status
    lines = ["%d weights up to depth %d" % (len(weights), weights.depth)]
    for label, report in laws.items():
        lines.append(
            "string laws on %s: %d checked, %d skipped, %d unresolved, %s"
            % (label, report.checked, report.skipped, len(report.unresolved), "ok" if report.passed else "FAIL")
        )
        lines.extend("  " + v for v in report.violations[:10])
    lines.append(
        "dominant membership: %d checked, %s" % (membership.checked, "ok" if membership.passed else "FAIL")
    )
    lines.append("W-invariance: %s" % ("ok" if not missing else "FAIL"))
    lines.append("simple string lengths: %s" % ("ok" if not failures else "FAIL"))
    return "\n".join(lines) + "\n", status


def cmd_oracle(problem: ProblemSpec, args: argparse.Namespace) -> tuple[Any, int]:
    subset = None
    if args.slice:
        try:
            subset = [int(s) for s in args.slice.split(",") if s.strip()]
        except ValueError:
            raise RennerError("--slice expects comma separated integers, got %r" % args.slice) from None
    config = problem.config
    report = compare_lattices(problem.point, subset, config["ORACLE_MAX_POINTS"], config["ORACLE_MAX_DIM"])
    status = EXIT_OK if report.passed else EXIT_FAILED
    if args.json:
        return {
            "faces": report.faces,
            "geometric_faces": report.geometric_faces,
            "mismatches": report.mismatches,
            "passed": report.passed,
        }, status
    lines = [
        "%d faces against %d geometric faces: %s"
        % (report.faces, report.geometric_faces, "isomorphic" if report.passed else "MISMATCH")
    ]
    lines.extend("  " + m for m in report.mismatches[:20])
    return "\n".join(lines) + "\n", status


COMMANDS = {
    "classify": cmd_classify,
    "faces": cmd_faces,
    "renner": cmd_renner,
    "weights": cmd_weights,
    "oracle": cmd_oracle,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")

    try:
        problem = load_problem(args.file, _config(args))
        output, status = COMMANDS[args.command](problem, args)
    except FiniteTypeRequiredError as e:
        sys.stderr.write("error: %s\n" % e)
        if e.suggestions:
            sys.stderr.write("finite type slices: %s\n" % " ".join(",".join(map(str, s)) for s in e.suggestions))
        return EXIT_INPUT
    except (RennerError, OSError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_INPUT

    text = output if isinstance(output, str) else export.dumps(output)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status
