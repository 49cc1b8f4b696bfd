"""Command-line surface: hilbert, sepdeg, acm, remove, verify.

Exit codes: 0 success, 1 verification failure, 2 parse errors, 3 shape
errors, 4 bad point index, 5 unmet precondition (e.g. removal analysis on a
set that is not Cohen-Macaulay).  All commands are deterministic: identical
inputs produce identical bytes.  PTSEP_JOBS (a positive integer) caps worker
parallelism; the current engine evaluates sequentially, which satisfies any
cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .acceptance import run_all
from .degrees import DegreeBox, parse_degree
from .errors import (
    BoxTooSmall,
    DuplicatePoint,
    LengthMismatch,
    NotACM,
    ParseError,
    PointNotFound,
    PtsepError,
    ShapeMismatch,
    ZeroVector,
)
from .hilbert import default_box, hilbert_table, kpoly_check
from .p1p1 import (
    acm_resolution,
    conjugate,
    ferrers_ascii,
    nu_bruteforce,
    partition_of,
    point_degree_acm,
    removal_classification,
    removed_resolution,
    star_property,
)
from .points import PointSet, parse_points
from .separators import degree_set, minimal_separator

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_INDEX = 4
EXIT_PRECONDITION = 5


def _load_points(path: str) -> PointSet:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_points(text)


def _pick_point(x: PointSet, index: int):
    if not 1 <= index <= len(x):
        raise PointNotFound(f"--point {index} out of range 1..{len(x)}")
    return x.points[index - 1]


def _box_arg(x: PointSet, text: str | None) -> DegreeBox:
    if text is None:
        return default_box(x)
    return DegreeBox(parse_degree(text, x.shape.r))


def _degree_str(degree) -> str:
    return "(" + ",".join(map(str, degree)) + ")"


def _cmd_hilbert(args) -> int:
    x = _load_points(args.points)
    box = _box_arg(x, args.box)
    table = hilbert_table(x, box)
    sys.stdout.write(table.json() if args.json else table.text())
    return EXIT_OK


def _cmd_sepdeg(args) -> int:
    x = _load_points(args.points)
    p = _pick_point(x, args.point)
    box = _box_arg(x, args.box)
    degrees = degree_set(x, p, box)
    seps = {alpha: minimal_separator(x, p, alpha) for alpha in degrees.sorted()}
    if args.json:
        payload = {
            "point": args.point,
            "degree_set": [list(a) for a in degrees.sorted()],
            "separators": {
                ",".join(map(str, alpha)): [
                    [list(m), str(c)] for m, c in sorted(f.monomials().items())
                ]
                for alpha, f in seps.items()
            },
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    sys.stdout.write(
        "degree set: " + " ".join(_degree_str(a) for a in degrees.sorted()) + "\n"
    )
    for alpha, form in seps.items():
        sys.stdout.write(f"separator of degree {_degree_str(alpha)}:\n")
        for mono, coeff in sorted(form.monomials().items()):
            sys.stdout.write(f"  {_degree_str(mono)}: {coeff}\n")
    return EXIT_OK


def _require_p1p1_cli(x: PointSet) -> None:
    if x.shape.dims != (1, 1):
        raise ShapeMismatch(f"command needs points of P^1 x P^1, got {x.shape.dims}")


def _cmd_acm(args) -> int:
    x = _load_points(args.points)
    _require_p1p1_cli(x)
    acm, witness = star_property(x)
    if args.json:
        payload: dict = {"acm": acm}
        if acm:
            lam = partition_of(x)
            res = acm_resolution(lam)
            payload.update(
                {
                    "partition": list(lam.parts),
                    "conjugate": list(conjugate(lam).parts),
                    "s1": [list(d) for d in sorted(res.multiset(1).elements())],
                    "s2": [list(d) for d in sorted(res.multiset(2).elements())],
                    "generator_degrees": [
                        list(d) for d in sorted(res.multiset(1).elements())
                    ],
                }
            )
        else:
            payload["witness"] = [witness.first.text(), witness.second.text()]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    if not acm:
        sys.stdout.write("ACM: no\n")
        sys.stdout.write(f"witness pair: {witness.first.text()} | {witness.second.text()}\n")
        return EXIT_OK
    lam = partition_of(x)
    res = acm_resolution(lam)
    sys.stdout.write("ACM: yes\n")
    sys.stdout.write("partition: " + ",".join(map(str, lam.parts)) + "\n")
    sys.stdout.write("conjugate: " + ",".join(map(str, conjugate(lam).parts)) + "\n")
    sys.stdout.write(
        "S1: " + " ".join(_degree_str(d) for d in sorted(res.multiset(1).elements())) + "\n"
    )
    sys.stdout.write(
        "S2: " + " ".join(_degree_str(d) for d in sorted(res.multiset(2).elements())) + "\n"
    )
    sys.stdout.write(
        "generator degrees: "
        + " ".join(_degree_str(d) for d in sorted(res.multiset(1).elements()))
        + "\n"
    )
    sys.stdout.write(ferrers_ascii(x))
    return EXIT_OK


def _cmd_remove(args) -> int:
    x = _load_points(args.points)
    _require_p1p1_cli(x)
    if not star_property(x)[0]:
        raise NotACM("input configuration is not Cohen-Macaulay")
    p = _pick_point(x, args.point)
    outcome = removal_classification(x, p)
    table = removed_resolution(x, p)
    y = x.remove_point(p)
    nu_x = nu_bruteforce(x)
    nu_y = nu_bruteforce(y)
    consistent = kpoly_check(y, table, DegreeBox((len(y), len(y))))
    if args.json:
        payload = {
            "point": args.point,
            "degree": list(point_degree_acm(x, p)),
            "classification": outcome.value,
            "predicted_resolution": {
                str(i): [[list(s), m] for s, m in sorted(table.multiset(i).items())]
                for i in range(table.length + 1)
            },
            "nu_before": nu_x.total,
            "nu_after": nu_y.total,
            "kpoly_consistent": consistent,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(f"classification: {outcome.value}\n")
        sys.stdout.write(f"point degree: {_degree_str(point_degree_acm(x, p))}\n")
        sys.stdout.write("predicted resolution of the remaining set:\n")
        sys.stdout.write(table.text())
        sys.stdout.write(f"generators: {nu_x.total} before, {nu_y.total} after removal\n")
        sys.stdout.write(f"Hilbert consistency of the prediction: {'ok' if consistent else 'FAILED'}\n")
    return EXIT_OK if consistent else EXIT_VERIFY


def _cmd_verify(args) -> int:
    numbers = [int(n) for n in args.criteria.split(",")] if args.criteria else None
    results = run_all(numbers)
    if args.json:
        payload = [
            {
                "criterion": r.number,
                "name": r.name,
                "ok": r.ok,
                "seconds": round(r.seconds, 3),
                "failures": list(r.failures),
            }
            for r in results
        ]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for r in results:
            sys.stdout.write(r.line + "\n")
            for failure in r.failures:
                sys.stdout.write(f"      {failure}\n")
        bad = sum(1 for r in results if not r.ok)
        total = sum(r.seconds for r in results)
        sys.stdout.write(
            f"{len(results) - bad}/{len(results)} criteria passed in {total:.2f}s\n"
        )
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptsep",
        description="Exact Hilbert functions, separators, and resolution data "
        "for points in products of projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hilbert = sub.add_parser("hilbert", help="tabulate the Hilbert function on a box")
    p_hilbert.add_argument("points", help="point file (plain text or JSON)")
    p_hilbert.add_argument("--box", help="box corner, e.g. 6,5 (default (s-1,...))")
    p_hilbert.add_argument("--json", action="store_true")
    p_hilbert.set_defaults(func=_cmd_hilbert)

    p_sep = sub.add_parser("sepdeg", help="degree set and minimal separators of one point")
    p_sep.add_argument("points")
    p_sep.add_argument("--point", type=int, required=True, help="1-based point index")
    p_sep.add_argument("--box", help="override the search box corner")
    p_sep.add_argument("--json", action="store_true")
    p_sep.set_defaults(func=_cmd_sepdeg)

    p_acm = sub.add_parser("acm", help="Cohen-Macaulay verdict and resolution data")
    p_acm.add_argument("points")
    p_acm.add_argument("--json", action="store_true")
    p_acm.set_defaults(func=_cmd_acm)

    p_rm = sub.add_parser("remove", help="classify the removal of one point")
    p_rm.add_argument("points")
    p_rm.add_argument("--point", type=int, required=True, help="1-based point index")
    p_rm.add_argument("--json", action="store_true")
    p_rm.set_defaults(func=_cmd_remove)

    p_verify = sub.add_parser("verify", help="run the recorded regression criteria")
    p_verify.add_argument("--criteria", help="comma-separated subset, e.g. 1,4,8")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    jobs = os.environ.get("PTSEP_JOBS")
    if jobs is not None:
        try:
            if int(jobs) < 1:
                raise ValueError
        except ValueError:
            sys.stderr.write(f"error: PTSEP_JOBS must be a positive integer, got {jobs!r}\n")
            return EXIT_PARSE
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DuplicatePoint, ZeroVector, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (ShapeMismatch, LengthMismatch) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SHAPE
    except PointNotFound as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INDEX
    except (NotACM, BoxTooSmall) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except PtsepError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
