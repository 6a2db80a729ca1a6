"""Command-line interface.

Exit codes: 0 success or true verdict, 1 false verdict (not reflexive, fan
invalid, certificate undecided, no witness, search budget exhausted), 2 usage,
IO, or parse errors.  Output is deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio
from .circuitflip import find_flips, flip
from .fan import face_fan, is_projective, validate_maximal_fan
from .polytope import (
    NonLatticeDualError,
    dual,
    is_reflexive,
    lattice_points,
)
from .smoothcert import remark_witness, smoothness_certificate
from .triangulate import (
    SearchBudgetExceeded,
    enumerate_maximal_cones,
    enumerate_maximal_fans,
    mpcp,
    refine_to,
)


def _write(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_polytope(path):
    return fileio.load(path, fileio.polytope_from_obj)


def _load_fan(path):
    return fileio.load(path, fileio.fan_from_obj)


def cmd_check_reflexive(args):
    p = _load_polytope(args.polytope)
    verdict = is_reflexive(p)
    if not args.quiet:
        word = "true" if verdict else "false"
        print(f"reflexive: {word}, facets: {len(p.facets)}")
    return 0 if verdict else 1


def cmd_dual(args):
    p = _load_polytope(args.polytope)
    try:
        d = dual(p)
    except NonLatticeDualError as exc:
        print(f"not reflexive: {exc}", file=sys.stderr)
        return 1
    _write(fileio.dumps(fileio.polytope_to_obj(d)), args.output)
    return 0


def cmd_lattice_points(args):
    p = _load_polytope(args.polytope)
    pts = lattice_points(p)
    obj = {
        "dim": p.dim,
        "points": [list(x) for x in pts],
        "interior": [not p.on_boundary(x) for x in pts],
    }
    _write(fileio.dumps(obj), args.output)
    return 0


def cmd_face_fan(args):
    p = _load_polytope(args.polytope)
    fan = face_fan(p)
    _write(fileio.dumps(fileio.fan_to_obj(fan)), args.output)
    return 0


def cmd_mpcp(args):
    p = _load_polytope(args.polytope)
    fan = mpcp(p, args.seed)
    _write(fileio.dumps(fileio.fan_to_obj(fan)), args.output)
    return 0


def cmd_validate_fan(args):
    fan = _load_fan(args.fan)
    p = _load_polytope(args.polytope)
    report = validate_maximal_fan(fan, p)
    _write(fileio.dumps(fileio.report_to_obj(report)), args.output)
    return 0 if report.verdict else 1


def cmd_enumerate_fans(args):
    p = _load_polytope(args.polytope)
    status = 0
    try:
        fans = enumerate_maximal_fans(p, args.limit)
    except SearchBudgetExceeded as exc:
        fans = list(exc.partial_fans)
        print(f"search budget exhausted; {len(fans)} fan(s) found", file=sys.stderr)
        status = 1
    if args.output:
        names = []
        for i, fan in enumerate(fans):
            name = f"{args.output}-{i:03d}.fan.json"
            with open(name, "w") as fh:
                fh.write(fileio.dumps(fileio.fan_to_obj(fan)))
            names.append(name)
        if not args.quiet:
            print(fileio.dumps({"fans": len(fans), "files": names}), end="")
    else:
        _write(
            fileio.dumps(
                {
                    "fans": len(fans),
                    "projective": [bool(f.projective) for f in fans],
                    "items": [fileio.fan_to_obj(f) for f in fans],
                }
            ),
            None,
        )
    return status


def cmd_maximal_cones(args):
    p = _load_polytope(args.polytope)
    from .fan import maximal_fan_points

    cands = enumerate_maximal_cones(p)
    obj = {
        "points": [list(x) for x in maximal_fan_points(p)],
        "candidates": [
            {
                "generators": list(c.generators),
                "empty": c.empty,
                "in_common_face": c.in_common_face,
            }
            for c in cands
        ],
    }
    _write(fileio.dumps(obj), args.output)
    return 0


def cmd_goodness(args):
    p = _load_polytope(args.polytope)
    from .smoothcert import has_good_maximal_cones

    all_good, results = has_good_maximal_cones(p)
    obj = {
        "all_good": all_good,
        "results": [
            {
                "generators": [list(g) for g in r.generators],
                "sum": list(r.sum_vector),
                "multiplicity": r.multiplicity,
                "verdict": r.verdict,
            }
            for r in results
        ],
    }
    _write(fileio.dumps(obj), args.output)
    return 0 if all_good else 1


def cmd_certificate(args):
    fan = _load_fan(args.fan)
    p = _load_polytope(args.polytope)
    cert = smoothness_certificate(fan, p)
    _write(fileio.dumps(fileio.certificate_to_obj(cert)), args.output)
    return 0 if cert.overall == "smooth" else 1


def cmd_find_flips(args):
    fan = _load_fan(args.fan)
    moves = find_flips(fan)
    _write(
        fileio.dumps({"moves": [fileio.move_to_obj(m) for m in moves]}),
        args.output,
    )
    return 0


def cmd_flip(args):
    fan = _load_fan(args.fan)
    move = fileio.load(args.move, fileio.move_from_obj)
    p = _load_polytope(args.polytope) if args.polytope else None
    result = flip(fan, move, p)
    _write(fileio.dumps(fileio.fan_to_obj(result)), args.output)
    return 0


def cmd_refine(args):
    fan = _load_fan(args.fan)
    p2 = _load_polytope(args.into)
    result = refine_to(fan, p2, args.seed)
    _write(fileio.dumps(fileio.fan_to_obj(result)), args.output)
    return 0


def cmd_remark_witness(args):
    p = _load_polytope(args.polytope)
    cone = remark_witness(p)
    obj = {
        "witness": None
        if cone is None
        else {"generators": [list(g) for g in cone.generators]}
    }
    _write(fileio.dumps(obj), args.output)
    return 0 if cone is not None else 1


def cmd_projective(args):
    fan = _load_fan(args.fan)
    verdict = is_projective(fan)
    if not args.quiet:
        print(f"projective: {'true' if verdict else 'false'}")
    return 0 if verdict else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="reflexfan",
        description="Exact fans over reflexive lattice polytopes: "
        "construction, validation, enumeration, flips, smoothness certificates.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, seed=False, limit=False):
        sp.add_argument("--output", "-o", help="write the result to this file")
        sp.add_argument("--quiet", action="store_true", help="suppress chatter")
        if seed:
            sp.add_argument("--seed", type=int, default=0)
        if limit:
            sp.add_argument("--limit", type=int, default=1_000_000)

    sp = sub.add_parser("check-reflexive", help="reflexivity and facet count")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_check_reflexive)

    sp = sub.add_parser("dual", help="dual polytope (fails if not a lattice polytope)")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("lattice-points", help="all lattice points with interior flags")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_lattice_points)

    sp = sub.add_parser("face-fan", help="fan of cones over the proper faces")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_face_fan)

    sp = sub.add_parser("mpcp", help="projective maximal fan refining the face fan")
    sp.add_argument("polytope")
    common(sp, seed=True)
    sp.set_defaults(func=cmd_mpcp)

    sp = sub.add_parser("validate-fan", help="check a fan is maximal for a polytope")
    sp.add_argument("fan")
    sp.add_argument("--polytope", required=True)
    common(sp)
    sp.set_defaults(func=cmd_validate_fan)

    sp = sub.add_parser("enumerate-fans", help="all maximal fans of a polytope")
    sp.add_argument("polytope")
    common(sp, limit=True)
    sp.set_defaults(func=cmd_enumerate_fans)

    sp = sub.add_parser("maximal-cones", help="empty full-cone candidates")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_maximal_cones)

    sp = sub.add_parser("goodness", help="goodness of every candidate cone")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_goodness)

    sp = sub.add_parser("certificate", help="smoothness certificate for a fan")
    sp.add_argument("--fan", required=True)
    sp.add_argument("--polytope", required=True)
    common(sp)
    sp.set_defaults(func=cmd_certificate)

    sp = sub.add_parser("find-flips", help="all wall-crossing moves on a fan")
    sp.add_argument("fan")
    common(sp)
    sp.set_defaults(func=cmd_find_flips)

    sp = sub.add_parser("flip", help="apply a move file to a fan")
    sp.add_argument("fan")
    sp.add_argument("--move", required=True)
    sp.add_argument("--polytope")
    common(sp)
    sp.set_defaults(func=cmd_flip)

    sp = sub.add_parser("refine", help="maximal fan of a larger polytope refining a fan")
    sp.add_argument("--fan", required=True)
    sp.add_argument("--into", required=True)
    common(sp, seed=True)
    sp.set_defaults(func=cmd_refine)

    sp = sub.add_parser("remark-witness", help="empty non-unimodular cone outside facet cones")
    sp.add_argument("polytope")
    common(sp)
    sp.set_defaults(func=cmd_remark_witness)

    sp = sub.add_parser("projective", help="strictly convex support function test")
    sp.add_argument("fan")
    common(sp)
    sp.set_defaults(func=cmd_projective)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(
            f"parse error: {exc.msg} at line {exc.lineno} column {exc.colno}",
            file=sys.stderr,
        )
        return 2
    except fileio.FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
