"""Command line front end.

    nielsencalc snf --matrix "2 4; 6 8"
    nielsencalc torus --matrix "1 0 0; 0 2 0; 0 0 3"
    nielsencalc grassmann --r 7 --k 3 --format text
"""

from __future__ import annotations

import argparse
import json
import sys

from .classified import (
    ProjectiveBundleInstance,
    hopf_degrees,
    projective_bundle_invariants,
    sphere_root_invariants,
)
from .grassmann import (
    GrassmannInstance,
    euler_char_grassmannian,
    grassmann_dims,
    grassmann_selfcoincidence,
    top_obstruction,
)
from .invariants import Bounded, Known, Unknown
from .lattice import LatticeError, smith_normal_form
from .quotients import cardinality, cokernel
from .textio import MatrixParseError, encode_ext, parse_matrix, report_to_dict, serialize_matrix
from .torus import TorusInstance, circle_invariants, torus_invariants
from .validation import validate_chain


class UsageError(Exception):
    pass


def _matrix(text):
    try:
        return parse_matrix(text)
    except MatrixParseError as exc:
        raise UsageError(f"--matrix: {exc}") from exc


def _with_report(report, target_dim, selfcoincidence, **extra):
    result = validate_chain(report, target_dim, selfcoincidence)
    payload = dict(extra)
    payload.update(report_to_dict(report, result))
    return payload, result.ok


def cmd_snf(args):
    a = _matrix(args.matrix)
    dec = smith_normal_form(a)
    coker = cokernel(a)
    return {
        "command": "snf",
        "matrix": serialize_matrix(a),
        "factors": [str(f) for f in dec.factors],
        "rank": dec.rank,
        "U": serialize_matrix(dec.u),
        "S": serialize_matrix(dec.s),
        "V": serialize_matrix(dec.v),
        "cokernel": {
            "free_rank": coker.free_rank,
            "torsion": [str(t) for t in coker.torsion_factors],
            "cardinality": encode_ext(cardinality(coker)),
        },
    }, True


def cmd_torus(args):
    d = _matrix(args.matrix)
    torus_domain = not args.domain_not_torus
    m = args.m
    if m is None:
        if not torus_domain:
            raise UsageError("--m is required with --domain-not-torus")
        m = d.cols
    n = d.rows if args.n is None else args.n
    inst = TorusInstance(m=m, n=n, d=d, domain_is_torus=torus_domain)
    return _with_report(
        torus_invariants(inst), n, False,
        command="torus", m=m, n=n, domain_is_torus=torus_domain, matrix=serialize_matrix(d),
    )


def cmd_circle(args):
    row = _matrix(args.matrix)
    if args.m is None:
        raise UsageError("--m is required")
    return _with_report(
        circle_invariants(row, args.m), 1, False,
        command="circle", m=args.m, matrix=serialize_matrix(row),
    )


def cmd_grassmann(args):
    inst = GrassmannInstance(args.r, args.k)
    m, n = grassmann_dims(inst.r, inst.k)
    ob = top_obstruction(inst)
    return _with_report(
        grassmann_selfcoincidence(inst), n, True,
        command="grassmann", r=inst.r, k=inst.k, m=m, n=n,
        euler_characteristic=str(euler_char_grassmannian(inst.r, inst.k)),
        obstruction={
            "stem_index": ob.stem_index,
            "chi": str(ob.chi),
            "status": "evaluated" if ob.evaluated else "symbolic",
            "group_order": None if ob.group_order is None else str(ob.group_order),
            "residue": None if ob.residue is None else str(ob.residue),
        },
    )


def cmd_projective(args):
    inst = ProjectiveBundleInstance(args.q, args.r)
    return _with_report(
        projective_bundle_invariants(inst), 2 * inst.q, True,
        command="projective", q=inst.q, r=inst.r,
    )


def cmd_sphere(args):
    report = sphere_root_invariants(args.m, args.n, args.nullhomotopic)
    return _with_report(
        report, args.n, False,
        command="sphere", m=args.m, n=args.n, nullhomotopic=args.nullhomotopic,
    )


def cmd_hopf(args):
    deg = hopf_degrees(args.hopf)
    return _with_report(
        sphere_root_invariants(3, 2, args.hopf == 0), 2, False,
        command="hopf", hopf=str(deg.hopf),
        degrees={
            "omega_tilde": {"suspension": str(deg.omega_tilde[0]), "hopf": str(deg.omega_tilde[1])},
            "omega": str(deg.omega),
            "homological": str(deg.homological),
        },
    )


def _fmt_value(v):
    if isinstance(v, dict):
        if v.get("status") == "known":
            return v["value"]
        if v.get("status") == "bounded":
            return f"[{v['lo']}, {v['hi']}]" + (f"  ({v['reason']})" if v["reason"] else "")
        if v.get("status") == "unknown":
            return "unknown" + (f"  ({v['reason']})" if v["reason"] else "")
        return ", ".join(
            f"{k}=({_fmt_value(x)})" if isinstance(x, dict) else f"{k}={_fmt_value(x)}"
            for k, x in v.items()
        )
    if isinstance(v, list):
        return "[" + ", ".join(_fmt_value(x) for x in v) + "]"
    return str(v)


def render_text(payload):
    lines = []
    for key, value in payload.items():
        if key == "invariants":
            for name, v in value.items():
                lines.append(f"{name + ':':<14}{_fmt_value(v)}")
        elif key == "notes":
            lines.extend(f"note: {note}" for note in value)
        elif key == "validation":
            if value["ok"]:
                lines.append("validation: ok")
            else:
                lines.append("validation: FAILED")
                lines.extend(f"  {v['rule']}: {v['message']}" for v in value["violations"])
        else:
            lines.append(f"{key}: {_fmt_value(value)}")
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="nielsencalc", description="Nielsen coincidence invariant calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form and cokernel of a matrix")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("torus", parents=[common], help="maps into the torus (S^1)^n")
    p.add_argument("--matrix", required=True, help="f1_* - f2_* on H_1, n rows")
    p.add_argument("--m", type=int, help="domain dimension (defaults to the column count)")
    p.add_argument("--n", type=int, help="target dimension (defaults to the row count)")
    p.add_argument("--domain-not-torus", action="store_true")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("circle", parents=[common], help="maps into the circle")
    p.add_argument("--matrix", required=True, help="f1_* - f2_* on H_1, one row")
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("grassmann", parents=[common], help="V_{r,k} -> G_{r,k} selfcoincidence")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_grassmann)

    p = sub.add_parser("projective", parents=[common], help="circle bundle over CP(q) selfcoincidence")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_projective)

    p = sub.add_parser("sphere", parents=[common], help="roots of f : S^m -> S^n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nullhomotopic", action="store_true")
    p.set_defaults(func=cmd_sphere)

    p = sub.add_parser("hopf", parents=[common], help="degrees of a class in pi_3(S^2)")
    p.add_argument("--hopf", type=int, required=True)
    p.set_defaults(func=cmd_hopf)
    return parser


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, ok = args.func(args)
    except (UsageError, LatticeError, ValueError) as exc:
        print(f"nielsencalc {args.command}: error: {exc}", file=stderr)
        return 2
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False), file=stdout)
    else:
        print(render_text(payload), file=stdout)
    return 0 if ok else 1


def main():
    sys.exit(run_cli())
