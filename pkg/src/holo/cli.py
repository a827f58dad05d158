"""Command-line surface: membership checks, deciders, evaluation, reports.

Exit codes: 0 for any computed decision (including "no"), 1 for input or
parse errors, 2 for cap-limited or undecided outcomes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as hio
from .affine import DEFAULT_ALPHA_CAP, decide_A_transformable, is_affine, is_affine_alpha
from .decision import CAP_EXCEEDED, Decision, HYPOTHESIS_NOT_MET, UNDECIDED, YES
from .errors import HoloError, ParseError, UndecidedScalar
from .holant import DEFAULT_MAX_EDGES, eval_holant, transform_grid
from .product import decide_P_transformable, factor, is_product_type
from .scalars import DEFAULT_MAX_PRECISION, one, rational, scalar_is_zero, zero
from .signatures import DEFAULT_MAX_ARITY, SymmetricSignature, Transform, expand
from .symmetric import (
    classify_affine,
    classify_product,
    decide_A_transformable_sym,
    decide_P_transformable_sym,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNDECIDED = 2


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="report format (default: json)")
    common.add_argument("--cap", type=int, default=DEFAULT_ALPHA_CAP,
                        help=f"candidate-ratio cap for the alpha search (default: {DEFAULT_ALPHA_CAP})")
    common.add_argument("--max-arity", type=int, default=DEFAULT_MAX_ARITY,
                        help=f"dense signature arity limit (default: {DEFAULT_MAX_ARITY})")
    common.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES,
                        help=f"brute-force edge limit (default: {DEFAULT_MAX_EDGES})")
    common.add_argument("--precision", type=int, default=DEFAULT_MAX_PRECISION,
                        help=f"certified-numeric precision cap in bits (default: {DEFAULT_MAX_PRECISION})")
    common.add_argument("--threads", type=int, default=1,
                        help="reserved for parallel candidate verification; execution is sequential")
    parser = argparse.ArgumentParser(
        prog="holo",
        description="Exact deciders for affine and product-type holographic transformations.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-affine", parents=[common],
                       help="membership of one signature in the affine class")
    p.add_argument("--alpha", action="store_true", help="test the diag(1, alpha)-twisted class")
    p.add_argument("signature")

    p = sub.add_parser("check-product", parents=[common],
                       help="membership of one signature in the product class")
    p.add_argument("signature")

    p = sub.add_parser("factor", parents=[common],
                       help="unique irreducible factorization of a signature")
    p.add_argument("signature")

    p = sub.add_parser("classify", parents=[common],
                       help="class label of a symmetric signature")
    p.add_argument("signature")

    p = sub.add_parser("decide", parents=[common],
                       help="set-level transformability decision")
    p.add_argument("family", choices=("A", "P"))
    p.add_argument("set_file")
    p.add_argument("--symmetric", action="store_true",
                   help="use the succinct symmetric deciders")

    p = sub.add_parser("eval", parents=[common],
                       help="exact brute-force Holant value of a grid")
    p.add_argument("grid_file")

    p = sub.add_parser("transform", parents=[common],
                       help="holographic transformation of a grid")
    p.add_argument("--grid", required=True)
    p.add_argument("--matrix", required=True, metavar="E00,E01,E10,E11",
                   help="row-major 2x2 matrix as four comma-separated scalar literals")

    return parser


def _settings(args) -> dict:
    return {
        "cap": args.cap,
        "max_arity": args.max_arity,
        "max_edges": args.max_edges,
        "precision": args.precision,
        "format": args.format,
        "threads": args.threads,
    }


def _emit(report: dict, args) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
        return
    lines = []
    for key, value in report.items():
        if key == "settings":
            continue
        if isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value)}")
        else:
            lines.append(f"{key}: {value}")
    sys.stdout.write("\n".join(lines) + "\n")


def _affine_witness_json(witness) -> dict | None:
    if witness is None:
        return None
    out = {"scale": hio.format_scalar(witness.scale)}
    if witness.support is not None:
        out["support_basis"] = [format(b, "b") for b in witness.support.basis]
        out["free_positions"] = [p + 1 for p in witness.support.free_positions]
        out["quadratic_form"] = {
            "constant": witness.form.constant,
            "linear": list(witness.form.linear),
            "cross": {f"{k+1},{l+1}": c for (k, l), c in sorted(witness.form.cross.items())},
        }
    return out


def _decision_report(decision: Decision, command: str, args) -> tuple[dict, int]:
    report = {
        "command": command,
        "settings": _settings(args),
        "decision": decision.outcome,
        "branch": decision.branch,
        "witness": None if decision.witness is None else hio.transform_to_json(decision.witness),
        "candidates_tested": decision.candidates_tested,
        "blockers": decision.blockers,
    }
    code = EXIT_OK
    if decision.outcome in (UNDECIDED, CAP_EXCEEDED):
        code = EXIT_UNDECIDED
    return report, code


def _run_check_affine(args) -> int:
    sig = hio.parse_signature_argument(args.signature, args.max_arity)
    if isinstance(sig, SymmetricSignature):
        sig = expand(sig)
    try:
        witness = is_affine_alpha(sig) if args.alpha else is_affine(sig)
    except UndecidedScalar as exc:
        report = {
            "command": "check-affine",
            "settings": _settings(args),
            "decision": "undecided",
            "blockers": [str(exc)],
        }
        _emit(report, args)
        return EXIT_UNDECIDED
    report = {
        "command": "check-affine",
        "settings": _settings(args),
        "alpha": bool(args.alpha),
        "decision": "yes" if witness is not None else "no",
        "witness": _affine_witness_json(witness),
    }
    _emit(report, args)
    return EXIT_OK


def _run_check_product(args) -> int:
    sig = hio.parse_signature_argument(args.signature, args.max_arity)
    if isinstance(sig, SymmetricSignature):
        sig = expand(sig)
    try:
        member = is_product_type(sig)
        factors = None
        if not sig.is_zero():
            fac = factor(sig)
            factors = [
                {
                    "variables": [v + 1 for v in variables],
                    "signature": hio.signature_to_json(g),
                }
                for variables, g in fac.blocks
            ]
    except UndecidedScalar as exc:
        _emit({"command": "check-product", "settings": _settings(args),
               "decision": "undecided", "blockers": [str(exc)]}, args)
        return EXIT_UNDECIDED
    report = {
        "command": "check-product",
        "settings": _settings(args),
        "decision": "yes" if member else "no",
        "factors": factors,
    }
    _emit(report, args)
    return EXIT_OK


def _run_factor(args) -> int:
    sig = hio.parse_signature_argument(args.signature, args.max_arity)
    if isinstance(sig, SymmetricSignature):
        sig = expand(sig)
    fac = factor(sig)
    report = {
        "command": "factor",
        "settings": _settings(args),
        "factors": [
            {
                "variables": [v + 1 for v in variables],
                "signature": hio.signature_to_json(g),
            }
            for variables, g in fac.blocks
        ],
    }
    _emit(report, args)
    return EXIT_OK


def _theta_string(witness) -> str:
    if witness is None or witness.theta is None:
        return "other"
    th = witness.theta
    if th.is_zero():
        return "0"
    if (th + one()).is_zero():
        return "-1"
    from fractions import Fraction

    if (th + rational(Fraction(1, 2))).is_zero():
        return "-1/2"
    return "other"


def _run_classify(args) -> int:
    sig = hio.parse_signature_argument(args.signature, args.max_arity)
    if not isinstance(sig, SymmetricSignature):
        compressed = None
        from .signatures import DenseSignature, compress

        if isinstance(sig, DenseSignature):
            compressed = compress(sig)
        if compressed is None:
            raise ParseError("classify needs a symmetric signature")
        sig = compressed
    try:
        witness = classify_affine(sig)
        if witness is None:
            witness = classify_product(sig)
    except UndecidedScalar as exc:
        _emit({"command": "classify", "settings": _settings(args),
               "label": "undecided", "blockers": [str(exc)]}, args)
        return EXIT_UNDECIDED
    params = {}
    if witness is not None:
        for key, value in witness.params.items():
            params[key] = hio.format_scalar(value) if hasattr(value, "coeffs") else value
    witness_json = None
    if witness is not None:
        witness_json = hio.transform_to_json(witness.h)
        witness_json["params"] = params
    report = {
        "command": "classify",
        "settings": _settings(args),
        "label": witness.label if witness is not None else "none",
        "theta": _theta_string(witness),
        "witness": witness_json,
    }
    _emit(report, args)
    return EXIT_OK


def _run_decide(args) -> int:
    with open(args.set_file, "r", encoding="utf-8") as fh:
        sigs = hio.set_from_json(json.load(fh), args.max_arity)
    if args.symmetric:
        members = []
        for nm, f in sigs:
            if not isinstance(f, SymmetricSignature):
                from .signatures import compress

                f = compress(f)
                if f is None:
                    raise ParseError(f"{nm} is not symmetric; --symmetric needs symmetric input")
            members.append((nm, f))
        from .signatures import SignatureSet

        decider = decide_A_transformable_sym if args.family == "A" else decide_P_transformable_sym
        decision = decider(SignatureSet(members))
    elif args.family == "A":
        decision = decide_A_transformable(sigs, cap=args.cap)
    else:
        decision = decide_P_transformable(sigs)
    report, code = _decision_report(decision, "decide", args)
    report["family"] = args.family
    report["symmetric"] = bool(args.symmetric)
    _emit(report, args)
    return code


def _run_eval(args) -> int:
    with open(args.grid_file, "r", encoding="utf-8") as fh:
        grid = hio.grid_from_json(json.load(fh), args.max_arity)
    value = eval_holant(grid, max_edges=args.max_edges)
    report = {
        "command": "eval",
        "settings": _settings(args),
        "value": hio.format_scalar(value),
    }
    _emit(report, args)
    return EXIT_OK


def _run_transform(args) -> int:
    with open(args.grid, "r", encoding="utf-8") as fh:
        grid = hio.grid_from_json(json.load(fh), args.max_arity)
    parts = args.matrix.split(",")
    if len(parts) != 4:
        raise ParseError("--matrix needs four comma-separated scalar literals")
    entries = [hio.parse_scalar(x.strip()) for x in parts]
    t = Transform(*entries)
    out = transform_grid(grid, t)
    report = {
        "command": "transform",
        "settings": _settings(args),
        "grid": hio.grid_to_json(out),
    }
    _emit(report, args)
    return EXIT_OK


_RUNNERS = {
    "check-affine": _run_check_affine,
    "check-product": _run_check_product,
    "factor": _run_factor,
    "classify": _run_classify,
    "decide": _run_decide,
    "eval": _run_eval,
    "transform": _run_transform,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return _RUNNERS[args.command](args)
    except (ParseError, OSError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write(f"holo: {exc}\n")
        return EXIT_INPUT
    except UndecidedScalar as exc:
        sys.stderr.write(f"holo: undecided: {exc}\n")
        return EXIT_UNDECIDED
    except HoloError as exc:
        sys.stderr.write(f"holo: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))
