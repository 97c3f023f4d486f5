"""Command-line surface: expand, verify, search.

All mathematics lives in the library modules; this file only parses
arguments, selects structures, and renders text or JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import schur, verifier, wow
from .shapes import (
    ShapeError,
    SkewShape,
    connected_shapes,
    format_shape,
    is_connected,
    parse_shape,
    shape_sort_key,
)

SCHEMA = 1


def _emit(payload, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_expand(args) -> int:
    try:
        shape = parse_shape(args.shape)
    except ShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.vars:
        poly = schur.monomial_expansion(shape, args.vars)
        payload = {
            "schema": SCHEMA,
            "shape": format_shape(shape),
            "vars": args.vars,
            "monomials": [
                {"exponents": list(e), "coefficient": c} for e, c in poly.terms
            ],
        }
        lines = [
            " + ".join(
                (f"{c}*" if c != 1 else "")
                + "*".join(f"x{i+1}^{p}" if p > 1 else f"x{i+1}" for i, p in enumerate(e) if p)
                for e, c in poly.terms
            )
            or "0"
        ]
        _emit(payload, args.json, lines)
        return 0
    f = schur.schur_expand(shape)
    payload = {
        "schema": SCHEMA,
        "shape": format_shape(shape),
        "expansion": f.to_json(),
    }
    _emit(payload, args.json, [f.render()])
    return 0


def _pick_structure(gamma: SkewShape, index: int | None):
    structures = wow.detect_wow(gamma)
    if not structures:
        raise ShapeError(f"{format_shape(gamma)} admits no W->O->W / W^O^W structure")
    if index is None:
        return structures[0], structures
    if not 0 <= index < len(structures):
        raise ShapeError(
            f"--w index {index} out of range; {len(structures)} structures found"
        )
    return structures[index], structures


def cmd_verify(args) -> int:
    try:
        beta = parse_shape(args.beta)
        gamma = parse_shape(args.gamma)
        if not beta.is_partition_shape():
            raise ShapeError("beta must be a partition shape")
        if not is_connected(gamma):
            raise ShapeError("gamma must be connected")
        structure, structures = _pick_structure(gamma, args.w)
    except ShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    beta_parts = beta.outer
    hypotheses_fail = False
    try:
        if args.corollary:
            report = verifier.verify_corollary(beta_parts, structure, strict=args.strict)
        else:
            report = verifier.verify_main_theorem(beta_parts, structure, strict=args.strict)
    except (verifier.BadBetaError, verifier.HypothesesFailError) as exc:
        if args.strict:
            print(f"hypotheses fail: {exc}", file=sys.stderr)
            return 3
        raise

    trace = None
    if args.trace:
        trace = verifier.proof_trace(beta_parts, structure, strict=args.strict)
        report.trace = trace

    payload = report.to_json()
    payload["structure"] = structure.to_json()
    payload["structureCount"] = len(structures)

    def summary(f):
        if f is None:
            return ""
        if len(f.coeffs) > 12:
            return f" = ({len(f.coeffs)} Schur terms)"
        return f" = {f.render()}"

    lines = [
        structure.describe(),
        f"hypotheses: betaShape={report.hypotheses['betaShape']} "
        f"looseEnds={report.hypotheses['looseEnds']} mode={report.mode}",
        f"lhs {format_shape(report.lhs_shape)}" + summary(report.lhs),
        f"rhs {format_shape(report.rhs_shape)}" + summary(report.rhs),
        f"equal: {report.equal}",
    ]
    if trace is not None:
        lines.append(
            f"trace: oneKey={trace.one_key_left_ok and trace.one_key_right_ok} "
            f"columns={trace.all_column_equalities_hold()} balance={trace.balance_ok}"
        )
    _emit(payload, args.json, lines)
    return 0 if report.equal else 1


def _search_one(item):
    gamma, beta_list = item
    rows = []
    for structure in wow.detect_wow(gamma):
        keys = wow.key_ribbons(structure)
        loose = wow.has_loose_end_ribbons(structure)
        for beta in beta_list:
            report = verifier.verify_main_theorem(beta, structure, strict=False, expansions=False)
            rows.append(
                {
                    "gamma": format_shape(gamma),
                    "structure": structure.describe(),
                    "orientation": structure.orientation,
                    "keySize": keys.size,
                    "looseEnds": loose.found,
                    "beta": list(beta),
                    "hypothesesHold": report.mode == "theorem",
                    "equal": report.equal,
                }
            )
    return rows


def cmd_search(args) -> int:
    if args.max_size < 1:
        print("error: --max-size must be at least 1", file=sys.stderr)
        return 2
    betas = []
    try:
        for text in args.beta or ["2,1"]:
            b = parse_shape(text)
            if not b.is_partition_shape():
                raise ShapeError(f"beta {text!r} must be a partition")
            betas.append(b.outer)
    except ShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    gammas = []
    for n in range(1, args.max_size + 1):
        gammas.extend(sorted(connected_shapes(n), key=shape_sort_key))
    work = [(g, betas) for g in gammas]
    try:
        threads = int(os.environ.get("SCHURHOPF_THREADS", "1") or "1")
    except ValueError:
        threads = 1
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_search_one, work))
    else:
        chunks = [_search_one(item) for item in work]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r["gamma"], r["structure"], r["beta"]))

    payload = {"schema": SCHEMA, "maxSize": args.max_size, "instances": rows}
    lines = [
        f"{r['structure']}  beta={r['beta']}  keySize={r['keySize']} "
        f"looseEnds={r['looseEnds']} hypotheses={r['hypothesesHold']} equal={r['equal']}"
        for r in rows
    ]
    lines.append(f"total instances: {len(rows)}")
    _emit(payload, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurhopf",
        description="Exact skew Schur function identities via the shape Hopf algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand a shape's Schur function")
    p_expand.add_argument("shape", help='shape, e.g. "4,4,2,2/2,1" or "3,1" or "0"')
    p_expand.add_argument("--vars", type=int, default=0, help="print the k-variable monomial expansion instead")
    p_expand.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="verify the composition identity on one instance")
    p_verify.add_argument("--beta", required=True)
    p_verify.add_argument("--gamma", required=True)
    p_verify.add_argument("--w", type=int, default=None, help="structure index from detect_wow ordering")
    p_verify.add_argument("--corollary", action="store_true", help="compare against the rotated structure")
    p_verify.add_argument("--trace", action="store_true", help="attach the proof trace")
    p_verify.add_argument("--strict", action="store_true")
    p_verify.add_argument("--json", action="store_true")

    p_search = sub.add_parser("search", help="scan all structures up to a size bound")
    p_search.add_argument("--max-size", type=int, required=True, help="largest gamma size (<= 12 is reasonable)")
    p_search.add_argument("--beta", action="append", help="repeatable; default 2,1")
    p_search.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "expand":
        return cmd_expand(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "search":
        return cmd_search(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
