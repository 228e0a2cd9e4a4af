"""Command-line interface: ``rncfan <verb> [options]``.

Exit codes are 0 on success, 1 on a domain error and 2 on a usage error.
Errors go to standard error as a JSON object ``{"error": code, "message": ...}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import fan
from .combinatorics import canonical_permutation, check_sequence, cm_sequences
from .groebner import cm_reduced_gb, initial_forms
from .hilbsym import compare_invariants, symbolic_h
from .polyhedra import DegenerateCone
from .tpoly import FiberViolation, MonomialIdeal, NotIGPhi, ideal_components
from .xy_ideals import (
    InconsistentResult,
    WindowTooSmall,
    deviation,
    h_polynomial,
    minplus_product,
    multiplicity,
    parse_sequence,
    parse_weight,
    zariski_product_cm,
)


class UsageError(Exception):
    pass


ERROR_CODES = [
    (fan.TraversalCapExceeded, "cap-exceeded"),
    (fan.FlipFailure, "flip-failure"),
    (FiberViolation, "fiber-violation"),
    (NotIGPhi, "not-igphi"),
    (WindowTooSmall, "window-too-small"),
    (InconsistentResult, "inconsistent-result"),
    (DegenerateCone, "degenerate-cone"),
    (ValueError, "invalid-input"),
    (ArithmeticError, "arithmetic-error"),
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- verbs --------------------------------------------------------------------

def _parse_ideal(text: str, d: int) -> MonomialIdeal:
    return MonomialIdeal.parse(text, d)


def cmd_classify(args):
    a = parse_sequence(args.a)
    report = h_polynomial(a)
    dev = deviation(a)
    out = {"a": list(a.a), "d": a.d}
    out.update(report.to_json())
    out.update({
        "multiplicity": multiplicity(a),
        "deviation": dev,
        "cm": dev == 0,
        "lex_segment": a.is_lex_segment,
    })
    if a.d >= 1:
        out["cones"] = [list(i) for i in fan.cones_containing(a.a, a.d, closed=True)]
    return out


def cmd_product(args):
    factors = [parse_sequence(t) for t in args.factors.split(";") if t.strip()]
    if not factors:
        raise ValueError("no factors given")
    if args.same_direction:
        prod = factors[0]
        for f in factors[1:]:
            prod = minplus_product(prod, f)
        dev = deviation(prod)
        return {
            "mode": "same-direction",
            "factors": [list(f.a) for f in factors],
            "product": list(prod.a),
            "deviation": dev,
            "cm": dev == 0,
        }
    return {
        "mode": "independent-directions",
        "factors": [list(f.a) for f in factors],
        "factor_deviations": [deviation(f) for f in factors],
        "cm": zariski_product_cm(factors),
    }


def cmd_cm_list(args):
    rows = []
    for i in cm_sequences(args.d):
        gb = cm_reduced_gb(i)
        rows.append({
            "sequence": list(i),
            "permutation": list(canonical_permutation(i)),
            "initial_ideal": gb.initial_ideal().to_json(),
            "gb": gb.lines(),
        })
    return rows


def cmd_gb(args):
    w = parse_weight(args.weight)
    if len(w) != args.d + 1:
        raise ValueError(f"weight has length {len(w)}, expected {args.d + 1}")
    forms = initial_forms(args.d, w, args.tiebreak)
    gb = forms.gb
    cone = fan.groebner_cone(gb)
    return {
        "d": args.d,
        "order": gb.order.to_json(),
        "gb": gb.lines(),
        "initial_ideal": gb.initial_ideal().to_json(),
        "weight_initial_forms": forms.lines(),
        "weight_is_generic": forms.is_monomial,
        "cone": cone.to_json(),
    }


def cmd_fan(args):
    cap = args.max_d if args.max_d is not None else None
    cells = fan.traverse_fan(args.d, cap=cap)
    if args.top_check:
        cache: dict = {}
        bad = []
        for c1 in cells:
            for c2 in cells:
                r = compare_invariants(c1.initial_ideal, c2.initial_ideal, cache)
                if not r.toppo_consistent:
                    bad.append({"ideal1": c1.initial_ideal.to_json(), "ideal2": c2.initial_ideal.to_json()})
        return {"pairs": len(cells) ** 2, "counterexamples": bad}
    if args.census:
        return {str(k): v for k, v in fan.depth_census(args.d, cells).items()}
    return [c.to_json() for c in cells]


def cmd_bigcone(args):
    big = fan.big_cone(args.d)
    out = big.to_json()
    if args.member is not None:
        a = parse_weight(args.member)
        if len(a) != args.d + 1:
            raise ValueError(f"sequence has length {len(a)}, expected {args.d + 1}")
        out["member"] = big.member(a)
    return out


def _ideal_arg(args) -> MonomialIdeal:
    if args.sequence is not None:
        i = check_sequence(int(x) for x in args.sequence.split(","))
        if i[-1] != args.d:
            raise ValueError(f"sequence must end at d={args.d}")
        return cm_reduced_gb(i).initial_ideal()
    return _parse_ideal(args.ideal, args.d)


def cmd_symbolic(args):
    I = _ideal_arg(args)
    s = symbolic_h(I)
    out = {"ideal": I.to_json()}
    out.update(s.to_json())
    out["h_text"] = [str(f) for f in s.h]
    out["e_text"] = [str(f) for f in s.e]
    return out


def cmd_compare(args):
    I = _parse_ideal(args.ideal1, args.d)
    J = _parse_ideal(args.ideal2, args.d)
    out = compare_invariants(I, J).to_json()
    ci, cj = ideal_components(I), ideal_components(J)
    out["components"] = {"ideal1": ci.to_json(), "ideal2": cj.to_json()}
    return out


def cmd_selftest(args):
    from .checks import run_all

    results = run_all(args.only or None)
    return {
        "passed": all(r.passed for r in results),
        "criteria": [r.to_json() for r in results],
    }


# -- plumbing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--json", action="store_const", const="json", dest="format",
                        help="shorthand for --format json")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    parser = _Parser(prog="rncfan", description="Contracted ideals and the Groebner fan of the rational normal curve.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="Hilbert data and CM test of an a-sequence")
    p.add_argument("--a", required=True, help="comma-separated a-sequence, e.g. 0,2,6,7,9")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("product", parents=[common], help="CM test of a product of ideals")
    p.add_argument("--factors", required=True, help="semicolon-separated a-sequences")
    p.add_argument("--same-direction", action="store_true",
                   help="multiply in one direction (min-plus product) instead of independent ones")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("cm-list", parents=[common], help="catalog of Cohen-Macaulay initial ideals")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_cm_list)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis and its cone")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--weight", required=True, help="comma-separated weights (integers or fractions)")
    p.add_argument("--tiebreak", choices=("lex", "revlex"), default="lex")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("fan", parents=[common], help="all maximal cells of the Groebner fan")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--census", action="store_true", help="only the depth histogram")
    p.add_argument("--top-check", action="store_true",
                   help="list cell pairs where Q equality and top-component equality disagree")
    p.add_argument("--max-d", type=int, help="override the traversal cap (default 6 or RNC_MAX_D)")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("bigcone", parents=[common], help="the big Cohen-Macaulay cone")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--member", help="test membership of an a-sequence")
    p.set_defaults(func=cmd_bigcone)

    p = sub.add_parser("symbolic", parents=[common], help="h-forms and Hilbert coefficients of a cell")
    p.add_argument("--d", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sequence", help="CM sequence i, e.g. 0,3,4,6")
    g.add_argument("--ideal", help="semicolon-separated monomials, e.g. 't0*t2;t1^2'")
    p.set_defaults(func=cmd_symbolic)

    p = sub.add_parser("compare", parents=[common], help="compare Hilbert invariants of two cells")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ideal1", required=True)
    p.add_argument("--ideal2", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    p.set_defaults(func=cmd_selftest)
    return parser


def _scalar(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render(payload, fmt: str, verb: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if isinstance(payload, list):
            keys = list(dict.fromkeys(k for row in payload for k in row))
            writer.writerow(keys)
            for row in payload:
                writer.writerow([_scalar(row.get(k, "")) for k in keys])
        else:
            writer.writerow(["key", "value"])
            for k, v in payload.items():
                writer.writerow([k, _scalar(v)])
        return buf.getvalue()
    if verb == "selftest":
        lines = []
        for r in payload["criteria"]:
            verdict = "PASS" if r["passed"] else "FAIL"
            lines.append(f"[{verdict}] {r['number']:2d}. {r['title']} ({r['seconds']:.2f}s)")
            lines.extend(f"      {x}" for x in r["detail"])
        lines.append("all passed" if payload["passed"] else "some criteria failed")
        return "\n".join(lines) + "\n"
    if verb == "fan" and isinstance(payload, dict) and all(k.isdigit() for k in payload):
        # a depth histogram reads best as one JSON line
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if isinstance(payload, list):
        return "\n".join(_text_block(row) for row in payload) + ("\n" if payload else "")
    return _text_block(payload)


def _text_block(d: dict) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
            lines.append(f"{k}:")
            lines.extend(f"  {x}" for x in v)
        else:
            lines.append(f"{k}: {_scalar(v)}")
    return "\n".join(lines) + "\n"


def _fail(code: str, message: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    try:
        payload = args.func(args)
    except Exception as exc:
        for cls, code in ERROR_CODES:
            if isinstance(exc, cls):
                return _fail(code, str(exc), 1)
        raise
    text = render(payload, args.format, args.verb)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.verb == "selftest" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
