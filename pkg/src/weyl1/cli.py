"""Command-line front end.

Element arguments are expressions in the X/Y/H grammar; an argument of
the form @path loads an element document instead.  Structured output is
JSON with string rationals; plain output is the canonical printed form.
Exit codes: 0 success, 1 verification failures, 2 usage or input syntax
errors, 3 computation-domain errors (window escape, unverified pair,
exhausted bounds).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .checks import canonical_config, compile_recipe, recipe_from_doc, run_suite
from .core import WeylElement, apply_endo, build_endo, commutator, format_element
from .degrees import Weight, find_generic_weight, newton_polygon, weighted_degree
from .endos import subalgebra_membership
from .errors import DomainError
from .maps import ad, d_xy, d_yx, delta_xy, drop
from .parsing import ParseError, parse
from .scalars import NEG_INF, rat, rat_str
from .semigroup import semigroup_analyze
from .serialize import (
    DocError,
    check_results_to_doc,
    dumps,
    eigen_report_to_doc,
    element_from_doc,
    element_to_doc,
    endo_from_doc,
    endo_to_doc,
    graded_to_doc,
    load_config,
    loads,
    polygon_to_doc,
    semigroup_to_doc,
    weight_to_doc,
)
from .windows import Window, eigenvalue_scan, centralizer_window, nilpotent_closure_window

USAGE_EXIT = 2
DOMAIN_EXIT = 3


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _element_arg(text: str) -> WeylElement:
    if text.startswith("@"):
        return element_from_doc(loads(_read_file(text[1:])))
    return parse(text)


def _endo_arg(path: Optional[str]):
    from .core import identity_endo

    if path is None:
        return identity_endo()
    return endo_from_doc(loads(_read_file(path)))


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_element(args, a: WeylElement) -> None:
    if getattr(args, "json", False):
        _emit(args, dumps(element_to_doc(a)))
    else:
        _emit(args, format_element(a))


def _weight(args) -> Weight:
    return Weight(args.rho, args.eta)


def _degree_str(v) -> str:
    return "-inf" if v == NEG_INF else str(int(v))


def _map_arg(args):
    kind = args.map
    if kind == "ad":
        if args.of is None:
            raise DocError("--map ad needs --of EXPR")
        return ad(_element_arg(args.of))
    endo = _endo_arg(getattr(args, "endo", None))
    if kind == "dyx":
        return d_yx(endo)
    if kind == "dxy":
        return d_xy(endo)
    if kind == "delta":
        return delta_xy(endo)
    raise DocError(f"unknown map kind {kind!r}")


def _add_weight_flags(sub, default=(1, 1)):
    sub.add_argument("--rho", type=int, default=default[0])
    sub.add_argument("--eta", type=int, default=default[1])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="weyl1",
        description="Exact computations in the first Weyl algebra K<X,Y | YX - XY = 1>.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="canonical Y^i X^j form of an expression")
    s.add_argument("expr")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")

    s = sub.add_parser("mul", help="exact product of two elements")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")

    s = sub.add_parser("comm", help="commutator [a, b]")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")

    s = sub.add_parser("grade", help="graded components alpha_n(H) v_n")
    s.add_argument("expr")
    s.add_argument("--out")

    s = sub.add_parser("degree", help="weighted degree v_(rho,eta)")
    s.add_argument("expr")
    _add_weight_flags(s)
    s.add_argument("--out")

    s = sub.add_parser("newton", help="Newton polygon of the support")
    s.add_argument("expr")
    s.add_argument("--out")

    s = sub.add_parser("generic", help="first generic weight for an element")
    s.add_argument("expr")
    s.add_argument("--bound", type=int, default=16)
    s.add_argument("--out")

    s = sub.add_parser("drop", help="drop v(m(a)) - v(a) of a map at an element")
    s.add_argument("expr")
    s.add_argument("--map", required=True, choices=["ad", "dyx", "dxy", "delta"])
    s.add_argument("--of", help="element defining ad(.)")
    s.add_argument("--endo", help="endomorphism document for dyx/dxy/delta")
    _add_weight_flags(s)
    s.add_argument("--out")

    s = sub.add_parser("eig-scan", help="windowed eigenvalue scan of ad(a)")
    s.add_argument("expr")
    s.add_argument("--cap", type=int, required=True)
    _add_weight_flags(s)
    s.add_argument("--candidates", help="comma-separated rationals")
    s.add_argument("--out")

    s = sub.add_parser("centralizer", help="windowed centralizer basis")
    s.add_argument("expr")
    s.add_argument("--cap", type=int, required=True)
    _add_weight_flags(s)
    s.add_argument("--out")

    s = sub.add_parser("nilclosure", help="windowed nilpotent closure of a map")
    s.add_argument("--map", required=True, choices=["ad", "dyx", "dxy", "delta"])
    s.add_argument("--of", help="element defining ad(.)")
    s.add_argument("--endo", help="endomorphism document for dyx/dxy/delta")
    s.add_argument("--cap", type=int, required=True)
    s.add_argument("--max-iter", type=int, default=None)
    _add_weight_flags(s)
    s.add_argument("--out")

    s = sub.add_parser("endo-compile", help="compile a recipe or raw pair")
    s.add_argument("--recipe", help="recipe document (generators and/or raw pair)")
    s.add_argument("--raw", nargs=2, metavar=("X_EXPR", "Y_EXPR"))
    s.add_argument("--out")

    s = sub.add_parser("endo-apply", help="apply an endomorphism to an element")
    s.add_argument("expr")
    s.add_argument("--endo", required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")

    s = sub.add_parser("membership", help="membership in the image subalgebra")
    s.add_argument("expr")
    s.add_argument("--endo", required=True)
    s.add_argument("--slack", type=int, default=4)
    s.add_argument("--out")

    s = sub.add_parser("semigroup", help="gaps and bounds of a numerical monoid")
    s.add_argument("generators", nargs="+", type=int)
    s.add_argument("--horizon", type=int, default=None)
    s.add_argument("--out")

    s = sub.add_parser("verify", help="run the windowed verification suite")
    s.add_argument("--config", help="verify-config document (default: canonical)")
    s.add_argument("--report", help="write the full JSON report here")

    return p


def _cmd_normalize(args) -> int:
    _emit_element(args, _element_arg(args.expr))
    return 0


def _cmd_mul(args) -> int:
    _emit_element(args, _element_arg(args.a) * _element_arg(args.b))
    return 0


def _cmd_comm(args) -> int:
    _emit_element(args, commutator(_element_arg(args.a), _element_arg(args.b)))
    return 0


def _cmd_grade(args) -> int:
    _emit(args, dumps(graded_to_doc(_element_arg(args.expr))))
    return 0


def _cmd_degree(args) -> int:
    v = weighted_degree(_weight(args), _element_arg(args.expr))
    _emit(args, _degree_str(v))
    return 0


def _cmd_newton(args) -> int:
    poly = newton_polygon(_element_arg(args.expr))
    _emit(args, dumps(polygon_to_doc(poly)))
    return 0


def _cmd_generic(args) -> int:
    w = find_generic_weight(_element_arg(args.expr), args.bound)
    if w is None:
        raise DomainError(f"no generic weight within bound {args.bound}")
    _emit(args, f"{w.rho} {w.eta}")
    return 0


def _cmd_drop(args) -> int:
    m = _map_arg(args)
    value = drop(m, _weight(args), _element_arg(args.expr))
    _emit(args, _degree_str(value))
    return 0


def _cmd_eig_scan(args) -> int:
    a = _element_arg(args.expr)
    win = Window(_weight(args), args.cap)
    candidates = None
    if args.candidates:
        candidates = [rat(tok) for tok in args.candidates.split(",") if tok.strip()]
    report = eigenvalue_scan(a, win, candidates)
    _emit(args, dumps(eigen_report_to_doc(report)))
    return 0


def _cmd_centralizer(args) -> int:
    a = _element_arg(args.expr)
    win = Window(_weight(args), args.cap)
    basis = centralizer_window(a, win)
    doc = {
        "format": "weyl-centralizer-report",
        "version": 1,
        "a": format_element(a),
        "weight": weight_to_doc(win.weight),
        "cap": win.cap,
        "dimension": len(basis),
        "basis": [format_element(u) for u in basis],
    }
    _emit(args, dumps(doc))
    return 0


def _cmd_nilclosure(args) -> int:
    m = _map_arg(args)
    win = Window(_weight(args), args.cap)
    max_iter = args.max_iter if args.max_iter is not None else 4 * args.cap + 1
    basis = nilpotent_closure_window(m, win, max_iter)
    doc = {
        "format": "weyl-nilclosure-report",
        "version": 1,
        "map": m.describe(),
        "weight": weight_to_doc(win.weight),
        "cap": win.cap,
        "max_iter": max_iter,
        "dimension": len(basis),
        "basis": [format_element(u) for u in basis],
    }
    _emit(args, dumps(doc))
    return 0


def _cmd_endo_compile(args) -> int:
    if (args.recipe is None) == (args.raw is None):
        raise DocError("endo-compile needs exactly one of --recipe or --raw")
    if args.recipe is not None:
        recipe = recipe_from_doc(loads(_read_file(args.recipe)))
        pair = compile_recipe(recipe)
    else:
        pair = build_endo(parse(args.raw[0]), parse(args.raw[1]))
        if not pair.verified:
            from .errors import UnverifiedEndoError

            raise UnverifiedEndoError(
                f"[y, x] = {format_element(pair.defect)} != 1"
            )
    _emit(args, dumps(endo_to_doc(pair)))
    return 0


def _cmd_endo_apply(args) -> int:
    endo = _endo_arg(args.endo)
    _emit_element(args, apply_endo(endo, _element_arg(args.expr)))
    return 0


def _cmd_membership(args) -> int:
    endo = _endo_arg(args.endo)
    a = _element_arg(args.expr)
    verdict = subalgebra_membership(endo, a, args.slack)
    doc = {
        "format": "weyl-membership-report",
        "version": 1,
        "element": format_element(a),
        "slack": verdict.slack,
        "member": verdict.member,
        "witness": None
        if verdict.witness is None
        else [
            {"i": i, "j": j, "c": rat_str(c)}
            for (i, j), c in sorted(verdict.witness.items())
        ],
    }
    _emit(args, dumps(doc))
    return 0


def _cmd_semigroup(args) -> int:
    data = semigroup_analyze(args.generators, args.horizon)
    _emit(args, dumps(semigroup_to_doc(data)))
    return 0


def _cmd_verify(args) -> int:
    if args.config:
        config = load_config(loads(_read_file(args.config)))
    else:
        config = canonical_config()
    results = run_suite(config)
    for r in results:
        sys.stdout.write(r.line() + "\n")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dumps(check_results_to_doc(results, config)))
    return 0 if all(r.passed for r in results) else 1


_COMMANDS = {
    "normalize": _cmd_normalize,
    "mul": _cmd_mul,
    "comm": _cmd_comm,
    "grade": _cmd_grade,
    "degree": _cmd_degree,
    "newton": _cmd_newton,
    "generic": _cmd_generic,
    "drop": _cmd_drop,
    "eig-scan": _cmd_eig_scan,
    "centralizer": _cmd_centralizer,
    "nilclosure": _cmd_nilclosure,
    "endo-compile": _cmd_endo_compile,
    "endo-apply": _cmd_endo_apply,
    "membership": _cmd_membership,
    "semigroup": _cmd_semigroup,
    "verify": _cmd_verify,
}


def _error(kind: str, exc: Exception) -> None:
    import json

    sys.stderr.write(json.dumps({"error": kind, "detail": str(exc)}) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        return handler(args)
    except (ParseError, DocError, OSError) as exc:
        _error("input", exc)
        return USAGE_EXIT
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        _error("domain", exc)
        return DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
