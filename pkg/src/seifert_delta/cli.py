"""Command line surface: exact results as JSON (or a plain table).

Exact values are always rendered as strings like "p/q"; floating point
numbers appear only under the "diagnostics" key.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error, 3 domain violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .arith import (
    dedekind_sum,
    dedekind_sum_numeric,
    lambda_sum,
    lambda_sum_numeric,
)
from .errors import (
    ConditionViolation,
    InconsistentClass,
    InvalidFraction,
    NotCoprime,
    ParseError,
    SeifertDeltaError,
    UnknownSuite,
    WrongForm,
    ZeroEuler,
)
from .invariants import (
    UnorderedPair,
    delta,
    delta_multiset,
    plus_first_policy,
    swf_descriptor,
    unresolved_policy,
)
from .lens import LensSpace, lens_delta
from .plumbing import (
    lattice_signature,
    neg_cont_frac,
    sigma_relation_check,
    star_lattice_double,
    star_plumbing_double,
)
from .prism import Character, MetacyclicParams, eta_diff_closed, metacyclic_eta_dir, pinc_sign_rp2a
from .seifert import degree_l, euler_char, h1_order, parse_seifert
from .spinc import enumerate_spinc, spinc_to_json
from .verify import SUITES, run_suite

SCHEMA = "seifert-delta/1"

_POLICIES = {"unresolved": unresolved_policy, "plus-first": plus_first_policy}

_DOMAIN_ERRORS = (
    NotCoprime,
    InconsistentClass,
    ConditionViolation,
    WrongForm,
    ZeroEuler,
    InvalidFraction,
    ValueError,
)


def _thread_cap() -> int:
    raw = os.environ.get("SEIFERT_DELTA_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        return 1
    return max(1, cap)


def _report(command: str, inputs: dict, result, diagnostics: dict | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "result": result,
        "diagnostics": diagnostics or {},
    }


def _delta_json(value) -> object:
    if isinstance(value, UnorderedPair):
        return [str(value.lo), str(value.hi)]
    return str(value)


def _multiset_json(counts) -> list:
    return [
        {"value": str(v), "count": counts[v]} for v in sorted(counts)
    ]


def _cmd_delta(args) -> dict:
    S = parse_seifert(args.seifert)
    policy = _POLICIES[args.policy]
    structures = []
    for s in enumerate_spinc(S):
        rec = spinc_to_json(s)
        rec["delta_invariant"] = _delta_json(delta(s, S, policy))
        rec["swf"] = swf_descriptor(s, S, policy)
        structures.append(rec)
    result = {
        "seifert": str(S),
        "l": str(degree_l(S)),
        "chi": str(euler_char(S)),
        "h1_order": h1_order(S),
        "policy": args.policy,
        "structures": structures,
        "multiset": _multiset_json(delta_multiset(S)),
    }
    return _report("delta", {"seifert": args.seifert, "policy": args.policy}, result)


def _cmd_lens(args) -> dict:
    L = LensSpace(args.a, args.b)
    labels = [args.u] if args.u is not None else list(range(args.a))
    rows = [{"u": u, "delta": str(lens_delta(L, u))} for u in labels]
    residual = 0.0
    if args.a > 1:
        b = args.b % args.a
        residual = max(
            abs(
                complex(lens_delta(L, u))
                - (lambda_sum_numeric(b, args.a, u) - dedekind_sum_numeric(b, args.a) / 2)
            )
            for u in labels
        )
    result = {"lens": f"L({args.a},{args.b})", "deltas": rows}
    return _report(
        "lens",
        {"a": args.a, "b": args.b, "u": args.u},
        result,
        {"numeric_residual": residual},
    )


def _cmd_dedekind(args) -> dict:
    value = dedekind_sum(args.b, args.a)
    numeric = dedekind_sum_numeric(args.b, args.a)
    return _report(
        "dedekind",
        {"b": args.b, "a": args.a},
        {"value": str(value)},
        {"numeric_residual": abs(numeric - complex(value)), "numeric_imag": numeric.imag},
    )


def _cmd_lambda(args) -> dict:
    value = lambda_sum(args.b, args.a, args.n)
    numeric = lambda_sum_numeric(args.b, args.a, args.n)
    return _report(
        "lambda",
        {"b": args.b, "a": args.a, "n": args.n},
        {"value": str(value)},
        {"numeric_residual": abs(numeric - complex(value)), "numeric_imag": numeric.imag},
    )


def _cmd_prism(args) -> dict:
    p = MetacyclicParams(args.m, args.r)
    rows = []
    etas = []
    for nu in (0, 1):
        for u in range(2 * args.m):
            c = Character(nu, u)
            eta = metacyclic_eta_dir(p, c)
            eta_partner = metacyclic_eta_dir(p, c.partner(args.m))
            sign = pinc_sign_rp2a(args.m, u).value if nu == 0 else None
            rows.append(
                {
                    "nu": nu,
                    "u": u,
                    "partner_u": (u + args.m) % (2 * args.m),
                    "delta_diff": str(eta_diff_closed(args.m, c)),
                    "pinc_sign": str(sign) if sign is not None else None,
                }
            )
            etas.append(
                {"nu": nu, "u": u, "eta_dir": eta, "eta_diff": eta - eta_partner}
            )
    result = {"group_order": p.order, "characters": rows}
    return _report("prism", {"m": args.m, "r": args.r}, result, {"eta_dir": etas})


def _cmd_plumb(args) -> dict:
    S = parse_seifert(args.seifert)
    graph = star_plumbing_double(S)
    lattice = star_lattice_double(S)
    sig_double = lattice_signature(lattice)
    sig_base = -sum(len(neg_cont_frac(a, a - bi)) for a, bi in S.arms)
    l = degree_l(S)
    eps = (l > 0) - (l < 0)
    result = {
        "seifert": str(S),
        "central_weight": graph.central_weight,
        "arms": [list(chain) for chain in graph.arms],
        "matrix": [list(row) for row in lattice.matrix],
        "sigma_double_cover": sig_double,
        "sigma_base": sig_base,
        "epsilon": eps,
        "relation_holds": sigma_relation_check(S),
    }
    return _report("plumb", {"seifert": args.seifert}, result)


def _cmd_verify(args) -> tuple[dict, bool]:
    bound = args.bound if args.bound is not None else args.bound_flag
    if args.suite != "all" and args.suite not in SUITES:
        raise UnknownSuite(
            f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or 'all'"
        )
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cap = min(_thread_cap(), len(names)) or 1
    if cap > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=cap) as pool:
            reports = [r for sub in pool.map(lambda n: run_suite(n, bound), names) for r in sub]
    else:
        reports = [r for n in names for r in run_suite(n, bound)]
    ok = all(r.ok for r in reports)
    result = {
        "suites": [
            {
                "suite": r.suite,
                "bound": r.bound,
                "passed": r.passed,
                "failed": r.failed,
                "checks": [
                    {
                        "name": c.name,
                        "ok": c.ok,
                        "cases": c.cases,
                        "counterexample": c.counterexample,
                    }
                    for c in r.checks
                ],
            }
            for r in reports
        ],
        "passed": sum(r.passed for r in reports),
        "failed": sum(r.failed for r in reports),
    }
    return _report("verify", {"suite": args.suite, "bound": bound}, result), ok


def _render_table(report: dict, out) -> None:
    result = report["result"]
    print(f"# {report['command']}", file=out)
    if "structures" in result:
        for key in ("seifert", "l", "chi", "h1_order", "policy"):
            print(f"{key}: {result[key]}", file=out)
        print("m tau e gamma delta value", file=out)
        for rec in result["structures"]:
            value = rec["delta_invariant"]
            if isinstance(value, list):
                value = "{" + ", ".join(value) + "}"
            print(
                f"{rec['m']:>2} {rec['tau']} {rec['e']:>6} "
                f"{tuple(rec['gamma'])} {tuple(rec['delta'])} {value}",
                file=out,
            )
        print("multiset:", file=out)
        for entry in result["multiset"]:
            print(f"  {entry['value']}: {entry['count']}", file=out)
        return
    _render_plain(result, out, indent=0)


def _render_plain(node, out, indent: int) -> None:
    pad = "  " * indent
    if isinstance(node, dict):
        for k, v in node.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:", file=out)
                _render_plain(v, out, indent + 1)
            else:
                print(f"{pad}{k}: {v}", file=out)
    elif isinstance(node, list):
        for v in node:
            if isinstance(v, list) and not any(isinstance(x, (dict, list)) for x in v):
                print(f"{pad}- {v}", file=out)
            elif isinstance(v, (dict, list)):
                _render_plain(v, out, indent)
            else:
                print(f"{pad}- {v}", file=out)
    else:
        print(f"{pad}{node}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-delta",
        description="Exact delta invariants of Seifert rational homology spheres over RP^2.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--table", action="store_true", help="plain-text table instead of JSON"
    )
    parser.add_argument(
        "--json", dest="table", action="store_false", help="JSON output (default)"
    )
    parser.set_defaults(table=False)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("delta", help="delta invariants of S(b;(a1,b1),...)")
    p.add_argument("seifert", help='Seifert data, e.g. "1;(2,1),(2,1)"')
    p.add_argument("--policy", choices=sorted(_POLICIES), default="unresolved")

    p = sub.add_parser("lens", help="delta invariants of the lens space L(a,b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("u", type=int, nargs="?", default=None)

    p = sub.add_parser("dedekind", help="Dedekind sum s(b,a)")
    p.add_argument("b", type=int)
    p.add_argument("a", type=int)

    p = sub.add_parser("lambda", help="lambda(b,a;n)")
    p.add_argument("b", type=int)
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("prism", help="metacyclic character table for RP^2(m)")
    p.add_argument("m", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("plumb", help="plumbing lattice and signature relation")
    p.add_argument("seifert")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite")
    p.add_argument("bound", type=int, nargs="?", default=None)
    p.add_argument("--bound", dest="bound_flag", type=int, default=12)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    out = sys.stdout
    try:
        ok = True
        if args.cmd == "delta":
            report = _cmd_delta(args)
        elif args.cmd == "lens":
            report = _cmd_lens(args)
        elif args.cmd == "dedekind":
            report = _cmd_dedekind(args)
        elif args.cmd == "lambda":
            report = _cmd_lambda(args)
        elif args.cmd == "prism":
            report = _cmd_prism(args)
        elif args.cmd == "plumb":
            report = _cmd_plumb(args)
        else:
            report, ok = _cmd_verify(args)
    except (ParseError, UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SeifertDeltaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    if args.table:
        _render_table(report, out)
    else:
        json.dump(report, out, ensure_ascii=False)
        out.write("\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
