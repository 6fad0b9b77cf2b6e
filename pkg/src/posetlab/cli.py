"""Command-line surface: analyze / wpoly / decompose / cd / verify / gen.

Exit codes: 0 all good, 1 violations found, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import posetfile
from .errors import PosetlabError, ParseError
from .generate import exhaustive_posets, random_posets
from .grading import classify, is_canonical
from .partitions import (
    is_realizable,
    order_polynomial,
    w_polynomial,
)
from .polynomial import real_nonpositive_roots, symmetric_expand, to_e_vector
from .structure import charney_davis, reverse_alternating_count, saturated_decomposition
from .suites import SUITES, run_suite


def _as_labeled(obj):
    from .poset import LabeledPoset, Poset
    if isinstance(obj, Poset):
        omega = {x: i + 1 for i, x in enumerate(obj.elements)}
        return LabeledPoset.with_omega(obj, omega)
    return obj


def _poly_str(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else str(c))
            terms.append(f"{head}t" if i == 1 else f"{head}t^{i}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _analyze_report(lp) -> dict:
    poset = lp.poset
    cls = classify(lp)
    report = {
        "elements": list(poset.elements),
        "covers": poset.cover_names(),
        "signs": lp.sign_items(),
        "grading": {
            "consistent": cls.consistent,
            "graded": cls.graded,
            "rank_function": cls.rank_function,
            "rank": cls.rank,
            "dual_consistent": cls.dual_consistent,
        },
        "realizable": is_realizable(lp),
        "w_polynomial": None,
        "order_basis_coefficients": None,
        "symmetric_expansion": None,
        "e_vector": None,
        "charney_davis": None,
        "reverse_alternating_count": None,
        "saturated_decomposition": None,
        "real_nonpositive_roots": None,
    }
    if not report["realizable"]:
        return report
    w = w_polynomial(lp)
    report["w_polynomial"] = {"coefficients": list(w.coeffs),
                              "display": _poly_str(w.coeffs)}
    report["order_basis_coefficients"] = list(order_polynomial(lp).w.coeffs)
    report["e_vector"] = list(to_e_vector(w, poset.p).e)
    report["real_nonpositive_roots"] = real_nonpositive_roots(w)
    if cls.graded:
        d = poset.p - cls.rank - 1
        expansion = symmetric_expand(w, d)
        report["symmetric_expansion"] = {"d": d, "a": list(expansion.a),
                                         "nonnegative": expansion.nonnegative}
        report["charney_davis"] = charney_davis(lp)
        if is_canonical(lp):
            report["reverse_alternating_count"] = reverse_alternating_count(lp)
    if cls.consistent:
        parts = saturated_decomposition(lp).parts
        report["saturated_decomposition"] = {
            "count": len(parts),
            "parts": [{"covers": q.poset.cover_names(),
                       "w_polynomial": list(w_polynomial(q).coeffs)}
                      for q in parts],
        }
    return report


def _print_pretty(report) -> None:
    g = report["grading"]
    print(f"elements: {len(report['elements'])}   covers: {len(report['covers'])}")
    print(f"consistent: {g['consistent']}   graded: {g['graded']}"
          f"   rank: {g['rank']}   dual consistent: {g['dual_consistent']}")
    if g["rank_function"] is not None:
        ranks = ", ".join(f"{x}:{r}" for x, r in sorted(g["rank_function"].items()))
        print(f"rank function: {ranks}")
    if report["w_polynomial"] is not None:
        print(f"W(t) = {report['w_polynomial']['display']}")
        print(f"e-vector: {report['e_vector']}")
        print(f"real non-positive zeros: {report['real_nonpositive_roots']}")
    exp = report["symmetric_expansion"]
    if exp is not None:
        print(f"symmetric in degree {exp['d']}, a = {exp['a']},"
              f" non-negative: {exp['nonnegative']}")
    if report["charney_davis"] is not None:
        print(f"Charney-Davis quantity: {report['charney_davis']}")
    if report["reverse_alternating_count"] is not None:
        print(f"reverse alternating count: {report['reverse_alternating_count']}")
    dec = report["saturated_decomposition"]
    if dec is not None:
        print(f"saturated decomposition: {dec['count']} part(s)")


def _cmd_analyze(args) -> int:
    lp = _as_labeled(posetfile.load(args.file))
    report = _analyze_report(lp)
    if args.pretty:
        _print_pretty(report)
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_wpoly(args) -> int:
    lp = _as_labeled(posetfile.load(args.file))
    w = w_polynomial(lp)
    print(json.dumps({"coefficients": list(w.coeffs),
                      "display": _poly_str(w.coeffs)}))
    return 0


def _cmd_decompose(args) -> int:
    lp = _as_labeled(posetfile.load(args.file))
    parts = saturated_decomposition(lp).parts
    out = [{"covers": q.poset.cover_names(),
            "omega": q.omega_map(),
            "w_polynomial": list(w_polynomial(q).coeffs)} for q in parts]
    print(json.dumps({"count": len(parts), "parts": out}, indent=2))
    return 0


def _cmd_cd(args) -> int:
    lp = _as_labeled(posetfile.load(args.file))
    print(json.dumps({"charney_davis": charney_davis(lp)}))
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, max_size=args.max_size, seed=args.seed,
                       count=args.random)
    payload = {"suite": report.suite, "examined": report.examined,
               "violations": report.violations,
               "passed": report.passed,
               "conjecture": report.conjecture,
               "elapsed_seconds": round(report.elapsed, 3)}
    print(json.dumps(payload, indent=2, default=str))
    return 0 if report.passed else 1


def _cmd_gen(args) -> int:
    if args.random is not None:
        posets = random_posets(args.size, count=args.random,
                               seed=args.seed if args.seed is not None else 0)
    else:
        posets = exhaustive_posets(args.size)
    from .poset import LabeledPoset
    for poset in posets:
        omega = {x: i + 1 for i, x in enumerate(poset.elements)}
        lp = LabeledPoset.with_omega(poset, omega)
        print(json.dumps(posetfile.to_dict(lp), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetlab",
        description="Sign-graded labeled posets: invariants and theorem checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func in (("analyze", _cmd_analyze), ("wpoly", _cmd_wpoly),
                       ("decompose", _cmd_decompose), ("cd", _cmd_cd)):
        p = sub.add_parser(name)
        p.add_argument("file")
        if name == "analyze":
            fmt = p.add_mutually_exclusive_group()
            fmt.add_argument("--json", action="store_true", default=True)
            fmt.add_argument("--pretty", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("verify")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--random", type=int, default=None, metavar="K")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--random", type=int, default=None, metavar="K")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PosetlabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
