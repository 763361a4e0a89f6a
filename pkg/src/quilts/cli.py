"""Command-line front end.

Counts are printed as bare decimal integers; pass --json for structured
output and --out to write the payload to a file.  Exit codes: 0 on success,
1 when a verification check fails or --check finds a disagreement, 2 on
usage or tractability errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dedekind import build_dedekind_graph, dedekind_numbers
from .enumeration import (
    SEQUENCE_NAMES,
    antichain_quilt_count,
    chain_quilt_polynomial,
    chain_quilt_values,
    count_quilts_bruteforce,
    enumerate_fundamental,
    enumerate_quilts,
    fundamental_counts,
    mt_top_set_count,
    antichain_quilt_profile,
    quilts_boolean_chain,
    sequence_terms,
)
from .enumeration import quilts_antichain_boolean
from .errors import QuiltsError, TractabilityError
from .expr import antichain_width, boolean_rank, chain_rank, eval_expr, parse_poset_expr
from .quilt import covers_up, jump_sets, mt_form, quilt_rank
from .verification import run_checks

CHECK_NODE_CAP = 10**7


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _poset(text: str):
    expr = parse_poset_expr(text)
    return expr, eval_expr(expr)


def _pick_engine(args, pexpr, qexpr, p, q):
    """Cheapest applicable engine for the requested pair, with its runner.

    The antichain formula applies when one side is literally A<j>; walk
    counting applies when one side is literally C<n> and the other side's
    map graph fits the cap; everything else falls back to brute force.
    Counts are symmetric under switching, so either side may match.
    """
    choices = []
    j = antichain_width(qexpr)
    if j is not None and p.rank >= 2:
        choices.append(("antichain", lambda: antichain_quilt_count(p, j)))
    j2 = antichain_width(pexpr)
    if j2 is not None and q.rank >= 2:
        choices.append(("antichain", lambda: antichain_quilt_count(q, j2)))
    n = chain_rank(qexpr)
    if n is not None:
        choices.append(("transfer", lambda: chain_quilt_values(p, n)[n]))
    n2 = chain_rank(pexpr)
    if n2 is not None:
        choices.append(("transfer", lambda: chain_quilt_values(q, n2)[n2]))
    bn, bk = boolean_rank(pexpr), boolean_rank(qexpr)
    if bn is not None and n is not None:
        choices.append(("transfer", lambda: quilts_boolean_chain(bn, n)))
    if bk is not None and n2 is not None:
        choices.append(("transfer", lambda: quilts_boolean_chain(bk, n2)))
    if j is not None and bn is not None:
        choices.append(("antichain", lambda: quilts_antichain_boolean(j, bn)))
    if j2 is not None and bk is not None:
        choices.append(("antichain", lambda: quilts_antichain_boolean(j2, bk)))
    choices.append(
        ("brute", lambda: count_quilts_bruteforce(p, q, threads=args.threads))
    )
    wanted = args.engine
    for name, runner in choices:
        if wanted != "auto" and name != wanted:
            continue
        try:
            return name, runner()
        except TractabilityError:
            if wanted != "auto":
                raise
    if wanted in ("antichain", "transfer"):
        raise QuiltsError(f"the {wanted} engine does not apply to this pair")
    raise TractabilityError("no engine can handle this pair at desk scale")


def cmd_count(args) -> int:
    pexpr, p = _poset(args.p)
    qexpr, q = _poset(args.q)
    engine, value = _pick_engine(args, pexpr, qexpr, p, q)
    if args.check and engine != "brute":
        try:
            brute = count_quilts_bruteforce(p, q, threads=args.threads, node_cap=CHECK_NODE_CAP)
        except TractabilityError:
            print("check skipped: brute force beyond its node cap", file=sys.stderr)
        else:
            if brute != value:
                print(
                    f"engine disagreement: {engine} gave {value}, brute force gave {brute}",
                    file=sys.stderr,
                )
                return 1
    if args.json:
        _emit(args, json.dumps({"engine": engine, "count": str(value)}))
    else:
        _emit(args, str(value))
    return 0


def cmd_poly(args) -> int:
    _, p = _poset(args.p)
    poly = chain_quilt_polynomial(p)
    if args.json:
        _emit(args, json.dumps({"polynomial": poly.to_json_dict(), "monomial": poly.monomial_form()}))
    else:
        _emit(args, json.dumps(poly.to_json_dict()) + "\n= " + poly.monomial_form())
    return 0


def cmd_fundamental(args) -> int:
    _, p = _poset(args.p)
    if args.count_only:
        count = fundamental_counts(p).get(args.m, 0)
        _emit(args, json.dumps({"m": args.m, "count": str(count)}) if args.json else str(count))
        return 0
    quilts = list(enumerate_fundamental(p, args.m))
    if args.json:
        payload = {
            "m": args.m,
            "count": len(quilts),
            "quilts": [[sorted(s) for s in jump_sets(f)] for f in quilts],
        }
        _emit(args, json.dumps(payload))
    else:
        blocks = [mt_form(f) for f in quilts]
        _emit(args, f"count {len(quilts)}\n" + "\n\n".join(blocks))
    return 0


def cmd_mt(args) -> int:
    _, p = _poset(args.p)
    topset = tuple(int(x) for x in args.topset.split(","))
    value = mt_top_set_count(p, topset)
    _emit(args, json.dumps({"topset": list(topset), "count": str(value)}) if args.json else str(value))
    return 0


def cmd_antichain_profile(args) -> int:
    _, p = _poset(args.p)
    profile = antichain_quilt_profile(p)
    if args.json:
        _emit(args, json.dumps(profile.to_json_list()))
    else:
        _emit(args, profile.formula())
    return 0


def cmd_dedekind(args) -> int:
    _, p = _poset(args.p)
    if args.dot or args.matrix:
        graph = build_dedekind_graph(p, restricted=args.restricted)
        text = graph.to_dot() if args.dot else "\n".join(graph.matrix_lines())
        _emit(args, text)
        return 0
    numbers = dedekind_numbers(p)
    if args.json:
        _emit(args, json.dumps([str(x) for x in numbers]))
    else:
        _emit(args, " ".join(str(x) for x in numbers))
    return 0


def cmd_hasse(args) -> int:
    _, p = _poset(args.p)
    _, q = _poset(args.q)
    quilts = list(enumerate_quilts(p, q))
    index = {f.values: i for i, f in enumerate(quilts)}
    lines = ["digraph quilt_lattice {"]
    for i, f in enumerate(quilts):
        lines.append(f'  q{i} [label="{quilt_rank(f)}"];')
    for i, f in enumerate(quilts):
        for g in covers_up(f):
            lines.append(f"  q{i} -> q{index[g.values]};")
    lines.append("}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_sequence(args) -> int:
    terms = sequence_terms(args.name, args.limit)
    if args.json:
        _emit(args, json.dumps([str(t) for t in terms]))
    else:
        _emit(args, ", ".join(str(t) for t in terms))
    return 0


def cmd_verify_paper(args) -> int:
    results = run_checks(suite=args.suite)
    failed = [r for r in results if not r.ok]
    if args.json:
        payload = {
            "suite": args.suite,
            "pass": not failed,
            "checks": [r.to_json_dict() for r in results],
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = []
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            lines.append(f"{status}  {r.name}  [{r.source}]  ({r.seconds:.2f}s)")
            if not r.ok:
                lines.append(f"      expected: {json.dumps(r.to_json_dict()['expected'])}")
                lines.append(f"      actual:   {json.dumps(r.to_json_dict()['actual'])}")
        lines.append(
            f"{len(results) - len(failed)}/{len(results)} checks passed ({args.suite} suite)"
        )
        _emit(args, "\n".join(lines))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quilts",
        description="Exact counting and construction for quilts of alternating sign matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument("--out", help="write output to a file instead of stdout")

    sp = sub.add_parser("count", help="count the quilts of a type, e.g. count C2 B3")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument(
        "--engine",
        choices=("auto", "brute", "antichain", "transfer"),
        default="auto",
    )
    sp.add_argument("--check", action="store_true", help="cross-run brute force when tractable")
    sp.add_argument("--threads", type=int, default=1)
    common(sp)
    sp.set_defaults(fn=cmd_count)

    sp = sub.add_parser("poly", help="binomial-basis polynomial counting chain quilts")
    sp.add_argument("p")
    common(sp)
    sp.set_defaults(fn=cmd_poly)

    sp = sub.add_parser("fundamental", help="list (or count) the m-fundamental quilts")
    sp.add_argument("p")
    sp.add_argument("m", type=int)
    sp.add_argument("--count-only", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_fundamental)

    sp = sub.add_parser("mt", help="count chain quilts with a given top set, e.g. mt B3 2,10,16")
    sp.add_argument("p")
    sp.add_argument("topset")
    common(sp)
    sp.set_defaults(fn=cmd_mt)

    sp = sub.add_parser("antichain-profile", help="alpha-multiplicity profile over convex cut sets")
    sp.add_argument("p")
    common(sp)
    sp.set_defaults(fn=cmd_antichain_profile)

    sp = sub.add_parser("dedekind", help="map counts per target rank; --dot/--matrix export the graph")
    sp.add_argument("p")
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--matrix", action="store_true")
    sp.add_argument("--restricted", action="store_true")
    common(sp)
    sp.set_defaults(fn=cmd_dedekind)

    sp = sub.add_parser("hasse", help="DOT digraph of a quilt lattice")
    sp.add_argument("p")
    sp.add_argument("q")
    common(sp)
    sp.set_defaults(fn=cmd_hasse)

    sp = sub.add_parser("sequence", help=f"published table readings: {', '.join(SEQUENCE_NAMES)}")
    sp.add_argument("name", choices=SEQUENCE_NAMES)
    sp.add_argument("limit", type=int)
    common(sp)
    sp.set_defaults(fn=cmd_sequence)

    sp = sub.add_parser("verify-paper", help="recompute the published reference values")
    sp.add_argument("--suite", choices=("fast", "full"), default="fast")
    common(sp)
    sp.set_defaults(fn=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TractabilityError as exc:
        print(f"tractability: {exc}", file=sys.stderr)
        return 2
    except QuiltsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
