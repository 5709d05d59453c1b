"""Batch command-line front end.

Data goes to stdout, warnings and timing to stderr.  Exit codes: 0 for
"linear / found / ok", 1 for "not linear / no ordering found", 2 for any
error or comparison mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import LinquotError, OracleBudgetError
from .graphs import EdgeIdeal, FAMILIES, family_ideal, load_graph
from .homology import betti_oracle
from .monomials import Monomial, VariableContext
from .powers import OrderedPowerGenerators, PowerEntry, anticycle_ordering, revlex_power_list
from .quotients import (BettiTable, betti_from_ordering, get_quotients,
                        linearity_report, pd_from_ordering)
from .resolutions import mapping_cone_resolution, render_matrix, verify_complex, verify_minimal
from .search import DEFAULT_NODE_BUDGET, find_linear_ordering, most_linear_ordering
from .whiskers import whisker_betti_table


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


# ------------------------------------------------------------- input layer

def _load_ideal(args) -> EdgeIdeal:
    if getattr(args, "family", None) and getattr(args, "graph", None):
        raise LinquotError("give exactly one of --family / --graph")
    if getattr(args, "family", None):
        return family_ideal(args.family)
    if getattr(args, "graph", None):
        return EdgeIdeal(load_graph(args.graph))
    raise LinquotError("a graph source is required (--family or --graph)")


def parse_ordering_text(text: str, vars_hint: int | None = None) -> list[Monomial]:
    """One monomial per line in product notation over x1..xn (x_1 also
    accepted); '#' starts a comment.  The variable count is the largest
    index seen unless ``vars_hint`` pins it."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    n = vars_hint or 0
    if not vars_hint:
        import re
        for line in lines:
            for m in re.finditer(r"x_?(\d+)", line):
                n = max(n, int(m.group(1)))
        if n == 0:
            raise LinquotError("could not infer the variable count; pass --vars")
    ctx = VariableContext.default(n)
    return [Monomial.parse(line, ctx) for line in lines]


def parse_ordering_json(text: str, vars_hint: int | None = None) -> list[Monomial]:
    data = json.loads(text)
    out = []
    for item in data:
        exps = item["monomial"] if isinstance(item, dict) else item
        out.append(Monomial(tuple(int(e) for e in exps)))
    if vars_hint and out and out[0].n != vars_hint:
        raise LinquotError(f"--vars {vars_hint} contradicts the file ({out[0].n} variables)")
    return out


def _load_ordering(args) -> list[Monomial]:
    if getattr(args, "ordering", None):
        with open(args.ordering) as fh:
            text = fh.read()
        if text.lstrip().startswith("["):
            return parse_ordering_json(text, args.vars)
        return parse_ordering_text(text, args.vars)
    ideal = _load_ideal(args)
    return _scheme_ordering(args, ideal).monomials()


def _scheme_ordering(args, ideal: EdgeIdeal) -> OrderedPowerGenerators:
    scheme = getattr(args, "scheme", "revlex")
    k = args.k
    if scheme == "anticycle":
        fam = getattr(args, "family", "") or ""
        if not fam.startswith("anticycle"):
            raise LinquotError("--scheme anticycle needs --family anticycle:n")
        n = ideal.context.n
        if k == 1:
            _diag("warning: the k=1 anticycle ordering carries no linearity claim")
        return anticycle_ordering(n, k)
    if scheme == "revlex":
        return revlex_power_list(ideal, k)
    if scheme == "search":
        base = revlex_power_list(ideal, k).representatives()
        found = find_linear_ordering(base, budget=args.budget)
        if found is None:
            raise LinquotError("search found no linear quotient ordering to print")
        entries = tuple(PowerEntry(m, None, True) for m in found)
        return OrderedPowerGenerators(ideal, k, entries)
    raise LinquotError(f"unknown scheme {scheme!r}")


def _context_for(args, mons: list[Monomial]) -> VariableContext:
    if getattr(args, "family", None) or getattr(args, "graph", None):
        try:
            return _load_ideal(args).context
        except LinquotError:
            pass
    return VariableContext.default(mons[0].n if mons else 1)


# ---------------------------------------------------------------- commands

def cmd_family_list(args) -> int:
    for name in sorted(FAMILIES):
        print(FAMILIES[name][2])
    return 0


def cmd_order(args) -> int:
    ideal = _load_ideal(args)
    ordering = _scheme_ordering(args, ideal)
    entries = list(ordering.entries)
    if not args.keep_repetitions:
        entries = [e for e in entries if e.representative]
    if args.format == "json":
        print(json.dumps([e.to_json() for e in entries]))
    else:
        ctx = ideal.context
        for e in entries:
            print(e.monomial.text(ctx))
    return 0


def cmd_check(args) -> int:
    mons = _load_ordering(args)
    report = linearity_report(mons)
    print("true" if report.linear else "false")
    if not report.linear:
        ctx = _context_for(args, mons)
        i = report.first_failure
        wit = ", ".join(mons[j].text(ctx) for j in report.violators)
        _diag(f"first failure at position {i + 1} ({mons[i].text(ctx)}); "
              f"unmatched predecessors: {wit}")
        return 1
    return 0


def cmd_quotients(args) -> int:
    mons = _load_ordering(args)
    report = get_quotients(mons, allow_repetitions=args.allow_repetitions)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        ctx = _context_for(args, mons)
        for step in report.steps:
            gens = ", ".join(g.text(ctx) for g in step.generators)
            print(f"{step.index}: {{{gens}}}")
    return 0


def _betti_methods(args, mons: list[Monomial]) -> dict[str, BettiTable]:
    out: dict[str, BettiTable] = {}
    fam = getattr(args, "family", "") or ""
    if args.closed_form:
        if not fam.startswith("whisker"):
            raise LinquotError("--closed-form applies only to --family whisker:r,l")
        r, l = (int(p) for p in fam.split(":")[1].split(","))
        out["closed-form"] = whisker_betti_table(r, l, args.k)
    out["ordering"] = betti_from_ordering(mons)
    if args.compare:
        if args.cone:
            res = mapping_cone_resolution(mons)
            out["cone"] = BettiTable(len(res.ranks) - 1, res.ranks,
                                     out["ordering"].degree_shift)
        try:
            out["oracle"] = betti_oracle(mons, threads=args.threads)
        except OracleBudgetError as e:
            _diag(f"oracle skipped: {e}")
    elif args.cone:
        res = mapping_cone_resolution(mons)
        out["cone"] = BettiTable(len(res.ranks) - 1, res.ranks,
                                 out["ordering"].degree_shift)
    return out


def cmd_betti(args) -> int:
    mons = _load_ordering(args)
    methods = _betti_methods(args, mons)
    names = [n for n in ("closed-form", "ordering", "cone", "oracle") if n in methods]
    tables = [methods[n] for n in names]
    agree = all(t.pd == tables[0].pd and t.betti == tables[0].betti for t in tables)
    if args.compare:
        line = f"pd={tables[0].pd} beta: " + " ".join(str(b) for b in tables[0].betti)
        print(f"{line} ({' = '.join(names)})" if agree else
              f"DISAGREEMENT between methods: " +
              "; ".join(f"{n}: pd={t.pd} beta={list(t.betti)}" for n, t in zip(names, tables)))
        return 0 if agree else 2
    if args.format == "json":
        print(json.dumps(tables[0].to_json()))
    else:
        print(tables[0].text())
    return 0


def cmd_pd(args) -> int:
    mons = _load_ordering(args)
    print(f"pd={pd_from_ordering(mons)}")
    return 0


def cmd_search(args) -> int:
    ideal = _load_ideal(args)
    if args.k == 1:
        gens = list(ideal.generators)
    else:
        gens = revlex_power_list(ideal, args.k).representatives()
    t0 = time.perf_counter()
    result = most_linear_ordering(gens, budget=args.budget)
    elapsed = time.perf_counter() - t0
    ctx = ideal.context
    if result.fully_linear:
        print("Linear ordering found, returning as a list.")
        shown = list(result.ordering)
    else:
        print("No linear ordering found; returning most linear ordering as a list.")
        shown = result.prefix()
    if args.format == "json":
        print(json.dumps({"monomials": [list(m.exponents) for m in shown],
                          "linear_prefix": result.linear_prefix_length,
                          "fully_linear": result.fully_linear,
                          "proven_maximal": result.proven_maximal}))
    else:
        for m in shown:
            print(m.text(ctx))
    _diag(f"prefix={result.linear_prefix_length} explored={result.nodes_explored} "
          f"time={elapsed:.3f}s")
    if not result.proven_maximal:
        _diag("warning: node budget exceeded; maximality not proven")
    return 0 if result.fully_linear else 1


def cmd_resolution(args) -> int:
    mons = _load_ordering(args)
    res = mapping_cone_resolution(mons)
    ok_complex = verify_complex(res)
    ok_minimal = verify_minimal(res)
    if args.format == "json":
        print(json.dumps(res.to_json()))
    else:
        ctx = _context_for(args, mons)
        print("ranks: " + " ".join(str(r) for r in res.ranks))
        print("augmentation: " + " ".join(m.text(ctx) for m in res.augmentation))
        for p in range(1, res.length):
            print(f"d{p}:")
            print(render_matrix(res, p, ctx))
    _diag(f"verify: complex={'ok' if ok_complex else 'FAIL'} "
          f"minimal={'ok' if ok_minimal else 'FAIL'}")
    return 0 if ok_complex else 2


# ------------------------------------------------------------------ parser

def _add_source_args(p, with_ordering=False, with_scheme=False):
    p.add_argument("--family", help="family spec like cycle:4, whisker:2,3, anticycle:6")
    p.add_argument("--graph", help="graph file (text or JSON)")
    p.add_argument("-k", "--power", dest="k", type=int, default=1, help="power of the ideal")
    if with_ordering:
        p.add_argument("--ordering", help="explicit ordering file (text or JSON)")
        p.add_argument("--vars", type=int, help="variable count for ordering files")
    if with_scheme:
        p.add_argument("--scheme", choices=["revlex", "anticycle", "search"],
                       default="revlex", help="ordering scheme (default revlex)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                   help="search node budget")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for oracle computations")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linquot",
        description="Linear quotient orderings for powers of edge ideals")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="print an ordered generating list of I(G)^k")
    _add_source_args(p, with_scheme=True)
    p.add_argument("--keep-repetitions", action="store_true",
                   help="keep non-representative entries of the revlex list")
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("check", help="test whether an ordering has linear quotients")
    _add_source_args(p, with_ordering=True, with_scheme=True)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("quotients", help="print the successive colon ideals")
    _add_source_args(p, with_ordering=True, with_scheme=True)
    p.add_argument("--allow-repetitions", action="store_true",
                   help="audit orderings with repeated monomials (unit quotients)")
    p.set_defaults(fn=cmd_quotients)

    p = sub.add_parser("betti", help="Betti numbers of I(G)^k")
    _add_source_args(p, with_ordering=True, with_scheme=True)
    p.add_argument("--closed-form", action="store_true",
                   help="use the whisker closed form")
    p.add_argument("--compare", action="store_true",
                   help="run all applicable methods and fail on disagreement")
    p.add_argument("--cone", action="store_true",
                   help="include mapping-cone ranks")
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("pd", help="projective dimension of I(G)^k")
    _add_source_args(p, with_ordering=True, with_scheme=True)
    p.set_defaults(fn=cmd_pd)

    p = sub.add_parser("search", help="find a linear quotient ordering, or a most "
                                      "linear one when none exists")
    _add_source_args(p)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("resolution", help="iterated mapping-cone resolution")
    _add_source_args(p, with_ordering=True, with_scheme=True)
    p.set_defaults(fn=cmd_resolution)

    p = sub.add_parser("family-list", help="list the known graph families")
    p.set_defaults(fn=cmd_family_list)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except LinquotError as e:
        _diag(f"error: {e}")
        return 2
    except OSError as e:
        _diag(f"error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
