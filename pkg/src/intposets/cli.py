"""Command line front end: ``intposets <verb> ...``.

Exit codes: 0 success, 1 domain failure (e.g. input outside the family),
2 unreadable input or bad flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .dot import hasse_dot
from .families import Family, FamilyId, Orientation, is_member
from .oracle import BudgetError, count_table, enumerate_universe
from .perms import OrderedPartition, Permutation, WOInterval
from .projections import (
    dpip_dd,
    dwoip_dd,
    family_join,
    family_meet,
    insert_interval,
    insert_permutree,
    insert_schroder,
    ipip_id,
    iwoip_id,
    pip_d,
    toip_d,
    woip_d,
)
from .relation import RelationError, classify, parse_relation
from .weak_order import LatticeLevel, join, meet, tdd, tid


class UsageError(Exception):
    """Bad flags or unreadable input (exit code 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _parse_set(text: Optional[str]) -> frozenset:
    if text is None or text.strip() in ("", "-"):
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot read value list {text!r}") from exc


def _orientation(args, n: Optional[int]) -> Optional[Orientation]:
    if args.up is None and args.down is None and args.n is None:
        return None
    size = args.n if args.n is not None else n
    if size is None:
        raise UsageError("orientation flags need --n or a relation to size them")
    return Orientation(size, _parse_set(args.up), _parse_set(args.down))


def _family(args, n: Optional[int]) -> FamilyId:
    size = args.n if args.n is not None else n
    try:
        return FamilyId.parse(args.family, n=size, orientation=_orientation(args, n))
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _inputs(values: Sequence[str]) -> list[str]:
    if values:
        return list(values)
    return [line.strip() for line in sys.stdin if line.strip()]


def _relations(values: Sequence[str]):
    try:
        return [parse_relation(v) for v in _inputs(values)]
    except RelationError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _add_orientation_flags(p) -> None:
    p.add_argument("--up", help="comma-separated O+ values")
    p.add_argument("--down", help="comma-separated O- values")
    p.add_argument("--n", type=int, help="ground set size")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intposets", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, help: str):
        return sub.add_parser(name, help=help, parents=[common])

    p = verb("classify", help="relation classes and family memberships")
    p.add_argument("relation", nargs="*")
    _add_orientation_flags(p)

    for name in ("meet", "join"):
        p = verb(name, help=f"{name} of two relations at a level or in a family")
        p.add_argument("relations", nargs="*")
        p.add_argument("--level", default=None)
        p.add_argument("--family", default=None)
        _add_orientation_flags(p)

    p = verb("project", help="apply a deletion projection")
    p.add_argument("relation", nargs="*")
    p.add_argument("--map", required=True,
                   choices=["iwoip_id", "dwoip_dd", "woip_d", "ipip_id", "dpip_dd", "pip_d", "toip_d", "tdd", "tid"])
    p.add_argument("--eps", default="", choices=["", "+", "-", "pm", "±"])
    _add_orientation_flags(p)

    p = verb("insert", help="insert a permutation, ordered partition or interval")
    p.add_argument("obj", nargs="*", help="e.g. 2751346, 125|37|46 or [1324:3421]")
    _add_orientation_flags(p)

    p = verb("enumerate", help="list a universe")
    p.add_argument("--level", default=None)
    p.add_argument("--family", default=None)
    _add_orientation_flags(p)

    p = verb("count", help="family counts for n = 1..N")
    p.add_argument("--families", default="all")
    p.add_argument("--n", type=int, default=5)

    p = verb("check", help="run the acceptance checks")
    p.add_argument("--all", action="store_true", help="run every criterion (default)")
    p.add_argument("--n", type=int, default=4, help="sweep size; the criteria are fixed at 4")
    p.add_argument("--only", default=None, help="comma-separated criterion numbers")

    p = verb("hasse", help="DOT of a poset or of a universe's weak order")
    p.add_argument("relation", nargs="*")
    p.add_argument("--level", default=None)
    p.add_argument("--family", default=None)
    _add_orientation_flags(p)
    return parser


def _cmd_classify(args) -> int:
    rels = _relations(args.relation)
    out = []
    for r in rels:
        c = classify(r)
        if c.poset:
            # antisymmetry and transitivity are implied, list the families instead
            labels = ["poset"]
            fams = [FamilyId(Family.WOEP), FamilyId(Family.WOIP), FamilyId(Family.IWOIP),
                    FamilyId(Family.DWOIP), FamilyId(Family.WOFP)]
            o = _orientation(args, r.n)
            if o is not None:
                fams += [FamilyId(Family.PEP, o), FamilyId(Family.PIP, o), FamilyId(Family.PFP, o)]
            labels += [f.tag.value for f in fams if is_member(f, r)]
        else:
            labels = [name for name, ok in (("antisymmetric", c.antisymmetric),
                                            ("semitransitive", c.semitransitive),
                                            ("transitive", c.transitive)) if ok]
        out.append({"relation": str(r), "classes": labels})
    _emit(args, out, "\n".join(", ".join(item["classes"]) or "-" for item in out))
    return 0


def _binary(args, op: str) -> int:
    rels = _relations(args.relations)
    if len(rels) != 2:
        raise UsageError(f"{op} takes exactly two relations")
    r, s = rels
    if args.family:
        f = _family(args, r.n)
        res = (family_meet if op == "meet" else family_join)(f, r, s)
    else:
        try:
            level = LatticeLevel.parse(args.level or "poset")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        res = (meet if op == "meet" else join)(level, r, s)
    _emit(args, {"result": str(res)}, str(res))
    return 0


def _cmd_project(args) -> int:
    rels = _relations(args.relation)
    eps = "±" if args.eps == "pm" else args.eps
    out = []
    for r in rels:
        o = _orientation(args, r.n)
        needs = args.map in ("ipip_id", "dpip_dd", "pip_d")
        if needs and o is None:
            raise UsageError(f"--map={args.map} needs an orientation (--up/--down)")
        fn = {
            "iwoip_id": lambda: iwoip_id(r),
            "dwoip_dd": lambda: dwoip_dd(r),
            "woip_d": lambda: woip_d(r),
            "ipip_id": lambda: ipip_id(eps, o, r),
            "dpip_dd": lambda: dpip_dd(eps, o, r),
            "pip_d": lambda: pip_d(o, r),
            "toip_d": lambda: toip_d(r),
            "tdd": lambda: tdd(r),
            "tid": lambda: tid(r),
        }[args.map]
        out.append(str(fn()))
    _emit(args, {"results": out}, "\n".join(out))
    return 0


def _read_object(text: str):
    text = text.strip()
    try:
        if text.startswith("["):
            return WOInterval.parse(text)
        if "|" in text:
            return OrderedPartition.parse(text)
        return Permutation.parse(text)
    except (RelationError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _cmd_insert(args) -> int:
    out = []
    for text in _inputs(args.obj):
        obj = _read_object(text)
        o = _orientation(args, obj.n) or Orientation.trivial(obj.n)
        if isinstance(obj, Permutation):
            res = insert_permutree(o, obj)
        elif isinstance(obj, OrderedPartition):
            res = insert_schroder(o, obj)
        else:
            res = insert_interval(o, obj)
        out.append(str(res))
    _emit(args, {"results": out}, "\n".join(out))
    return 0


def _universe(args):
    if args.family:
        if args.n is None:
            raise UsageError("--family needs --n")
        kind = _family(args, args.n)
    else:
        if args.n is None:
            raise UsageError("--n is required")
        try:
            kind = LatticeLevel.parse(args.level or "poset")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return enumerate_universe(kind, args.n)


def _cmd_enumerate(args) -> int:
    rels = _universe(args)
    _emit(args, [str(r) for r in rels], "\n".join(str(r) for r in rels))
    return 0


def _cmd_count(args) -> int:
    table = count_table(args.n)
    if args.families != "all":
        wanted = {x.strip().upper() for x in args.families.split(",")}
        unknown = wanted - set(table)
        if unknown:
            raise UsageError(f"unknown families: {', '.join(sorted(unknown))}")
        table = {k: v for k, v in table.items() if k in wanted}
    width = max(len(k) for k in table)
    header = " " * width + "  " + "  ".join(f"n={n:<4}" for n in range(1, args.n + 1))
    rows = [header] + [k.ljust(width) + "  " + "  ".join(f"{c:<6}" for c in v) for k, v in table.items()]
    _emit(args, table, "\n".join(rows))
    return 0


def _cmd_check(args) -> int:
    from .checks import run_criteria

    from .checks import CRITERIA

    if args.n != 4:
        raise UsageError("check runs the sweeps at n = 4 only")
    only = None
    if args.only:
        try:
            only = [int(x) for x in args.only.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --only value {args.only!r}") from exc
        unknown = [k for k in only if k not in CRITERIA]
        if unknown:
            raise UsageError(f"unknown criteria: {unknown}")
    results = run_criteria(only=only)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps([r.as_dict() for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
        expected = [(r, rep) for r in results for rep in r.expected_failures]
        if expected:
            print()
            print("expected counterexamples:")
            for r, rep in expected:
                print(f"  [{r.number}] {rep.claim}: {json.dumps(rep.counterexample, sort_keys=True)}")
    return 0 if ok else 1


def _cmd_hasse(args) -> int:
    if args.relation:
        rels = _relations(args.relation)
        print(hasse_dot(rels[0]), end="")
    elif args.level or args.family:
        print(hasse_dot(_universe(args)), end="")
    else:
        rels = _relations([])
        if not rels:
            raise UsageError("hasse needs a relation or --level/--family with --n")
        print(hasse_dot(rels[0]), end="")
    return 0


COMMANDS = {
    "classify": _cmd_classify,
    "meet": lambda a: _binary(a, "meet"),
    "join": lambda a: _binary(a, "join"),
    "project": _cmd_project,
    "insert": _cmd_insert,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "check": _cmd_check,
    "hasse": _cmd_hasse,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return 2
    except (RelationError, BudgetError, ValueError) as exc:
        print(json.dumps({"error": "domain", "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

