"""Command-line front end.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on a domain error (printed with its stable error code) and 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import verify
from .coe import coe_closure, coe_family, coe_msg, coe_rank1, is_coe
from .engine import FamilyTree, enumerate_family
from .errors import SemigroupError
from .semigroup import NumericalSemigroup, from_generators
from .theta import theta_closure, theta_family, theta_msg, theta_rank1

DEFAULT_MAX_MEMBERS = 100_000
FORMATS = ("json", "dot", "count", "msg")


def int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def default_max_members() -> int:
    raw = os.environ.get("SEMICOV_MAX_MEMBERS")
    if raw is None:
        return DEFAULT_MAX_MEMBERS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_MEMBERS


def semigroup_doc(s: NumericalSemigroup) -> dict:
    return {"msg": list(s.msg), "frobenius": s.frobenius, "genus": s.genus, "gaps": list(s.gaps)}


def family_doc(tree: FamilyTree) -> dict:
    return {
        "minimum": semigroup_doc(tree.minimum),
        "members": [semigroup_doc(s) for s in tree.members],
        "edges": [list(e) for e in tree.edges],
    }


def msg_line(s: NumericalSemigroup) -> str:
    return ",".join(map(str, s.msg))


def dot_label(s: NumericalSemigroup) -> str:
    """Minimal generators, with the ``{F+1,→}`` tail spelled out when it adds generators."""
    if s.is_natural:
        return "1"
    small = [g for g in s.msg if g < s.frobenius]
    tail = f"{{{s.frobenius + 1},→}}"
    if len(small) == len(s.msg):
        return ",".join(map(str, small))
    if not small:
        return "{0," + tail[1:]
    return ",".join(map(str, small)) + "∪" + tail


def tree_dot(tree: FamilyTree, name: str) -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for i, s in enumerate(tree.members):
        lines.append(f'  n{i} [label="{dot_label(s)}"];')
    for i, node in enumerate(tree.nodes):
        if node.parent is not None:
            lines.append(f'  n{i} -> n{node.parent} [label="{node.adjoined}"];')
    lines.append("}")
    return "\n".join(lines)


def dump(doc) -> str:
    return json.dumps(doc, ensure_ascii=False)


def emit_semigroup(s: NumericalSemigroup, fmt: str) -> str:
    if fmt == "msg":
        return msg_line(s)
    if fmt == "json":
        return dump(semigroup_doc(s))
    raise SemigroupError(f"format {fmt!r} does not apply to a single semigroup")


def emit_tree(tree: FamilyTree, fmt: str, name: str) -> str:
    if fmt == "count":
        return str(len(tree))
    if fmt == "msg":
        return "\n".join(msg_line(s) for s in tree.members)
    if fmt == "dot":
        return tree_dot(tree, name)
    return dump(family_doc(tree))


def emit_members(members: list[NumericalSemigroup], fmt: str, gaps: list[int] | None = None) -> str:
    if fmt == "count":
        return str(len(members))
    if fmt == "msg":
        return "\n".join(msg_line(s) for s in members)
    if fmt == "dot":
        raise SemigroupError("dot output is only available for family trees")
    doc: dict = {"members": [semigroup_doc(s) for s in members]}
    if gaps is not None:
        doc["gaps"] = gaps
    return dump(doc)


def emit_generators(gens: list[int], fmt: str) -> str:
    if fmt == "msg":
        return ",".join(map(str, gens))
    if fmt == "json":
        return dump({"generators": gens, "rank": len(gens)})
    raise SemigroupError(f"format {fmt!r} does not apply to a generating set")


def _delta(args) -> NumericalSemigroup:
    return from_generators(args.gens)


def cmd_ns_info(args) -> str:
    s = _delta(args)
    if args.format == "msg":
        return msg_line(s)
    inv = s.invariants()
    doc = semigroup_doc(s)
    doc.update(
        multiplicity=inv.multiplicity,
        embedding_dimension=inv.embedding_dimension,
        type=inv.type,
        pseudo_frobenius=[-1] if s.is_natural else s.pseudo_frobenius(),
        special_gaps=[] if s.is_natural else s.special_gaps(),
    )
    return dump(doc)


def cmd_theta_enumerate(args) -> str:
    tree = enumerate_family(theta_family(_delta(args)), args.max_members)
    return emit_tree(tree, args.format, "theta")


def cmd_theta_closure(args) -> str:
    return emit_semigroup(theta_closure(_delta(args), args.set), args.format)


def cmd_theta_msg(args) -> str:
    return emit_generators(theta_msg(_delta(args), from_generators(args.member)), args.format)


def cmd_theta_rank1(args) -> str:
    pairs = theta_rank1(_delta(args))
    return emit_members([s for _, s in pairs], args.format, [x for x, _ in pairs])


def cmd_coe_enumerate(args) -> str:
    tree = enumerate_family(coe_family(args.frobenius), args.max_members)
    return emit_tree(tree, args.format, "coe")


def cmd_coe_closure(args) -> str:
    return emit_semigroup(coe_closure(args.frobenius, args.set), args.format)


def cmd_coe_msg(args) -> str:
    return emit_generators(coe_msg(args.frobenius, from_generators(args.member)), args.format)


def cmd_coe_rank1(args) -> str:
    return emit_members(coe_rank1(args.frobenius), args.format)


def cmd_coe_check(args) -> str:
    s = from_generators(args.gens)
    coe = is_coe(s)
    member = None if args.frobenius is None else coe and s.frobenius == args.frobenius
    if args.format == "msg":
        return "true" if coe else "false"
    return dump({"coe": coe, "frobenius": s.frobenius, "member": member})


def cmd_tree(args) -> str:
    if args.family == "theta":
        if args.gens is None:
            raise UsageError("--family theta needs --gens")
        family = theta_family(from_generators(args.gens))
    else:
        if args.frobenius is None:
            raise UsageError("--family coe needs --frobenius")
        family = coe_family(args.frobenius)
    tree = enumerate_family(family, args.max_members)
    return emit_tree(tree, args.format, args.family)


def cmd_oracle_verify(args) -> str:
    results = [
        verify.check_theta_enumeration(args.max_genus),
        verify.check_coe_enumeration(args.max_frobenius),
        verify.check_coe_closure(min(args.max_frobenius, 11)),
        verify.check_theta_closure([from_generators(g) for g in ([3, 7, 8], [5, 7, 9], [5, 7])]),
        verify.check_floor_mod(101),
    ]
    args.failed = not all(r.ok for r in results)
    lines = [r.line() for r in results]
    for r in results:
        lines.extend(f"  {m}" for m in r.mismatches[:10])
    return "\n".join(lines)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicov",
        description="Numerical semigroup invariants and semi-covariety enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name, func, help, formats=("json", "msg"), default="json"):
        p = parent.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default=default)
        p.set_defaults(func=func)
        return p

    def limit(p):
        p.add_argument("--max-members", type=int, default=default_max_members(),
                       help="abort when the family grows past this many members")

    ns = sub.add_parser("ns", help="single numerical semigroups").add_subparsers(dest="action", required=True)
    p = leaf(ns, "info", cmd_ns_info, "invariants of <gens>")
    p.add_argument("--gens", type=int_list, required=True)

    theta = sub.add_parser("theta", help="oversemigroups of a fixed semigroup").add_subparsers(
        dest="action", required=True
    )
    p = leaf(theta, "enumerate", cmd_theta_enumerate, "all oversemigroups", FORMATS)
    p.add_argument("--gens", type=int_list, required=True)
    limit(p)
    p = leaf(theta, "closure", cmd_theta_closure, "least oversemigroup containing a set")
    p.add_argument("--gens", type=int_list, required=True)
    p.add_argument("--set", type=int_list, required=True)
    p = leaf(theta, "msg", cmd_theta_msg, "minimal generators relative to the family")
    p.add_argument("--gens", type=int_list, required=True)
    p.add_argument("--member", type=int_list, required=True, help="generators of the member")
    p = leaf(theta, "rank1", cmd_theta_rank1, "members of rank one", ("json", "msg", "count"))
    p.add_argument("--gens", type=int_list, required=True)

    coe = sub.add_parser("coe", help="coe-semigroups with fixed Frobenius number").add_subparsers(
        dest="action", required=True
    )
    p = leaf(coe, "enumerate", cmd_coe_enumerate, "all members of C(F)", FORMATS)
    p.add_argument("--frobenius", type=int, required=True)
    limit(p)
    p = leaf(coe, "closure", cmd_coe_closure, "least member containing a set")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--set", type=int_list, required=True)
    p = leaf(coe, "msg", cmd_coe_msg, "minimal generators relative to the family")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--member", type=int_list, required=True, help="generators of the member")
    p = leaf(coe, "rank1", cmd_coe_rank1, "members of rank one", ("json", "msg", "count"))
    p.add_argument("--frobenius", type=int, required=True)
    p = leaf(coe, "check", cmd_coe_check, "coating test for <gens>")
    p.add_argument("--gens", type=int_list, required=True)
    p.add_argument("--frobenius", type=int, help="also test membership in C(F)")

    p = leaf(sub, "tree", cmd_tree, "export a family tree", FORMATS, default="dot")
    p.add_argument("--family", choices=("theta", "coe"), required=True)
    p.add_argument("--gens", type=int_list)
    p.add_argument("--frobenius", type=int)
    limit(p)

    orc = sub.add_parser("oracle", help="brute-force cross-checks").add_subparsers(dest="action", required=True)
    p = orc.add_parser("verify", help="run the oracle equivalence suite")
    p.add_argument("--max-genus", type=int, default=8)
    p.add_argument("--max-frobenius", type=int, default=13)
    p.set_defaults(func=cmd_oracle_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"semicov: error: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:
        print(f"semicov: {exc.code}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out + "\n")
    return 1 if getattr(args, "failed", False) else 0
