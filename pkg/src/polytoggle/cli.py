"""Command-line front end.  Every command prints one JSON object (default)
or key/value TSV rows, and exits 0; checks that fail exit 1, bad usage 2."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import groups, perm, sorting, stats, toggles, trees, verify
from .perm import format_perm as fmt, parse_perm

__all__ = ["main", "build_parser", "run"]


class UsageError(Exception):
    pass


def _perm_arg(text: str):
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _normalized(p):
    if not perm.is_normalized(p):
        raise UsageError(f"{fmt(p)!r} is not a normalized permutation")
    return p


def _sorted_list(perms) -> list[str]:
    return sorted((fmt(p) for p in perms), key=lambda s: (len(s), s))


def _histogram_rows(battery, perms) -> list[dict]:
    hist = stats.histogram(battery, perms)
    names = [f.name for f in battery]
    return [dict(zip(names, vec), count=hist[vec]) for vec in sorted(hist)]


def cmd_sort(a):
    return {"input": fmt(a.perm), "output": fmt(trees.stack_sort(a.perm))}


def cmd_fertility(a):
    return {"input": fmt(a.perm), "fertility": sorting.fertility(a.perm)}


def cmd_preimages(a):
    pre = sorting.s_preimages(a.perm)
    return {"input": fmt(a.perm), "count": len(pre), "preimages": _sorted_list(pre)}


def cmd_twist(a):
    spec = sorting.TwistSpec.parse(a.spec)
    out = {"spec": str(spec), "input": fmt(a.perm),
           "output": fmt(sorting.apply_twist(spec, a.perm))}
    if a.preimages:
        pre = sorting.twist_preimages(spec, _normalized(a.perm))
        out["preimage_count"] = len(pre)
        out["preimages"] = _sorted_list(pre)
    return out


def cmd_orbit(a):
    block = toggles.orbit(_normalized(a.perm))
    return {"input": fmt(a.perm), "size": len(block), "orbit": _sorted_list(block)}


def cmd_skeleton(a):
    return {"input": fmt(a.perm), "skeleton": trees.skeleton(a.perm),
            "tree": trees.format_tree(trees.tree_of(a.perm))}


def cmd_swd(a):
    return {"input": fmt(a.perm), "output": fmt(toggles.swd(_normalized(a.perm)))}


def cmd_swu(a):
    return {"input": fmt(a.perm), "output": fmt(toggles.swu(_normalized(a.perm)))}


def cmd_canonical(a):
    p = _normalized(a.perm)
    try:
        c = sorting.canonical_preimage(p)
    except sorting.NotSortedError as exc:
        raise UsageError(str(exc)) from None
    return {"input": fmt(p), "canonical": fmt(c), "skeleton": trees.skeleton(c)}


def cmd_stats(a):
    p = _normalized(a.perm)
    battery = stats.parse_battery(a.battery)
    return {"input": fmt(p), **{f.name: f(p) for f in battery}}


def _collect(targets, patterns, n, spec):
    if patterns:
        if n is None:
            raise UsageError("--n is required with --avoid-a/--avoid-b")
        base = perm.avoidance_set(n, [parse_perm(t) for t in patterns.split(",")])
    else:
        base = {_normalized(t) for t in targets}
    if spec is None:
        return base
    return sorting.twist_preimages(spec, base) if base else set()


def cmd_equidist(a):
    battery = stats.parse_battery(a.battery)
    if not (a.a or a.avoid_a) or not (a.b or a.avoid_b):
        raise UsageError("give both sides: --a/--avoid-a and --b/--avoid-b")
    set_a = _collect(a.a, a.avoid_a, a.n, a.twist)
    set_b = _collect(a.b, a.avoid_b, a.n, a.twist)
    check = stats.equidistributed(battery, set_a, set_b)
    out = {"battery": [f.name for f in battery], "size_a": len(set_a),
           "size_b": len(set_b), "pass": check.ok}
    if not check.ok:
        out["witness"] = check.witness
    if a.histograms:
        out["histogram_a"] = _histogram_rows(battery, set_a)
        out["histogram_b"] = _histogram_rows(battery, set_b)
    return out


def cmd_skeletality(a):
    f = stats.get_statistic(a.statistic)
    check = stats.skeletality_check(f, a.n)
    out = {"statistic": f.name, "n": a.n, "pass": check.ok}
    if not check.ok:
        out["witness"] = [fmt(x) for x in check.witness]
    return out


def cmd_postorder(a):
    found = trees.postorder_preimages(_normalized(a.perm))
    rows = sorted(((trees.format_tree(t), trees.skeleton(t)) for t in found))
    return {"input": fmt(a.perm), "count": len(found),
            "trees": [r[0] for r in rows], "skeletons": [r[1] for r in rows]}


def cmd_group_order(a):
    return {"n": a.n, "order": groups.group_order(a.n, allow_8=a.allow_8)}


def cmd_group_relations(a):
    checked = [{"relation": name, "holds": groups.verify_relation(word, a.n)}
               for name, word in groups.standard_relations(a.n)]
    out = {"n": a.n, "relations_checked": checked,
           "pass": all(c["holds"] for c in checked)}
    if a.order:
        out["order"] = groups.group_order(a.n)
    return out


def cmd_verify(a):
    if a.suite:
        return verify.run_suite(a.suite, a.n)
    return verify.run_all(a.n, jobs=a.jobs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytoggle",
        description="Toggle actions, stack-sorting preimages and skeleton statistics.")
    parser.add_argument("--format", choices=["json", "tsv"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, with_perm=True):
        p = sub.add_parser(name, help=help_)
        if with_perm:
            p.add_argument("perm", type=_perm_arg, help="e.g. 246153 or 2,4,6,1,5,3")
        p.set_defaults(func=func)
        return p

    add("sort", cmd_sort, "apply the stack-sorting map")
    add("fertility", cmd_fertility, "number of stack-sorting preimages")
    add("preimages", cmd_preimages, "list the stack-sorting preimages")
    p = add("twist", cmd_twist, "apply a twisted operator such as rs or srs", with_perm=False)
    p.add_argument("spec")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--preimages", action="store_true", help="also list the preimages")
    add("orbit", cmd_orbit, "orbit under the toggle group")
    add("skeleton", cmd_skeleton, "skeleton code of the in-order tree")
    add("swd", cmd_swd, "the 231-avoider with the same skeleton")
    add("swu", cmd_swu, "the 132-avoider with the same skeleton")
    add("canonical", cmd_canonical, "canonical stack-sorting preimage")
    p = add("stats", cmd_stats, "evaluate statistics")
    p.add_argument("--battery", default="skeletal,zeil")
    p = add("equidist", cmd_equidist, "joint equidistribution of two sets", with_perm=False)
    p.add_argument("--battery", default="skeletal,zeil")
    p.add_argument("--a", nargs="+", type=_perm_arg, default=[])
    p.add_argument("--b", nargs="+", type=_perm_arg, default=[])
    p.add_argument("--avoid-a", help="patterns for side A, comma-separated")
    p.add_argument("--avoid-b", help="patterns for side B, comma-separated")
    p.add_argument("--n", type=int)
    p.add_argument("--twist", help="replace each side by its preimage set")
    p.add_argument("--histograms", action="store_true")
    p = add("skeletality", cmd_skeletality, "is a statistic constant on orbits", with_perm=False)
    p.add_argument("statistic")
    p.add_argument("--n", type=int, required=True)
    add("postorder-preimages", cmd_postorder, "decreasing plane trees with a given postorder")

    g = sub.add_parser("group", help="the toggle group as a permutation group")
    gsub = g.add_subparsers(dest="group_command", required=True)
    p = gsub.add_parser("order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-8", action="store_true", help="permit n = 8 (40320 points)")
    p.set_defaults(func=cmd_group_order)
    p = gsub.add_parser("relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", action="store_true", help="include the group order")
    p.set_defaults(func=cmd_group_relations)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--n", type=int)
    p.add_argument("--suite", choices=sorted(verify.SUITES))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def _tsv_rows(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _tsv_rows(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list):
        for v in obj:
            yield from _tsv_rows(v, prefix)
    else:
        if isinstance(obj, bool):
            obj = str(obj).lower()
        yield f"{prefix}\t{obj}"


def render(obj, style: str) -> str:
    if style == "tsv":
        return "\n".join(_tsv_rows(obj))
    return json.dumps(obj, separators=(",", ":"))


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        parser.error(str(msg))
    code = 1 if result.get("pass") is False else 0
    return code, render(result, args.format)


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
