"""core-lattice command line.

Exit codes: 0 on success, 1 for usage or precondition errors, 2 when an
asserted identity fails (``verify`` with a red suite).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify
from .antiatom import anti_atom, backelin_bound, count_semigroups_by_frobenius, family_S, gamma, p_value
from .apery import apery_of, size_of
from .numset import NumericalSemigroup, NumericalSet, dual, semigroup_from_generators
from .partition import Partition, conjugate, hooks, phi, phi_inverse, render
from .polytope import (
    RATIO_LIMITS,
    core_points,
    core_stats,
    oversemigroup_points,
    semigroup_core_ratio,
    stats_of_points,
)
from .tree import build_tree, tree_dot, tree_json_lines

EXIT_OK, EXIT_USAGE, EXIT_ASSERT = 0, 1, 2
SAFE_INT = 2 ** 53


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def json_safe(value):
    """Recursively convert to JSON-ready values; big ints and fractions become strings/objects."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > SAFE_INT else value
    if isinstance(value, Fraction):
        return {"num": json_safe(value.numerator), "den": json_safe(value.denominator)}
    if isinstance(value, dict):
        return {k: json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def emit(obj, out):
    out.write(json.dumps(json_safe(obj), ensure_ascii=False) + "\n")


def stats_json(st):
    return {
        "count": st.count,
        "max": st.max_size,
        "argmax": None if st.argmax is None else list(st.argmax.x),
        "argmax_unique": st.unique_argmax,
        "mean": st.mean,
    }


def cmd_cores(args, out):
    a, bs = args.a, args.b
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.from_semigroups:
        if len(bs) != 1:
            raise UsageError("--from-semigroups takes exactly one b")
        points = oversemigroup_points(a, bs[0])
        st = stats_of_points(points) if args.stats or not args.dump else None
    else:
        points = core_points(a, bs) if args.dump else None
        st = core_stats(a, bs, jobs=args.jobs) if args.stats or not args.dump else None
    if st is not None:
        emit(stats_json(st), out)
    if args.dump:
        out.write(",".join(f"x{i}" for i in range(1, a)) + ",size\n")
        for t in points:
            out.write(",".join(map(str, t.x)) + f",{size_of(t)}\n")


def _parse_set_or_partition(text):
    text = text.strip()
    if text.startswith("("):
        lam = Partition.parse(text)
        return phi_inverse(lam), lam
    T = NumericalSet.parse(text)
    return T, phi(T)


def cmd_partition(args, out):
    T, lam = _parse_set_or_partition(args.input)
    record = {"set": str(T), "partition": str(lam), "size": lam.size, "genus": T.genus, "frobenius": T.frobenius}
    if args.hooks:
        hd = hooks(lam)
        record["hook_grid"] = [list(row) for row in hd.grid]
        record["hook_set"] = sorted(hd.hook_set)
    if args.conjugate:
        record["conjugate"] = str(conjugate(lam))
        record["conjugate_set"] = str(dual(T))
    if args.apery is not None:
        record["apery"] = str(apery_of(T, args.apery))
    if args.json:
        emit(record, out)
        return
    for key in ("set", "partition", "size", "genus", "frobenius"):
        out.write(f"{key}: {record[key]}\n")
    if args.hooks:
        out.write("hooks: " + ",".join(map(str, record["hook_set"])) + "\n")
        out.write(render(lam) + "\n")
    if args.conjugate:
        out.write(f"conjugate: {record['conjugate']}\n")
        out.write(f"conjugate set: {record['conjugate_set']}\n")
    if args.apery is not None:
        out.write(f"apery: {record['apery']}\n")


def _parse_semigroup(tokens):
    if tokens[0] == "gens":
        if len(tokens) < 2:
            raise UsageError("'gens' needs at least one generator")
        try:
            return semigroup_from_generators(int(t) for t in tokens[1:])
        except ValueError as exc:
            if "invalid literal" in str(exc):
                raise UsageError(f"generators must be integers: {' '.join(tokens[1:])}") from None
            raise
    if len(tokens) != 1:
        raise UsageError("give a set like '0,4,→' or 'gens 4 5 6 7'")
    return NumericalSemigroup.of(NumericalSet.parse(tokens[0]))


def cmd_antiatom(args, out):
    S = _parse_semigroup(args.semigroup)
    emit(anti_atom(S, witnesses=args.witnesses).to_json(with_witnesses=args.witnesses), out)


def cmd_tree(args, out):
    levels = build_tree(args.max_genus, annotate=args.annotate)
    text = tree_dot(levels) if args.dot else tree_json_lines(levels)
    out.write(text + "\n")


def cmd_gamma(args, out):
    if args.max_n < 1:
        raise UsageError("max N must be >= 1")
    for N in range(args.min_n, args.max_n + 1):
        row = {"N": N, "P": p_value(family_S(N)), "gamma": gamma(N)}
        if args.semigroups:
            s = count_semigroups_by_frobenius(N)
            row.update({"S": s, "backelin_bound": backelin_bound(N), "share": Fraction(s, 2 ** (N - 1))})
        emit(row, out)


def cmd_ratio(args, out):
    if args.a not in RATIO_LIMITS:
        raise UsageError(f"ratio is tabulated for a in {sorted(RATIO_LIMITS)}")
    for row in semigroup_core_ratio(args.a, args.b_limit):
        emit({"b": row.b, "O": row.oversemigroups, "C": row.cores, "ratio": row.ratio}, out)
    emit({"limit": RATIO_LIMITS[args.a]}, out)


def cmd_verify(args, out):
    names = args.suite or ["all"]
    try:
        results = []
        for name in (list(verify.SUITES) if "all" in names else names):
            if name not in verify.SUITES:
                raise KeyError(name)
            kwargs = {"max_n": args.max_n} if name == "gamma" and args.max_n else {}
            results.append(verify.SUITES[name](**kwargs))
    except KeyError as exc:
        raise UsageError(f"unknown suite {exc.args[0]!r}; choose from {', '.join(verify.SUITES)} or all") from None
    for res in results:
        record = res.to_json()
        if not args.timing:
            record.pop("elapsed_s")
        emit(record, out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_ASSERT


def build_parser():
    p = _Parser(prog="core-lattice", description="Numerical sets, core partitions and core polytopes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("cores", help="lattice points of a core or oversemigroup polytope")
    c.add_argument("a", type=int)
    c.add_argument("b", type=int, nargs="+")
    c.add_argument("--stats", action="store_true", help="print count, max, argmax and exact mean (default)")
    c.add_argument("--dump", action="store_true", help="print every Apéry tuple with its size as CSV")
    c.add_argument("--from-semigroups", action="store_true", help="semigroups containing <a,b> instead of cores")
    c.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration (default 1)")
    c.set_defaults(func=cmd_cores)

    q = sub.add_parser("partition", help="convert between numerical sets and partitions")
    q.add_argument("input", help="numerical set such as '0,1,4,5,7,→' or partition such as '(4,2,2)'")
    q.add_argument("--hooks", action="store_true")
    q.add_argument("--conjugate", action="store_true")
    q.add_argument("--apery", type=int, metavar="A")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_partition)

    s = sub.add_parser("antiatom", help="P(S) and the numerical sets with atom monoid S")
    s.add_argument("semigroup", nargs="+", help="'0,4,→' or 'gens 4 5 6 7'")
    s.add_argument("--witnesses", action="store_true")
    s.set_defaults(func=cmd_antiatom)

    t = sub.add_parser("tree", help="semigroup tree up to a genus, as JSON lines or dot")
    t.add_argument("max_genus", type=int)
    t.add_argument("--annotate", action="store_true", help="fill in |M(S)| and P(S)")
    t.add_argument("--dot", action="store_true")
    t.set_defaults(func=cmd_tree)

    g = sub.add_parser("gamma", help="P(S_N) / 2^(N-1) for N = min..max")
    g.add_argument("max_n", type=int)
    g.add_argument("--min-n", type=int, default=1)
    g.add_argument("--semigroups", action="store_true", help="also count semigroups with Frobenius number N")
    g.set_defaults(func=cmd_gamma)

    r = sub.add_parser("ratio", help="O(<a,b>) / C(a,b) for b up to a limit")
    r.add_argument("a", type=int)
    r.add_argument("b_limit", type=int)
    r.set_defaults(func=cmd_ratio)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", nargs="*", help=f"one or more of {', '.join(verify.SUITES)}, or all")
    v.add_argument("--max-n", type=int, default=None, help="upper N for the gamma suite (default 20)")
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds per suite")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"core-lattice {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"core-lattice {args.command}: assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERT
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
