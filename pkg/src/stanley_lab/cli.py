"""Command line entry point: ``stanley-lab classify|depth|sdepth|decompose|suite``."""

from __future__ import annotations

import argparse
import sys

from . import classes, corpus, homology, stanley
from .decomposer import NotWeaklyPolymatroidal, VerificationFailure, decompose
from .monomials import read_ideal


def _load(path):
    ideal, minimal = read_ideal(path)
    if not minimal:
        print(f"note: input generators were not minimal; using {ideal}", file=sys.stderr)
    return ideal


def _proper(ideal):
    if ideal.is_zero() or ideal.is_unit():
        raise SystemExit(f"error: {ideal} is not a proper nonzero ideal")


def cmd_classify(args):
    ideal = _load(args.ideal)
    _proper(ideal)
    print(f"ideal: {ideal}")
    rows = []
    pm = classes.is_polymatroidal(ideal)
    rows.append(("polymatroidal", pm.holds, pm.witness))
    wpm = classes.is_weakly_polymatroidal(ideal)
    rows.append(("weakly polymatroidal (given order)", wpm.holds, wpm.witness))
    if ideal.n <= classes.MAX_PERMUTATION_N:
        perms = classes.weakly_polymatroidal_permutations(ideal)
        shown = [" > ".join(ideal.context.names[p] for p in perm) for perm in perms[:3]]
        rows.append(("weakly polymatroidal (some permutation)", bool(perms),
                     f"{len(perms)} orders, e.g. {'; '.join(shown)}" if perms else None))
    else:
        rows.append(("weakly polymatroidal (some permutation)", None, "n too large to search"))
    lq = classes.has_linear_quotients_with_order(ideal)
    if lq:
        rows.append(("linear quotients (purelex)", True, f"n_i = {list(lq.counts)}"))
    else:
        rows.append(("linear quotients (purelex)", False, f"position {lq.position + 1}, colon {lq.colon}"))
    try:
        found = classes.find_linear_quotients_order(ideal)
        rows.append(("linear quotients (some order)", found is not None,
                     f"order {[k + 1 for k in found.order]}" if found else None))
    except classes.SearchCapExceeded as exc:
        rows.append(("linear quotients (some order)", None, str(exc)))
    width = max(len(r[0]) for r in rows)
    for name, ok, wit in rows:
        mark = "?" if ok is None else ("yes" if ok else "no")
        line = f"{name.ljust(width)}  {mark}"
        if wit is not None and (not ok or isinstance(wit, str)):
            line += f"  [{wit}]"
        print(line)
    return 0


def cmd_depth(args):
    ideal = _load(args.ideal)
    rep = homology.depth(ideal, char=args.char)
    print(f"pd = {rep.pd}\ndepth = {rep.depth}\nsource = {rep.source}")
    if args.oracle and not (ideal.is_zero() or ideal.is_unit()):
        table = homology.betti_numbers(ideal, char=args.char)
        print(f"betti oracle (char {args.char}): pd = {table.pd}, totals = {table.totals()}")
        for (i, a), b in sorted(table.entries.items()):
            print(f"  beta_{i},{a} = {b}")
    return 0


def cmd_sdepth(args):
    ideal = _load(args.ideal)
    if args.exact:
        res = stanley.exact_sdepth_quotient(ideal, timeout=corpus.default_timeout())
        tag = "exact" if res.exact else "lower bound (timed out)"
        print(f"# sdepth = {res.value} ({tag})")
        print(res.decomposition.format(), end="")
    else:
        D, _ = decompose(ideal)
        print(f"# sdepth >= {stanley.sdepth_of(D)} (constructed)")
        print(D.format(), end="")
    return 0


def cmd_decompose(args):
    ideal = _load(args.ideal)
    D, trace = decompose(ideal, record_depth=args.trace)
    print(f"# depth = {homology.depth(ideal).depth}, sdepth(D) = {stanley.sdepth_of(D)}, {len(D)} spaces")
    if args.trace:
        for line in trace.render().splitlines():
            print("# " + line)
    print(D.format(), end="")
    if args.verify_exact:
        res = stanley.exact_sdepth_quotient(ideal, timeout=corpus.default_timeout())
        print(f"# exact sdepth = {res.value}{'' if res.exact else ' (lower bound)'}")
        if res.exact and res.value < stanley.sdepth_of(D):
            print("# error: exact sdepth below constructed decomposition", file=sys.stderr)
            return 1
    return 0


def cmd_suite(args):
    spec = corpus.read_spec(args.spec)
    if args.seed is not None:
        spec.seed = args.seed
    report = corpus.run_suite(spec, exact=args.exact, jobs=args.jobs)
    print(report.table())
    if args.out:
        report.write(args.out)
    bad = report.violations
    print(f"\n{len(report.rows)} ideals, {len(bad)} failures")
    return 1 if bad else 0


def build_parser():
    p = argparse.ArgumentParser(prog="stanley-lab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="test the ideal classes")
    c.add_argument("ideal")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("depth", help="depth and pd of S/I")
    c.add_argument("ideal")
    c.add_argument("--oracle", action="store_true", help="also print the lcm-lattice Betti table")
    c.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
    c.set_defaults(func=cmd_depth)

    c = sub.add_parser("sdepth", help="Stanley depth of S/I")
    c.add_argument("ideal")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exhaustive interval partition search")
    g.add_argument("--construct", action="store_true", help="constructive decomposition (default)")
    c.set_defaults(func=cmd_sdepth)

    c = sub.add_parser("decompose", help="constructive Stanley decomposition of S/I")
    c.add_argument("ideal")
    c.add_argument("--trace", action="store_true")
    c.add_argument("--verify-exact", action="store_true")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("suite", help="batch verification over a corpus spec")
    c.add_argument("--spec", required=True)
    c.add_argument("--out")
    c.add_argument("--exact", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotWeaklyPolymatroidal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
