"""Command line entry point: ``nakayama <subcommand> ...``.

Exit codes: 0 success, 2 malformed input, 3 move precondition violated,
4 outside the radical power table.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import enumerate_algebras, parse_algebra
from .complexes import stalk
from .coxeter import coxeter
from .derived import stalk_shift_of, tau
from .errors import IoFailure, MoveError, NakayamaError, OutOfTable
from .moves import apply_chain
from .obstructions import Inconclusive, battery, coarse_fine_sequences, hs_derivation, tau_orbit_test
from .survey import default_jobs, run_survey

EXIT_OK, EXIT_INPUT, EXIT_MOVE, EXIT_TABLE = 0, 2, 3, 4


def _name(k, i):
    return f"P_{i}" if k == 0 else f"tau^{k}(P_{i})"


def tau_table(algebra, start: int, max_steps: int) -> list[str]:
    """Rows ``tau^k(P_start)`` laid out in degree columns, up to the first return.

    The last line names the shift once ``tau^k(P_start) = P_start[m]`` with
    ``m >= 1``; otherwise the table simply stops after ``max_steps`` rows.
    """
    rows = [stalk(algebra, start)]
    closing = None
    x = rows[0]
    for k in range(1, max_steps + 1):
        x = tau(x)
        rows.append(x)
        s = stalk_shift_of(x)
        if s is not None and s[0] == start and s[1] >= 1:
            closing = f"{_name(k, start)} = P_{start}[{s[1]}]"
            break
    lo = min(r.lo for r in rows)
    hi = max(r.lo + len(r.terms) - 1 for r in rows)
    cells = []
    for r in rows:
        line = []
        for d in range(lo, hi + 1):
            t = r.term(d) if r.lo <= d < r.lo + len(r.terms) else ()
            line.append("+".join(f"P{a}" for a in t))
        cells.append(line)
    width = max([len(c) for line in cells for c in line] + [len(str(lo)), len(str(hi))])
    label = max(len(_name(k, start)) for k in range(len(rows))) + 1
    out = ["degree".ljust(label) + " " + " ".join(str(d).rjust(width) for d in range(lo, hi + 1))]
    for k, line in enumerate(cells):
        out.append((_name(k, start) + ":").ljust(label) + " "
                   + " ".join(c.rjust(width) for c in line).rstrip())
    if closing:
        out.append(closing)
    return out


# -- subcommands ---------------------------------------------------------------------

def cmd_enumerate(args):
    if args.count_only:
        print(sum(1 for _ in enumerate_algebras(args.n)))
    else:
        for a in enumerate_algebras(args.n):
            print(a.encode())


def cmd_coxeter(args):
    a = parse_algebra(args.algebra)
    data = coxeter(a)
    print(f"algebra: {a.encode()}")
    print(f"kupisch: {','.join(map(str, a.kupisch))}")
    print(f"coxeter: {data.polynomial_str()}")


def cmd_mutate(args):
    a = parse_algebra(args.algebra)
    print(a.encode())
    for rec in apply_chain(a, args.chain):
        tag = "derived" if rec.derived_equivalence else "transport"
        print(f"{rec.move} [{tag}] -> {rec.output.encode()}")


def cmd_tau_orbit(args):
    a = parse_algebra(args.algebra)
    if args.table:
        print("\n".join(tau_table(a, args.start, args.max_steps)))
        return
    res = tau_orbit_test(a, starts=[args.start], max_steps=args.max_steps)
    print(json.dumps(res.to_json()))


def cmd_obstruct(args):
    a = parse_algebra(args.algebra)
    v = battery(a, max_steps=args.max_steps)
    print(f"algebra: {a.encode()}")
    print(f"verdict: {v.status}")
    for c in v.certificates:
        print(f"certificate: {json.dumps(c.to_json())}")
    for note in v.notes:
        print(f"note: {note}")
    for log in v.orbit_logs:
        print(f"orbit P_{log.start}: {log.reason} after {log.steps} steps")


def cmd_coarse_fine(args):
    a = parse_algebra(args.algebra)
    res = coarse_fine_sequences(a)
    if res is None:
        print("inapplicable: no relation of length at least 3")
        return
    print(f"c = {res.c}  (l_c = {res.l_c})")
    print(f"f = {res.f}  (l_f = {res.l_f})")
    print("fires" if res.fires else f"inconclusive: {res.diagnostic}")


def cmd_hs(args):
    d = hs_derivation(args.n, args.r)
    out = d.replay()
    print(f"seed: {d.seed} certified by {json.dumps(d.seed_certificate.to_json())}")
    print(f"moves: {','.join(d.moves)}")
    print(f"result: {out.encode()}")


def cmd_survey(args):
    jobs = args.jobs if args.jobs is not None else default_jobs()
    s = run_survey(args.n, args.out, jobs=jobs, max_steps=args.max_steps,
                   timing=args.timing, resume=not args.fresh)
    print(f"records: {s.records} (resumed {s.resumed})")
    print(f"flagged: {len(s.flagged)}")
    for enc in s.flagged:
        print(f"  {enc}")
    print(f"sha256: {s.digest}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nakayama", description="Linear Nakayama algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list all algebras on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    spec_help = "n=..;rels=..  kupisch=..  radpow=n,m  or @file.json"
    s = sub.add_parser("coxeter", help="Cartan data and Coxeter polynomial")
    s.add_argument("--algebra", required=True, help=spec_help)
    s.set_defaults(func=cmd_coxeter)

    s = sub.add_parser("mutate", help="apply a comma separated move chain")
    s.add_argument("--algebra", required=True, help=spec_help)
    s.add_argument("--chain", required=True)
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("tau-orbit", help="iterate tau on an indecomposable projective")
    s.add_argument("--algebra", required=True, help=spec_help)
    s.add_argument("--start", type=int, default=1)
    s.add_argument("--max-steps", type=int, default=200)
    s.add_argument("--table", action="store_true")
    s.set_defaults(func=cmd_tau_orbit)

    s = sub.add_parser("obstruct", help="run every obstruction test")
    s.add_argument("--algebra", required=True, help=spec_help)
    s.add_argument("--max-steps", type=int, default=200)
    s.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("coarse-fine", help="coarse and fine sequences")
    s.add_argument("--algebra", required=True, help=spec_help)
    s.set_defaults(func=cmd_coarse_fine)

    s = sub.add_parser("hs", help="derivation of a radical power algebra from a seed")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_hs)

    s = sub.add_parser("survey", help="battery over all algebras on n vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--max-steps", type=int, default=200)
    s.add_argument("--timing", action="store_true", help="add a wall_time field to each record")
    s.add_argument("--fresh", action="store_true", help="ignore records already in --out")
    s.set_defaults(func=cmd_survey)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except OutOfTable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TABLE
    except MoveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MOVE
    except (NakayamaError, IoFailure, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
