"""Command-line front end: ``refinv table|verify|bij|render``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import bijections as bij
from .dyck import ModifiedDyckPath, PartialDyckPath, render
from .enumerate import ORACLE_DEPTH, count
from .formulas import i_stat
from .perm_core import Permutation, Pattern
from .syt import gamma_move, involution_of, tableau_of
from .verify import SECTIONS, run


def build_table(stat: str, pattern: str, n_max: int, source: str = "formula") -> list[list[int]]:
    Pattern(pattern)
    if len(pattern) != 3:
        raise ValueError(f"pattern must be in S_3, got {pattern}")
    value = i_stat if source == "formula" else count
    return [[value(stat, n, k, pattern) for k in range(n + 1)] for n in range(n_max + 1)]


def format_table(rows: list[list[int]], fmt: str, stat: str, pattern: str) -> str:
    n_max = len(rows) - 1
    if fmt == "text":
        return "\n".join(" ".join(map(str, r)) for r in rows) + "\n"
    if fmt == "json":
        return json.dumps({"stat": stat, "pattern": pattern, "rows": rows}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + [f"k={k}" for k in range(n_max + 1)])
        for n, r in enumerate(rows):
            w.writerow([n] + r + [""] * (n_max - n))
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def _perm_to_perm(fn):
    return lambda text: str(fn(Permutation.parse(text)))


def _gamma_perm(text: str) -> str:
    return str(involution_of(gamma_move(tableau_of(Permutation.parse(text)))))


def _big_gamma(text: str) -> str:
    # accepts either the path or the fixed-point-free involution it encodes
    if set(text.strip().upper()) <= {"U", "D"}:
        return str(bij.big_gamma(text))
    return str(bij.big_gamma_perm(Permutation.parse(text)))


BIJECTIONS = {
    "k": _perm_to_perm(bij.krattenthaler),
    "k-inv": lambda t: str(bij.krattenthaler_inv(t)),
    "gamma": _gamma_perm,
    "big-gamma": _big_gamma,
    "delta": _perm_to_perm(bij.delta),
    "delta-inv": lambda t: str(bij.delta_inv(t)),
    "zeta": _perm_to_perm(bij.zeta),
    "zeta-inv": lambda t: str(bij.zeta_inv(t)),
    "mdp": lambda t: str(bij.mdp_to_partial(ModifiedDyckPath.parse(t))),
    "mdp-inv": lambda t: str(bij.partial_to_mdp(t)),
}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    if args.n_max > ORACLE_DEPTH and args.source == "oracle":
        print(f"warning: n-max {args.n_max} exceeds oracle depth {ORACLE_DEPTH}", file=sys.stderr)
    rows = build_table(args.stat, args.pattern, args.n_max, args.source)
    _emit(format_table(rows, args.format, args.stat, args.pattern), args.out)
    return 0


def cmd_verify(args) -> int:
    sections = args.sections.split(",") if args.sections else list(SECTIONS)
    checks = run(sections, args.n_max)
    lines = [str(c) for c in checks]
    if "cycles" in sections and args.n_max >= 6:
        from .enumerate import cycle_class_counts

        a, b = cycle_class_counts(6, "132"), cycle_class_counts(6, "321")
        ct = next(c for c in a if c.parts == (4, 2))
        lines.append(f"S6 cycle table: {ct} gives {a[ct]} vs {b[ct]}")
    ok = all(c.ok for c in checks)
    lines.append(f"{'ALL PASS' if ok else 'FAILED'}: {sum(c.ok for c in checks)}/{len(checks)} checks")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_bij(args) -> int:
    result = BIJECTIONS[args.name](args.input)
    text = result + "\n"
    if args.render and set(result.replace("|", "")) <= {"U", "D"}:
        text += render(result) + "\n"
    _emit(text, args.out)
    return 0


def cmd_render(args) -> int:
    _emit(render(args.path) + "\n", args.out)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="refinv", description="Refined counts of pattern-restricted involutions.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="triangular table of i_n^k values")
    t.add_argument("--stat", choices=["avoid", "once"], required=True)
    t.add_argument("--pattern", required=True, help="a pattern of length 3, e.g. 132")
    t.add_argument("--n-max", type=int, default=8)
    t.add_argument("--format", choices=["text", "csv", "json"], default="text")
    t.add_argument("--source", choices=["formula", "oracle"], default="formula")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the cross-checks")
    v.add_argument("--n-max", type=int, default=int(os.environ.get("REFINV_VERIFY_N", "8")))
    v.add_argument("--sections", help=f"comma-separated subset of {','.join(SECTIONS)}")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bij", help="apply a bijection")
    b.add_argument("name", choices=sorted(BIJECTIONS))
    b.add_argument("input")
    b.add_argument("--render", action="store_true", help="append ASCII art of a path result")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bij)

    r = sub.add_parser("render", help="draw a path or head|tail modified path")
    r.add_argument("path")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
