"""``meshlab`` command-line front end.

Exit codes: 0 success, 1 verification failure or divergence, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .cf import (apply_z_correction, brute_force_F, brute_force_pattern_series, nr3_alpha,
                 dkz_alpha, sfraction_series)
from .equidist import equidistributed, joint_distribution
from .involutions import InvolutionTrace, Phi, Psi
from .mesh import CATALOG, SYMMETRIES, _as_pattern, apply_symmetry, occurrences, transform_pattern
from .perm import all_statistics, arec_positions, parse_perm
from .sweep import default_jobs
from .verify import SUITES, run_suite

_ITEM = r"(?:[A-Za-z][A-Za-z0-9]*|\d+\|(?:\d+,\d+(?:;\d+,\d+)*)?)"
_LIST_RE = re.compile(rf"{_ITEM}(?:,{_ITEM})*")


def split_patterns(text: str) -> list[str]:
    """Split ``"12|0,0;0,1,21|,Nr3"`` into patterns; commas inside boxes stay put."""
    if not _LIST_RE.fullmatch(text):
        raise ValueError(f"cannot split pattern list {text!r}")
    return re.findall(_ITEM, text)


def resolve_pattern(text: str):
    """A catalog name such as ``Nr3`` or a pattern in ``tau|a,b;...`` notation."""
    if "|" not in text and text not in CATALOG:
        raise ValueError(f"unknown pattern name {text!r}")
    return _as_pattern(text)


def _dump(obj, pretty=False) -> str:
    return json.dumps(obj, indent=2 if pretty else None, sort_keys=False)


def _cmd_count(args) -> int:
    perm = parse_perm(args.perm)
    pattern = resolve_pattern(args.pattern)
    occ = occurrences(perm, pattern)
    if args.json:
        out = {"perm": str(perm), "pattern": str(pattern), "count": len(occ)}
        if args.list:
            out["occurrences"] = [list(o) for o in occ]
        print(_dump(out))
        return 0
    print(len(occ))
    if args.list:
        for o in occ:
            print(" ".join(map(str, o)))
    return 0


def _cmd_stats(args) -> int:
    perm = parse_perm(args.perm)
    stats = all_statistics(perm)
    positions = list(arec_positions(perm))
    if args.pretty:
        for name, value in stats.items():
            print(f"{name:<6}{value}")
        print(f"{'AREC':<6}{' '.join(map(str, positions))}")
        return 0
    print(_dump({"perm": str(perm), **stats, "arec_positions": positions}))
    return 0


def _cmd_transform(args) -> int:
    if (args.perm is None) == (args.pattern is None):
        raise ValueError("transform needs exactly one of --perm or --pattern")
    if args.perm is not None:
        print(apply_symmetry(parse_perm(args.perm), args.op))
    else:
        print(transform_pattern(resolve_pattern(args.pattern), args.op))
    return 0


def _cmd_involution(fn, args) -> int:
    perm = parse_perm(args.perm)
    trace = InvolutionTrace()
    image = fn(perm, trace)
    if args.pretty:
        for panel in trace.panels() or [perm]:
            print(panel)
        return 0
    if args.trace:
        print(_dump({"input": str(perm), "output": str(image),
                     "steps": [s.to_json() for s in trace.steps],
                     "panels": [str(p) for p in trace.panels()]}))
        return 0
    print(image)
    return 0


def _cmd_dist(args) -> int:
    patterns = [resolve_pattern(p) for p in split_patterns(args.patterns)]
    if args.against is not None:
        other = [resolve_pattern(p) for p in split_patterns(args.against)]
        rep = equidistributed(args.n, patterns, other, jobs=args.jobs)
        print(_dump(rep.to_json(timing=args.timing), args.pretty))
        return 0 if rep.equal else 1
    dist = joint_distribution(args.n, patterns, jobs=args.jobs)
    if args.tsv:
        print(dist.to_tsv())
    else:
        print(_dump(dist.to_json(), args.pretty))
    return 0


def _cmd_cf(args) -> int:
    if args.rule == "conjecture" and args.z_correction:
        raise ValueError("--z-correction applies to the dkz rule only")
    rule = dkz_alpha() if args.rule == "dkz" else nr3_alpha()
    series = sfraction_series(rule, args.order)
    if args.z_correction:
        series = apply_z_correction(series)
    if args.compare_brute:
        if args.rule == "conjecture":
            brute = brute_force_pattern_series(CATALOG["Nr3"], args.order, jobs=args.jobs)
        else:
            brute = brute_force_F(args.order, jobs=args.jobs)
            if not args.z_correction:
                brute = brute.subs(z=1)
        mismatch = [m for m in range(args.order + 1) if series[m] != brute[m]]
        out = {"rule": args.rule, "order": args.order, "z_correction": args.z_correction,
               "equal": not mismatch}
        if mismatch:
            m = mismatch[0]
            out["witness"] = {"degree": m, "fraction": str(series[m]), "brute_force": str(brute[m])}
        print(_dump(out, args.pretty))
        return 0 if not mismatch else 1
    print(_dump(series.to_json()) if args.json else series.to_text())
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.n, jobs=args.jobs, timing=args.timing)
    print(_dump(report, pretty=True))
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="meshlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"meshlab {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="count occurrences of a mesh pattern")
    p.add_argument("--perm", required=True)
    p.add_argument("--pattern", required=True, help="tau|a,b;... or a catalog name")
    p.add_argument("--list", action="store_true", help="also list occurrence index tuples")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("stats", help="all statistics and antirecord positions")
    p.add_argument("--perm", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("transform", help="reverse, complement or inverse a permutation or pattern")
    p.add_argument("--perm")
    p.add_argument("--pattern")
    p.add_argument("--op", required=True, choices=SYMMETRIES)
    p.set_defaults(fn=_cmd_transform)

    for verb, fn in (("phi", Phi), ("psi", Psi)):
        p = sub.add_parser(verb, help=f"apply the {verb.capitalize()} involution")
        p.add_argument("--perm", required=True)
        p.add_argument("--trace", action="store_true", help="JSON trace of every elementary step")
        p.add_argument("--pretty", action="store_true", help="one panel per line")
        p.set_defaults(fn=lambda a, fn=fn: _cmd_involution(fn, a))

    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=default_jobs())

    p = sub.add_parser("dist", parents=[jobs], help="joint distribution of pattern counts over S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--patterns", required=True)
    p.add_argument("--against", help="second pattern list; prints an equidistribution report")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--tsv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("cf", parents=[jobs], help="expand a continued fraction as a series")
    p.add_argument("--rule", choices=("conjecture", "dkz"), required=True)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--z-correction", action="store_true")
    p.add_argument("--compare-brute", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_cf)

    p = sub.add_parser("verify", parents=[jobs], help="run verification suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("meshlab: error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"meshlab {args.verb}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
