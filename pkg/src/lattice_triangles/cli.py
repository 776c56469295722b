"""Command-line front end.

Exit codes: 0 success or verified, 1 a mathematical violation was found,
2 invalid input (or an unwritable output path), 3 negative membership.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import cones, plotting, realizability
from .core import BiPair, LatticeTriangle, brute_force_bi, ehrhart_eval, hnf_normalize, pick_area_twice

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID, EXIT_NOT_MEMBER = 0, 1, 2, 3
DEFAULT_N_MAX = 2000


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", text.strip()):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def _positive(text: str) -> int:
    v = _int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _int_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:\.\.\s*([+-]?\d+)\s*)?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def _point(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}")
    return _int(parts[0]), _int(parts[1])


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


def cmd_pairs(args) -> int:
    ps = realizability.enumerate_pairs(args.n_max, shards=args.shards)
    if args.format == "csv":
        text = plotting.pairs_to_csv(ps)
    elif args.format == "json":
        text = json.dumps({"n_max": ps.n_max, "pairs": [list(p) for p in ps]}) + "\n"
    else:
        window = plotting.PlotWindow.complete_for(args.n_max, args.b_max)
        lo, hi = args.cones if args.cones else (1, 0)
        if lo < 1 and lo <= hi:
            raise UsageError("cone indices start at 1")
        text = plotting.render_svg(ps, window, range(lo, hi + 1))
    _emit(text, args.out)
    return EXIT_OK


def cmd_member(args) -> int:
    if args.b < 3 or args.i < 0:
        raise UsageError(f"({args.b}, {args.i}) is not a lattice polygon pair")
    w = realizability.membership_witness((args.b, args.i))
    doc = {"b": args.b, "i": args.i, "member": w is not None}
    if w is not None:
        A, B, C = w.triple
        doc["witness"] = {"A": A, "B": B, "C": C}
    print(json.dumps(doc))
    return EXIT_OK if w is not None else EXIT_NOT_MEMBER


def cmd_check_cones(args) -> int:
    c_min, c_max = args.c
    if c_min < 2 or c_min > c_max:
        raise UsageError(f"cone range must satisfy 2 <= A <= B, got {c_min}..{c_max}")
    if args.b_max < 3:
        raise UsageError("--b-max must be >= 3")
    start = time.perf_counter()
    for c in range(c_min, c_max + 1):
        tested = sum(1 for _ in cones.cone_points(c, args.b_max))
        print(f"cone {c}: {tested} lattice points tested")
    violations = realizability.verify_cone_emptiness(args.b_max, c_min, c_max, shards=args.shards)
    for w in violations:
        print(f"violation: ({w.pair.b}, {w.pair.i}) realized by {w.triple}")
    print(f"{len(violations)} violations ({time.perf_counter() - start:.2f}s)")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_witness(args) -> int:
    if args.c is None:
        raise UsageError("--c is required")
    try:
        if args.family == "apex":
            w = realizability.apex_witness(args.c)
        elif args.family == "upper":
            if args.k is None:
                raise UsageError("--k is required for the upper family")
            w = realizability.upper_face_witness(args.c, args.k)
        else:
            if args.b is None or args.i is None:
                raise UsageError("--b and --i are required for the lower family")
            w = realizability.lower_facet_witness((args.b, args.i), args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not w.check():
        print(f"witness {w.triple} failed the lattice scan", file=sys.stderr)
        return EXIT_VIOLATION
    A, B, C = w.triple
    print(json.dumps({
        "pair": {"b": w.pair.b, "i": w.pair.i},
        "vertices": [list(v) for v in w.vertices],
        "triple": {"A": A, "B": B, "C": C},
    }))
    return EXIT_OK


def cmd_prime_line(args) -> int:
    ok = True
    count = 0
    for p in range(3, args.p_max + 1, 2):
        if not realizability.is_odd_prime(p):
            continue
        count += 1
        got = realizability.prime_line_pairs(p).as_set()
        if got != realizability.expected_prime_line(p):
            ok = False
            print(f"p={p}: MISMATCH {sorted(got)}")
        elif args.verbose:
            print(f"p={p}: {sorted(got)}")
    print(f"{count} odd primes checked: {'all match' if ok else 'mismatches found'}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_ehrhart(args) -> int:
    if args.k_max < 0:
        raise UsageError("--k-max must be >= 0")
    try:
        t = LatticeTriangle.from_coords(*args.vertices)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    pair = brute_force_bi(t)
    hnf = hnf_normalize(t)
    print(f"b={pair.b} i={pair.i} 2a={pick_area_twice(pair)} hnf={hnf.triple}")
    print("k\tcount\tscan")
    ok = True
    for k in range(args.k_max + 1):
        value = ehrhart_eval(pair, k)
        scan = 1 if k == 0 else sum(brute_force_bi(t.dilate(k)))
        ok &= value == scan
        print(f"{k}\t{value}\t{scan}")
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-triangles",
        description="Ehrhart data and realizable (b, i) pairs of lattice triangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "pairs",
        help="enumerate realizable (b, i) pairs",
        description=(
            "Enumerate all (b, i) realized by lattice triangles with 2i + b - 2 <= N_MAX. "
            f"The default --n-max {DEFAULT_N_MAX} makes the SVG window b <= 500, "
            "i <= 751 complete; the SVG always crops to the largest complete window."
        ),
    )
    p.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--cones", type=_int_range, default=None, help="overlay cones A..B (svg)")
    p.add_argument("--b-max", type=_positive, default=None, help="svg horizontal extent")
    p.add_argument("--shards", type=_positive, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("member", help="decide whether (b, i) comes from a lattice triangle")
    p.add_argument("b", type=_int)
    p.add_argument("i", type=_int)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("check-cones", help="verify that no triangle pair lies in the open cones")
    p.add_argument("--b-max", type=_int, required=True)
    p.add_argument("--c", type=_int_range, default=(2, 2))
    p.add_argument("--shards", type=_positive, default=1)
    p.set_defaults(func=cmd_check_cones)

    p = sub.add_parser("witness", help="print an explicit witness triangle")
    p.add_argument("family", choices=("apex", "lower", "upper"))
    p.add_argument("--c", type=_int)
    p.add_argument("--k", type=_int)
    p.add_argument("--b", type=_int)
    p.add_argument("--i", type=_int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("prime-line", help="check the prime normalized volume lines")
    p.add_argument("--p-max", type=_int, required=True)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_prime_line)

    p = sub.add_parser("ehrhart", help="Ehrhart data of a triangle, cross-checked by scanning")
    p.add_argument("vertices", type=_point, nargs=3, metavar="X,Y")
    p.add_argument("--k-max", type=_int, default=3)
    p.set_defaults(func=cmd_ehrhart)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
