"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input or validation error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .fixtures import FIXTURES, fixture_text
from .geometry import (
    Complex,
    ComplexError,
    dump_complex,
    face_counts,
    is_hereditary,
    is_simplicial,
    parse_complex,
)
from .hilbert import planar_hp
from .oracle import spline_dim_oracle
from .report import FORMATS, Report
from .xigraph import all_cycles

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INVALID = 0, 1, 2


def c_value_symbolic(n: int) -> str:
    """The per-cycle constant as an expression in r, for a fixed line count n."""
    if n == 2:
        return "(r+1)^2"
    if n == 3:
        return "C(r+2,2) + a(r-a), a = floor((r+1)/2)"
    return f"C(r+2,2) + (a/2)(2r+3+a-{n}(1+a)), a = floor((r+1)/{n - 1})"


def load_input(path: str) -> Complex:
    """Read a complex from a file, falling back to a bundled fixture name."""
    p = Path(path)
    if p.is_file():
        text = p.read_text(encoding="utf-8")
    elif path in FIXTURES:
        text = fixture_text(path)
    else:
        raise ComplexError("malformed document", f"no such file or fixture: {path}")
    return parse_complex(text)


def cmd_analyze(c: Complex) -> Report:
    counts = face_counts(c)
    rep = Report("analyze")
    rep.meta = {
        "name": c.name,
        "f_0": len(c.vertices),
        "f_1": len(c.edges),
        "f_2": counts.f2,
        "f1_int": counts.f1_int,
        "f0_int": counts.f0_int,
        "f1_bdry": counts.f1_bdry,
        "f0_bdry": counts.f0_bdry,
        "euler": len(c.vertices) - len(c.edges) + counts.f2,
        "hereditary": is_hereditary(c),
        "simplicial": is_simplicial(c),
    }
    cycles = all_cycles(c)
    rep.meta["cycle_points"] = len(cycles)
    rep.meta["cycles"] = sum(len(v) for v in cycles.values())
    rep.columns = ["xi", "at_infinity", "length", "n", "faces", "c_value"]
    for xi in sorted(cycles):
        for cyc in cycles[xi]:
            rep.rows.append([
                str(xi),
                xi.at_infinity,
                cyc.length,
                cyc.n,
                " ".join(map(str, cyc.faces)),
                c_value_symbolic(cyc.n),
            ])
    if not cycles:
        rep.notes.append("no cycle-carrying xi")
    return rep


def cmd_hp(c: Complex, rs: list[int]) -> Report:
    rep = Report("hp")
    rep.meta = {"name": c.name}
    cycles = all_cycles(c)
    ns = sorted({cyc.n for group in cycles.values() for cyc in group})
    rep.columns = (
        ["r", "hilbert_polynomial", "free_part", "edge_constant", "cycle_constant"]
        + [f"cycles_n{n}" for n in ns]
    )
    for r in rs:
        hp = planar_hp(c, r, cycles)
        by_n = hp.cycle_constant_by_n()
        free = type(hp)(hp.a2, hp.a1, 0)
        rep.rows.append(
            [r, hp, free, hp.edge_constant, hp.cycle_constant] + [by_n.get(n, 0) for n in ns]
        )
    return rep


def cmd_dim(c: Complex, r: int, k: int, method: str) -> Report:
    rep = Report("dim")
    rep.meta = {"name": c.name}
    if method == "formula":
        value = planar_hp(c, r)(k)
        rep.notes.append("formula value equals the dimension only for k in the stable range")
    elif method == "oracle":
        value = spline_dim_oracle(c, r, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    rep.columns = ["method", "r", "k", "dim"]
    rep.rows.append([method, r, k, value])
    return rep


def cmd_verify(c: Complex, r: int, kmin: int, kmax: int) -> tuple[Report, int]:
    if not 0 <= kmin <= kmax:
        raise ValueError("need 0 <= kmin <= kmax")
    hp = planar_hp(c, r)
    rep = Report("verify")
    rep.columns = ["k", "oracle", "formula", "match"]
    matches = []
    for k in range(kmin, kmax + 1):
        oracle, formula = spline_dim_oracle(c, r, k), hp(k)
        matches.append(oracle == formula)
        rep.rows.append([k, oracle, formula, oracle == formula])
    k_star = None
    if matches[-1]:
        k_star = kmax
        while k_star > kmin and matches[k_star - 1 - kmin]:
            k_star -= 1
    rep.meta = {
        "name": c.name,
        "r": r,
        "hilbert_polynomial": hp,
        "stabilized": k_star is not None,
        "k_star": k_star if k_star is not None else "no stabilization observed",
    }
    return rep, EXIT_OK if k_star is not None else EXIT_VERIFY_FAILED


def cmd_fixtures(export: str | None) -> Report:
    rep = Report("fixtures")
    if export is not None:
        rep.notes.append(dump_complex(parse_complex(fixture_text(export))))
        return rep
    rep.columns = ["name", "f_2", "f1_int", "f0_int", "simplicial"]
    for name in FIXTURES:
        c = parse_complex(fixture_text(name))
        counts = face_counts(c)
        rep.rows.append([name, counts.f2, counts.f1_int, counts.f0_int, is_simplicial(c)])
    return rep


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyspline",
        description="Dimensions of C^r_k spline spaces on planar polyhedral complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("path", help="input document, or the name of a bundled fixture")
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("analyze", help="combinatorics and cycle-carrying points")
    add_common(p)

    p = sub.add_parser("hp", help="Hilbert polynomial with its breakdown")
    add_common(p)
    p.add_argument("--r", type=_non_negative, nargs="+", required=True, help="smoothness (one or more)")

    p = sub.add_parser("dim", help="dimension of C^r_k")
    add_common(p)
    p.add_argument("--r", type=_non_negative, required=True)
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--method", choices=("formula", "oracle"), default="oracle")

    p = sub.add_parser("verify", help="compare formula and oracle over a degree range")
    add_common(p)
    p.add_argument("--r", type=_non_negative, required=True)
    p.add_argument("--kmin", type=_non_negative, default=0)
    p.add_argument("--kmax", type=_non_negative, required=True)

    p = sub.add_parser("fixtures", help="list bundled fixtures or print one")
    p.add_argument("--export", choices=sorted(FIXTURES), help="print this fixture's document")
    p.add_argument("--format", choices=FORMATS, default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            if args.command == "fixtures":
                rep = cmd_fixtures(args.export)
                if args.export:
                    sys.stdout.write(rep.notes[0] + "\n")
                    return EXIT_OK
            else:
                c = load_input(args.path)
                if args.command == "analyze":
                    rep = cmd_analyze(c)
                elif args.command == "hp":
                    rep = cmd_hp(c, args.r)
                elif args.command == "dim":
                    rep = cmd_dim(c, args.r, args.k, args.method)
                else:
                    if args.kmin > args.kmax:
                        print("error: --kmin exceeds --kmax", file=sys.stderr)
                        return EXIT_INVALID
                    rep, code = cmd_verify(c, args.r, args.kmin, args.kmax)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    except ComplexError as exc:
        print(f"error: invalid complex ({exc.invariant}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(rep.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
