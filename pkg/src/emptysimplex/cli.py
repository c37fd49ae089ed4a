"""Command-line interface.

Subcommands: ``cyclotomic enumerate|build|orbits``, ``width``, ``empty``,
``circulant info|m0|table``, ``verify tables``. All big integers print as
exact decimal strings; failures are reported as JSON objects on stderr with
the offending parameters attached.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import circulant
from .cyclic import is_empty, lattice_points_in, new_cyclic, signed_form, to_line
from .cyclotomic import (
    CSV_HEADER,
    SweepOptions,
    composite_sweep,
    cyclotomic_simplex,
    principal_primitive_orbits,
    sweep,
)
from .errors import EmptySimplexError, WidthAboveCap
from .tables import verify_tables
from .width import lattice_width


def _fail(message: str, **context) -> int:
    print(json.dumps({"error": message, **context}), file=sys.stderr)
    return 1


def _parse_generator(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _open_out(path: str | None):
    return open(path, "w") if path else sys.stdout


# ---------------------------------------------------------------------------
# cyclotomic


def cmd_cyclotomic_enumerate(args: argparse.Namespace) -> int:
    if args.dim % 2 != 0:
        return _fail(
            "odd dimension rejected: a non-primitive root pairing forces "
            "width <= 2, so odd-d sweeps carry no information",
            d=args.dim,
        )
    opts = SweepOptions(
        width_cap=args.width_cap,
        empty_only_widths=not args.all_widths,
        want_certificates=args.certificates,
        threads=args.threads,
        checkpoint=args.checkpoint,
    )
    runner = composite_sweep if args.composite else sweep
    timing = not args.no_timing
    out = _open_out(args.out)
    try:
        if args.format == "csv":
            print(CSV_HEADER, file=out)
        for rec in runner(args.dim, args.min_volume, args.max_volume, opts):
            if args.empty_only and not rec.empty:
                continue
            if args.format == "jsonl":
                print(rec.to_json(include_timing=timing), file=out)
            elif args.format == "csv":
                print(rec.csv_line(include_timing=timing), file=out)
            else:
                w = rec.width_str() or "-"
                print(
                    f"Cycl({rec.d}, {rec.volume})  k={rec.root}  "
                    f"empty={str(rec.empty).lower()}  width={w}",
                    file=out,
                )
    except EmptySimplexError as exc:
        return _fail(str(exc), d=args.dim)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_cyclotomic_build(args: argparse.Namespace) -> int:
    try:
        s = cyclotomic_simplex(args.dim, args.volume)
    except EmptySimplexError as exc:
        return _fail(str(exc), d=args.dim, N=args.volume)
    print(to_line(s))
    print(f"signed: {','.join(str(x) for x in signed_form(s))}")
    return 0


def cmd_cyclotomic_orbits(args: argparse.Namespace) -> int:
    orbits = principal_primitive_orbits(args.dim, args.volume)
    for orbit in orbits:
        roots = ",".join(str(r) for r in orbit.roots)
        print(f"k={orbit.representative} roots={roots}")
    print(f"{len(orbits)} orbit(s)")
    return 0


# ---------------------------------------------------------------------------
# width / empty on explicit generators


def _simplex_from_args(args: argparse.Namespace):
    b = _parse_generator(args.generator)
    return new_cyclic(len(b) - 1, args.volume, b)


def cmd_width(args: argparse.Namespace) -> int:
    try:
        s = _simplex_from_args(args)
    except EmptySimplexError as exc:
        return _fail(str(exc), N=args.volume)
    try:
        w, cert = lattice_width(
            s, symmetric=args.symmetric, cap=args.width_cap, want_certificate=True
        )
    except WidthAboveCap:
        print(f">{args.width_cap}")
        return 0
    print(str(cert) if cert else f"w={w}")
    return 0


def cmd_empty(args: argparse.Namespace) -> int:
    try:
        s = _simplex_from_args(args)
    except EmptySimplexError as exc:
        return _fail(str(exc), N=args.volume)
    empty = is_empty(s)
    print("empty" if empty else "not-empty")
    if not empty and args.points:
        for p in lattice_points_in(s):
            print(f"j={p.index} numerators={','.join(str(x) for x in p.numerators)}")
    return 0


# ---------------------------------------------------------------------------
# circulant


def cmd_circulant_info(args: argparse.Namespace) -> int:
    d, m = args.dim, args.m
    even = d % 2 == 0
    try:
        width = circulant.width_circulant(d, m, verify=args.verify)
        if even:
            vol = circulant.volume(d, m)
        else:
            # odd d: no closed form; fall back to the exact determinant
            vol = circulant.general_circulant_volume(
                circulant.circulant_generator(d, m)
            )
    except EmptySimplexError as exc:
        return _fail(str(exc), d=d, m=m)
    print(f"S({d}, {m})")
    print(f"volume: {vol}")
    if vol >= 10**18:
        print(f"volume approx: {float(vol):.4e}")
    print(f"width: {width}")
    if even:
        empty = circulant.is_empty_circulant(d, m)
        fv, group = circulant.facet_volume_and_group(d, m)
        u = circulant.u_vector(d, m)
        print(f"empty: {str(empty).lower()}")
        print(f"facet volume: {fv}  group: {group}")
        print(f"u: {','.join(str(x) for x in u.entries)}")
    return 0


def cmd_circulant_m0(args: argparse.Namespace) -> int:
    report = circulant.m0(args.dim)
    print(f"m0_floor: {report.m0_floor}")
    print(f"m0: {report.m0_float:.9f}")
    print(f"z: {report.z:.12f}")
    print(f"alpha_limit_2m0_over_d: {report.alpha:.9f}")
    return 0


def cmd_circulant_table(args: argparse.Namespace) -> int:
    print("d,m,volume,width,empty")
    for d in range(4, args.max_dim + 1, 2):
        m = circulant.m0(d).m0_floor
        if m < 1:
            continue
        vol = circulant.volume(d, m)
        width = circulant.width_circulant(d, m)
        empty = circulant.is_empty_circulant(d, m)
        print(f"{d},{m},{vol},{width},{str(empty).lower()}")
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify_tables(args: argparse.Namespace) -> int:
    try:
        results = verify_tables(
            tables=args.table or None, threads=args.threads, long=args.long
        )
    except KeyError as exc:
        return _fail(str(exc))
    failed = 0
    for row in results:
        print(row.line())
        failed += not row.passed
    print(f"{len(results) - failed}/{len(results)} rows passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_generator_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--volume", "-N", type=int, required=True, help="volume N")
    p.add_argument(
        "--generator",
        "-b",
        required=True,
        help="comma-separated generator entries b_0,...,b_d",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emptysimplex",
        description="Exact search tools for empty cyclic lattice simplices.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    cyc = top.add_parser("cyclotomic", help="cyclotomic simplices Cycl(d, N)")
    cycsub = cyc.add_subparsers(dest="subcommand", required=True)

    enum = cycsub.add_parser("enumerate", help="sweep a volume range")
    enum.add_argument("--dim", type=int, required=True)
    enum.add_argument("--min-volume", type=int, default=2)
    enum.add_argument("--max-volume", type=int, required=True)
    enum.add_argument("--width-cap", type=int, default=None)
    enum.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    enum.add_argument("--checkpoint", default=None)
    enum.add_argument("--out", default=None)
    enum.add_argument(
        "--format", choices=("csv", "jsonl", "pretty"), default="csv"
    )
    enum.add_argument(
        "--composite",
        action="store_true",
        help="sweep composite volumes by principal-root orbits",
    )
    enum.add_argument(
        "--all-widths",
        action="store_true",
        help="compute widths for non-empty simplices too",
    )
    enum.add_argument("--certificates", action="store_true")
    enum.add_argument(
        "--empty-only", action="store_true", help="emit only empty simplices"
    )
    enum.add_argument(
        "--no-timing",
        action="store_true",
        help="zero the elapsed_ms column for reproducible byte streams",
    )
    enum.set_defaults(func=cmd_cyclotomic_enumerate)

    build = cycsub.add_parser("build", help="print one Cycl(d, N)")
    build.add_argument("--dim", type=int, required=True)
    build.add_argument("--volume", "-N", type=int, required=True)
    build.set_defaults(func=cmd_cyclotomic_build)

    orbits = cycsub.add_parser("orbits", help="principal primitive orbits mod N")
    orbits.add_argument("--dim", type=int, required=True)
    orbits.add_argument("--volume", "-N", type=int, required=True)
    orbits.set_defaults(func=cmd_cyclotomic_orbits)

    width = top.add_parser("width", help="lattice width of a cyclic simplex")
    _add_generator_args(width)
    width.add_argument("--width-cap", type=int, default=None)
    width.add_argument(
        "--symmetric",
        action="store_true",
        help="normalize f_0 = 0 (sound only under cyclic symmetry)",
    )
    width.set_defaults(func=cmd_width)

    empty = top.add_parser("empty", help="emptiness of a cyclic simplex")
    _add_generator_args(empty)
    empty.add_argument(
        "--points", action="store_true", help="list interior lattice points"
    )
    empty.set_defaults(func=cmd_empty)

    circ = top.add_parser("circulant", help="circulant simplices S(d, m)")
    circsub = circ.add_subparsers(dest="subcommand", required=True)

    info = circsub.add_parser("info", help="volume, width, emptiness of S(d, m)")
    info.add_argument("--dim", type=int, required=True)
    info.add_argument("--m", type=int, required=True)
    info.add_argument(
        "--verify",
        action="store_true",
        help="cross-check the width via embedded search (small d only)",
    )
    info.set_defaults(func=cmd_circulant_info)

    m0p = circsub.add_parser("m0", help="emptiness threshold m0(d)")
    m0p.add_argument("--dim", type=int, required=True)
    m0p.set_defaults(func=cmd_circulant_m0)

    tab = circsub.add_parser("table", help="S(d, floor(m0)) rows for even d")
    tab.add_argument("--max-dim", type=int, default=60)
    tab.set_defaults(func=cmd_circulant_table)

    verify = top.add_parser("verify", help="verification harnesses")
    versub = verify.add_subparsers(dest="subcommand", required=True)
    vt = versub.add_parser("tables", help="recompute the published tables")
    vt.add_argument(
        "--table",
        action="append",
        choices=("1", "2", "4", "circulant", "threshold", "composite"),
        help="restrict to one table (repeatable)",
    )
    vt.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    vt.add_argument("--long", action="store_true")
    vt.set_defaults(func=cmd_verify_tables)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptySimplexError as exc:
        return _fail(f"{type(exc).__name__}: {exc}")
    except (ValueError, KeyError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
