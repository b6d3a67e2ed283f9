"""Command-line front door: sigma-mex tables, the verification suite, and
deterministic overpartition listings.

Exit codes: 0 success, 1 verification/mismatch failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import combinat, qfactory, verify
from .combinat import DEFAULT_ORACLE_LIMIT, OracleLimitError
from .qfactory import MexVariant

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

_VARIANTS = {
    "nonoverlined": MexVariant.NON_OVERLINED,
    "overlined": MexVariant.OVERLINED,
    "all": MexVariant.ALL,
}


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _emit_rows(rows, header, fmt: str, out_path: str | None) -> None:
    """Same numeric content in both formats: CSV uses the header order,
    JSON emits one object per row with the header fields as keys."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        _write(buf.getvalue(), out_path)
    else:
        objs = [dict(zip(header, row)) for row in rows]
        _write(json.dumps(objs, indent=2) + "\n", out_path)


def cmd_table(args) -> int:
    variant = _VARIANTS[args.variant]
    n_max = args.max_n
    order = args.order if args.order is not None else n_max
    if order < n_max:
        print("--order must be at least --max-n", file=sys.stderr)
        return EXIT_USAGE
    use_series = args.method in ("series", "both")
    use_oracle = args.method in ("oracle", "both")
    if use_oracle and n_max > args.oracle_limit:
        print(
            f"oracle method refuses n_max={n_max} above the oracle limit "
            f"{args.oracle_limit}; raise --oracle-limit to override",
            file=sys.stderr,
        )
        return EXIT_USAGE
    gf = qfactory.sigma_mex_gf(variant, order) if use_series else None
    rows = []
    mismatch = False
    for n in range(n_max + 1):
        if args.method == "both":
            s = gf[n]
            o = combinat.sigma_mex_oracle(n, variant, args.oracle_limit)
            match = s == o
            mismatch = mismatch or not match
            rows.append((n, str(s), str(o), "match" if match else "MISMATCH"))
        elif args.method == "series":
            rows.append((n, str(gf[n]), "series"))
        else:
            rows.append(
                (n, str(combinat.sigma_mex_oracle(n, variant, args.oracle_limit)),
                 "oracle")
            )
    header = (
        ("n", "series", "oracle", "match")
        if args.method == "both"
        else ("n", "value", "method")
    )
    _emit_rows(rows, header, args.format, args.out)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_verify(args) -> int:
    try:
        reports = verify.run_all(
            order=args.order,
            oracle_n_max=args.max_n,
            only=args.only,
        )
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_USAGE
    lines = [json.dumps(r.to_dict()) for r in reports]
    _write("\n".join(lines) + "\n", args.out)
    for r in reports:
        print(f"[{r.status}] {r.check_name} ({r.range_checked})", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def cmd_enum(args) -> int:
    n = args.max_n
    if n > args.oracle_limit:
        print(
            f"n={n} exceeds the oracle limit {args.oracle_limit}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if args.by_class:
        rows = [
            ("+".join(map(str, partition)) or "(empty)", size, mex)
            for partition, size, mex in combinat.class_decomposition(
                n, args.oracle_limit
            )
        ]
        _emit_rows(rows, ("underlying", "class_size", "mex_all"), args.format, args.out)
        return EXIT_OK
    listing = list(combinat.enumerate_overpartitions(n, args.oracle_limit))
    mexes = [
        (
            combinat.mex_statistic(pi, MexVariant.NON_OVERLINED),
            combinat.mex_statistic(pi, MexVariant.OVERLINED),
            combinat.mex_statistic(pi, MexVariant.ALL),
        )
        for pi in listing
    ]
    if args.format == "json":
        # JSON spells the overline out as a boolean per group; the ~ marker
        # is the CSV-only encoding.
        objs = [
            {
                "groups": [
                    {"part": p, "count": c, "overlined": o} for p, c, o in pi.groups
                ],
                "mex_nonoverlined": non,
                "mex_overlined": over,
                "mex_all": all_,
            }
            for pi, (non, over, all_) in zip(listing, mexes)
        ]
        _write(json.dumps(objs, indent=2) + "\n", args.out)
        return EXIT_OK
    rows = [
        (pi.display(), non, over, all_)
        for pi, (non, over, all_) in zip(listing, mexes)
    ]
    header = ("overpartition", "mex_nonoverlined", "mex_overlined", "mex_all")
    _emit_rows(rows, header, args.format, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overmex",
        description="sigma-mex statistics of overpartitions: tables, "
        "verification suite, and exhaustive listings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_variant=False):
        if need_variant:
            p.add_argument(
                "--variant", choices=sorted(_VARIANTS), default="overlined"
            )
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument(
            "--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT,
            help="largest n the enumeration oracle will accept",
        )

    p_table = sub.add_parser("table", help="sigma-mex values per n")
    p_table.add_argument("--max-n", type=int, required=True)
    p_table.add_argument(
        "--method", choices=("series", "oracle", "both"), default="series"
    )
    p_table.add_argument(
        "--order", type=int, default=None,
        help="series truncation order (default: --max-n)",
    )
    common(p_table, need_variant=True)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the theorem checks")
    p_verify.add_argument(
        "--order", type=int, default=2000, help="identity-check series order"
    )
    p_verify.add_argument(
        "--max-n", type=int, default=20,
        help="oracle cross-check range for the gf-vs-oracle checks",
    )
    p_verify.add_argument("--only", default=None, help="run a single named check")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enum", help="list all overpartitions of n")
    p_enum.add_argument("--max-n", type=int, required=True, help="the n to enumerate")
    p_enum.add_argument(
        "--by-class", action="store_true",
        help="group by overline erasure instead of listing members",
    )
    common(p_enum)
    p_enum.set_defaults(func=cmd_enum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", 0) is not None and getattr(args, "max_n", 0) < 0:
        parser.error("--max-n must be non-negative")
    try:
        return args.func(args)
    except OracleLimitError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
