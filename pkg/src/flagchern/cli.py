"""Command line interface: ``flagchern {chern,verify,weights,appendix,euler,residue}``.

Exit codes: 0 success (verdict as predicted), 1 verification mismatch,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import appendix_data
from .combinatorics import (
    DEFAULT_MAX_DECOMPOSITIONS,
    default_assignment,
    derive_dims,
    enumerate_decompositions,
    make_assignment,
    weight_multiset,
)
from .errors import FlagChernError, NonConstantResidue, NonIntegerChernNumber
from .residue import (
    Special,
    chern_trails,
    euler_characteristic,
    residue_sum,
    special_polynomial,
    verify_constant,
    verify_special,
    verify_vanishing,
)
from .sympoly import make_partition, parse_expr


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text):
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _exact(v) -> str:
    return str(Fraction(v))


def _envelope(args, dims, results):
    return {
        "dims": list(dims.parts),
        "d": dims.d,
        "N": dims.N,
        "count": dims.count,
        "command": args.command,
        "seed": args.seed,
        "results": results,
    }


def _emit(args, dims, results, table_lines, csv_header=None, csv_rows=None):
    if args.format == "json":
        print(json.dumps(_envelope(args, dims, results), indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        print("\n".join(table_lines))


def _check_count(dims, args):
    if dims.count > args.max_decompositions:
        raise UsageError(
            f"dims ({dims}) has {dims.count} decompositions, above --max-decompositions {args.max_decompositions}"
        )


def cmd_chern(args) -> int:
    dims = derive_dims(args.dims)
    _check_count(dims, args)
    lam = make_partition(args.partition)
    if lam.weight != dims.d:
        raise UsageError(f"partition ({lam}) has weight {lam.weight}; it must equal d = {dims.d} for dims ({dims})")
    (trail,) = chern_trails(dims, [lam], args.trials, args.seed, args.workers)
    results = [
        {
            "partition": list(lam.parts),
            "value": str(trail.value),
            "assignments": [[_exact(v) for v in x] for x in trail.assignments],
            "values": [_exact(v) for v in trail.values],
        }
    ]
    lines = [f"c_({lam})[F({dims})] = {trail.value}", "verification trail:"]
    for x, v in zip(trail.assignments, trail.values):
        lines.append(f"  x = ({', '.join(map(_exact, x))})  ->  {v}")
    _emit(args, dims, results, lines, ["partition", "value"], [[str(lam), trail.value]])
    return 0


def cmd_verify(args) -> int:
    dims = derive_dims(args.dims)
    _check_count(dims, args)
    if args.mode in ("vanishing", "constant"):
        if args.poly is None:
            raise UsageError(f"--poly is required for mode {args.mode}")
        f = parse_expr(args.poly)
        check = verify_vanishing if args.mode == "vanishing" else verify_constant
        report = check(dims, f, args.trials, args.seed, args.workers)
    else:
        if args.poly is not None and parse_expr(args.poly) != special_polynomial(dims, args.mode):
            raise UsageError(f"mode {args.mode} fixes the polynomial to {special_polynomial(dims, args.mode)}")
        report = verify_special(dims, args.mode, args.trials, args.seed, args.workers)
    lines = [
        f"dims ({dims}), d = {dims.d}, mode {args.mode}, f = {report.f}",
        *(f"  x = ({', '.join(map(_exact, x))})  ->  {v}" for x, v in zip(report.assignments, report.values)),
        f"verdict: {report.verdict} (expected {report.expected}) {'OK' if report.ok else 'MISMATCH'}",
    ]
    rows = [[" ".join(map(_exact, x)), _exact(v)] for x, v in zip(report.assignments, report.values)]
    _emit(args, dims, [report.to_dict()], lines, ["assignment", "value"], rows)
    return 0 if report.ok else 1


def _weight_rows(dims, x, oracle_k=None, seed=0):
    rng = np.random.default_rng(seed)
    rows = []
    for I in enumerate_decompositions(dims):
        w = weight_multiset(I, x, check=False)
        row = {"I": str(I), "W": list(w), "e": math.prod(w), "c1": sum(w)}
        if oracle_k is not None:
            from .flaggeom import numeric_weights

            numeric = numeric_weights(dims, I, oracle_k, rng=rng)
            row["oracle"] = sorted(numeric) == sorted(int(v) for v in w)
        rows.append(row)
    return rows


def cmd_weights(args) -> int:
    dims = derive_dims(args.dims)
    _check_count(dims, args)
    x = default_assignment(dims) if args.assign is None else make_assignment(args.assign)
    if len(x) != dims.N:
        raise UsageError(f"--assign needs N = {dims.N} values for dims ({dims}), got {len(x)}")
    k = None
    if args.numeric_oracle:
        if any(v.denominator != 1 for v in x):
            raise UsageError("--numeric-oracle needs an integer assignment")
        k = [int(v) for v in x]
    rows = _weight_rows(dims, x, k, args.seed)

    results = []
    lines = []
    csv_rows = []
    for row in rows:
        entry = {
            "I": row["I"],
            "W": [_exact(v) for v in sorted(row["W"])],
            "e": _exact(row["e"]),
            "c1": _exact(row["c1"]),
        }
        text = f"{row['I']:<24} W = {{{', '.join(map(_exact, row['W']))}}}  e = {_exact(row['e'])}  c1 = {_exact(row['c1'])}"
        if "oracle" in row:
            entry["oracle_agrees"] = row["oracle"]
            text += "  oracle " + ("agrees" if row["oracle"] else "DISAGREES")
        results.append(entry)
        lines.append(text)
        csv_rows.append(
            [row["I"].strip("()").replace("},{", "};{"), " ".join(map(_exact, row["W"])), _exact(row["e"]), _exact(row["c1"])]
        )
    _emit(args, dims, results, lines, ["I", "W", "e", "c1"], csv_rows)
    if k is not None and not all(r["oracle"] for r in rows):
        return 1
    return 0


def _appendix_dump(data) -> list[str]:
    lines = [f"dims {','.join(map(str, data['dims']))}"]
    for row in data["rows"]:
        lines.append(f"{row['I']} W={' '.join(map(str, row['W']))} e={row['e']} c1={row['c1']}")
    lines.append(f"c1^5 = {data['c1^5']}")
    lines.append(f"c1^6 = {data['c1^6']}")
    return lines


def compute_appendix() -> dict:
    """Recompute the F(1,1,2) reference table from scratch."""
    dims = derive_dims(appendix_data.DIMS)
    x = default_assignment(dims)
    rows = [
        {"I": r["I"], "W": [int(v) for v in r["W"]], "e": int(r["e"]), "c1": int(r["c1"])}
        for r in _weight_rows(dims, x)
    ]
    c5 = residue_sum(dims, "e1^5", x)
    c6 = residue_sum(dims, "e1^6", x)
    return {"dims": list(dims.parts), "rows": rows, "c1^5": int(c5) if c5.denominator == 1 else str(c5),
            "c1^6": int(c6) if c6.denominator == 1 else str(c6)}


def cmd_appendix(args) -> int:
    if args.golden:
        with open(args.golden) as fh:
            golden = json.load(fh)
    else:
        golden = appendix_data.GOLDEN
    got = compute_appendix()
    dims = derive_dims(got["dims"])
    want_rows = {r["I"]: r for r in golden["rows"]}
    matched = sum(1 for r in got["rows"] if want_rows.get(r["I"]) == r)
    ok = _appendix_dump(got) == _appendix_dump(golden)

    if args.format == "json":
        results = [
            {
                "rows_matched": matched,
                "rows_total": len(golden["rows"]),
                "c1^5": str(got["c1^5"]),
                "c1^6": str(got["c1^6"]),
                "match": ok,
                "rows": [{**r, "W": [str(v) for v in sorted(r["W"])], "e": str(r["e"]), "c1": str(r["c1"])} for r in got["rows"]],
            }
        ]
        print(json.dumps(_envelope(args, dims, results), indent=2))
    else:
        print(f"{matched}/{len(golden['rows'])} rows match, c1^5={got['c1^5']}, c1^6 sum={got['c1^6']}")
    if not ok:
        diff = difflib.unified_diff(_appendix_dump(golden), _appendix_dump(got), "golden", "computed", lineterm="")
        print("\n".join(diff), file=sys.stderr if args.format == "json" else sys.stdout)
        return 1
    return 0


def cmd_euler(args) -> int:
    dims = derive_dims(args.dims)
    chi = euler_characteristic(dims)
    _emit(args, dims, [{"euler": str(chi)}], [str(chi)], ["euler"], [[chi]])
    return 0


def cmd_residue(args) -> int:
    dims = derive_dims(args.dims)
    _check_count(dims, args)
    f = parse_expr(args.poly)
    x = default_assignment(dims) if args.assign is None else make_assignment(args.assign)
    if len(x) != dims.N:
        raise UsageError(f"--assign needs N = {dims.N} values for dims ({dims}), got {len(x)}")
    specials = {special_polynomial(dims, s) for s in Special}
    meaningless = f.degree is not None and f.degree > dims.d and f not in specials
    if meaningless and not args.allow_high_degree:
        raise UsageError(
            f"deg f = {f.degree} exceeds d = {dims.d}; pass --allow-high-degree to evaluate anyway"
        )
    value = residue_sum(dims, f, x, workers=args.workers)
    note = "assignment-dependent, no geometric meaning" if meaningless else None
    result = {"poly": str(f), "assignment": [_exact(v) for v in x], "value": _exact(value)}
    if note:
        result["note"] = note
    lines = [f"R_f = {value}  (f = {f}, x = ({', '.join(map(_exact, x))}))"] + ([note] if note else [])
    _emit(args, dims, [result], lines, ["poly", "value"], [[str(f), _exact(value)]])
    return 0


def _default_seed():
    raw = os.environ.get("FLAGCHERN_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"FLAGCHERN_SEED must be an integer, got {raw!r}")


def _seed(text):
    seed = int(text)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trials", type=_positive, default=5)
    common.add_argument("--seed", type=_seed, default=None, help="defaults to $FLAGCHERN_SEED, else 0")
    common.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--max-decompositions", type=_positive, default=DEFAULT_MAX_DECOMPOSITIONS)

    parser = argparse.ArgumentParser(prog="flagchern", description="Chern numbers of complex flag manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chern", parents=[common], help="Chern number for a partition of d")
    p.add_argument("--dims", type=_int_list, required=True)
    p.add_argument("--partition", type=_int_list, required=True)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("verify", parents=[common], help="check a vanishing or constancy identity")
    p.add_argument("--dims", type=_int_list, required=True)
    p.add_argument("--poly")
    p.add_argument("--mode", choices=["vanishing", "constant", "futaki", "top-c1"], required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weights", parents=[common], help="weight table over all decompositions")
    p.add_argument("--dims", type=_int_list, required=True)
    p.add_argument("--assign", type=_rational_list)
    p.add_argument("--numeric-oracle", action="store_true")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("appendix", parents=[common], help="recompute the F(1,1,2) reference table")
    p.add_argument("--golden", help="JSON file overriding the embedded reference values")
    p.set_defaults(func=cmd_appendix)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic")
    p.add_argument("--dims", type=_int_list, required=True)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("residue", parents=[common], help="evaluate one residue sum")
    p.add_argument("--dims", type=_int_list, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--assign", type=_rational_list)
    p.add_argument("--allow-high-degree", action="store_true")
    p.set_defaults(func=cmd_residue)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (NonConstantResidue, NonIntegerChernNumber) as exc:
        print(f"flagchern {args.command}: verification failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, FlagChernError) as exc:
        print(f"flagchern {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
