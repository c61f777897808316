"""Command-line front end.

Subcommands::

    formulas  --name turan3|ar3|ar-large|lb-perfect|s0|alpha  [params]
    construct --kind D|Hcover|DScript|H1|H2|turan-plus-one    [params]
    verify    --certificate no-rainbow-pm|nu-equals-s|stable|saturated --input F
    oracle    --name turan|hilton-milner                      [params]
    table     --family ar3|turan3 --n-range a..b

Exit codes: 0 success (and verdict true for ``verify``), 1 verdict false,
2 usage or parameter error, 3 instance too large for a brute-force
oracle.  All output is JSON or CSV on stdout; ``construct`` writes the
plain-text hypergraph/coloring formats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Optional

from . import fileio
from .certificates import (
    certify_matching_number,
    certify_saturated,
    certify_stable,
)
from .constructions import clique_family, cover_family, spiked_clique
from .formulas import (
    anti_ramsey_matching_3,
    anti_ramsey_matching_large_n,
    crossover_density,
    crossover_index,
    perfect_matching_lower_bound,
    turan_matching_3,
    turan_matching_conjectured,
)
from .oracle import (
    InstanceTooLargeError,
    brute_cross_intersecting_max,
    brute_turan_stable,
)
from .rainbow import (
    certify_no_rainbow_perfect_matching,
    even_lower_bound_coloring,
    odd_lower_bound_coloring,
    turan_plus_one_coloring,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiramsey",
        description="Exact anti-Ramsey / Turan toolkit for hypergraph matchings",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for any randomized run (all current engines are "
        "deterministic; accepted for reproducibility plumbing)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker count for the perfect-matching certifier (default 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("formulas", help="evaluate a closed form")
    f.add_argument(
        "--name",
        required=True,
        choices=["turan3", "ar3", "ar-large", "lb-perfect", "s0", "alpha"],
    )
    f.add_argument("--n", type=int)
    f.add_argument("--k", type=int)
    f.add_argument("--s", type=int)
    f.add_argument("--tol", default="1/1000000000", help="bracket width for alpha")

    c = sub.add_parser("construct", help="emit a construction or coloring")
    c.add_argument(
        "--kind",
        required=True,
        choices=["D", "Hcover", "DScript", "H1", "H2", "turan-plus-one"],
    )
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--u", help="comma-separated clique vertex set (kind=D)")
    c.add_argument("--w", help="comma-separated cover vertex set (kind=Hcover)")
    c.add_argument("--output", help="output path (default: stdout)")

    v = sub.add_parser("verify", help="run a certificate check")
    v.add_argument(
        "--certificate",
        required=True,
        choices=["no-rainbow-pm", "nu-equals-s", "stable", "saturated"],
    )
    v.add_argument("--input", required=True)
    v.add_argument("--s", type=int, help="target for nu-equals-s / saturated")

    o = sub.add_parser("oracle", help="brute-force value vs. formula")
    o.add_argument("--name", required=True, choices=["turan", "hilton-milner"])
    o.add_argument("--n", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--s", type=int)
    o.add_argument("--m", type=int)
    o.add_argument("--l", type=int)

    t = sub.add_parser("table", help="CSV sweep of a formula family")
    t.add_argument("--family", required=True, choices=["ar3", "turan3"])
    t.add_argument("--n-range", required=True, help="inclusive range a..b")
    return parser


def _need(args, names: list[str]) -> None:
    missing = [x for x in names if getattr(args, x) is None]
    if missing:
        raise ValueError(f"missing required parameter(s): {', '.join('--' + x for x in missing)}")


def _formula_payload(name: str, params: dict, result) -> dict:
    return {
        "name": name,
        "params": params,
        "value": result.value,
        "valid": result.valid,
        "provenance": result.provenance,
    }


def _cmd_formulas(args) -> int:
    name = args.name
    if name == "turan3":
        _need(args, ["n", "s"])
        payload = _formula_payload(
            name, {"n": args.n, "s": args.s}, turan_matching_3(args.n, args.s)
        )
    elif name == "ar3":
        _need(args, ["n", "s"])
        payload = _formula_payload(
            name, {"n": args.n, "s": args.s}, anti_ramsey_matching_3(args.n, args.s)
        )
    elif name == "ar-large":
        _need(args, ["n", "k", "s"])
        payload = _formula_payload(
            name,
            {"n": args.n, "k": args.k, "s": args.s},
            anti_ramsey_matching_large_n(args.n, args.k, args.s),
        )
    elif name == "lb-perfect":
        _need(args, ["n", "k"])
        payload = _formula_payload(
            name,
            {"n": args.n, "k": args.k},
            perfect_matching_lower_bound(args.n, args.k),
        )
    elif name == "s0":
        _need(args, ["n", "k"])
        payload = {
            "name": name,
            "params": {"n": args.n, "k": args.k},
            "value": crossover_index(args.n, args.k),
            "valid": "proved",
            "provenance": "first s where the clique family overtakes the cover family",
        }
    else:  # alpha
        _need(args, ["k"])
        lo, hi = crossover_density(args.k, Fraction(args.tol))
        payload = {
            "name": name,
            "params": {"k": args.k, "tol": str(Fraction(args.tol))},
            "value": [str(lo), str(hi)],
            "value_float": [float(lo), float(hi)],
            "valid": "proved",
            "provenance": "exact rational bisection of the crossover density equation",
        }
    print(json.dumps(payload))
    return EXIT_OK


def _parse_vertex_list(raw: Optional[str]) -> Optional[tuple[int, ...]]:
    if raw is None:
        return None
    try:
        return tuple(int(p) for p in raw.split(",") if p.strip())
    except ValueError:
        raise ValueError(f"vertex list must be comma-separated integers, got {raw!r}")


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "D":
        _need(args, ["k", "s"])
        text = fileio.format_hypergraph(
            clique_family(args.n, args.k, args.s, _parse_vertex_list(args.u))
        )
    elif kind == "Hcover":
        _need(args, ["k", "s"])
        text = fileio.format_hypergraph(
            cover_family(args.n, args.k, args.s, _parse_vertex_list(args.w))
        )
    elif kind == "DScript":
        _need(args, ["s"])
        text = fileio.format_hypergraph(spiked_clique(args.n, args.s))
    elif kind == "H1":
        _need(args, ["k"])
        text = fileio.format_coloring(odd_lower_bound_coloring(args.n, args.k))
    elif kind == "H2":
        _need(args, ["k"])
        text = fileio.format_coloring(even_lower_bound_coloring(args.n, args.k))
    else:  # turan-plus-one
        _need(args, ["k", "s"])
        text = fileio.format_coloring(
            turan_plus_one_coloring(args.n, args.k, args.s)
        )
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    kind = args.certificate
    if kind == "no-rainbow-pm":
        coloring = fileio.load_coloring(args.input)
        cert = certify_no_rainbow_perfect_matching(coloring, workers=args.threads)
    else:
        H = fileio.load_hypergraph(args.input)
        if kind == "stable":
            cert = certify_stable(H)
        else:
            if args.s is None:
                raise ValueError(f"--s is required for --certificate {kind}")
            if kind == "nu-equals-s":
                cert = certify_matching_number(H, args.s)
            else:
                cert = certify_saturated(H, args.s)
    print(cert.to_json())
    return EXIT_OK if cert.verdict else EXIT_FALSE


def _cmd_oracle(args) -> int:
    if args.name == "turan":
        _need(args, ["n", "k", "s"])
        value = brute_turan_stable(args.n, args.k, args.s)
        formula = turan_matching_conjectured(args.n, args.k, args.s).value
        # below k(s+1) vertices no (s+1)-matching exists and the true
        # maximum is the complete graph, which the formula overshoots
        if args.n < args.k * (args.s + 1):
            from math import comb

            formula = comb(args.n, args.k)
    else:
        _need(args, ["m", "l"])
        value = brute_cross_intersecting_max(args.m, args.l)
        from math import comb

        formula = comb(args.m, args.l) - comb(args.m - args.l, args.l) + 1
    payload = {"oracle": value, "formula": formula, "agree": value == formula}
    print(json.dumps(payload))
    return EXIT_OK


def _parse_range(raw: str) -> tuple[int, int]:
    parts = raw.split("..")
    if len(parts) != 2:
        raise ValueError(f"range must look like a..b, got {raw!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"range endpoints must be integers, got {raw!r}")
    if a > b:
        raise ValueError(f"empty range {raw!r}")
    return a, b


def _cmd_table(args) -> int:
    a, b = _parse_range(args.n_range)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["family", "n", "s", "value", "valid"])
    for n in range(a, b + 1):
        for s in range(2, n // 3 + 1):
            if args.family == "turan3":
                res = turan_matching_3(n, s)
            else:
                res = anti_ramsey_matching_3(n, s)
            writer.writerow([args.family, n, s, res.value, res.valid])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


_DISPATCH = {
    "formulas": _cmd_formulas,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "table": _cmd_table,
}


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.seed is not None:
        random.seed(args.seed)
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _DISPATCH[args.command](args)
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
