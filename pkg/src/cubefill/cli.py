"""Command line for generating, filling, checking and tabulating cycles.

Reports are plain text by default; ``--json`` switches to a stable
machine-readable form with the fields command, inputs, results, status.
Exit codes: 0 ok, 2 invalid input, 3 bound violation (tripwire), 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb

from .chainfile import ChainFormatError, read_chain, write_chain
from .chains import Chain, random_cycle
from .constants import BOUND_REL_TOL, c_constant, leq_with_tolerance
from .filling import (
    DEFAULT_NODE_BUDGET,
    connected_components,
    exact_fill,
    linear_fill,
    recursive_fill,
    support_subcube,
)
from .minimizers import minimizer_cycle, sharpness_table

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BOUND_VIOLATION = 3
EXIT_IO = 4

CSV_HEADER = "n,norm,fill,ratio,asymptote,quotient"

_MAX_LISTED_FACES = 20


def _report(command: str, inputs: dict, results: dict, status: str = "ok") -> dict:
    return {"command": command, "inputs": inputs, "results": results, "status": status}


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    print(f"{report['command']}: {report['status']}")
    for section in ("inputs", "results"):
        for key, value in report[section].items():
            if isinstance(value, list):
                value = " ".join(str(v) for v in value)
            print(f"  {key}: {value}")


def _listed_boundary(boundary: Chain) -> dict:
    return {
        "boundary_norm": boundary.norm,
        "boundary_faces": [str(f) for f in boundary.sorted_faces()[:_MAX_LISTED_FACES]],
    }


def _invalid(command: str, inputs: dict, message: str, as_json: bool, extra: dict | None = None) -> int:
    results = {"error": message}
    if extra:
        results.update(extra)
    _emit(_report(command, inputs, results, status="invalid-input"), as_json)
    return EXIT_INVALID


def _cmd_gen_minimizer(args: argparse.Namespace) -> int:
    inputs = {"n": args.n, "k": args.k, "out": args.out}
    if not 1 <= args.k < args.n <= 20:
        return _invalid("gen-minimizer", inputs, "need 1 <= k < n <= 20", args.json)
    chain = minimizer_cycle(args.n, args.k)
    write_chain(chain, args.out)
    results = {
        "norm": chain.norm,
        "norm_formula": f"2*C({args.n},{args.k}) = {2 * comb(args.n, args.k)}",
        "fill_value": comb(args.n, args.k + 1),
        "fill_formula": f"C({args.n},{args.k + 1}) = {comb(args.n, args.k + 1)}",
    }
    _emit(_report("gen-minimizer", inputs, results), args.json)
    return EXIT_OK


def _certificate_fields(z: Chain, result) -> dict:
    if result.strategy == "linear":
        certificate = result.bound_certificate
        return {
            "certificate": str(certificate),
            "certificate_float": float(certificate),
            "certificate_formula": (
                f"(n-k)/(2(k+1))*norm = ({z.n}-{z.k})/(2*({z.k}+1))*{z.norm}"
            ),
        }
    if result.strategy == "recursive":
        return {
            "certificate": result.bound_certificate,
            "certificate_float": float(result.bound_certificate),
            "certificate_formula": (
                f"c_k*norm^((k+1)/k) with k={z.k}, c_k={c_constant(z.k)!r}, norm={z.norm}"
            ),
        }
    return {
        "certificate": result.bound_certificate,
        "certificate_float": float(result.bound_certificate),
        "certificate_formula": (
            "minimum filling weight (search completed)"
            if result.optimal
            else "best filling weight found within the node budget"
        ),
    }


def _bound_holds(z: Chain, result) -> bool:
    if result.strategy == "linear":
        return Fraction(result.filling.norm) <= result.bound_certificate
    if result.strategy == "recursive":
        return leq_with_tolerance(
            float(result.filling.norm), float(result.bound_certificate), BOUND_REL_TOL
        )
    return True


def _cmd_fill(args: argparse.Namespace) -> int:
    inputs = {"path": args.path, "strategy": args.strategy, "budget": args.budget}
    try:
        z = read_chain(args.path)
    except ChainFormatError as exc:
        return _invalid("fill", inputs, str(exc), args.json)
    boundary = z.boundary()
    if boundary.support:
        extra = {"n": z.n, "k": z.k, "input_norm": z.norm}
        extra.update(_listed_boundary(boundary))
        return _invalid("fill", inputs, "input chain is not a cycle", args.json, extra)
    try:
        if args.strategy == "linear":
            result = linear_fill(z)
        elif args.strategy == "recursive":
            result = recursive_fill(z)
        else:
            result = exact_fill(z, args.budget)
    except ValueError as exc:
        return _invalid("fill", inputs, str(exc), args.json)
    out_path = f"{args.path}.fill"
    write_chain(result.filling, out_path)
    valid = result.filling.boundary() == z
    status = "ok" if valid and _bound_holds(z, result) else "bound-violation"
    results = {
        "n": z.n,
        "k": z.k,
        "input_norm": z.norm,
        "filling_path": out_path,
        "filling_norm": result.filling.norm,
        "optimal": result.optimal,
        "nodes_explored": result.nodes_explored,
    }
    results.update(_certificate_fields(z, result))
    _emit(_report("fill", inputs, results, status=status), args.json)
    return EXIT_OK if status == "ok" else EXIT_BOUND_VIOLATION


def _cmd_verify(args: argparse.Namespace) -> int:
    inputs = {"path": args.path}
    try:
        z = read_chain(args.path)
    except ChainFormatError as exc:
        return _invalid("verify", inputs, str(exc), args.json)
    boundary = z.boundary()
    active, _fixed, _restricted = support_subcube(z)
    results = {
        "n": z.n,
        "k": z.k,
        "norm": z.norm,
        "cycle": not boundary.support,
        "components": len(connected_components(z)),
        "support_active_coordinates": len(active),
    }
    if boundary.support:
        results.update(_listed_boundary(boundary))
    _emit(_report("verify", inputs, results), args.json)
    return EXIT_OK


def _cmd_sharpness(args: argparse.Namespace) -> int:
    inputs = {"k": args.k, "n_max": args.n_max}
    if args.k < 1 or args.n_max <= args.k:
        return _invalid("sharpness", inputs, "need k >= 1 and n_max > k", args.json)
    rows = sharpness_table(args.k, range(args.k + 1, args.n_max + 1))
    if args.csv:
        print(CSV_HEADER)
        for row in rows:
            print(
                f"{row.n},{row.norm},{row.fill},{row.ratio!r},{row.asymptote!r},{row.quotient!r}"
            )
        return EXIT_OK
    if args.json:
        results = {"rows": [row._asdict() for row in rows]}
        _emit(_report("sharpness", inputs, results), True)
        return EXIT_OK
    print(f"{'n':>6} {'norm':>12} {'fill':>14} {'ratio':>12} {'asymptote':>12} {'quotient':>10}")
    for row in rows:
        print(
            f"{row.n:>6} {row.norm:>12} {row.fill:>14} "
            f"{row.ratio:>12.8f} {row.asymptote:>12.8f} {row.quotient:>10.6f}"
        )
    return EXIT_OK


def _cmd_random(args: argparse.Namespace) -> int:
    inputs = {
        "n": args.n,
        "k": args.k,
        "density": args.density,
        "seed": args.seed,
        "out": args.out,
    }
    try:
        z = random_cycle(args.n, args.k, args.density, args.seed)
    except ValueError as exc:
        return _invalid("random", inputs, str(exc), args.json)
    write_chain(z, args.out)
    results = {"norm": z.norm, "cycle": z.is_cycle()}
    _emit(_report("random", inputs, results), args.json)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubefill",
        description="Generate, fill, check and tabulate Z2 cycles in the n-cube.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-minimizer", help="write an alternating-block cycle to a chain file")
    gen.add_argument("n", type=int)
    gen.add_argument("k", type=int)
    gen.add_argument("--out", required=True, help="output chain file")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=_cmd_gen_minimizer)

    fill = sub.add_parser("fill", help="fill the cycle in a chain file")
    fill.add_argument("path", help="input chain file; the filling goes to <path>.fill")
    fill.add_argument(
        "--strategy", choices=("linear", "recursive", "exact"), default="linear"
    )
    fill.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                      help="node budget for the exact search")
    fill.add_argument("--json", action="store_true")
    fill.set_defaults(func=_cmd_fill)

    verify = sub.add_parser("verify", help="report cycle status and shape of a chain file")
    verify.add_argument("path")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    sharp = sub.add_parser("sharpness", help="tabulate fill/norm ratios for the extremal family")
    sharp.add_argument("k", type=int)
    sharp.add_argument("--n-max", type=int, default=20)
    sharp.add_argument("--csv", action="store_true")
    sharp.add_argument("--json", action="store_true")
    sharp.set_defaults(func=_cmd_sharpness)

    rand = sub.add_parser("random", help="write a seeded random cycle to a chain file")
    rand.add_argument("n", type=int)
    rand.add_argument("k", type=int)
    rand.add_argument("--density", type=float, default=0.1)
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--out", required=True)
    rand.add_argument("--json", action="store_true")
    rand.set_defaults(func=_cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
