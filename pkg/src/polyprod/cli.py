"""Command-line front end.

    polyprod smash-series PROBLEM.json        reduced series of the smash product
    polyprod pp-series PROBLEM.json           unreduced series of the full product
    polyprod summands PROBLEM.json            wedge-summand table
    polyprod oracle-smash PROBLEM.json        chain-level smash series (cells only)
    polyprod oracle-pp PROBLEM.json           chain-level unreduced series (cells only)
    polyprod check PROBLEM.json               engine vs oracle, both series
    polyprod order PROBLEM.json               length-lex face order of the complex

Common flags: --field Q|Fp:<p> (must agree with the file's "field" key if
both are given), --out text|json, --max-m N (subset-enumeration guard,
default 20).  Exit codes: 0 on success (and agreement, for check), 1 on a
check mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cartan, chains
from .linalg import Field
from .problems import (
    Problem,
    ProblemError,
    load_problem,
    resolve_cell_pairs,
    resolve_field,
    resolve_models,
)
from .series import GradedSeries
from .simplicial import DEFAULT_MAX_VERTICES

COMMANDS = (
    "smash-series",
    "pp-series",
    "summands",
    "oracle-smash",
    "oracle-pp",
    "check",
    "order",
)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyprod",
        description="Poincare series of polyhedral products over a field.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("problem", help="problem file (JSON, or TOML with .toml suffix)")
        p.add_argument("--field", default=None, help="coefficient field: Q or Fp:<prime>")
        p.add_argument("--out", choices=("text", "json"), default="text")
        p.add_argument(
            "--max-m",
            type=int,
            default=DEFAULT_MAX_VERTICES,
            help=f"vertex-count guard for subset enumeration (default {DEFAULT_MAX_VERTICES})",
        )
    return parser


def _face_text(face: tuple[int, ...]) -> str:
    return "∅" if not face else "".join(f"v{v}" for v in face)


def _emit_series(series: GradedSeries, out: str) -> None:
    if out == "json":
        print(json.dumps(series.to_json()))
    else:
        print(series)


def _run(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem, max_vertices=args.max_m)
    flag_field = Field.parse(args.field) if args.field is not None else None
    K = problem.complex

    if args.command == "order":
        faces = K.length_lex_order()
        if args.out == "json":
            print(json.dumps([list(f) for f in faces]))
        else:
            print(" < ".join(_face_text(f) for f in faces))
        return 0

    field = resolve_field(problem, flag_field)

    if args.command == "smash-series":
        models = resolve_models(problem, field)
        _emit_series(cartan.smash_series(K, models, field, args.max_m), args.out)
        return 0

    if args.command == "pp-series":
        models = resolve_models(problem, field)
        _emit_series(cartan.product_series(K, models, field, args.max_m), args.out)
        return 0

    if args.command == "summands":
        models = resolve_models(problem, field)
        summands = cartan.wedge_summands(K, models, field, args.max_m)
        if args.out == "json":
            print(json.dumps([s.to_json() for s in summands]))
        else:
            for s in summands:
                print(
                    f"I=[{','.join(map(str, s.subset))}] "
                    f"sigma=[{','.join(map(str, s.face))}] "
                    f"series={s.series}"
                )
        return 0

    if args.command == "oracle-smash":
        pairs = resolve_cell_pairs(problem)
        complex_ = chains.smash_chain_complex(K, pairs, field, args.max_m)
        _emit_series(chains.homology_series(complex_), args.out)
        return 0

    if args.command == "oracle-pp":
        pairs = resolve_cell_pairs(problem)
        complex_ = chains.product_chain_complex(K, pairs, field, args.max_m)
        _emit_series(chains.homology_series(complex_), args.out)
        return 0

    if args.command == "check":
        return _check(problem, field, args)

    raise AssertionError(f"unhandled command {args.command}")


def _check(problem: Problem, field: Field, args: argparse.Namespace) -> int:
    K = problem.complex
    pairs = resolve_cell_pairs(problem)
    models = resolve_models(problem, field)
    engine_smash = cartan.smash_series(K, models, field, args.max_m)
    oracle_smash = chains.homology_series(
        chains.smash_chain_complex(K, pairs, field, args.max_m)
    )
    engine_pp = cartan.product_series(K, models, field, args.max_m)
    oracle_pp = chains.homology_series(
        chains.product_chain_complex(K, pairs, field, args.max_m)
    )
    results = {
        "smash": (engine_smash, oracle_smash),
        "pp": (engine_pp, oracle_pp),
    }
    equal = all(eng == orc for eng, orc in results.values())
    if args.out == "json":
        print(
            json.dumps(
                {
                    "equal": equal,
                    "smash": {
                        "engine": engine_smash.to_json(),
                        "oracle": oracle_smash.to_json(),
                    },
                    "pp": {
                        "engine": engine_pp.to_json(),
                        "oracle": oracle_pp.to_json(),
                    },
                }
            )
        )
        return 0 if equal else 1
    if equal:
        print(f"EQUAL: {engine_pp}")
        return 0
    for name, (eng, orc) in results.items():
        if eng != orc:
            degrees = sorted(
                d
                for d in set(eng.degrees()) | set(orc.degrees())
                if eng.coefficient(d) != orc.coefficient(d)
            )
            print(
                f"MISMATCH {name}: degrees {degrees}: engine={eng}, oracle={orc}"
            )
    return 1


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _run(args)
    except ProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
