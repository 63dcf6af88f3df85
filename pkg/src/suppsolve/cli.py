"""Command-line interface.

Batch subcommands around the supported-model pipeline: transform a
program, solve it, enumerate supported or stable models, classify a
candidate interpretation, emit the completion as DIMACS, generate
benchmark instances and run timing sweeps.

Exit codes: 0 success, 1 empty result under ``--expect-some`` (or a
``check`` verdict of none), 2 input/parse errors, 3 backend errors.
"""

import argparse
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from .completion import complete, emit_dimacs
from .core import Program, interpretation_from_names
from .parser import ParseError, parse, print_program
from .semantics import (
    DEFAULT_ATOM_CAP,
    AtomCapError,
    ModelSet,
    enumerate_supported,
    is_model,
    is_stable,
    is_supported,
)
from .solver_backend import (
    STATUS_COMPLETE,
    STATUS_LIMIT,
    SolveRequest,
    SolveResult,
    solve,
)
from .transform import project, transform, write_aux_map

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_INPUT = 2
EXIT_BACKEND = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_program(args: argparse.Namespace) -> Program:
    text = _read_input(args.input)
    return parse(text, allow_reserved=getattr(args, "allow_reserved", False))


def _write_output(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _print_models(models: ModelSet, program: Program) -> None:
    for line in models.format_lines(program):
        print(line)


def _solve_stable(args: argparse.Namespace, program: Program) -> SolveResult:
    return solve(SolveRequest(
        program=program,
        model_limit=args.models,
        backend=args.backend,
        external_command=args.solver_cmd,
        timeout=args.timeout,
        atom_cap=args.atom_cap,
    ))


def _backend_failed(result: SolveResult) -> bool:
    return result.status not in (STATUS_COMPLETE, STATUS_LIMIT)


def cmd_transform(args: argparse.Namespace) -> int:
    program = _load_program(args)
    result = transform(program, simplify_facts=args.simplify_facts)
    text = print_program(result.transformed)
    _write_output(args.output, text + "\n" if text else "")
    if args.aux_map:
        _write_output(args.aux_map, write_aux_map(result) + "\n")
    return EXIT_OK


def cmd_supported(args: argparse.Namespace) -> int:
    program = _load_program(args)
    result = transform(program)
    solved = _solve_stable(args, result.transformed)
    if _backend_failed(solved):
        print(f"backend error: {solved.status}: {solved.message}", file=sys.stderr)
        return EXIT_BACKEND
    projected = ModelSet.canonical(
        (project(m, result) for m in solved.models), program)
    _print_models(projected, program)
    if args.show_aux:
        print("% unprojected stable models")
        _print_models(solved.models, result.transformed)
    if args.expect_some and not len(projected):
        return EXIT_EMPTY
    return EXIT_OK


def cmd_stable(args: argparse.Namespace) -> int:
    program = _load_program(args)
    solved = _solve_stable(args, program)
    if _backend_failed(solved):
        print(f"backend error: {solved.status}: {solved.message}", file=sys.stderr)
        return EXIT_BACKEND
    _print_models(solved.models, program)
    if args.expect_some and not len(solved.models):
        return EXIT_EMPTY
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    program = _load_program(args)
    solved = _solve_stable(args, program)
    if _backend_failed(solved):
        print(f"backend error: {solved.status}: {solved.message}", file=sys.stderr)
        return EXIT_BACKEND
    _print_models(solved.models, program)
    print(
        f"status: {solved.status}, models: {len(solved.models)}, "
        f"wall: {solved.wall_time:.3f}s, backend: {solved.backend_used}",
        file=sys.stderr,
    )
    if args.expect_some and not len(solved.models):
        return EXIT_EMPTY
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    program = _load_program(args)
    names = args.model.replace(",", " ").split()
    try:
        m = interpretation_from_names(program, names)
    except KeyError as exc:
        print(f"unknown atom {exc.args[0]!r}", file=sys.stderr)
        return EXIT_INPUT
    if is_stable(program, m):
        verdict = "stable"
    elif is_supported(program, m):
        verdict = "supported"
    elif is_model(program, m):
        verdict = "model"
    else:
        verdict = "none"
    print(verdict)
    return EXIT_OK if verdict != "none" else EXIT_EMPTY


def cmd_complete(args: argparse.Namespace) -> int:
    program = _load_program(args)
    formula = complete(program)
    _write_output(args.output, emit_dimacs(formula))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    config = bench_mod.BenchConfig(
        family=args.family,
        num_atoms=args.num_atoms,
        num_rules=args.num_rules,
        max_body=args.max_body,
        neg_prob=args.neg_prob,
        cycle_frac=args.cycle_frac,
        seed=args.seed,
    )
    text = print_program(bench_mod.generate(config))
    _write_output(args.output, text + "\n" if text else "")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def cmd_bench(args: argparse.Namespace) -> int:
    configs = [
        bench_mod.BenchConfig(
            family=family,
            num_atoms=num_atoms,
            num_rules=num_rules,
            max_body=args.max_body,
            neg_prob=args.neg_prob,
            cycle_frac=args.cycle_frac,
            seed=args.seed,
            repetitions=args.repetitions,
        )
        for family in args.family.split(",")
        for num_atoms in _int_list(args.num_atoms)
        for num_rules in _int_list(args.num_rules)
    ]
    records = bench_mod.run(
        configs,
        pipelines=tuple(args.pipelines.split(",")),
        jobs=args.jobs,
        atom_cap=args.atom_cap,
        solver_command=args.solver_cmd,
        sat_command=args.sat_cmd,
        timeout=args.timeout,
    )
    if args.output is None or args.output == "-":
        bench_mod.write_csv(records, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            bench_mod.write_csv(records, handle)
    return EXIT_OK


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "input", nargs="?", default="-",
        help="program file, or - for standard input (default)")


def _add_reserved(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--allow-reserved", action="store_true",
        help="accept _dm_-prefixed atoms (for re-reading transformed programs)")


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--backend", choices=("internal", "external"),
                        default="internal", help="stable-model engine")
    parser.add_argument("--models", type=int, default=0, metavar="N",
                        help="stop after N models (0 = all)")
    parser.add_argument("--solver-cmd", default=None, metavar="CMD",
                        help="external solver command template "
                             "(overrides SUPPSOLVE_SOLVER)")
    parser.add_argument("--timeout", type=float, default=300.0, metavar="SEC")
    parser.add_argument("--atom-cap", type=int, default=DEFAULT_ATOM_CAP,
                        help="exhaustive-search cap for the internal backend")
    parser.add_argument("--expect-some", action="store_true",
                        help="exit 1 if no models are found")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suppsolve",
        description="Supported-model computation for ground normal logic programs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("transform", help="rewrite a program so its stable "
                       "models match the input's supported models")
    _add_input(p)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.add_argument("--aux-map", default=None, metavar="PATH",
                   help="write the auxiliary-atom/rule-index map as TSV")
    p.add_argument("--simplify-facts", action="store_true",
                   help="emit facts verbatim instead of decoupling them")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("supported", help="enumerate supported models")
    _add_input(p)
    _add_reserved(p)
    _add_solver_options(p)
    p.add_argument("--show-aux", action="store_true",
                   help="also print the unprojected stable models")
    p.set_defaults(func=cmd_supported)

    p = sub.add_parser("stable", help="enumerate stable models")
    _add_input(p)
    _add_reserved(p)
    _add_solver_options(p)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("solve", help="enumerate stable models and report "
                       "solver status on standard error")
    _add_input(p)
    _add_reserved(p)
    _add_solver_options(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="classify an interpretation: "
                       "stable, supported, model or none")
    _add_input(p)
    _add_reserved(p)
    p.add_argument("-m", "--model", default="", metavar="ATOMS",
                   help="atom names, space or comma separated (default: empty set)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("complete", help="emit Clark's completion as DIMACS CNF")
    _add_input(p)
    _add_reserved(p)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("generate", help="generate a benchmark instance")
    p.add_argument("--family", choices=bench_mod.FAMILIES, default="cyclic")
    p.add_argument("--num-atoms", type=int, default=8)
    p.add_argument("--num-rules", type=int, default=8)
    p.add_argument("--max-body", type=int, default=3)
    p.add_argument("--neg-prob", type=float, default=0.3)
    p.add_argument("--cycle-frac", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="time the pipelines over generated instances")
    p.add_argument("--family", default="cyclic",
                   help="comma-separated families: acyclic,cyclic,mixed")
    p.add_argument("--num-atoms", default="8", help="comma-separated sizes")
    p.add_argument("--num-rules", default="8", help="comma-separated counts")
    p.add_argument("--max-body", type=int, default=3)
    p.add_argument("--neg-prob", type=float, default=0.3)
    p.add_argument("--cycle-frac", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--pipelines", default=",".join(bench_mod.PIPELINES),
                   help="comma-separated: transform-asp,completion-sat,oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--atom-cap", type=int, default=DEFAULT_ATOM_CAP)
    p.add_argument("--timeout", type=float, default=300.0)
    p.add_argument("--solver-cmd", default=None,
                   help="external ASP solver (overrides SUPPSOLVE_SOLVER)")
    p.add_argument("--sat-cmd", default=None,
                   help="external SAT solver (overrides SUPPSOLVE_SAT)")
    p.add_argument("-o", "--output", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AtomCapError as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
