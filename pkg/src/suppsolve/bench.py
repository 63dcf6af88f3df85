"""Benchmark instance generator and timing harness.

Three instance families: ``acyclic`` programs are stratified (each body
atom strictly precedes its head, so there are no cycles at all and
supported and stable models coincide), ``cyclic`` programs draw rule
bodies freely and add self-loop rules ``a :- a.`` injecting positive
cycles, and ``mixed`` programs combine the stratified rules with the
injected self-loops.

Timed pipelines: the body-decoupling transformation solved by a
stable-model backend, Clark's completion enumerated by an external SAT
solver via blocking clauses, and the exhaustive supported-model oracle.
Results go to CSV with a fixed header.
"""

import math
import os
import platform
import random
import resource
import shlex
import subprocess
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Sequence

from .completion import CnfFormula, complete, emit_dimacs
from .core import Program, Rule, SymbolTable
from .semantics import DEFAULT_ATOM_CAP, AtomCapError, enumerate_supported
from .solver_backend import (
    SOLVER_ENV_VAR,
    STATUS_COMPLETE,
    STATUS_ERROR,
    STATUS_LIMIT,
    STATUS_TIMEOUT,
    SolveRequest,
    solve,
)
from .transform import project, transform

SAT_ENV_VAR = "SUPPSOLVE_SAT"
STATUS_SKIPPED = "skipped"
STATUS_CAP = "cap-exceeded"

FAMILIES = ("acyclic", "cyclic", "mixed")
PIPELINES = ("transform-asp", "completion-sat", "oracle")

CSV_HEADER = (
    "family,num_atoms,num_rules,max_body,neg_prob,cycle_frac,seed,rep,"
    "pipeline,wall_time_s,model_count,status,memory_mb"
)


@dataclass(frozen=True)
class BenchConfig:
    family: str
    num_atoms: int
    num_rules: int
    max_body: int
    neg_prob: float = 0.0
    cycle_frac: float = 0.0
    seed: int = 0
    repetitions: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.num_atoms < 0 or self.num_rules < 0 or self.max_body < 0:
            raise ValueError("num_atoms, num_rules and max_body must be >= 0")
        if not (0.0 <= self.neg_prob <= 1.0 and 0.0 <= self.cycle_frac <= 1.0):
            raise ValueError("neg_prob and cycle_frac must lie in [0, 1]")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")


@dataclass(frozen=True)
class BenchRecord:
    config: BenchConfig
    rep: int
    pipeline: str
    wall_time: float
    model_count: Optional[int]
    status: str
    memory_mb: Optional[float] = None

    def csv_row(self) -> str:
        c = self.config
        count = "" if self.model_count is None else str(self.model_count)
        mem = "" if self.memory_mb is None else f"{self.memory_mb:.1f}"
        return (
            f"{c.family},{c.num_atoms},{c.num_rules},{c.max_body},{c.neg_prob},"
            f"{c.cycle_frac},{c.seed},{self.rep},{self.pipeline},"
            f"{self.wall_time:.6f},{count},{self.status},{mem}"
        )


def generate(config: BenchConfig) -> Program:
    """Deterministically generate one instance from ``config``.

    Atoms are named ``a1..aN``.  Random rules come first, then (for the
    cyclic and mixed families) the self-loop rules for the first
    ``ceil(cycle_frac * num_atoms)`` atoms, in atom order.
    """
    if config.max_body > config.num_atoms:
        raise ValueError("infeasible config: max_body exceeds num_atoms")
    if config.num_rules > 0 and config.num_atoms == 0:
        raise ValueError("infeasible config: rules require at least one atom")

    rng = random.Random(config.seed)
    symbols = SymbolTable(f"a{i + 1}" for i in range(config.num_atoms))
    stratified = config.family in ("acyclic", "mixed")
    rules: list[Rule] = []

    for _ in range(config.num_rules):
        head = rng.randrange(config.num_atoms)
        if stratified:
            population = range(head)
            size = rng.randint(0, min(config.max_body, head))
        else:
            population = range(config.num_atoms)
            size = rng.randint(0, config.max_body)
        body = rng.sample(population, size)
        pos, neg = set(), set()
        for atom in body:
            (neg if rng.random() < config.neg_prob else pos).add(atom)
        rules.append(Rule(head, frozenset(pos), frozenset(neg)))

    if config.family in ("cyclic", "mixed"):
        for atom in range(math.ceil(config.cycle_frac * config.num_atoms)):
            rules.append(Rule(atom, frozenset((atom,)), frozenset()))

    return Program(symbols, tuple(rules))


def _children_maxrss_mb() -> Optional[float]:
    # High-water mark across all children so far; coarse but obtainable
    # everywhere.  Linux reports KiB.
    rss = resource.getrusage(resource.RUSAGE_CHILDREN).ru_maxrss
    return rss / 1024.0 if rss > 0 else None


def _sat_command_line(command: str, path: str) -> list[str]:
    if "{file}" not in command:
        command = command + " {file}"
    return shlex.split(command.format(file=shlex.quote(path)))


def _parse_sat_output(text: str, num_vars: int) -> tuple[Optional[bool], set[int]]:
    """Extract the verdict and the positive assignment from solver stdout.

    Understands the competition conventions: an ``s`` verdict line (or a
    bare SATISFIABLE/UNSATISFIABLE line) and ``v`` literal lines.
    """
    satisfiable = None
    true_vars: set[int] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if line in ("s SATISFIABLE", "SATISFIABLE"):
            satisfiable = True
        elif line in ("s UNSATISFIABLE", "UNSATISFIABLE"):
            satisfiable = False
        elif line.startswith("v ") or line == "v":
            for tok in line[1:].split():
                lit = int(tok)
                if lit > 0 and lit <= num_vars:
                    true_vars.add(lit)
    return satisfiable, true_vars


def count_sat_models(
    formula: CnfFormula,
    command: str,
    project_vars: Sequence[int],
    timeout: float = 300.0,
) -> tuple[int, str]:
    """Count satisfying assignments projected to ``project_vars`` by
    repeated solver calls with blocking clauses over those variables."""
    clauses = [list(c) for c in formula.clauses]
    count = 0
    while True:
        with tempfile.NamedTemporaryFile(
            "w", suffix=".cnf", prefix="suppsolve_", delete=False
        ) as handle:
            handle.write(emit_dimacs(CnfFormula(formula.num_vars, clauses)))
            path = handle.name
        try:
            try:
                proc = subprocess.run(
                    _sat_command_line(command, path),
                    capture_output=True, text=True, timeout=timeout,
                )
            except subprocess.TimeoutExpired:
                return count, STATUS_TIMEOUT
            except OSError:
                return count, STATUS_ERROR
            satisfiable, true_vars = _parse_sat_output(proc.stdout, formula.num_vars)
            if satisfiable is None:
                return count, STATUS_ERROR
            if not satisfiable:
                return count, STATUS_COMPLETE
            count += 1
            clauses.append(
                [-v if v in true_vars else v for v in project_vars]
            )
        finally:
            os.unlink(path)


def _run_transform_asp(program: Program, backend: str, solver_command: Optional[str],
                       atom_cap: int, timeout: float) -> tuple[Optional[int], str]:
    result = transform(program)
    solved = solve(SolveRequest(
        program=result.transformed,
        backend=backend,
        external_command=solver_command,
        timeout=timeout,
        atom_cap=atom_cap,
    ))
    if solved.status not in (STATUS_COMPLETE, STATUS_LIMIT):
        return None, solved.status
    projected = {project(m, result) for m in solved.models}
    return len(projected), solved.status


def _run_completion_sat(program: Program, sat_command: Optional[str],
                        timeout: float) -> tuple[Optional[int], str, Optional[float]]:
    if not sat_command:
        return None, STATUS_SKIPPED, None
    formula = complete(program)
    atom_vars = list(range(1, len(program.symbols) + 1))
    count, status = count_sat_models(formula, sat_command, atom_vars, timeout=timeout)
    return (count if status == STATUS_COMPLETE else None), status, _children_maxrss_mb()


def _run_oracle(program: Program, atom_cap: int) -> tuple[Optional[int], str]:
    try:
        return len(enumerate_supported(program, cap=atom_cap)), STATUS_COMPLETE
    except AtomCapError:
        return None, STATUS_CAP


def run(
    configs: Sequence[BenchConfig],
    pipelines: Sequence[str] = PIPELINES,
    jobs: int = 1,
    atom_cap: int = DEFAULT_ATOM_CAP,
    solver_command: Optional[str] = None,
    sat_command: Optional[str] = None,
    timeout: float = 300.0,
) -> list[BenchRecord]:
    """Run every (config, pipeline, repetition) cell and collect records.

    Individual failures are recorded per row and never abort the sweep.
    Output order is deterministic: configs in input order, then pipeline
    selection order, then repetition.
    """
    for p in pipelines:
        if p not in PIPELINES:
            raise ValueError(f"unknown pipeline {p!r}")
    solver_command = solver_command or os.environ.get(SOLVER_ENV_VAR)
    sat_command = sat_command or os.environ.get(SAT_ENV_VAR)
    asp_backend = "external" if solver_command else "internal"

    tasks = [
        (ci, pi, rep)
        for ci, config in enumerate(configs)
        for pi in range(len(pipelines))
        for rep in range(1, config.repetitions + 1)
    ]

    def run_cell(key: tuple[int, int, int]) -> BenchRecord:
        ci, pi, rep = key
        config, pipeline = configs[ci], pipelines[pi]
        started = time.monotonic()
        memory = None
        try:
            program = generate(config)
            if pipeline == "transform-asp":
                count, status = _run_transform_asp(
                    program, asp_backend, solver_command, atom_cap, timeout)
                if asp_backend == "external":
                    memory = _children_maxrss_mb()
            elif pipeline == "completion-sat":
                count, status, memory = _run_completion_sat(program, sat_command, timeout)
            else:
                count, status = _run_oracle(program, atom_cap)
        except Exception as exc:  # noqa: BLE001 - row isolation
            count, status = None, f"{STATUS_ERROR}: {exc}"
        return BenchRecord(config, rep, pipeline, time.monotonic() - started,
                           count, status, memory)

    # map() yields results in task order, so output order is already
    # (config, pipeline, rep) regardless of completion order.
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_cell, tasks))
    return [run_cell(key) for key in tasks]


def environment_comment_lines() -> list[str]:
    """Deterministic description of the host, for the CSV preamble."""
    return [
        f"# suppsolve bench, python {platform.python_version()}",
        f"# platform {platform.platform()}",
    ]


def write_csv(records: Iterable[BenchRecord], stream: IO[str]) -> None:
    for line in environment_comment_lines():
        stream.write(line + "\n")
    stream.write(CSV_HEADER + "\n")
    for record in records:
        stream.write(record.csv_row() + "\n")
