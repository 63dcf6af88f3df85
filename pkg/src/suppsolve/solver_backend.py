"""Uniform interface over stable-model engines.

The internal backend is the exhaustive enumerator from
:mod:`suppsolve.semantics`.  The external backend writes the program to a
temporary file, runs a solver command (Clingo-style output expected) and
parses the answer sets back.  The external solver is optional throughout:
nothing in the package requires one to be installed.
"""

import os
import shlex
import subprocess
import tempfile
import time
from dataclasses import dataclass

from .core import Interpretation, Program
from .parser import print_program
from .semantics import DEFAULT_ATOM_CAP, AtomCapError, ModelSet, enumerate_stable

SOLVER_ENV_VAR = "SUPPSOLVE_SOLVER"
DEFAULT_SOLVER_CMD = "clingo"

STATUS_COMPLETE = "complete"
STATUS_LIMIT = "limit-reached"
STATUS_TIMEOUT = "timeout"
STATUS_ERROR = "backend-error"


@dataclass(frozen=True)
class SolveRequest:
    """One solving job.

    ``model_limit`` 0 means all models.  ``external_command`` is a
    template; ``{file}`` and ``{models}`` placeholders are substituted,
    and a bare command is wrapped as ``<cmd> --models=<N> <file>``.  When
    unset, the ``SUPPSOLVE_SOLVER`` environment variable and finally
    ``clingo`` are used.
    """

    program: Program
    model_limit: int = 0
    backend: str = "internal"  # "internal" | "external"
    external_command: str | None = None
    timeout: float = 300.0
    atom_cap: int = DEFAULT_ATOM_CAP

    def __post_init__(self):
        if self.model_limit < 0:
            raise ValueError("model_limit must be >= 0")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.backend not in ("internal", "external"):
            raise ValueError(f"unknown backend {self.backend!r}")


@dataclass(frozen=True)
class SolveResult:
    """Stable models plus how the run ended.

    ``status == "complete"`` guarantees ``models`` is the full set.
    """

    models: ModelSet
    status: str
    wall_time: float
    backend_used: str
    message: str = ""


def external_command_line(request: SolveRequest, path: str) -> list[str]:
    template = request.external_command or os.environ.get(SOLVER_ENV_VAR) or DEFAULT_SOLVER_CMD
    if "{file}" not in template:
        template = template + " --models={models} {file}"
    rendered = template.format(file=shlex.quote(path), models=request.model_limit)
    return shlex.split(rendered)


def parse_external_output(text: str, program: Program) -> tuple[ModelSet, str]:
    """Parse Clingo-style solver stdout into interpretations.

    Expects ``Answer: <n>`` header lines each followed by a line of
    space-separated atom names, and a final ``SATISFIABLE`` /
    ``UNSATISFIABLE`` verdict.  Unknown atom names or a missing verdict
    yield a backend-error status.
    """
    lines = text.splitlines()
    models: list[Interpretation] = []
    verdict = None
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        if line.startswith("Answer:"):
            atom_line = lines[i + 1].strip() if i + 1 < len(lines) else ""
            atoms = set()
            for name in atom_line.split():
                if name not in program.symbols:
                    return ModelSet(()), STATUS_ERROR
                atoms.add(program.symbols.id_of(name))
            models.append(frozenset(atoms))
            i += 2
            continue
        if line in ("SATISFIABLE", "UNSATISFIABLE"):
            verdict = line
        i += 1
    if verdict is None:
        return ModelSet(()), STATUS_ERROR
    if verdict == "UNSATISFIABLE" and models:
        return ModelSet(()), STATUS_ERROR
    return ModelSet.canonical(models, program), STATUS_COMPLETE


def _solve_internal(request: SolveRequest, started: float) -> SolveResult:
    try:
        models = enumerate_stable(request.program, cap=request.atom_cap)
    except AtomCapError as exc:
        return SolveResult(ModelSet(()), STATUS_ERROR, time.monotonic() - started,
                           "internal", str(exc))
    status = STATUS_COMPLETE
    if request.model_limit and len(models) > request.model_limit:
        models = ModelSet(models.models[: request.model_limit])
        status = STATUS_LIMIT
    return SolveResult(models, status, time.monotonic() - started, "internal")


def _solve_external(request: SolveRequest, started: float) -> SolveResult:
    def result(models, status, message=""):
        return SolveResult(models, status, time.monotonic() - started, "external", message)

    with tempfile.NamedTemporaryFile(
        "w", suffix=".lp", prefix="suppsolve_", delete=False
    ) as handle:
        handle.write(print_program(request.program) + "\n")
        path = handle.name
    try:
        argv = external_command_line(request, path)
        try:
            proc = subprocess.run(
                argv, capture_output=True, text=True, timeout=request.timeout
            )
        except subprocess.TimeoutExpired as exc:
            partial = exc.stdout or ""
            if isinstance(partial, bytes):
                partial = partial.decode(errors="replace")
            models, _ = parse_external_output(partial + "\nSATISFIABLE", request.program)
            return result(models, STATUS_TIMEOUT, f"killed after {request.timeout}s")
        except OSError as exc:
            return result(ModelSet(()), STATUS_ERROR, f"failed to launch {argv[0]!r}: {exc}")

        models, status = parse_external_output(proc.stdout, request.program)
        if status == STATUS_ERROR:
            # Clingo-style solvers exit nonzero (10/20/30) on success, so the
            # verdict line, not the exit code, decides; without one the exit
            # code is the best diagnostic available.
            return result(
                ModelSet(()), STATUS_ERROR,
                f"unparseable solver output (exit code {proc.returncode})",
            )
        if request.model_limit and len(models) == request.model_limit:
            return result(models, STATUS_LIMIT)
        return result(models, STATUS_COMPLETE)
    finally:
        os.unlink(path)


def solve(request: SolveRequest) -> SolveResult:
    """Compute stable models of ``request.program`` with the chosen backend."""
    started = time.monotonic()
    if request.backend == "internal":
        return _solve_internal(request, started)
    return _solve_external(request, started)
