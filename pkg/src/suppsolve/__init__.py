"""Supported-model computation for ground normal logic programs.

The package turns a ground program into one whose stable models
correspond one-to-one to the supported models of the input, alongside
exhaustive semantic oracles, a Clark's-completion CNF baseline and a
benchmark harness.
"""

from .completion import CnfFormula, complete, emit_dimacs, enumerate_completion_models
from .core import (
    Interpretation,
    Program,
    Rule,
    SymbolTable,
    atoms_of,
    interpretation_from_names,
)
from .parser import ParseError, RESERVED_PREFIX, parse, print_program
from .semantics import (
    AtomCapError,
    DEFAULT_ATOM_CAP,
    ModelSet,
    enumerate_stable,
    enumerate_supported,
    is_model,
    is_stable,
    is_supported,
    is_supported_fixpoint,
    least_model,
    reduct,
)
from .solver_backend import SolveRequest, SolveResult, parse_external_output, solve
from .transform import TransformResult, project, size_report, transform

__version__ = "0.1.0"

__all__ = [
    "AtomCapError",
    "CnfFormula",
    "DEFAULT_ATOM_CAP",
    "Interpretation",
    "ModelSet",
    "ParseError",
    "Program",
    "RESERVED_PREFIX",
    "Rule",
    "SolveRequest",
    "SolveResult",
    "SymbolTable",
    "TransformResult",
    "atoms_of",
    "complete",
    "emit_dimacs",
    "enumerate_completion_models",
    "enumerate_stable",
    "enumerate_supported",
    "interpretation_from_names",
    "is_model",
    "is_stable",
    "is_supported",
    "is_supported_fixpoint",
    "least_model",
    "parse",
    "parse_external_output",
    "print_program",
    "project",
    "reduct",
    "size_report",
    "solve",
    "transform",
]
