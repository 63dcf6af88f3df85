"""Body-decoupling transformation.

Each headed rule ``h :- l1, ..., lm, not lm+1, ..., not ln`` is replaced
by ``h :- not _dm_ri`` plus one rule per body literal deriving the
auxiliary atom ``_dm_ri`` exactly when the body is false::

    _dm_ri :- not lj    for each positive body literal lj
    _dm_ri :- lj        for each negative body literal lj

Stable models of the result are in one-to-one correspondence with the
supported models of the input; dropping the auxiliary atoms recovers
them.  Constraints are copied through unchanged: they only filter models
and impose no support obligation.
"""

from dataclasses import dataclass

from .core import Interpretation, Program, Rule, SymbolTable, atoms_of
from .parser import RESERVED_PREFIX


@dataclass(frozen=True)
class TransformResult:
    """Transformed program plus the bookkeeping needed for projection.

    ``aux_of_rule`` maps the 0-based index of each headed input rule to
    the id of its ``_dm_`` atom (constraints consume an index but get no
    auxiliary atom).  Input atom ids are carried over unchanged, so
    ``original_atoms`` doubles as the projection mask.
    """

    transformed: Program
    aux_of_rule: dict[int, int]
    original_atoms: frozenset[int]


def aux_name(rule_index: int) -> str:
    """Auxiliary atom name for the rule at 0-based ``rule_index``."""
    return f"{RESERVED_PREFIX}r{rule_index + 1}"


def transform(program: Program, simplify_facts: bool = False) -> TransformResult:
    """Apply the body-decoupling transformation.

    Rules are processed in input order; for each headed rule the head
    rule is emitted first, then the auxiliary rules for positive body
    literals, then those for negative ones, each group in symbol-table
    order.  A fact ``a.`` becomes ``a :- not _dm_ri.`` with no rules
    deriving ``_dm_ri`` (an empty body is never false); with
    ``simplify_facts`` it is emitted verbatim instead.

    For a constraint-free input with n rules and m distinct body literals
    counted per rule, the output has exactly n + m rules.
    """
    for name in program.symbols.names:
        if name.startswith(RESERVED_PREFIX):
            raise ValueError(
                f"input atom {name!r} uses the reserved prefix {RESERVED_PREFIX!r}"
            )

    symbols = program.symbols.copy()
    out: list[Rule] = []
    aux_of_rule: dict[int, int] = {}

    for idx, r in enumerate(program.rules):
        if r.head is None:
            out.append(r)
            continue
        if simplify_facts and r.is_fact:
            out.append(r)
            continue
        aux = symbols.intern(aux_name(idx))
        aux_of_rule[idx] = aux
        out.append(Rule(r.head, frozenset(), frozenset((aux,))))
        for lit in sorted(r.pos):
            out.append(Rule(aux, frozenset(), frozenset((lit,))))
        for lit in sorted(r.neg):
            out.append(Rule(aux, frozenset((lit,)), frozenset()))

    return TransformResult(
        transformed=Program(symbols, tuple(out)),
        aux_of_rule=aux_of_rule,
        original_atoms=frozenset(range(len(program.symbols))),
    )


def project(model: Interpretation, result: TransformResult) -> Interpretation:
    """Restrict a model of the transformed program to the input vocabulary.

    Input atom ids are preserved by :func:`transform`, so the result is
    directly an interpretation over the original program.
    """
    return frozenset(model & result.original_atoms)


def size_report(result: TransformResult) -> tuple[int, int]:
    """(rule count, atom count) of the transformed program.

    Pass-through constraints are excluded from the rule count; for a
    constraint-free input the counts are exactly n + m rules and
    |occurring atoms| + n atoms.
    """
    rules = sum(1 for r in result.transformed.rules if r.head is not None)
    atoms = len(atoms_of(result.transformed))
    return rules, atoms


def write_aux_map(result: TransformResult) -> str:
    """Sidecar map of auxiliary atom names to 1-based rule indices (TSV)."""
    symbols = result.transformed.symbols
    lines = [
        f"{symbols.name_of(aux)}\t{idx + 1}"
        for idx, aux in sorted(result.aux_of_rule.items())
    ]
    return "\n".join(lines)
