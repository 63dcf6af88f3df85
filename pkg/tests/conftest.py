"""Shared fixtures: the random program corpus and brute-force helpers.

The corpus is seed-fixed: 500 programs with up to 10 atoms, up to 15
rules and bodies of up to 4 literals, mixed negation, about a third with
constraints.  Atom and headed-rule counts are jointly bounded so that the
transformed programs stay within exhaustive-enumeration reach.
"""

import random

import numpy as np
import pytest

from suppsolve.completion import CnfFormula
from suppsolve.core import Program, Rule, SymbolTable

CORPUS_SIZE = 500
CORPUS_SEED_BASE = 1000


def random_program(seed: int) -> Program:
    rng = random.Random(seed)
    n_atoms = rng.randint(1, 10)
    n_headed = rng.randint(0, min(15, 16 - n_atoms))
    n_constraints = min(rng.randint(1, 2), 15 - n_headed) if rng.random() < 0.3 else 0
    neg_prob = rng.random()

    symbols = SymbolTable(f"x{i}" for i in range(n_atoms))
    kinds = ["headed"] * n_headed + ["constraint"] * n_constraints
    rng.shuffle(kinds)

    rules = []
    for kind in kinds:
        low = 1 if kind == "constraint" else 0
        size = rng.randint(low, min(4, n_atoms))
        pos, neg = set(), set()
        for atom in rng.sample(range(n_atoms), size):
            (neg if rng.random() < neg_prob else pos).add(atom)
        head = None if kind == "constraint" else rng.randrange(n_atoms)
        rules.append(Rule(head, frozenset(pos), frozenset(neg)))
    return Program(symbols, tuple(rules))


@pytest.fixture(scope="session")
def corpus() -> list[Program]:
    return [random_program(CORPUS_SEED_BASE + i) for i in range(CORPUS_SIZE)]


def brute_force_cnf_atom_projections(formula: CnfFormula, num_atom_vars: int) -> set[int]:
    """Satisfying assignments of the CNF over all variables, projected to
    the first ``num_atom_vars`` variables and returned as bitmasks
    (variable i is bit i-1).  Pure truth-table scan."""
    nv = formula.num_vars
    if nv > 22:
        raise ValueError(f"{nv} variables is too many for a full truth table")
    assignments = np.arange(1 << nv, dtype=np.uint64)
    sat = np.ones(1 << nv, dtype=bool)
    for clause in formula.clauses:
        clause_sat = np.zeros(1 << nv, dtype=bool)
        for lit in clause:
            bitmask = np.uint64(1 << (abs(lit) - 1))
            if lit > 0:
                clause_sat |= (assignments & bitmask) != 0
            else:
                clause_sat |= (assignments & bitmask) == 0
        sat &= clause_sat
    atom_mask = (1 << num_atom_vars) - 1
    return {int(s) & atom_mask for s in np.flatnonzero(sat)}


def model_mask(m) -> int:
    return sum(1 << a for a in m)
