"""Clark's completion of a ground program, and its CNF (DIMACS) form.

For every atom ``a`` with defining rules ``r_1..r_k`` the completion
states ``a <-> B_1 v ... v B_k`` where ``B_i`` is the conjunction of the
body literals of ``r_i``.  Atoms heading no rule are forced false; a
constraint contributes the clause negating its body.  The classical
models of the completion are exactly the supported models, which makes
this the SAT-based baseline the transformation pipeline is compared to.
"""

from dataclasses import dataclass, field

from .core import Program, atoms_of
from .semantics import DEFAULT_ATOM_CAP, ModelSet, capped_atoms


@dataclass
class CnfFormula:
    """CNF clauses over 1-based variables plus the variable-name map.

    Clause literals are nonzero signed variable indices.  ``var_map``
    records, for every used variable, the atom or body-auxiliary name it
    stands for; it is one-to-one.
    """

    num_vars: int
    clauses: list[list[int]]
    var_map: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range (num_vars={self.num_vars})")
        if len(set(self.var_map.values())) != len(self.var_map):
            raise ValueError("var_map names are not distinct")


def _body_aux_name(symbols, rule_index: int) -> str:
    name = f"_body_r{rule_index + 1}"
    while name in symbols:
        name = "_" + name
    return name


def complete(program: Program) -> CnfFormula:
    """Build the completion as CNF with definitional body variables.

    Variable numbering is deterministic: original atoms first in
    symbol-table order (atom id i becomes variable i+1), then one
    auxiliary variable per nonempty body of a headed rule, in rule order.
    Clauses are emitted as: body definitions (rule order), per-atom
    completions (symbol order), constraint clauses (rule order).  A fact
    among the defining rules collapses that atom's completion to the unit
    clause ``a``.
    """
    symbols = program.symbols
    num_atoms = len(symbols)
    clauses: list[list[int]] = []
    var_map = {i + 1: name for i, name in enumerate(symbols.names)}

    def body_literals(r) -> list[int]:
        return [a + 1 for a in sorted(r.pos)] + [-(a + 1) for a in sorted(r.neg)]

    # Definitional variables: body_var[rule_index] <-> conjunction of body.
    next_var = num_atoms + 1
    body_var: dict[int, int] = {}
    definers: dict[int, list[int]] = {}  # head atom id -> rule indices
    for idx, r in enumerate(program.rules):
        if r.head is None:
            continue
        definers.setdefault(r.head, []).append(idx)
        if not r.pos and not r.neg:
            continue
        b = next_var
        next_var += 1
        body_var[idx] = b
        var_map[b] = _body_aux_name(symbols, idx)
        lits = body_literals(r)
        for lit in lits:
            clauses.append([-b, lit])
        clauses.append([b] + [-lit for lit in lits])

    for atom in range(num_atoms):
        a = atom + 1
        rule_idxs = definers.get(atom, [])
        if not rule_idxs:
            clauses.append([-a])
        elif any(idx not in body_var for idx in rule_idxs):
            clauses.append([a])  # some defining rule is a fact
        else:
            disjuncts = [body_var[idx] for idx in rule_idxs]
            clauses.append([-a] + disjuncts)
            for b in disjuncts:
                clauses.append([-b, a])

    for r in program.rules:
        if r.head is None:
            clauses.append([-lit for lit in body_literals(r)])

    return CnfFormula(num_vars=next_var - 1, clauses=clauses, var_map=var_map)


def enumerate_completion_models(program: Program, cap: int = DEFAULT_ATOM_CAP) -> ModelSet:
    """All subsets of the occurring atoms satisfying the completion.

    Checked by direct evaluation of each ``a <-> B_1 v ... v B_k``
    biconditional and each constraint, not via the CNF encoding.
    """
    atoms = capped_atoms(program, cap)
    bit = {a: 1 << i for i, a in enumerate(atoms)}

    definers: dict[int, list[tuple[int, int]]] = {a: [] for a in atoms}
    constraints = []
    for r in program.rules:
        pos_mask = sum(bit[a] for a in r.pos)
        neg_mask = sum(bit[a] for a in r.neg)
        if r.head is None:
            constraints.append((pos_mask, neg_mask))
        else:
            definers[r.head].append((pos_mask, neg_mask))

    found = []
    for s in range(1 << len(atoms)):
        ok = all(
            not (s & p == p and s & n == 0) for p, n in constraints
        )
        if not ok:
            continue
        for a in atoms:
            body_holds = any(s & p == p and s & n == 0 for p, n in definers[a])
            if body_holds != bool(s & bit[a]):
                ok = False
                break
        if ok:
            found.append(frozenset(a for a in atoms if s & bit[a]))
    return ModelSet.canonical(found, program)


def emit_dimacs(formula: CnfFormula) -> str:
    """Standard DIMACS CNF text, newline-terminated lines.

    ``c map <var> <name>`` comment lines carry the variable map, then the
    ``p cnf`` header, then one zero-terminated clause per line.
    """
    lines = [f"c map {v} {name}" for v, name in sorted(formula.var_map.items())]
    lines.append(f"p cnf {formula.num_vars} {len(formula.clauses)}")
    for clause in formula.clauses:
        lines.append(" ".join([str(lit) for lit in clause] + ["0"]))
    return "\n".join(lines) + "\n"
