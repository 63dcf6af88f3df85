"""Reference semantics: models, supported models, reduct, stable models.

The per-interpretation checks are deliberately naive and readable; they
are the oracles everything else is tested against.  The enumerators scan
all ``2^n`` subsets of the occurring atoms, so they carry an atom cap
(default 20).  ``enumerate_stable`` runs the reduct fixpoint for every
subset at once on numpy arrays, which keeps exhaustive search usable up
to the cap; it shares no logic with the supported-model checks.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import Interpretation, Program, Rule, atoms_of

DEFAULT_ATOM_CAP = 20


class AtomCapError(ValueError):
    """Raised when a brute-force enumerator would scan more than 2^cap subsets."""

    def __init__(self, num_atoms: int, cap: int):
        super().__init__(
            f"program has {num_atoms} occurring atoms, above the exhaustive-search "
            f"cap of {cap}; raise the cap or use the transformation pipeline"
        )
        self.num_atoms = num_atoms
        self.cap = cap


@dataclass(frozen=True)
class ModelSet:
    """Duplicate-free models in canonical order.

    Canonical order is by cardinality, then lexicographically on the
    sorted atom-name lists, so printing is deterministic.
    """

    models: tuple[Interpretation, ...]

    @staticmethod
    def canonical(models: Iterable[Interpretation], program: Program) -> "ModelSet":
        names = program.symbols.names
        unique = set(frozenset(m) for m in models)
        ordered = sorted(unique, key=lambda m: (len(m), sorted(names[a] for a in m)))
        return ModelSet(tuple(ordered))

    def __len__(self) -> int:
        return len(self.models)

    def __iter__(self):
        return iter(self.models)

    def __contains__(self, m: Interpretation) -> bool:
        return m in self.models

    def as_set(self) -> frozenset[Interpretation]:
        return frozenset(self.models)

    def format_lines(self, program: Program) -> list[str]:
        """One line per model: atom names space-separated in symbol order."""
        names = program.symbols.names
        return [" ".join(names[a] for a in sorted(m)) for m in self.models]


def _fires(r: Rule, m: Interpretation) -> bool:
    return r.pos <= m and not (r.neg & m)


def is_model(program: Program, m: Interpretation) -> bool:
    """True iff every firing headed rule has its head in ``m`` and no
    constraint body holds in ``m``."""
    for r in program.rules:
        if _fires(r, m):
            if r.head is None or r.head not in m:
                return False
    return True


def is_supported(program: Program, m: Interpretation) -> bool:
    """Supportedness via explicit rule witnesses: ``m`` is a model and
    every atom in ``m`` heads some rule whose body ``m`` satisfies."""
    if not is_model(program, m):
        return False
    for a in m:
        if not any(r.head == a and _fires(r, m) for r in program.rules):
            return False
    return True


def is_supported_fixpoint(program: Program, m: Interpretation) -> bool:
    """Supportedness via the one-step consequence operator: ``m`` equals
    the set of heads of firing rules, and no constraint fires.

    Independent re-coding of :func:`is_supported`; the two must agree.
    """
    consequences = set()
    for r in program.rules:
        if _fires(r, m):
            if r.head is None:
                return False
            consequences.add(r.head)
    return consequences == set(m)


def reduct(program: Program, m: Interpretation) -> Program:
    """Gelfond-Lifschitz reduct: drop rules whose negative body meets
    ``m``, strip negation from the rest."""
    kept = tuple(
        Rule(r.head, r.pos, frozenset())
        for r in program.rules
        if not (r.neg & m)
    )
    return Program(program.symbols, kept)


def least_model(positive_program: Program) -> Interpretation:
    """Least fixpoint of the immediate-consequence step of a positive
    program.  Constraints are ignored; a negative body literal anywhere
    else is a precondition violation."""
    rules = [r for r in positive_program.rules if r.head is not None]
    for r in rules:
        if r.neg:
            raise ValueError("least_model requires a positive program")
    derived: set[int] = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in derived and r.pos <= derived:
                derived.add(r.head)
                changed = True
    return frozenset(derived)


def is_stable(program: Program, m: Interpretation) -> bool:
    """True iff ``m`` is the least model of the reduct of the headed
    fragment and satisfies every constraint."""
    for r in program.rules:
        if r.head is None and _fires(r, m):
            return False
    headed = Program(program.symbols, tuple(r for r in program.rules if r.head is not None))
    return least_model(reduct(headed, m)) == m


def capped_atoms(program: Program, cap: int) -> list[int]:
    """Sorted occurring atoms, or :class:`AtomCapError` if enumeration
    over their subsets would exceed ``2^cap``."""
    atoms = sorted(atoms_of(program))
    if len(atoms) > cap:
        raise AtomCapError(len(atoms), cap)
    return atoms


def enumerate_supported(program: Program, cap: int = DEFAULT_ATOM_CAP) -> ModelSet:
    """All supported models, by exhaustive scan of the subsets of the
    occurring atoms (witness-based check per subset)."""
    atoms = capped_atoms(program, cap)
    bit = {a: 1 << i for i, a in enumerate(atoms)}

    headed = []
    constraints = []
    by_head: dict[int, list[tuple[int, int]]] = {}
    for r in program.rules:
        pos_mask = sum(bit[a] for a in r.pos)
        neg_mask = sum(bit[a] for a in r.neg)
        if r.head is None:
            constraints.append((pos_mask, neg_mask))
        else:
            headed.append((bit[r.head], pos_mask, neg_mask))
            by_head.setdefault(bit[r.head], []).append((pos_mask, neg_mask))

    found: list[Interpretation] = []
    for s in range(1 << len(atoms)):
        ok = True
        for pos_mask, neg_mask in constraints:
            if s & pos_mask == pos_mask and s & neg_mask == 0:
                ok = False
                break
        if not ok:
            continue
        for head_bit, pos_mask, neg_mask in headed:
            if s & pos_mask == pos_mask and s & neg_mask == 0 and not (s & head_bit):
                ok = False
                break
        if not ok:
            continue
        rest = s
        while rest:
            head_bit = rest & -rest
            rest ^= head_bit
            if not any(
                s & p == p and s & n == 0 for p, n in by_head.get(head_bit, ())
            ):
                ok = False
                break
        if ok:
            found.append(frozenset(a for a in atoms if s & bit[a]))
    return ModelSet.canonical(found, program)


def enumerate_stable(program: Program, cap: int = DEFAULT_ATOM_CAP) -> ModelSet:
    """All stable models, by running the reduct least-fixpoint for every
    subset of the occurring atoms simultaneously (vectorized)."""
    atoms = capped_atoms(program, cap)
    k = len(atoms)
    bit = {a: np.uint64(1 << i) for i, a in enumerate(atoms)}
    zero = np.uint64(0)

    subsets = np.arange(1 << k, dtype=np.uint64)
    violated = np.zeros(1 << k, dtype=bool)
    headed = []
    for r in program.rules:
        pos_mask = sum((bit[a] for a in r.pos), zero)
        neg_mask = sum((bit[a] for a in r.neg), zero)
        if r.head is None:
            violated |= ((subsets & pos_mask) == pos_mask) & ((subsets & neg_mask) == zero)
        else:
            headed.append((bit[r.head], pos_mask, neg_mask))

    # Per-subset least model of the reduct: a rule survives the reduct of
    # subset s iff s misses its negative body, and then derives its head
    # once its positive body is derived.
    derived = np.zeros(1 << k, dtype=np.uint64)
    while True:
        before = derived.copy()
        for head_bit, pos_mask, neg_mask in headed:
            applies = ((subsets & neg_mask) == zero) & ((derived & pos_mask) == pos_mask)
            derived = np.where(applies, derived | head_bit, derived)
        if np.array_equal(before, derived):
            break

    stable = np.flatnonzero((derived == subsets) & ~violated)
    models = [
        frozenset(a for i, a in enumerate(atoms) if int(s) >> i & 1)
        for s in stable
    ]
    return ModelSet.canonical(models, program)
