"""Data model for ground normal logic programs.

Atoms are dense integer ids into a symbol table, rules keep their body
literals as frozensets, and interpretations are plain frozensets of atom
ids.  Everything is immutable after construction and safe to share across
threads.
"""

from dataclasses import dataclass, field
from typing import Iterable, Optional


class SymbolTable:
    """Bidirectional map between atom names and dense integer ids.

    Ids are assigned in interning order, so re-parsing a printed program
    reproduces the same ids.
    """

    def __init__(self, names: Iterable[str] = ()):
        self.names: list[str] = []
        self.index: dict[str, int] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> int:
        """Return the id for ``name``, appending it if not yet present."""
        existing = self.index.get(name)
        if existing is not None:
            return existing
        atom_id = len(self.names)
        self.names.append(name)
        self.index[name] = atom_id
        return atom_id

    def name_of(self, atom_id: int) -> str:
        return self.names[atom_id]

    def id_of(self, name: str) -> int:
        return self.index[name]

    def __contains__(self, name: str) -> bool:
        return name in self.index

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolTable):
            return NotImplemented
        return self.names == other.names

    def __repr__(self) -> str:
        return f"SymbolTable({self.names!r})"

    def copy(self) -> "SymbolTable":
        return SymbolTable(self.names)


@dataclass(frozen=True)
class Rule:
    """One ground normal rule: ``head :- pos, not neg``.

    ``head is None`` marks a constraint.  ``pos`` and ``neg`` are
    deduplicated sets of atom ids; ``pos & neg`` may be nonempty (the body
    is then unsatisfiable, which is legal input).
    """

    head: Optional[int]
    pos: frozenset[int] = frozenset()
    neg: frozenset[int] = frozenset()

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.pos and not self.neg

    def body_atoms(self) -> frozenset[int]:
        return self.pos | self.neg


def rule(head: Optional[int], pos: Iterable[int] = (), neg: Iterable[int] = ()) -> Rule:
    """Convenience constructor accepting any iterables for the body."""
    return Rule(head, frozenset(pos), frozenset(neg))


@dataclass(frozen=True)
class Program:
    """A symbol table plus an ordered list of rules.

    Rule order is preserved exactly as given; the body-decoupling
    transformation depends on it deterministically.
    """

    symbols: SymbolTable
    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        n = len(self.symbols)
        for r in self.rules:
            for a in ((r.head,) if r.head is not None else ()) + tuple(r.pos) + tuple(r.neg):
                if not (0 <= a < n):
                    raise ValueError(f"atom id {a} out of range for symbol table of size {n}")

    def atom_name(self, atom_id: int) -> str:
        return self.symbols.name_of(atom_id)


# An interpretation is a frozenset of atom ids over a program's symbol table.
Interpretation = frozenset[int]


def atoms_of(program: Program) -> frozenset[int]:
    """Ids of all atoms occurring in some head or body.

    Atoms interned in the symbol table but never used by a rule are
    excluded.
    """
    occurring: set[int] = set()
    for r in program.rules:
        if r.head is not None:
            occurring.add(r.head)
        occurring.update(r.pos)
        occurring.update(r.neg)
    return frozenset(occurring)


def interpretation_from_names(program: Program, names: Iterable[str]) -> Interpretation:
    """Build an interpretation from atom names; unknown names raise KeyError."""
    return frozenset(program.symbols.id_of(n) for n in names)


def names_of(program: Program, m: Interpretation) -> list[str]:
    """Atom names of ``m`` in symbol-table order."""
    return [program.symbols.name_of(a) for a in sorted(m)]
