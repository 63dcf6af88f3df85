import pytest

from suppsolve.core import (
    Program,
    Rule,
    SymbolTable,
    atoms_of,
    interpretation_from_names,
)
from suppsolve.parser import parse


def test_intern_idempotent():
    table = SymbolTable()
    assert table.intern("p") == 0
    assert table.intern("p") == 0
    assert len(table) == 1


def test_intern_dense_sequencing():
    table = SymbolTable()
    assert table.intern("p") == 0
    assert table.intern("q") == 1
    assert table.names == ["p", "q"]


def test_intern_distinct_atoms_get_consecutive_ids():
    # the four distinct atoms of "p :- q, r, not s."
    table = SymbolTable()
    ids = [table.intern(name) for name in ("p", "q", "r", "s")]
    assert ids == [0, 1, 2, 3]
    assert [table.name_of(i) for i in ids] == ["p", "q", "r", "s"]


def test_atom_id_density():
    table = SymbolTable(["a", "b", "c"])
    assert max(table.index.values()) + 1 == len(table)


def test_atoms_of_empty_program():
    assert atoms_of(Program(SymbolTable())) == frozenset()


def test_atoms_of_example_program():
    program = parse("p :- q, not r.\nq :- p.")
    assert atoms_of(program) == {0, 1, 2}
    assert len(atoms_of(program)) == 3


def test_atoms_of_excludes_unused_interned():
    table = SymbolTable(["p", "unused"])
    program = Program(table, (Rule(0),))
    assert atoms_of(program) == {0}


def test_program_rejects_out_of_range_ids():
    with pytest.raises(ValueError):
        Program(SymbolTable(["p"]), (Rule(0, frozenset((1,)), frozenset()),))
    with pytest.raises(ValueError):
        Program(SymbolTable(), (Rule(0),))


def test_rule_classification():
    fact = Rule(0)
    constraint = Rule(None, frozenset((0,)), frozenset())
    assert fact.is_fact and not fact.is_constraint
    assert constraint.is_constraint and not constraint.is_fact


def test_rule_body_may_overlap():
    # pos and neg may intersect; the body is unsatisfiable but legal
    r = Rule(0, frozenset((1,)), frozenset((1,)))
    assert r.pos & r.neg == {1}


def test_interpretation_from_names():
    program = parse("p :- q.")
    assert interpretation_from_names(program, ["p", "q"]) == {0, 1}
    with pytest.raises(KeyError):
        interpretation_from_names(program, ["zzz"])
