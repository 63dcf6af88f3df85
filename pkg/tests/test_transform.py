import pytest

from suppsolve.core import Program, Rule, SymbolTable, atoms_of
from suppsolve.parser import parse, print_program
from suppsolve.semantics import enumerate_stable, enumerate_supported
from suppsolve.transform import project, size_report, transform, write_aux_map

USAGE_INPUT = "p :- q, not r.\nq :- p."

USAGE_OUTPUT = """\
p :- not _dm_r1.
_dm_r1 :- not q.
_dm_r1 :- r.
q :- not _dm_r2.
_dm_r2 :- not p."""


def test_usage_example_byte_exact():
    result = transform(parse(USAGE_INPUT))
    assert print_program(result.transformed) == USAGE_OUTPUT


def test_single_rule_with_mixed_body():
    result = transform(parse("p :- q, r, not s."))
    assert print_program(result.transformed) == (
        "p :- not _dm_r1.\n"
        "_dm_r1 :- not q.\n"
        "_dm_r1 :- not r.\n"
        "_dm_r1 :- s."
    )


def test_fact_gets_underivable_aux():
    result = transform(parse("a."))
    assert print_program(result.transformed) == "a :- not _dm_r1."
    # no rule derives _dm_r1: an empty body is never false
    aux = result.aux_of_rule[0]
    assert not any(r.head == aux for r in result.transformed.rules)


def test_simplify_facts_flag():
    result = transform(parse("a.\np :- a."), simplify_facts=True)
    assert print_program(result.transformed) == (
        "a.\n"
        "p :- not _dm_r2.\n"
        "_dm_r2 :- not a."
    )
    assert 0 not in result.aux_of_rule


def test_constraints_pass_through_and_consume_an_index():
    result = transform(parse("p :- q.\n:- p, not s.\nr :- not p."))
    assert print_program(result.transformed) == (
        "p :- not _dm_r1.\n"
        "_dm_r1 :- not q.\n"
        ":- p, not s.\n"
        "r :- not _dm_r3.\n"
        "_dm_r3 :- p."
    )
    assert sorted(result.aux_of_rule) == [0, 2]


def test_aux_of_rule_is_injective_and_disjoint_from_input():
    result = transform(parse(USAGE_INPUT))
    auxes = list(result.aux_of_rule.values())
    assert len(auxes) == len(set(auxes))
    assert not (result.original_atoms & set(auxes))


def test_reserved_prefix_rejected_defensively():
    symbols = SymbolTable(["_dm_r1", "p"])
    program = Program(symbols, (Rule(1, frozenset((0,)), frozenset()),))
    with pytest.raises(ValueError):
        transform(program)


def test_duplicate_rules_each_get_an_aux():
    result = transform(parse("p :- q.\np :- q."))
    assert print_program(result.transformed) == (
        "p :- not _dm_r1.\n"
        "_dm_r1 :- not q.\n"
        "p :- not _dm_r2.\n"
        "_dm_r2 :- not q."
    )


def test_overlapping_pos_neg_body_transforms_normally():
    result = transform(parse("p :- q, not q."))
    assert print_program(result.transformed) == (
        "p :- not _dm_r1.\n"
        "_dm_r1 :- not q.\n"
        "_dm_r1 :- q."
    )
    # the body is unsatisfiable, so p is in no supported model
    assert all(0 not in m for m in enumerate_supported(parse("p :- q, not q.")))


def test_project_keeps_original_atoms_only():
    program = parse(USAGE_INPUT)
    result = transform(program)
    t = result.transformed
    aux1, aux2 = (t.symbols.id_of(n) for n in ("_dm_r1", "_dm_r2"))
    p, q = (program.symbols.id_of(n) for n in "pq")
    assert project(frozenset((p, q)), result) == {p, q}
    assert project(frozenset((aux1, aux2)), result) == frozenset()
    assert project(frozenset(), result) == frozenset()


def test_size_report_single_rule():
    # one rule, three body literals: 1 + 3 rules, 4 + 1 atoms
    result = transform(parse("p :- q, r, not s."))
    assert size_report(result) == (4, 5)


def test_size_report_usage_example():
    result = transform(parse(USAGE_INPUT))
    assert size_report(result) == (5, 5)


def test_size_report_empty_program():
    assert size_report(transform(parse(""))) == (0, 0)


def test_exact_size_formula_on_random_programs(corpus):
    for program in corpus:
        if any(r.head is None for r in program.rules):
            continue
        n = len(program.rules)
        m = sum(len(r.pos) + len(r.neg) for r in program.rules)
        result = transform(program)
        assert size_report(result) == (n + m, len(atoms_of(program)) + n)
        assert len(result.transformed.rules) == n + m


def test_transform_deterministic(corpus):
    for program in corpus[:50]:
        a = print_program(transform(program).transformed)
        b = print_program(transform(program).transformed)
        assert a == b


def test_facts_appear_in_every_projected_model():
    program = parse("a.\nb :- not c.\nc :- not b.")
    result = transform(program)
    a = program.symbols.id_of("a")
    models = enumerate_stable(result.transformed)
    assert len(models) > 0
    assert all(a in project(m, result) for m in models)


def test_write_aux_map():
    result = transform(parse("p :- q.\n:- q.\nr."))
    assert write_aux_map(result) == "_dm_r1\t1\n_dm_r3\t3"
