import pytest
from hypothesis import given, strategies as st

from dispenser.formula import (Assignment, ClauseCountMismatch, CnfFormula, LiteralOutOfRange,
                               MalformedHeader, UnterminatedClause, evaluate, negate,
                               parse_dimacs, random_cnf, render_dimacs, xor_chain)
from dispenser.oracle import all_assignments, subset_minimal_models


def test_parse_xor_pair():
    f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0")
    assert f == CnfFormula(2, ((1, 2), (-1, -2)))


def test_parse_empty_formula():
    f = parse_dimacs("p cnf 1 0\n")
    assert f.num_vars == 1 and f.clauses == ()


def test_parse_comments_multiline_and_duplicates():
    text = "c hello\np cnf 3 2\n1 1 -2\n 0 3\nc mid\n-3 3 0\n"
    f = parse_dimacs(text)
    assert f.clauses == ((1, -2), (3, -3))


@pytest.mark.parametrize("text, error", [
    ("p cnf 2 1\n3 0", LiteralOutOfRange),
    ("1 2 0\n", MalformedHeader),
    ("p cnf two 1\n1 0", MalformedHeader),
    ("p dnf 2 1\n1 0", MalformedHeader),
    ("", MalformedHeader),
    ("p cnf 2 1\n1 2", UnterminatedClause),
    ("p cnf 2 2\n1 2 0", ClauseCountMismatch),
    ("p cnf 2 0\n1 0", ClauseCountMismatch),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_dimacs(text)


def test_render():
    assert render_dimacs(CnfFormula(2, ((1, 2), (-1, -2)))) == "p cnf 2 2\n1 2 0\n-1 -2 0\n"
    assert render_dimacs(CnfFormula(0)) == "p cnf 0 0\n"
    assert render_dimacs(CnfFormula(1, ((),))) == "p cnf 1 1\n0\n"


@st.composite
def formulas(draw, max_vars=8):
    n = draw(st.integers(0, max_vars))
    if n == 0:
        return CnfFormula(0, tuple(() for _ in range(draw(st.integers(0, 2)))))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
    clauses = draw(st.lists(st.lists(lit, max_size=4), max_size=10))
    return CnfFormula(n, tuple(tuple(c) for c in clauses))


@given(formulas())
def test_round_trip(f):
    assert parse_dimacs(render_dimacs(f)) == f


@given(formulas(max_vars=5), st.data())
def test_evaluate_matches_clause_semantics(f, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=f.num_vars, max_size=f.num_vars))
    a = Assignment(bits)
    expected = True
    for clause in f.clauses:
        clause_value = False
        for lit in clause:
            if (bits[abs(lit) - 1] == 1) == (lit > 0):
                clause_value = True
        expected = expected and clause_value
    assert evaluate(f, a) == expected


def test_evaluate_examples():
    f = xor_chain(1)
    assert evaluate(f, Assignment.from_bits("01"))
    assert not evaluate(f, Assignment.from_bits("11"))
    assert evaluate(CnfFormula(3), Assignment.from_bits("101"))
    assert not evaluate(CnfFormula(1, ((),)), Assignment.from_bits("1"))
    # tautological clause is kept and always satisfied
    assert evaluate(CnfFormula(1, ((1, -1),)), Assignment.from_bits("0"))


def test_evaluate_rejects_partial_assignment():
    with pytest.raises(ValueError):
        evaluate(xor_chain(1), Assignment.from_bits("0"))


@given(st.integers(-50, 50).filter(bool))
def test_negation_involution(lit):
    assert negate(negate(lit)) == lit


def test_xor_chain_shape():
    assert render_dimacs(xor_chain(1)) == "p cnf 2 2\n1 2 0\n-1 -2 0\n"
    assert xor_chain(2).clauses == ((1, 2), (-1, -2), (3, 4), (-3, -4))
    with pytest.raises(ValueError):
        xor_chain(0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_xor_chain_models_all_minimal(k):
    f = xor_chain(k)
    models = [a for a in all_assignments(2 * k) if evaluate(f, a)]
    assert len(models) == 2 ** k
    assert subset_minimal_models(f) == models


def test_assignment_rendering():
    a = Assignment.from_bits("101")
    assert str(a) == "101"
    assert a.ones() == {1, 3}
    assert a.value(2) == 0
    assert Assignment.from_bits("01") < Assignment.from_bits("10")
    with pytest.raises(ValueError):
        Assignment([2])


def test_literal_range_checked_on_construction():
    with pytest.raises(LiteralOutOfRange):
        CnfFormula(1, ((2,),))


def test_random_cnf_is_reproducible():
    assert random_cnf(5, 7, 42) == random_cnf(5, 7, 42)
    f = random_cnf(5, 7, 42)
    assert f.num_clauses == 7 and all(1 <= len(c) <= 3 for c in f.clauses)
