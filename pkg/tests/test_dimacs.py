import warnings

import pytest
from hypothesis import given, settings, strategies as st

from irredundant.cnf import Formula
from irredundant.dimacs import DuplicateClauseWarning, parse_dimacs, write_dimacs
from irredundant.errors import ParseError, TautologyError
from irredundant.gadgets import exponential_family


def test_parse_simple():
    f = parse_dimacs(b"p cnf 2 2\n1 -2 0\n-1 2 0\n")
    assert f == Formula([[1, -2], [-1, 2]], universe=2)
    assert f.lines == (2, 3)


def test_parse_duplicate_warns():
    with pytest.warns(DuplicateClauseWarning):
        f = parse_dimacs(b"p cnf 1 2\n1 0\n1 0\n")
    assert f == Formula([[1]])


def test_parse_tautology_line():
    with pytest.raises(TautologyError) as e:
        parse_dimacs(b"p cnf 1 1\n1 -1 0\n")
    assert e.value.line == 2


def test_parse_comments_multiline_and_trailing_space():
    text = "c hello\np cnf 3 2\n1 2\n 3 0 -1\n0   \n\n"
    f = parse_dimacs(text)
    assert [c.lits for c in f] == [(1, 2, 3), (-1,)]
    assert f.lines == (3, 4)


@pytest.mark.parametrize("text", [
    "1 0\n",                      # no header
    "p cnf x 1\n1 0\n",           # bad header
    "p dnf 1 1\n1 0\n",
    "p cnf 1 1\n2 0\n",           # out of range
    "p cnf 2 1\n1 2\n",           # missing terminator
    "p cnf 2 1\n1 a 0\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            parse_dimacs(text)


def test_write():
    assert write_dimacs(Formula([[1]])) == b"p cnf 1 1\n1 0\n"
    assert write_dimacs(Formula([], universe=0)) == b"p cnf 0 0\n"


def test_round_trip_example1():
    f = exponential_family(1)
    text = write_dimacs(f)
    assert text.count(b" 0\n") == 4
    assert parse_dimacs(text) == f


clause_st = st.lists(st.integers(1, 7), max_size=4, unique=True).flatmap(
    lambda vs: st.tuples(*[st.sampled_from([v, -v]) for v in vs]))


@settings(max_examples=200)
@given(st.lists(clause_st, max_size=10), st.integers(0, 3))
def test_round_trip_property(clauses, extra):
    f = Formula(clauses)
    f = f.with_universe(f.universe + extra)
    g = parse_dimacs(write_dimacs(f))
    assert g == f
    assert [c.lits for c in g] == [c.lits for c in f]
