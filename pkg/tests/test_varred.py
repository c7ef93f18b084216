import random

import pytest

from irredundant.cnf import Formula, PartialAssignment
from irredundant.errors import CapExceeded, ScopeError
from irredundant.redundancy import is_clause_redundant
from irredundant.sat import equivalent
from irredundant.varred import (forget, is_clause_var_redundant, is_formula_var_redundant,
                                is_var_model, parse_scope, var_equivalent, var_redundant_clauses)

from oracles import bf_var_models, models, random_formula

x, y = 1, 2
XY = Formula([[x], [y]])
XY_NOT_Y = Formula([[x, y], [-y]])


def test_var_model_examples():
    assert is_var_model(PartialAssignment({x: True}), XY)
    assert not is_var_model(PartialAssignment({x: False}), XY)
    assert not is_var_model(PartialAssignment({x: False}), XY_NOT_Y)
    with pytest.raises(ScopeError):
        is_var_model(PartialAssignment({5: True}), XY)


def test_var_equivalent_examples():
    assert var_equivalent(XY, Formula([[x]], universe=2), {x})
    assert not var_equivalent(XY_NOT_Y, Formula([[x, y]]), {x})
    assert var_equivalent(XY, XY, {x, y})


def test_clause_var_redundant_examples():
    assert is_clause_var_redundant(XY, 1, {x})
    assert not is_clause_var_redundant(XY, 0, {x})
    assert not is_clause_var_redundant(XY_NOT_Y, 1, {x})
    assert not is_clause_var_redundant(XY_NOT_Y, 0, {x})


def test_formula_var_redundant_examples():
    assert is_formula_var_redundant(XY, {x})
    assert var_redundant_clauses(XY, {x}) == [1]
    assert not is_formula_var_redundant(XY_NOT_Y, {x})
    assert not is_formula_var_redundant(Formula([], universe=2), {x})


def test_forget_examples():
    f = forget(XY, {x})
    assert equivalent(f, Formula([[x]], universe=2))
    assert f.variables() <= {x}
    assert equivalent(forget(XY_NOT_Y, {x, y}), XY_NOT_Y)
    assert len(forget(Formula([[x, y]]), {x})) == 0


def test_forget_unsat_gives_contradiction():
    f = forget(Formula([[x], [-x], [y]]), {y})
    assert f.variables() <= {y}
    assert not models(f.lit_lists(), 2)
    assert [c.lits for c in forget(Formula([[x], [-x]]), set())] == [()]


def test_scope_checks():
    with pytest.raises(ScopeError):
        var_equivalent(XY, XY, {3})
    with pytest.raises(CapExceeded):
        var_equivalent(Formula([], universe=17), Formula([], universe=17), range(1, 18))
    assert parse_scope("1, 3,2") == {1, 2, 3}
    assert parse_scope("") == frozenset()
    with pytest.raises(ScopeError):
        parse_scope("1,a")


def _random_scope(rng, n):
    return set(rng.sample(range(1, n + 1), rng.randint(0, n)))


def test_against_var_model_oracle():
    rng = random.Random(3)
    for _ in range(120):
        f = random_formula(rng, 5, 6)
        n = f.universe
        v = _random_scope(rng, n)
        cl = f.lit_lists()
        base = bf_var_models(cl, n, v)
        for i in f.ids():
            rest = cl[:i] + cl[i + 1:]
            assert is_clause_var_redundant(f, i, v) == (bf_var_models(rest, n, v) == base)
        g = random_formula(rng, n, 6)
        if g.universe <= n:
            g = g.with_universe(n)
            assert var_equivalent(f, g, v) == (bf_var_models(g.lit_lists(), n, v) == base)


def test_corpus_identities():
    rng = random.Random(4)
    for _ in range(100):
        f = random_formula(rng, 5, 6)
        n = f.universe
        full = set(range(1, n + 1))
        g = random_formula(rng, n, 5)
        g = g.with_universe(n) if g.universe <= n else g
        if g.universe == n:
            assert var_equivalent(f, g, full) == equivalent(f, g)
        v = _random_scope(rng, n)
        fg = forget(f, v)
        assert fg.variables() <= v
        assert var_equivalent(f, fg, v)
        for i in f.ids():
            if f[i].variables <= v:
                assert is_clause_var_redundant(f, i, v) == is_clause_redundant(f, i)
