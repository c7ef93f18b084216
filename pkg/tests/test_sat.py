import random

import pytest

from irredundant.cnf import Assignment, Formula, mk_clause
from irredundant.errors import CapExceeded, PreconditionError
from irredundant.gadgets import exponential_family
from irredundant.sat import (QbfInstance, enumerate_models, entails, equivalent,
                             eval_exists_forall, solve)

from oracles import bf_entails, bf_exists_forall, models, random_formula

a, b, c = 1, 2, 3
EX1 = exponential_family(1)


def test_solve_empty():
    r = solve(Formula([]))
    assert r.satisfiable and r.model == Assignment({}, 0)


def test_solve_contradiction():
    assert solve(Formula([[a], [-a]])).status == "Unsat"
    assert not solve(Formula([[]]))


def test_solve_is_deterministic_false_first():
    r = solve(Formula([[a, b, c]]))
    assert dict(r.model) == {1: False, 2: False, 3: True}


def test_solve_random_3cnf_against_enumeration():
    rng = random.Random(2024)
    for _ in range(200):
        n = 8
        m = rng.randint(1, 45)
        cl = [[v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), 3)]
              for _ in range(m)]
        f = Formula(cl, universe=n)
        r = solve(f)
        assert r.satisfiable == bool(models(f.lit_lists(), n))
        if r.satisfiable:
            assert r.model.satisfies(f)


def test_entails_examples():
    assert entails(Formula([[a]]), mk_clause([a, b]))
    assert not entails(Formula([]), mk_clause([a]))
    assert entails(Formula([[a, -b], [-a, b], [a, c]]), mk_clause([b, c]))


def test_equivalent_examples():
    assert equivalent(Formula([[a, b], [a, -b]]), Formula([[a]]))
    assert equivalent(EX1, EX1.without(2))
    assert not equivalent(Formula([[a]]), Formula([[b]]))


def test_enumerate_models_examples():
    assert [dict(m) for m in enumerate_models(Formula([[a]]), {a})] == [{1: True}]
    assert [dict(m) for m in enumerate_models(Formula([], universe=1), {a})] == [
        {1: False}, {1: True}]
    ms = enumerate_models(EX1, {a, b, c})
    # a=b with (a or c): FFT, TTF, TTT
    assert len(ms) == 3 == len(models(EX1.lit_lists(), 3))
    assert all(m[a] == m[b] and (m[a] or m[c]) for m in ms)


def test_enumerate_models_cap():
    with pytest.raises(CapExceeded):
        enumerate_models(Formula([], universe=21))
    assert len(enumerate_models(Formula([], universe=3), cap=3)) == 8


def test_invariants_on_random_corpus():
    rng = random.Random(7)
    for _ in range(150):
        f = random_formula(rng, 6, 8, allow_empty=True)
        n = f.universe
        ms = enumerate_models(f)
        assert solve(f).satisfiable == bool(ms)
        assert len(ms) == len(models(f.lit_lists(), n))
        g = random_formula(rng, 6, 3).with_universe(max(n, 6))
        for gamma in g:
            if max(gamma.variables, default=0) <= n:
                assert entails(f, gamma) == bf_entails(f.lit_lists(), gamma.lits, n)
        h = random_formula(rng, n, 8)
        h = h.with_universe(n) if h.universe <= n else h
        if h.universe == n:
            assert equivalent(f, h) == (models(f.lit_lists(), n) == models(h.lit_lists(), n))
            assert equivalent(f, h) == equivalent(h, f)
        assert equivalent(f, f)


def test_exists_forall_examples():
    assert eval_exists_forall(QbfInstance({1}, set(), Formula([[1]])))
    assert not eval_exists_forall(QbfInstance({1}, {2}, Formula([[1, 2]])))
    assert eval_exists_forall(QbfInstance(set(), {1}, Formula([[1], [-1]])))


def test_exists_forall_against_truth_table():
    rng = random.Random(11)
    for _ in range(150):
        f = random_formula(rng, 5, 5)
        vs = list(range(1, f.universe + 1))
        xs = sorted(rng.sample(vs, rng.randint(0, len(vs))))
        q = QbfInstance(frozenset(xs), frozenset(vs) - set(xs), f)
        assert eval_exists_forall(q) == bf_exists_forall(f.lit_lists(), f.universe, xs)


def test_qbf_preconditions():
    with pytest.raises(PreconditionError):
        QbfInstance({1}, {1}, Formula([[1]]))
    with pytest.raises(PreconditionError):
        QbfInstance({1}, set(), Formula([[1, 2]]))
    with pytest.raises(CapExceeded):
        eval_exists_forall(QbfInstance(set(range(1, 18)), set(), Formula([], universe=17)))
