"""Maxcons revision and conditional redundancy.

Revising ``pi`` by ``gamma`` keeps the maximal subsets of ``pi`` that are
consistent with ``gamma``; its models are the models of ``gamma`` whose set
of satisfied ``pi``-clauses is maximal under inclusion.  A clause is
conditionally redundant when removing it never changes a revision result,
which happens exactly when no pair of models ``w, w'`` has
``S(w) - S(w') == {clause}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cnf import Assignment, Formula
from .errors import InconsistentRevisor
from .sat import MODEL_CAP, enumerate_models, model_table, solve_lits


@dataclass(frozen=True)
class WitnessPair:
    omega: Assignment
    omega_prime: Assignment


def satisfied_subset(pi: Formula, omega) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(pi) if c.satisfied_by(omega))


def _maximal(sets) -> list[frozenset[int]]:
    uniq = set(sets)
    keep = [s for s in uniq if not any(s < t for t in uniq)]
    return sorted(keep, key=lambda s: sorted(s))


def _check_revisor(gamma: Formula) -> None:
    if solve_lits(gamma.lit_lists(), gamma.universe) is None:
        raise InconsistentRevisor("cannot revise by an unsatisfiable formula")


def max_consistent_subsets(pi: Formula, gamma: Formula, cap: int = MODEL_CAP) -> list[frozenset[int]]:
    """Max(pi, gamma) as the maximal satisfied subsets of gamma's models."""
    _check_revisor(gamma)
    n = max(pi.universe, gamma.universe)
    variables = list(range(1, n + 1))
    g_rows = model_table(gamma.lit_lists(), variables, cap).all(axis=1)
    sat = model_table(pi.lit_lists(), variables, cap)[g_rows]
    return _maximal(frozenset(np.flatnonzero(row).tolist()) for row in sat)


def max_consistent_subsets_search(pi: Formula, gamma: Formula) -> list[frozenset[int]]:
    """Max(pi, gamma) by SAT search over clause subsets, without enumerating models.

    Each round finds a consistent subset not contained in any subset found
    so far and grows it clause by clause to a maximal one.
    """
    _check_revisor(gamma)
    cl = pi.lit_lists()
    g = gamma.lit_lists()
    base = max(pi.universe, gamma.universe)
    sel = {i: base + 1 + i for i in pi.ids()}
    # selector s_i forces clause i
    guarded = [(-sel[i],) + cl[i] for i in pi.ids()]
    blocks: list[tuple[int, ...]] = []
    found: list[frozenset[int]] = []
    while True:
        m = solve_lits(g + guarded + blocks)
        if m is None:
            return sorted(found, key=lambda s: sorted(s))
        current = {i for i in pi.ids() if any(m[abs(l)] == (l > 0) for l in cl[i])}
        for i in pi.ids():
            if i not in current and solve_lits(g + [cl[j] for j in sorted(current | {i})]) is not None:
                current.add(i)
        current = frozenset(current)
        found.append(current)
        blocks.append(tuple(sel[i] for i in pi.ids() if i not in current))


@dataclass(frozen=True)
class RevisionOutcome:
    """Result of revising a formula; ``models`` is over variables 1..universe."""

    maximal_subsets: tuple[frozenset[int], ...]
    models: tuple[Assignment, ...]
    universe: int

    def model_predicate(self, omega) -> bool:
        return Assignment(dict(omega), self.universe) in self._model_set

    @property
    def _model_set(self) -> frozenset[Assignment]:
        return frozenset(self.models)

    def equivalent_to(self, f: Formula) -> bool:
        if f.universe > self.universe:
            return False
        return self._model_set == frozenset(enumerate_models(f, self.universe))


def revise(pi: Formula, gamma: Formula, cap: int = MODEL_CAP) -> RevisionOutcome:
    """``pi * gamma``; both the subset-based and model-based routes must agree."""
    _check_revisor(gamma)
    n = max(pi.universe, gamma.universe)
    variables = list(range(1, n + 1))
    g_rows = np.flatnonzero(model_table(gamma.lit_lists(), variables, cap).all(axis=1))
    sat = model_table(pi.lit_lists(), variables, cap)
    subsets = {r: frozenset(np.flatnonzero(sat[r]).tolist()) for r in g_rows.tolist()}
    maximal = set(_maximal(subsets.values()))
    by_models = [r for r, s in subsets.items() if s in maximal]

    searched = max_consistent_subsets_search(pi, gamma)
    masks = [np.isin(np.arange(len(pi)), sorted(m)) for m in searched]
    by_subsets = [r for r in g_rows.tolist()
                  if any(sat[r][mask].all() for mask in masks)]
    if set(maximal) != set(searched) or by_models != by_subsets:
        raise AssertionError("subset-based and model-based revision disagree")
    models = tuple(Assignment.from_bits(n, r) for r in by_models)
    return RevisionOutcome(tuple(searched), models, n)


def cond_witness(pi: Formula, cid: int) -> WitnessPair | None:
    """Models ``w, w'`` with ``S(w) - S(w') == {cid}``, or None.

    One satisfiability call over two disjoint copies of the variables;
    an auxiliary variable per other clause records that ``w`` satisfies it,
    which then forces ``w'`` to satisfy it too.
    """
    pi.check_id(cid)
    n = pi.universe
    cl = pi.lit_lists()

    def shifted(lit):
        return lit + n if lit > 0 else lit - n

    enc = [cl[cid]] + [(-shifted(l),) for l in cl[cid]]
    aux = 2 * n
    for j, c in enumerate(cl):
        if j == cid:
            continue
        aux += 1
        enc.extend((-l, aux) for l in c)
        enc.append((-aux,) + tuple(shifted(l) for l in c))
    m = solve_lits(enc, aux)
    if m is None:
        return None
    w = Assignment.from_true_set(n, (v for v in range(1, n + 1) if m[v]))
    w2 = Assignment.from_true_set(n, (v for v in range(1, n + 1) if m[v + n]))
    return WitnessPair(w, w2)


def is_clause_cond_redundant(pi: Formula, cid: int) -> bool:
    return cond_witness(pi, cid) is None


def cond_redundant_clauses(pi: Formula) -> list[int]:
    return [i for i in pi.ids() if cond_witness(pi, i) is None]


def is_formula_cond_redundant(pi: Formula) -> bool:
    return any(cond_witness(pi, i) is None for i in pi.ids())
