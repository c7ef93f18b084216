"""Redundancy relative to queries over a subset of the variables.

Two formulas are var-equivalent w.r.t. ``V`` when they entail the same
formulas built on ``V`` alone, which holds exactly when every assignment
over ``V`` extends to a model of one iff it extends to a model of the
other.  Everything here enumerates the ``2**|V|`` assignments, so ``V`` is
capped.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator

from .cnf import Formula, PartialAssignment, mk_clause
from .errors import CapExceeded, ScopeError
from .redundancy import _greedy
from .sat import solve_lits

VAR_CAP = 16


def parse_scope(text: str) -> frozenset[int]:
    """``"1,3,4"`` -> ``frozenset({1, 3, 4})``; the empty string is the empty scope."""
    text = text.strip()
    if not text:
        return frozenset()
    try:
        vs = frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise ScopeError(f"bad variable list {text!r}") from None
    if any(v < 1 for v in vs):
        raise ScopeError(f"bad variable list {text!r}")
    return vs


def _scope(v: Iterable[int], universe: int, cap: int) -> list[int]:
    vs = sorted(set(v))
    if vs and (vs[0] < 1 or vs[-1] > universe):
        raise ScopeError(f"scope {vs} not within variables 1..{universe}")
    if len(vs) > cap:
        raise CapExceeded(f"scope of {len(vs)} variables exceeds cap {cap}")
    return vs


def _cubes(vs: list[int]) -> Iterator[list[int]]:
    for signs in itertools.product((False, True), repeat=len(vs)):
        yield [x if s else -x for x, s in zip(vs, signs)]


def is_var_model(omega: PartialAssignment, pi: Formula) -> bool:
    if any(v > pi.universe for v in omega):
        raise ScopeError(f"assignment mentions variables outside 1..{pi.universe}")
    return solve_lits(pi.lit_lists() + [(l,) for l in omega.literals()]) is not None


def _var_models(cl, vs) -> list[bool]:
    return [solve_lits(cl + [(l,) for l in cube]) is not None for cube in _cubes(vs)]


def var_equivalent(p1: Formula, p2: Formula, v: Iterable[int], cap: int = VAR_CAP) -> bool:
    vs = _scope(v, max(p1.universe, p2.universe), cap)
    a, b = p1.lit_lists(), p2.lit_lists()
    for cube in _cubes(vs):
        units = [(l,) for l in cube]
        if (solve_lits(a + units) is None) != (solve_lits(b + units) is None):
            return False
    return True


def _var_witness(cl, i, vs) -> list[int] | None:
    # removing a clause can only add var-models, so check those of the rest
    rest = cl[:i] + cl[i + 1:]
    for cube in _cubes(vs):
        units = [(l,) for l in cube]
        if solve_lits(rest + units) is not None and solve_lits(cl + units) is None:
            return cube
    return None


def _clause_var_redundant(cl, i, vs) -> bool:
    return _var_witness(cl, i, vs) is None


def var_witness(pi: Formula, cid: int, v: Iterable[int], cap: int = VAR_CAP) -> PartialAssignment | None:
    """An assignment over ``v`` that extends to a model once ``cid`` is dropped but not before."""
    pi.check_id(cid)
    cube = _var_witness(pi.lit_lists(), cid, _scope(v, pi.universe, cap))
    return None if cube is None else PartialAssignment.from_literals(cube)


def is_clause_var_redundant(pi: Formula, cid: int, v: Iterable[int], cap: int = VAR_CAP) -> bool:
    pi.check_id(cid)
    vs = _scope(v, pi.universe, cap)
    return _clause_var_redundant(pi.lit_lists(), cid, vs)


def var_redundant_clauses(pi: Formula, v: Iterable[int], cap: int = VAR_CAP) -> list[int]:
    vs = _scope(v, pi.universe, cap)
    cl = pi.lit_lists()
    return [i for i in pi.ids() if _clause_var_redundant(cl, i, vs)]


def is_formula_var_redundant(pi: Formula, v: Iterable[int], cap: int = VAR_CAP) -> bool:
    vs = _scope(v, pi.universe, cap)
    cl = pi.lit_lists()
    return any(_clause_var_redundant(cl, i, vs) for i in pi.ids())


def forget(pi: Formula, v: Iterable[int], cap: int = VAR_CAP) -> Formula:
    """A formula over ``v`` only, var-equivalent to ``pi`` w.r.t. ``v``.

    Takes every clause mentioning all of ``v`` that ``pi`` entails (the
    negations of the assignments over ``v`` that are not var-models) and
    drops the redundant ones.
    """
    vs = _scope(v, pi.universe, cap)
    cl = pi.lit_lists()
    implied = []
    for cube, ok in zip(_cubes(vs), _var_models(cl, vs)):
        if not ok:
            implied.append(tuple(sorted((-l for l in cube), key=abs)))
    keep = _greedy(implied, range(len(implied)))
    return Formula((mk_clause(implied[i]) for i in sorted(keep)), universe=pi.universe)
