"""Clause redundancy and irredundant equivalent subsets (IESs).

A clause is redundant in a formula when the other clauses entail it.  An
IES of a formula is a subset that is equivalent to it and contains no
redundant clause.  Clause sets are passed around as sets of clause ids of
the analysed formula.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from .cnf import Formula
from .sat import entails_lits, solve_lits

IES_CAP = 256

Lits = Sequence[tuple[int, ...]]


class ClauseStatus(enum.Enum):
    NECESSARY = "necessary"
    USEFUL = "useful_not_necessary"
    USELESS = "useless"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassificationReport:
    statuses: dict[int, ClauseStatus]
    necessary_set: frozenset[int]
    # None when counting was skipped; ies_count_capped marks a lower bound
    ies_count_hint: int | None = None
    ies_count_capped: bool = False


@dataclass(frozen=True)
class IesReport:
    ies_list: tuple[frozenset[int], ...]
    unique: bool
    truncated: bool

    def __len__(self) -> int:
        return len(self.ies_list)


def _redundant_in(cl: Lits, ids: Iterable[int], i: int) -> bool:
    return entails_lits([cl[j] for j in ids if j != i], cl[i])


def is_clause_redundant(pi: Formula, cid: int) -> bool:
    pi.check_id(cid)
    return _redundant_in(pi.lit_lists(), pi.ids(), cid)


def is_clause_necessary(pi: Formula, cid: int) -> bool:
    return not is_clause_redundant(pi, cid)


def redundant_clauses(pi: Formula) -> list[int]:
    cl = pi.lit_lists()
    return [i for i in pi.ids() if _redundant_in(cl, pi.ids(), i)]


def is_formula_redundant(pi: Formula) -> bool:
    cl = pi.lit_lists()
    return any(_redundant_in(cl, pi.ids(), i) for i in pi.ids())


def necessary_set(pi: Formula) -> frozenset[int]:
    cl = pi.lit_lists()
    return frozenset(i for i in pi.ids() if not _redundant_in(cl, pi.ids(), i))


def _greedy(cl: Lits, ids: Sequence[int], keep: Iterable[int] = ()) -> set[int]:
    current = list(ids)
    keep = set(keep)
    changed = True
    while changed:
        changed = False
        for i in list(current):
            if i in keep:
                continue
            rest = [j for j in current if j != i]
            if entails_lits([cl[j] for j in rest], cl[i]):
                current = rest
                changed = True
    return set(current)


def greedy_ies(pi: Formula, order: Sequence[int] | None = None) -> set[int]:
    """Drop clauses entailed by the remainder, scanning in ``order``.

    Passes repeat until one removes nothing.  Different orders can give
    different IESs.
    """
    if order is None:
        order = list(pi.ids())
    elif sorted(order) != list(pi.ids()):
        raise ValueError(f"order {list(order)} is not a permutation of the clause ids")
    return _greedy(pi.lit_lists(), order)


def is_ies(candidate: Formula, pi: Formula) -> bool:
    ids = candidate.ids_within(pi)
    if ids is None:
        return False
    cl = pi.lit_lists()
    sub = [cl[i] for i in sorted(ids)]
    if not all(i in ids or entails_lits(sub, cl[i]) for i in pi.ids()):
        return False
    return not is_formula_redundant(candidate)


def is_ies_ids(pi: Formula, ids: Iterable[int]) -> bool:
    return is_ies(pi.subset(ids), pi)


def enumerate_ies(pi: Formula, cap: int = IES_CAP) -> IesReport:
    """All IESs of ``pi``, at most ``cap`` of them.

    Depth-first search over equivalent subsets: at each node the first
    redundant clause that is not already committed is either removed or
    committed to stay.  Nodes where only committed clauses remain
    redundant cannot reach an IES and are abandoned.
    """
    cl = pi.lit_lists()
    found: set[frozenset[int]] = set()
    truncated = False

    def visit(current: frozenset[int], kept: frozenset[int]) -> None:
        nonlocal truncated
        if truncated:
            return
        order = sorted(current)
        redundant = [i for i in order if _redundant_in(cl, order, i)]
        if not redundant:
            if current not in found:
                if len(found) >= cap:
                    truncated = True
                    return
                found.add(current)
            return
        free = [i for i in redundant if i not in kept]
        if not free:
            return
        d = free[0]
        visit(current - {d}, kept)
        visit(current, kept | {d})

    visit(frozenset(pi.ids()), frozenset())
    ies_list = tuple(sorted(found, key=lambda s: sorted(s)))
    return IesReport(ies_list, unique=len(ies_list) == 1 and not truncated, truncated=truncated)


def has_unique_ies(pi: Formula) -> bool:
    cl = pi.lit_lists()
    nec = necessary_set(pi)
    core = [cl[i] for i in sorted(nec)]
    return all(i in nec or entails_lits(core, cl[i]) for i in pi.ids())


def two_ies_witness(pi: Formula) -> tuple[int, int] | None:
    """First pair of individually removable clauses that cannot both go.

    Finding a pair proves at least two IESs exist; absence proves nothing.
    """
    cl = pi.lit_lists()
    ids = list(pi.ids())
    red = [i for i in ids if _redundant_in(cl, ids, i)]
    for a_pos, a in enumerate(red):
        for b in red[a_pos + 1:]:
            rest = [cl[j] for j in ids if j != a and j != b]
            if not (entails_lits(rest, cl[a]) and entails_lits(rest, cl[b])):
                return a, b
    return None


# ---------------------------------------------------------------- usefulness


def _core(cl: Lits, ids: Sequence[int], target: tuple[int, ...]) -> list[int]:
    """A minimal subset of ``ids`` that still entails ``target``."""
    core = list(ids)
    for i in list(core):
        rest = [j for j in core if j != i]
        if entails_lits([cl[j] for j in rest], target):
            core = rest
    return core


def useful_witness(pi: Formula, cid: int) -> frozenset[int] | None:
    """An IES of ``pi`` containing clause ``cid``, or None if it is useless.

    Searches equivalent subsets that keep ``cid``.  Whenever the other
    clauses of the current subset still entail it, some clause of a
    minimal entailing core has to go, and it has to be redundant in the
    current subset; only those removals are branched on.
    """
    pi.check_id(cid)
    cl = pi.lit_lists()
    target = cl[cid]
    seen: set[frozenset[int]] = set()
    stack = [frozenset(pi.ids())]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        others = sorted(current - {cid})
        if not entails_lits([cl[j] for j in others], target):
            return frozenset(_greedy(cl, sorted(current), keep={cid}))
        order = sorted(current)
        for j in reversed(_core(cl, others, target)):
            if _redundant_in(cl, order, j):
                stack.append(current - {j})
    return None


def is_clause_useful(pi: Formula, cid: int) -> bool:
    return useful_witness(pi, cid) is not None


def classify_clauses(pi: Formula, ies_cap: int | None = IES_CAP) -> ClassificationReport:
    """Necessary / useful-but-not-necessary / useless status of every clause.

    ``ies_cap`` bounds the IES count reported as a hint; None skips it.
    """
    nec = necessary_set(pi)
    statuses = {}
    unique = has_unique_ies(pi)
    for i in pi.ids():
        if i in nec:
            statuses[i] = ClauseStatus.NECESSARY
        elif not unique and is_clause_useful(pi, i):
            statuses[i] = ClauseStatus.USEFUL
        else:
            statuses[i] = ClauseStatus.USELESS
    hint, capped = None, False
    if unique:
        hint = 1
    elif ies_cap is not None:
        rep = enumerate_ies(pi, ies_cap)
        hint, capped = len(rep), rep.truncated
    return ClassificationReport(statuses, nec, hint, capped)


# ---------------------------------------------------------------- minimum size


def _components(cl: Lits, ids: Sequence[int]) -> list[list[int]]:
    """Group clause ids into classes connected through shared variables."""
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in ids:
        node = ("c", i)
        find(node)
        for l in cl[i]:
            a, b = find(node), find(("v", abs(l)))
            if a != b:
                parent[a] = b
    groups: dict = {}
    for i in ids:
        groups.setdefault(find(("c", i)), []).append(i)
    return sorted(groups.values())


def _min_hitting_set(sets: list[frozenset[int]], universe: list[int],
                     forced: Iterable[int]) -> set[int]:
    if not sets:
        return set(forced)
    pos = {v: k for k, v in enumerate(universe)}
    a = np.zeros((len(sets), len(universe)))
    for r, s in enumerate(sets):
        for v in s:
            a[r, pos[v]] = 1
    lower = np.zeros(len(universe))
    for v in forced:
        lower[pos[v]] = 1
    res = milp(c=np.ones(len(universe)),
               constraints=LinearConstraint(a, lb=np.ones(len(sets)), ub=np.inf),
               integrality=np.ones(len(universe)),
               bounds=Bounds(lower, np.ones(len(universe))))
    if not res.success:  # pragma: no cover - the program is always feasible
        raise RuntimeError(f"hitting set solver failed: {res.message}")
    return {universe[k] for k in np.flatnonzero(res.x > 0.5)}


def _min_equivalent(cl: Lits, ids: list[int], forced: set[int], bound: int | None):
    """Smallest subset of ``ids`` entailing all of them (implicit hitting sets).

    A model of a candidate subset that falsifies some clause is grown until
    its satisfied set is maximal; every equivalent subset must contain one
    of the clauses it falsifies.  Returns None once the lower bound
    exceeds ``bound``.
    """
    to_hit: list[frozenset[int]] = []
    top = max((abs(l) for j in ids for l in cl[j]), default=0)
    while True:
        hit = _min_hitting_set(to_hit, ids, forced)
        if bound is not None and len(hit) > bound:
            return None
        sub = [cl[j] for j in sorted(hit)]
        for g in ids:
            if g in hit:
                continue
            neg = [(-l,) for l in cl[g]]
            model = solve_lits(sub + neg, top)
            if model is not None:
                break
        else:
            return hit

        def sat_ids(m):
            return {j for j in ids if any(m[abs(l)] == (l > 0) for l in cl[j])}

        satisfied = sat_ids(model)
        for j in ids:
            if j in satisfied:
                continue
            m = solve_lits([cl[k] for k in sorted(satisfied | {j})] + neg, top)
            if m is not None:
                satisfied = sat_ids(m)
        to_hit.append(frozenset(ids) - satisfied)


def min_equivalent_subset(pi: Formula, bound: int | None = None) -> frozenset[int] | None:
    """A minimum-cardinality subset of ``pi`` equivalent to it.

    Such a subset is always irredundant, hence a smallest IES.  With
    ``bound`` the search stops early and returns None as soon as no
    subset of at most ``bound`` clauses can exist.
    """
    cl = pi.lit_lists()
    ids = list(pi.ids())
    if not ids:
        return frozenset()
    nec = set(necessary_set(pi))
    if bound is not None and len(nec) > bound:
        return None
    comps = _components(cl, ids)
    unsat = [c for c in comps if solve_lits([cl[j] for j in c]) is None]
    if unsat:
        # an unsatisfiable subset is unsatisfiable within one component
        best = None
        for comp in unsat:
            limit = bound
            if best is not None:
                limit = len(best) - 1 if bound is None else min(bound, len(best) - 1)
            got = _min_equivalent(cl, comp, nec & set(comp), limit)
            if got is not None and (best is None or len(got) < len(best)):
                best = got
        return None if best is None else frozenset(best)
    # satisfiable: variable-disjoint parts are minimised independently
    total: set[int] = set()
    for comp in comps:
        budget = None if bound is None else bound - len(total)
        got = _min_equivalent(cl, comp, nec & set(comp), budget)
        if got is None:
            return None
        total |= got
        if bound is not None and len(total) > bound:
            return None
    return frozenset(total)


def min_ies_size(pi: Formula) -> int:
    return len(min_equivalent_subset(pi))


def has_ies_of_size(pi: Formula, k: int) -> bool:
    return min_equivalent_subset(pi, bound=k) is not None
