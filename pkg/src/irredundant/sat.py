"""Satisfiability, entailment, equivalence and model enumeration.

Every analysis in the package reduces to calls into this module.  The
solver is a plain DPLL search with two watched literals and chronological
backtracking; branching follows ascending variable index with ``False``
tried first, so witness models are reproducible.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .cnf import Assignment, Clause, Formula, PartialAssignment
from .errors import CapExceeded, PreconditionError

MODEL_CAP = 20
QBF_CAP = 16


class _Dpll:
    def __init__(self, clauses: Iterable[Sequence[int]], nvars: int):
        self.nvars = nvars
        self.val = [0] * (nvars + 1)
        self.trail: list[int] = []
        self.qhead = 0
        self.watches: dict[int, list[int]] = {}
        self.clauses: list[list[int]] = []
        self.units: list[int] = []
        self.empty = False
        for c in clauses:
            c = list(dict.fromkeys(c))
            if not c:
                self.empty = True
            elif len(c) == 1:
                self.units.append(c[0])
            else:
                ci = len(self.clauses)
                self.clauses.append(c)
                self.watches.setdefault(c[0], []).append(ci)
                self.watches.setdefault(c[1], []).append(ci)

    def _value(self, lit: int) -> int:
        return self.val[lit] if lit > 0 else -self.val[-lit]

    def _assign(self, lit: int) -> None:
        self.val[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)

    def _propagate(self) -> bool:
        val = self.val
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            false_lit = -p
            watchers = self.watches.get(false_lit)
            if not watchers:
                continue
            kept = []
            k, n = 0, len(watchers)
            while k < n:
                ci = watchers[k]
                k += 1
                c = self.clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = val[first] if first > 0 else -val[-first]
                if fv == 1:
                    kept.append(ci)
                    continue
                for idx in range(2, len(c)):
                    q = c[idx]
                    if (val[q] if q > 0 else -val[-q]) != -1:
                        c[1], c[idx] = q, c[1]
                        self.watches.setdefault(q, []).append(ci)
                        break
                else:
                    kept.append(ci)
                    if fv == -1:
                        kept.extend(watchers[k:])
                        self.watches[false_lit] = kept
                        return False
                    self._assign(first)
            self.watches[false_lit] = kept
        return True

    def _undo(self, pos: int) -> None:
        for lit in self.trail[pos:]:
            self.val[abs(lit)] = 0
        del self.trail[pos:]
        self.qhead = pos

    def solve(self) -> list[bool] | None:
        if self.empty:
            return None
        for u in self.units:
            v = self._value(u)
            if v == -1:
                return None
            if v == 0:
                self._assign(u)
        if not self._propagate():
            return None
        # each entry: [trail position, decided literal, second branch taken]
        decisions: list[list] = []
        var = 1
        while True:
            while var <= self.nvars and self.val[var] != 0:
                var += 1
            if var > self.nvars:
                return [False] + [self.val[v] == 1 for v in range(1, self.nvars + 1)]
            decisions.append([len(self.trail), -var, False])
            self._assign(-var)
            while not self._propagate():
                while decisions and decisions[-1][2]:
                    decisions.pop()
                if not decisions:
                    return None
                pos, lit, _ = decisions[-1]
                self._undo(pos)
                decisions[-1] = [pos, -lit, True]
                self._assign(-lit)
                var = 1


def solve_lits(clauses: Iterable[Sequence[int]], nvars: int | None = None) -> list[bool] | None:
    """Solve raw literal lists; returns ``model[v]`` indexed from 1, or None."""
    clauses = [tuple(c) for c in clauses]
    top = max((abs(l) for c in clauses for l in c), default=0)
    nvars = top if nvars is None else max(nvars, top)
    return _Dpll(clauses, nvars).solve()


def sat_lits(clauses: Iterable[Sequence[int]]) -> bool:
    return solve_lits(clauses) is not None


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    model: Assignment | None = None

    @property
    def status(self) -> str:
        return "Sat" if self.satisfiable else "Unsat"

    def __bool__(self) -> bool:
        return self.satisfiable


def solve(f: Formula) -> SatResult:
    m = solve_lits(f.lit_lists(), f.universe)
    if m is None:
        return SatResult(False)
    return SatResult(True, Assignment.from_true_set(f.universe, (v for v in range(1, len(m)) if m[v])))


def entails_lits(pi: Iterable[Sequence[int]], gamma: Sequence[int]) -> bool:
    return solve_lits(list(pi) + [(-l,) for l in gamma]) is None


def entails(pi: Formula, gamma: Clause | Sequence[int]) -> bool:
    return entails_lits(pi.lit_lists(), tuple(gamma))


def entails_all_lits(pi: Sequence[Sequence[int]], gammas: Iterable[Sequence[int]]) -> bool:
    present = {tuple(c) for c in pi}
    return all(tuple(g) in present or entails_lits(pi, g) for g in gammas)


def equivalent(p1: Formula, p2: Formula) -> bool:
    a, b = p1.lit_lists(), p2.lit_lists()
    return entails_all_lits(a, b) and entails_all_lits(b, a)


def _universe_vars(f: Formula, universe) -> list[int]:
    if universe is None:
        return list(range(1, f.universe + 1))
    if isinstance(universe, int):
        return list(range(1, universe + 1))
    return sorted(set(universe))


def model_table(clauses: Sequence[Sequence[int]], variables: Sequence[int],
                cap: int = MODEL_CAP) -> np.ndarray:
    """Boolean matrix ``[assignment, clause]`` of clause satisfaction.

    Rows enumerate assignments over ``variables`` in lexicographic order
    with the first variable most significant and False before True.
    """
    n = len(variables)
    if n > cap:
        raise CapExceeded(f"{n} variables exceed enumeration cap {cap}")
    pos = {v: n - 1 - i for i, v in enumerate(variables)}
    rows = np.arange(1 << n, dtype=np.int64)
    out = np.zeros((1 << n, len(clauses)), dtype=bool)
    for j, c in enumerate(clauses):
        col = out[:, j]
        for l in c:
            if abs(l) not in pos:
                raise PreconditionError(f"variable {abs(l)} outside enumeration universe")
            bit = (rows >> pos[abs(l)]) & 1
            col |= bit.astype(bool) if l > 0 else ~bit.astype(bool)
    return out


def enumerate_models(f: Formula, universe=None, cap: int = MODEL_CAP) -> list[PartialAssignment]:
    """All satisfying assignments of ``f`` over ``universe``, lexicographically.

    ``universe`` is a variable count, an explicit variable set, or None for
    ``1..f.universe``.  The result holds :class:`Assignment` objects when
    the universe is ``1..n``.
    """
    variables = _universe_vars(f, universe)
    table = model_table(f.lit_lists(), variables, cap)
    good = np.flatnonzero(table.all(axis=1))
    n = len(variables)
    total = variables == list(range(1, n + 1))
    out = []
    for bits in good.tolist():
        vals = {v: bool(bits >> (n - 1 - i) & 1) for i, v in enumerate(variables)}
        out.append(Assignment(vals, n) if total else PartialAssignment(vals))
    return out


@dataclass(frozen=True)
class QbfInstance:
    """The closed formula ∃X ∀Y ¬matrix."""

    existentials: frozenset[int]
    universals: frozenset[int]
    matrix: Formula

    def __post_init__(self):
        object.__setattr__(self, "existentials", frozenset(self.existentials))
        object.__setattr__(self, "universals", frozenset(self.universals))
        if self.existentials & self.universals:
            raise PreconditionError("existential and universal variables overlap")
        stray = self.matrix.variables() - self.existentials - self.universals
        if stray:
            raise PreconditionError(f"matrix variables {sorted(stray)} are unquantified")


def eval_exists_forall(q: QbfInstance, cap: int = QBF_CAP) -> bool:
    """True iff some assignment to X leaves the matrix unsatisfiable."""
    xs = sorted(q.existentials)
    if len(xs) > cap:
        raise CapExceeded(f"{len(xs)} existential variables exceed cap {cap}")
    base = q.matrix.lit_lists()
    for values in itertools.product((False, True), repeat=len(xs)):
        fixed = [(x if b else -x,) for x, b in zip(xs, values)]
        if solve_lits(base + fixed) is None:
            return True
    return False
