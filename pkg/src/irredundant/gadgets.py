"""Constructions that turn a satisfiability or QBF question into a redundancy one.

Each builder returns a :class:`GadgetOutput`.  Fresh variables are numbered
contiguously above the input universe, and their roles are recorded in
``fresh_vars`` so that instances can be written out with ground-truth
labels.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .cnf import Assignment, Formula, mk_clause
from .errors import PreconditionError, SharedVariablesError


@dataclass(frozen=True)
class GadgetOutput:
    formula: Formula
    fresh_vars: dict[str, int]
    distinguished: frozenset[int]
    params: dict[str, int] = field(default_factory=dict)
    # named clause-id groups, e.g. the five blocks of the size gadget
    parts: dict[str, tuple[int, ...]] = field(default_factory=dict)
    scope: frozenset[int] | None = None


class _Fresh:
    def __init__(self, start: int):
        self.next = start + 1
        self.roles: dict[str, int] = {}

    def __call__(self, role: str) -> int:
        v = self.next
        self.next += 1
        self.roles[role] = v
        return v

    @property
    def top(self) -> int:
        return self.next - 1


class _Builder:
    def __init__(self):
        self.clauses = []
        self.parts: dict[str, list[int]] = {}

    def add(self, part: str, lits: Iterable[int]) -> int:
        cid = len(self.clauses)
        self.clauses.append(mk_clause(lits))
        self.parts.setdefault(part, []).append(cid)
        return cid

    def formula(self, universe: int) -> Formula:
        f = Formula(self.clauses, universe=universe)
        assert len(f) == len(self.clauses), "gadget clauses must be distinct"
        return f

    def frozen_parts(self) -> dict[str, tuple[int, ...]]:
        return {k: tuple(v) for k, v in self.parts.items()}


def _guarded(g: Formula, fresh: _Fresh, prefix: str) -> list[tuple[int, tuple[int, ...]]]:
    return [(fresh(f"{prefix}{i}"), c.lits) for i, c in enumerate(g, start=1)]


def irredundant_version(g: Formula) -> GadgetOutput:
    """``{¬c_i ∨ γ_i}``: every clause becomes necessary."""
    if not len(g):
        raise PreconditionError("irredundant version of an empty formula")
    fresh = _Fresh(g.universe)
    b = _Builder()
    for c, lits in _guarded(g, fresh, "c"):
        b.add("guarded", (-c,) + lits)
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset(), {"m": len(g)},
                        b.frozen_parts())


def witness_model(g: Formula, out: GadgetOutput, i: int) -> Assignment:
    """The model falsifying exactly the ``i``-th (1-based) guarded clause.

    It sets ``c_i`` true, every other selector false and every literal of
    ``γ_i`` false; all remaining variables are false.
    """
    if not 1 <= i <= len(g):
        raise IndexError(f"clause index {i} outside 1..{len(g)}")
    true = {out.fresh_vars[f"c{i}"]}
    true.update(-l for l in g[i - 1].lits if l < 0)
    return Assignment.from_true_set(out.formula.universe, true)


def sat_gadget(g: Formula) -> GadgetOutput:
    """``Γ[C] ∪ {¬c_1 ∨ … ∨ ¬c_m ∨ ¬a}``; the wide clause is redundant iff ``g`` is unsatisfiable."""
    if not len(g):
        raise PreconditionError("sat gadget of an empty formula")
    fresh = _Fresh(g.universe)
    b = _Builder()
    sel = []
    for c, lits in _guarded(g, fresh, "c"):
        b.add("guarded", (-c,) + lits)
        sel.append(c)
    a = fresh("a")
    wide = b.add("wide", [-c for c in sel] + [-a])
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset({wide}), {"m": len(g)},
                        b.frozen_parts())


def dp_pair(g: Formula, s: Formula) -> tuple[GadgetOutput, GadgetOutput]:
    """``(Γ[C,a] ∪ Σ[D,e], Γ[C,a] ∪ Σ[D])``.

    The second is an IES of the first iff ``g`` is satisfiable and ``s``
    is not.
    """
    shared = g.variables() & s.variables()
    if shared:
        raise SharedVariablesError(f"formulas share variables {sorted(shared)}")
    if not len(g) or not len(s):
        raise PreconditionError("both formulas must be non-empty")
    fresh = _Fresh(max(g.universe, s.universe))
    b = _Builder()
    cs = []
    for c, lits in _guarded(g, fresh, "c"):
        b.add("gamma_guarded", (-c,) + lits)
        cs.append(c)
    a = fresh("a")
    b.add("gamma_wide", [-c for c in cs] + [-a])
    ds = []
    for d, lits in _guarded(s, fresh, "d"):
        b.add("sigma_guarded", (-d,) + lits)
        ds.append(d)
    e = fresh("e")
    wide = b.add("sigma_wide", [-d for d in ds] + [-e])
    full = b.formula(fresh.top)
    params = {"m": len(g), "r": len(s)}
    big = GadgetOutput(full, fresh.roles, frozenset({wide}), params, b.frozen_parts())
    parts = {k: v for k, v in b.frozen_parts().items() if k != "sigma_wide"}
    small = GadgetOutput(full.without(wide), fresh.roles, frozenset(), params, parts)
    return big, small


def _check_quantified(g: Formula, x, y) -> tuple[list[int], list[int]]:
    xs, ys = sorted(set(x)), sorted(set(y))
    if set(xs) & set(ys):
        raise PreconditionError("X and Y overlap")
    stray = g.variables() - set(xs) - set(ys)
    if stray:
        raise PreconditionError(f"variables {sorted(stray)} are neither in X nor in Y")
    if any(v < 1 for v in xs + ys):
        raise PreconditionError("variables are positive integers")
    return xs, ys


def size_gadget(g: Formula, x: Iterable[int], y: Iterable[int],
                satisfiable_mode: bool = False) -> GadgetOutput:
    """Formula with an equivalent subset of at most ``k`` clauses iff ∃X∀Y.¬g.

    Blocks: units ``x_i^j, z_i^j``; chains ``x_i^1..x_i^r → x_i`` and
    ``z_i^1..z_i^r → z_i``; ``x_i → w_i``, ``z_i → w_i``;
    ``w_1..w_n → γ_j'`` where ``γ_j'`` has every positive ``x_i`` replaced
    by ``¬z_i``; and ``t`` units ``v_j`` with their joint negation.  In
    ``satisfiable_mode`` a fresh ``u`` joins every clause.
    """
    xs, ys = _check_quantified(g, x, y)
    n, m = len(xs), len(g)
    if n < 1 or m < 1:
        raise PreconditionError("size gadget needs at least one X variable and one clause")
    r = m + 1
    k = (r + 2) * n + m
    t = k + 1
    fresh = _Fresh(max([g.universe] + xs + ys))
    xj = {(i, j): fresh(f"x{i}^{j}") for i in range(1, n + 1) for j in range(1, r + 1)}
    zj = {(i, j): fresh(f"z{i}^{j}") for i in range(1, n + 1) for j in range(1, r + 1)}
    z = {i: fresh(f"z{i}") for i in range(1, n + 1)}
    w = {i: fresh(f"w{i}") for i in range(1, n + 1)}
    v = [fresh(f"v{j}") for j in range(1, t + 1)]
    u = fresh("u") if satisfiable_mode else None
    tail = (u,) if u else ()
    zx = {xs[i - 1]: z[i] for i in range(1, n + 1)}

    b = _Builder()
    for i in range(1, n + 1):
        for j in range(1, r + 1):
            b.add("units", (xj[i, j],) + tail)
            b.add("units", (zj[i, j],) + tail)
    for i in range(1, n + 1):
        b.add("chains", [-xj[i, j] for j in range(1, r + 1)] + [xs[i - 1]] + list(tail))
        b.add("chains", [-zj[i, j] for j in range(1, r + 1)] + [z[i]] + list(tail))
    for i in range(1, n + 1):
        b.add("links", (-xs[i - 1], w[i]) + tail)
        b.add("links", (-z[i], w[i]) + tail)
    for c in g:
        renamed = [-zx[l] if l in zx else l for l in c.lits]
        b.add("matrix", [-w[i] for i in range(1, n + 1)] + renamed + list(tail))
    for vj in v:
        b.add("contradiction", (vj,) + tail)
    b.add("contradiction", [-vj for vj in v] + list(tail))

    parts = b.frozen_parts()
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset(parts["matrix"]),
                        {"n": n, "m": m, "r": r, "k": k, "t": t}, parts)


def usefulness_gadget(g: Formula, x: Iterable[int], y: Iterable[int]) -> GadgetOutput:
    """``{x_i, ¬x_i} ∪ {w} ∪ {w → γ_i}``; ``w`` is in some IES iff ∃X∀Y.¬g.

    The equivalence needs ``x`` non-empty or ``g`` unsatisfiable: with no
    pair ``x_i, ¬x_i`` the result is satisfiable and ``w`` is necessary.
    """
    xs, _ = _check_quantified(g, x, y)
    fresh = _Fresh(max([g.universe] + xs + list(y)))
    w = fresh("w")
    b = _Builder()
    for xi in xs:
        b.add("literals", (xi,))
        b.add("literals", (-xi,))
    wid = b.add("w", (w,))
    for c in g:
        b.add("guarded", (-w,) + c.lits)
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset({wid}),
                        {"n": len(xs), "m": len(g)}, b.frozen_parts())


def var_gadget(s: Formula, x: Iterable[int]) -> GadgetOutput:
    """``(¬a ∨ Σ) ∪ {a}``; ``a`` is var-redundant w.r.t. X iff ∀X∃Y.Σ."""
    xs = frozenset(x)
    if not xs <= s.variables():
        raise PreconditionError(f"X variables {sorted(xs - s.variables())} do not occur in the formula")
    fresh = _Fresh(s.universe)
    a = fresh("a")
    b = _Builder()
    for c in s:
        b.add("guarded", (-a,) + c.lits)
    aid = b.add("a", (a,))
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset({aid}),
                        {"m": len(s)}, b.frozen_parts(), scope=xs)


def _no_empty_clause(p: Formula) -> None:
    if any(c.is_empty for c in p):
        raise PreconditionError("formula contains the empty clause")


def cond_clause_gadget(p: Formula) -> GadgetOutput:
    """``(a ∨ Π) ∪ {a}``; ``a`` is conditionally redundant iff ``p`` is unsatisfiable."""
    _no_empty_clause(p)
    fresh = _Fresh(p.universe)
    a = fresh("a")
    b = _Builder()
    for c in p:
        b.add("weakened", c.lits + (a,))
    aid = b.add("a", (a,))
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset({aid}),
                        {"m": len(p)}, b.frozen_parts())


def cond_set_gadget(p: Formula) -> GadgetOutput:
    """``{¬c_i ∨ a ∨ γ_i} ∪ {c_i ∨ a} ∪ {a}``; redundant iff ``p`` is unsatisfiable."""
    if not len(p):
        raise PreconditionError("conditional set gadget of an empty formula")
    fresh = _Fresh(p.universe)
    sel = [fresh(f"c{i}") for i in range(1, len(p) + 1)]
    a = fresh("a")
    b = _Builder()
    for ci, c in zip(sel, p):
        b.add("guarded", (-ci, a) + c.lits)
    for ci in sel:
        b.add("selectors", (ci, a))
    aid = b.add("a", (a,))
    return GadgetOutput(b.formula(fresh.top), fresh.roles, frozenset({aid}),
                        {"m": len(p)}, b.frozen_parts())


def exponential_family(n: int) -> Formula:
    """``n`` variable-disjoint copies of ``{a∨¬b, ¬a∨b, a∨c, b∨c}``; it has ``2**n`` IESs."""
    if n < 1:
        raise PreconditionError("n must be at least 1")
    clauses = []
    for i in range(n):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        clauses += [(a, -b), (-a, b), (a, c), (b, c)]
    return Formula(clauses, universe=3 * n)
