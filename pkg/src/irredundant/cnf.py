"""Literals, clauses, formulas and assignments.

Literals are non-zero signed integers in the DIMACS convention: variable
``v`` appears positively as ``v`` and negatively as ``-v``.  A clause is a
canonically ordered tuple of literals; a formula is an ordered set of
distinct clauses whose position is the clause id.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

from .errors import ScopeError, TautologyError, UnknownClauseId


def lit_var(lit: int) -> int:
    return lit if lit > 0 else -lit


def lit_positive(lit: int) -> bool:
    return lit > 0


def _lit_key(lit: int):
    # ascending variable, negative before positive
    return (abs(lit), lit > 0)


class Clause:
    """A non-tautological disjunction of literals in canonical order."""

    __slots__ = ("lits", "_hash")

    def __init__(self, lits: tuple[int, ...]):
        # callers go through mk_clause; this constructor trusts its input
        self.lits = lits
        self._hash = hash(lits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lits)

    def __len__(self) -> int:
        return len(self.lits)

    def __contains__(self, lit) -> bool:
        return lit in self.lits

    def __eq__(self, other) -> bool:
        if isinstance(other, Clause):
            return self.lits == other.lits
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Clause({list(self.lits)})"

    def __str__(self) -> str:
        if not self.lits:
            return "⊥"
        return " ∨ ".join(f"x{l}" if l > 0 else f"¬x{-l}" for l in self.lits)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for l in self.lits)

    @property
    def is_empty(self) -> bool:
        return not self.lits

    def satisfied_by(self, model: Mapping[int, bool]) -> bool:
        return any(model[abs(l)] == (l > 0) for l in self.lits)

    def negation(self) -> list[tuple[int]]:
        """Unit clauses whose conjunction is equivalent to the negated clause."""
        return [(-l,) for l in self.lits]


def mk_clause(literals: Iterable[int], line: int | None = None) -> Clause:
    lits = set()
    for l in literals:
        l = int(l)
        if l == 0:
            raise ValueError("0 is not a literal")
        lits.add(l)
    for l in lits:
        if -l in lits:
            raise TautologyError(sorted(lits, key=_lit_key), line=line)
    return Clause(tuple(sorted(lits, key=_lit_key)))


def _as_clause(c) -> Clause:
    return c if isinstance(c, Clause) else mk_clause(c)


class Formula:
    """An immutable ordered set of clauses over variables ``1..universe``.

    Duplicate clauses collapse onto the first occurrence; clause ids are
    the insertion ranks after that deduplication.  ``lines`` optionally
    records the source line of each clause and does not take part in
    equality.
    """

    __slots__ = ("clauses", "universe", "lines", "duplicates", "_index")

    def __init__(self, clauses: Iterable = (), universe: int | None = None,
                 lines: Iterable[int] | None = None):
        kept: list[Clause] = []
        index: dict[Clause, int] = {}
        kept_lines: list[int] = []
        duplicates: list[tuple[int, int]] = []
        line_iter = iter(lines) if lines is not None else None
        for raw in clauses:
            c = _as_clause(raw)
            line = next(line_iter) if line_iter is not None else None
            if c in index:
                duplicates.append((index[c], line))
                continue
            index[c] = len(kept)
            kept.append(c)
            kept_lines.append(line)
        top = max((abs(l) for c in kept for l in c.lits), default=0)
        if universe is None:
            universe = top
        elif universe < top:
            raise ScopeError(f"universe {universe} smaller than variable {top}")
        self.clauses: tuple[Clause, ...] = tuple(kept)
        self.universe: int = universe
        self.lines = tuple(kept_lines) if line_iter is not None else None
        # (first id, line of the repeat) for every collapsed input clause
        self.duplicates: tuple[tuple[int, int | None], ...] = tuple(duplicates)
        self._index = index

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __getitem__(self, cid: int) -> Clause:
        if not isinstance(cid, int) or not 0 <= cid < len(self.clauses):
            raise UnknownClauseId(cid)
        return self.clauses[cid]

    def __contains__(self, clause) -> bool:
        return _as_clause(clause) in self._index

    def __eq__(self, other) -> bool:
        if isinstance(other, Formula):
            return self.clauses == other.clauses and self.universe == other.universe
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.clauses, self.universe))

    def __repr__(self) -> str:
        body = ", ".join(str(list(c.lits)) for c in self.clauses)
        return f"Formula([{body}], universe={self.universe})"

    def ids(self) -> range:
        return range(len(self.clauses))

    def id_of(self, clause) -> int:
        try:
            return self._index[_as_clause(clause)]
        except KeyError:
            raise UnknownClauseId(clause) from None

    def check_id(self, cid: int) -> int:
        self[cid]
        return cid

    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for c in self.clauses for l in c.lits)

    def lit_lists(self, ids: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        if ids is None:
            return [c.lits for c in self.clauses]
        return [self[i].lits for i in ids]

    def subset(self, ids: Iterable[int]) -> Formula:
        """The sub-formula made of ``ids``, kept in ascending id order."""
        chosen = sorted({self.check_id(i) for i in ids})
        return Formula((self.clauses[i] for i in chosen), universe=self.universe)

    def without(self, ids: int | Iterable[int]) -> Formula:
        if isinstance(ids, int):
            ids = (ids,)
        drop = {self.check_id(i) for i in ids}
        return self.subset(i for i in self.ids() if i not in drop)

    def ids_within(self, other: Formula) -> set[int] | None:
        """Ids in ``other`` of this formula's clauses, or None if not a subset."""
        out = set()
        for c in self.clauses:
            cid = other._index.get(c)
            if cid is None:
                return None
            out.add(cid)
        return out

    def extended(self, clauses: Iterable, universe: int | None = None) -> Formula:
        extra = [_as_clause(c) for c in clauses]
        top = max([self.universe] + [abs(l) for c in extra for l in c.lits])
        return Formula(self.clauses + tuple(extra), universe=max(top, universe or 0))

    def with_universe(self, universe: int) -> Formula:
        return Formula(self.clauses, universe=universe)


class PartialAssignment(Mapping):
    """Truth values for an explicit set of variables."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[int, bool] | Iterable[tuple[int, bool]]):
        vals = dict(values)
        for v in vals:
            if not isinstance(v, int) or v < 1:
                raise ScopeError(f"not a variable: {v!r}")
        self._values = {v: bool(vals[v]) for v in sorted(vals)}

    @classmethod
    def from_literals(cls, lits: Iterable[int]):
        return cls({abs(l): l > 0 for l in lits})

    def __getitem__(self, v: int) -> bool:
        return self._values[v]

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other):
        if isinstance(other, PartialAssignment):
            return type(self) is type(other) and self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._values.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._values})"

    @property
    def scope(self) -> frozenset[int]:
        return frozenset(self._values)

    def literals(self) -> list[int]:
        return [v if b else -v for v, b in self._values.items()]

    def true_vars(self) -> list[int]:
        return [v for v, b in self._values.items() if b]


class Assignment(PartialAssignment):
    """A total assignment over variables ``1..universe``."""

    __slots__ = ()

    def __init__(self, values, universe: int | None = None):
        super().__init__(values)
        if universe is None:
            universe = max(self._values, default=0)
        if set(self._values) != set(range(1, universe + 1)):
            raise ScopeError(f"assignment must cover exactly 1..{universe}")

    @classmethod
    def from_true_set(cls, universe: int, true_vars: Iterable[int]) -> Assignment:
        t = set(true_vars)
        return cls({v: v in t for v in range(1, universe + 1)}, universe)

    @classmethod
    def from_bits(cls, universe: int, bits: int) -> Assignment:
        """Variable ``v`` takes bit ``universe - v`` (x1 is most significant)."""
        return cls({v: bool(bits >> (universe - v) & 1) for v in range(1, universe + 1)},
                   universe)

    @property
    def universe(self) -> int:
        return len(self._values)

    def satisfies(self, f: Formula | Clause) -> bool:
        if isinstance(f, Clause):
            return f.satisfied_by(self)
        return all(c.satisfied_by(self) for c in f)
