"""DIMACS CNF reading and writing."""

from __future__ import annotations

import warnings

from .cnf import Formula, mk_clause
from .errors import ParseError, TautologyError


class DuplicateClauseWarning(UserWarning):
    pass


def parse_dimacs(text: bytes | str) -> Formula:
    """Parse DIMACS CNF text.

    Repeated clauses collapse onto their first occurrence and each repeat
    emits a :class:`DuplicateClauseWarning`.  The returned formula records
    the line on which each kept clause ends in ``Formula.lines``.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}") from None

    header = None
    clauses: list = []
    lines: list[int] = []
    current: list[int] = []
    start_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("second header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                nvars, nclauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if nvars < 0 or nclauses < 0:
                raise ParseError(f"malformed header {line!r}", lineno)
            header = (nvars, nclauses)
            continue
        if line.startswith("%"):
            # SATLIB benchmark trailer
            break
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", lineno) from None
            if lit == 0:
                try:
                    clauses.append(mk_clause(current, line=start_line or lineno))
                except TautologyError as e:
                    raise TautologyError(e.literals, line=start_line or lineno) from None
                lines.append(start_line or lineno)
                current = []
                start_line = None
                continue
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} out of declared range 1..{header[0]}", lineno)
            if start_line is None:
                start_line = lineno
            current.append(lit)

    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0", start_line)
    if len(clauses) != header[1]:
        warnings.warn(f"header declares {header[1]} clauses, found {len(clauses)}",
                      stacklevel=2)

    f = Formula(clauses, universe=header[0], lines=lines)
    for first, line in f.duplicates:
        warnings.warn(DuplicateClauseWarning(
            f"line {line}: duplicate of clause {first}, collapsed"), stacklevel=2)
    return f


def write_dimacs(f: Formula, comments: list[str] = ()) -> bytes:
    out = [f"c {c}" for c in comments]
    out.append(f"p cnf {f.universe} {len(f)}")
    out.extend(" ".join(map(str, c.lits + (0,))) for c in f)
    return ("\n".join(out) + "\n").encode()


def read_dimacs(path) -> Formula:
    with open(path, "rb") as fh:
        return parse_dimacs(fh.read())
