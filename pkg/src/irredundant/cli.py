"""Command-line front end.

Every subcommand builds a JSON-able report; ``--json`` prints it with
sorted keys, otherwise a text rendering of the same data is printed.
Verdicts live in the report only: the exit status is 0 on success, 2 on
parse or usage errors and 3 when an enumeration cap is exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from pathlib import Path

from . import gadgets
from .cnf import Formula
from .conditional import cond_witness, revise
from .dimacs import parse_dimacs, write_dimacs
from .errors import CapExceeded, RedundancyError
from .redundancy import (IES_CAP, ClauseStatus, _redundant_in, classify_clauses, enumerate_ies,
                         greedy_ies, has_unique_ies, min_equivalent_subset, necessary_set,
                         two_ies_witness, useful_witness)
from .sat import MODEL_CAP, QbfInstance, eval_exists_forall, solve, solve_lits
from .varred import VAR_CAP, forget, parse_scope, var_witness

SCHEMA_VERSION = 1
GEN_KINDS = ("irredundant", "sat", "dp", "size", "useful", "var", "condclause", "condset", "exp")


class UsageError(RedundancyError):
    pass


def _read(path: str) -> tuple[Formula, bytes]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(path).read_bytes()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_dimacs(data), data


def _input_info(f: Formula, data: bytes) -> dict:
    return {
        "sha256": hashlib.sha256(data).hexdigest(),
        "variables": f.universe,
        "clauses": len(f),
        "duplicates": [list(p) for p in f.duplicates],
    }


def _clause_rows(f: Formula, ids=None) -> list[dict]:
    ids = f.ids() if ids is None else ids
    return [{"id": i, "line": f.lines[i] if f.lines else None, "literals": list(f[i].lits)}
            for i in ids]


def _model(values, universe: int) -> list[int]:
    """Signed literals over 1..universe for a solver model or an assignment."""
    return [v if values[v] else -v for v in range(1, universe + 1)]


def _ids(s) -> list[int]:
    return sorted(s)


def _selected(f: Formula, args) -> list[int]:
    if args.clause is None:
        return list(f.ids())
    f.check_id(args.clause)
    return [args.clause]


def _order(f: Formula, text: str | None):
    if text is None:
        return None
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad order {text!r}") from None


# ---------------------------------------------------------------- commands


def cmd_check(f: Formula, args) -> tuple[list[dict], dict]:
    cl = f.lit_lists()
    rows = _clause_rows(f, _selected(f, args))
    for row in rows:
        i = row["id"]
        row["redundant"] = _redundant_in(cl, f.ids(), i)
        if args.witness and not row["redundant"]:
            # a model of the other clauses that falsifies this one
            rest = cl[:i] + cl[i + 1:] + [(-l,) for l in cl[i]]
            row["counter_model"] = _model(solve_lits(rest, f.universe), f.universe)
    result = {}
    if args.clause is None:
        red = [r["id"] for r in rows if r["redundant"]]
        result = {"redundant": bool(red), "redundant_ids": red,
                  "greedy_ies": _ids(greedy_ies(f, _order(f, args.order)))}
    return rows, result


def cmd_classify(f: Formula, args) -> tuple[list[dict], dict]:
    rep = classify_clauses(f, ies_cap=args.cap or IES_CAP)
    rows = _clause_rows(f, _selected(f, args))
    for row in rows:
        st = rep.statuses[row["id"]]
        row["status"] = st.value
        if args.witness and st is not ClauseStatus.USELESS:
            row["ies_witness"] = _ids(useful_witness(f, row["id"]))
    result = {"necessary_ids": _ids(rep.necessary_set), "ies_count": rep.ies_count_hint,
              "ies_count_capped": rep.ies_count_capped}
    return rows, result


def cmd_ies(f: Formula, args) -> tuple[list[dict], dict]:
    if not args.all:
        return [], {"ies": [_ids(greedy_ies(f, _order(f, args.order)))], "count": 1, "all": False}
    cap = args.cap or IES_CAP
    rep = enumerate_ies(f, cap)
    if rep.truncated:
        raise CapExceeded(f"more than {cap} IESs; raise --cap")
    return [], {"ies": [_ids(s) for s in rep.ies_list], "count": len(rep), "all": True}


def cmd_unique(f: Formula, args) -> tuple[list[dict], dict]:
    nec = necessary_set(f)
    unique = has_unique_ies(f)
    result = {"unique": unique, "necessary_ids": _ids(nec), "ies": _ids(nec) if unique else None}
    pair = two_ies_witness(f)
    result["two_ies_pair"] = list(pair) if pair else None
    if args.witness and not unique:
        result["ies_witnesses"] = [_ids(s) for s in enumerate_ies(f, 2).ies_list]
    return [], result


def cmd_minsize(f: Formula, args) -> tuple[list[dict], dict]:
    best = min_equivalent_subset(f)
    return [], {"min_size": len(best), "subset": _ids(best)}


def cmd_varred(f: Formula, args) -> tuple[list[dict], dict]:
    if args.vars is None:
        raise UsageError("varred needs --vars")
    scope = parse_scope(args.vars)
    cap = args.cap or VAR_CAP
    rows = _clause_rows(f, _selected(f, args))
    for row in rows:
        w = var_witness(f, row["id"], scope, cap)
        row["var_redundant"] = w is None
        if args.witness and w is not None:
            row["var_model"] = list(w.literals())
    result = {"vars": _ids(scope)}
    if args.clause is None:
        red = [r["id"] for r in rows if r["var_redundant"]]
        result.update(var_redundant=bool(red), var_redundant_ids=red,
                      forget=[list(c.lits) for c in forget(f, scope, cap)])
    return rows, result


def cmd_condred(f: Formula, args) -> tuple[list[dict], dict]:
    rows = _clause_rows(f, _selected(f, args))
    for row in rows:
        w = cond_witness(f, row["id"])
        row["cond_redundant"] = w is None
        if args.witness and w is not None:
            row["witness_pair"] = [_model(w.omega, f.universe), _model(w.omega_prime, f.universe)]
    result = {}
    if args.clause is None:
        red = [r["id"] for r in rows if r["cond_redundant"]]
        result = {"cond_redundant": bool(red), "cond_redundant_ids": red}
    return rows, result


def cmd_revise(f: Formula, args) -> tuple[list[dict], dict]:
    if args.with_ is None:
        raise UsageError("revise needs --with")
    gamma, data = _read(args.with_)
    out = revise(f, gamma, cap=args.cap or MODEL_CAP)
    return [], {
        "revisor": _input_info(gamma, data),
        "maximal_subsets": [_ids(s) for s in out.maximal_subsets],
        "models": [_model(m, out.universe) for m in out.models],
        "model_count": len(out.models),
    }


# ---------------------------------------------------------------- generators


def _random_base(rng: random.Random, nvars: int, max_clauses: int, offset: int = 0) -> Formula:
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        vs = rng.sample(range(1, nvars + 1), rng.randint(1, nvars))
        clauses.append([(v + offset) * rng.choice((1, -1)) for v in vs])
    return Formula(clauses, universe=nvars + offset)


def _split(g: Formula, vars_text: str | None) -> tuple[list[int], list[int]]:
    vs = sorted(g.variables())
    if vars_text is not None:
        xs = sorted(parse_scope(vars_text))
    else:
        # lower half of the occurring variables, at least one
        xs = vs[: max(1, (len(vs) + 1) // 2)]
    return xs, [v for v in vs if v not in xs]


def _generate(args) -> tuple[Formula, dict, gadgets.GadgetOutput, dict]:
    rng = random.Random(args.seed)
    base = extra = None
    if args.input is not None:
        base, _ = _read(args.input)
    if args.with_ is not None:
        extra, _ = _read(args.with_)
    kind = args.kind
    info: dict = {"seed": args.seed}

    if kind == "exp":
        n = args.n
        f = gadgets.exponential_family(n)
        out = gadgets.GadgetOutput(f, {}, frozenset(), {"n": n})
        return f, info, out, {"label": {"ies_count": 2 ** n}, "oracle": "closed form 2**n"}

    if base is None:
        base = _random_base(rng, 3 if kind in ("size", "useful", "var") else 4, 3)
    info["base"] = [list(c.lits) for c in base]

    if kind == "irredundant":
        out = gadgets.irredundant_version(base)
        return base, info, out, {"label": {"redundant_ids": []}, "oracle": "construction"}
    if kind == "sat":
        out = gadgets.sat_gadget(base)
        return base, info, out, {"label": {"distinguished_redundant": not solve(base)},
                                 "oracle": "solve(base)"}
    if kind == "dp":
        if extra is None:
            extra = _random_base(rng, 3, 3, offset=base.universe)
        info["second"] = [list(c.lits) for c in extra]
        out, _ = gadgets.dp_pair(base, extra)
        label = {"small_is_ies": bool(solve(base)) and not solve(extra)}
        return base, info, out, {"label": label, "oracle": "solve(base), solve(second)",
                                 "small": "formula without the distinguished clause"}
    if kind in ("size", "useful", "var"):
        xs, ys = _split(base, args.vars)
        info.update(x=xs, y=ys)
        q = eval_exists_forall(QbfInstance(xs, ys, base))
        if kind == "size":
            out = gadgets.size_gadget(base, xs, ys, satisfiable_mode=args.satisfiable_mode)
            label = {"has_ies_of_size_k": q}
        elif kind == "useful":
            out = gadgets.usefulness_gadget(base, xs, ys)
            # with X empty the gadget is satisfiable and w is necessary
            label = {"distinguished_useful": q or not xs}
        else:
            out = gadgets.var_gadget(base, xs)
            label = {"distinguished_var_redundant": not q}
        return base, info, out, {"label": label, "oracle": "eval_exists_forall(x, y, base)"}
    if kind == "condclause":
        out = gadgets.cond_clause_gadget(base)
        return base, info, out, {"label": {"distinguished_cond_redundant": not solve(base)},
                                 "oracle": "solve(base)"}
    out = gadgets.cond_set_gadget(base)
    return base, info, out, {"label": {"formula_cond_redundant": not solve(base)},
                             "oracle": "solve(base)"}


def cmd_gen(args) -> tuple[Formula, bytes, list[dict], dict]:
    base, info, out, label = _generate(args)
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "kind": args.kind,
        "fresh_vars": dict(out.fresh_vars),
        "distinguished": _ids(out.distinguished),
        "params": dict(out.params),
        "parts": {k: list(v) for k, v in out.parts.items()},
        "scope": None if out.scope is None else _ids(out.scope),
        **info,
        **label,
    }
    dimacs = write_dimacs(out.formula, comments=[f"generated by irredundant gen {args.kind}"])
    result = dict(manifest)
    if args.out:
        Path(args.out).write_bytes(dimacs)
        Path(args.out + ".json").write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
        result["written"] = [args.out, args.out + ".json"]
    else:
        result["dimacs"] = dimacs.decode()
    return base, write_dimacs(base), _clause_rows(out.formula), result


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "ies": cmd_ies,
    "unique": cmd_unique,
    "minsize": cmd_minsize,
    "varred": cmd_varred,
    "condred": cmd_condred,
    "revise": cmd_revise,
}


# ---------------------------------------------------------------- rendering


def _fmt(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, list):
        if all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            return "{" + " ".join(map(str, v)) + "}"
        return " ".join(_fmt(x) for x in v) if v else "[]"
    if isinstance(v, dict):
        return " ".join(f"{k}={_fmt(v[k])}" for k in sorted(v))
    return str(v)


def render_text(report: dict) -> str:
    inp = report["input"]
    lines = [f"{report['command']['name']}: {inp['clauses']} clauses over {inp['variables']} "
             f"variables, sha256 {inp['sha256'][:16]}"]
    for row in report["clauses"]:
        extra = {k: v for k, v in row.items() if k not in ("id", "line", "literals")}
        line = f"  clause {row['id']} (line {row['line']}) {_fmt(row['literals'])}"
        if extra:
            line += "  " + _fmt(extra)
        lines.append(line)
    for k in sorted(report["result"]):
        v = report["result"][k]
        if k == "dimacs":
            lines.append("dimacs:")
            lines.extend("  " + t for t in v.splitlines())
        else:
            lines.append(f"{k}: {_fmt(v)}")
    return "\n".join(lines) + "\n"


def emit_report(report: dict, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode()
    return render_text(report).encode()


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="irredundant", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text, file_arg=True):
        sp = sub.add_parser(name, help=help_text)
        if file_arg:
            sp.add_argument("input", help="DIMACS CNF file, or - for standard input")
        sp.add_argument("--json", action="store_true", help="print the JSON report")
        sp.add_argument("--witness", action="store_true",
                        help="include witnesses (models, IES id-sets) in the report")
        return sp

    for name, help_text in [("check", "redundant clauses"),
                            ("classify", "necessary / useful / useless status per clause"),
                            ("condred", "conditionally redundant clauses")]:
        sp = add(name, help_text)
        sp.add_argument("--clause", type=int, help="query a single clause id (default: all)")
        if name == "check":
            sp.add_argument("--order", help="clause ids in greedy removal order, e.g. 3,2,1,0")
        if name == "classify":
            sp.add_argument("--cap", type=int, help=f"IES count cap (default {IES_CAP})")

    sp = add("ies", "one IES (greedy) or all of them")
    sp.add_argument("--all", action="store_true", help="enumerate every IES")
    sp.add_argument("--order", help="clause ids in greedy removal order")
    sp.add_argument("--cap", type=int, help=f"maximum number of IESs with --all (default {IES_CAP})")
    add("unique", "whether the IES is unique")
    add("minsize", "size of the smallest equivalent subset")
    sp = add("varred", "redundancy relative to a variable subset")
    sp.add_argument("--vars", help="comma-separated variable ids, e.g. 1,3")
    sp.add_argument("--clause", type=int, help="query a single clause id (default: all)")
    sp.add_argument("--cap", type=int, help=f"maximum number of variables (default {VAR_CAP})")
    sp = add("revise", "maxcons revision of the input by another formula")
    sp.add_argument("--with", dest="with_", help="DIMACS file of the revising formula")
    sp.add_argument("--cap", type=int, help=f"maximum number of variables (default {MODEL_CAP})")

    sp = add("gen", "write a gadget instance with its expected label", file_arg=False)
    sp.add_argument("kind", choices=GEN_KINDS)
    sp.add_argument("input", nargs="?", help="base formula (default: random from --seed)")
    sp.add_argument("--with", dest="with_", help="second formula for the dp kind")
    sp.add_argument("--vars", help="existential variables X (default: lower half)")
    sp.add_argument("--seed", type=int, default=0, help="seed for the random base (default 0)")
    sp.add_argument("--n", type=int, default=2, help="copies for the exp kind (default 2)")
    sp.add_argument("--satisfiable-mode", action="store_true",
                    help="size kind: add the variable u that makes the gadget satisfiable")
    sp.add_argument("--out", help="write DIMACS here and the manifest to OUT.json")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    start = time.perf_counter()
    try:
        if args.command == "gen":
            f, data, rows, result = cmd_gen(args)
        else:
            f, data = _read(args.input)
            rows, result = COMMANDS[args.command](f, args)
    except CapExceeded as e:
        print(f"irredundant: cap exceeded: {e}", file=stderr)
        return 3
    except (RedundancyError, ValueError) as e:
        print(f"irredundant: error: {e}", file=stderr)
        return 2
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": {"name": args.command, "argv": list(argv if argv is not None else sys.argv[1:])},
        "input": _input_info(f, data),
        "clauses": rows,
        "result": result,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    stdout.write(emit_report(report, "json" if args.json else "text"))
    stdout.flush()
    return 0


def main() -> None:
    sys.exit(run())
