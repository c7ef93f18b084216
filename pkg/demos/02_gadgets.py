"""Turning satisfiability and ∃∀ questions into redundancy questions.

Each gadget comes with the property it is built for; here it is checked on
a handful of random inputs.  Run with ``python3 demos/02_gadgets.py``.
"""

# %%
import random

from irredundant import Formula, QbfInstance, eval_exists_forall, solve
from irredundant.gadgets import (irredundant_version, sat_gadget, size_gadget,
                                 usefulness_gadget, witness_model)
from irredundant.redundancy import has_ies_of_size, is_clause_redundant, is_clause_useful, min_ies_size

rng = random.Random(7)


def random_cnf(nvars, nclauses):
    return Formula([[v * rng.choice((1, -1)) for v in rng.sample(range(1, nvars + 1), rng.randint(1, nvars))]
                    for _ in range(nclauses)], universe=nvars)


# %%
# guarding every clause with its own selector makes all of them necessary
g = Formula([[1], [-1]])
out = irredundant_version(g)
print(out.formula, out.fresh_vars)
w = witness_model(g, out, 1)
print("witness for clause 1:", dict(w))

# %%
# a wide clause over the selectors is redundant exactly when g is unsatisfiable
for _ in range(5):
    g = random_cnf(3, rng.randint(1, 5))
    out = sat_gadget(g)
    (wide,) = out.distinguished
    print(f"{len(g)} clauses  sat={bool(solve(g))!s:5}  wide clause redundant={is_clause_redundant(out.formula, wide)}")

# %%
# the size gadget has an IES of at most k clauses iff ∃X∀Y.¬g
for g, xs, ys in [(Formula([[1]]), [1], []), (Formula([[1, 2]]), [1], [2]),
                  (Formula([[1, 2], [1, -2]]), [1], [2])]:
    out = size_gadget(g, xs, ys)
    k = out.params["k"]
    q = eval_exists_forall(QbfInstance(xs, ys, g))
    print(f"params={out.params}  ∃X∀Y.¬g={q!s:5}  IES of size ≤ k={has_ies_of_size(out.formula, k)!s:5}"
          f"  min size={min_ies_size(out.formula)}")

# %%
# the usefulness gadget: w belongs to some IES iff ∃X∀Y.¬g
for _ in range(5):
    g = random_cnf(3, rng.randint(1, 3))
    xs, ys = [1], [2, 3]
    out = usefulness_gadget(g, xs, ys)
    (wid,) = out.distinguished
    q = eval_exists_forall(QbfInstance(xs, ys, g))
    print(f"∃X∀Y.¬g={q!s:5}  w useful={is_clause_useful(out.formula, wid)}")
