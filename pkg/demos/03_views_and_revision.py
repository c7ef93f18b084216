"""Redundancy seen through a subset of the variables, and under revision.

Run with ``python3 demos/03_views_and_revision.py``.
"""

# %%
from irredundant import Formula, forget, is_clause_var_redundant, revise, var_equivalent
from irredundant.conditional import cond_witness, max_consistent_subsets
from irredundant.corpus import PI4

x, y = 1, 2
a, b, c = 1, 2, 3

# %%
# queries about x alone cannot see the clause y
print("{x, y}, V={x}: y var-redundant:", is_clause_var_redundant(Formula([[x], [y]]), 1, {x}))
# but ¬y, together with x∨y, forces x
print("{x∨y, ¬y}, V={x}: ¬y var-redundant:", is_clause_var_redundant(Formula([[x, y], [-y]]), 1, {x}))

# %%
pi = Formula([[1, 2], [-2, 3], [-3, 4]])
f = forget(pi, {1, 4})
print("forgetting 2 and 3 leaves", f, "var-equivalent:", var_equivalent(f, pi, {1, 4}))

# %%
# revising by ¬a keeps the maximal subsets consistent with it
neg_a = Formula([[-a]])
print("Max(Π, ¬a):", [sorted(s) for s in max_consistent_subsets(PI4, neg_a)])
out = revise(PI4, neg_a)
print("Π * ¬a models:", [dict(m) for m in out.models])

# dropping a∨b changes the result, so that clause matters under revision
out = revise(PI4.without(0), neg_a)
print("(Π without a∨b) * ¬a ≡ ¬a∧¬b:", out.equivalent_to(Formula([[-a], [-b]], universe=3)))

# %%
# every clause has a pair of models whose satisfied sets differ in that clause only
for cid in PI4.ids():
    w = cond_witness(PI4, cid)
    print(PI4[cid], dict(w.omega), dict(w.omega_prime))
