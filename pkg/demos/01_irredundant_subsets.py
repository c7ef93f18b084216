"""Redundant clauses and irredundant equivalent subsets (IESs) on small formulas.

Run with ``python3 demos/01_irredundant_subsets.py``.
"""

# %%
import numpy as np

from irredundant import (classify_clauses, enumerate_ies, greedy_ies, has_unique_ies,
                         min_equivalent_subset, redundant_clauses)
from irredundant.corpus import EXAMPLE1, FIVE, TRIPLE
from irredundant.gadgets import exponential_family
from irredundant.sat import model_table

# %%
# a∨¬b, ¬a∨b, a∨c, b∨c: the first two say a ≡ b, so a∨c and b∨c say the same thing
print(EXAMPLE1)
print("redundant clauses:", redundant_clauses(EXAMPLE1))

# the satisfaction table shows why: columns 2 and 3 agree on every row where 0 and 1 hold
table = model_table(EXAMPLE1.lit_lists(), [1, 2, 3])
print(table.astype(int))
print("models:", int(table.all(axis=1).sum()))

# %%
# removing one of them makes the other necessary, so there are two IESs
print("all IESs:", [sorted(s) for s in enumerate_ies(EXAMPLE1).ies_list])
print("greedy, default order:", sorted(greedy_ies(EXAMPLE1)))
print("greedy, reversed order:", sorted(greedy_ies(EXAMPLE1, [3, 2, 1, 0])))

rep = classify_clauses(EXAMPLE1)
for cid, status in rep.statuses.items():
    print(cid, EXAMPLE1[cid], status)

# %%
# a∨b and a∨¬b give a, which makes a∨c redundant; nothing else can go
print("triple unique:", has_unique_ies(TRIPLE), [sorted(s) for s in enumerate_ies(TRIPLE).ies_list])

# %%
# three equivalent variables and three equivalent wide clauses: two of the three must go
rep = enumerate_ies(FIVE)
print("IESs of the a≡b≡c set:", [sorted(s) for s in rep.ies_list])
print("smallest equivalent subset:", sorted(min_equivalent_subset(FIVE)))

# %%
# n disjoint copies of the first formula have 2**n IESs
counts = np.array([len(enumerate_ies(exponential_family(n))) for n in range(1, 6)])
print("IES counts:", counts, "log2:", np.log2(counts))
