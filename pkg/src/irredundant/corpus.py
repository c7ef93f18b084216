"""Small named formulas used as regression instances and in the demos.

Variables a, b, c, d are 1, 2, 3, 4.
"""

from .cnf import Formula
from .gadgets import exponential_family

a, b, c, d = 1, 2, 3, 4

# two IESs: the first two clauses plus either of the last two
EXAMPLE1 = exponential_family(1)
# a single IES, made of the first two clauses
TRIPLE = Formula([[a, b], [a, -b], [a, c]])
# a ≡ b, a ≡ c, a∨d, b∨d, c∨d: three IESs but no pair of clauses that cannot both go
FIVE = Formula([[a, -b], [-a, b], [a, -c], [-a, c], [a, d], [b, d], [c, d]])
# revising by ¬a: removing a∨b changes the result although no clause is conditionally redundant
PI4 = Formula([[a, b], [a, -b], [a, c], [a, -c]])

NAMED = {
    "example1": EXAMPLE1,
    "triple": TRIPLE,
    "five": FIVE,
    "pi4": PI4,
    "exp2": exponential_family(2),
    "contradiction": Formula([[a], [-a]]),
    "empty": Formula([]),
    "empty_clause": Formula([[]]),
}
