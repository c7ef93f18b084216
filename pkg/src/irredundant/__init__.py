"""Clause redundancy in CNF formulas: redundant clauses, irredundant
equivalent subsets, redundancy relative to a variable subset, and
redundancy under maxcons revision, plus reduction gadgets that generate
labelled instances."""

from .cnf import Assignment, Clause, Formula, PartialAssignment, mk_clause
from .conditional import (RevisionOutcome, WitnessPair, cond_redundant_clauses, cond_witness,
                          is_clause_cond_redundant, is_formula_cond_redundant,
                          max_consistent_subsets, revise)
from .dimacs import parse_dimacs, read_dimacs, write_dimacs
from .errors import (CapExceeded, InconsistentRevisor, ParseError, PreconditionError,
                     RedundancyError, ScopeError, SharedVariablesError, TautologyError,
                     UnknownClauseId)
from .redundancy import (ClassificationReport, ClauseStatus, IesReport, classify_clauses,
                         enumerate_ies, greedy_ies, has_ies_of_size, has_unique_ies,
                         is_clause_necessary, is_clause_redundant, is_clause_useful,
                         is_formula_redundant, is_ies, min_equivalent_subset, min_ies_size,
                         necessary_set, redundant_clauses, two_ies_witness)
from .sat import QbfInstance, entails, equivalent, eval_exists_forall, solve
from .varred import forget, is_clause_var_redundant, is_formula_var_redundant, var_equivalent

__version__ = "0.1.0"
