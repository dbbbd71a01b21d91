"""D(a)-pairs and D(a)-triples of triangular numbers, in exact integer arithmetic."""

from .arith import Factorization, as_perfect_square, factorize, is_prime, isqrt
from .errors import ConsistencyError, DegeneratePropertyError, DomainError, NoPairsError
from .pell import (
    FundamentalSolution,
    PellProblem,
    SolutionClass,
    fundamental_bounds,
    fundamental_solutions,
    make_problem,
    merged_y_values,
    positive_solutions,
    solution_classes,
)
from .sieve import (
    AdmissibilityResult,
    EnumerationReport,
    EnumerationStep,
    admissible,
    brute_force_pairs,
    enumerate_pairs,
    solutions_below,
)
from .tuples import (
    IndexSequence,
    PairWitness,
    TupleReport,
    build_triples,
    check_pair_indices,
    check_pair_values,
    check_tuple,
    check_value_tuple,
    closed_form_root,
    index_sequence,
    triangular,
    triangular_classes,
)

__version__ = "0.1.0"
