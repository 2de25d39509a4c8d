"""Exact guesswork of qubit ensembles and exact point-set symmetries.

The package computes, in closed form and with integer arithmetic only,
the minimum expected number of queries needed to identify the prepared
state of a finite qubit ensemble given as Bloch vectors over the
integers or a quadratic ring Z[sqrt(k)], and finds all geometric
symmetries of an exact point set in polynomial time.
"""

from .combinatorics import CombinationCursor, GrayCursor, PermutationCursor
from .ensemble import Ensemble, make_ensemble, norm_sq, vec_dot
from .errors import PreconditionError, SpanningError
from .ring import (
    INTEGERS,
    RingId,
    RingMismatchError,
    Scalar,
    add,
    compare,
    embed,
    integer,
    is_nonneg,
    mul,
    quadratic,
    ratio_to_decimal,
    scale,
    sub,
    to_decimal,
)
from .search import (
    GuessworkResult,
    SearchState,
    apply_flip,
    apply_swap,
    assemble_result,
    compute_guesswork,
    guesswork_exhaustive,
    guesswork_symmetric,
    search_state,
    weighted_sum,
)
from .solids import SolidInfo, list_solids, solid
from .symmetry import (
    SymmetryGroup,
    det_division_free,
    e_order,
    find_basis,
    find_symmetries,
    gram,
    is_centrally_symmetric,
    is_vertex_transitive,
    symmetries_exhaustive,
    symmetries_fast,
)

__version__ = "0.1.0"

__all__ = [
    "CombinationCursor",
    "Ensemble",
    "GrayCursor",
    "GuessworkResult",
    "INTEGERS",
    "PermutationCursor",
    "PreconditionError",
    "RingId",
    "RingMismatchError",
    "Scalar",
    "SearchState",
    "SolidInfo",
    "SpanningError",
    "SymmetryGroup",
    "add",
    "apply_flip",
    "apply_swap",
    "assemble_result",
    "compare",
    "compute_guesswork",
    "det_division_free",
    "e_order",
    "embed",
    "find_basis",
    "find_symmetries",
    "gram",
    "guesswork_exhaustive",
    "guesswork_symmetric",
    "integer",
    "is_centrally_symmetric",
    "is_nonneg",
    "is_vertex_transitive",
    "list_solids",
    "make_ensemble",
    "mul",
    "norm_sq",
    "quadratic",
    "ratio_to_decimal",
    "scale",
    "search_state",
    "solid",
    "sub",
    "symmetries_exhaustive",
    "symmetries_fast",
    "to_decimal",
    "vec_dot",
    "weighted_sum",
]
