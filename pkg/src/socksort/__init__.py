"""Foot-sortability of sock orderings.

Library layout:

- orderings: the data model (parse/format, canonical forms, containment,
  subpattern search, interlace construction)
- states: the stage calculus (sandwiches, sortable colors, moves)
- sorter: the deterministic decision-and-sorting procedure
- oracle: brute-force step search, the ground truth at small sizes
- basis: the minimally unsortable patterns and the certificate search
- verify: exhaustive enumeration sweeps and machine-readable reports
- cli: the socksort command
"""

from .basis import (
    BasisElement,
    basis_up_to_length,
    find_basis_witness,
    finite_basis_elements,
    infinite_basis_element,
)
from .oracle import (
    is_good_sortable,
    is_minimally_unsortable,
    oracle_is_sortable,
    oracle_witness,
)
from .orderings import (
    Embedding,
    Ordering,
    ParseError,
    canonicalize,
    contains_subordering,
    equivalent,
    find_subpattern,
    format_ordering,
    interlace,
    parse_ordering,
    remove_color,
)
from .sorter import SortReport, full_sort, greedy, sort_colors, sort_helper
from .states import (
    ContractError,
    MoveTrace,
    Sandwich,
    SortState,
    Stopped,
    apply_move,
    first_blocking_sandwich,
    first_terminating_sortable,
    is_color_sortable,
    is_terminal,
)
from .verify import (
    VerifyReport,
    bell_number,
    cross_check,
    enumerate_canonical,
    verify_inf_unsort,
    verify_theorem,
)

__all__ = [
    "BasisElement",
    "ContractError",
    "Embedding",
    "MoveTrace",
    "Ordering",
    "ParseError",
    "Sandwich",
    "SortReport",
    "SortState",
    "Stopped",
    "VerifyReport",
    "apply_move",
    "basis_up_to_length",
    "bell_number",
    "canonicalize",
    "contains_subordering",
    "cross_check",
    "enumerate_canonical",
    "equivalent",
    "find_basis_witness",
    "find_subpattern",
    "finite_basis_elements",
    "first_blocking_sandwich",
    "first_terminating_sortable",
    "format_ordering",
    "full_sort",
    "greedy",
    "infinite_basis_element",
    "interlace",
    "is_color_sortable",
    "is_good_sortable",
    "is_minimally_unsortable",
    "is_terminal",
    "oracle_is_sortable",
    "oracle_witness",
    "parse_ordering",
    "remove_color",
    "sort_colors",
    "sort_helper",
    "verify_inf_unsort",
    "verify_theorem",
]
