"""Close factorizations n = AB = (A+a1)(B-b1) = (A+a2)(B-b2).

Records are dicts with the same fields as the CLI's jsonl output; big
integers are decimal strings.
"""

from ._core import (
    BudgetExceeded,
    DecompositionFailure,
    classify,
    cross_check,
    factorize,
    family,
    family_threshold,
    is_prime,
    max_ab,
    min_gap_triple,
    quad_from_points,
    scan_gaps,
    solve,
    triples,
)

__all__ = [
    "BudgetExceeded",
    "DecompositionFailure",
    "classify",
    "cross_check",
    "factorize",
    "family",
    "family_threshold",
    "is_prime",
    "max_ab",
    "min_gap_triple",
    "quad_from_points",
    "scan_gaps",
    "solve",
    "triples",
]
