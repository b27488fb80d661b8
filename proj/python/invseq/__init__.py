"""Exact enumeration of pattern-avoiding inversion sequences."""

from ._invseq import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    avoids,
    canonical_key,
    crosscheck,
    family,
    from_bfile,
    is_inv_seq,
    registered,
    rule_ids,
    rule_terms,
    terms,
    to_bfile,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "avoids",
    "canonical_key",
    "crosscheck",
    "family",
    "from_bfile",
    "is_inv_seq",
    "registered",
    "rule_ids",
    "rule_terms",
    "terms",
    "to_bfile",
]
