"""Independent oracles and the bundled acceptance checks.

The oracles recompute answers by deliberately naive means — exhaustive
enumeration, unique factorization, textbook resolvents — so the fast
paths elsewhere in the package have something honest to disagree with.
"""

from .criteria import CRITERIA, CriterionOutcome, match_criteria, run_criteria
from .relbrute import brute_weakly_commensurable, product_profiles
from .resolvent import cubic_galois, full_weyl_expected, quartic_galois
from .weylbrute import (
    brute_class_count,
    brute_minus_one_in_weyl,
    brute_weyl_order,
)

__all__ = [
    "CRITERIA",
    "CriterionOutcome",
    "match_criteria",
    "run_criteria",
    "brute_weakly_commensurable",
    "product_profiles",
    "cubic_galois",
    "quartic_galois",
    "full_weyl_expected",
    "brute_class_count",
    "brute_minus_one_in_weyl",
    "brute_weyl_order",
]
