"""A fixed corpus of characteristic polynomials with known Galois size.

Each entry is (family, coefficients low-to-high, full) where ``full``
records whether the splitting-field Galois group is the entire Weyl
group of the ambient type, as decided by the closed-form resolvent
oracle.  The list mixes both answers across types A (degrees 2-4) and
B/C (rank 2), including reducible, cyclotomic, and cyclic-cubic cases
that a sampling certifier must leave undetermined.
"""

from fractions import Fraction
from typing import Tuple, Union

Coeff = Union[int, Fraction]
CorpusEntry = Tuple[str, Tuple[Coeff, ...], bool]

POLY_CORPUS: Tuple[CorpusEntry, ...] = (
    # family A, degree 2
    ("A", (-1, -1, 1), True),
    ("A", (-2, 0, 1), True),
    ("A", (-1, 0, 1), False),
    ("A", (3, -4, 1), False),
    ("A", (1, -3, 1), True),
    # family A, degree 3
    ("A", (-1, -1, 0, 1), True),
    ("A", (-1, -3, 0, 1), False),
    ("A", (-2, 0, 0, 1), True),
    ("A", (-1, -2, 1, 1), False),
    ("A", (-1, -4, 0, 1), True),
    ("A", (1, 0, -2, 1), False),
    ("A", (-6, 11, -6, 1), False),
    ("A", (-1, -7, 0, 1), True),
    ("A", (1, -3, 0, 1), False),
    ("A", (-3, -1, 0, 1), True),
    # family A, degree 4
    ("A", (-1, -1, 0, 0, 1), True),
    ("A", (12, 8, 0, 0, 1), False),
    ("A", (1, 0, 0, 0, 1), False),
    ("A", (1, 1, 1, 1, 1), False),
    ("A", (-2, 0, 0, 0, 1), False),
    ("A", (1, 0, -10, 0, 1), False),
    ("A", (-1, 0, 0, -1, 1), True),
    ("A", (2, 0, 4, 0, 1), False),
    ("A", (-3, -1, 0, 0, 1), True),
    ("A", (6, 0, -5, 0, 1), False),
    ("A", (-1, 0, 0, 0, 1), False),
    # family C, rank 2
    ("C", (1, -3, 1, -3, 1), True),
    ("C", (1, -2, 0, -2, 1), True),
    ("C", (1, -4, 1, -4, 1), True),
    ("C", (1, 1, 1, 1, 1), False),
    ("C", (1, 0, -1, 0, 1), False),
    ("C", (1, 0, 0, 0, 1), False),
    ("C", (1, -1, 1, -1, 1), False),
    ("C", (1, -7, 14, -7, 1), False),
    ("C", (1, 0, -7, 0, 1), False),
    ("C", (1, -5, 3, -5, 1), True),
    ("C", (1, 6, 1, 6, 1), True),
    ("C", (1, -6, 7, -6, 1), False),
    ("C", (1, -8, 2, -8, 1), False),
    ("C", (1, 2, -1, 2, 1), False),
    ("C", (1, -1, -1, -1, 1), True),
    ("C", (1, -10, 1, -10, 1), True),
    # family B, rank 2
    ("B", (-1, 4, -4, 4, -4, 1), True),
    ("B", (-1, 0, 0, 0, 0, 1), False),
    ("B", (-1, 1, 1, -1, -1, 1), False),
    ("B", (-1, 3, -2, 2, -3, 1), True),
    ("B", (-1, 5, -5, 5, -5, 1), True),
    ("B", (-1, 8, -21, 21, -8, 1), False),
    ("B", (-1, 1, 0, 0, -1, 1), False),
    ("B", (-1, 2, -2, 2, -2, 1), False),
)
