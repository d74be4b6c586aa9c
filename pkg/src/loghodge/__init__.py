"""loghodge: exact-arithmetic bigraded logarithmic Hodge tables.

Subpackages compute the table h^{i,j} three independent ways — a
Koszul-homology engine on graded quotient algebras, closed forms for
reductive-group compactifications and projective space, and toric
Chow-group presentations — and check vanishing-strip predicates on the
results.  All arithmetic is exact rational.
"""

from .exactlin import RatMatrix, cokernel_dim, pivot_columns, rank
from .table import BigradedTable

__all__ = [
    "BigradedTable",
    "RatMatrix",
    "cokernel_dim",
    "pivot_columns",
    "rank",
]

__version__ = "0.1.0"
