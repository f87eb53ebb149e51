"""Linear algebra over F_p and the algebra operations built on it.

Only the linear algebra is re-exported here; ``xmodalg.core.algebra`` is
imported directly.
"""

from .linalg import (
    all_vectors,
    coordinates,
    field,
    general_linear,
    is_prime,
    null_space,
    rank,
    row_reduce,
    solve,
    span,
)

__all__ = [
    "all_vectors",
    "coordinates",
    "field",
    "general_linear",
    "is_prime",
    "null_space",
    "rank",
    "row_reduce",
    "solve",
    "span",
]
