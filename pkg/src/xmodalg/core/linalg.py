"""Exact linear algebra over prime fields.

Row reduction is delegated to :mod:`galois`; everything else works on plain
``int64`` numpy arrays reduced modulo the prime. Matrices act on column
vectors, and spans are stored as the nonzero rows of a reduced row echelon
form together with their pivot columns.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import TYPE_CHECKING, Any

import galois
import numpy as np

from xmodalg.exceptions import InternalError

if TYPE_CHECKING:
    from collections.abc import Sequence

    from xmodalg.types import IntArray


@lru_cache(maxsize=None)
def field(prime: int) -> type[galois.FieldArray]:
    """Return the galois field class for GF(prime)."""
    return galois.GF(prime)


def is_prime(value: int) -> bool:
    """Check whether an integer is prime."""
    return value > 1 and bool(galois.is_prime(value))


@lru_cache(maxsize=8192)
def frozen(data: tuple[Any, ...], shape: tuple[int, ...]) -> IntArray:
    """Convert nested integer tuples into a read-only array of a given shape.

    Args:
        data: Nested tuples of ints
        shape: Expected shape; zero-length axes are allowed

    Returns:
        Read-only ``int64`` array
    """
    array = np.array(data, dtype=np.int64).reshape(shape)
    array.setflags(write=False)
    return array


def nested(array: IntArray) -> Any:
    """Convert an array into nested tuples of Python ints."""
    if array.ndim == 0:
        return int(array)
    if array.ndim == 1:
        return tuple(int(value) for value in array)
    return tuple(nested(row) for row in array)


def reduce_nested(value: Any, prime: int) -> Any:
    """Reduce every integer of a nested list or tuple modulo a prime.

    Args:
        value: Nested sequences of ints
        prime: Field characteristic

    Returns:
        The same structure as tuples of reduced ints
    """
    if isinstance(value, list | tuple):
        return tuple(reduce_nested(item, prime) for item in value)
    return int(value) % prime


def has_shape(value: Any, shape: tuple[int, ...]) -> bool:
    """Check that nested tuples form a rectangular block of the given shape."""
    if not shape:
        return isinstance(value, int)
    if not isinstance(value, tuple) or len(value) != shape[0]:
        return False
    return all(has_shape(item, shape[1:]) for item in value)


def row_reduce(matrix: IntArray, prime: int) -> tuple[IntArray, tuple[int, ...]]:
    """Compute the reduced row echelon form of a matrix.

    Args:
        matrix: Two-dimensional integer array
        prime: Field characteristic

    Returns:
        The nonzero rows of the reduced form and their pivot columns
    """
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return np.zeros((0, cols), dtype=np.int64), ()

    gf = field(prime)
    reduced = gf(np.mod(matrix, prime)).row_reduce()
    plain = reduced.view(np.ndarray).astype(np.int64)

    kept: list[IntArray] = []
    pivots: list[int] = []
    for row in plain:
        nonzero = np.flatnonzero(row)
        if nonzero.size:
            kept.append(row)
            pivots.append(int(nonzero[0]))
    return np.array(kept, dtype=np.int64).reshape(len(kept), cols), tuple(pivots)


def rank(matrix: IntArray, prime: int) -> int:
    """Return the rank of a matrix over GF(prime)."""
    return len(row_reduce(matrix, prime)[1])


def null_space(matrix: IntArray, prime: int) -> IntArray:
    """Return a basis, as rows, of the vectors x with ``matrix @ x = 0``.

    Args:
        matrix: Two-dimensional integer array
        prime: Field characteristic

    Returns:
        Array of shape (nullity, columns)
    """
    cols = matrix.shape[1]
    reduced, pivots = row_reduce(matrix, prime)
    free = [c for c in range(cols) if c not in pivots]

    basis = np.zeros((len(free), cols), dtype=np.int64)
    for n, column in enumerate(free):
        basis[n, column] = 1
        for r, pivot in enumerate(pivots):
            basis[n, pivot] = (-reduced[r, column]) % prime
    return basis


def solve(matrix: IntArray, rhs: IntArray, prime: int) -> IntArray | None:
    """Find one solution of ``matrix @ x = rhs``.

    Free variables are set to zero.

    Args:
        matrix: Coefficient matrix
        rhs: Right-hand side vector
        prime: Field characteristic

    Returns:
        A solution vector, or None when the system is inconsistent
    """
    rows, cols = matrix.shape
    augmented = np.concatenate([matrix, rhs.reshape(rows, 1)], axis=1)
    reduced, pivots = row_reduce(augmented, prime)
    if cols in pivots:
        return None

    solution = np.zeros(cols, dtype=np.int64)
    for r, pivot in enumerate(pivots):
        solution[pivot] = reduced[r, cols]
    return solution


def span(
    vectors: Sequence[IntArray] | IntArray, length: int, prime: int
) -> tuple[IntArray, tuple[int, ...]]:
    """Row-reduce a family of vectors of a given length.

    Args:
        vectors: Vectors spanning the subspace
        length: Ambient dimension
        prime: Field characteristic

    Returns:
        Reduced basis rows and pivot columns
    """
    if len(vectors) == 0:
        return np.zeros((0, length), dtype=np.int64), ()
    stacked = np.array(vectors, dtype=np.int64).reshape(len(vectors), length)
    return row_reduce(stacked, prime)


def coordinates(
    rows: IntArray, pivots: tuple[int, ...], vector: IntArray, prime: int
) -> IntArray | None:
    """Express a vector in a reduced basis.

    Args:
        rows: Reduced basis rows
        pivots: Pivot column of each row
        vector: Vector to express
        prime: Field characteristic

    Returns:
        Coefficients, or None when the vector is outside the span
    """
    coeffs = np.mod(vector[list(pivots)], prime)
    if np.any(np.mod(coeffs @ rows - vector, prime)):
        return None
    return coeffs


def express(
    rows: IntArray, pivots: tuple[int, ...], vectors: IntArray, prime: int
) -> IntArray:
    """Express each row of ``vectors`` in a reduced basis.

    Args:
        rows: Reduced basis rows
        pivots: Pivot column of each row
        vectors: Array of shape (count, ambient)
        prime: Field characteristic

    Returns:
        Coordinates as columns, shape (basis size, count)

    Raises:
        InternalError: If some vector is outside the span
    """
    columns = np.zeros((len(pivots), vectors.shape[0]), dtype=np.int64)
    for n, vector in enumerate(vectors):
        coeffs = coordinates(rows, pivots, vector, prime)
        if coeffs is None:
            msg = f"vector {nested(vector)} is outside the expected span"
            raise InternalError(msg)
        columns[:, n] = coeffs
    return columns


@lru_cache(maxsize=256)
def all_vectors(prime: int, length: int) -> IntArray:
    """Return every vector of GF(prime)^length in lexicographic order."""
    rows = list(itertools.product(range(prime), repeat=length))
    array = np.array(rows, dtype=np.int64).reshape(len(rows), length)
    array.setflags(write=False)
    return array


@lru_cache(maxsize=64)
def general_linear(dim: int, prime: int) -> tuple[tuple[IntArray, IntArray], ...]:
    """Return every invertible matrix of GL(dim, prime) with its inverse."""
    gf = field(prime)
    pairs = []
    for entries in itertools.product(range(prime), repeat=dim * dim):
        matrix = np.array(entries, dtype=np.int64).reshape(dim, dim)
        if rank(matrix, prime) < dim:
            continue
        if dim == 0:
            inverse = matrix.copy()
        else:
            inverse = np.linalg.inv(gf(matrix)).view(np.ndarray).astype(np.int64)
        pairs.append((matrix, inverse))
    return tuple(pairs)


def first_mismatch(
    lhs: IntArray, rhs: IntArray, prime: int, index_dims: int
) -> tuple[tuple[int, ...], IntArray, IntArray, int] | None:
    """Locate the first index where two arrays differ modulo a prime.

    The leading ``index_dims`` axes enumerate basis tuples; trailing axes hold
    the compared vectors.

    Args:
        lhs: Left-hand values
        rhs: Right-hand values
        prime: Field characteristic
        index_dims: Number of leading index axes

    Returns:
        The first failing index, both values there and the failure count,
        or None when the arrays agree
    """
    differs = np.mod(lhs - rhs, prime) != 0
    if differs.ndim > index_dims:
        differs = differs.any(axis=tuple(range(index_dims, differs.ndim)))
    hits = np.argwhere(differs)
    if len(hits) == 0:
        return None
    where = tuple(int(i) for i in hits[0])
    return where, np.mod(lhs[where], prime), np.mod(rhs[where], prime), len(hits)
