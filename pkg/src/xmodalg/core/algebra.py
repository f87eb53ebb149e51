"""Operations on finite algebras, morphisms, ideals and actions."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any, NamedTuple

import numpy as np

from xmodalg.core.linalg import express, nested, null_space, rank, solve, span
from xmodalg.exceptions import (
    ActionNotRestrictable,
    EndpointMismatch,
    InternalError,
    InvalidInputError,
    NotAnIdeal,
    NotCommutativeMultipliers,
    PreconditionFailed,
    PrimeMismatch,
    ShapeMismatch,
)
from xmodalg.models.algebra import (
    AlgebraAction,
    AlgebraElement,
    AlgebraMorphism,
    FiniteAlgebra,
    Ideal,
    Subspace,
)
from xmodalg.models.report import Report

if TYPE_CHECKING:
    from collections.abc import Sequence

    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)


class KernelImage(NamedTuple):
    """Kernel, image and injectivity/surjectivity of a morphism."""

    kernel: Ideal
    image: Subspace
    is_mono: bool
    is_epi: bool


class Quotient(NamedTuple):
    """Quotient algebra with its projection."""

    algebra: FiniteAlgebra
    projection: AlgebraMorphism


class FiberProduct(NamedTuple):
    """Fiber product with its two projections."""

    algebra: FiniteAlgebra
    first: AlgebraMorphism
    second: AlgebraMorphism


class Subalgebra(NamedTuple):
    """Subalgebra on the basis of a subspace with its inclusion."""

    algebra: FiniteAlgebra
    inclusion: AlgebraMorphism


class Multipliers(NamedTuple):
    """Multiplier algebra with the canonical map into it."""

    algebra: FiniteAlgebra
    mu: AlgebraMorphism


def mk_algebra(
    prime: int,
    dim: int,
    mul: Any,
    basis_names: Sequence[str] | None = None,
    unit: Any = None,
) -> FiniteAlgebra:
    """Build and validate an algebra from structure constants.

    Args:
        prime: Field characteristic
        dim: Dimension
        mul: Structure constants ``mul[i][j][k]``
        basis_names: Names of the basis elements, ``x0, x1, ...`` if omitted
        unit: Coefficients of the unit element, if any

    Returns:
        The validated algebra
    """
    names = tuple(basis_names) if basis_names is not None else tuple(f"x{i}" for i in range(dim))
    return FiniteAlgebra(prime=prime, dim=dim, basis=names, mul=mul, unit=unit)


def zero_algebra(prime: int) -> FiniteAlgebra:
    """Return the zero algebra over F_p."""
    return mk_algebra(prime, 0, ())


def prime_field(prime: int, name: str = "e") -> FiniteAlgebra:
    """Return F_p as a one-dimensional algebra."""
    return mk_algebra(prime, 1, [[[1]]], [name], unit=[1])


def truncated_polynomial(prime: int, degree: int, variable: str = "x") -> FiniteAlgebra:
    """Return k[x]/(x^degree) on the monomial basis.

    Args:
        prime: Field characteristic
        degree: Nilpotency degree of the variable, at least 1
        variable: Name of the variable

    Returns:
        The truncated polynomial algebra, unital
    """
    if degree < 1:
        msg = "degree must be at least 1"
        raise PreconditionFailed(msg)
    mul = np.zeros((degree, degree, degree), dtype=np.int64)
    for i in range(degree):
        for j in range(degree - i):
            mul[i, j, i + j] = 1
    names = ["1", variable] + [f"{variable}^{k}" for k in range(2, degree)]
    unit = [1] + [0] * (degree - 1)
    return mk_algebra(prime, degree, nested(mul), names[:degree], unit=unit)


def mk_morphism(source: FiniteAlgebra, target: FiniteAlgebra, matrix: Any) -> AlgebraMorphism:
    """Build and validate a morphism.

    Args:
        source: Source algebra
        target: Target algebra
        matrix: target-dim x source-dim matrix

    Returns:
        The validated morphism
    """
    return AlgebraMorphism(source=source, target=target, matrix=matrix)


def identity_morphism(algebra: FiniteAlgebra) -> AlgebraMorphism:
    """Return the identity morphism."""
    return mk_morphism(algebra, algebra, nested(np.eye(algebra.dim, dtype=np.int64)))


def zero_morphism(source: FiniteAlgebra, target: FiniteAlgebra) -> AlgebraMorphism:
    """Return the zero morphism."""
    return mk_morphism(
        source, target, nested(np.zeros((target.dim, source.dim), dtype=np.int64))
    )


def compose(outer: AlgebraMorphism, inner: AlgebraMorphism) -> AlgebraMorphism:
    """Return ``outer`` after ``inner``.

    Args:
        outer: Morphism applied second
        inner: Morphism applied first

    Returns:
        The composite

    Raises:
        EndpointMismatch: If the morphisms are not composable
    """
    if inner.target != outer.source:
        msg = "morphisms are not composable"
        raise EndpointMismatch(msg)
    matrix = np.mod(outer.array @ inner.array, outer.target.prime)
    return mk_morphism(inner.source, outer.target, nested(matrix))


def is_isomorphism(f: AlgebraMorphism) -> bool:
    """Whether a morphism is bijective."""
    return f.source.dim == f.target.dim and rank(f.array, f.source.prime) == f.source.dim


def inverse(f: AlgebraMorphism) -> AlgebraMorphism:
    """Return the inverse of a bijective morphism.

    Args:
        f: An isomorphism

    Returns:
        The inverse morphism

    Raises:
        PreconditionFailed: If ``f`` is not bijective
    """
    if not is_isomorphism(f):
        msg = "morphism is not bijective"
        raise PreconditionFailed(msg)
    n = f.source.dim
    columns = [solve(f.array, np.eye(n, dtype=np.int64)[:, j], f.source.prime) for j in range(n)]
    matrix = np.array(columns, dtype=np.int64).reshape(n, n).T
    return mk_morphism(f.target, f.source, nested(matrix))


def kernel_image(f: AlgebraMorphism) -> KernelImage:
    """Compute kernel and image of a morphism.

    Args:
        f: A validated morphism

    Returns:
        The kernel ideal, the image subspace and the mono/epi flags
    """
    p = f.source.prime
    kernel = Ideal.of(f.source, null_space(f.array, p))
    image = Subspace.spanned_by(p, f.target.dim, f.array.T)
    return KernelImage(
        kernel=kernel,
        image=image,
        is_mono=kernel.dim == 0,
        is_epi=image.dim == f.target.dim,
    )


def ideal_from_vectors(algebra: FiniteAlgebra, vectors: Sequence[IntArray] | IntArray) -> Ideal:
    """Close a family of coefficient vectors to the ideal they generate.

    The span is multiplied by every basis element until it stops growing,
    which takes at most ``dim`` growth rounds.

    Args:
        algebra: Ambient algebra
        vectors: Generators as coefficient vectors

    Returns:
        The generated ideal

    Raises:
        InternalError: If the closure does not stabilise
    """
    p, d = algebra.prime, algebra.dim
    current, _ = span(vectors, d, p)
    for _ in range(d + 1):
        products = np.einsum("ri,ijk->rjk", current, algebra.tensor).reshape(
            len(current) * d, d
        )
        grown, _ = span(np.concatenate([current, products]), d, p)
        if len(grown) == len(current):
            return Ideal.of(algebra, current)
        current = grown
    msg = f"ideal closure in an algebra of dimension {d} did not stabilise"
    raise InternalError(msg)


def ideal_generated(algebra: FiniteAlgebra, gens: Sequence[AlgebraElement]) -> Ideal:
    """Return the smallest ideal containing the generators.

    Args:
        algebra: Ambient algebra
        gens: Elements of ``algebra``

    Returns:
        The generated ideal

    Raises:
        ShapeMismatch: If a generator lives in another algebra
    """
    for gen in gens:
        if gen.parent != algebra:
            msg = f"generator {gen} does not belong to the algebra"
            raise ShapeMismatch(msg)
    return ideal_from_vectors(algebra, [gen.vector for gen in gens])


def as_ideal(algebra: FiniteAlgebra, subspace: Subspace) -> Ideal:
    """View a subspace of an algebra as an ideal.

    Args:
        algebra: Ambient algebra
        subspace: Candidate ideal

    Returns:
        The ideal

    Raises:
        NotAnIdeal: If the subspace is not closed under multiplication
        ShapeMismatch: If the subspace lives in another ambient space
    """
    if isinstance(subspace, Ideal):
        if subspace.parent != algebra:
            msg = "ideal belongs to another algebra"
            raise ShapeMismatch(msg)
        return subspace
    if subspace.ambient != algebra.dim or subspace.prime != algebra.prime:
        msg = "subspace does not live in the algebra"
        raise ShapeMismatch(msg)
    return Ideal.of(algebra, subspace.array)


def quotient_projection(algebra: FiniteAlgebra, ideal: Subspace) -> tuple[IntArray, IntArray]:
    """Projection and lift matrices for the complement basis of an ideal.

    The complement basis consists of the standard vectors at the non-pivot
    columns of the ideal's reduced basis. A pivot column maps to minus the
    entries of its basis row at the complement columns.

    Args:
        algebra: Ambient algebra
        ideal: Reduced ideal basis

    Returns:
        Projection (quotient-dim x dim) and lift (dim x quotient-dim)
    """
    p, d = algebra.prime, algebra.dim
    complement = ideal.complement_columns()
    q = len(complement)
    projection = np.zeros((q, d), dtype=np.int64)
    lift = np.zeros((d, q), dtype=np.int64)
    for i, column in enumerate(complement):
        projection[i, column] = 1
        lift[column, i] = 1
    for row, pivot in zip(ideal.array, ideal.pivots, strict=True):
        projection[:, pivot] = np.mod(-row[list(complement)], p)
    return projection, lift


def quotient_by_ideal(algebra: FiniteAlgebra, ideal: Subspace) -> Quotient:
    """Quotient an algebra by an ideal.

    Args:
        algebra: Ambient algebra
        ideal: An ideal of ``algebra``; plain subspaces are checked for closure

    Returns:
        The quotient algebra on the complement basis and the projection
    """
    ideal = as_ideal(algebra, ideal)
    p = algebra.prime
    projection, _ = quotient_projection(algebra, ideal)
    complement = list(ideal.complement_columns())
    q = len(complement)

    block = algebra.tensor[np.ix_(complement, complement, range(algebra.dim))]
    mul = np.mod(np.einsum("ak,ijk->ija", projection, block), p).reshape(q, q, q)
    unit = None
    if algebra.unit_vector is not None and q:
        unit = nested(np.mod(projection @ algebra.unit_vector, p))

    quotient = mk_algebra(
        p, q, nested(mul), [algebra.basis[c] for c in complement], unit=unit
    )
    logger.debug("quotient of dimension %d by ideal of dimension %d", q, ideal.dim)
    return Quotient(quotient, mk_morphism(algebra, quotient, nested(projection)))


def _pair_name(left: FiniteAlgebra, right: FiniteAlgebra, vector: IntArray) -> str:
    return f"({left.render(vector[: left.dim])},{right.render(vector[left.dim :])})"


def _pair_algebra(
    left: FiniteAlgebra, right: FiniteAlgebra, rows: IntArray, pivots: tuple[int, ...]
) -> FiberProduct:
    """Subalgebra of the direct product spanned by reduced pair vectors."""
    p = left.prime
    a = left.dim
    n = len(rows)
    products = np.zeros((n, n, a + right.dim), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            products[i, j, :a] = left.multiply(rows[i, :a], rows[j, :a])
            products[i, j, a:] = right.multiply(rows[i, a:], rows[j, a:])
    mul = express(rows, pivots, products.reshape(n * n, a + right.dim), p).T.reshape(n, n, n)

    unit = None
    if left.unit_vector is not None and right.unit_vector is not None and n:
        candidate = np.concatenate([left.unit_vector, right.unit_vector])
        coeffs = Subspace(prime=p, ambient=a + right.dim, rows=nested(rows)).coordinates(candidate)
        if coeffs is not None:
            unit = nested(coeffs)

    names = [_pair_name(left, right, row) for row in rows]
    algebra = mk_algebra(p, n, nested(mul), names, unit=unit)
    first = mk_morphism(algebra, left, nested(rows[:, :a].T.reshape(a, n)))
    second = mk_morphism(algebra, right, nested(rows[:, a:].T.reshape(right.dim, n)))
    return FiberProduct(algebra, first, second)


def direct_product(left: FiniteAlgebra, right: FiniteAlgebra) -> FiberProduct:
    """Direct product of two algebras with its projections."""
    if left.prime != right.prime:
        raise PrimeMismatch(left.prime, right.prime)
    size = left.dim + right.dim
    rows = np.eye(size, dtype=np.int64)
    return _pair_algebra(left, right, rows, tuple(range(size)))


def fiber_product(f: AlgebraMorphism, g: AlgebraMorphism) -> FiberProduct:
    """Pullback of two morphisms with a common target.

    Args:
        f: Morphism A -> C
        g: Morphism B -> C

    Returns:
        The subalgebra {(a, b) | f(a) = g(b)} of A x B with its projections

    Raises:
        EndpointMismatch: If the targets differ
    """
    if f.target != g.target:
        msg = "fiber product needs morphisms with a common target"
        raise EndpointMismatch(msg)
    p = f.target.prime
    joint = np.concatenate([f.array, np.mod(-g.array, p)], axis=1)
    rows, pivots = span(null_space(joint, p), f.source.dim + g.source.dim, p)
    logger.debug("fiber product of dimension %d", len(rows))
    return _pair_algebra(f.source, g.source, rows, pivots)


def fiber_coordinates(product: FiberProduct, left: IntArray, right: IntArray) -> IntArray:
    """Coordinates in a fiber product of pairs given componentwise.

    Args:
        product: Fiber product with its projections
        left: First components, one column per pair
        right: Second components, one column per pair

    Returns:
        Matrix whose columns are the coordinates of the pairs

    Raises:
        InternalError: If some pair is outside the fiber product
    """
    p = product.algebra.prime
    stacked = np.concatenate([product.first.array, product.second.array], axis=0)
    pairs = np.mod(np.concatenate([left, right], axis=0), p)
    count = pairs.shape[1]
    columns = np.zeros((product.algebra.dim, count), dtype=np.int64)
    for j in range(count):
        coeffs = solve(stacked, pairs[:, j], p)
        if coeffs is None:
            msg = f"pair {nested(pairs[:, j])} is outside the fiber product"
            raise InternalError(msg)
        columns[:, j] = coeffs
    return columns


def subalgebra(algebra: FiniteAlgebra, subspace: Subspace) -> Subalgebra:
    """Algebra structure on a multiplicatively closed subspace.

    The basis is the reduced basis of the subspace; each basis element is
    named by its expression in the ambient basis.

    Args:
        algebra: Ambient algebra
        subspace: A subspace closed under multiplication

    Returns:
        The subalgebra and its inclusion

    Raises:
        InvalidInputError: If the subspace is not closed under multiplication
    """
    p = algebra.prime
    rows, pivots = subspace.array, subspace.pivots
    n = len(rows)
    products = np.einsum("ai,bj,ijk->abk", rows, rows, algebra.tensor).reshape(n * n, algebra.dim)
    try:
        mul = express(rows, pivots, np.mod(products, p), p).T.reshape(n, n, n)
    except InternalError as e:
        msg = "subspace is not closed under multiplication"
        raise InvalidInputError(msg) from e
    names = [algebra.render(row) for row in rows]
    sub = mk_algebra(p, n, nested(mul), names)
    inclusion = mk_morphism(sub, algebra, nested(rows.T.reshape(algebra.dim, n)))
    return Subalgebra(sub, inclusion)


def preimage(f: AlgebraMorphism, ideal: Subspace) -> Ideal:
    """Preimage of an ideal of the target under a morphism.

    Args:
        f: Morphism S -> R
        ideal: Ideal of R

    Returns:
        The ideal {s | f(s) in I} of S
    """
    target_ideal = as_ideal(f.target, ideal)
    projection, _ = quotient_projection(f.target, target_ideal)
    composite = np.mod(projection @ f.array, f.source.prime)
    return Ideal.of(f.source, null_space(composite, f.source.prime))


def annihilator(algebra: FiniteAlgebra) -> Subspace:
    """The annihilator {r | r x = 0 for all x}."""
    d = algebra.dim
    system = np.transpose(algebra.tensor, (1, 2, 0)).reshape(d * d, d)
    return Subspace.spanned_by(algebra.prime, d, null_space(system, algebra.prime))


def square(algebra: FiniteAlgebra) -> Subspace:
    """The span R^2 of all products."""
    d = algebra.dim
    return Subspace.spanned_by(algebra.prime, d, algebra.tensor.reshape(d * d, d))


def mk_action(actor: FiniteAlgebra, acted: FiniteAlgebra, act: Any) -> AlgebraAction:
    """Build an action from constants ``act[i][j][k]``."""
    return AlgebraAction(actor=actor, acted=acted, act=act)


def action_by_multiplication(algebra: FiniteAlgebra) -> AlgebraAction:
    """The action of an algebra on itself by multiplication."""
    return mk_action(algebra, algebra, algebra.mul)


def zero_action(actor: FiniteAlgebra, acted: FiniteAlgebra) -> AlgebraAction:
    """The action in which everything acts as zero."""
    shape = (actor.dim, acted.dim, acted.dim)
    return mk_action(actor, acted, nested(np.zeros(shape, dtype=np.int64)))


def pullback_action(action: AlgebraAction, f: AlgebraMorphism) -> AlgebraAction:
    """Restrict scalars along a morphism: ``s . m = f(s) . m``.

    Args:
        action: Action of R on M
        f: Morphism S -> R

    Returns:
        Action of S on M

    Raises:
        EndpointMismatch: If ``f`` does not land in the actor
    """
    if f.target != action.actor:
        msg = "morphism does not land in the acting algebra"
        raise EndpointMismatch(msg)
    act = np.mod(np.einsum("bi,bjk->ijk", f.array, action.tensor), action.acted.prime)
    return mk_action(f.source, action.acted, nested(act))


def restrict_action(action: AlgebraAction, inclusion: AlgebraMorphism) -> AlgebraAction:
    """Restrict an action to an invariant subalgebra.

    Args:
        action: Action of P on M
        inclusion: Inclusion of a subalgebra L into M

    Returns:
        Action of P on L

    Raises:
        ActionNotRestrictable: If some actor moves L outside itself
    """
    if inclusion.target != action.acted:
        msg = "inclusion does not land in the acted algebra"
        raise EndpointMismatch(msg)
    p = action.acted.prime
    images = np.einsum("ibk,bj->ijk", action.tensor, inclusion.array)
    n = inclusion.source.dim
    act = np.zeros((action.actor.dim, n, n), dtype=np.int64)
    for i in range(action.actor.dim):
        for j in range(n):
            coeffs = solve(inclusion.array, np.mod(images[i, j], p), p)
            if coeffs is None:
                raise ActionNotRestrictable(i, j)
            act[i, j] = coeffs
    return mk_action(action.actor, inclusion.source, nested(act))


def check_action(action: AlgebraAction, *, unit_law: bool = True) -> Report:
    """Check the axioms of an algebra action.

    Args:
        action: Action of P on M
        unit_law: Also require ``e . m = m`` when P is unital

    Returns:
        Report listing every violated axiom with its first basis tuple
    """
    report = Report(subject="action")
    a = action.tensor
    p = action.acted.prime
    cp, cm = action.actor.tensor, action.acted.tensor

    report.expect_equal(
        "action.associativity",
        np.einsum("iua,ajk->iujk", cp, a),
        np.einsum("ujb,ibk->iujk", a, a),
        p,
        index_dims=3,
        detail="(pp').m = p.(p'.m)",
    )
    report.expect_equal(
        "action.multiplicativity",
        np.einsum("jvb,ibk->ijvk", cm, a),
        np.einsum("ijb,bvk->ijvk", a, cm),
        p,
        index_dims=3,
        detail="p.(mm') = (p.m)m'",
    )
    unit = action.actor.unit_vector
    if unit_law and unit is not None:
        report.expect_equal(
            "action.unit",
            np.einsum("i,ijk->jk", unit, a),
            np.eye(action.acted.dim, dtype=np.int64),
            p,
            index_dims=1,
            detail="e.m = m",
        )
    return report


def multiplier_space(algebra: FiniteAlgebra) -> IntArray:
    """Basis of the linear maps D with D(r r') = r D(r').

    Args:
        algebra: The algebra R

    Returns:
        Array of shape (count, dim, dim); each entry is a matrix acting on
        column vectors
    """
    n = algebra.dim
    c = algebra.tensor
    eye = np.eye(n, dtype=np.int64)
    # unknowns are the entries D[a, k], flattened row-major
    own = np.einsum("ijk,ab->ijabk", c, eye).reshape(n**3, n * n)
    shifted = np.einsum("iba,jc->ijabc", c, eye).reshape(n**3, n * n)
    basis = null_space(own - shifted, algebra.prime)
    return basis.reshape(len(basis), n, n)


def multiplier_algebra(algebra: FiniteAlgebra) -> Multipliers:
    """Multiplier algebra M(R) with the canonical map R -> M(R).

    Args:
        algebra: The algebra R; needs Ann(R) = 0 or R^2 = R

    Returns:
        M(R) under composition and ``mu(r) = (x -> r x)``

    Raises:
        PreconditionFailed: If neither Ann(R) = 0 nor R^2 = R
        NotCommutativeMultipliers: If composition does not commute
    """
    p, n = algebra.prime, algebra.dim
    if annihilator(algebra).dim != 0 and square(algebra).dim != n:
        msg = "multiplier algebra needs Ann(R) = 0 or R^2 = R"
        raise PreconditionFailed(msg)

    maps = multiplier_space(algebra)
    m = len(maps)
    flat, pivots = span(maps.reshape(m, n * n), n * n, p)
    basis = flat.reshape(m, n, n)

    composites = np.mod(np.einsum("iab,jbc->ijac", basis, basis), p).reshape(m * m, n * n)
    mul = express(flat, pivots, composites, p).T.reshape(m, m, m)
    if np.any(np.mod(mul - mul.transpose(1, 0, 2), p)):
        msg = "composition of multipliers does not commute"
        raise NotCommutativeMultipliers(msg)

    unit = None
    if m:
        identity = np.eye(n, dtype=np.int64).reshape(1, n * n)
        unit = nested(express(flat, pivots, identity, p)[:, 0])
    names = [f"D{i}" for i in range(m)]
    multipliers = mk_algebra(p, m, nested(mul), names, unit=unit)

    # multiplication by x_i sends x_k to sum_a c[i, k, a] x_a
    left = np.transpose(algebra.tensor, (0, 2, 1)).reshape(n, n * n)
    mu = express(flat, pivots, left, p).reshape(m, n)
    logger.debug("multiplier algebra of dimension %d", m)
    return Multipliers(multipliers, mk_morphism(algebra, multipliers, nested(mu)))


def multiplier_action(multipliers: Multipliers) -> AlgebraAction:
    """Action of M(R) on R by evaluation."""
    algebra = multipliers.mu.source
    n, m = algebra.dim, multipliers.algebra.dim
    p = algebra.prime
    maps = multiplier_space(algebra)
    rows, _ = span(maps.reshape(len(maps), n * n), n * n, p)
    basis = rows.reshape(m, n, n)
    act = np.transpose(basis, (0, 2, 1))
    return mk_action(multipliers.algebra, algebra, nested(act))
