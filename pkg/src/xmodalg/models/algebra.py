"""Finite-dimensional commutative algebras over prime fields.

All models are frozen and store exact coefficients as nested tuples of ints
reduced modulo the prime. Array views are built on demand and cached by
:func:`xmodalg.core.linalg.frozen`.
"""

from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from xmodalg.core.linalg import (
    coordinates,
    frozen,
    has_shape,
    is_prime,
    nested,
    reduce_nested,
    span,
)
from xmodalg.exceptions import (
    BadUnit,
    NotAnIdeal,
    NotAssociative,
    NotCommutative,
    NotMultiplicative,
    NotPrime,
    PrimeMismatch,
    ShapeMismatch,
)
from xmodalg.types import IntArray, Matrix, Tensor3, Vector  # noqa: TC001


def _prime_of(value: Any) -> int | None:
    if isinstance(value, FiniteAlgebra):
        return value.prime
    if isinstance(value, dict) and isinstance(value.get("prime"), int):
        return value["prime"]
    return None


def _reduce_fields(data: Any, prime: int | None, *names: str) -> Any:
    if not isinstance(data, dict) or prime is None or prime < 2:  # noqa: PLR2004
        return data
    data = dict(data)
    for name in names:
        if data.get(name) is not None:
            data[name] = reduce_nested(data[name], prime)
    return data


class FiniteAlgebra(BaseModel):
    """A commutative associative algebra over F_p given by structure constants.

    ``mul[i][j][k]`` is the coefficient of basis element k in the product of
    basis elements i and j. The unit, when present, is a coefficient vector.
    """

    model_config = ConfigDict(frozen=True)

    prime: int = Field(..., description="Field characteristic")
    dim: int = Field(..., ge=0, description="Dimension over F_p")
    basis: tuple[str, ...] = Field(..., description="Basis element names")
    mul: Tensor3 = Field(..., description="Structure constants c[i][j][k]")
    unit: Vector | None = Field(None, description="Coefficients of the identity")

    @model_validator(mode="before")
    @classmethod
    def _reduce_coefficients(cls, data: Any) -> Any:
        return _reduce_fields(data, _prime_of(data), "mul", "unit")

    @model_validator(mode="after")
    def _check_axioms(self) -> FiniteAlgebra:
        if not is_prime(self.prime):
            raise NotPrime(self.prime)
        d = self.dim
        if len(self.basis) != d:
            msg = f"{len(self.basis)} basis names given for dimension {d}"
            raise ShapeMismatch(msg)
        if not has_shape(self.mul, (d, d, d)):
            msg = f"structure constants must have shape ({d}, {d}, {d})"
            raise ShapeMismatch(msg)

        c = self.tensor
        p = self.prime
        asymmetric = np.argwhere(np.mod(c - c.transpose(1, 0, 2), p).any(axis=2))
        if len(asymmetric):
            i, j = (int(v) for v in asymmetric[0])
            raise NotCommutative(i, j, names=self.basis)

        left = np.einsum("ija,akb->ijkb", c, c)
        right = np.einsum("jka,iab->ijkb", c, c)
        broken = np.argwhere(np.mod(left - right, p).any(axis=3))
        if len(broken):
            i, j, k = (int(v) for v in broken[0])
            raise NotAssociative(i, j, k, names=self.basis)

        if self.unit is not None:
            if not has_shape(self.unit, (d,)):
                msg = f"unit must have {d} coefficients"
                raise ShapeMismatch(msg)
            acts = np.mod(np.einsum("a,aik->ik", self.unit_vector, c), p)
            wrong = np.argwhere((acts != np.eye(d, dtype=np.int64)).any(axis=1))
            if len(wrong):
                raise BadUnit(int(wrong[0][0]), names=self.basis)
        return self

    @property
    def tensor(self) -> IntArray:
        """Structure constants as a (dim, dim, dim) array."""
        return frozen(self.mul, (self.dim, self.dim, self.dim))

    @property
    def unit_vector(self) -> IntArray | None:
        """Unit coefficients as an array, if the algebra is unital."""
        if self.unit is None:
            return None
        return frozen(self.unit, (self.dim,))

    @property
    def is_unital(self) -> bool:
        """Whether a unit is designated."""
        return self.unit is not None

    def multiply(self, left: IntArray, right: IntArray) -> IntArray:
        """Multiply two coefficient vectors."""
        return np.mod(np.einsum("i,j,ijk->k", left, right, self.tensor), self.prime)

    def multiplication_operator(self, vector: IntArray) -> IntArray:
        """Matrix of multiplication by a fixed element."""
        return np.mod(np.einsum("i,ijk->kj", vector, self.tensor), self.prime)

    def element(self, coeffs: Any) -> AlgebraElement:
        """Build an element from coefficients."""
        return AlgebraElement(parent=self, coeffs=coeffs)

    def basis_element(self, index: int) -> AlgebraElement:
        """Return a basis element."""
        coeffs = [0] * self.dim
        coeffs[index] = 1
        return self.element(coeffs)

    def zero(self) -> AlgebraElement:
        """Return the zero element."""
        return self.element([0] * self.dim)

    def one(self) -> AlgebraElement | None:
        """Return the unit element, if designated."""
        if self.unit is None:
            return None
        return self.element(self.unit)

    def render(self, vector: Any) -> str:
        """Write a coefficient vector in terms of the basis names."""
        terms = []
        for coeff, name in zip(vector, self.basis, strict=True):
            value = int(coeff) % self.prime
            if value == 1:
                terms.append(name)
            elif value:
                terms.append(f"{value}{name}")
        return "+".join(terms) or "0"

    def same_structure(self, other: FiniteAlgebra) -> bool:
        """Compare primes and structure constants, ignoring names and units."""
        return self.prime == other.prime and self.mul == other.mul


class AlgebraElement(BaseModel):
    """An element of a finite algebra."""

    model_config = ConfigDict(frozen=True)

    parent: FiniteAlgebra
    coeffs: Vector

    @model_validator(mode="before")
    @classmethod
    def _reduce_coefficients(cls, data: Any) -> Any:
        if isinstance(data, dict):
            return _reduce_fields(data, _prime_of(data.get("parent")), "coeffs")
        return data

    @model_validator(mode="after")
    def _check_length(self) -> AlgebraElement:
        if len(self.coeffs) != self.parent.dim:
            msg = (
                f"element has {len(self.coeffs)} coefficients, "
                f"parent has dimension {self.parent.dim}"
            )
            raise ShapeMismatch(msg)
        return self

    @property
    def vector(self) -> IntArray:
        """Coefficients as an array."""
        return frozen(self.coeffs, (self.parent.dim,))

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not any(self.coeffs)

    def _coerce(self, other: AlgebraElement) -> IntArray:
        if other.parent != self.parent:
            msg = "elements belong to different algebras"
            raise ShapeMismatch(msg)
        return other.vector

    def _with(self, vector: IntArray) -> AlgebraElement:
        return AlgebraElement(parent=self.parent, coeffs=nested(vector))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return self._with(self.vector + self._coerce(other))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self._with(self.vector - self._coerce(other))

    def __neg__(self) -> AlgebraElement:
        return self._with(-self.vector)

    def __mul__(self, other: AlgebraElement | int) -> AlgebraElement:
        if isinstance(other, int):
            return self._with(self.vector * other)
        return self._with(self.parent.multiply(self.vector, self._coerce(other)))

    def __rmul__(self, other: int) -> AlgebraElement:
        return self._with(self.vector * other)

    def __str__(self) -> str:
        return self.parent.render(self.coeffs)


class AlgebraMorphism(BaseModel):
    """A multiplicative linear map between finite algebras.

    ``matrix`` has one row per target basis element and one column per source
    basis element. Units need not be preserved.
    """

    model_config = ConfigDict(frozen=True)

    source: FiniteAlgebra
    target: FiniteAlgebra
    matrix: Matrix = Field(..., description="target-dim x source-dim matrix")

    @model_validator(mode="before")
    @classmethod
    def _reduce_coefficients(cls, data: Any) -> Any:
        if isinstance(data, dict):
            return _reduce_fields(data, _prime_of(data.get("target")), "matrix")
        return data

    @model_validator(mode="after")
    def _check_multiplicative(self) -> AlgebraMorphism:
        if self.source.prime != self.target.prime:
            raise PrimeMismatch(self.source.prime, self.target.prime)
        t, s = self.target.dim, self.source.dim
        if not has_shape(self.matrix, (t, s)):
            msg = f"morphism matrix must have shape ({t}, {s})"
            raise ShapeMismatch(msg)

        f = self.array
        images = np.einsum("ijk,ak->ija", self.source.tensor, f)
        products = np.einsum("ai,bj,abk->ijk", f, f, self.target.tensor)
        broken = np.argwhere(np.mod(images - products, self.source.prime).any(axis=2))
        if len(broken):
            i, j = (int(v) for v in broken[0])
            raise NotMultiplicative(i, j, names=self.source.basis)
        return self

    @property
    def array(self) -> IntArray:
        """Matrix as a (target dim, source dim) array."""
        return frozen(self.matrix, (self.target.dim, self.source.dim))

    def apply(self, vector: IntArray) -> IntArray:
        """Apply the map to a coefficient vector."""
        return np.mod(self.array @ vector, self.target.prime)

    def __call__(self, element: AlgebraElement) -> AlgebraElement:
        if element.parent != self.source:
            msg = "element does not belong to the morphism source"
            raise ShapeMismatch(msg)
        return self.target.element(nested(self.apply(element.vector)))


class AlgebraAction(BaseModel):
    """Bilinear action of one algebra on another.

    ``act[i][j][k]`` is the coefficient of acted basis element k in the action
    of actor basis element i on acted basis element j. Only shapes are
    validated; the action axioms are checked by ``check_action``.
    """

    model_config = ConfigDict(frozen=True)

    actor: FiniteAlgebra
    acted: FiniteAlgebra
    act: Tensor3 = Field(..., description="Action constants a[i][j][k]")

    @model_validator(mode="before")
    @classmethod
    def _reduce_coefficients(cls, data: Any) -> Any:
        if isinstance(data, dict):
            return _reduce_fields(data, _prime_of(data.get("acted")), "act")
        return data

    @model_validator(mode="after")
    def _check_shape(self) -> AlgebraAction:
        if self.actor.prime != self.acted.prime:
            raise PrimeMismatch(self.actor.prime, self.acted.prime)
        shape = (self.actor.dim, self.acted.dim, self.acted.dim)
        if not has_shape(self.act, shape):
            msg = f"action constants must have shape {shape}"
            raise ShapeMismatch(msg)
        return self

    @property
    def tensor(self) -> IntArray:
        """Action constants as an array."""
        return frozen(self.act, (self.actor.dim, self.acted.dim, self.acted.dim))

    def apply(self, actor: IntArray, acted: IntArray) -> IntArray:
        """Act with one coefficient vector on another."""
        return np.mod(np.einsum("i,j,ijk->k", actor, acted, self.tensor), self.acted.prime)

    def operator(self, actor: IntArray) -> IntArray:
        """Matrix of the action of a fixed actor element."""
        return np.mod(np.einsum("i,ijk->kj", actor, self.tensor), self.acted.prime)

    def __call__(self, actor: AlgebraElement, acted: AlgebraElement) -> AlgebraElement:
        return self.acted.element(nested(self.apply(actor.vector, acted.vector)))


class Subspace(BaseModel):
    """A subspace of F_p^n stored as a reduced row echelon basis."""

    model_config = ConfigDict(frozen=True)

    prime: int
    ambient: int = Field(..., ge=0, description="Dimension of the ambient space")
    rows: Matrix = Field(default=(), description="Reduced basis rows")

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        prime, ambient = data.get("prime"), data.get("ambient")
        if not isinstance(prime, int) or not isinstance(ambient, int) or prime < 2:  # noqa: PLR2004
            return data
        data = dict(data)
        vectors = [np.array(row, dtype=np.int64) for row in data.get("rows", ())]
        reduced, _ = span(vectors, ambient, prime)
        data["rows"] = nested(reduced)
        return data

    @classmethod
    def spanned_by(cls, prime: int, ambient: int, vectors: Any) -> Subspace:
        """Build the span of a family of vectors."""
        return cls(prime=prime, ambient=ambient, rows=[nested(np.asarray(v)) for v in vectors])

    @property
    def dim(self) -> int:
        """Dimension of the subspace."""
        return len(self.rows)

    @property
    def array(self) -> IntArray:
        """Basis rows as a (dim, ambient) array."""
        return frozen(self.rows, (self.dim, self.ambient))

    @property
    def pivots(self) -> tuple[int, ...]:
        """Pivot column of each basis row."""
        return tuple(int(np.flatnonzero(row)[0]) for row in self.array)

    def coordinates(self, vector: IntArray) -> IntArray | None:
        """Coordinates of a vector in the basis rows, or None if outside."""
        return coordinates(self.array, self.pivots, vector, self.prime)

    def contains(self, vector: IntArray) -> bool:
        """Whether a vector lies in the subspace."""
        return self.coordinates(vector) is not None

    def is_within(self, other: Subspace) -> bool:
        """Whether this subspace is contained in another."""
        return all(other.contains(row) for row in self.array)

    def complement_columns(self) -> tuple[int, ...]:
        """Non-pivot columns; their standard vectors span a complement."""
        pivots = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in pivots)


class Ideal(Subspace):
    """A subspace of an algebra closed under multiplication by the algebra."""

    parent: FiniteAlgebra

    @model_validator(mode="before")
    @classmethod
    def _fill_from_parent(cls, data: Any) -> Any:
        if not isinstance(data, dict) or not isinstance(data.get("parent"), FiniteAlgebra):
            return data
        parent: FiniteAlgebra = data["parent"]
        data = dict(data)
        data.setdefault("prime", parent.prime)
        data.setdefault("ambient", parent.dim)
        vectors = [np.array(row, dtype=np.int64) for row in data.get("rows", ())]
        reduced, _ = span(vectors, parent.dim, parent.prime)
        data["rows"] = nested(reduced)
        return data

    @model_validator(mode="after")
    def _check_closed(self) -> Ideal:
        products = np.mod(
            np.einsum("ri,ijk->rjk", self.array, self.parent.tensor), self.prime
        )
        for r, row_products in enumerate(products):
            for j, product in enumerate(row_products):
                if not self.contains(product):
                    raise NotAnIdeal(r, j)
        return self

    @classmethod
    def of(cls, parent: FiniteAlgebra, vectors: Any) -> Ideal:
        """Build an ideal from vectors already spanning a closed subspace."""
        rows = [nested(np.asarray(v, dtype=np.int64)) for v in vectors]
        return cls(parent=parent, prime=parent.prime, ambient=parent.dim, rows=rows)

    def as_subspace(self) -> Subspace:
        """Forget the parent algebra."""
        return Subspace(prime=self.prime, ambient=self.ambient, rows=self.rows)
