"""Results of base-change constructions and enumerations.

Each construction returns its object together with the canonical morphism and
the data its universal factorization needs, so that the factorization is
available as a method on the result.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from xmodalg.core.algebra import (
    FiberProduct,
    fiber_coordinates,
    identity_morphism,
    mk_morphism,
)
from xmodalg.core.linalg import nested, solve
from xmodalg.exceptions import EndpointMismatch, InternalError, InvalidInputError
from xmodalg.models.algebra import (
    AlgebraElement,
    AlgebraMorphism,
    FiniteAlgebra,
    Ideal,
)
from xmodalg.models.x2mod import TwoCrossedModule, TwoCrossedMorphism
from xmodalg.models.xmod import CrossedModule, PreCrossedModule, XModMorphism


class XModPullback(BaseModel):
    """Pullback of a crossed module along a base morphism."""

    model_config = ConfigDict(frozen=True)

    result: CrossedModule = Field(..., description="Pulled-back crossed module over S")
    projection: XModMorphism = Field(..., description="Canonical morphism into the input")
    phi: AlgebraMorphism = Field(..., description="Base morphism S -> R")

    def factorize(self, f: XModMorphism, source: CrossedModule) -> XModMorphism:
        """Factor a morphism over phi through the pullback.

        Args:
            f: Morphism (f, phi) from ``source`` into the input crossed module
            source: Crossed module (B, S, mu)

        Returns:
            The unique (f*, id_S) with projection after f* equal to f

        Raises:
            EndpointMismatch: If ``f`` does not lie over phi
        """
        if f.f0 != self.phi or source.R != self.phi.source or f.f1.source != source.C:
            msg = "morphism does not lie over the pullback base morphism"
            raise EndpointMismatch(msg)
        product = FiberProduct(self.result.C, self.projection.f1, self.result.bdry)
        matrix = fiber_coordinates(product, f.f1.array, source.bdry.array)
        star = mk_morphism(source.C, self.result.C, nested(matrix))
        return XModMorphism(f1=star, f0=identity_morphism(self.phi.source))


class PullbackResult(BaseModel):
    """Pullback 2-crossed module along a monomorphism."""

    model_config = ConfigDict(frozen=True)

    result: TwoCrossedModule = Field(..., description="Pulled-back object over S")
    canonical: TwoCrossedMorphism = Field(..., description="(id, phi', phi) into the input")
    phi: AlgebraMorphism = Field(..., description="Monomorphism S -> R")
    source: TwoCrossedModule = Field(..., description="Input 2-crossed module over R")

    def factorize(
        self, f: TwoCrossedMorphism, domain: TwoCrossedModule
    ) -> TwoCrossedMorphism:
        """Factor a morphism over phi through the pullback.

        Args:
            f: Morphism (f2, f1, phi) from ``domain`` into the input
            domain: 2-crossed module B over S

        Returns:
            The unique (f2, f1*, id_S) with f1*(b) = (f1(b), d1(b))

        Raises:
            EndpointMismatch: If ``f`` does not lie over phi
        """
        if f.f0 != self.phi or domain.P != self.phi.source:
            msg = "morphism does not lie over the pullback base morphism"
            raise EndpointMismatch(msg)
        if f.f1.source != domain.M or f.f1.target != self.source.M:
            msg = "middle component does not connect the expected algebras"
            raise EndpointMismatch(msg)
        if f.f2.source != domain.L or f.f2.target != self.result.L:
            msg = "top component does not connect the expected algebras"
            raise EndpointMismatch(msg)
        product = FiberProduct(self.result.M, self.canonical.f1, self.result.d1)
        matrix = fiber_coordinates(product, f.f1.array, domain.d1.array)
        star = mk_morphism(domain.M, self.result.M, nested(matrix))
        return TwoCrossedMorphism(f2=f.f2, f1=star, f0=identity_morphism(self.phi.source))


class InducedResult(BaseModel):
    """Induced 2-crossed module along an epimorphism."""

    model_config = ConfigDict(frozen=True)

    result: TwoCrossedModule = Field(..., description="Induced object over R")
    canonical: TwoCrossedMorphism = Field(..., description="(pi2, pi1, phi) from the input")
    phi: AlgebraMorphism = Field(..., description="Epimorphism S -> R")
    source: TwoCrossedModule = Field(..., description="Input 2-crossed module over S")
    kd1: Ideal = Field(..., description="Kernel ideal of the middle algebra")
    kd2: Ideal = Field(..., description="Kernel ideal of the top algebra")

    def factorize(self, f: TwoCrossedMorphism) -> TwoCrossedMorphism:
        """Factor a morphism over phi through the induced object.

        Args:
            f: Morphism (f2, f1, phi) from the input into some B over R

        Returns:
            The unique (f2*, f1*, id_R) with f2* after pi2 equal to f2 and
            f1* after pi1 equal to f1

        Raises:
            EndpointMismatch: If ``f`` does not lie over phi or does not
                vanish on the kernel ideals
        """
        if f.f0 != self.phi:
            msg = "morphism does not lie over the induced base morphism"
            raise EndpointMismatch(msg)
        if f.f1.source != self.source.M or f.f2.source != self.source.L:
            msg = "morphism does not start at the induced input"
            raise EndpointMismatch(msg)
        for name, part, ideal in (("f2", f.f2, self.kd2), ("f1", f.f1, self.kd1)):
            if np.mod(part.array @ ideal.array.T, part.target.prime).any():
                msg = f"{name} does not vanish on the kernel ideal"
                raise EndpointMismatch(msg)
        f2 = _through_quotient(f.f2, self.canonical.f2)
        f1 = _through_quotient(f.f1, self.canonical.f1)
        return TwoCrossedMorphism(f2=f2, f1=f1, f0=identity_morphism(self.phi.target))


def _through_quotient(f: AlgebraMorphism, projection: AlgebraMorphism) -> AlgebraMorphism:
    """The map on a quotient induced by a morphism vanishing on the kernel."""
    p = f.target.prime
    quotient = projection.target
    columns = []
    for j in range(quotient.dim):
        unit = np.zeros(quotient.dim, dtype=np.int64)
        unit[j] = 1
        representative = solve(projection.array, unit, p)
        if representative is None:
            msg = "projection is not surjective"
            raise InternalError(msg)
        columns.append(f.apply(representative))
    matrix = np.array(columns, dtype=np.int64).reshape(quotient.dim, f.target.dim).T
    return mk_morphism(quotient, f.target, nested(matrix))


class NonMonoWitness(BaseModel):
    """Element of the naive pullback complex with nonzero double boundary."""

    model_config = ConfigDict(frozen=True)

    c2: AlgebraElement = Field(..., description="Top component, taken as zero")
    s: AlgebraElement = Field(..., description="Nonzero kernel element of phi")
    value: AlgebraElement = Field(..., description="Value of the double boundary")
    naive_dim: int = Field(..., ge=0, description="Dimension of C2 x Ker(phi)")


class HomSet(BaseModel):
    """An enumerated set of morphisms between two objects."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["algebra", "xmod", "x2mod"]
    source: FiniteAlgebra | PreCrossedModule | TwoCrossedModule
    target: FiniteAlgebra | PreCrossedModule | TwoCrossedModule
    elements: tuple[AlgebraMorphism | XModMorphism | TwoCrossedMorphism, ...] = ()
    base: AlgebraMorphism | None = Field(None, description="Fixed base morphism, if any")

    @model_validator(mode="after")
    def _check_distinct(self) -> HomSet:
        if len(set(self.elements)) != len(self.elements):
            msg = "hom-set elements must be pairwise distinct"
            raise InternalError(msg)
        return self

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements


class TestFamily(BaseModel):
    """Finite family of 2-crossed modules quantified over by categorical checks."""

    __test__ = False
    model_config = ConfigDict(frozen=True)

    name: str = "family"
    members: tuple[TwoCrossedModule, ...] = ()

    @model_validator(mode="after")
    def _check_members(self) -> TestFamily:
        from xmodalg.x2mod import check_2xmod

        for n, member in enumerate(self.members):
            report = check_2xmod(member)
            if not report.ok:
                msg = f"family member {n} is not a 2-crossed module"
                raise InvalidInputError(msg, {"member": n, "axioms": report.failed_axioms})
        return self

    def over(self, base: FiniteAlgebra) -> list[TwoCrossedModule]:
        """Members whose base algebra has the structure of ``base``."""
        return [member for member in self.members if member.P.same_structure(base)]

    def __len__(self) -> int:
        return len(self.members)

