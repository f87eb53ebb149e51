"""Pre-crossed and crossed modules of algebras."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from xmodalg.exceptions import EndpointMismatch, NotCrossed
from xmodalg.models.algebra import (  # noqa: TC001
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
)


class PreCrossedModule(BaseModel):
    """A boundary map C -> R together with an action of R on C.

    Only the endpoints are validated on construction; the equivariance axiom
    is checked by ``check_precrossed``.
    """

    model_config = ConfigDict(frozen=True)

    C: FiniteAlgebra = Field(..., description="Acted-on algebra")
    R: FiniteAlgebra = Field(..., description="Base algebra")
    bdry: AlgebraMorphism = Field(..., description="Boundary morphism C -> R")
    action: AlgebraAction = Field(..., description="Action of R on C")

    @model_validator(mode="after")
    def _check_endpoints(self) -> PreCrossedModule:
        if self.bdry.source != self.C or self.bdry.target != self.R:
            msg = "boundary must be a morphism C -> R"
            raise EndpointMismatch(msg)
        if self.action.actor != self.R or self.action.acted != self.C:
            msg = "action must be an action of R on C"
            raise EndpointMismatch(msg)
        return self


class CrossedModule(PreCrossedModule):
    """A pre-crossed module satisfying the Peiffer identity.

    Raises:
        NotCrossed: If equivariance or the Peiffer identity fails
    """

    @model_validator(mode="after")
    def _check_crossed(self) -> CrossedModule:
        from xmodalg.xmod import check_crossed

        report = check_crossed(self)
        if not report.ok:
            first = report.violations[0]
            msg = f"not a crossed module: {first.axiom} fails at {first.indices}"
            raise NotCrossed(msg, {"axioms": list(report.failed_axioms)})
        return self

    @classmethod
    def from_precrossed(cls, data: PreCrossedModule) -> CrossedModule:
        """Promote a pre-crossed module after checking it is crossed."""
        return cls(C=data.C, R=data.R, bdry=data.bdry, action=data.action)


class XModMorphism(BaseModel):
    """A pair (f1, f0) of morphisms between crossed modules.

    ``f1`` maps the acted-on algebras and ``f0`` the base algebras. Validity
    is checked by ``check_xmod_morphism``.
    """

    model_config = ConfigDict(frozen=True)

    f1: AlgebraMorphism = Field(..., description="Morphism of acted-on algebras")
    f0: AlgebraMorphism = Field(..., description="Morphism of base algebras")
