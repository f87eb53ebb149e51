"""2-crossed modules, Peiffer liftings and their morphisms."""

from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    field_serializer,
    field_validator,
    model_validator,
)

from xmodalg.core.linalg import frozen, has_shape, reduce_nested
from xmodalg.exceptions import EndpointMismatch, ShapeMismatch
from xmodalg.models.algebra import (  # noqa: TC001
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
)
from xmodalg.types import IntArray, Tensor3  # noqa: TC001


class PeifferLifting(BaseModel):
    """Bilinear map M x M -> L given by constants.

    ``lift[i][j][k]`` is the coefficient of l_k in {m_i, m_j}. No symmetry is
    assumed.
    """

    model_config = ConfigDict(frozen=True)

    M: FiniteAlgebra
    L: FiniteAlgebra
    lift: Tensor3 = Field(..., description="Lifting constants b[i][j][k]")

    @model_validator(mode="before")
    @classmethod
    def _reduce_coefficients(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("L"), FiniteAlgebra):
            data = dict(data)
            data["lift"] = reduce_nested(data.get("lift", ()), data["L"].prime)
        return data

    @model_validator(mode="after")
    def _check_shape(self) -> PeifferLifting:
        shape = (self.M.dim, self.M.dim, self.L.dim)
        if not has_shape(self.lift, shape):
            msg = f"lifting constants must have shape {shape}"
            raise ShapeMismatch(msg)
        return self

    @property
    def tensor(self) -> IntArray:
        """Lifting constants as an array."""
        return frozen(self.lift, (self.M.dim, self.M.dim, self.L.dim))

    def apply(self, left: IntArray, right: IntArray) -> IntArray:
        """Evaluate {m, m'} on coefficient vectors."""
        return np.mod(np.einsum("i,j,ijk->k", left, right, self.tensor), self.L.prime)


class TwoCrossedModule(BaseModel):
    """A complex L -> M -> P of P-algebras with a Peiffer lifting.

    Construction validates endpoints and shapes only; the complex,
    equivariance and PL1-PL5 axioms are checked by ``check_2xmod``. The lifting
    accepts either a ``PeifferLifting`` or its raw constants.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    L: FiniteAlgebra
    M: FiniteAlgebra
    P: FiniteAlgebra
    d2: AlgebraMorphism = Field(..., description="Boundary L -> M")
    d1: AlgebraMorphism = Field(..., description="Boundary M -> P")
    act_pl: AlgebraAction = Field(..., alias="actPL", description="Action of P on L")
    act_pm: AlgebraAction = Field(..., alias="actPM", description="Action of P on M")
    lift: PeifferLifting

    @field_validator("lift", mode="before")
    @classmethod
    def _wrap_constants(cls, value: Any, info: ValidationInfo) -> Any:
        if isinstance(value, PeifferLifting | dict):
            return value
        big, small = info.data.get("M"), info.data.get("L")
        if big is None or small is None:
            return value
        return PeifferLifting(M=big, L=small, lift=value)

    @field_serializer("lift")
    def _dump_constants(self, lift: PeifferLifting) -> Any:
        return lift.lift

    @model_validator(mode="after")
    def _check_endpoints(self) -> TwoCrossedModule:
        expected = {
            "d2": (self.d2.source, self.d2.target, self.L, self.M),
            "d1": (self.d1.source, self.d1.target, self.M, self.P),
            "actPL": (self.act_pl.actor, self.act_pl.acted, self.P, self.L),
            "actPM": (self.act_pm.actor, self.act_pm.acted, self.P, self.M),
            "lift": (self.lift.M, self.lift.L, self.M, self.L),
        }
        for name, (start, end, want_start, want_end) in expected.items():
            if start != want_start or end != want_end:
                msg = f"{name} does not connect the expected algebras"
                raise EndpointMismatch(msg, {"component": name})
        return self

    @property
    def is_trivial_lifting(self) -> bool:
        """Whether every lifting constant vanishes."""
        return not self.lift.tensor.any()


class TwoCrossedMorphism(BaseModel):
    """A triple (f2, f1, f0) of algebra morphisms between 2-crossed modules.

    Validity is checked by ``check_2morphism``.
    """

    model_config = ConfigDict(frozen=True)

    f2: AlgebraMorphism = Field(..., description="Morphism of top algebras L -> L'")
    f1: AlgebraMorphism = Field(..., description="Morphism of middle algebras M -> M'")
    f0: AlgebraMorphism = Field(..., description="Morphism of base algebras P -> P'")

    def key(self) -> tuple[Any, ...]:
        """Canonical flattened matrices, used to sort and compare triples."""
        return (self.f2.matrix, self.f1.matrix, self.f0.matrix)
