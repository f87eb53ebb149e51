"""Exceptions raised by xmodalg.

Axiom violations found by the ``check_*`` functions are reported as data and
never raised. The classes here cover malformed input, refused constructions,
exhausted search budgets and failures that can only come from a bug.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Any, ClassVar

if TYPE_CHECKING:
    from collections.abc import Sequence

    from xmodalg.types import JSONObject


def _basis_tuple(indices: Sequence[int], names: Sequence[str] | None = None) -> str:
    if names is not None and all(0 <= i < len(names) for i in indices):
        return "(" + ", ".join(names[i] for i in indices) + ")"
    return "(" + ", ".join(str(i) for i in indices) + ")"


class XmodError(Exception):
    """Base exception for all xmodalg errors.

    Args:
        message: Error message
        details: Structured data describing the failure
    """

    exit_code: ClassVar[int] = 2

    def __init__(self, message: str, details: JSONObject | None = None) -> None:
        self.message = message
        self.details: JSONObject = details or {}
        super().__init__(message)

    def to_json(self) -> JSONObject:
        """Describe the error as a JSON object.

        Returns:
            Error type, message and details
        """
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class InvalidInputError(XmodError):
    """Input data does not describe the object it claims to be."""


class NotPrime(InvalidInputError):
    """The field characteristic is not a prime."""

    def __init__(self, prime: int) -> None:
        super().__init__(f"{prime} is not a prime", {"prime": prime})


class ShapeMismatch(InvalidInputError):
    """A matrix or tensor has the wrong dimensions."""


class PrimeMismatch(InvalidInputError):
    """Two objects live over different prime fields."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(
            f"objects over F_{left} and F_{right} cannot be combined",
            {"left": left, "right": right},
        )


class _BasisTupleError(InvalidInputError):
    """Failure located at a tuple of basis indices."""

    template: ClassVar[str] = "axiom fails at {where}"

    def __init__(self, *indices: int, names: Sequence[str] | None = None) -> None:
        self.indices = tuple(indices)
        where = _basis_tuple(self.indices, names)
        super().__init__(
            self.template.format(where=where), {"indices": list(self.indices)}
        )


class NotCommutative(_BasisTupleError):
    """Structure constants are not symmetric."""

    template = "multiplication is not commutative at basis pair {where}"


class NotAssociative(_BasisTupleError):
    """Structure constants are not associative."""

    template = "multiplication is not associative at basis triple {where}"


class BadUnit(_BasisTupleError):
    """The designated unit does not act as identity."""

    template = "designated unit fails e*x = x at basis element {where}"


class NotMultiplicative(_BasisTupleError):
    """A linear map does not respect products."""

    template = "map is not multiplicative at basis pair {where}"


class NotAnIdeal(_BasisTupleError):
    """A subspace is not closed under multiplication by the algebra."""

    template = "subspace is not an ideal: row times basis element {where} escapes"


class ActionNotRestrictable(_BasisTupleError):
    """An action does not preserve a subspace."""

    template = "action does not restrict: actor times subspace vector {where} escapes"


class NotCrossed(InvalidInputError):
    """Data claimed to be a crossed module violates an axiom."""


class EndpointMismatch(InvalidInputError):
    """Morphism endpoints do not match the objects they connect."""


class NotMono(InvalidInputError):
    """A construction needs a monomorphism.

    Args:
        message: Error message
        witness: Kernel witness describing the obstruction
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        self.witness = witness
        details: JSONObject = {}
        if witness is not None:
            details["witness"] = {
                "c2": str(witness.c2),
                "s": str(witness.s),
                "value": str(witness.value),
            }
        super().__init__(message, details)


class IsMono(InvalidInputError):
    """A witness was requested for a monomorphism."""


class NotEpi(InvalidInputError):
    """A construction needs an epimorphism."""


class PreconditionFailed(InvalidInputError):
    """Input is well formed but outside the domain of an operation."""


class MalformedInput(InvalidInputError):
    """A JSON document could not be read.

    Args:
        path: File the document came from
        location: Position or key path of the problem
        reason: What went wrong
    """

    def __init__(self, path: str, location: str, reason: str) -> None:
        super().__init__(
            f"{path}: {location}: {reason}",
            {"path": path, "location": location},
        )


class UnknownReference(InvalidInputError):
    """A named reference has no definition."""


class SearchSpaceTooLarge(XmodError):
    """An enumeration would visit more candidates than allowed.

    Args:
        size: Number of candidate assignments
        limit: Configured upper bound
    """

    exit_code = 3

    def __init__(self, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(
            f"search space of {size} candidates exceeds the limit of {limit}",
            {"size": size, "limit": limit},
        )


class MathematicalFailure(XmodError):
    """A property that holds for every valid input failed."""

    exit_code = 1


class NotCommutativeMultipliers(MathematicalFailure):
    """Composition of multipliers did not commute."""


class WellDefinednessFailure(MathematicalFailure):
    """A structure on a quotient depends on the chosen representative.

    Args:
        coset: Description of the coset
        representatives: Two representatives giving different values
    """

    def __init__(self, coset: str, representatives: tuple[str, str]) -> None:
        first, second = representatives
        super().__init__(
            f"value on coset {coset} differs between representatives "
            f"{first} and {second}",
            {"coset": coset, "representatives": [first, second]},
        )


class BijectionFailure(MathematicalFailure):
    """A transported element left the hom-set it should land in."""


class NoIsomorphismFound(MathematicalFailure):
    """No vertical isomorphism connects two objects."""


class InternalError(MathematicalFailure):
    """A construction produced an invalid object."""


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the command-line exit code.

    Args:
        error: The raised exception

    Returns:
        Exit code: 1 for mathematical failures, 2 for input errors and
        3 for exhausted search budgets
    """
    if isinstance(error, XmodError):
        return error.exit_code

    error_map: dict[type[BaseException], int] = {
        json.JSONDecodeError: 2,
        OSError: 2,
        KeyError: 2,
        ValueError: 2,
    }
    for error_class, code in error_map.items():
        if isinstance(error, error_class):
            return code
    return 1
