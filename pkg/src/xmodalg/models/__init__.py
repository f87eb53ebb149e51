"""Pydantic models for algebras, crossed modules and check reports."""

from .algebra import (
    AlgebraAction,
    AlgebraElement,
    AlgebraMorphism,
    FiniteAlgebra,
    Ideal,
    Subspace,
)
from .report import Report, Violation
from .x2mod import PeifferLifting, TwoCrossedModule, TwoCrossedMorphism
from .xmod import CrossedModule, PreCrossedModule, XModMorphism

__all__ = [
    "AlgebraAction",
    "AlgebraElement",
    "AlgebraMorphism",
    "CrossedModule",
    "FiniteAlgebra",
    "Ideal",
    "PeifferLifting",
    "PreCrossedModule",
    "Report",
    "Subspace",
    "TwoCrossedModule",
    "TwoCrossedMorphism",
    "Violation",
    "XModMorphism",
]
