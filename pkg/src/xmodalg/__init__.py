"""xmodalg - crossed modules and 2-crossed modules of algebras over F_p."""

import logging

from .constructions import induced_2xmod_epi, induced_xmod_epi, pullback_2xmod
from .core.algebra import (
    check_action,
    mk_action,
    mk_algebra,
    mk_morphism,
    prime_field,
    truncated_polynomial,
    zero_algebra,
)
from .exceptions import (
    InvalidInputError,
    MathematicalFailure,
    SearchSpaceTooLarge,
    XmodError,
)
from .models import (
    AlgebraAction,
    AlgebraElement,
    AlgebraMorphism,
    CrossedModule,
    FiniteAlgebra,
    Ideal,
    PeifferLifting,
    PreCrossedModule,
    Report,
    Subspace,
    TwoCrossedModule,
    TwoCrossedMorphism,
    Violation,
    XModMorphism,
)
from .settings import Settings
from .x2mod import (
    check_2morphism,
    check_2xmod,
    functor_alpha,
    functor_beta,
    functor_sk,
    functor_tr,
)
from .xmod import check_crossed, check_precrossed, check_xmod_morphism, pullback_xmod

__version__ = "0.3.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "AlgebraAction",
    "AlgebraElement",
    "AlgebraMorphism",
    "CrossedModule",
    "FiniteAlgebra",
    "Ideal",
    "InvalidInputError",
    "MathematicalFailure",
    "PeifferLifting",
    "PreCrossedModule",
    "Report",
    "SearchSpaceTooLarge",
    "Settings",
    "Subspace",
    "TwoCrossedModule",
    "TwoCrossedMorphism",
    "Violation",
    "XModMorphism",
    "XmodError",
    "check_2morphism",
    "check_2xmod",
    "check_action",
    "check_crossed",
    "check_precrossed",
    "check_xmod_morphism",
    "functor_alpha",
    "functor_beta",
    "functor_sk",
    "functor_tr",
    "induced_2xmod_epi",
    "induced_xmod_epi",
    "mk_action",
    "mk_algebra",
    "mk_morphism",
    "prime_field",
    "pullback_2xmod",
    "pullback_xmod",
    "truncated_polynomial",
    "zero_algebra",
]
