"""Adjunctions checked element by element on enumerated hom-sets.

Two adjunctions are covered: induced objects left adjoint to pullbacks
along a base morphism, and the pair beta-then-delta left adjoint to
gamma-then-alpha between 2-crossed modules and algebras. Each check
enumerates both hom-sets, transports every element across with the
explicit bijection and transports it back.

Report axioms: ``<side>.cardinality`` and ``<side>.roundtrip`` with side
``pullback``, ``induced`` or ``algebra``.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from xmodalg.catcheck.homs import enum_2x_morphisms, enum_alg_morphisms
from xmodalg.constructions import induced_2xmod_epi, pullback_2xmod
from xmodalg.core.algebra import compose, identity_morphism, kernel_image, zero_morphism
from xmodalg.exceptions import BijectionFailure, EndpointMismatch, PreconditionFailed
from xmodalg.models.report import Report
from xmodalg.models.x2mod import TwoCrossedMorphism
from xmodalg.x2mod import compose_2morphisms, functor_alpha, functor_beta
from xmodalg.xmod import functor_delta, functor_gamma

if TYPE_CHECKING:
    from collections.abc import Callable

    from xmodalg.models.algebra import AlgebraMorphism, FiniteAlgebra
    from xmodalg.models.results import HomSet
    from xmodalg.models.x2mod import TwoCrossedModule
    from xmodalg.settings import Settings

logger = logging.getLogger(__name__)


def _compare_sides(
    report: Report,
    side: str,
    left: HomSet,
    right: HomSet,
    forward: Callable[[object], object],
    backward: Callable[[object], object],
) -> None:
    """Record whether two transports are mutually inverse bijections.

    Raises:
        BijectionFailure: If a transported element is not in the other hom-set
    """
    report.stats[f"{side}.left"] = len(left)
    report.stats[f"{side}.right"] = len(right)
    report.expect(
        f"{side}.cardinality",
        len(left) == len(right),
        lhs=(len(left),),
        rhs=(len(right),),
        detail="hom-sets have different sizes",
    )
    for position, (elements, there, back, other) in enumerate(
        ((left.elements, forward, backward, right), (right.elements, backward, forward, left))
    ):
        for n, element in enumerate(elements):
            image = there(element)
            if image not in other:
                msg = f"{side}: element {n} is sent outside the opposite hom-set"
                raise BijectionFailure(msg, {"side": side, "element": n, "from": position})
            if not report.expect(
                f"{side}.roundtrip",
                back(image) == element,
                indices=(position, n),
                detail="transporting there and back does not return the element",
            ):
                return


def check_adjunction_pullback_induced(
    phi: AlgebraMorphism,
    D: TwoCrossedModule,
    B: TwoCrossedModule,
    settings: Settings | None = None,
) -> Report:
    """Check the bijections between hom-sets over a base morphism phi: S -> R.

    For a monomorphism, Hom over S from D to the pullback of B corresponds to
    the morphisms D -> B over phi. For an epimorphism, Hom over R from the
    induced object of D to B corresponds to the same set.

    Args:
        phi: Base morphism S -> R, injective or surjective
        D: 2-crossed module over S
        B: 2-crossed module over R
        settings: Search limit and parallelism

    Returns:
        Report on every available side

    Raises:
        EndpointMismatch: If D or B sits over the wrong base
        PreconditionFailed: If phi is neither injective nor surjective
        BijectionFailure: If a transported element leaves its hom-set
    """
    if D.P != phi.source or B.P != phi.target:
        msg = "objects do not sit over the ends of the base morphism"
        raise EndpointMismatch(msg)
    found = kernel_image(phi)
    if not (found.is_mono or found.is_epi):
        msg = "base morphism must be injective or surjective"
        raise PreconditionFailed(msg)

    report = Report(subject="adjunction.pullback-induced")
    over_phi = enum_2x_morphisms(D, B, base=phi, settings=settings)
    report.stats["over_phi"] = len(over_phi)

    if found.is_mono:
        pulled = pullback_2xmod(phi, B)
        vertical = enum_2x_morphisms(
            D, pulled.result, base=identity_morphism(phi.source), settings=settings
        )
        _compare_sides(
            report,
            "pullback",
            vertical,
            over_phi,
            lambda g: compose_2morphisms(pulled.canonical, g),
            lambda f: pulled.factorize(f, D),
        )
    if found.is_epi:
        induced = induced_2xmod_epi(phi, D)
        vertical = enum_2x_morphisms(
            induced.result, B, base=identity_morphism(phi.target), settings=settings
        )
        _compare_sides(
            report,
            "induced",
            vertical,
            over_phi,
            lambda g: compose_2morphisms(g, induced.canonical),
            induced.factorize,
        )
    logger.info("pullback-induced adjunction: %d morphisms over phi", len(over_phi))
    return report


def check_adjunction_alg(
    X: TwoCrossedModule, R: FiniteAlgebra, settings: Settings | None = None
) -> Report:
    """Check k-Alg(delta beta X, R) against the 2-crossed morphisms X -> alpha gamma R.

    A base morphism f0 corresponds to (0, f0 d1, f0); a triple corresponds
    to its base component.

    Args:
        X: A 2-crossed module
        R: An algebra
        settings: Search limit and parallelism

    Returns:
        Report with axioms ``algebra.cardinality`` and ``algebra.roundtrip``

    Raises:
        BijectionFailure: If a transported element leaves its hom-set
    """
    base = functor_delta(functor_beta(X))
    target = functor_alpha(functor_gamma(R))
    report = Report(subject="adjunction.algebra")
    left = enum_alg_morphisms(base, R, settings)
    right = enum_2x_morphisms(X, target, settings=settings)

    def forward(f0: AlgebraMorphism) -> TwoCrossedMorphism:
        return TwoCrossedMorphism(
            f2=zero_morphism(X.L, target.L), f1=compose(f0, X.d1), f0=f0
        )

    def backward(f: TwoCrossedMorphism) -> AlgebraMorphism:
        return f.f0

    _compare_sides(report, "algebra", left, right, forward, backward)
    return report
