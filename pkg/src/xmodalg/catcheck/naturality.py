"""Naturality of pullback and induced objects under composition of base morphisms."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from xmodalg.catcheck.homs import find_vertical_isomorphism
from xmodalg.constructions import induced_2xmod_epi, pullback_2xmod
from xmodalg.core.algebra import compose
from xmodalg.exceptions import NoIsomorphismFound
from xmodalg.models.report import Report
from xmodalg.x2mod import check_2morphism

if TYPE_CHECKING:
    from xmodalg.models.algebra import AlgebraMorphism
    from xmodalg.models.x2mod import TwoCrossedModule
    from xmodalg.settings import Settings

logger = logging.getLogger(__name__)


def _compare(
    subject: str,
    stepwise: TwoCrossedModule,
    direct: TwoCrossedModule,
    settings: Settings | None,
) -> Report:
    report = Report(subject=subject)
    report.stats["dims"] = f"{stepwise.L.dim},{stepwise.M.dim} vs {direct.L.dim},{direct.M.dim}"
    try:
        iso = find_vertical_isomorphism(stepwise, direct, settings)
    except NoIsomorphismFound as e:
        report.expect("naturality.isomorphism", False, detail=e.message)  # noqa: FBT003
        return report
    report.merge(check_2morphism(iso, stepwise, direct), prefix="naturality.")
    return report


def check_pullback_naturality(
    phi: AlgebraMorphism,
    phi_prime: AlgebraMorphism,
    X: TwoCrossedModule,
    settings: Settings | None = None,
) -> Report:
    """Compare pulling back along phi' then phi with pulling back along phi' phi.

    Args:
        phi: Monomorphism S -> R
        phi_prime: Monomorphism R -> Q
        X: 2-crossed module over Q
        settings: Search limit and parallelism

    Returns:
        Report with axiom ``naturality.isomorphism`` when no vertical
        isomorphism exists

    Raises:
        EndpointMismatch: If the morphisms are not composable
        NotMono: If either morphism has a nonzero kernel
    """
    composite = compose(phi_prime, phi)
    stepwise = pullback_2xmod(phi, pullback_2xmod(phi_prime, X).result).result
    direct = pullback_2xmod(composite, X).result
    return _compare("naturality.pullback", stepwise, direct, settings)


def check_induced_naturality(
    phi: AlgebraMorphism,
    phi_prime: AlgebraMorphism,
    D: TwoCrossedModule,
    settings: Settings | None = None,
) -> Report:
    """Compare inducing along phi then phi' with inducing along phi' phi.

    Args:
        phi: Epimorphism S -> R
        phi_prime: Epimorphism R -> Q
        D: 2-crossed module over S
        settings: Search limit and parallelism

    Returns:
        Report with axiom ``naturality.isomorphism`` when no vertical
        isomorphism exists

    Raises:
        EndpointMismatch: If the morphisms are not composable
        NotEpi: If either morphism is not surjective
    """
    composite = compose(phi_prime, phi)
    stepwise = induced_2xmod_epi(phi_prime, induced_2xmod_epi(phi, D).result).result
    direct = induced_2xmod_epi(composite, D).result
    return _compare("naturality.induced", stepwise, direct, settings)
