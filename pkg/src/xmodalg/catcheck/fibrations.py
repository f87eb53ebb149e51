"""Cartesian and cocartesian morphisms relative to a finite test family."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from xmodalg.catcheck.homs import enum_2x_morphisms, enum_alg_morphisms, vertical_base
from xmodalg.core.algebra import compose
from xmodalg.models.report import Report
from xmodalg.x2mod import check_2morphism, compose_2morphisms

if TYPE_CHECKING:
    from xmodalg.models.results import TestFamily
    from xmodalg.models.x2mod import TwoCrossedModule, TwoCrossedMorphism
    from xmodalg.settings import Settings

logger = logging.getLogger(__name__)


def check_cartesian(
    f: TwoCrossedMorphism,
    source: TwoCrossedModule,
    target: TwoCrossedModule,
    family: TestFamily,
    settings: Settings | None = None,
) -> Report:
    """Check that f: Y -> X over u is cartesian against every member of a family.

    For each Z in the family, each theta: Z -> X and each v with u v equal to
    the base of theta, exactly one psi: Z -> Y over v must satisfy f psi = theta.

    Args:
        f: Morphism Y -> X
        source: Y
        target: X
        family: Test objects Z
        settings: Search limit and parallelism

    Returns:
        Report with axioms ``morphism.*``, ``cartesian.existence`` and
        ``cartesian.uniqueness``; indices are (member, theta)
    """
    report = Report(subject="cartesian")
    report.merge(check_2morphism(f, source, target), prefix="morphism.")
    if not report.ok:
        return report
    u = f.f0
    tested = 0
    for member, Z in enumerate(family.members):
        thetas = enum_2x_morphisms(Z, target, settings=settings).elements
        for v in enum_alg_morphisms(Z.P, source.P, settings).elements:
            over = compose(u, v)
            relevant = [(n, theta) for n, theta in enumerate(thetas) if theta.f0 == over]
            if not relevant:
                continue
            composites = [
                compose_2morphisms(f, psi)
                for psi in enum_2x_morphisms(Z, source, base=v, settings=settings).elements
            ]
            for n, theta in relevant:
                tested += 1
                count = composites.count(theta)
                if not report.expect(
                    "cartesian.existence",
                    count > 0,
                    indices=(member, n),
                    detail="no lift of theta through f over v",
                ) or not report.expect(
                    "cartesian.uniqueness",
                    count == 1,
                    indices=(member, n),
                    rhs=(count,),
                    detail="theta lifts through f in more than one way",
                ):
                    report.stats["tested"] = tested
                    return report
    report.stats["tested"] = tested
    logger.info("cartesian check: %d test morphisms", tested)
    return report


def check_cocartesian(
    f: TwoCrossedMorphism,
    source: TwoCrossedModule,
    target: TwoCrossedModule,
    family: TestFamily,
    settings: Settings | None = None,
) -> Report:
    """Check that f: Z -> Y over v is cocartesian against a family.

    Only vertical tests are needed: for every X' in the family over the base
    of Y and every theta': Z -> X' over v, exactly one vertical psi': Y -> X'
    must satisfy psi' f = theta'.

    Args:
        f: Morphism Z -> Y
        source: Z
        target: Y
        family: Test objects X'
        settings: Search limit and parallelism

    Returns:
        Report with axioms ``morphism.*``, ``cocartesian.existence`` and
        ``cocartesian.uniqueness``; indices are (member, theta')
    """
    report = Report(subject="cocartesian")
    report.merge(check_2morphism(f, source, target), prefix="morphism.")
    if not report.ok:
        return report
    tested = 0
    for member, other in enumerate(family.members):
        if not other.P.same_structure(target.P):
            continue
        vertical = vertical_base(target.P, other.P)
        composites = [
            compose_2morphisms(psi, f)
            for psi in enum_2x_morphisms(target, other, base=vertical, settings=settings).elements
        ]
        over = compose(vertical, f.f0)
        for n, theta in enumerate(
            enum_2x_morphisms(source, other, base=over, settings=settings).elements
        ):
            tested += 1
            count = composites.count(theta)
            if not report.expect(
                "cocartesian.existence",
                count > 0,
                indices=(member, n),
                detail="theta' does not factor through f vertically",
            ) or not report.expect(
                "cocartesian.uniqueness",
                count == 1,
                indices=(member, n),
                rhs=(count,),
                detail="theta' factors through f in more than one way",
            ):
                report.stats["tested"] = tested
                return report
    report.stats["tested"] = tested
    logger.info("cocartesian check: %d test morphisms", tested)
    return report
