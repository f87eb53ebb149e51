"""Freeness of 2-crossed modules and of their top modules."""

from __future__ import annotations

import itertools
import logging
from typing import TYPE_CHECKING

import numpy as np

from xmodalg.catcheck.homs import enum_2x_morphisms
from xmodalg.core.algebra import identity_morphism
from xmodalg.core.linalg import all_vectors, rank
from xmodalg.exceptions import PreconditionFailed, SearchSpaceTooLarge, ShapeMismatch
from xmodalg.models.report import Report
from xmodalg.settings import Settings

if TYPE_CHECKING:
    from collections.abc import Sequence

    from xmodalg.models.algebra import AlgebraAction, AlgebraElement, FiniteAlgebra
    from xmodalg.models.results import TestFamily
    from xmodalg.models.x2mod import TwoCrossedModule
    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)


def _basis_maps(
    target: TwoCrossedModule, boundaries: IntArray, settings: Settings
) -> list[IntArray]:
    """Every choice of images in the target's top algebra with prescribed boundaries.

    Args:
        target: 2-crossed module whose top algebra receives the images
        boundaries: One row per generator, the required value of d2'
        settings: Search limit

    Returns:
        Matrices with one column per generator
    """
    p, t = target.L.prime, target.L.dim
    size = p ** (t * len(boundaries))
    if size > settings.search_limit:
        raise SearchSpaceTooLarge(size, settings.search_limit)
    vectors = all_vectors(p, t)
    values = np.mod(vectors @ target.d2.array.T, p)
    options = [
        vectors[~np.mod(values - boundary, p).any(axis=1)] for boundary in boundaries
    ]
    return [
        np.array(choice, dtype=np.int64).reshape(len(boundaries), t).T
        for choice in itertools.product(*options)
    ]


def check_free_2xmod(
    X: TwoCrossedModule,
    theta: Sequence[AlgebraElement],
    targets: TestFamily,
    settings: Settings | None = None,
) -> Report:
    """Check the universal property of a 2-crossed module with basis ``theta``.

    For each target X' over the same middle and base algebras, the morphisms
    (Phi, id, id): X -> X' are enumerated. ``free.boundary`` requires exactly
    one such Phi; ``free.basis`` requires, for every choice of images
    theta' with d2' theta' = d2 theta, exactly one Phi with Phi theta = theta'.

    Args:
        X: Candidate free 2-crossed module
        theta: Images of the basis set in the top algebra of X
        targets: Test objects sharing the middle and base algebras of X
        settings: Search limit and parallelism

    Returns:
        Report; indices are (target,) for ``free.boundary`` and
        (target, choice) for ``free.basis``

    Raises:
        PreconditionFailed: If a target has different middle or base algebras
        ShapeMismatch: If a basis image does not belong to the top algebra
    """
    settings = settings or Settings.from_env()
    if any(element.parent != X.L for element in theta):
        msg = "basis images must be elements of the top algebra"
        raise ShapeMismatch(msg)
    report = Report(subject="free-2xmod")
    gens = np.array([element.vector for element in theta], dtype=np.int64).reshape(
        len(theta), X.L.dim
    )
    boundaries = np.mod(gens @ X.d2.array.T, X.L.prime)
    middle, base = identity_morphism(X.M), identity_morphism(X.P)

    for member, other in enumerate(targets.members):
        if other.M != X.M or other.P != X.P:
            msg = f"target {member} does not share the middle and base algebras"
            raise PreconditionFailed(msg, {"member": member})
        phis = [
            f.f2.array
            for f in enum_2x_morphisms(
                X, other, base=base, middle=middle, settings=settings
            ).elements
        ]
        report.expect(
            "free.boundary",
            len(phis) == 1,
            indices=(member,),
            rhs=(len(phis),),
            detail="expected exactly one top map Phi with d2' Phi = d2",
        )
        images = [np.mod(phi @ gens.T, X.L.prime) for phi in phis]
        for n, choice in enumerate(_basis_maps(other, boundaries, settings)):
            count = sum(not np.mod(image - choice, X.L.prime).any() for image in images)
            if not report.expect(
                "free.basis",
                count == 1,
                indices=(member, n),
                rhs=(count,),
                detail="expected exactly one Phi with Phi theta = theta'",
            ):
                break
    report.stats["targets"] = len(targets)
    return report


def check_free_module(
    C2: FiniteAlgebra, action: AlgebraAction, basis_images: Sequence[AlgebraElement]
) -> Report:
    """Check that C2 is a free module over the actor with the given basis.

    Args:
        C2: The module, an algebra treated through its additive structure
        action: Action of C1 on C2
        basis_images: Proposed free generators in C2

    Returns:
        Report with axioms ``free.dimension`` and ``free.bijective``

    Raises:
        ShapeMismatch: If the action or a generator does not live on C2
    """
    if action.acted != C2 or any(element.parent != C2 for element in basis_images):
        msg = "action and generators must live on the given module"
        raise ShapeMismatch(msg)
    report = Report(subject="free-module")
    c1 = action.actor.dim
    expected = len(basis_images) * c1
    report.expect(
        "free.dimension",
        C2.dim == expected,
        lhs=(C2.dim,),
        rhs=(expected,),
        detail="dim C2 must equal the number of generators times dim C1",
    )
    columns = [
        action.apply(action.actor.basis_element(i).vector, generator.vector)
        for generator in basis_images
        for i in range(c1)
    ]
    matrix = np.array(columns, dtype=np.int64).reshape(expected, C2.dim).T
    found = rank(matrix, C2.prime)
    report.stats["rank"] = found
    report.expect(
        "free.bijective",
        found == C2.dim == expected,
        lhs=(found,),
        rhs=(C2.dim,),
        detail="the map from the free module to C2 is not bijective",
    )
    return report
