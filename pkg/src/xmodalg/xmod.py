"""Pre-crossed and crossed modules: axiom checks, examples and base change."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from xmodalg.core.algebra import (
    action_by_multiplication,
    annihilator,
    FiberProduct,
    check_action,
    fiber_coordinates,
    fiber_product,
    identity_morphism,
    ideal_from_vectors,
    kernel_image,
    mk_action,
    multiplier_action,
    multiplier_algebra,
    restrict_action,
    subalgebra,
    zero_morphism,
)
from xmodalg.core.linalg import nested, solve
from xmodalg.exceptions import EndpointMismatch, InternalError, PreconditionFailed
from xmodalg.models.algebra import (
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
    Ideal,
    Subspace,
)
from xmodalg.models.report import Report
from xmodalg.models.results import XModPullback
from xmodalg.models.xmod import CrossedModule, PreCrossedModule, XModMorphism

if TYPE_CHECKING:
    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)


def check_precrossed(X: PreCrossedModule) -> Report:
    """Check the action axioms and equivariance d(r.c) = r d(c).

    Args:
        X: Candidate pre-crossed module

    Returns:
        Report of the violated axioms
    """
    report = Report(subject="precrossed")
    report.merge(check_action(X.action, unit_law=False))
    D = X.bdry.array
    report.expect_equal(
        "equivariance",
        np.einsum("ijk,ak->ija", X.action.tensor, D),
        np.einsum("bj,ibk->ijk", D, X.R.tensor),
        X.R.prime,
        index_dims=2,
        detail="d(r.c) = r d(c)",
    )
    return report


def check_crossed(X: PreCrossedModule) -> Report:
    """Check the pre-crossed axioms and the Peiffer identity d(c).c' = cc'.

    Args:
        X: Candidate crossed module

    Returns:
        Report of the violated axioms
    """
    report = check_precrossed(X)
    report.subject = "crossed"
    report.expect_equal(
        "peiffer",
        np.einsum("bi,bjk->ijk", X.bdry.array, X.action.tensor),
        X.C.tensor,
        X.C.prime,
        index_dims=2,
        detail="d(c).c' = cc'",
    )
    return report


def peiffer_commutators(X: PreCrossedModule) -> IntArray:
    """Peiffer commutators <c_i, c_j> = d(c_i).c_j - c_i c_j of basis pairs.

    Returns:
        Array of shape (dim C, dim C, dim C)
    """
    shifted = np.einsum("bi,bjk->ijk", X.bdry.array, X.action.tensor)
    return np.mod(shifted - X.C.tensor, X.C.prime)


def peiffer_ideal(X: PreCrossedModule) -> Ideal:
    """Ideal of C generated by the Peiffer commutators.

    Args:
        X: A pre-crossed module

    Returns:
        The Peiffer ideal; zero exactly when X is crossed
    """
    n = X.C.dim
    ideal = ideal_from_vectors(X.C, peiffer_commutators(X).reshape(n * n, n))
    logger.debug("Peiffer ideal of dimension %d", ideal.dim)
    return ideal


def pullback_xmod(phi: AlgebraMorphism, X: CrossedModule) -> XModPullback:
    """Pull a crossed module back along a base morphism.

    The result is the fiber product of the boundary and ``phi`` with boundary
    the second projection and action s'.(c, s) = (phi(s').c, s's).

    Args:
        phi: Morphism S -> R
        X: Crossed module over R

    Returns:
        The pulled-back crossed module, its projection and the factorizer

    Raises:
        EndpointMismatch: If ``phi`` does not land in the base of X
    """
    if phi.target != X.R:
        msg = "base morphism does not land in the base of the crossed module"
        raise EndpointMismatch(msg)
    fp = fiber_product(X.bdry, phi)
    result = CrossedModule(
        C=fp.algebra,
        R=phi.source,
        bdry=fp.second,
        action=fiber_action(phi, X.action, fp),
    )
    logger.debug("pulled back crossed module of dimension %d", fp.algebra.dim)
    return XModPullback(
        result=result,
        projection=XModMorphism(f1=fp.first, f0=phi),
        phi=phi,
    )


def fiber_action(
    phi: AlgebraMorphism, action: AlgebraAction, product: FiberProduct
) -> AlgebraAction:
    """Action s'.(m, s) = (phi(s').m, s's) of S on a fiber product over phi.

    Args:
        phi: Morphism S -> P
        action: Action of P on M
        product: Fiber product of some M -> P with phi

    Returns:
        Action of S on the fiber product
    """
    S = phi.source
    n = product.algebra.dim
    first, second = product.first.array, product.second.array
    left = np.einsum("bi,bck,cj->ikj", phi.array, action.tensor, first)
    right = np.einsum("ick,cj->ikj", S.tensor, second)
    act = np.zeros((S.dim, n, n), dtype=np.int64)
    for i in range(S.dim):
        act[i] = fiber_coordinates(product, left[i], right[i]).T
    return mk_action(S, product.algebra, nested(act))


def functor_delta(X: PreCrossedModule) -> FiniteAlgebra:
    """Base algebra of a crossed module."""
    return X.R


def functor_gamma(algebra: FiniteAlgebra) -> CrossedModule:
    """The identity crossed module (A, A, id) with the multiplication action."""
    return CrossedModule(
        C=algebra,
        R=algebra,
        bdry=identity_morphism(algebra),
        action=action_by_multiplication(algebra),
    )


def ideal_pair(algebra: FiniteAlgebra, ideal: Subspace) -> CrossedModule:
    """Inclusion of an ideal with the multiplication action.

    Args:
        algebra: The algebra R
        ideal: An ideal I of R

    Returns:
        The crossed module (I, R, inclusion)
    """
    sub = subalgebra(algebra, ideal)
    action = restrict_action(action_by_multiplication(algebra), sub.inclusion)
    return CrossedModule(C=sub.algebra, R=algebra, bdry=sub.inclusion, action=action)


def module_xmod(action: AlgebraAction) -> CrossedModule:
    """Zero-boundary crossed module of a module with zero multiplication.

    Args:
        action: Action of R on an algebra M with zero multiplication

    Returns:
        The crossed module (M, R, 0)

    Raises:
        PreconditionFailed: If M has a nonzero product
    """
    if action.acted.tensor.any():
        msg = "module must carry the zero multiplication"
        raise PreconditionFailed(msg)
    return CrossedModule(
        C=action.acted,
        R=action.actor,
        bdry=zero_morphism(action.acted, action.actor),
        action=action,
    )


def multiplier_xmod(algebra: FiniteAlgebra) -> CrossedModule:
    """The crossed module R -> M(R) into the multiplier algebra."""
    multipliers = multiplier_algebra(algebra)
    return CrossedModule(
        C=algebra,
        R=multipliers.algebra,
        bdry=multipliers.mu,
        action=multiplier_action(multipliers),
    )


def annihilator_kernel_report(X: PreCrossedModule) -> Report:
    """Recognize an epimorphism whose kernel annihilates C.

    The action must be the one induced by pre-images: r.c = c'c whenever
    d(c') = r.

    Args:
        X: Candidate crossed module

    Returns:
        Report on surjectivity, the kernel and the induced action
    """
    report = Report(subject="annihilator-kernel")
    found = kernel_image(X.bdry)
    if not report.expect("epi", found.is_epi, detail="boundary is onto"):
        return report
    report.expect(
        "kernel.annihilator",
        found.kernel.as_subspace().is_within(annihilator(X.C)),
        detail="Ker d lies in Ann(C)",
    )
    p = X.C.prime
    for i in range(X.R.dim):
        target = np.zeros(X.R.dim, dtype=np.int64)
        target[i] = 1
        preimage = solve(X.bdry.array, target, p)
        if preimage is None:
            msg = "surjective boundary has no pre-image"
            raise InternalError(msg)
        expected = X.C.multiplication_operator(preimage)
        actual = X.action.operator(target)
        wrong = np.argwhere(np.mod(expected - actual, p).any(axis=0))
        if len(wrong):
            j = int(wrong[0][0])
            report.expect(
                "action.induced",
                False,  # noqa: FBT003
                indices=(i, j),
                lhs=nested(actual[:, j]),
                rhs=nested(expected[:, j]),
                detail="r.c = c'c for a pre-image c' of r",
            )
            break
    report.stats["dim.kernel"] = found.kernel.dim
    return report


def is_annihilator_kernel_epi(X: PreCrossedModule) -> bool:
    """Whether X is an epimorphism with kernel in Ann(C) and the induced action."""
    return annihilator_kernel_report(X).ok


def kernel_action_report(X: PreCrossedModule) -> Report:
    """Check the ideal and trivial-action properties of a crossed module.

    The image of d is an ideal of R, Ker d is an ideal of C annihilated by C,
    and d(C) acts trivially on Ker d.

    Args:
        X: A crossed module

    Returns:
        Report on the image and kernel properties
    """
    report = Report(subject="kernel-action")
    p = X.C.prime
    found = kernel_image(X.bdry)

    report.expect("image.ideal", _is_closed(found.image, X.R), detail="d(C) is an ideal of R")
    report.expect("kernel.ideal", _is_closed(found.kernel, X.C), detail="Ker d is an ideal of C")

    kernel = found.kernel.array
    report.expect_equal(
        "kernel.annihilator",
        np.einsum("ri,ijk->rjk", kernel, X.C.tensor),
        np.zeros((len(kernel), X.C.dim, X.C.dim), dtype=np.int64),
        p,
        index_dims=2,
        detail="k c = 0 for k in Ker d",
    )
    report.expect_equal(
        "kernel.trivial_action",
        np.einsum("bj,bik,ri->rjk", X.bdry.array, X.action.tensor, kernel),
        np.zeros((len(kernel), X.C.dim, X.C.dim), dtype=np.int64),
        p,
        index_dims=2,
        detail="d(c).k = 0 for k in Ker d",
    )
    report.stats["dim.image"] = found.image.dim
    report.stats["dim.kernel"] = found.kernel.dim
    return report


def _is_closed(subspace: Subspace, algebra: FiniteAlgebra) -> bool:
    d = algebra.dim
    products = np.einsum("ri,ijk->rjk", subspace.array, algebra.tensor)
    vectors = np.mod(products, algebra.prime).reshape(subspace.dim * d, d)
    return all(subspace.contains(v) for v in vectors)


def check_xmod_morphism(f: XModMorphism, X: PreCrossedModule, Y: PreCrossedModule) -> Report:
    """Check that (f1, f0) is a morphism of crossed modules X -> Y.

    Args:
        f: Candidate morphism
        X: Source crossed module
        Y: Target crossed module

    Returns:
        Report on the commuting square and action compatibility

    Raises:
        EndpointMismatch: If the components do not connect X and Y
    """
    if f.f1.source != X.C or f.f1.target != Y.C or f.f0.source != X.R or f.f0.target != Y.R:
        msg = "morphism components do not connect the crossed modules"
        raise EndpointMismatch(msg)
    report = Report(subject="xmod-morphism")
    p = X.C.prime
    F1, F0 = f.f1.array, f.f0.array
    report.expect_equal(
        "square",
        (F0 @ X.bdry.array).T,
        (Y.bdry.array @ F1).T,
        p,
        index_dims=1,
        detail="f0 d = d' f1",
    )
    report.expect_equal(
        "action",
        np.einsum("ijk,ak->ija", X.action.tensor, F1),
        np.einsum("bi,cj,bck->ijk", F0, F1, Y.action.tensor),
        p,
        index_dims=2,
        detail="f1(r.c) = f0(r).f1(c)",
    )
    return report


def identity_xmod_morphism(X: PreCrossedModule) -> XModMorphism:
    """The identity morphism of a crossed module."""
    return XModMorphism(f1=identity_morphism(X.C), f0=identity_morphism(X.R))
