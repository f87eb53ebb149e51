"""Base change of 2-crossed modules along monomorphisms and epimorphisms.

Pullback along a monomorphism replaces the middle algebra by a fiber product;
the induced object along an epimorphism quotients by the ideals generated by
the kernel's action. Both results carry their canonical morphism and their
universal factorization.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from xmodalg.core.algebra import (
    fiber_coordinates,
    fiber_product,
    identity_morphism,
    ideal_from_vectors,
    kernel_image,
    mk_action,
    mk_morphism,
    pullback_action,
    quotient_by_ideal,
    quotient_projection,
)
from xmodalg.core.linalg import nested, solve
from xmodalg.exceptions import (
    EndpointMismatch,
    InternalError,
    IsMono,
    NotEpi,
    NotMono,
    WellDefinednessFailure,
)
from xmodalg.models.results import InducedResult, NonMonoWitness, PullbackResult
from xmodalg.models.x2mod import TwoCrossedModule, TwoCrossedMorphism
from xmodalg.x2mod import functor_alpha, functor_beta, require_input, require_valid
from xmodalg.xmod import fiber_action

if TYPE_CHECKING:
    from xmodalg.models.algebra import AlgebraAction, AlgebraMorphism, FiniteAlgebra, Ideal
    from xmodalg.models.xmod import CrossedModule
    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)


def nonmono_witness(phi: AlgebraMorphism, X: TwoCrossedModule) -> NonMonoWitness:
    """Element of the naive pullback complex C2 x Ker(phi) with d1* d2* nonzero.

    Args:
        phi: Morphism S -> R with nonzero kernel
        X: 2-crossed module over R

    Returns:
        The pair (0, s) for the first kernel basis vector s, with value s

    Raises:
        IsMono: If ``phi`` is injective
    """
    found = kernel_image(phi)
    if found.is_mono:
        msg = "morphism is injective; the pullback complex is exact"
        raise IsMono(msg)
    s = phi.source.element(found.kernel.rows[0])
    naive_dim = X.L.dim + found.kernel.dim
    logger.debug("naive pullback complex C2 x Ker(phi) has dimension %d", naive_dim)
    return NonMonoWitness(c2=X.L.zero(), s=s, value=s, naive_dim=naive_dim)


def pullback_2xmod(phi: AlgebraMorphism, X: TwoCrossedModule) -> PullbackResult:
    """Pull a 2-crossed module back along a monomorphism.

    The result is {C2, M x_P S, S} with d2*(c) = (d2 c, 0), d1* the second
    projection, S acting through phi and lifting {(m, s), (m', s')} = {m, m'}.

    Args:
        phi: Monomorphism S -> P
        X: 2-crossed module over P

    Returns:
        The pullback with its canonical morphism (id, phi', phi)

    Raises:
        EndpointMismatch: If ``phi`` does not land in the base of X
        PreconditionFailed: If X fails the 2-crossed module axioms
        NotMono: If ``phi`` has a nonzero kernel; carries the witness
    """
    if phi.target != X.P:
        msg = "base morphism does not land in the base of the 2-crossed module"
        raise EndpointMismatch(msg)
    require_input(X, "pullback")
    if not kernel_image(phi).is_mono:
        witness = nonmono_witness(phi, X)
        msg = (
            "pullback along a non-injective morphism is not a complex of S-algebras: "
            f"d1* d2* (0, {witness.s}) = {witness.value}"
        )
        raise NotMono(msg, witness)

    fp = fiber_product(X.d1, phi)
    S = phi.source
    p = S.prime
    top = X.L

    d2_star = fiber_coordinates(
        fp, X.d2.array, np.zeros((S.dim, top.dim), dtype=np.int64)
    )
    first = fp.first.array
    lift = np.mod(np.einsum("ai,bj,abk->ijk", first, first, X.lift.tensor), p)

    result = TwoCrossedModule(
        L=top,
        M=fp.algebra,
        P=S,
        d2=mk_morphism(top, fp.algebra, nested(d2_star)),
        d1=fp.second,
        act_pl=pullback_action(X.act_pl, phi),
        act_pm=fiber_action(phi, X.act_pm, fp),
        lift=nested(lift),
    )
    require_valid(result, "pullback")
    logger.debug("pullback middle algebra of dimension %d", fp.algebra.dim)
    canonical = TwoCrossedMorphism(f2=identity_morphism(top), f1=fp.first, f0=phi)
    return PullbackResult(result=result, canonical=canonical, phi=phi, source=X)


def _kernel_ideal(algebra: FiniteAlgebra, action: AlgebraAction, kernel: IntArray) -> Ideal:
    """Ideal generated by k.x for k in the kernel and x in the algebra."""
    d = algebra.dim
    generators = np.einsum("ri,ijk->rjk", kernel, action.tensor).reshape(len(kernel) * d, d)
    return ideal_from_vectors(algebra, np.mod(generators, algebra.prime))


def _assert_vanishes(
    algebra: FiniteAlgebra, values: IntArray, ideal: Ideal, what: str
) -> None:
    """Raise unless every column of ``values`` is zero.

    Columns are indexed by the rows of ``ideal``; a nonzero column means the
    zero coset gets two different values.
    """
    bad = np.flatnonzero(np.mod(values, algebra.prime).any(axis=0))
    if len(bad):
        row = ideal.array[int(bad[0])]
        name = algebra.render(row)
        raise WellDefinednessFailure(f"{what}: 0 + ({name})", ("0", name))


def induced_2xmod_epi(phi: AlgebraMorphism, D: TwoCrossedModule) -> InducedResult:
    """Induced 2-crossed module along an epimorphism.

    With K = Ker(phi), the top and middle algebras are divided by the ideals
    KD2 and KD1 generated by K acting on them; R acts through any pre-image.

    Args:
        phi: Epimorphism S -> R
        D: 2-crossed module over S

    Returns:
        The induced object with its canonical morphism (pi2, pi1, phi)

    Raises:
        EndpointMismatch: If ``phi`` does not start at the base of D
        PreconditionFailed: If D fails the 2-crossed module axioms
        NotEpi: If ``phi`` is not surjective
        WellDefinednessFailure: If some quotient structure depends on the
            representative
    """
    if phi.source != D.P:
        msg = "base morphism does not start at the base of the 2-crossed module"
        raise EndpointMismatch(msg)
    require_input(D, "induced object")
    found = kernel_image(phi)
    if not found.is_epi:
        msg = "induced construction needs a surjective base morphism"
        raise NotEpi(msg, {"image_dim": found.image.dim, "target_dim": phi.target.dim})
    R = phi.target
    p = R.prime
    kernel = found.kernel.array

    kd1 = _kernel_ideal(D.M, D.act_pm, kernel)
    kd2 = _kernel_ideal(D.L, D.act_pl, kernel)
    middle = quotient_by_ideal(D.M, kd1)
    top = quotient_by_ideal(D.L, kd2)
    proj1, lift1 = quotient_projection(D.M, kd1)
    proj2, lift2 = quotient_projection(D.L, kd2)

    _assert_vanishes(D.L, proj1 @ D.d2.array @ kd2.array.T, kd2, "d2 on KD2")
    _assert_vanishes(D.M, phi.array @ D.d1.array @ kd1.array.T, kd1, "d1 on KD1")
    for i in range(D.P.dim):
        moved_m = np.einsum("jk,rj->kr", D.act_pm.tensor[i], kd1.array)
        _assert_vanishes(D.M, proj1 @ moved_m, kd1, "P-action on KD1")
        moved_l = np.einsum("jk,rj->kr", D.act_pl.tensor[i], kd2.array)
        _assert_vanishes(D.L, proj2 @ moved_l, kd2, "P-action on KD2")
    B = D.lift.tensor
    rows = (len(proj2) * D.M.dim, kd1.dim)
    left = np.einsum("rj,jik,ak->air", kd1.array, B, proj2).reshape(rows)
    right = np.einsum("rj,ijk,ak->air", kd1.array, B, proj2).reshape(rows)
    _assert_vanishes(D.M, left, kd1, "lifting {KD1, M}")
    _assert_vanishes(D.M, right, kd1, "lifting {M, KD1}")

    section = np.zeros((D.P.dim, R.dim), dtype=np.int64)
    for r in range(R.dim):
        target = np.zeros(R.dim, dtype=np.int64)
        target[r] = 1
        preimage = solve(phi.array, target, p)
        if preimage is None:
            msg = "surjective morphism has no pre-image"
            raise InternalError(msg)
        section[:, r] = preimage

    q1, q2 = middle.algebra, top.algebra
    d2_star = np.mod(proj1 @ D.d2.array @ lift2, p)
    d1_star = np.mod(phi.array @ D.d1.array @ lift1, p)
    act_pm = np.einsum("bi,cj,bck,ak->ija", section, lift1, D.act_pm.tensor, proj1)
    act_pl = np.einsum("bi,cj,bck,ak->ija", section, lift2, D.act_pl.tensor, proj2)
    lift = np.einsum("ai,bj,abk,ck->ijc", lift1, lift1, B, proj2)

    result = TwoCrossedModule(
        L=q2,
        M=q1,
        P=R,
        d2=mk_morphism(q2, q1, nested(d2_star)),
        d1=mk_morphism(q1, R, nested(d1_star)),
        act_pl=mk_action(R, q2, nested(np.mod(act_pl, p))),
        act_pm=mk_action(R, q1, nested(np.mod(act_pm, p))),
        lift=nested(np.mod(lift, p)),
    )
    require_valid(result, "induced object")
    logger.debug(
        "induced object with quotients of dimension %d and %d", q2.dim, q1.dim
    )
    canonical = TwoCrossedMorphism(f2=top.projection, f1=middle.projection, f0=phi)
    return InducedResult(
        result=result, canonical=canonical, phi=phi, source=D, kd1=kd1, kd2=kd2
    )


def pullback_factorize(
    result: PullbackResult, f: TwoCrossedMorphism, domain: TwoCrossedModule
) -> TwoCrossedMorphism:
    """Factor a morphism over phi through a pullback; see ``PullbackResult.factorize``."""
    return result.factorize(f, domain)


def induced_factorize(result: InducedResult, f: TwoCrossedMorphism) -> TwoCrossedMorphism:
    """Factor a morphism over phi through an induced object; see ``InducedResult.factorize``."""
    return result.factorize(f)


def induced_xmod_epi(phi: AlgebraMorphism, X: CrossedModule) -> CrossedModule:
    """Induced crossed module along an epimorphism, as beta of the induced alpha(X)."""
    return functor_beta(induced_2xmod_epi(phi, functor_alpha(X)).result)
