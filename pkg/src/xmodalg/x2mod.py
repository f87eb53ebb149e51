"""2-crossed modules: the PL axiom suite, morphisms and the Sk, Tr, alpha, beta functors.

Axiom identifiers used in reports:

- ``complex``: d1 d2 = 0
- ``equivariance.d2``, ``equivariance.d1``: boundaries commute with the P-actions
- ``PL1`` to ``PL4``, ``PL5.left`` and ``PL5.right``: the lifting axioms, with PL4
  in the form {m, d2 l} - {d2 l, m} = d1(m).l
"""

from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np

from xmodalg.core.algebra import (
    as_ideal,
    check_action,
    compose,
    identity_morphism,
    kernel_image,
    mk_action,
    mk_morphism,
    quotient_by_ideal,
    quotient_projection,
    restrict_action,
    subalgebra,
    zero_action,
    zero_algebra,
    zero_morphism,
)
from xmodalg.core.linalg import express, nested, solve
from xmodalg.exceptions import (
    EndpointMismatch,
    InternalError,
    InvalidInputError,
    PreconditionFailed,
)
from xmodalg.models.algebra import AlgebraAction, FiniteAlgebra
from xmodalg.models.report import Report
from xmodalg.models.x2mod import TwoCrossedModule, TwoCrossedMorphism
from xmodalg.models.xmod import CrossedModule, PreCrossedModule
from xmodalg.xmod import check_crossed, check_precrossed, peiffer_ideal

logger = logging.getLogger(__name__)


class DerivedAction(NamedTuple):
    """Action of M on L derived from the lifting, with its crossed module."""

    action: AlgebraAction
    xmod: CrossedModule
    report: Report


def check_2xmod(X: TwoCrossedModule) -> Report:
    """Run the full 2-crossed module axiom suite.

    Every axiom is evaluated on all basis tuples; the report keeps the first
    failing tuple of each axiom with both evaluated sides.

    Args:
        X: Candidate 2-crossed module

    Returns:
        Report of the violated axioms
    """
    report = Report(subject="2xmod")
    report.merge(check_action(X.act_pl, unit_law=False), prefix="actPL.")
    report.merge(check_action(X.act_pm, unit_law=False), prefix="actPM.")

    p = X.P.prime
    D2, D1 = X.d2.array, X.d1.array
    B = X.lift.tensor
    APL, APM = X.act_pl.tensor, X.act_pm.tensor
    CL, CM, CP = X.L.tensor, X.M.tensor, X.P.tensor

    report.expect_equal(
        "complex",
        (D1 @ D2).T,
        np.zeros((X.L.dim, X.P.dim), dtype=np.int64),
        p,
        index_dims=1,
        detail="d1 d2 = 0",
    )
    report.expect_equal(
        "equivariance.d2",
        np.einsum("ijk,ak->ija", APL, D2),
        np.einsum("bj,ibk->ijk", D2, APM),
        p,
        index_dims=2,
        detail="d2(p.l) = p.d2(l)",
    )
    report.expect_equal(
        "equivariance.d1",
        np.einsum("ijk,ak->ija", APM, D1),
        np.einsum("bj,ibk->ijk", D1, CP),
        p,
        index_dims=2,
        detail="d1(p.m) = p d1(m)",
    )
    report.expect_equal(
        "PL1",
        np.einsum("ijk,ak->ija", B, D2),
        CM - np.einsum("bj,bik->ijk", D1, APM),
        p,
        index_dims=2,
        detail="d2{m,m'} = mm' - d1(m').m",
    )
    report.expect_equal(
        "PL2",
        np.einsum("ai,bj,abk->ijk", D2, D2, B),
        CL,
        p,
        index_dims=2,
        detail="{d2 l, d2 l'} = ll'",
    )
    report.expect_equal(
        "PL3",
        np.einsum("jka,iab->ijkb", CM, B),
        np.einsum("ija,akb->ijkb", CM, B) + np.einsum("ck,ija,cab->ijkb", D1, B, APL),
        p,
        index_dims=3,
        detail="{m,m'm''} = {mm',m''} + d1(m'').{m,m'}",
    )
    report.expect_equal(
        "PL4",
        np.einsum("aj,iak->ijk", D2, B) - np.einsum("aj,aik->ijk", D2, B),
        np.einsum("ci,cjk->ijk", D1, APL),
        p,
        index_dims=2,
        detail="{m,d2 l} - {d2 l,m} = d1(m).l",
    )
    scaled = np.einsum("ija,kab->ijkb", B, APL)
    report.expect_equal(
        "PL5.left",
        scaled,
        np.einsum("kia,ajb->ijkb", APM, B),
        p,
        index_dims=3,
        detail="{m,m'}.p = {m.p,m'}",
    )
    report.expect_equal(
        "PL5.right",
        scaled,
        np.einsum("kja,iab->ijkb", APM, B),
        p,
        index_dims=3,
        detail="{m,m'}.p = {m,m'.p}",
    )
    report.stats["dims"] = f"{X.L.dim},{X.M.dim},{X.P.dim}"
    return report


def derived_action(X: TwoCrossedModule) -> DerivedAction:
    """Action m.l = {m, d2 l} of M on L and the crossed module (L, M, d2).

    The returned report also records whether {d2 l, m} = m.l - d1(m).l holds.

    Args:
        X: A valid 2-crossed module

    Returns:
        The derived action, the crossed module it makes and the split report

    Raises:
        NotCrossed: If (L, M, d2) fails to be crossed
    """
    p = X.P.prime
    D2, D1, B = X.d2.array, X.d1.array, X.lift.tensor
    act = np.mod(np.einsum("aj,iak->ijk", D2, B), p)
    action = mk_action(X.M, X.L, nested(act))

    report = Report(subject="derived-action")
    report.merge(check_action(action, unit_law=False))
    report.expect_equal(
        "split",
        np.einsum("aj,aik->ijk", D2, B),
        act - np.einsum("ci,cjk->ijk", D1, X.act_pl.tensor),
        p,
        index_dims=2,
        detail="{d2 l, m} = m.l - d1(m).l",
    )
    xmod = CrossedModule(C=X.L, R=X.M, bdry=X.d2, action=action)
    return DerivedAction(action, xmod, report)


def _require_connects(f: TwoCrossedMorphism, X: TwoCrossedModule, Y: TwoCrossedModule) -> None:
    parts = {
        "f2": (f.f2, X.L, Y.L),
        "f1": (f.f1, X.M, Y.M),
        "f0": (f.f0, X.P, Y.P),
    }
    for name, (part, source, target) in parts.items():
        if part.source != source or part.target != target:
            msg = f"{name} does not connect the expected algebras"
            raise EndpointMismatch(msg, {"component": name})


def check_2morphism(f: TwoCrossedMorphism, X: TwoCrossedModule, Y: TwoCrossedModule) -> Report:
    """Check that a triple is a morphism of 2-crossed modules X -> Y.

    Args:
        f: Candidate triple (f2, f1, f0)
        X: Source 2-crossed module
        Y: Target 2-crossed module

    Returns:
        Report on both squares, both action families and the lifting

    Raises:
        EndpointMismatch: If the components do not connect X and Y
    """
    _require_connects(f, X, Y)
    report = Report(subject="2xmod-morphism")
    p = X.P.prime
    F2, F1, F0 = f.f2.array, f.f1.array, f.f0.array

    report.expect_equal(
        "square.d1",
        (F0 @ X.d1.array).T,
        (Y.d1.array @ F1).T,
        p,
        index_dims=1,
        detail="f0 d1 = d1' f1",
    )
    report.expect_equal(
        "square.d2",
        (F1 @ X.d2.array).T,
        (Y.d2.array @ F2).T,
        p,
        index_dims=1,
        detail="f1 d2 = d2' f2",
    )
    report.expect_equal(
        "action.M",
        np.einsum("ijk,ak->ija", X.act_pm.tensor, F1),
        np.einsum("bi,cj,bck->ijk", F0, F1, Y.act_pm.tensor),
        p,
        index_dims=2,
        detail="f1(p.m) = f0(p).f1(m)",
    )
    report.expect_equal(
        "action.L",
        np.einsum("ijk,ak->ija", X.act_pl.tensor, F2),
        np.einsum("bi,cj,bck->ijk", F0, F2, Y.act_pl.tensor),
        p,
        index_dims=2,
        detail="f2(p.l) = f0(p).f2(l)",
    )
    report.expect_equal(
        "lifting",
        np.einsum("ijk,ak->ija", X.lift.tensor, F2),
        np.einsum("ai,bj,abk->ijk", F1, F1, Y.lift.tensor),
        p,
        index_dims=2,
        detail="f2{m,m'} = {f1 m, f1 m'}",
    )
    return report


def functor_sk(X: PreCrossedModule) -> TwoCrossedModule:
    """Skeleton 2-crossed module of a pre-crossed module.

    The top algebra is the Peiffer ideal with the restricted action, d2 is its
    inclusion and the lifting is {m, m'} = mm' - d1(m').m.

    Args:
        X: A pre-crossed module (M, P, d1)

    Returns:
        The 2-crossed module {<M,M>, M, P, incl, d1}

    Raises:
        PreconditionFailed: If X is not pre-crossed
        ActionNotRestrictable: If P moves the Peiffer ideal outside itself
        InternalError: If the result fails the axiom suite
    """
    checked = check_precrossed(X)
    if not checked.ok:
        msg = f"skeleton needs a pre-crossed module; {checked.failed_axioms[0]} fails"
        raise PreconditionFailed(msg, {"axioms": checked.failed_axioms})
    p, n = X.C.prime, X.C.dim
    ideal = peiffer_ideal(X)
    sub = subalgebra(X.C, ideal)
    act_pl = restrict_action(X.action, sub.inclusion)

    values = np.mod(X.C.tensor - np.einsum("bj,bik->ijk", X.bdry.array, X.action.tensor), p)
    coords = express(ideal.array, ideal.pivots, values.reshape(n * n, n), p)
    lift = coords.T.reshape(n, n, ideal.dim)

    result = TwoCrossedModule(
        L=sub.algebra,
        M=X.C,
        P=X.R,
        d2=sub.inclusion,
        d1=X.bdry,
        act_pl=act_pl,
        act_pm=X.action,
        lift=nested(lift),
    )
    require_valid(result, "skeleton")
    logger.debug("skeleton with Peiffer ideal of dimension %d", ideal.dim)
    return result


def functor_tr(X: TwoCrossedModule) -> PreCrossedModule:
    """Truncation (M, P, d1) of a 2-crossed module."""
    return PreCrossedModule(C=X.M, R=X.P, bdry=X.d1, action=X.act_pm)


def functor_alpha(X: PreCrossedModule) -> TwoCrossedModule:
    """The 2-crossed module {0, M, P, 0, d} with zero lifting.

    Pre-crossed input is accepted; the axiom suite then reports PL1.
    """
    top = zero_algebra(X.C.prime)
    n = X.C.dim
    return TwoCrossedModule(
        L=top,
        M=X.C,
        P=X.R,
        d2=zero_morphism(top, X.C),
        d1=X.bdry,
        act_pl=zero_action(X.R, top),
        act_pm=X.action,
        lift=nested(np.zeros((n, n, 0), dtype=np.int64)),
    )


def functor_beta(X: TwoCrossedModule) -> CrossedModule:
    """Quotient crossed module (M / Im d2, P, induced d1).

    Args:
        X: A valid 2-crossed module

    Returns:
        The crossed module on the quotient

    Raises:
        PreconditionFailed: If d1 d2 is nonzero
        NotAnIdeal: If the image of d2 is not an ideal of M
    """
    p = X.P.prime
    if np.mod(X.d1.array @ X.d2.array, p).any():
        msg = "quotient needs d1 d2 = 0"
        raise PreconditionFailed(msg)
    image = as_ideal(X.M, kernel_image(X.d2).image)
    quotient = quotient_by_ideal(X.M, image)
    projection, lift = quotient_projection(X.M, image)

    bdry = mk_morphism(quotient.algebra, X.P, nested(np.mod(X.d1.array @ lift, p)))
    act = np.mod(np.einsum("bj,ibk,ak->ija", lift, X.act_pm.tensor, projection), p)
    action = mk_action(X.P, quotient.algebra, nested(act))
    logger.debug("quotient crossed module of dimension %d", quotient.algebra.dim)
    return CrossedModule(C=quotient.algebra, R=X.P, bdry=bdry, action=action)


def trivial_lifting_report(X: TwoCrossedModule) -> Report:
    """Check the consequences of a vanishing Peiffer lifting.

    With zero lifting the boundaries are equivariant, (M, P, d1) is crossed,
    L has zero multiplication and d1(M) acts trivially on L.

    Args:
        X: 2-crossed module candidate with zero lifting

    Returns:
        Report of the failed consequences

    Raises:
        PreconditionFailed: If the lifting is nonzero
    """
    if not X.is_trivial_lifting:
        msg = "trivial-lifting analysis needs a zero lifting"
        raise PreconditionFailed(msg)
    p = X.P.prime
    suite = check_2xmod(X)
    report = Report(subject="trivial-lifting")
    report.expect(
        "remark.equivariance",
        not any(axiom.startswith("equivariance") for axiom in suite.failed_axioms),
        detail="both boundaries are equivariant",
    )
    truncated = check_crossed(functor_tr(X))
    first = truncated.violations[0] if truncated.violations else None
    report.expect(
        "remark.crossed",
        truncated.ok,
        indices=first.indices if first else (),
        detail="(M, P, d1) is a crossed module",
    )
    report.expect_equal(
        "remark.square_zero",
        X.L.tensor,
        np.zeros_like(X.L.tensor),
        p,
        index_dims=2,
        detail="ll' = 0",
    )
    report.expect_equal(
        "remark.trivial_action",
        np.einsum("ci,cjk->ijk", X.d1.array, X.act_pl.tensor),
        np.zeros((X.M.dim, X.L.dim, X.L.dim), dtype=np.int64),
        p,
        index_dims=2,
        detail="d1(m).l = 0",
    )
    report.stats["2xmod.ok"] = suite.ok
    return report


def identity_2morphism(X: TwoCrossedModule) -> TwoCrossedMorphism:
    """The identity triple on X."""
    return TwoCrossedMorphism(
        f2=identity_morphism(X.L),
        f1=identity_morphism(X.M),
        f0=identity_morphism(X.P),
    )


def compose_2morphisms(g: TwoCrossedMorphism, f: TwoCrossedMorphism) -> TwoCrossedMorphism:
    """Componentwise composite ``g`` after ``f``."""
    return TwoCrossedMorphism(
        f2=compose(g.f2, f.f2),
        f1=compose(g.f1, f.f1),
        f0=compose(g.f0, f.f0),
    )


def free_seed(Y: FiniteAlgebra, S: FiniteAlgebra, action: AlgebraAction) -> TwoCrossedModule:
    """The 2-crossed module {Y, Y, S, id, 0} with lifting {y, y'} = yy'.

    Args:
        Y: Algebra standing for the basis set
        S: Base algebra
        action: Action of S on Y

    Returns:
        The seed 2-crossed module

    Raises:
        EndpointMismatch: If the action does not connect S and Y
    """
    if action.actor != S or action.acted != Y:
        msg = "seed action must be an action of S on Y"
        raise EndpointMismatch(msg)
    return TwoCrossedModule(
        L=Y,
        M=Y,
        P=S,
        d2=identity_morphism(Y),
        d1=zero_morphism(Y, S),
        act_pl=action,
        act_pm=action,
        lift=Y.mul,
    )


def sk_counit(Y: TwoCrossedModule) -> tuple[TwoCrossedMorphism | None, Report]:
    """Canonical comparison Sk(Tr(Y)) -> Y.

    The top component sends each skeleton lifting value {m, m'} to Y's lifting
    {m, m'}; the other components are identities.

    Args:
        Y: A valid 2-crossed module

    Returns:
        The triple, or None when the top component is not a well-defined
        morphism, together with a report explaining the outcome
    """
    skeleton = functor_sk(functor_tr(Y))
    report = Report(subject="sk-counit")
    p, n = Y.P.prime, Y.M.dim
    values = skeleton.lift.tensor.reshape(n * n, skeleton.L.dim).T
    targets = Y.lift.tensor.reshape(n * n, Y.L.dim).T

    rows = []
    for k in range(Y.L.dim):
        row = solve(values.T, targets[k], p)
        if row is None:
            report.expect(
                "counit.well_defined",
                False,  # noqa: FBT003
                indices=(k,),
                detail="lifting values of Y are not a linear image of the skeleton's",
            )
            return None, report
        rows.append(row)
    matrix = np.array(rows, dtype=np.int64).reshape(Y.L.dim, skeleton.L.dim)
    try:
        top = mk_morphism(skeleton.L, Y.L, nested(matrix))
    except InvalidInputError as e:
        report.expect("counit.multiplicative", False, detail=e.message)  # noqa: FBT003
        return None, report

    triple = TwoCrossedMorphism(f2=top, f1=identity_morphism(Y.M), f0=identity_morphism(Y.P))
    report.merge(check_2morphism(triple, skeleton, Y))
    return triple, report


def require_valid(X: TwoCrossedModule, what: str) -> None:
    """Raise unless a constructed object passes the axiom suite.

    Args:
        X: Constructed 2-crossed module
        what: Name of the construction, used in the message

    Raises:
        InternalError: If some axiom fails
    """
    report = check_2xmod(X)
    if not report.ok:
        first = report.violations[0]
        msg = f"{what} failed {first.axiom} at {first.indices}"
        raise InternalError(msg, {"axioms": report.failed_axioms})


def require_input(X: TwoCrossedModule, what: str) -> None:
    """Raise unless the input of a construction passes the axiom suite.

    Args:
        X: Input 2-crossed module
        what: Name of the construction, used in the message

    Raises:
        PreconditionFailed: If some axiom fails; names the first one
    """
    report = check_2xmod(X)
    if not report.ok:
        first = report.violations[0]
        msg = f"{what} needs a 2-crossed module; {first.axiom} fails at {first.indices}"
        raise PreconditionFailed(msg, {"axioms": report.failed_axioms})
