"""Hom-set enumeration for algebras, actions, crossed and 2-crossed modules."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from xmodalg.catcheck.search import (
    LinearRule,
    MorphismProblem,
    ProductRule,
    Rule,
    Solution,
    action_rules,
    enumerate_solutions,
    multiplicative_rules,
    square_rules,
)
from xmodalg.core.algebra import is_isomorphism, mk_action, mk_morphism, multiplier_space
from xmodalg.core.linalg import express, nested, span
from xmodalg.exceptions import EndpointMismatch, NoIsomorphismFound
from xmodalg.models.results import HomSet
from xmodalg.models.x2mod import TwoCrossedMorphism
from xmodalg.models.xmod import XModMorphism

if TYPE_CHECKING:
    from xmodalg.models.algebra import AlgebraAction, AlgebraMorphism, FiniteAlgebra
    from xmodalg.models.x2mod import TwoCrossedModule
    from xmodalg.models.xmod import PreCrossedModule
    from xmodalg.settings import Settings
    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)


class AlgebraMapProblem(MorphismProblem):
    """Multiplicative linear maps A -> B."""

    def __init__(self, source: FiniteAlgebra, target: FiniteAlgebra) -> None:
        super().__init__(source.prime)
        self.source = source
        self.target = target

    @property
    def depth(self) -> int:
        return 1

    def shape(self, index: int) -> tuple[int, int]:  # noqa: ARG002
        return self.source.dim, self.target.dim

    def rules(self, index: int, chosen: Solution) -> list[Rule]:  # noqa: ARG002
        return multiplicative_rules(self.source, self.target)


class XModMapProblem(MorphismProblem):
    """Pairs (f0, f1) forming a morphism of pre-crossed modules."""

    def __init__(
        self, source: PreCrossedModule, target: PreCrossedModule, base: IntArray | None = None
    ) -> None:
        super().__init__(source.C.prime, {} if base is None else {0: base})
        self.source = source
        self.target = target

    @property
    def depth(self) -> int:
        return 2

    def shape(self, index: int) -> tuple[int, int]:
        if index == 0:
            return self.source.R.dim, self.target.R.dim
        return self.source.C.dim, self.target.C.dim

    def rules(self, index: int, chosen: Solution) -> list[Rule]:
        X, Y = self.source, self.target
        if index == 0:
            return multiplicative_rules(X.R, Y.R)
        (f0,) = chosen
        return [
            *multiplicative_rules(X.C, Y.C),
            *square_rules(Y.bdry.array, f0 @ X.bdry.array),
            *action_rules(X.action, Y.action, f0),
        ]


class TwoXMapProblem(MorphismProblem):
    """Triples found in the order f0, f1, f2 forming a morphism of 2-crossed modules."""

    def __init__(
        self,
        source: TwoCrossedModule,
        target: TwoCrossedModule,
        base: IntArray | None = None,
        middle: IntArray | None = None,
    ) -> None:
        fixed = {}
        if base is not None:
            fixed[0] = base
        if middle is not None:
            fixed[1] = middle
        super().__init__(source.P.prime, fixed)
        self.source = source
        self.target = target

    @property
    def depth(self) -> int:
        return 3

    def shape(self, index: int) -> tuple[int, int]:
        X, Y = self.source, self.target
        return [(X.P.dim, Y.P.dim), (X.M.dim, Y.M.dim), (X.L.dim, Y.L.dim)][index]

    def rules(self, index: int, chosen: Solution) -> list[Rule]:
        X, Y = self.source, self.target
        if index == 0:
            return multiplicative_rules(X.P, Y.P)
        if index == 1:
            (f0,) = chosen
            return [
                *multiplicative_rules(X.M, Y.M),
                *square_rules(Y.d1.array, f0 @ X.d1.array),
                *action_rules(X.act_pm, Y.act_pm, f0),
            ]
        f0, f1 = chosen
        return [
            *multiplicative_rules(X.L, Y.L),
            *square_rules(Y.d2.array, f1 @ X.d2.array),
            *action_rules(X.act_pl, Y.act_pl, f0),
            *self._lifting_rules(f1),
        ]

    def _lifting_rules(self, f1: IntArray) -> list[Rule]:
        """f2{m_i, m_j} = {f1 m_i, f1 m_j}' for every pair i <= j."""
        X, Y = self.source, self.target
        n, t = X.M.dim, Y.L.dim
        B = X.lift.tensor
        images = np.einsum("ai,bj,abk->ijk", f1, f1, Y.lift.tensor)
        eye = np.eye(t, dtype=np.int64)
        rules: list[Rule] = []
        for i in range(n):
            for j in range(n):
                terms = tuple(
                    (k, int(B[i, j, k]) * eye) for k in np.flatnonzero(B[i, j]).tolist()
                )
                rules.append(LinearRule(terms, images[i, j]))
        return rules


def _operator_table(acted: FiniteAlgebra) -> tuple[IntArray, IntArray]:
    """Basis of the operators D(mm') = D(m)m' and their composition constants."""
    p, n = acted.prime, acted.dim
    maps = multiplier_space(acted)
    m = len(maps)
    flat, pivots = span(maps.reshape(m, n * n), n * n, p)
    basis = flat.reshape(m, n, n)
    composites = np.mod(np.einsum("iab,jbc->ijac", basis, basis), p).reshape(m * m, n * n)
    table = express(flat, pivots, composites, p).T.reshape(m, m, m)
    return basis, table


class ActionProblem(MorphismProblem):
    """Actions of R on C, as maps from R into the operators commuting with C-multiplication.

    Each column is the coordinate vector of one actor's operator; the
    product rules make the assignment multiplicative for composition.
    """

    def __init__(self, actor: FiniteAlgebra, acted: FiniteAlgebra, *, unit_law: bool) -> None:
        super().__init__(actor.prime)
        self.actor = actor
        self.acted = acted
        self.unit_law = unit_law
        self.operators, self.table = _operator_table(acted)

    @property
    def depth(self) -> int:
        return 1

    def shape(self, index: int) -> tuple[int, int]:  # noqa: ARG002
        return self.actor.dim, len(self.operators)

    def rules(self, index: int, chosen: Solution) -> list[Rule]:  # noqa: ARG002
        R = self.actor
        rules: list[Rule] = [
            ProductRule(i, j, R.tensor[i, j], self.table)
            for i in range(R.dim)
            for j in range(R.dim)
        ]
        unit = R.unit_vector
        if self.unit_law and unit is not None and len(self.operators):
            n = self.acted.dim
            flat, pivots = span(self.operators.reshape(len(self.operators), n * n), n * n, R.prime)
            identity = express(flat, pivots, np.eye(n, dtype=np.int64).reshape(1, n * n), R.prime)
            scale = np.eye(len(self.operators), dtype=np.int64)
            terms = tuple((i, int(unit[i]) * scale) for i in np.flatnonzero(unit).tolist())
            rules.append(LinearRule(terms, identity[:, 0]))
        return rules

    def to_action(self, matrix: IntArray) -> AlgebraAction:
        """Action whose actor basis element i acts by the operator in column i."""
        operators = np.einsum("ti,tab->iab", matrix, self.operators)
        act = np.mod(np.transpose(operators, (0, 2, 1)), self.actor.prime)
        return mk_action(self.actor, self.acted, nested(act))


def enum_alg_morphisms(
    A: FiniteAlgebra, B: FiniteAlgebra, settings: Settings | None = None
) -> HomSet:
    """Every algebra morphism A -> B.

    Args:
        A: Source algebra
        B: Target algebra
        settings: Search limit and parallelism

    Returns:
        The hom-set in canonical order

    Raises:
        SearchSpaceTooLarge: If p^(dim A dim B) exceeds the limit
    """
    solutions = enumerate_solutions(AlgebraMapProblem(A, B), settings, "algebra morphisms")
    elements = tuple(mk_morphism(A, B, nested(f)) for (f,) in solutions)
    return HomSet(kind="algebra", source=A, target=B, elements=elements)


def enum_actions(
    actor: FiniteAlgebra,
    acted: FiniteAlgebra,
    settings: Settings | None = None,
    *,
    unit_law: bool = False,
) -> list[AlgebraAction]:
    """Every action of ``actor`` on ``acted`` satisfying associativity and multiplicativity.

    Args:
        actor: Acting algebra
        acted: Acted-on algebra
        settings: Search limit and parallelism
        unit_law: Also require the unit of a unital actor to act as the identity

    Returns:
        The actions in canonical order
    """
    problem = ActionProblem(actor, acted, unit_law=unit_law)
    solutions = enumerate_solutions(problem, settings, "actions")
    return [problem.to_action(matrix) for (matrix,) in solutions]


def enum_xmod_morphisms(
    X: PreCrossedModule,
    Y: PreCrossedModule,
    base: AlgebraMorphism | None = None,
    settings: Settings | None = None,
) -> HomSet:
    """Every morphism (f1, f0) of pre-crossed modules X -> Y.

    Args:
        X: Source
        Y: Target
        base: Fixed f0, if any
        settings: Search limit and parallelism

    Returns:
        The hom-set in canonical order

    Raises:
        EndpointMismatch: If ``base`` does not connect the base algebras
        SearchSpaceTooLarge: If the search space exceeds the limit
    """
    if base is not None and (base.source != X.R or base.target != Y.R):
        msg = "fixed base morphism does not connect the base algebras"
        raise EndpointMismatch(msg)
    problem = XModMapProblem(X, Y, None if base is None else base.array)
    solutions = enumerate_solutions(problem, settings, "crossed module morphisms")
    elements = tuple(
        XModMorphism(f1=mk_morphism(X.C, Y.C, nested(f1)), f0=mk_morphism(X.R, Y.R, nested(f0)))
        for f0, f1 in solutions
    )
    return HomSet(kind="xmod", source=X, target=Y, elements=elements, base=base)


def enum_2x_morphisms(
    X: TwoCrossedModule,
    Y: TwoCrossedModule,
    base: AlgebraMorphism | None = None,
    middle: AlgebraMorphism | None = None,
    settings: Settings | None = None,
) -> HomSet:
    """Every morphism of 2-crossed modules X -> Y.

    Args:
        X: Source
        Y: Target
        base: Fixed f0, if any
        middle: Fixed f1, if any
        settings: Search limit and parallelism

    Returns:
        The hom-set in canonical order

    Raises:
        EndpointMismatch: If a fixed component does not connect X and Y
        SearchSpaceTooLarge: If the search space exceeds the limit
    """
    for name, part, source, target in (("base", base, X.P, Y.P), ("middle", middle, X.M, Y.M)):
        if part is not None and (part.source != source or part.target != target):
            msg = f"fixed {name} morphism does not connect the expected algebras"
            raise EndpointMismatch(msg, {"component": name})
    problem = TwoXMapProblem(
        X,
        Y,
        None if base is None else base.array,
        None if middle is None else middle.array,
    )
    solutions = enumerate_solutions(problem, settings, "2-crossed module morphisms")
    elements = tuple(
        TwoCrossedMorphism(
            f2=mk_morphism(X.L, Y.L, nested(f2)),
            f1=mk_morphism(X.M, Y.M, nested(f1)),
            f0=mk_morphism(X.P, Y.P, nested(f0)),
        )
        for f0, f1, f2 in solutions
    )
    return HomSet(kind="x2mod", source=X, target=Y, elements=elements, base=base)


def vertical_base(source: FiniteAlgebra, target: FiniteAlgebra) -> AlgebraMorphism:
    """Identity matrix between two bases with the same structure constants.

    Raises:
        EndpointMismatch: If the structure constants differ
    """
    if not source.same_structure(target):
        msg = "base algebras differ; no vertical morphism exists"
        raise EndpointMismatch(msg)
    return mk_morphism(source, target, nested(np.eye(source.dim, dtype=np.int64)))


def find_vertical_isomorphism(
    X: TwoCrossedModule, Y: TwoCrossedModule, settings: Settings | None = None
) -> TwoCrossedMorphism:
    """First isomorphism X -> Y that is the identity on the base.

    Args:
        X: Source
        Y: Target over the same base
        settings: Search limit and parallelism

    Returns:
        An isomorphism (f2, f1, id)

    Raises:
        EndpointMismatch: If the bases differ
        NoIsomorphismFound: If every vertical morphism fails to be bijective
    """
    base = vertical_base(X.P, Y.P)
    if X.L.dim == Y.L.dim and X.M.dim == Y.M.dim:
        for f in enum_2x_morphisms(X, Y, base=base, settings=settings).elements:
            if is_isomorphism(f.f2) and is_isomorphism(f.f1):
                return f
    msg = "no vertical isomorphism between the 2-crossed modules"
    raise NoIsomorphismFound(msg, {"dims": [X.L.dim, X.M.dim, Y.L.dim, Y.M.dim]})
