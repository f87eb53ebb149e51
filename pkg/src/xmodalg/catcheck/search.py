"""Depth-first enumeration of morphisms with per-column pruning.

A morphism is found one matrix at a time. Each matrix is a *level*, filled
column by column from candidate image vectors; a rule is checked as soon as
every column it reads has been assigned. Later levels are built from the
matrices already chosen, so their rules may treat earlier matrices as
constants.

Work can be split across processes by partitioning the candidates for the
first free column; every worker receives the same immutable problem and
the merged solutions are sorted, so the output does not depend on the
schedule.
"""

from __future__ import annotations

import logging
import multiprocessing
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from xmodalg.core.linalg import all_vectors
from xmodalg.exceptions import SearchSpaceTooLarge
from xmodalg.settings import Settings

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from xmodalg.models.algebra import AlgebraAction, FiniteAlgebra
    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)

Solution = tuple["IntArray", ...]


@dataclass(frozen=True, eq=False)
class ProductRule:
    """F(x_i x_j) = F(x_i) F(x_j) for one basis pair.

    Attributes:
        i: First basis index
        j: Second basis index
        coeffs: Structure constants c[i][j][.] of the source
        table: Structure constants of the target
    """

    i: int
    j: int
    coeffs: IntArray
    table: IntArray

    @property
    def columns(self) -> frozenset[int]:
        """Columns read by the rule."""
        return frozenset({self.i, self.j, *np.flatnonzero(self.coeffs).tolist()})

    def holds(self, cols: IntArray, prime: int) -> bool:
        """Evaluate the rule on assigned columns."""
        lhs = cols @ self.coeffs
        rhs = np.einsum("a,b,abk->k", cols[:, self.i], cols[:, self.j], self.table)
        return not np.mod(lhs - rhs, prime).any()

    def filter(self, candidates: IntArray, prime: int) -> IntArray:
        """Keep the candidates for column i when the rule reads only that column."""
        lhs = candidates * int(self.coeffs[self.i])
        rhs = np.einsum("na,nb,abk->nk", candidates, candidates, self.table)
        return candidates[~np.mod(lhs - rhs, prime).any(axis=1)]


@dataclass(frozen=True, eq=False)
class LinearRule:
    """sum_t A_t F(x_{c_t}) = constant.

    Attributes:
        terms: Pairs of a column index and the matrix applied to it
        constant: Right-hand side vector
    """

    terms: tuple[tuple[int, IntArray], ...]
    constant: IntArray

    @property
    def columns(self) -> frozenset[int]:
        """Columns read by the rule."""
        return frozenset(column for column, _ in self.terms)

    def holds(self, cols: IntArray, prime: int) -> bool:
        """Evaluate the rule on assigned columns."""
        total = -self.constant
        for column, matrix in self.terms:
            total = total + matrix @ cols[:, column]
        return not np.mod(total, prime).any()

    def filter(self, candidates: IntArray, prime: int) -> IntArray:
        """Keep the candidates satisfying a rule on a single column."""
        matrix = sum(m for _, m in self.terms)
        values = candidates @ np.asarray(matrix).T - self.constant
        return candidates[~np.mod(values, prime).any(axis=1)]


Rule = ProductRule | LinearRule


@dataclass(eq=False)
class Level:
    """One unknown matrix with its candidate columns and rules.

    Attributes:
        name: Component name, e.g. ``f1``
        prime: Field characteristic
        source_dim: Number of columns
        target_dim: Length of each column
        rules: Constraints on the columns
        reverse: Try candidates in reverse lexicographic order
    """

    name: str
    prime: int
    source_dim: int
    target_dim: int
    rules: list[Rule] = field(default_factory=list)
    reverse: bool = False

    def candidates(self) -> list[IntArray]:
        """Candidate images per column after single-column pruning."""
        vectors = all_vectors(self.prime, self.target_dim)
        if self.reverse:
            vectors = vectors[::-1]
        options = [vectors for _ in range(self.source_dim)]
        for rule in self.rules:
            if len(rule.columns) == 1:
                (column,) = rule.columns
                options[column] = rule.filter(options[column], self.prime)
        return options

    def staged_rules(self) -> list[list[Rule]]:
        """Rules grouped by the depth at which their last column is assigned."""
        stages: list[list[Rule]] = [[] for _ in range(self.source_dim + 1)]
        for rule in self.rules:
            if len(rule.columns) == 1:
                continue
            stages[max(rule.columns, default=-1) + 1].append(rule)
        return stages

    def accepts(self, matrix: IntArray) -> bool:
        """Whether a complete matrix satisfies every rule."""
        return all(rule.holds(matrix, self.prime) for rule in self.rules)


def solve_level(level: Level, share: tuple[int, int] | None = None) -> Iterator[IntArray]:
    """Enumerate the matrices satisfying a level's rules.

    Args:
        level: The level to fill
        share: ``(index, count)`` keeps only the first-column candidates whose
            position is congruent to ``index`` modulo ``count``

    Yields:
        Complete target-dim x source-dim matrices
    """
    p, s = level.prime, level.source_dim
    stages = level.staged_rules()
    empty = np.zeros((level.target_dim, s), dtype=np.int64)
    if not all(rule.holds(empty, p) for rule in stages[0]):
        return
    options = level.candidates()
    cols = np.zeros((level.target_dim, s), dtype=np.int64)

    def descend(depth: int) -> Iterator[IntArray]:
        if depth == s:
            yield cols.copy()
            return
        for n, candidate in enumerate(options[depth]):
            if depth == 0 and share is not None and n % share[1] != share[0]:
                continue
            cols[:, depth] = candidate
            if all(rule.holds(cols, p) for rule in stages[depth + 1]):
                yield from descend(depth + 1)
        cols[:, depth] = 0

    yield from descend(0)


class MorphismProblem(ABC):
    """A staged search for tuples of matrices.

    Subclasses describe each level given the matrices chosen before it.
    Levels listed in ``fixed`` are not searched; their matrix is checked
    against the level's rules instead.
    """

    def __init__(self, prime: int, fixed: dict[int, IntArray] | None = None) -> None:
        self.prime = prime
        self.fixed = fixed or {}
        self.reverse = False

    @property
    @abstractmethod
    def depth(self) -> int:
        """Number of levels."""

    @abstractmethod
    def shape(self, index: int) -> tuple[int, int]:
        """(source dim, target dim) of a level."""

    @abstractmethod
    def rules(self, index: int, chosen: Solution) -> list[Rule]:
        """Rules of a level given the earlier matrices."""

    def level(self, index: int, chosen: Solution) -> Level:
        """Build a level from the matrices chosen so far."""
        source_dim, target_dim = self.shape(index)
        return Level(
            name=f"level{index}",
            prime=self.prime,
            source_dim=source_dim,
            target_dim=target_dim,
            rules=self.rules(index, chosen),
            reverse=self.reverse,
        )

    def space_size(self) -> int:
        """Number of unpruned candidate tuples."""
        size = 1
        for index in range(self.depth):
            if index not in self.fixed:
                source_dim, target_dim = self.shape(index)
                size *= self.prime ** (source_dim * target_dim)
        return size

    def first_free(self) -> int | None:
        """Index of the first searched level with at least one column."""
        for index in range(self.depth):
            if index not in self.fixed and self.shape(index)[0] > 0:
                return index
        return None

    def extend(self, chosen: Solution, share: tuple[int, int] | None = None) -> Iterator[Solution]:
        """Extend a partial solution by every admissible next matrix.

        Args:
            chosen: Matrices of the earlier levels
            share: Partition of the first free level's first column

        Yields:
            Complete solutions
        """
        index = len(chosen)
        if index == self.depth:
            yield chosen
            return
        level = self.level(index, chosen)
        if index in self.fixed:
            if level.accepts(self.fixed[index]):
                yield from self.extend((*chosen, self.fixed[index]), share)
            return
        own = share if index == self.first_free() else None
        for matrix in solve_level(level, own):
            yield from self.extend((*chosen, matrix), share)


def multiplicative_rules(source: FiniteAlgebra, target: FiniteAlgebra) -> list[Rule]:
    """F(x_i x_j) = F(x_i) F(x_j) for every pair i <= j."""
    rules: list[Rule] = []
    for i in range(source.dim):
        for j in range(i, source.dim):
            rules.append(ProductRule(i, j, source.tensor[i, j], target.tensor))
    return rules


def square_rules(
    target_bdry: IntArray, constants: IntArray
) -> list[Rule]:
    """B F(x_j) = constants[:, j] for every column j."""
    return [
        LinearRule(((j, target_bdry),), constants[:, j]) for j in range(constants.shape[1])
    ]


def action_rules(
    source: AlgebraAction, target: AlgebraAction, base: IntArray
) -> list[Rule]:
    """F(p_i . x_j) = f0(p_i) . F(x_j) with f0 given by ``base``.

    Args:
        source: Action of the source base on the source algebra
        target: Action of the target base on the target algebra
        base: Matrix of the already chosen base morphism

    Returns:
        One linear rule per (actor, acted) basis pair
    """
    n = source.acted.dim
    t = target.acted.dim
    eye = np.eye(t, dtype=np.int64)
    rules: list[Rule] = []
    for i in range(source.actor.dim):
        operator = target.operator(base[:, i])
        for j in range(n):
            weights: dict[int, IntArray] = {}
            for k in np.flatnonzero(source.tensor[i, j]).tolist():
                weights[k] = weights.get(k, 0) + int(source.tensor[i, j, k]) * eye
            weights[j] = weights.get(j, 0) - operator
            terms = tuple(
                (column, np.asarray(matrix)) for column, matrix in sorted(weights.items())
            )
            rules.append(LinearRule(terms, np.zeros(t, dtype=np.int64)))
    return rules


def _search_share(problem: MorphismProblem, share: tuple[int, int] | None) -> list[Solution]:
    return list(problem.extend((), share))


def _search_share_packed(args: tuple[MorphismProblem, tuple[int, int]]) -> list[Solution]:
    return _search_share(*args)


def solution_key(solution: Solution) -> tuple[tuple[int, ...], ...]:
    """Canonical sort key of a tuple of matrices."""
    return tuple(tuple(int(v) for v in matrix.ravel()) for matrix in solution)


def enumerate_solutions(
    problem: MorphismProblem, settings: Settings | None = None, what: str = "morphisms"
) -> list[Solution]:
    """Run a search within the configured limit, optionally in parallel.

    Args:
        problem: The staged search
        settings: Search limit, worker count and candidate order
        what: Description used in log messages

    Returns:
        Every solution, sorted by ``solution_key``

    Raises:
        SearchSpaceTooLarge: If the unpruned space exceeds the limit
    """
    settings = settings or Settings.from_env()
    size = problem.space_size()
    if size > settings.search_limit:
        raise SearchSpaceTooLarge(size, settings.search_limit)
    problem.reverse = settings.order == "reverse"

    workers = settings.workers if problem.first_free() is not None else 1
    logger.info("enumerating %s: search space %d, %d worker(s)", what, size, workers)
    if workers == 1:
        solutions = _search_share(problem, None)
    else:
        shares = [(problem, (index, workers)) for index in range(workers)]
        with multiprocessing.Pool(workers) as pool:
            chunks = pool.map(_search_share_packed, shares)
        solutions = [solution for chunk in chunks for solution in chunk]
    solutions.sort(key=solution_key)
    logger.info("found %d %s", len(solutions), what)
    return solutions


def distinct(solutions: Sequence[Solution]) -> bool:
    """Whether no solution repeats."""
    return len({solution_key(s) for s in solutions}) == len(solutions)
