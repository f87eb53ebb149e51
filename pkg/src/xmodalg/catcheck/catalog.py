"""Small catalogs of algebras, pre-crossed modules and 2-crossed modules.

Algebras are listed up to change of basis: each isomorphism class is
represented by the lexicographically smallest structure tensor in its
orbit under GL(n, p).
"""

from __future__ import annotations

import itertools
import logging
from typing import TYPE_CHECKING

import numpy as np

from xmodalg.catcheck.homs import enum_actions, enum_alg_morphisms
from xmodalg.core.algebra import ideal_from_vectors, mk_algebra, zero_algebra
from xmodalg.core.linalg import all_vectors, general_linear, nested, solve
from xmodalg.exceptions import SearchSpaceTooLarge
from xmodalg.models.results import TestFamily
from xmodalg.models.xmod import CrossedModule, PreCrossedModule
from xmodalg.settings import Settings
from xmodalg.x2mod import functor_alpha, functor_sk
from xmodalg.xmod import check_crossed, check_precrossed, ideal_pair

if TYPE_CHECKING:
    from xmodalg.models.algebra import FiniteAlgebra, Ideal
    from xmodalg.models.x2mod import TwoCrossedModule
    from xmodalg.types import IntArray

logger = logging.getLogger(__name__)


def _is_associative(c: IntArray, prime: int) -> bool:
    left = np.einsum("ija,akb->ijkb", c, c)
    right = np.einsum("jka,iab->ijkb", c, c)
    return not np.mod(left - right, prime).any()


def _unit_of(c: IntArray, prime: int) -> IntArray | None:
    """Solve sum_i e_i c[i, j, k] = delta_jk for e."""
    n = c.shape[0]
    system = c.transpose(1, 2, 0).reshape(n * n, n)
    return solve(system, np.eye(n, dtype=np.int64).reshape(n * n), prime)


def _orbit(c: IntArray, prime: int) -> IntArray:
    """Structure tensors of every change of basis, flattened one per row."""
    n = c.shape[0]
    pairs = general_linear(n, prime)
    forward = np.stack([g for g, _ in pairs])
    backward = np.stack([g_inv for _, g_inv in pairs])
    moved = np.einsum("gai,gbj,abk,glk->gijl", forward, forward, c, backward)
    return np.mod(moved, prime).reshape(len(pairs), n**3)


def _commutative_tensor(entries: tuple[int, ...], n: int) -> IntArray:
    c = np.zeros((n, n, n), dtype=np.int64)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    values = np.array(entries, dtype=np.int64).reshape(len(pairs), n)
    for (i, j), value in zip(pairs, values, strict=True):
        c[i, j] = value
        c[j, i] = value
    return c


def algebras_up_to_iso(
    prime: int, max_dim: int, settings: Settings | None = None
) -> list[FiniteAlgebra]:
    """Every commutative associative algebra of dimension at most ``max_dim``.

    Args:
        prime: Field characteristic
        max_dim: Largest dimension listed
        settings: Search limit applied to the candidate tensors of each dimension

    Returns:
        One representative per isomorphism class, ordered by dimension and
        structure tensor; a unit is designated whenever one exists

    Raises:
        SearchSpaceTooLarge: If some dimension has too many candidate tensors
    """
    settings = settings or Settings.from_env()
    found: list[FiniteAlgebra] = [zero_algebra(prime)]
    for n in range(1, max_dim + 1):
        free = n * n * (n + 1) // 2
        size = prime**free
        if size > settings.search_limit:
            raise SearchSpaceTooLarge(size, settings.search_limit)
        seen: set[tuple[int, ...]] = set()
        representatives: list[tuple[int, ...]] = []
        for entries in itertools.product(range(prime), repeat=free):
            c = _commutative_tensor(entries, n)
            if tuple(c.ravel().tolist()) in seen or not _is_associative(c, prime):
                continue
            orbit = {tuple(row) for row in _orbit(c, prime).tolist()}
            seen |= orbit
            representatives.append(min(orbit))
        for key in sorted(representatives):
            c = np.array(key, dtype=np.int64).reshape(n, n, n)
            unit = _unit_of(c, prime)
            found.append(
                mk_algebra(prime, n, nested(c), unit=None if unit is None else nested(unit))
            )
        logger.info("%d algebras of dimension %d over F_%d", len(representatives), n, prime)
    return found


def precrossed_family(
    prime: int, max_dim: int, settings: Settings | None = None
) -> list[PreCrossedModule]:
    """Every pre-crossed module (C, R, d) with C and R from the algebra catalog.

    Args:
        prime: Field characteristic
        max_dim: Largest dimension of C and R
        settings: Search limit and parallelism

    Returns:
        Pre-crossed modules in catalog order
    """
    algebras = algebras_up_to_iso(prime, max_dim, settings)
    family: list[PreCrossedModule] = []
    for C, R in itertools.product(algebras, repeat=2):
        actions = enum_actions(R, C, settings)
        for bdry in enum_alg_morphisms(C, R, settings).elements:
            for action in actions:
                X = PreCrossedModule(C=C, R=R, bdry=bdry, action=action)
                if check_precrossed(X).ok:
                    family.append(X)
    logger.info("%d pre-crossed modules of dimension at most %d", len(family), max_dim)
    return family


def principal_ideals(algebra: FiniteAlgebra) -> list[Ideal]:
    """Distinct ideals generated by one element, as reduced bases."""
    ideals: dict[tuple[int, ...], Ideal] = {}
    for vector in all_vectors(algebra.prime, algebra.dim):
        ideal = ideal_from_vectors(algebra, vector.reshape(1, algebra.dim))
        ideals.setdefault(tuple(ideal.array.ravel().tolist()), ideal)
    return list(ideals.values())


def twoxmod_family(
    prime: int, max_dim: int, settings: Settings | None = None, name: str | None = None
) -> TestFamily:
    """Catalog of 2-crossed modules built from small pre-crossed modules.

    Members are the skeleton of every pre-crossed module, alpha of every
    crossed one and alpha of every principal ideal inclusion.

    Args:
        prime: Field characteristic
        max_dim: Largest dimension of the underlying algebras
        settings: Search limit and parallelism
        name: Family name, derived from the arguments if omitted

    Returns:
        The family without repeated members
    """
    members: dict[TwoCrossedModule, None] = {}
    for X in precrossed_family(prime, max_dim, settings):
        members.setdefault(functor_sk(X))
        if check_crossed(X).ok:
            members.setdefault(functor_alpha(CrossedModule.from_precrossed(X)))
    for algebra in algebras_up_to_iso(prime, max_dim, settings):
        for ideal in principal_ideals(algebra):
            members.setdefault(functor_alpha(ideal_pair(algebra, ideal)))
    return TestFamily(name=name or f"F{prime}-dim{max_dim}", members=tuple(members))
