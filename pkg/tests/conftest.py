"""Test configuration and fixtures."""

from collections.abc import Callable
from pathlib import Path

import pytest
from pydantic import BaseModel

from xmodalg.cli.workspace import write_object
from xmodalg.core.algebra import (
    action_by_multiplication,
    mk_morphism,
    prime_field,
    truncated_polynomial,
    zero_algebra,
    zero_morphism,
)
from xmodalg.models import (
    CrossedModule,
    FiniteAlgebra,
    PreCrossedModule,
    TwoCrossedModule,
)
from xmodalg.models.algebra import AlgebraMorphism
from xmodalg.settings import Settings
from xmodalg.x2mod import functor_alpha
from xmodalg.xmod import functor_gamma


@pytest.fixture
def settings() -> Settings:
    """Serial settings with the default search limit.

    Returns:
        Settings for one worker in lexicographic order.
    """
    return Settings(workers=1)


@pytest.fixture
def f2() -> FiniteAlgebra:
    """The prime field F_2.

    Returns:
        F_2 as a one-dimensional unital algebra.
    """
    return prime_field(2)


@pytest.fixture
def dual() -> FiniteAlgebra:
    """The dual numbers F_2[x]/(x^2).

    Returns:
        Two-dimensional algebra on the basis (1, x).
    """
    return truncated_polynomial(2, 2)


@pytest.fixture
def zero() -> FiniteAlgebra:
    """The zero algebra over F_2.

    Returns:
        Zero-dimensional algebra.
    """
    return zero_algebra(2)


@pytest.fixture
def projection(dual: FiniteAlgebra, f2: FiniteAlgebra) -> AlgebraMorphism:
    """The epimorphism F_2[x]/(x^2) -> F_2 killing x.

    Args:
        dual: Dual numbers fixture.
        f2: Prime field fixture.

    Returns:
        Surjective morphism with kernel (x).
    """
    return mk_morphism(dual, f2, [[1, 0]])


@pytest.fixture
def inclusion(f2: FiniteAlgebra, dual: FiniteAlgebra) -> AlgebraMorphism:
    """The monomorphism F_2 -> F_2[x]/(x^2) sending e to 1.

    Args:
        f2: Prime field fixture.
        dual: Dual numbers fixture.

    Returns:
        Injective morphism.
    """
    return mk_morphism(f2, dual, [[1], [0]])


@pytest.fixture
def non_crossed(f2: FiniteAlgebra) -> PreCrossedModule:
    """Pre-crossed module (F_2, F_2, 0) with the multiplication action.

    Args:
        f2: Prime field fixture.

    Returns:
        A pre-crossed module failing the Peiffer identity.
    """
    return PreCrossedModule(
        C=f2, R=f2, bdry=zero_morphism(f2, f2), action=action_by_multiplication(f2)
    )


@pytest.fixture
def gamma_f2(f2: FiniteAlgebra) -> CrossedModule:
    """Identity crossed module of F_2.

    Args:
        f2: Prime field fixture.

    Returns:
        The crossed module (F_2, F_2, id).
    """
    return functor_gamma(f2)


@pytest.fixture
def alpha_f2(gamma_f2: CrossedModule) -> TwoCrossedModule:
    """2-crossed module {0, F_2, F_2, 0, id}.

    Args:
        gamma_f2: Identity crossed module fixture.

    Returns:
        A 2-crossed module with zero top algebra.
    """
    return functor_alpha(gamma_f2)


@pytest.fixture
def alpha_dual(dual: FiniteAlgebra) -> TwoCrossedModule:
    """2-crossed module {0, A, A, 0, id} for the dual numbers A.

    Args:
        dual: Dual numbers fixture.

    Returns:
        A 2-crossed module over the dual numbers.
    """
    return functor_alpha(functor_gamma(dual))


@pytest.fixture
def write(tmp_path: Path) -> Callable[[str, BaseModel], Path]:
    """Write an object file into the test directory.

    Args:
        tmp_path: Pytest temporary directory.

    Returns:
        Callable taking a file stem and an object, returning the path.
    """

    def write_file(stem: str, value: BaseModel) -> Path:
        path = tmp_path / f"{stem}.json"
        write_object(value, path)
        return path

    return write_file
