"""Tests for algebra constructions."""

import numpy as np
import pytest

from xmodalg.core.algebra import (
    action_by_multiplication,
    annihilator,
    as_ideal,
    check_action,
    compose,
    direct_product,
    fiber_product,
    identity_morphism,
    ideal_generated,
    inverse,
    is_isomorphism,
    kernel_image,
    mk_action,
    mk_algebra,
    mk_morphism,
    multiplier_algebra,
    multiplier_space,
    preimage,
    prime_field,
    pullback_action,
    quotient_by_ideal,
    restrict_action,
    square,
    subalgebra,
    truncated_polynomial,
    zero_action,
    zero_algebra,
)
from xmodalg.exceptions import (
    ActionNotRestrictable,
    BadUnit,
    NotAnIdeal,
    NotAssociative,
    NotCommutative,
    NotMultiplicative,
    NotPrime,
    PreconditionFailed,
    PrimeMismatch,
    ShapeMismatch,
)
from xmodalg.models import AlgebraMorphism, FiniteAlgebra, Ideal, Subspace


@pytest.fixture
def line() -> FiniteAlgebra:
    """A one-dimensional algebra with zero multiplication over F_2.

    Returns:
        The square-zero line.
    """
    return mk_algebra(2, 1, [[[0]]], ["y"])


class TestAlgebraConstruction:
    """Tests for building and validating algebras."""

    def test_default_basis_names(self) -> None:
        """Test generated basis names."""
        algebra = mk_algebra(3, 2, np.zeros((2, 2, 2), dtype=int).tolist())
        assert algebra.basis == ("x0", "x1")
        assert not algebra.is_unital

    def test_truncated_polynomial(self) -> None:
        """Test the monomial basis of k[x]/(x^3)."""
        algebra = truncated_polynomial(3, 3)
        assert algebra.basis == ("1", "x", "x^2")
        assert algebra.unit == (1, 0, 0)
        x = algebra.basis_element(1)
        assert (x * x).coeffs == (0, 0, 1)
        assert (x * x * x).is_zero()

    def test_truncated_polynomial_degree(self) -> None:
        """Test that the degree must be positive."""
        with pytest.raises(PreconditionFailed):
            truncated_polynomial(2, 0)

    def test_coefficients_are_reduced(self) -> None:
        """Test reduction of structure constants modulo the prime."""
        algebra = mk_algebra(3, 1, [[[4]]], unit=[4])
        assert algebra.mul == (((1,),),)
        assert algebra.unit == (1,)

    def test_zero_algebra(self) -> None:
        """Test the zero algebra."""
        algebra = zero_algebra(5)
        assert algebra.dim == 0
        assert algebra.tensor.shape == (0, 0, 0)

    def test_not_prime(self) -> None:
        """Test rejection of a composite characteristic."""
        with pytest.raises(NotPrime):
            mk_algebra(4, 1, [[[1]]])

    def test_shape_mismatch(self) -> None:
        """Test rejection of constants with the wrong shape."""
        with pytest.raises(ShapeMismatch):
            mk_algebra(2, 2, [[[1]]])

    def test_not_commutative(self) -> None:
        """Test rejection of asymmetric structure constants."""
        mul = [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]
        with pytest.raises(NotCommutative) as excinfo:
            mk_algebra(2, 2, mul)
        assert excinfo.value.indices == (0, 1)

    def test_not_associative(self) -> None:
        """Test rejection of non-associative structure constants."""
        mul = [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]
        with pytest.raises(NotAssociative):
            mk_algebra(2, 2, mul)

    def test_bad_unit(self) -> None:
        """Test rejection of a designated unit that is not one."""
        with pytest.raises(BadUnit):
            mk_algebra(2, 1, [[[1]]], unit=[0])


class TestElements:
    """Tests for element arithmetic."""

    def test_dual_number_arithmetic(self, dual: FiniteAlgebra) -> None:
        """Test products in F_2[x]/(x^2).

        Args:
            dual: Dual numbers fixture.
        """
        one_plus_x = dual.element([1, 1])
        assert (one_plus_x * one_plus_x).coeffs == (1, 0)
        assert str(one_plus_x) == "1+x"
        assert str(dual.zero()) == "0"
        assert dual.one() == dual.element([1, 0])

    def test_scalar_multiplication(self, dual: FiniteAlgebra) -> None:
        """Test integer scalars reduced modulo the prime.

        Args:
            dual: Dual numbers fixture.
        """
        x = dual.basis_element(1)
        assert (3 * x).coeffs == (0, 1)
        assert (x * 2).is_zero()

    def test_mixed_parents(self, dual: FiniteAlgebra, f2: FiniteAlgebra) -> None:
        """Test that elements of different algebras do not combine.

        Args:
            dual: Dual numbers fixture.
            f2: Prime field fixture.
        """
        with pytest.raises(ShapeMismatch):
            _ = dual.basis_element(0) + f2.basis_element(0)


class TestMorphisms:
    """Tests for morphisms and their kernels."""

    def test_not_multiplicative(self, dual: FiniteAlgebra) -> None:
        """Test rejection of a linear map that does not respect products.

        Args:
            dual: Dual numbers fixture.
        """
        with pytest.raises(NotMultiplicative) as excinfo:
            mk_morphism(dual, dual, [[1, 1], [0, 0]])
        assert excinfo.value.indices == (1, 1)

    def test_prime_mismatch(self, f2: FiniteAlgebra) -> None:
        """Test rejection of maps between different characteristics.

        Args:
            f2: Prime field fixture.
        """
        with pytest.raises(PrimeMismatch):
            mk_morphism(f2, prime_field(3), [[1]])

    def test_compose(
        self, projection: AlgebraMorphism, inclusion: AlgebraMorphism, f2: FiniteAlgebra
    ) -> None:
        """Test that projection after inclusion is the identity.

        Args:
            projection: Projection fixture.
            inclusion: Inclusion fixture.
            f2: Prime field fixture.
        """
        assert compose(projection, inclusion) == identity_morphism(f2)

    def test_kernel_image(self, projection: AlgebraMorphism) -> None:
        """Test kernel and image of the projection onto F_2.

        Args:
            projection: Projection fixture.
        """
        found = kernel_image(projection)
        assert found.kernel.rows == ((0, 1),)
        assert found.image.dim == 1
        assert found.is_epi
        assert not found.is_mono

    def test_isomorphism_and_inverse(self, dual: FiniteAlgebra) -> None:
        """Test inversion of an automorphism.

        Args:
            dual: Dual numbers fixture.
        """
        identity = identity_morphism(dual)
        assert is_isomorphism(identity)
        assert inverse(identity) == identity

    def test_call(self, projection: AlgebraMorphism, dual: FiniteAlgebra) -> None:
        """Test applying a morphism to an element.

        Args:
            projection: Projection fixture.
            dual: Dual numbers fixture.
        """
        assert projection(dual.element([1, 1])).coeffs == (1,)


class TestIdealsAndQuotients:
    """Tests for ideals, quotients and products."""

    def test_ideal_generated(self, dual: FiniteAlgebra) -> None:
        """Test ideals generated by one element.

        Args:
            dual: Dual numbers fixture.
        """
        assert ideal_generated(dual, [dual.basis_element(1)]).rows == ((0, 1),)
        assert ideal_generated(dual, [dual.element([1, 1])]).dim == 2

    def test_not_an_ideal(self, dual: FiniteAlgebra) -> None:
        """Test that the span of the unit is not an ideal of the dual numbers.

        Args:
            dual: Dual numbers fixture.
        """
        with pytest.raises(NotAnIdeal):
            as_ideal(dual, Subspace.spanned_by(2, 2, [[1, 0]]))

    def test_quotient(self, dual: FiniteAlgebra) -> None:
        """Test the quotient by (x).

        Args:
            dual: Dual numbers fixture.
        """
        ideal = ideal_generated(dual, [dual.basis_element(1)])
        quotient = quotient_by_ideal(dual, ideal)
        assert quotient.algebra.dim == 1
        assert quotient.algebra.basis == ("1",)
        assert quotient.algebra.mul == (((1,),),)
        assert quotient.algebra.unit == (1,)
        assert quotient.projection.matrix == ((1, 0),)

    def test_preimage(self, projection: AlgebraMorphism, f2: FiniteAlgebra) -> None:
        """Test that the preimage of zero is the kernel.

        Args:
            projection: Projection fixture.
            f2: Prime field fixture.
        """
        assert preimage(projection, Ideal.of(f2, [])).rows == ((0, 1),)

    def test_direct_product(self, f2: FiniteAlgebra) -> None:
        """Test the product F_2 x F_2.

        Args:
            f2: Prime field fixture.
        """
        product = direct_product(f2, f2)
        assert product.algebra.basis == ("(e,0)", "(0,e)")
        assert product.algebra.unit == (1, 1)
        assert product.first.matrix == ((1, 0),)
        assert product.second.matrix == ((0, 1),)

    def test_fiber_product_of_identities(self, f2: FiniteAlgebra) -> None:
        """Test that the fiber product of identities is the diagonal.

        Args:
            f2: Prime field fixture.
        """
        identity = identity_morphism(f2)
        product = fiber_product(identity, identity)
        assert product.algebra.dim == 1
        assert product.first == product.second

    def test_subalgebra(self, dual: FiniteAlgebra) -> None:
        """Test the subalgebra on the ideal (x).

        Args:
            dual: Dual numbers fixture.
        """
        ideal = ideal_generated(dual, [dual.basis_element(1)])
        sub = subalgebra(dual, ideal)
        assert sub.algebra.basis == ("x",)
        assert sub.algebra.mul == (((0,),),)
        assert sub.inclusion.matrix == ((0,), (1,))

    def test_annihilator_and_square(self, dual: FiniteAlgebra, line: FiniteAlgebra) -> None:
        """Test annihilator and square of unital and square-zero algebras.

        Args:
            dual: Dual numbers fixture.
            line: Square-zero line fixture.
        """
        assert annihilator(dual).dim == 0
        assert square(dual).dim == 2
        assert annihilator(line).dim == 1
        assert square(line).dim == 0


class TestActions:
    """Tests for algebra actions."""

    def test_multiplication_action(self, dual: FiniteAlgebra) -> None:
        """Test that multiplication is an action.

        Args:
            dual: Dual numbers fixture.
        """
        assert check_action(action_by_multiplication(dual)).ok

    def test_associativity_violation(self, dual: FiniteAlgebra, f2: FiniteAlgebra) -> None:
        """Test an action in which x acts as the identity.

        Args:
            dual: Dual numbers fixture.
            f2: Prime field fixture.
        """
        report = check_action(mk_action(dual, f2, [[[1]], [[1]]]))
        assert report.failed_axioms == ["action.associativity"]
        violation = report.first("action.associativity")
        assert violation is not None
        assert violation.indices == (1, 1, 0)
        assert violation.lhs == (0,)
        assert violation.rhs == (1,)

    def test_unit_law(self, f2: FiniteAlgebra) -> None:
        """Test the optional unit law.

        Args:
            f2: Prime field fixture.
        """
        action = zero_action(f2, f2)
        assert check_action(action).failed_axioms == ["action.unit"]
        assert check_action(action, unit_law=False).ok

    def test_pullback_action(self, dual: FiniteAlgebra, inclusion: AlgebraMorphism) -> None:
        """Test restriction of scalars along the unit inclusion.

        Args:
            dual: Dual numbers fixture.
            inclusion: Inclusion fixture.
        """
        action = pullback_action(action_by_multiplication(dual), inclusion)
        assert action.act == (((1, 0), (0, 1)),)
        assert check_action(action).ok

    def test_restrict_action(self, dual: FiniteAlgebra) -> None:
        """Test restriction to the invariant line spanned by x.

        Args:
            dual: Dual numbers fixture.
        """
        sub = subalgebra(dual, ideal_generated(dual, [dual.basis_element(1)]))
        action = restrict_action(action_by_multiplication(dual), sub.inclusion)
        assert action.act == (((1,),), ((0,),))

    def test_not_restrictable(self, dual: FiniteAlgebra) -> None:
        """Test that x moves the unit line outside itself.

        Args:
            dual: Dual numbers fixture.
        """
        sub = subalgebra(dual, Subspace.spanned_by(2, 2, [[1, 0]]))
        with pytest.raises(ActionNotRestrictable):
            restrict_action(action_by_multiplication(dual), sub.inclusion)


class TestMultipliers:
    """Tests for multiplier algebras."""

    def test_unital_algebra(self, dual: FiniteAlgebra) -> None:
        """Test that a unital algebra is its own multiplier algebra.

        Args:
            dual: Dual numbers fixture.
        """
        assert multiplier_space(dual).shape == (2, 2, 2)
        multipliers = multiplier_algebra(dual)
        assert multipliers.algebra.dim == 2
        assert multipliers.algebra.is_unital
        assert is_isomorphism(multipliers.mu)

    def test_precondition(self, line: FiniteAlgebra) -> None:
        """Test rejection when Ann(R) is nonzero and R^2 differs from R.

        Args:
            line: Square-zero line fixture.
        """
        with pytest.raises(PreconditionFailed):
            multiplier_algebra(line)

    def test_zero_algebra(self) -> None:
        """Test the multiplier algebra of the zero algebra."""
        assert multiplier_algebra(zero_algebra(2)).algebra.dim == 0
