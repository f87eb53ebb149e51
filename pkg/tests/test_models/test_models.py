"""Tests for pydantic models."""

import numpy as np
import pytest

from xmodalg.core.algebra import (
    action_by_multiplication,
    identity_morphism,
    zero_action,
    zero_morphism,
)
from xmodalg.exceptions import (
    EndpointMismatch,
    InternalError,
    InvalidInputError,
    NotCrossed,
    ShapeMismatch,
)
from xmodalg.models import (
    CrossedModule,
    FiniteAlgebra,
    PeifferLifting,
    PreCrossedModule,
    Report,
    TwoCrossedModule,
    Violation,
)
from xmodalg.models.results import HomSet, TestFamily
from xmodalg.x2mod import identity_2morphism


class TestReport:
    """Tests for axiom reports."""

    def test_empty_report(self) -> None:
        """Test that a report without violations is ok."""
        report = Report(subject="demo")
        assert report.ok
        assert report.failed_axioms == []
        assert report.first("anything") is None

    def test_expect_equal(self) -> None:
        """Test recording the first mismatch of two arrays."""
        report = Report(subject="demo")
        lhs = np.array([[1, 0], [0, 1]], dtype=np.int64)
        rhs = np.array([[1, 0], [1, 1]], dtype=np.int64)
        assert not report.expect_equal("axiom", lhs, rhs, 2, index_dims=1, detail="lhs = rhs")
        violation = report.first("axiom")
        assert violation == Violation(
            axiom="axiom", indices=(1,), lhs=(0, 1), rhs=(1, 1), count=1, detail="lhs = rhs"
        )

    def test_expect(self) -> None:
        """Test recording a failed condition."""
        report = Report(subject="demo")
        assert report.expect("holds", True)  # noqa: FBT003
        assert not report.expect("fails", False, indices=(2,), rhs=(3,))  # noqa: FBT003
        assert report.failed_axioms == ["fails"]
        assert report.violations[0].rhs == (3,)

    def test_merge_with_prefix(self) -> None:
        """Test absorbing another report."""
        inner = Report(subject="inner", stats={"count": 2})
        inner.expect("square", False)  # noqa: FBT003
        outer = Report(subject="outer").merge(inner, prefix="morphism.")
        assert outer.failed_axioms == ["morphism.square"]
        assert outer.stats == {"morphism.count": 2}

    def test_json_dump(self) -> None:
        """Test the machine-readable form of a report."""
        report = Report(subject="demo", stats={"dim": 2})
        report.expect("axiom", False, indices=(0, 1))  # noqa: FBT003
        data = report.model_dump(mode="json")
        assert data["subject"] == "demo"
        assert data["violations"][0]["indices"] == [0, 1]
        assert data["stats"] == {"dim": 2}


class TestCrossedModules:
    """Tests for crossed module models."""

    def test_endpoint_mismatch(self, f2: FiniteAlgebra, dual: FiniteAlgebra) -> None:
        """Test that the boundary must connect C and R.

        Args:
            f2: Prime field fixture.
            dual: Dual numbers fixture.
        """
        with pytest.raises(EndpointMismatch):
            PreCrossedModule(
                C=f2, R=dual, bdry=identity_morphism(f2), action=zero_action(dual, f2)
            )

    def test_not_crossed(self, non_crossed: PreCrossedModule) -> None:
        """Test that the Peiffer identity is enforced for crossed modules.

        Args:
            non_crossed: Pre-crossed module fixture.
        """
        with pytest.raises(NotCrossed) as excinfo:
            CrossedModule.from_precrossed(non_crossed)
        assert excinfo.value.details["axioms"] == ["peiffer"]

    def test_crossed(self, f2: FiniteAlgebra) -> None:
        """Test a valid crossed module.

        Args:
            f2: Prime field fixture.
        """
        X = CrossedModule(
            C=f2, R=f2, bdry=identity_morphism(f2), action=action_by_multiplication(f2)
        )
        assert isinstance(X, PreCrossedModule)


class TestTwoCrossedModules:
    """Tests for 2-crossed module models."""

    def test_raw_lifting_is_wrapped(self, f2: FiniteAlgebra) -> None:
        """Test that raw lifting constants become a PeifferLifting.

        Args:
            f2: Prime field fixture.
        """
        mult = action_by_multiplication(f2)
        X = TwoCrossedModule(
            L=f2,
            M=f2,
            P=f2,
            d2=identity_morphism(f2),
            d1=zero_morphism(f2, f2),
            actPL=mult,
            actPM=mult,
            lift=[[[3]]],
        )
        assert isinstance(X.lift, PeifferLifting)
        assert X.lift.lift == (((1,),),)
        assert not X.is_trivial_lifting
        assert X.act_pl == mult

    def test_dump_uses_aliases(self, alpha_f2: TwoCrossedModule) -> None:
        """Test serialization with the action aliases and raw lifting.

        Args:
            alpha_f2: 2-crossed module fixture.
        """
        data = alpha_f2.model_dump(mode="json", by_alias=True)
        assert "actPL" in data
        assert "actPM" in data
        assert data["lift"] == [[[]]]
        assert TwoCrossedModule.model_validate(data) == alpha_f2

    def test_lifting_shape(self, f2: FiniteAlgebra) -> None:
        """Test rejection of lifting constants of the wrong shape.

        Args:
            f2: Prime field fixture.
        """
        with pytest.raises(ShapeMismatch):
            PeifferLifting(M=f2, L=f2, lift=[[[1, 0]]])

    def test_endpoint_mismatch(self, alpha_f2: TwoCrossedModule, dual: FiniteAlgebra) -> None:
        """Test that the boundaries must connect the algebras.

        Args:
            alpha_f2: 2-crossed module fixture.
            dual: Dual numbers fixture.
        """
        data = dict(alpha_f2)
        data["P"] = dual
        with pytest.raises(EndpointMismatch):
            TwoCrossedModule(**data)


class TestResults:
    """Tests for hom-sets and test families."""

    def test_homset_rejects_repeats(self, alpha_f2: TwoCrossedModule) -> None:
        """Test that hom-set elements must be distinct.

        Args:
            alpha_f2: 2-crossed module fixture.
        """
        identity = identity_2morphism(alpha_f2)
        with pytest.raises(InternalError):
            HomSet(kind="x2mod", source=alpha_f2, target=alpha_f2, elements=(identity, identity))

    def test_homset_membership(self, alpha_f2: TwoCrossedModule) -> None:
        """Test length and membership.

        Args:
            alpha_f2: 2-crossed module fixture.
        """
        identity = identity_2morphism(alpha_f2)
        homs = HomSet(kind="x2mod", source=alpha_f2, target=alpha_f2, elements=(identity,))
        assert len(homs) == 1
        assert identity in homs

    def test_family_rejects_invalid_members(self, f2: FiniteAlgebra) -> None:
        """Test that every family member must pass the axiom suite.

        Args:
            f2: Prime field fixture.
        """
        mult = action_by_multiplication(f2)
        broken = TwoCrossedModule(
            L=f2,
            M=f2,
            P=f2,
            d2=identity_morphism(f2),
            d1=identity_morphism(f2),
            actPL=mult,
            actPM=mult,
            lift=[[[1]]],
        )
        with pytest.raises(InvalidInputError):
            TestFamily(members=(broken,))

    def test_family_over(
        self, alpha_f2: TwoCrossedModule, alpha_dual: TwoCrossedModule, f2: FiniteAlgebra
    ) -> None:
        """Test selecting members by base algebra.

        Args:
            alpha_f2: 2-crossed module over F_2.
            alpha_dual: 2-crossed module over the dual numbers.
            f2: Prime field fixture.
        """
        family = TestFamily(name="small", members=(alpha_f2, alpha_dual))
        assert len(family) == 2
        assert family.over(f2) == [alpha_f2]
