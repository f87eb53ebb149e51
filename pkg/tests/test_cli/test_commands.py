"""Tests for the command-line verbs."""

import json
from collections.abc import Callable
from pathlib import Path
from typing import Any
from unittest.mock import patch

import pytest
from pydantic import BaseModel

from xmodalg.cli import main, run
from xmodalg.cli.workspace import TwoMorphismBundle, load_object, write_object
from xmodalg.core.algebra import action_by_multiplication, identity_morphism
from xmodalg.models import (
    AlgebraMorphism,
    CrossedModule,
    FiniteAlgebra,
    PreCrossedModule,
    TwoCrossedModule,
)
from xmodalg.x2mod import free_seed, functor_sk, identity_2morphism

Writer = Callable[[str, BaseModel], Path]


def _json_output(capsys: pytest.CaptureFixture[str]) -> dict[str, Any]:
    return json.loads(capsys.readouterr().out)


class TestParsing:
    """Tests for argument handling."""

    def test_no_verb(self) -> None:
        """Test that a verb is required."""
        assert run([]) == 2

    def test_missing_argument(self) -> None:
        """Test that a missing positional argument is a usage error."""
        assert run(["check"]) == 2

    def test_main_exits_with_code(self, write: Writer, f2: FiniteAlgebra) -> None:
        """Test that the console script exits with the run code.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
        """
        path = write("f2", f2)
        with patch("sys.argv", ["xmodalg", "check", str(path)]), pytest.raises(SystemExit) as exc:
            main()
        assert exc.value.code == 0


class TestCheck:
    """Tests for the check verb."""

    def test_algebra(
        self, write: Writer, dual: FiniteAlgebra, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test the JSON report for an algebra.

        Args:
            write: File writer fixture.
            dual: Dual numbers fixture.
            capsys: Pytest output capture.
        """
        assert run(["check", str(write("dual", dual)), "--json"]) == 0
        payload = _json_output(capsys)
        assert payload["exit_code"] == 0
        assert payload["kind"] == "algebra"
        assert payload["reports"][0]["stats"] == {"dim": 2, "unital": True}

    def test_morphism(
        self,
        write: Writer,
        projection: AlgebraMorphism,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test the kernel and image report of a morphism.

        Args:
            write: File writer fixture.
            projection: Projection of the dual numbers onto F_2.
            capsys: Pytest output capture.
        """
        assert run(["check", str(write("phi", projection)), "--json"]) == 0
        stats = _json_output(capsys)["reports"][0]["stats"]
        assert stats == {"kernel_dim": 1, "image_dim": 1, "mono": False, "epi": True}

    def test_violation(
        self,
        write: Writer,
        non_crossed: PreCrossedModule,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test that a failed axiom gives exit code 1 and names the axiom.

        Args:
            write: File writer fixture.
            non_crossed: Pre-crossed module fixture.
            capsys: Pytest output capture.
        """
        assert run(["check", str(write("x", non_crossed)), "--json"]) == 1
        payload = _json_output(capsys)
        assert payload["exit_code"] == 1
        assert payload["reports"][0]["violations"][0]["axiom"] == "peiffer"

    def test_not_commutative(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that invalid structure constants are an input error.

        Args:
            tmp_path: Pytest temporary directory.
            capsys: Pytest output capture.
        """
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(
                {
                    "prime": 2,
                    "dim": 2,
                    "basis": ["a", "b"],
                    "mul": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]],
                }
            ),
            encoding="utf-8",
        )
        assert run(["check", str(path), "--json"]) == 2
        payload = _json_output(capsys)
        assert payload["error"] == "NotCommutative"
        assert payload["exit_code"] == 2

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test that a missing file is an input error.

        Args:
            tmp_path: Pytest temporary directory.
        """
        assert run(["check", str(tmp_path / "absent.json")]) == 2

    def test_human_output(
        self, write: Writer, f2: FiniteAlgebra, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test the rich summary of a passing check.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
            capsys: Pytest output capture.
        """
        assert run(["check", str(write("f2", f2))]) == 0
        assert "all axioms hold" in capsys.readouterr().out


class TestHoms:
    """Tests for the homs verb."""

    def test_count(
        self, write: Writer, dual: FiniteAlgebra, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test enumeration of algebra endomorphisms.

        Args:
            write: File writer fixture.
            dual: Dual numbers fixture.
            capsys: Pytest output capture.
        """
        path = str(write("dual", dual))
        assert run(["homs", path, path, "--json", "--workers", "1"]) == 0
        payload = _json_output(capsys)
        assert payload["count"] == 3
        assert len(payload["elements"]) == 3

    def test_search_limit(
        self, write: Writer, dual: FiniteAlgebra, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that an exceeded limit gives exit code 3.

        Args:
            write: File writer fixture.
            dual: Dual numbers fixture.
            capsys: Pytest output capture.
        """
        path = str(write("dual", dual))
        assert run(["homs", path, path, "--limit", "1", "--json"]) == 3
        payload = _json_output(capsys)
        assert payload["error"] == "SearchSpaceTooLarge"
        assert payload["details"] == {"size": 16, "limit": 1}

    def test_mixed_kinds(
        self, write: Writer, f2: FiniteAlgebra, gamma_f2: CrossedModule
    ) -> None:
        """Test that source and target must have the same kind.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
            gamma_f2: Identity crossed module on F_2.
        """
        assert run(["homs", str(write("f2", f2)), str(write("x", gamma_f2))]) == 2

    def test_two_crossed_with_base(
        self,
        write: Writer,
        alpha_f2: TwoCrossedModule,
        f2: FiniteAlgebra,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test enumeration over a fixed base morphism.

        Args:
            write: File writer fixture.
            alpha_f2: 2-crossed module fixture.
            f2: Prime field fixture.
            capsys: Pytest output capture.
        """
        path = str(write("alpha", alpha_f2))
        base = str(write("base", identity_morphism(f2)))
        assert run(["homs", path, path, "--base", base, "--json"]) == 0
        assert _json_output(capsys)["count"] == 1


class TestConstructions:
    """Tests for the construction verbs."""

    def test_pullback_not_mono(
        self,
        write: Writer,
        projection: AlgebraMorphism,
        alpha_f2: TwoCrossedModule,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test that the non-injective case reports its witness.

        Args:
            write: File writer fixture.
            projection: Projection of the dual numbers onto F_2.
            alpha_f2: 2-crossed module over F_2.
            capsys: Pytest output capture.
        """
        argv = [
            "pullback",
            "--phi",
            str(write("phi", projection)),
            "--x",
            str(write("x", alpha_f2)),
            "--json",
        ]
        assert run(argv) == 2
        payload = _json_output(capsys)
        assert payload["error"] == "NotMono"
        assert payload["details"]["witness"]["s"] == "x"

    def test_pullback_crossed_module(
        self,
        write: Writer,
        inclusion: AlgebraMorphism,
        dual: FiniteAlgebra,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test pulling back a crossed module.

        Args:
            write: File writer fixture.
            inclusion: Unit inclusion F_2 -> dual numbers.
            dual: Dual numbers fixture.
            capsys: Pytest output capture.
        """
        gamma = CrossedModule(
            C=dual, R=dual, bdry=identity_morphism(dual), action=action_by_multiplication(dual)
        )
        argv = ["pullback", "--phi", str(write("phi", inclusion)), "--x", str(write("x", gamma))]
        assert run([*argv, "--json"]) == 0
        payload = _json_output(capsys)
        assert payload["object"]["kind"] == "xmod"
        assert payload["object"]["C"]["dim"] == 1

    def test_pullback_rejects_invalid_input(
        self, write: Writer, f2: FiniteAlgebra, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that an input failing the axioms is reported as an input error.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
            capsys: Pytest output capture.
        """
        not_a_complex = TwoCrossedModule(
            L=f2,
            M=f2,
            P=f2,
            d2=identity_morphism(f2),
            d1=identity_morphism(f2),
            act_pl=action_by_multiplication(f2),
            act_pm=action_by_multiplication(f2),
            lift=(((0,),),),
        )
        argv = [
            "pullback",
            "--phi",
            str(write("phi", identity_morphism(f2))),
            "--x",
            str(write("x", not_a_complex)),
            "--json",
        ]
        assert run(argv) == 2
        payload = _json_output(capsys)
        assert payload["error"] == "PreconditionFailed"
        assert "complex" in payload["details"]["axioms"]

    def test_induce_writes_output(
        self,
        write: Writer,
        projection: AlgebraMorphism,
        alpha_dual: TwoCrossedModule,
        tmp_path: Path,
    ) -> None:
        """Test that -o writes the induced object.

        Args:
            write: File writer fixture.
            projection: Projection of the dual numbers onto F_2.
            alpha_dual: 2-crossed module over the dual numbers.
            tmp_path: Pytest temporary directory.
        """
        out = tmp_path / "out" / "induced.json"
        argv = [
            "induce",
            "--phi",
            str(write("phi", projection)),
            "--d",
            str(write("d", alpha_dual)),
            "-o",
            str(out),
        ]
        assert run(argv) == 0
        loaded = load_object(out)
        assert loaded.kind == "x2mod"
        assert loaded.value.P == projection.target

    def test_skeleton_and_truncation(
        self,
        write: Writer,
        non_crossed: PreCrossedModule,
        tmp_path: Path,
    ) -> None:
        """Test that sk then tr gives back the pre-crossed module.

        Args:
            write: File writer fixture.
            non_crossed: Pre-crossed module fixture.
            tmp_path: Pytest temporary directory.
        """
        skeleton = tmp_path / "sk.json"
        truncated = tmp_path / "tr.json"
        assert run(["sk", str(write("x", non_crossed)), "-o", str(skeleton)]) == 0
        assert load_object(skeleton).value == functor_sk(non_crossed)
        assert run(["tr", str(skeleton), "-o", str(truncated)]) == 0
        assert load_object(truncated).value == non_crossed

    def test_alpha_then_beta(
        self, write: Writer, gamma_f2: CrossedModule, tmp_path: Path
    ) -> None:
        """Test the alpha and beta verbs.

        Args:
            write: File writer fixture.
            gamma_f2: Identity crossed module on F_2.
            tmp_path: Pytest temporary directory.
        """
        alpha = tmp_path / "alpha.json"
        assert run(["alpha", str(write("x", gamma_f2)), "-o", str(alpha)]) == 0
        assert run(["beta", str(alpha)]) == 0


class TestCategoricalChecks:
    """Tests for the verbs quantifying over hom-sets."""

    def test_adjoint_algebra(
        self, write: Writer, alpha_f2: TwoCrossedModule, f2: FiniteAlgebra
    ) -> None:
        """Test the adjunction with algebras.

        Args:
            write: File writer fixture.
            alpha_f2: 2-crossed module fixture.
            f2: Prime field fixture.
        """
        argv = ["adjoint", "--x", str(write("x", alpha_f2)), "--algebra", str(write("r", f2))]
        assert run(argv) == 0

    def test_adjoint_pullback_induced(
        self,
        write: Writer,
        projection: AlgebraMorphism,
        alpha_dual: TwoCrossedModule,
        alpha_f2: TwoCrossedModule,
    ) -> None:
        """Test the induced-pullback adjunction.

        Args:
            write: File writer fixture.
            projection: Projection of the dual numbers onto F_2.
            alpha_dual: 2-crossed module over the dual numbers.
            alpha_f2: 2-crossed module over F_2.
        """
        argv = [
            "adjoint",
            "--phi",
            str(write("phi", projection)),
            "--d",
            str(write("d", alpha_dual)),
            "--b",
            str(write("b", alpha_f2)),
        ]
        assert run(argv) == 0

    def test_adjoint_needs_arguments(self) -> None:
        """Test that one of the two argument sets is required."""
        assert run(["adjoint"]) == 2

    @pytest.mark.parametrize("verb", ["cartesian", "cocartesian"])
    def test_fibrations(
        self,
        verb: str,
        write: Writer,
        alpha_f2: TwoCrossedModule,
        tmp_path: Path,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        """Test that the identity passes both fibration checks.

        Args:
            verb: Subcommand.
            write: File writer fixture.
            alpha_f2: 2-crossed module fixture.
            tmp_path: Pytest temporary directory.
            capsys: Pytest output capture.
        """
        bundle = TwoMorphismBundle(
            source=alpha_f2, target=alpha_f2, morphism=identity_2morphism(alpha_f2)
        )
        write_object(alpha_f2, tmp_path / "family" / "member-000.json")
        argv = [verb, "--f", str(write("f", bundle)), "--family", str(tmp_path / "family")]
        assert run([*argv, "--json"]) == 0
        payload = _json_output(capsys)
        assert payload["family"] == "family"
        assert payload["members"] == 1

    def test_free(
        self,
        write: Writer,
        f2: FiniteAlgebra,
        tmp_path: Path,
    ) -> None:
        """Test the freeness verb on the seed over F_2.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
            tmp_path: Pytest temporary directory.
        """
        seed = write("seed", free_seed(f2, f2, action_by_multiplication(f2)))
        theta = tmp_path / "theta.json"
        theta.write_text("[[1]]", encoding="utf-8")
        argv = ["free", "--x", str(seed), "--theta", str(theta), "--targets", str(seed)]
        assert run(argv) == 0

    @pytest.mark.parametrize(("basis", "code"), [("[[1, 0]]", 0), ("[[0, 1]]", 1)])
    def test_free_module(
        self,
        basis: str,
        code: int,
        write: Writer,
        dual: FiniteAlgebra,
        tmp_path: Path,
    ) -> None:
        """Test the free module verb with a generating and a non-generating basis.

        Args:
            basis: JSON list of generators.
            code: Expected exit code.
            write: File writer fixture.
            dual: Dual numbers fixture.
            tmp_path: Pytest temporary directory.
        """
        path = tmp_path / "basis.json"
        path.write_text(basis, encoding="utf-8")
        action = write("action", action_by_multiplication(dual))
        assert run(["free-module", "--action", str(action), "--basis", str(path)]) == code

    def test_naturality(
        self,
        write: Writer,
        projection: AlgebraMorphism,
        f2: FiniteAlgebra,
        alpha_dual: TwoCrossedModule,
    ) -> None:
        """Test induced naturality along the projection and the identity.

        Args:
            write: File writer fixture.
            projection: Projection of the dual numbers onto F_2.
            f2: Prime field fixture.
            alpha_dual: 2-crossed module over the dual numbers.
        """
        argv = [
            "naturality",
            "--mode",
            "induced",
            "--phi",
            str(write("phi", projection)),
            "--phi-prime",
            str(write("psi", identity_morphism(f2))),
            "--x",
            str(write("x", alpha_dual)),
        ]
        assert run(argv) == 0


class TestCatalog:
    """Tests for the catalog verb."""

    def test_needs_output(self) -> None:
        """Test that an output directory is required."""
        assert run(["catalog"]) == 2

    def test_writes_members(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that every member is written to the directory.

        Args:
            tmp_path: Pytest temporary directory.
            capsys: Pytest output capture.
        """
        out = tmp_path / "catalog"
        assert run(["catalog", "-o", str(out), "--json", "--workers", "1"]) == 0
        payload = _json_output(capsys)
        assert len(payload["files"]) == payload["reports"][0]["stats"]["members"]
        assert sorted(out.glob("*.json"))
