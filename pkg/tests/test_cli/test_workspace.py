"""Tests for object files and the workspace."""

import json
from collections.abc import Callable
from pathlib import Path

import pytest
from pydantic import BaseModel

from xmodalg.cli.workspace import (
    TwoMorphismBundle,
    Workspace,
    dump_object,
    infer_kind,
    load_family,
    load_object,
    load_vectors,
    write_family,
)
from xmodalg.exceptions import InvalidInputError, MalformedInput, UnknownReference
from xmodalg.models import FiniteAlgebra, TwoCrossedModule
from xmodalg.models.results import TestFamily
from xmodalg.x2mod import identity_2morphism


def _write_json(path: Path, document: object) -> Path:
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


class TestLoadObject:
    """Tests for reading object files."""

    def test_roundtrip(
        self,
        write: Callable[[str, BaseModel], Path],
        dual: FiniteAlgebra,
        alpha_dual: TwoCrossedModule,
    ) -> None:
        """Test that written objects load back unchanged.

        Args:
            write: File writer fixture.
            dual: Dual numbers fixture.
            alpha_dual: 2-crossed module fixture.
        """
        loaded = load_object(write("dual", dual))
        assert loaded.kind == "algebra"
        assert loaded.value == dual
        assert load_object(write("alpha", alpha_dual)).value == alpha_dual

    def test_bundle_roundtrip(
        self, write: Callable[[str, BaseModel], Path], alpha_f2: TwoCrossedModule
    ) -> None:
        """Test a morphism stored with its endpoints.

        Args:
            write: File writer fixture.
            alpha_f2: 2-crossed module fixture.
        """
        bundle = TwoMorphismBundle(
            source=alpha_f2, target=alpha_f2, morphism=identity_2morphism(alpha_f2)
        )
        loaded = load_object(write("identity", bundle))
        assert loaded.kind == "x2morphism"
        assert loaded.value == bundle

    def test_references(self, tmp_path: Path, f2: FiniteAlgebra) -> None:
        """Test that strings under object keys are resolved through defs.

        Args:
            tmp_path: Pytest temporary directory.
            f2: Prime field fixture.
        """
        document = {
            "defs": {"F": json.loads(dump_object(f2))},
            "main": {"source": "F", "target": "F", "matrix": [[1]]},
        }
        loaded = load_object(_write_json(tmp_path / "id.json", document))
        assert loaded.kind == "morphism"
        assert loaded.value.source == f2
        assert loaded.value.matrix == ((1,),)

    def test_circular_reference(self, tmp_path: Path) -> None:
        """Test that reference cycles are reported.

        Args:
            tmp_path: Pytest temporary directory.
        """
        document = {
            "defs": {"a": "b", "b": "a"},
            "main": {"source": "a", "target": "a", "matrix": [[1]]},
        }
        with pytest.raises(MalformedInput) as excinfo:
            load_object(_write_json(tmp_path / "loop.json", document))
        assert excinfo.value.details["location"] == "defs.a"
        assert "a -> b -> a" in excinfo.value.message

    def test_unknown_reference(self, tmp_path: Path) -> None:
        """Test that a missing definition is reported by name.

        Args:
            tmp_path: Pytest temporary directory.
        """
        document = {"main": {"source": "F", "target": "F", "matrix": [[1]]}}
        with pytest.raises(UnknownReference) as excinfo:
            load_object(_write_json(tmp_path / "missing.json", document))
        assert excinfo.value.details == {"name": "F"}

    def test_invalid_json(self, tmp_path: Path) -> None:
        """Test that syntax errors carry a position.

        Args:
            tmp_path: Pytest temporary directory.
        """
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(MalformedInput) as excinfo:
            load_object(path)
        assert excinfo.value.details["location"].startswith("line 1 column")

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test that unreadable files are malformed input.

        Args:
            tmp_path: Pytest temporary directory.
        """
        with pytest.raises(MalformedInput) as excinfo:
            load_object(tmp_path / "absent.json")
        assert excinfo.value.details["location"] == "file"

    @pytest.mark.parametrize(
        ("document", "location"),
        [
            ([1, 2], "$"),
            ({"foo": 1}, "$"),
            ({"kind": "group"}, "kind"),
            ({"prime": 2, "basis": ["e"], "mul": [[[1]]]}, "dim"),
        ],
    )
    def test_malformed_documents(self, tmp_path: Path, document: object, location: str) -> None:
        """Test the location reported for documents that are not objects.

        Args:
            tmp_path: Pytest temporary directory.
            document: JSON document.
            location: Expected location.
        """
        with pytest.raises(MalformedInput) as excinfo:
            load_object(_write_json(tmp_path / "bad.json", document))
        assert excinfo.value.details["location"] == location

    def test_coefficients_are_reduced(self, tmp_path: Path) -> None:
        """Test that stored coefficients are reduced modulo the prime.

        Args:
            tmp_path: Pytest temporary directory.
        """
        document = {"prime": 2, "dim": 1, "basis": ["e"], "mul": [[[3]]], "unit": [5]}
        algebra = load_object(_write_json(tmp_path / "f2.json", document)).value
        dumped = json.loads(dump_object(algebra))
        assert dumped["mul"] == [[[1]]]
        assert dumped["unit"] == [1]
        assert dumped["kind"] == "algebra"


class TestInferKind:
    """Tests for kind inference."""

    @pytest.mark.parametrize(
        ("keys", "kind"),
        [
            ({"prime": 2, "mul": []}, "algebra"),
            ({"source": {}, "target": {}, "matrix": []}, "morphism"),
            ({"actor": {}, "acted": {}, "act": []}, "action"),
            ({"C": {}, "R": {}, "bdry": {}}, "xmod"),
            ({"L": {}, "M": {}, "P": {}}, "x2mod"),
            ({"source": {}, "target": {}, "morphism": {"f1": {}}}, "xmorphism"),
            ({"source": {}, "target": {}, "morphism": {"f2": {}}}, "x2morphism"),
            ({"kind": "algebra", "C": {}}, "algebra"),
            ({"anything": 1}, None),
        ],
    )
    def test_infer(self, keys: dict[str, object], kind: str | None) -> None:
        """Test inference from the keys present.

        Args:
            keys: Resolved document.
            kind: Expected kind.
        """
        assert infer_kind(keys) == kind


class TestVectorsAndFamilies:
    """Tests for vector lists and family directories."""

    def test_load_vectors(self, tmp_path: Path) -> None:
        """Test reading a list of coefficient vectors.

        Args:
            tmp_path: Pytest temporary directory.
        """
        assert load_vectors(_write_json(tmp_path / "v.json", [[1, 0], [0, 1]])) == [
            [1, 0],
            [0, 1],
        ]
        with pytest.raises(MalformedInput):
            load_vectors(_write_json(tmp_path / "w.json", [1, 0]))

    def test_family_directory(
        self, tmp_path: Path, alpha_f2: TwoCrossedModule, alpha_dual: TwoCrossedModule
    ) -> None:
        """Test that a written family loads back in order.

        Args:
            tmp_path: Pytest temporary directory.
            alpha_f2: 2-crossed module over F_2.
            alpha_dual: 2-crossed module over the dual numbers.
        """
        family = TestFamily(members=(alpha_f2, alpha_dual))
        paths = write_family(family, tmp_path / "small")
        assert [path.name for path in paths] == ["member-000.json", "member-001.json"]
        loaded = load_family(tmp_path / "small")
        assert loaded.name == "small"
        assert loaded.members == family.members

    def test_family_single_file(
        self, write: Callable[[str, BaseModel], Path], alpha_f2: TwoCrossedModule
    ) -> None:
        """Test that one file gives a one-member family.

        Args:
            write: File writer fixture.
            alpha_f2: 2-crossed module fixture.
        """
        assert load_family(write("alpha", alpha_f2)).members == (alpha_f2,)

    def test_family_rejects_other_kinds(
        self, write: Callable[[str, BaseModel], Path], f2: FiniteAlgebra
    ) -> None:
        """Test that family files must hold 2-crossed modules.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
        """
        with pytest.raises(MalformedInput):
            load_family(write("f2", f2))


class TestWorkspace:
    """Tests for named bindings."""

    def test_load_and_lookup(
        self, write: Callable[[str, BaseModel], Path], f2: FiniteAlgebra
    ) -> None:
        """Test binding under the file stem.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
        """
        ws = Workspace()
        assert ws.load(write("field", f2)) == f2
        assert "field" in ws
        assert ws["field"] == f2

    def test_duplicate_binding(
        self, write: Callable[[str, BaseModel], Path], f2: FiniteAlgebra
    ) -> None:
        """Test that names cannot be rebound.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
        """
        ws = Workspace()
        path = write("field", f2)
        ws.load(path, "a")
        with pytest.raises(InvalidInputError):
            ws.load(path, "a")

    def test_expected_kind(
        self, write: Callable[[str, BaseModel], Path], f2: FiniteAlgebra
    ) -> None:
        """Test rejection of an object of the wrong kind.

        Args:
            write: File writer fixture.
            f2: Prime field fixture.
        """
        with pytest.raises(MalformedInput) as excinfo:
            Workspace().load(write("field", f2), expect=("x2mod",))
        assert excinfo.value.details["location"] == "kind"

    def test_unbound_name(self) -> None:
        """Test lookup of a name that was never bound."""
        with pytest.raises(UnknownReference):
            Workspace()["missing"]
