"""Loading and writing JSON object files.

A file holds one object, or ``{"defs": {name: object}, "main": object}``.
Inside ``defs`` and ``main`` a string in place of an object is a reference
to another definition. The kind of an object is read from its ``kind`` key
or inferred from the keys present.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, NamedTuple

from pydantic import BaseModel, ConfigDict, ValidationError

from xmodalg.exceptions import InvalidInputError, MalformedInput, UnknownReference
from xmodalg.models.algebra import AlgebraAction, AlgebraMorphism, FiniteAlgebra
from xmodalg.models.results import TestFamily
from xmodalg.models.x2mod import TwoCrossedModule, TwoCrossedMorphism
from xmodalg.models.xmod import PreCrossedModule, XModMorphism

logger = logging.getLogger(__name__)

# Keys whose value is an object and may therefore be a reference
OBJECT_KEYS = frozenset(
    {
        "source", "target", "actor", "acted", "parent",
        "C", "R", "bdry", "action",
        "L", "M", "P", "d2", "d1", "actPL", "actPM",
        "f2", "f1", "f0", "morphism", "main",
    }
)  # fmt: skip


class XModMorphismBundle(BaseModel):
    """A crossed module morphism together with its endpoints."""

    model_config = ConfigDict(frozen=True)

    source: PreCrossedModule
    target: PreCrossedModule
    morphism: XModMorphism


class TwoMorphismBundle(BaseModel):
    """A 2-crossed module morphism together with its endpoints."""

    model_config = ConfigDict(frozen=True)

    source: TwoCrossedModule
    target: TwoCrossedModule
    morphism: TwoCrossedMorphism


KIND_MODELS: dict[str, type[BaseModel]] = {
    "algebra": FiniteAlgebra,
    "morphism": AlgebraMorphism,
    "action": AlgebraAction,
    "xmod": PreCrossedModule,
    "x2mod": TwoCrossedModule,
    "xmorphism": XModMorphismBundle,
    "x2morphism": TwoMorphismBundle,
}


class Loaded(NamedTuple):
    """A validated object with its kind and origin."""

    kind: str
    value: Any
    path: Path


def infer_kind(data: dict[str, Any]) -> str | None:
    """Guess the object kind from the keys of a resolved document."""
    if isinstance(data.get("kind"), str):
        return data["kind"]
    keys = set(data)
    if {"L", "M", "P"} <= keys:
        return "x2mod"
    if {"C", "R", "bdry"} <= keys:
        return "xmod"
    if {"actor", "acted"} <= keys:
        return "action"
    if {"source", "target", "matrix"} <= keys:
        return "morphism"
    if {"source", "target", "morphism"} <= keys:
        morphism = data["morphism"]
        return "x2morphism" if isinstance(morphism, dict) and "f2" in morphism else "xmorphism"
    if {"prime", "mul"} <= keys:
        return "algebra"
    return None


def kind_of(value: object) -> str:
    """Kind name of a model instance.

    Raises:
        InvalidInputError: If the value is not a storable object
    """
    for kind, model in KIND_MODELS.items():
        if isinstance(value, model):
            return kind
    msg = f"cannot store objects of type {type(value).__name__}"
    raise InvalidInputError(msg)


def _read_json(path: Path) -> Any:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedInput(str(path), "file", e.strerror or str(e)) from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(str(path), f"line {e.lineno} column {e.colno}", e.msg) from e


class _Resolver:
    """Replaces references by their definitions."""

    def __init__(self, path: Path, defs: dict[str, Any]) -> None:
        self.path = path
        self.defs = defs
        self.active: list[str] = []

    def lookup(self, name: str) -> Any:
        if name not in self.defs:
            msg = f"{self.path}: no definition named {name!r}"
            raise UnknownReference(msg, {"name": name})
        if name in self.active:
            chain = " -> ".join([*self.active, name])
            raise MalformedInput(str(self.path), f"defs.{name}", f"circular reference {chain}")
        self.active.append(name)
        try:
            return self.resolve(self.defs[name])
        finally:
            self.active.pop()

    def resolve(self, value: Any) -> Any:
        if isinstance(value, str):
            return self.lookup(value)
        if isinstance(value, dict):
            return {
                key: self.resolve(item) if key in OBJECT_KEYS else item
                for key, item in value.items()
            }
        return value


def build(kind: str, data: dict[str, Any], path: Path) -> Any:
    """Validate a resolved document as an object of the given kind.

    Raises:
        MalformedInput: If the kind is unknown or a field fails validation
    """
    model = KIND_MODELS.get(kind)
    if model is None:
        raise MalformedInput(str(path), "kind", f"unknown object kind {kind!r}")
    payload = {key: value for key, value in data.items() if key != "kind"}
    try:
        return model.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "$"
        raise MalformedInput(str(path), location, first["msg"]) from e


def load_object(path: Path) -> Loaded:
    """Read, resolve and validate one object file.

    Args:
        path: JSON file

    Returns:
        The validated object with its kind

    Raises:
        MalformedInput: If the file is not valid JSON or not a known object
        UnknownReference: If a reference has no definition
    """
    document = _read_json(path)
    if not isinstance(document, dict):
        raise MalformedInput(str(path), "$", "expected a JSON object")
    defs = document.get("defs", {})
    if not isinstance(defs, dict):
        raise MalformedInput(str(path), "defs", "expected a JSON object")
    resolver = _Resolver(path, defs)
    data = resolver.resolve(document["main"]) if "main" in document else resolver.resolve(
        {key: value for key, value in document.items() if key != "defs"}
    )
    if not isinstance(data, dict):
        raise MalformedInput(str(path), "main", "expected a JSON object")
    kind = infer_kind(data)
    if kind is None:
        raise MalformedInput(str(path), "$", "cannot infer the object kind")
    value = build(kind, data, path)
    logger.debug("loaded %s from %s", kind, path)
    return Loaded(kind=kind, value=value, path=path)


def load_vectors(path: Path) -> list[list[int]]:
    """Read a JSON list of coefficient vectors.

    Raises:
        MalformedInput: If the document is not a list of integer lists
    """
    document = _read_json(path)
    if not isinstance(document, list) or not all(
        isinstance(row, list) and all(isinstance(v, int) for v in row) for row in document
    ):
        raise MalformedInput(str(path), "$", "expected a list of integer lists")
    return document


def load_family(path: Path) -> TestFamily:
    """Read a test family from a directory of 2-crossed module files.

    Files are read in name order; a single file holding a 2-crossed module
    gives a one-member family.

    Raises:
        MalformedInput: If some file does not hold a 2-crossed module
    """
    files = sorted(path.glob("*.json")) if path.is_dir() else [path]
    members = []
    for file in files:
        loaded = load_object(file)
        if loaded.kind != "x2mod":
            raise MalformedInput(str(file), "kind", f"expected x2mod, found {loaded.kind}")
        members.append(loaded.value)
    return TestFamily(name=path.stem, members=tuple(members))


def dump_object(value: BaseModel) -> str:
    """Canonical JSON text: sorted keys, reduced coefficients and the kind."""
    data = value.model_dump(mode="json", by_alias=True)
    data["kind"] = kind_of(value)
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_object(value: BaseModel, path: Path) -> None:
    """Write an object file in canonical form."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_object(value), encoding="utf-8")
    logger.info("wrote %s", path)


def write_family(family: TestFamily, directory: Path) -> list[Path]:
    """Write each member of a family to ``member-NNN.json`` in a directory."""
    paths = []
    for n, member in enumerate(family.members):
        path = directory / f"member-{n:03d}.json"
        write_object(member, path)
        paths.append(path)
    return paths


class Workspace:
    """Named bindings of loaded objects.

    Args:
        bindings: Initial bindings
    """

    def __init__(self, bindings: dict[str, Loaded] | None = None) -> None:
        self.bindings: dict[str, Loaded] = dict(bindings or {})

    def bind(self, name: str, loaded: Loaded) -> Loaded:
        """Add a binding.

        Raises:
            InvalidInputError: If the name is already bound
        """
        if name in self.bindings:
            msg = f"name {name!r} is already bound to {self.bindings[name].path}"
            raise InvalidInputError(msg, {"name": name})
        self.bindings[name] = loaded
        return loaded

    def load(self, path: Path, name: str | None = None, expect: tuple[str, ...] = ()) -> Any:
        """Load a file, bind it and return the object.

        Args:
            path: Object file
            name: Binding name, the file stem if omitted
            expect: Accepted kinds; any kind if empty

        Returns:
            The validated object

        Raises:
            MalformedInput: If the object has an unexpected kind
        """
        loaded = load_object(path)
        if expect and loaded.kind not in expect:
            wanted = " or ".join(expect)
            raise MalformedInput(str(path), "kind", f"expected {wanted}, found {loaded.kind}")
        return self.bind(name or path.stem, loaded).value

    def __getitem__(self, name: str) -> Any:
        if name not in self.bindings:
            msg = f"no object bound to {name!r}"
            raise UnknownReference(msg, {"name": name})
        return self.bindings[name].value

    def __contains__(self, name: object) -> bool:
        return name in self.bindings

