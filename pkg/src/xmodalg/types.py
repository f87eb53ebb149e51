"""Type definitions shared across xmodalg."""

from __future__ import annotations

from typing import TYPE_CHECKING, Literal, TypeAlias

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    # JSON-compatible value types (recursive)
    JSONValue: TypeAlias = str | int | float | bool | None | "JSONObject" | "JSONArray"
    JSONObject: TypeAlias = dict[str, JSONValue]
    JSONArray: TypeAlias = list[JSONValue]
else:
    # Runtime definitions to avoid circular references
    JSONValue: TypeAlias = str | int | float | bool | None | dict | list
    JSONObject: TypeAlias = dict[str, JSONValue]
    JSONArray: TypeAlias = list[JSONValue]

# Exact coefficients are stored as nested tuples of ints so models stay hashable
Vector: TypeAlias = tuple[int, ...]
Matrix: TypeAlias = tuple[Vector, ...]
Tensor3: TypeAlias = tuple[Matrix, ...]

IntArray: TypeAlias = npt.NDArray[np.int64]

SearchOrder: TypeAlias = Literal["lex", "reverse"]
