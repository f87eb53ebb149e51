"""Exhaustive enumeration and checks of categorical properties."""

from .adjunctions import check_adjunction_alg, check_adjunction_pullback_induced
from .catalog import algebras_up_to_iso, precrossed_family, principal_ideals, twoxmod_family
from .fibrations import check_cartesian, check_cocartesian
from .freeness import check_free_2xmod, check_free_module
from .homs import (
    enum_2x_morphisms,
    enum_actions,
    enum_alg_morphisms,
    enum_xmod_morphisms,
    find_vertical_isomorphism,
    vertical_base,
)
from .naturality import check_induced_naturality, check_pullback_naturality

__all__ = [
    "algebras_up_to_iso",
    "check_adjunction_alg",
    "check_adjunction_pullback_induced",
    "check_cartesian",
    "check_cocartesian",
    "check_free_2xmod",
    "check_free_module",
    "check_induced_naturality",
    "check_pullback_naturality",
    "enum_2x_morphisms",
    "enum_actions",
    "enum_alg_morphisms",
    "enum_xmod_morphisms",
    "find_vertical_isomorphism",
    "precrossed_family",
    "principal_ideals",
    "twoxmod_family",
    "vertical_base",
]
