"""Exact equivariant log canonical thresholds of del Pezzo surfaces."""

from _dpa import (  # noqa: F401
    DpaError,
    catalog,
    catalog_entry,
    classify,
    germ_lct,
    invariants,
    orbits,
    verify_all,
)

__all__ = [
    "DpaError",
    "catalog",
    "catalog_entry",
    "classify",
    "germ_lct",
    "invariants",
    "orbits",
    "verify_all",
]
