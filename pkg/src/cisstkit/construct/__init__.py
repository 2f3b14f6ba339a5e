"""Explicit completely independent tree families for K_n and K_{m1,m2}."""

from cisstkit.construct.bipartite import (
    assemble_max_family,
    build_bipartite_family,
    build_catalog,
    build_cists_bipartite,
    build_I_type,
    build_IX_type,
    build_IY_type,
    build_pruned_cist_family,
    build_star_family,
)
from cisstkit.construct.bounds import (
    bound_report,
    expected_sizes,
    lower_bound_bipartite,
    upper_bound_bipartite,
)
from cisstkit.construct.complete import (
    build_cissts_complete,
    build_cists_complete,
    kappa_star_complete,
)
from cisstkit.construct.types import BoundReport, BoundRow, CaseLabel, FamilyCatalog, SurplusSide

__all__ = [
    "BoundReport",
    "BoundRow",
    "CaseLabel",
    "FamilyCatalog",
    "SurplusSide",
    "assemble_max_family",
    "bound_report",
    "build_I_type",
    "build_IX_type",
    "build_IY_type",
    "build_bipartite_family",
    "build_catalog",
    "build_cissts_complete",
    "build_cists_bipartite",
    "build_cists_complete",
    "build_pruned_cist_family",
    "build_star_family",
    "expected_sizes",
    "kappa_star_complete",
    "lower_bound_bipartite",
    "upper_bound_bipartite",
]
