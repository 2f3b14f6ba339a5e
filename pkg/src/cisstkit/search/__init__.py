"""Exhaustive search for packing numbers on small hosts."""

from cisstkit.search.config import SearchConfig, load_search_config, resolve_search_config
from cisstkit.search.enumerate import enumerate_steiner_trees
from cisstkit.search.packing import exact_generalized_kappa_star, exact_kappa_star
from cisstkit.search.symmetry import canonical_subsets, twin_classes
from cisstkit.search.types import ExactResult, GeneralizedResult, SearchStatus

__all__ = [
    "ExactResult",
    "GeneralizedResult",
    "SearchConfig",
    "SearchStatus",
    "canonical_subsets",
    "enumerate_steiner_trees",
    "exact_generalized_kappa_star",
    "exact_kappa_star",
    "load_search_config",
    "resolve_search_config",
    "twin_classes",
]
