"""Complete-independence verification and upper bounds."""

from cisstkit.verify.bounds import (
    closed_neighbourhood_upper_bound,
    degree_upper_bound,
    max_family_upper_bound_induced,
)
from cisstkit.verify.checks import (
    is_completely_independent,
    require_steiner_members,
    verify_characterization,
    verify_definitional,
)
from cisstkit.verify.types import VerifyMode, Violation, ViolationKind

__all__ = [
    "VerifyMode",
    "Violation",
    "ViolationKind",
    "closed_neighbourhood_upper_bound",
    "degree_upper_bound",
    "is_completely_independent",
    "max_family_upper_bound_induced",
    "require_steiner_members",
    "verify_characterization",
    "verify_definitional",
]
