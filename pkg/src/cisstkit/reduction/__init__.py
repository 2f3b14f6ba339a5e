"""Terminal-subset reduction and failover."""

from cisstkit.reduction.failover import failover
from cisstkit.reduction.prune import prune_family, prune_to_subset

__all__ = ["failover", "prune_family", "prune_to_subset"]
