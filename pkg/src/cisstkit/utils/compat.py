"""Compatibility helpers across supported Python versions."""

from __future__ import annotations

import sys
from enum import Enum

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:
    class StrEnum(str, Enum):
        """Python 3.9/3.10 fallback for enum.StrEnum."""

        def __str__(self) -> str:
            return str(self.value)


__all__ = ["StrEnum"]
