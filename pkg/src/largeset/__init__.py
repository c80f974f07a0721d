"""Largeness of subsets of groups (thick, syndetic, fat, Delta*, IP*) on finite windows."""
__version__ = "0.1.0"

from .errors import (BudgetExhausted, ConfigError, FamilyMismatch, LargesetError,
                     PreconditionError, WindowTooLarge)
from .groups import (BooleanBall, FreeBall, FreeWord, IntRange, Word, group_from_name,
                     parse_window)
from .report import EXACT, LOWER, UPPER, LargenessReport
from .sets import FiniteSet, SetSpec

__all__ = [
    "__version__", "BudgetExhausted", "ConfigError", "FamilyMismatch", "LargesetError",
    "PreconditionError", "WindowTooLarge", "BooleanBall", "FreeBall", "FreeWord", "IntRange",
    "Word", "group_from_name", "parse_window", "EXACT", "LOWER", "UPPER", "LargenessReport",
    "FiniteSet", "SetSpec",
]
