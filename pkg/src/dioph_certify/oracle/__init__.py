"""Exhaustive search used as ground truth."""

from .brute_force import CrosscheckReport, SearchBox, brute_force, crosscheck

__all__ = ["CrosscheckReport", "SearchBox", "brute_force", "crosscheck"]
