"""Verification laboratory for minimal-excludant statistics of
overpartitions: exact q-series on one side, exhaustive enumeration on the
other, and theorem checks that compare the two."""

from .qfactory import MexVariant
from .series import Series

__all__ = ["MexVariant", "Series"]
__version__ = "0.1.0"
