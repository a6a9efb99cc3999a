"""Exact q-series and partition oracles for k-th smallest part identities."""

from .fps import PochSpec, TruncatedSeries, ZPolynomial, deserialize, serialize
from .partitions import StatVariant, enum_distinct, stat_poly
from .qexpr import expand, parse

__version__ = "0.1.0"

__all__ = [
    "PochSpec",
    "StatVariant",
    "TruncatedSeries",
    "ZPolynomial",
    "deserialize",
    "enum_distinct",
    "expand",
    "parse",
    "serialize",
    "stat_poly",
]
