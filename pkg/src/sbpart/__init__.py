"""Enumeration and exhaustive verification toolkit for signed (type B) set partitions."""

from .errors import InvalidPartition, InvalidWord, LimitExceeded
from .qseries import QPolynomial
from .typeb import SignedPartition, enumerate_b, parse_partition

__version__ = "0.1.0"

__all__ = ["InvalidPartition", "InvalidWord", "LimitExceeded", "QPolynomial",
           "SignedPartition", "enumerate_b", "parse_partition"]
