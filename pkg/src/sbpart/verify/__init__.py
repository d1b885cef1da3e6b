"""Claim harness, distribution engine, cache and command line."""

from .cache import DistributionCache
from .claims import CLAIMS, ClaimReport, check, dualmaj_scan, replay
from .distribution import DistributionKey, distribution

__all__ = ["CLAIMS", "ClaimReport", "DistributionCache", "DistributionKey",
           "check", "distribution", "dualmaj_scan", "replay"]
