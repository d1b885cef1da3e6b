"""Generating polynomials of statistics by exhaustive enumeration."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

from .. import bijmaps, srgf, typea, typeb
from ..errors import LimitExceeded
from ..qseries import QPolynomial
from .cache import DistributionCache

log = logging.getLogger(__name__)

FAMILIES = ("standard", "ordered", "typeA-standard", "typeA-ordered")

# Default enumeration ceilings on n, per family.
LIMITS = {"standard": 7, "ordered": 5, "typeA-standard": 10, "typeA-ordered": 7}

ALIASES = {"los_b'": "los'", "losp": "los'", "lob_b'": "lob'", "lobp": "lob'"}


def _b_stat(which: str) -> Callable[[typeb.SignedPartition], int]:
    return lambda p: typeb.stat_b(p, which)


def _b_prime(which: str) -> Callable[[typeb.SignedPartition], int]:
    return lambda p: typeb.stat_b_prime(p, which)


def _b_maj(p: typeb.SignedPartition) -> int:
    return srgf.maj_srgf(srgf.encode(p))


def _b_inv(p: typeb.SignedPartition) -> int:
    # inversions keep their definition on ordered partitions
    return typeb.stat_b(p, "ros")


def _a_rgf(which: str) -> Callable[[typea.SetPartition], int]:
    return lambda p: typea.ww_stat(typea.to_rgf(p), which)


def _a_stein(which: str) -> Callable[[typea.SetPartition], int]:
    return lambda p: typea.stein_stat(p, which)


def _dual(variant: bijmaps.DualVariant) -> Callable[[typeb.SignedPartition], int]:
    return lambda p: bijmaps.dual_maj(p, variant)


def _registry() -> dict[str, dict[str, Callable]]:
    b_common = {"inv": _b_inv, "los'": _b_prime("los"), "lob'": _b_prime("lob")}
    b_common.update({s: _b_stat(s) for s in typeb.STATS})
    standard = dict(b_common, maj=_b_maj)
    ordered = dict(b_common)
    for v in bijmaps.DUAL_VARIANTS:
        (ordered if v.ordered else standard)[f"dualmaj:{v.id}"] = _dual(v)
    a_ordered = {s: _a_stein(s) for s in typea.STEIN_STATS}
    a_ordered["ROS"] = typea.big_ros
    a_standard = dict(a_ordered)
    a_standard.update({s: _a_rgf(s) for s in typea.WW_STATS})
    return {
        "standard": standard,
        "ordered": ordered,
        "typeA-standard": a_standard,
        "typeA-ordered": a_ordered,
    }


STATISTICS = _registry()


def statistic(family: str, which: str) -> Callable:
    if family not in STATISTICS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    which = ALIASES.get(which, which)
    try:
        return STATISTICS[family][which]
    except KeyError:
        raise ValueError(
            f"statistic {which!r} is not defined on family {family!r}; "
            f"available: {sorted(STATISTICS[family])}") from None


@dataclass(frozen=True)
class DistributionKey:
    family: str
    statistic: str
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "statistic", ALIASES.get(self.statistic, self.statistic))
        statistic(self.family, self.statistic)
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")

    def to_json(self) -> dict:
        return asdict(self)


def enumerate_family(family: str, n: int, k: int, prefix: tuple[int, ...] = ()):
    if family == "standard":
        return typeb.enumerate_b(n, k, prefix=prefix)
    if family == "ordered":
        return typeb.enumerate_b(n, k, ordered=True, prefix=prefix)
    if family == "typeA-standard":
        return typea.enumerate_a(n, k)
    if family == "typeA-ordered":
        return typea.enumerate_a(n, k, ordered=True)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def check_limit(family: str, n: int, limit: int | None = None) -> None:
    ceiling = LIMITS[family] if limit is None else limit
    if limit is not None and limit > LIMITS[family]:
        log.warning("enumeration limit for %s raised from %d to %d",
                    family, LIMITS[family], limit)
    if n > ceiling:
        raise LimitExceeded(f"n = {n} exceeds the {family} limit n <= {ceiling}")


def _subtree_poly(family: str, which: str, n: int, k: int, prefix: tuple[int, ...]) -> QPolynomial:
    stat = statistic(family, which)
    return QPolynomial.from_exponents(stat(p) for p in enumerate_family(family, n, k, prefix))


def compute(key: DistributionKey, workers: int = 1) -> QPolynomial:
    """Enumerate without touching any cache.

    With ``workers > 1`` type B families fan out over independent subtrees;
    the merge is polynomial addition, so the result does not depend on it.
    """
    fam, which, n, k = key.family, key.statistic, key.n, key.k
    if workers <= 1 or fam.startswith("typeA") or n < 3:
        return _subtree_poly(fam, which, n, k, ())
    prefixes = typeb.subtree_prefixes(n, k, depth=3)
    total = QPolynomial()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = [pool.submit(_subtree_poly, fam, which, n, k, pre) for pre in prefixes]
        for job in jobs:
            total = total + job.result()
    return total


def distribution(key: DistributionKey, *, cache: DistributionCache | None = None,
                 workers: int = 1, limit: int | None = None) -> QPolynomial:
    """Exact generating polynomial sum(q**stat) over the family at (n, k)."""
    check_limit(key.family, key.n, limit)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    poly = compute(key, workers)
    if cache is not None:
        cache.put(key, poly)
    return poly
