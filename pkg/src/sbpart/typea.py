"""Classical set partitions of [n], restricted growth functions and their statistics.

Used as the calibration baseline for the signed analogues in :mod:`sbpart.typeb`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidPartition

WW_STATS = ("lb", "ls", "rb", "rs")
STEIN_STATS = ("ros", "rob", "rcs", "rcb", "los", "lob", "lcs", "lcb", "rsb", "lsb")


@dataclass(frozen=True)
class SetPartition:
    """Blocks B_1/.../B_k of [n]; block order is significant."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise InvalidPartition("empty block")
            if seen & b:
                raise InvalidPartition("blocks are not disjoint")
            seen |= b
        if seen != set(range(1, len(seen) + 1)):
            raise InvalidPartition("blocks do not cover 1..n")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def standard_form(self) -> bool:
        mins = [min(b) for b in self.blocks]
        return mins == sorted(mins)

    def block_of(self) -> dict[int, int]:
        """Map element -> 1-based block number."""
        return {x: i for i, b in enumerate(self.blocks, 1) for x in b}

    def standardize(self) -> SetPartition:
        return SetPartition(tuple(sorted(self.blocks, key=min)))

    def __str__(self) -> str:
        return format_partition_a(self)


def parse_partition_a(text: str) -> SetPartition:
    """Parse "16/23478/5" or "4 7/3/1 5 9/6 8/2"."""
    parts = text.strip().split("/")
    blocks = []
    for part in parts:
        part = part.strip()
        if not part:
            raise InvalidPartition(f"empty block in {text!r}")
        tokens = part.split() if " " in part else list(part)
        try:
            blocks.append(frozenset(int(t) for t in tokens))
        except ValueError:
            raise InvalidPartition(f"non-integer element in {text!r}") from None
        if any(x <= 0 for x in blocks[-1]):
            raise InvalidPartition("type A elements must be positive")
    return SetPartition(tuple(blocks))


def format_partition_a(p: SetPartition) -> str:
    compact = p.n < 10
    sep = "" if compact else " "
    return "/".join(sep.join(str(x) for x in sorted(b)) for b in p.blocks)


def _standard_rgfs(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # Words a_1..a_n with a_1 = 1, growth cap, maximal letter exactly k.
    if n == 0:
        if k == 0:
            yield ()
        return
    if k == 0:
        return

    def rec(prefix: list[int], top: int):
        if len(prefix) == n:
            if top == k:
                yield tuple(prefix)
            return
        remaining = n - len(prefix)
        if k - top > remaining:
            return
        for a in range(1, min(top + 1, k) + 1):
            prefix.append(a)
            yield from rec(prefix, max(top, a))
            prefix.pop()

    yield from rec([1], 1)


def enumerate_a(n: int, k: int, ordered: bool = False) -> Iterator[SetPartition]:
    """Partitions of [n] into k blocks, standard form or all block orderings.

    Emission order is lexicographic in the RGF, then in the block permutation.
    """
    if not 0 <= k <= n:
        return
    for w in _standard_rgfs(n, k):
        p = from_rgf(w)
        if not ordered:
            yield p
        else:
            for perm in itertools.permutations(range(k)):
                yield SetPartition(tuple(p.blocks[i] for i in perm))


def is_rgf(word: Sequence[int]) -> bool:
    top = 0
    for a in word:
        if a < 1 or a > top + 1:
            return False
        top = max(top, a)
    return True


def to_rgf(p: SetPartition) -> tuple[int, ...]:
    if not p.standard_form:
        raise InvalidPartition("RGF encoding needs a standard-form partition")
    where = p.block_of()
    return tuple(where[i] for i in range(1, p.n + 1))


def from_rgf(word: Sequence[int]) -> SetPartition:
    if not is_rgf(word):
        raise InvalidPartition(f"not a restricted growth function: {list(word)}")
    k = max(word, default=0)
    blocks: list[set[int]] = [set() for _ in range(k)]
    for i, a in enumerate(word, 1):
        blocks[a - 1].add(i)
    return SetPartition(tuple(frozenset(b) for b in blocks))


def ww_vector(word: Sequence[int], which: str) -> list[int]:
    """Per-letter Wachs-White statistic; repeated values are counted once."""
    if which not in WW_STATS:
        raise ValueError(f"unknown statistic {which!r}")
    out = []
    for j, a in enumerate(word):
        if which[0] == "l":
            others = word[:j]
        else:
            others = word[j + 1:]
        if which[1] == "b":
            out.append(len({x for x in others if x > a}))
        else:
            out.append(len({x for x in others if x < a}))
    return out


def ww_stat(word: Sequence[int], which: str) -> int:
    return sum(ww_vector(word, which))


def stein_vector(p: SetPartition, which: str) -> dict[int, int]:
    """Coordinate statistic for each letter i of an ordered partition."""
    if which not in STEIN_STATS:
        raise ValueError(f"unknown statistic {which!r}")
    where = p.block_of()
    if which in ("rsb", "lsb"):
        spans = [(min(b), max(b)) for b in p.blocks]
        out = {}
        for i, bi in where.items():
            if which == "rsb":
                idx = range(bi, p.k)
            else:
                idx = range(bi - 1)
            out[i] = sum(1 for t in idx if spans[t][0] < i < spans[t][1])
        return out
    side, marker, cmp = which[0], which[1], which[2]
    anchors = {min(b) for b in p.blocks} if marker == "o" else {max(b) for b in p.blocks}
    out = {}
    for i, bi in where.items():
        c = 0
        for j in anchors:
            bj = where[j]
            if side == "r" and not bj > bi:
                continue
            if side == "l" and not bj < bi:
                continue
            if cmp == "s" and i > j or cmp == "b" and i < j:
                c += 1
        out[i] = c
    return out


def stein_stat(p: SetPartition, which: str) -> int:
    return sum(stein_vector(p, which).values())


def big_ros(p: SetPartition) -> int:
    """ROS = ros + C(k, 2)."""
    return stein_stat(p, "ros") + p.k * (p.k - 1) // 2
