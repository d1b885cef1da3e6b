"""Signed (type B) set partitions of <n> = {-n, ..., n} and their statistics.

A partition is stored as the block sequence S_0/S_1/.../S_2k. Block order is
part of the value: two partitions are equal only when their block sequences
are equal, so ordered partitions need no separate type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidPartition

RIGHT_STATS = ("ros", "rob", "rcs", "rcb", "rsb")
LEFT_STATS = ("los", "lob", "lcs", "lcb", "lsb")
STATS = ("ros", "rob", "rcs", "rcb", "los", "lob", "lcs", "lcb", "rsb", "lsb")
PRIMED_STATS = ("los", "lob")


@dataclass(frozen=True, eq=True)
class SignedPartition:
    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        n = self.n
        if n < 0:
            raise InvalidPartition("n must be nonnegative")
        if len(blocks) % 2 != 1:
            raise InvalidPartition("a signed partition has an odd number of blocks S_0..S_2k")
        s0 = blocks[0]
        if 0 not in s0:
            raise InvalidPartition("0 must lie in S_0")
        if any(-x not in s0 for x in s0):
            raise InvalidPartition("S_0 must be closed under negation")
        for i in range(1, len(blocks), 2):
            odd, even = blocks[i], blocks[i + 1]
            if not odd:
                raise InvalidPartition(f"block S_{i} is empty")
            if even != frozenset(-x for x in odd):
                raise InvalidPartition(f"S_{i + 1} must equal -S_{i}")
        total = sum(len(b) for b in blocks)
        union = frozenset().union(*blocks)
        if total != len(union):
            raise InvalidPartition("blocks are not pairwise disjoint")
        if union != frozenset(range(-n, n + 1)):
            raise InvalidPartition(f"blocks do not cover <{n}> = {{-{n}..{n}}}")

    @property
    def k(self) -> int:
        return (len(self.blocks) - 1) // 2

    @cached_property
    def mins(self) -> tuple[int, ...]:
        """m_i = min |S_i|; m_0 = 0."""
        return tuple(min(abs(x) for x in b) for b in self.blocks)

    @cached_property
    def maxs(self) -> tuple[int, ...]:
        """M_i = max |S_i|."""
        return tuple(max(abs(x) for x in b) for b in self.blocks)

    @cached_property
    def block_index(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    @property
    def standard_form(self) -> bool:
        m = self.mins
        for i in range(1, self.k + 1):
            if m[2 * i] not in self.blocks[2 * i]:
                return False
        evens = [m[2 * i] for i in range(self.k + 1)]
        return all(a < b for a, b in zip(evens, evens[1:]))

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"SignedPartition({format_partition(self)!r})"


def _element_key(x: int):
    return (abs(x), x < 0)


def format_partition(p: SignedPartition) -> str:
    return "/".join(" ".join(str(x) for x in sorted(b, key=_element_key)) for b in p.blocks)


def parse_partition(text: str, n: int | None = None) -> SignedPartition:
    """Parse "0 2 -2/-1 7/1 -7"; ``n`` defaults to the largest absolute element."""
    blocks = []
    for part in text.strip().split("/"):
        tokens = part.split()
        if not tokens:
            raise InvalidPartition(f"empty block in {text!r}")
        try:
            elems = [int(t) for t in tokens]
        except ValueError:
            raise InvalidPartition(f"non-integer element in {text!r}") from None
        if len(set(elems)) != len(elems):
            raise InvalidPartition(f"repeated element in block {part.strip()!r}")
        blocks.append(frozenset(elems))
    if n is None:
        n = max(abs(x) for b in blocks for x in b)
    return SignedPartition(n, tuple(blocks))


def from_labels(labels: Sequence[int]) -> SignedPartition:
    """Build a partition from per-element labels.

    ``labels[i - 1]`` places element i: 0 for S_0, t > 0 for S_{2t-1} and
    -t for S_{2t}; -i goes to the partner block.
    """
    n = len(labels)
    k = max((abs(a) for a in labels), default=0)
    blocks: list[set[int]] = [{0}] + [set() for _ in range(2 * k)]
    for i, a in enumerate(labels, 1):
        if a == 0:
            blocks[0].update((i, -i))
        elif a > 0:
            blocks[2 * a - 1].add(i)
            blocks[2 * a].add(-i)
        else:
            blocks[-2 * a].add(i)
            blocks[-2 * a - 1].add(-i)
    return SignedPartition(n, tuple(frozenset(b) for b in blocks))


def _standard_labels(n: int, k: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    # Element pairs {i, -i} are placed in increasing i: into S_0, either side
    # of an existing pair, or as the positive minimum of a new pair.
    labels = list(prefix)
    top = max((abs(a) for a in labels), default=0)

    def rec(top: int):
        i = len(labels) + 1
        if i > n:
            if top == k:
                yield tuple(labels)
            return
        remaining = n - i + 1
        if k - top > remaining:
            return
        choices = [0]
        for t in range(1, top + 1):
            choices += [-t, t]
        if top < k:
            choices.append(-(top + 1))
        for a in choices:
            labels.append(a)
            yield from rec(max(top, abs(a)))
            labels.pop()

    yield from rec(top)


def reorder(p: SignedPartition, perm: Sequence[int], swaps: Sequence[bool]) -> SignedPartition:
    """Rearrange pairs: output pair t is input pair perm[t] (0-based), optionally swapped."""
    blocks = [p.blocks[0]]
    for t, src in enumerate(perm):
        odd, even = p.blocks[2 * src + 1], p.blocks[2 * src + 2]
        if swaps[t]:
            odd, even = even, odd
        blocks += [odd, even]
    return SignedPartition(p.n, tuple(blocks))


def enumerate_b(n: int, k: int, ordered: bool = False,
                prefix: Sequence[int] = ()) -> Iterator[SignedPartition]:
    """Standard signed partitions of <n> with 2k+1 blocks, or all orderings of them.

    ``prefix`` fixes the labels of elements 1..len(prefix) (see
    :func:`from_labels`) and restricts the stream to that subtree.
    """
    if not 0 <= k <= n:
        return
    for labels in _standard_labels(n, k, prefix):
        p = from_labels(labels)
        if not ordered:
            yield p
            continue
        for perm in itertools.permutations(range(k)):
            for swaps in itertools.product((False, True), repeat=k):
                yield reorder(p, perm, swaps)


def subtree_prefixes(n: int, k: int, depth: int) -> list[tuple[int, ...]]:
    """Label prefixes of elements 1..depth whose subtrees partition the standard stream."""
    depth = min(depth, n)
    out: list[tuple[int, ...]] = []

    def rec(labels: list[int], top: int):
        if len(labels) == depth:
            out.append(tuple(labels))
            return
        choices = [0] + [a for t in range(1, top + 1) for a in (-t, t)]
        if top < k:
            choices.append(-(top + 1))
        for a in choices:
            labels.append(a)
            rec(labels, max(top, abs(a)))
            labels.pop()

    rec([], 0)
    return out


def standardize(p: SignedPartition | Iterable[Iterable[int]], n: int | None = None) -> SignedPartition:
    """Swap within pairs so the positive minimum is in S_2i, then sort pairs by minimum."""
    if not isinstance(p, SignedPartition):
        blocks = tuple(frozenset(b) for b in p)
        if n is None:
            n = max(abs(x) for b in blocks for x in b)
        p = SignedPartition(n, blocks)
    pairs = []
    for i in range(1, p.k + 1):
        odd, even = p.blocks[2 * i - 1], p.blocks[2 * i]
        m = min(abs(x) for x in odd)
        if m not in even:
            odd, even = even, odd
        pairs.append((m, odd, even))
    pairs.sort(key=lambda t: t[0])
    blocks = [p.blocks[0]]
    for _, odd, even in pairs:
        blocks += [odd, even]
    return SignedPartition(p.n, tuple(blocks))


def _count_pairs(p: SignedPartition, which: str, zero_target: bool = False) -> int:
    m, M = p.mins, p.maxs
    nb = len(p.blocks)
    right = which in RIGHT_STATS
    total = 0
    for i, block in enumerate(p.blocks):
        if right:
            targets = range(i + 1, nb)
        else:
            targets = range(0 if zero_target else 1, i)
        for j in targets:
            lo, hi = m[j], M[j]
            for s in block:
                if which in ("ros", "los"):
                    ok = s >= lo
                elif which in ("rob", "lob"):
                    ok = 0 < s <= lo
                elif which in ("rcs", "lcs"):
                    ok = s >= hi
                elif which in ("rcb", "lcb"):
                    ok = 0 < s <= hi
                else:
                    ok = lo <= s <= hi
                total += ok
    return total


def stat_b(p: SignedPartition, which: str) -> int:
    """Number of pairs (s, S_j) counted by the named statistic.

    Right statistics take j > i; left statistics take i > j > 0.
    """
    if which not in STATS:
        raise ValueError(f"unknown statistic {which!r}; expected one of {STATS}")
    return _count_pairs(p, which)


def stat_b_prime(p: SignedPartition, which: str) -> int:
    """Left statistic with S_0 admitted as a target block (j >= 0)."""
    if which not in PRIMED_STATS:
        raise ValueError(f"primed variant defined for {PRIMED_STATS}, not {which!r}")
    return _count_pairs(p, which, zero_target=True)


def inv(p: SignedPartition) -> int:
    """Inversions (s, S_j): s in an earlier block and s >= m_j."""
    if not p.standard_form:
        raise InvalidPartition("inv is defined on standard-form partitions")
    return _count_pairs(p, "ros")


def inversions(p: SignedPartition) -> list[tuple[int, int]]:
    """The inversion pairs themselves, as (s, j)."""
    m = p.mins
    return [(s, j) for i, b in enumerate(p.blocks) for j in range(i + 1, len(p.blocks))
            for s in sorted(b) if s >= m[j]]


def complement(p: SignedPartition) -> SignedPartition:
    """Replace i by n+1-i and -i by -(n+1-i) blockwise; 0 is fixed."""
    n = p.n

    def c(x: int) -> int:
        if x > 0:
            return n + 1 - x
        if x < 0:
            return -(n + 1 + x)
        return 0

    return SignedPartition(n, tuple(frozenset(c(x) for x in b) for b in p.blocks))


def f_map(p: SignedPartition) -> SignedPartition:
    """Standardization of the complement."""
    if not p.standard_form:
        raise InvalidPartition("f is defined on standard-form partitions")
    return standardize(complement(p))
