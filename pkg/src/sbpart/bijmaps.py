"""The Foata-style map F, reduced matrices h(pi), and dual descent multisets."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidPartition
from .typeb import SignedPartition


def _remove_max(p: SignedPartition) -> SignedPartition:
    n = p.n
    blocks = [b - {n, -n} for b in p.blocks]
    blocks = [b for i, b in enumerate(blocks) if i == 0 or b]
    return SignedPartition(n - 1, tuple(blocks))


def foata_case(p: SignedPartition) -> int:
    """Which of the five insertion cases applies to the largest pair of p (n >= 1)."""
    n, k = p.n, p.k
    where = p.block_index
    bn = where[n]
    hits = []
    if k and p.blocks[2 * k - 1] == {-n} and p.blocks[2 * k] == {n}:
        hits.append(1)
    if k and bn == 2 * k and len(p.blocks[2 * k]) > 1:
        hits.append(2)
    if k and bn == 2 * k - 1:
        hits.append(3)
    if 0 < bn < 2 * k - 1:
        hits.append(4)
    if bn == 0:
        hits.append(5)
    assert len(hits) == 1, f"foata cases {hits} for {p}"
    return hits[0]


def foata(p: SignedPartition) -> SignedPartition:
    """Recursive map built by deleting +-n, mapping, and reinserting by case."""
    if not p.standard_form:
        raise InvalidPartition("F is defined on standard-form partitions")
    return _foata(p)


def _foata(p: SignedPartition) -> SignedPartition:
    n = p.n
    if n == 0:
        return p
    case = foata_case(p)
    sigma = _foata(_remove_max(p))
    blocks = [set(b) for b in sigma.blocks]
    k = p.k
    if case == 1:
        blocks += [{-n}, {n}]
    elif case == 2:
        blocks[2 * k].add(n)
        blocks[2 * k - 1].add(-n)
    elif case == 3:
        blocks[0].update((n, -n))
    elif case == 4:
        where = p.block_index
        # the sign sitting in S_2i moves to the odd block S_2(k-i)-1
        sign = n if where[n] % 2 == 0 else -n
        i = where[sign] // 2
        blocks[2 * (k - i) - 1].add(sign)
        blocks[2 * (k - i)].add(-sign)
    else:
        blocks[2 * k - 1].add(n)
        blocks[2 * k].add(-n)
    return SignedPartition(n, tuple(frozenset(b) for b in blocks))


def foata_trace(p: SignedPartition) -> list[tuple[SignedPartition, SignedPartition]]:
    """(pi restricted to <m>, F of it) for m = 0..n."""
    chain = [p]
    while chain[-1].n:
        chain.append(_remove_max(chain[-1]))
    return [(q, foata(q)) for q in reversed(chain)]


@dataclass(frozen=True)
class ReducedMatrix:
    """(2k+1) x (2n+1) matrix over {-1, 0, 1}; row r holds block S_r."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def problems(self) -> list[str]:
        """Structural invariants that fail; empty for a well-formed matrix."""
        out = []
        nrows, ncols = self.shape
        if nrows % 2 != 1 or ncols % 2 != 1:
            out.append("dimensions must be odd")
        if any(x not in (-1, 0, 1) for r in self.rows for x in r):
            out.append("entries must be -1, 0 or 1")
        if not self.rows or self.rows[0][0] != 1:
            out.append("entry (1,1) must be 1")
        for c in range(ncols):
            if sum(1 for r in self.rows if r[c]) != 1:
                out.append(f"column {c + 1} must hold exactly one nonzero")
        for ri, r in enumerate(self.rows):
            if not any(r):
                out.append(f"row {ri + 1} is empty")
        for i in range(1, (ncols - 1) // 2 + 1):
            vals = sorted(r[c] for c in (2 * i - 1, 2 * i) for r in self.rows if r[c])
            if vals != [-1, 1]:
                out.append(f"columns {2 * i}, {2 * i + 1} must hold one -1 and one 1")
        return out

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def reduced_matrix(p: SignedPartition) -> ReducedMatrix:
    """Row r hosts S_r; column 1 hosts 0 and columns 2i, 2i+1 host -i and i.

    The member of {-i, i} in the lower-indexed block takes column 2i; when
    both are in S_0, -i goes first.
    """
    if not p.standard_form:
        raise InvalidPartition("reduced matrices are defined on standard-form partitions")
    where = p.block_index
    rows = [[0] * (2 * p.n + 1) for _ in p.blocks]
    rows[0][0] = 1
    for i in range(1, p.n + 1):
        bneg, bpos = where[-i], where[i]
        if bpos < bneg:
            order = (i, -i)
        else:
            order = (-i, i)
        for c, x in zip((2 * i - 1, 2 * i), order):
            rows[where[x]][c] = 1 if x > 0 else -1
    return ReducedMatrix(tuple(tuple(r) for r in rows))


def parse_matrix(text: str) -> ReducedMatrix:
    rows = tuple(tuple(int(x) for x in line.split()) for line in text.strip().splitlines() if line.strip())
    return ReducedMatrix(rows)


def maj_matrix(m: ReducedMatrix | Sequence[Sequence[int]]) -> int:
    """Sum of 1-based row numbers of 1-entries with another 1 strictly south-west."""
    rows = m.rows if isinstance(m, ReducedMatrix) else m
    ones = [(r, c) for r, row in enumerate(rows) for c, x in enumerate(row) if x == 1]
    return sum(r + 1 for r, c in ones if any(r2 > r and c2 < c for r2, c2 in ones))


@dataclass(frozen=True)
class DualVariant:
    """One reading of the dual descent definition.

    strict: ``s > m`` (else ``s >= m``); absolute: compare ``|s|``;
    shifted: label i names S_{i-1} and compares with S_{i-2} (else label i
    names S_i and compares with S_{i-1}); ordered: domain is all orderings.
    """

    strict: bool
    absolute: bool
    shifted: bool
    ordered: bool

    @property
    def id(self) -> str:
        return "-".join((
            "strict" if self.strict else "weak",
            "abs" if self.absolute else "signed",
            "shifted" if self.shifted else "raw",
            "ordered" if self.ordered else "standard",
        ))

    @classmethod
    def from_id(cls, ident: str) -> DualVariant:
        for v in DUAL_VARIANTS:
            if v.id == ident:
                return v
        raise ValueError(f"unknown dual descent variant {ident!r}")


DUAL_VARIANTS = tuple(
    DualVariant(*flags) for flags in itertools.product((True, False), repeat=4)
)


def dual_descent(p: SignedPartition, variant: DualVariant | str) -> Counter:
    """Multiset {label: multiplicity}; zero multiplicities omitted."""
    if isinstance(variant, str):
        variant = DualVariant.from_id(variant)
    if not variant.ordered and not p.standard_form:
        raise InvalidPartition(f"variant {variant.id} is defined on standard-form partitions")
    m = p.mins
    out: Counter = Counter()
    nb = len(p.blocks)
    for b in range(1, nb):
        label = b + 1 if variant.shifted else b
        ref = m[b - 1]
        count = 0
        for s in p.blocks[b]:
            v = abs(s) if variant.absolute else s
            if v > ref or (not variant.strict and v == ref):
                count += 1
        if count:
            out[label] = count
    return out


def dual_maj(p: SignedPartition, variant: DualVariant | str) -> int:
    return sum((label - 1) * mult for label, mult in dual_descent(p, variant).items())
