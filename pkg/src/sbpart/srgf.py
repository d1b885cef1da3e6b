"""Signed restricted growth functions (SRGF).

A word ``a_0 a_1 a*_1 ... a_n a*_n`` is stored flat, positions 0..2n. Pair i
sits at positions 2i-1 and 2i and records the block of element i: letter 0
means S_0, a_i = j > 0 means i in S_{2j-1}, a_i = -j means i in S_{2j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidPartition, InvalidWord
from .typeb import SignedPartition, from_labels

VECTORS = ("lb", "ls", "rcb", "lcb", "rob", "lob", "rcs", "lcs")

# Set statistic whose value each vector's digit sum reproduces.
VECTOR_STAT = {
    "lb": "ros",
    "ls": "los",
    "rcb": "rcb",
    "lcb": "lcb",
    "rob": "rob",
    "lob": "lob",
    "rcs": "rcs",
    "lcs": "lcs",
}

CLAUSES = {
    1: "a_0 must be 0",
    2: "each pair (a_i, a*_i) must be (j, -j), (-j, j) or (0, 0)",
    3: "growth: |a_i| may exceed every earlier |letter| by at most 1",
    4: "the pair (-j, j) must appear before any (j, -j)",
}


def _check(word: Sequence[int]) -> tuple[int, str] | None:
    if not word or word[0] != 0:
        return 1, CLAUSES[1]
    if len(word) % 2 == 0:
        return 2, "word length must be odd (2n + 1)"
    top = 0
    for i in range(1, (len(word) - 1) // 2 + 1):
        a, b = word[2 * i - 1], word[2 * i]
        if a != -b:
            return 2, f"pair {i} is ({a}, {b})"
        j = abs(a)
        if j > top + 1:
            return 3, f"growth: pair {i} uses {j} but the largest earlier letter is {top}"
        if j == top + 1 and a > 0:
            return 4, f"first occurrence: pair {i} is ({a}, {b}) before any ({-j}, {j})"
        top = max(top, j)
    return None


def validate(word: Sequence[int]) -> int | None:
    """Number of the first violated clause, or None for a valid word."""
    found = _check(word)
    return None if found is None else found[0]


@dataclass(frozen=True)
class Srgf:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        object.__setattr__(self, "word", word)
        found = _check(word)
        if found is not None:
            raise InvalidWord(*found)

    @property
    def n(self) -> int:
        return (len(self.word) - 1) // 2

    @property
    def k(self) -> int:
        return max((abs(a) for a in self.word), default=0)

    @property
    def labels(self) -> tuple[int, ...]:
        """a_1, ..., a_n."""
        return self.word[1::2]

    def __str__(self) -> str:
        return format_word(self.word)


def parse_word(text: str) -> Srgf:
    try:
        word = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InvalidWord(0, f"non-integer letter in {text!r}") from None
    return Srgf(tuple(word))


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(a) for a in word)


def enumerate_words(n: int, k: int | None = None) -> Iterator[Srgf]:
    """Valid words of length 2n+1 (maximal letter k if given).

    Grows words pair by pair over every letter in -n..n and keeps those that
    still pass :func:`validate`; validity is closed under taking prefixes.
    """
    def rec(word: list[int]):
        if len(word) == 2 * n + 1:
            if k is None or max(map(abs, word)) == k:
                yield Srgf(tuple(word))
            return
        for a in range(-n, n + 1):
            word += [a, -a]
            if _check(word) is None:
                yield from rec(word)
            del word[-2:]

    yield from rec([0])


def encode(p: SignedPartition) -> Srgf:
    if not p.standard_form:
        raise InvalidPartition("SRGF encoding needs a standard-form partition")
    where = p.block_index
    word = [0]
    for i in range(1, p.n + 1):
        b = where[i]
        if b == 0:
            word += [0, 0]
        elif b % 2:
            j = (b + 1) // 2
            word += [j, -j]
        else:
            j = b // 2
            word += [-j, j]
    return Srgf(tuple(word))


def decode(w: Srgf | Sequence[int]) -> SignedPartition:
    if not isinstance(w, Srgf):
        w = Srgf(tuple(w))
    return from_labels(w.labels)


def _occurrences(labels: Sequence[int]) -> tuple[dict[int, int], dict[int, int]]:
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, a in enumerate(labels, 1):
        j = abs(a)
        if j:
            first.setdefault(j, i)
            last[j] = i
    return first, last


def stat_vector(w: Srgf | Sequence[int], which: str) -> list[int]:
    """Per-position digits whose sum is the matching set statistic of decode(w).

    Digits sit on positive letters. A zero pair carries the contribution of its
    element: split evenly over both zeros for lb, on the second zero otherwise.
    """
    if which not in VECTORS:
        raise ValueError(f"unknown vector {which!r}; expected one of {VECTORS}")
    if not isinstance(w, Srgf):
        w = Srgf(tuple(w))
    labels = w.labels
    k = w.k
    first, last = _occurrences(labels)
    digits = [0] * len(w.word)
    for i, a in enumerate(labels, 1):
        t = abs(a)
        later = range(t + 1, k + 1) if t else range(1, k + 1)
        earlier = range(1, t)
        if which == "lb":
            # letters seen before, bigger than j; +1 when j follows its (-j, j)
            d = 2 * sum(first[u] < i for u in later) + (a > 0)
        elif which == "rob":
            # distinct bigger letters still to be introduced to the right
            d = 2 * sum(first[u] > i for u in later)
        elif which == "rcb":
            d = 2 * sum(last[u] > i for u in later) + (a > 0)
        elif which == "rcs":
            # bigger letters already finished; +1 on the last (j, -j)
            d = 2 * sum(last[u] < i for u in later) + (a > 0 and last[t] == i)
        elif t == 0:
            d = 0
        elif which == "ls":
            d = 2 * t - 1 if a < 0 else 2 * t - 2
        elif which == "lob":
            # only the first (-j, j)
            d = int(a < 0 and first[t] == i)
        elif which == "lcb":
            d = 2 * sum(last[u] > i for u in earlier) + (a < 0)
        else:  # lcs
            d = 2 * sum(last[u] < i for u in earlier) + (a < 0 and last[t] == i)
        if not d:
            continue
        if a > 0:
            digits[2 * i - 1] = d
        elif a < 0:
            digits[2 * i] = d
        elif which == "lb":
            digits[2 * i - 1] = digits[2 * i] = d // 2
        else:
            digits[2 * i] = d
    return digits


def pair_weight(a: int) -> int:
    """t-value of a pair: 1 for (0, 0), 2j for (j, -j), 2j + 1 for (-j, j)."""
    if a == 0:
        return 1
    return 2 * a if a > 0 else 2 * (-a) + 1


def maj_srgf(w: Srgf | Sequence[int]) -> int:
    """Sum of pair weights over pairs carrying a positive lb digit."""
    if not isinstance(w, Srgf):
        w = Srgf(tuple(w))
    lb = stat_vector(w, "lb")
    total = 0
    for i, a in enumerate(w.labels, 1):
        if lb[2 * i - 1] or lb[2 * i]:
            total += pair_weight(a)
    return total
