"""Exact integer polynomials in q and the Stirling-type recurrences built on them."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence


class QPolynomial:
    """Immutable polynomial in ``q`` with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``. Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> QPolynomial:
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coefficient])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPolynomial:
        """Generating polynomial sum(q**e) over a multiset of exponents."""
        counts = Counter(exponents)
        if not counts:
            return cls()
        if min(counts) < 0:
            raise ValueError("negative exponent")
        cs = [0] * (max(counts) + 1)
        for e, c in counts.items():
            cs[e] = c
        return cls(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, q):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * q + c
        return acc

    def shift(self, k: int) -> QPolynomial:
        """Multiply by q**k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self._coeffs:
            return self
        return QPolynomial((0,) * k + self._coeffs)

    def __add__(self, other) -> QPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self._coeffs)

    def __sub__(self, other) -> QPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> QPolynomial:
        return (-self) + other

    def __mul__(self, other) -> QPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"coeffs": list(self._coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> QPolynomial:
        return cls(data["coeffs"])

    def to_csv_rows(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self._coeffs) if c]


def _coerce(x):
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial([x])
    if isinstance(x, Sequence) and not isinstance(x, str):
        return QPolynomial(x)
    return NotImplemented


ZERO = QPolynomial()
ONE = QPolynomial([1])


@lru_cache(maxsize=None)
def q_int(k: int) -> QPolynomial:
    """[k] = 1 + q + ... + q^(k-1); [0] = 0."""
    if k < 0:
        raise ValueError("q_int needs k >= 0")
    return QPolynomial([1] * k)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QPolynomial:
    if k < 0:
        raise ValueError("q_factorial needs k >= 0")
    return ONE if k == 0 else q_int(k) * q_factorial(k - 1)


@lru_cache(maxsize=None)
def q_double_factorial(k: int) -> QPolynomial:
    """[k][k-2][k-4]... ending at [2] or [1]; [0]!! = 1."""
    if k < 0:
        raise ValueError("q_double_factorial needs k >= 0")
    return ONE if k <= 1 else q_int(k) * q_double_factorial(k - 2)


# Out-of-support arguments (negative n or k, k > n) give zero rather than
# raising, since every recurrence below reaches for k - 1.

@lru_cache(maxsize=None)
def stirling_q(n: int, k: int) -> QPolynomial:
    """q-Stirling number of the second kind (type A)."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    if k == 0:
        return ZERO
    return stirling_q(n - 1, k - 1).shift(k - 1) + q_int(k) * stirling_q(n - 1, k)


@lru_cache(maxsize=None)
def stirling_B(n: int, k: int) -> int:
    """Type B Stirling number of the second kind."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    return stirling_B(n - 1, k - 1) + (2 * k + 1) * stirling_B(n - 1, k)


@lru_cache(maxsize=None)
def stirling_B_q(n: int, k: int) -> QPolynomial:
    """Type B q-Stirling number S_B[n, k]."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    return stirling_B_q(n - 1, k - 1) + q_int(2 * k + 1) * stirling_B_q(n - 1, k)


@lru_cache(maxsize=None)
def stirling_B_ordered_q(n: int, k: int) -> QPolynomial:
    """Ordered variant [2k]!! * S_B[n, k]."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return q_double_factorial(2 * k) * stirling_B_q(n, k)


@lru_cache(maxsize=None)
def dualmaj_rec(n: int, k: int) -> QPolynomial:
    """Recurrence q^(2k) R[n-1, k-1] + [2k+1] R[n-1, k] with R[0, k] = delta(0, k)."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    return dualmaj_rec(n - 1, k - 1).shift(2 * k) + q_int(2 * k + 1) * dualmaj_rec(n - 1, k)


def dowling(n: int) -> int:
    """Total number of standard signed partitions of <n> over all k."""
    return sum(stirling_B(n, k) for k in range(n + 1))


def warm_up(n_max: int) -> None:
    """Fill the memo tables up to ``n_max`` in increasing n.

    Call once from a single thread before sharing across threads; reads are
    safe afterwards.
    """
    for n in range(n_max + 1):
        for k in range(n + 1):
            stirling_q(n, k)
            stirling_B(n, k)
            stirling_B_q(n, k)
            stirling_B_ordered_q(n, k)
            dualmaj_rec(n, k)
