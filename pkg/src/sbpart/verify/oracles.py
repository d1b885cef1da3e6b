"""Reference values computed without any partition enumeration."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial


@lru_cache(maxsize=None)
def dowling(n: int) -> int:
    """Dowling numbers from the EGF exp(x + (e^{2x} - 1)/2).

    Differentiating F = exp(g) gives D(n+1) = sum_j C(n, j) g^{(j+1)}(0) D(n-j)
    with g^{(j+1)}(0) = [j == 0] + 2^j.
    """
    if n == 0:
        return 1
    m = n - 1
    return sum(comb(m, j) * ((j == 0) + 2 ** j) * dowling(m - j) for j in range(m + 1))


def double_factorial_even(k: int) -> int:
    """(2k)!! = 2^k k!."""
    return 2 ** k * factorial(k)


def fubini(n: int) -> int:
    """Ordered set partitions of [n]: sum_k k! S(n, k) via the inclusion-exclusion formula."""
    total = 0
    for k in range(n + 1):
        surj = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
        total += surj
    return total
