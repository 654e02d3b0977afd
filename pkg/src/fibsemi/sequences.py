"""Generalized Fibonacci sequences with exact integer arithmetic.

A sequence is fixed by its two seeds: V_1 = a, V_2 = b, and
V_m = V_{m-1} + V_{m-2} for m >= 3.  The classical Fibonacci and Lucas
numbers are the seed choices (1, 1) and (1, 3); for those two we also
expose the standard index-0 extensions F_0 = 0 and L_0 = 2, which the
identity layer needs.

Everything here is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class SequenceSpec:
    """Seed pair (V_1, V_2) of a generalized Fibonacci sequence."""

    v1: int
    v2: int

    def __post_init__(self):
        if self.v1 < 1 or self.v2 < 1:
            raise ValueError(f"seeds must be positive, got ({self.v1}, {self.v2})")


FIBONACCI = SequenceSpec(1, 1)
LUCAS = SequenceSpec(1, 3)


@lru_cache(maxsize=None)
def _linear(a: int, b: int, n: int) -> int:
    # n >= 1; O(n) walk, memoized per (a, b, n)
    if n == 1:
        return a
    if n == 2:
        return b
    prev, cur = a, b
    for _ in range(n - 2):
        prev, cur = cur, prev + cur
    return cur


def genfib(spec: SequenceSpec, n: int) -> int:
    """V_n for the given seed pair; indices are 1-based."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return _linear(spec.v1, spec.v2, n)


def genfib_range(spec: SequenceSpec, lo: int, hi: int) -> list[int]:
    """[V_lo, ..., V_hi] inclusive."""
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo} hi={hi}")
    return [genfib(spec, n) for n in range(lo, hi + 1)]


def fib(n: int) -> int:
    """Fibonacci number F_n, with F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n == 0:
        return 0
    return _linear(1, 1, n)


def lucas(n: int) -> int:
    """Lucas number L_n, with L_0 = 2, L_1 = 1, L_2 = 3."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n == 0:
        return 2
    return _linear(1, 3, n)


def fib_ratio(m: int, d: int) -> int:
    """F_m / F_d as an exact integer.

    Callers only ever need this for d | m, where divisibility of the
    values is guaranteed; a non-integral quotient is therefore an
    internal error, not bad input.
    """
    q, r = divmod(fib(m), fib(d))
    if r:
        raise AssertionError(f"F_{d} does not divide F_{m}")
    return q
