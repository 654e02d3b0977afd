"""Brute-force numerical semigroup oracle.

Everything in here is independent of the closed forms elsewhere in the
package: membership is computed by dynamic programming over an explicit
bitmap, and the Frobenius number, genus, Apery set and minimal
generating set are read off that table.  The closed-form layer is
checked against these functions, never the other way around.

The table covers [0, bound] with bound = g_min * g_max by default.
That always suffices: any residue class mod g_min is reached by a sum
of at most g_min - 1 generators, so every gap is < g_min * g_max.
Tables larger than a configurable bit ceiling (FIBSEMI_ORACLE_MAX_BITS,
default 2^28) are refused rather than built.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from . import kernel

DEFAULT_MAX_BITS = 1 << 28
MAX_BITS_ENV = "FIBSEMI_ORACLE_MAX_BITS"


class OracleInfeasibleError(RuntimeError):
    """The requested membership table would exceed the bit ceiling."""


def _max_bits(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(MAX_BITS_ENV)
    return int(env) if env else DEFAULT_MAX_BITS


@dataclass(frozen=True)
class MembershipTable:
    """Bitmap of representable values over [0, bound]."""

    generators: tuple[int, ...]
    bound: int
    bits: bytes = field(repr=False)

    def is_member(self, x: int) -> bool:
        if not 0 <= x <= self.bound:
            raise ValueError(f"{x} outside table range [0, {self.bound}]")
        return bool(self.bits[x >> 3] >> (x & 7) & 1)

    @cached_property
    def _gaps_int(self) -> int:
        mask = (1 << (self.bound + 1)) - 1
        return ~int.from_bytes(self.bits, "little") & mask

    def gaps(self) -> list[int]:
        """All non-members, ascending.  Intended for small tables."""
        out = []
        g = self._gaps_int
        while g:
            low = g & -g
            out.append(low.bit_length() - 1)
            g ^= low
        return out


def build_membership(
    generators,
    *,
    bound: int | None = None,
    max_bits: int | None = None,
) -> MembershipTable:
    """DP membership table for the semigroup generated by `generators`."""
    gens = tuple(sorted({int(g) for g in generators}))
    if not gens:
        raise ValueError("at least one generator required")
    if gens[0] < 1:
        raise ValueError("generators must be positive")
    g = 0
    for v in gens:
        g = gcd(g, v)
    if g != 1:
        raise ValueError(f"generators must have gcd 1, got gcd {g}")
    floor = gens[0] * gens[-1]
    if bound is None:
        bound = floor
    elif bound < floor:
        raise ValueError(f"bound {bound} below required minimum {floor}")
    ceiling = _max_bits(max_bits)
    if bound + 1 > ceiling:
        raise OracleInfeasibleError(
            f"membership table needs {bound + 1} bits, ceiling is {ceiling} "
            f"(raise {MAX_BITS_ENV} to override)"
        )
    return MembershipTable(gens, bound, kernel.membership_bits(gens, bound))


def _as_table(generators, **kwargs) -> MembershipTable:
    if isinstance(generators, MembershipTable):
        return generators
    return build_membership(generators, **kwargs)


def oracle_frobenius(generators) -> int:
    """Largest non-representable integer, -1 if everything is representable."""
    table = _as_table(generators)
    return table._gaps_int.bit_length() - 1


def oracle_genus(generators) -> int:
    """Number of non-representable positive integers."""
    table = _as_table(generators)
    return table._gaps_int.bit_count()


def oracle_apery(generators, a: int) -> dict[int, int]:
    """Minimal representable value in each residue class mod a.

    `a` must itself be representable; the result maps residue r to the
    least member congruent to r, with entry 0 -> 0.
    """
    table = _as_table(generators)
    if a < 1:
        raise ValueError(f"modulus must be >= 1, got {a}")
    if not table.is_member(a):
        raise ValueError(f"{a} is not in the semigroup")
    try:
        minima = kernel.apery_minima(table.bits, table.bound, a)
    except ValueError as exc:
        raise OracleInfeasibleError(
            f"table bound {table.bound} too small for Apery scan mod {a}: {exc}"
        ) from None
    return {x % a: x for x in minima}


def oracle_minimal_generators(generators) -> list[int]:
    """Reduce a generating set to the unique minimal one.

    A member m is a minimal generator exactly when it is not a sum of
    two nonzero members; every minimal generator already occurs in any
    generating set, so only the given elements need checking.  Uses a
    table only up to the largest given generator.
    """
    if isinstance(generators, MembershipTable):
        table = generators
        gens = table.generators
    else:
        gens = tuple(sorted({int(g) for g in generators}))
        table = None
    if not gens:
        raise ValueError("at least one generator required")
    if gens[0] < 1:
        raise ValueError("generators must be positive")
    g = 0
    for v in gens:
        g = gcd(g, v)
    if g != 1:
        raise ValueError(f"generators must have gcd 1, got gcd {g}")
    if 1 in gens:
        return [1]
    top = gens[-1]
    if table is not None and table.bound >= top:
        bits = table.bits
    else:
        bits = kernel.membership_bits(gens, top)
    members = int.from_bytes(bits, "little")
    nonzero = members & ~1
    mask = (1 << (top + 1)) - 1
    sums = 0
    for g in gens:
        sums |= (nonzero << g) & mask
    return [g for g in gens if not sums >> g & 1]
