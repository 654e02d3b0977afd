"""Pure-Python membership kernel.

Represents the set of representable values as one big integer, bit x
standing for value x.  Closure under a generator g is done with
doubling shifts (union with the set translated by g, 2g, 4g, ...),
which keeps the Python-level loop count logarithmic in the bound.
"""

from __future__ import annotations

IMPLEMENTATION = "pure"

_BITS_OF_BYTE = tuple(
    tuple(b for b in range(8) if v >> b & 1) for v in range(256)
)


def membership_bits(generators, bound: int) -> bytes:
    """Packed bitmap (LSB-first per byte) of <generators> over [0, bound]."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    mask = (1 << (bound + 1)) - 1
    acc = 1  # value 0 is always representable
    for g in sorted({int(g) for g in generators}):
        if g <= 0:
            raise ValueError("generators must be positive")
        shift = g
        while shift <= bound:
            acc |= (acc << shift) & mask
            shift <<= 1
    return acc.to_bytes(bound // 8 + 1, "little")


def apery_minima(bits: bytes, bound: int, modulus: int) -> list[int]:
    """Minimal set-bit position in each residue class mod `modulus`.

    Walks the bitmap byte by byte and stops as soon as every class has
    been seen.  Raises if some class has no set bit within the bound.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    minima = [-1] * modulus
    remaining = modulus
    for pos, byte in enumerate(bits):
        if not byte:
            continue
        base = pos << 3
        for off in _BITS_OF_BYTE[byte]:
            x = base + off
            if x > bound:
                break
            r = x % modulus
            if minima[r] < 0:
                minima[r] = x
                remaining -= 1
                if not remaining:
                    return minima
    raise ValueError(
        f"{remaining} residue classes mod {modulus} have no member <= {bound}"
    )
