# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled membership kernel: coin-style DP over a byte-per-value table."""

from libc.stdlib cimport calloc, malloc, free

IMPLEMENTATION = "compiled"


def membership_bits(generators, long long bound):
    """Packed bitmap (LSB-first per byte) of <generators> over [0, bound]."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    cdef long long n = bound + 1
    cdef Py_ssize_t nbytes = <Py_ssize_t> (bound // 8 + 1)
    cdef unsigned char *tab = <unsigned char *> calloc(<size_t> n, 1)
    if tab == NULL:
        raise MemoryError()
    cdef long long g, x
    cdef unsigned char[::1] packed
    gens = sorted({int(v) for v in generators})
    try:
        if any(v <= 0 for v in gens):
            raise ValueError("generators must be positive")
        tab[0] = 1
        for v in gens:
            if v > bound:
                continue
            g = v
            for x in range(g, n):
                tab[x] |= tab[x - g]
        out = bytearray(nbytes)
        packed = out
        for x in range(n):
            if tab[x]:
                packed[x >> 3] |= <unsigned char> (1 << (x & 7))
        return bytes(out)
    finally:
        free(tab)


def apery_minima(const unsigned char[:] bits, long long bound, long long modulus):
    """Minimal set-bit position in each residue class mod `modulus`."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    cdef long long *minima = <long long *> malloc(<size_t> modulus * sizeof(long long))
    if minima == NULL:
        raise MemoryError()
    cdef long long remaining = modulus
    cdef long long x, r, i
    cdef Py_ssize_t pos, nbytes = bits.shape[0]
    cdef int off
    cdef unsigned char b
    try:
        for i in range(modulus):
            minima[i] = -1
        for pos in range(nbytes):
            b = bits[pos]
            if b == 0:
                continue
            for off in range(8):
                if b & (1 << off):
                    x = (<long long> pos << 3) + off
                    if x > bound:
                        break
                    r = x % modulus
                    if minima[r] < 0:
                        minima[r] = x
                        remaining -= 1
                        if remaining == 0:
                            return [minima[i] for i in range(modulus)]
        raise ValueError(
            f"{remaining} residue classes mod {modulus} have no member <= {bound}"
        )
    finally:
        free(minima)
