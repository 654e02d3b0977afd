"""Numerical semigroups generated by stepped generalized Fibonacci terms.

For a seed pair (V_1, V_2), a start index n and a step d, the object of
study is S = <V_n, V_{n+d}, V_{n+2d}, ...>.  S is a numerical semigroup
exactly when gcd(V_1, V_2) = 1 and gcd(V_n, F_d) = 1.  For even d the
Apery set of S with respect to V_n comes from the greedy machinery in
`greedy`, and the Frobenius number and genus follow from it.  For odd d
the semigroup collapses to <V_n, V_{n+d}> and the classical
two-generator formulas apply.

V_n = 1 means S is all of the nonnegative integers: Frobenius number
-1, genus 0, single minimal generator 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .greedy import (
    _check_step,
    _fib_special_ok,
    _lucas_special_ok,
    apery_value,
    base_rank,
    base_sequence,
    greedy_repr,
)
from .sequences import FIBONACCI, LUCAS, SequenceSpec, fib, fib_ratio, genfib, lucas


class NotCoprimeSeedError(ValueError):
    """The seeds share a factor, so no term is coprime to any other."""


class NotNumericalSemigroupError(ValueError):
    """gcd(V_n, F_d) > 1: the generated monoid has infinite complement."""


@dataclass(frozen=True)
class SemigroupParams:
    spec: SequenceSpec
    n: int
    d: int
    vn: int
    vnd: int


@dataclass(frozen=True)
class SemigroupSummary:
    embedding_dim: int
    min_generators: tuple[int, ...]
    frobenius: int
    genus: int


def validate(spec: SequenceSpec, n: int, d: int) -> SemigroupParams:
    """Check the semigroup conditions and cache V_n, V_{n+d}."""
    if n < 1:
        raise ValueError(f"start index n must be >= 1, got {n}")
    if d < 1:
        raise ValueError(f"step d must be >= 1, got {d}")
    g = gcd(spec.v1, spec.v2)
    if g != 1:
        raise NotCoprimeSeedError(f"gcd(V_1, V_2) = {g}")
    vn = genfib(spec, n)
    g = gcd(vn, fib(d))
    if g != 1:
        raise NotNumericalSemigroupError(f"gcd(V_n, F_d) = {g}")
    return SemigroupParams(spec=spec, n=n, d=d, vn=vn, vnd=genfib(spec, n + d))


def _spec_for(kind: str) -> SequenceSpec:
    if kind == "fib":
        return FIBONACCI
    if kind == "lucas":
        return LUCAS
    raise ValueError(f"kind must be 'fib' or 'lucas', got {kind!r}")


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def embedding_dimension(params: SemigroupParams) -> int:
    """Size of the minimal generating set.

    For even d this is the least k with F_{kd}/F_d >= V_n; for odd d
    the semigroup is <V_n, V_{n+d}> and the answer is 2 (1 if V_n = 1).
    """
    if params.vn == 1:
        return 1
    if params.d % 2:
        return 2
    k = 1
    while fib_ratio(k * params.d, params.d) < params.vn:
        k += 1
    return k


def embedding_dimension_closed_form(kind: str, n: int, d: int) -> int:
    """Ceiling formula for the embedding dimension, Fibonacci/Lucas only."""
    spec = _spec_for(kind)
    _check_step(d)
    params = validate(spec, n, d)
    if kind == "fib":
        if d == 2 or n <= 2:
            return 1 + _ceil_div(n - 2, d)
        return 1 + _ceil_div(n - 1, d)
    if n == 1:
        return 1
    return 1 + _ceil_div(n, d)


def minimal_generators(params: SemigroupParams) -> list[int]:
    """The unique minimal generating set, ascending."""
    if params.vn == 1:
        return [1]
    spec, n, d = params.spec, params.n, params.d
    if d % 2:
        return [params.vn, params.vnd]
    kappa = embedding_dimension(params)
    return [genfib(spec, n + i * d) for i in range(kappa)]


def apery_set(params: SemigroupParams) -> dict[int, int]:
    """Minimal element of S per residue class mod V_n, as residue -> element.

    Even d uses the greedy values; odd d reduces to two generators,
    where the class of V_{n+d} * x is realized by V_{n+d} * x itself.
    """
    vn, vnd = params.vn, params.vnd
    if params.d % 2:
        entries = {vnd * x % vn: vnd * x for x in range(vn)}
    else:
        entries = {0: 0}
        for x in range(1, vn):
            entries[vnd * x % vn] = apery_value(params, x)
    if len(entries) != vn:
        raise AssertionError("Apery classes collide; V_{n+d} not invertible mod V_n")
    return entries


def frobenius(params: SemigroupParams) -> int:
    """Largest integer not in S (-1 when S is everything)."""
    if params.vn == 1:
        return -1
    if params.d % 2:
        a, b = params.vn, params.vnd
        return a * b - a - b
    return apery_value(params, params.vn - 1) - params.vn


def frobenius_special(kind: str, n: int, d: int) -> int:
    """Direct Frobenius formula at Fibonacci/Lucas parameters, even d.

    fib:   F_d * F_2n - F_{n+d}            (n >= 3)
    lucas: F_d * (L_{2n+1} + L_{2n-1}) - L_{n+d}   (n >= 4)

    Only index ranges where the underlying greedy target value takes
    its closed form are accepted; outside them the formula is off by a
    multiple of V_n and the general `frobenius` must be used.
    """
    spec = _spec_for(kind)
    _check_step(d)
    validate(spec, n, d)
    if kind == "fib":
        if n < 3:
            raise ValueError(f"need n >= 3 for the Fibonacci formula, got {n}")
        if not _fib_special_ok(d, n):
            raise ValueError(f"Fibonacci formula does not hold at n={n}, d={d}")
        return fib(d) * fib(2 * n) - fib(n + d)
    if n < 4:
        raise ValueError(f"need n >= 4 for the Lucas formula, got {n}")
    if not _lucas_special_ok(d, n):
        raise ValueError(f"Lucas formula does not hold at n={n}, d={d}")
    return fib(d) * (lucas(2 * n + 1) + lucas(2 * n - 1)) - lucas(n + d)


def genus(params: SemigroupParams) -> int:
    """Number of gaps of S, computed with exact integer arithmetic."""
    vn = params.vn
    if vn == 1:
        return 0
    if params.d % 2:
        return (vn - 1) * (params.vnd - 1) // 2
    total = apery_prefix_sum(params, vn - 1)
    q, r = divmod(2 * total - vn * (vn - 1), 2 * vn)
    if r:
        raise AssertionError("genus expression is not an integer")
    return q


class BlockSums(NamedTuple):
    """Prefix sums of the greedy values at the two block landmarks of rank k.

    full_sum    = sum of values for x in [1, F_{(k+1)d}/F_d - 1]
    reduced_sum = sum of values for x in [1, (F_{(k+1)d} - F_{kd})/F_d - 1]
    """

    k: int
    full_sum: int
    reduced_sum: int


def genus_recurrence(params: SemigroupParams, k_max: int) -> list[BlockSums]:
    """Blockwise prefix sums via the linear recurrence, for k = 1..k_max."""
    _check_step(params.d)
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    spec, n, d = params.spec, params.n, params.d
    ld, fd = lucas(d), fib(d)
    a = ld * (ld - 1) // 2 * genfib(spec, n + d)
    b = (ld - 1) * (ld - 2) // 2 * genfib(spec, n + d)
    out = [BlockSums(1, a, b)]
    for k in range(1, k_max):
        v = genfib(spec, n + (k + 1) * d)
        qa, ra = divmod((ld - 1) * v * (fib((k + 2) * d) - fib(k * d)), 2 * fd)
        qb, rb = divmod(
            (ld - 2) * v * (fib((k + 2) * d) - fib((k + 1) * d) - fib(k * d)), 2 * fd
        )
        if ra or rb:
            raise AssertionError("block sum increments are not integers")
        a, b = (ld - 1) * a + b + qa, (ld - 2) * a + b + qb
        out.append(BlockSums(k + 1, a, b))
    return out


def apery_prefix_sum(params: SemigroupParams, x_max: int) -> int:
    """Sum of apery_value(params, x) for x = 1..x_max.

    Uses the single closed form when the greedy coefficients of x_max
    match the near-uniform shape (all leading coefficients L_d - 2),
    otherwise peels greedy blocks with the rank-level sum identity;
    the base case k = 1 is summed directly.
    """
    _check_step(params.d)
    if not 1 <= x_max <= params.vn - 1:
        raise ValueError(f"x_max must be in [1, {params.vn - 1}], got {x_max}")
    spec, n, d = params.spec, params.n, params.d
    vnd = params.vnd
    k = base_rank(d, x_max)
    if k == 1:
        return x_max * (x_max + 1) // 2 * vnd
    states = genus_recurrence(params, k - 1)
    full = [0] + [s.full_sum for s in states]
    reduced = [0] + [s.reduced_sum for s in states]
    ld = lucas(d)
    coeffs = greedy_repr(base_sequence(d, k), x_max)
    a, b = coeffs[-1], coeffs[-2]
    if all(c == ld - 2 for c in coeffs[: k - 2]) and (a, b) != (ld - 1, ld - 1):
        t = base_sequence(d, k)
        tk, tk1 = t[k - 1], t[k - 2]
        tk2 = t[k - 3] if k >= 3 else 0
        vk = genfib(spec, n + k * d)
        vk1 = genfib(spec, n + (k - 1) * d)
        return (
            a * full[k - 1]
            + reduced[k - 2]
            + b * full[k - 2]
            + (a * (a - 1) // 2 * tk + a * ((b + 1) * tk1 - tk2)) * vk
            + (b * (b + 1) // 2 * tk1 - b * tk2) * vk1
        )
    total = 0
    rem = x_max
    while rem:
        kk = base_rank(d, rem)
        if kk == 1:
            total += rem * (rem + 1) // 2 * vnd
            break
        tk = fib_ratio(kk * d, d)
        i, rem = divmod(rem, tk)
        v = genfib(spec, n + kk * d)
        total += i * full[kk - 1] + i * (i - 1) // 2 * tk * v + (rem + 1) * i * v
    return total


def two_generator_invariants(a: int, b: int) -> tuple[int, int]:
    """(Frobenius number, genus) of <a, b> for coprime a, b."""
    if a < 1 or b < 1:
        raise ValueError(f"generators must be positive, got ({a}, {b})")
    g = gcd(a, b)
    if g != 1:
        raise ValueError(f"gcd({a}, {b}) = {g}, need coprime generators")
    if a == 1 or b == 1:
        return -1, 0
    return a * b - a - b, (a - 1) * (b - 1) // 2


def summary(params: SemigroupParams) -> SemigroupSummary:
    """Embedding dimension, minimal generators, Frobenius number, genus."""
    return SemigroupSummary(
        embedding_dim=embedding_dimension(params),
        min_generators=tuple(minimal_generators(params)),
        frobenius=frobenius(params),
        genus=genus(params),
    )
