"""Greedy representations over Fibonacci-quotient bases.

For an even step d the base sequence is 1, F_{2d}/F_d, F_{3d}/F_d, ...
(all exact integers).  Representing x greedily over that base and
applying the resulting coefficients to the shifted generators
V_{n+d}, V_{n+2d}, ... yields the minimal element of the semigroup
S = <V_n, V_{n+d}, V_{n+2d}, ...> in the residue class of V_{n+d} * x
mod V_n.  These values are exactly the nonzero Apery set entries of S
with respect to V_n, which is what makes the Frobenius number and
genus computable in closed form.

Coefficient conventions: a representation over a base of length k is a
tuple (c_1, ..., c_k) with c_i multiplying base term i; index i of the
tuple is the coefficient of base[i].
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from .sequences import fib, fib_ratio, genfib, lucas

if TYPE_CHECKING:  # pragma: no cover
    from .semigroup import SemigroupParams


def greedy_repr(base: Sequence[int], target: int) -> tuple[int, ...]:
    """Largest-term-first floor coefficients of `target` over `base`.

    The coefficients reconstruct the target exactly whenever base[0]
    is 1 (true for every base used here).
    """
    if not base:
        raise ValueError("base must be nonempty")
    terms = list(base)
    if terms[0] < 1 or any(lo >= hi for lo, hi in zip(terms, terms[1:])):
        raise ValueError(f"base must be strictly increasing and positive: {terms}")
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    coeffs = [0] * len(terms)
    rem = target
    for i in reversed(range(len(terms))):
        coeffs[i], rem = divmod(rem, terms[i])
    return tuple(coeffs)


def _check_step(d: int):
    if d < 2 or d % 2:
        raise ValueError(f"step d must be even and >= 2, got {d}")


def base_sequence(d: int, k: int) -> list[int]:
    """[F_d/F_d, F_{2d}/F_d, ..., F_{kd}/F_d] for even d."""
    _check_step(d)
    if k < 1:
        raise ValueError(f"length k must be >= 1, got {k}")
    return [fib_ratio(i * d, d) for i in range(1, k + 1)]


def base_rank(d: int, x: int) -> int:
    """The k with F_{kd}/F_d <= x < F_{(k+1)d}/F_d."""
    _check_step(d)
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    k = 1
    while fib_ratio((k + 1) * d, d) <= x:
        k += 1
    return k


def _value_raw(spec, n: int, d: int, x: int) -> int:
    # greedy evaluation without the Apery range check; any x >= 1
    k = base_rank(d, x)
    coeffs = greedy_repr(base_sequence(d, k), x)
    return sum(c * genfib(spec, n + (i + 1) * d) for i, c in enumerate(coeffs))


def _value_closed_raw(spec, n: int, d: int, x: int) -> int:
    k = base_rank(d, x)
    return genfib(spec, n + d) * x - fib((k - 1) * d) * x // fib(k * d) * genfib(
        spec, n
    )


def _check_apery_arg(params: "SemigroupParams", x: int):
    _check_step(params.d)
    if not 1 <= x <= params.vn - 1:
        raise ValueError(f"x must be in [1, {params.vn - 1}], got {x}")


def apery_value(params: "SemigroupParams", x: int) -> int:
    """Greedy-built minimal semigroup element congruent to V_{n+d} * x mod V_n."""
    _check_apery_arg(params, x)
    return _value_raw(params.spec, params.n, params.d, x)


def apery_value_closed_form(params: "SemigroupParams", x: int) -> int:
    """Same value as `apery_value` via V_{n+d}x - floor(F_{(k-1)d}x/F_{kd})V_n."""
    _check_apery_arg(params, x)
    return _value_closed_raw(params.spec, params.n, params.d, x)


def fib_target_pattern(d: int, m: int) -> tuple[int, ...]:
    """Predicted greedy coefficients of the target F_m - 1 (m > 2, even d).

    The shape depends on the parity of m and on r = m mod d.
    """
    _check_step(d)
    if m <= 2:
        raise ValueError(f"m must be > 2, got {m}")
    r = m % d
    q = (m - r) // d
    ld = lucas(d)
    if m % 2:
        if r == 1:
            coeffs = [ld - 2] * (q - 1) + [ld - fib(d - 1) - 1]
        elif q >= 1:
            coeffs = [ld - 2] * (q - 1) + [ld - fib(d - r) - 1, fib(r) - 1]
        else:
            coeffs = [fib(r) - 1]
    elif m <= d:
        coeffs = [fib(m) - 1]
    elif r == 0:
        coeffs = [ld - 2] * (q - 2) + [ld - 1]
        if d > 2:
            coeffs.append(fib(d) - 1)
    elif q >= 2:
        coeffs = [ld - 2] * (q - 2) + [ld - 1, fib(d - r) - 1, fib(r)]
    else:
        coeffs = [fib(d - r) - 1, fib(r)]
    return tuple(coeffs)


def lucas_target_pattern(d: int, m: int) -> tuple[int, ...]:
    """Predicted greedy coefficients of the target L_m - 1 (m > 1, even d).

    Odd m below the step is rejected: there the greedy coefficient is
    L_m - 1, not the L_r the general shape would predict.
    """
    _check_step(d)
    if m <= 1:
        raise ValueError(f"m must be > 1, got {m}")
    r = m % d
    q = (m - r) // d
    ld = lucas(d)
    if r == 0:
        if q >= 2:
            coeffs = [ld - 2] * (q - 2) + [ld - 3, ld - 1]
        else:
            coeffs = [ld - 1]
    elif m % 2:
        if q == 0:
            raise ValueError(f"no predicted shape for odd m={m} below step {d}")
        if q >= 2:
            coeffs = [ld - 2] * (q - 2) + [ld - 1, lucas(d - r) - 1, lucas(r)]
        else:
            coeffs = [lucas(d - r) - 1, lucas(r)]
    elif q >= 1:
        coeffs = [ld - 2] * (q - 1) + [ld - lucas(d - r) - 1, lucas(r) - 1]
    else:
        coeffs = [lucas(r) - 1]
    return tuple(coeffs)


def _fib_special_ok(d: int, m: int) -> bool:
    # domain where F_d V_{n+m} - V_{n+d} + V_n really is the greedy value
    if m <= 2:
        return False
    r = m % d
    q = (m - r) // d
    if m % 2:
        return m > d or m == d - 1
    return q >= 2


def _lucas_special_ok(d: int, m: int) -> bool:
    if m <= 1:
        return False
    r = m % d
    q = (m - r) // d
    if r == 0:
        return q >= 2
    if m % 2:
        return q >= 2
    return q >= 1


def special_apery_value(params: "SemigroupParams", kind: str, m: int) -> int:
    """Closed-form apery_value at structured targets.

    kind "fib_boundary": target F_{(m+1)d}/F_d - 1 (m is the base rank);
    kind "fib": target F_m - 1; kind "lucas": target L_m - 1.  The two
    number-targeted kinds are restricted to the index ranges where the
    closed forms hold; outside them the greedy value genuinely differs.
    """
    spec, n, d = params.spec, params.n, params.d
    _check_step(d)
    if kind == "fib_boundary":
        if m < 1:
            raise ValueError(f"rank must be >= 1, got {m}")
        target = fib_ratio((m + 1) * d, d) - 1
        value = genfib(spec, n + (m + 1) * d) - genfib(spec, n + d) + genfib(spec, n)
    elif kind == "fib":
        if not _fib_special_ok(d, m):
            raise ValueError(f"no closed form for target F_{m} - 1 with step {d}")
        target = fib(m) - 1
        value = fib(d) * genfib(spec, n + m) - genfib(spec, n + d) + genfib(spec, n)
    elif kind == "lucas":
        if not _lucas_special_ok(d, m):
            raise ValueError(f"no closed form for target L_{m} - 1 with step {d}")
        target = lucas(m) - 1
        value = (
            fib(d) * (genfib(spec, n + m + 1) + genfib(spec, n + m - 1))
            - genfib(spec, n + d)
            + genfib(spec, n)
        )
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if not 1 <= target <= params.vn - 1:
        raise ValueError(
            f"target {target} for kind {kind!r} outside [1, {params.vn - 1}]"
        )
    return value
