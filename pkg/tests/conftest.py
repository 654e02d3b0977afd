"""Shared parameter grid and a session-wide oracle table cache.

The grid covers five seed pairs, start indices n up to 12 (10 for the
Lucas seeds, whose terms grow faster), and both even and odd steps.
Parameter combinations where gcd(V_n, F_d) > 1 do not give numerical
semigroups and are filtered out.
"""

import pytest

from fibsemi import (
    NotCoprimeSeedError,
    NotNumericalSemigroupError,
    SequenceSpec,
    build_membership,
    minimal_generators,
    validate,
)

SEEDS = [(1, 1), (1, 3), (2, 5), (1, 4), (3, 4)]
EVEN_STEPS = (2, 4, 6)
ODD_STEPS = (1, 3, 5)


def n_range(seed):
    return range(4, 11) if seed == (1, 3) else range(3, 13)


def grid_params(steps=EVEN_STEPS):
    out = []
    for seed in SEEDS:
        spec = SequenceSpec(*seed)
        for n in n_range(seed):
            for d in steps:
                try:
                    out.append(validate(spec, n, d))
                except (NotCoprimeSeedError, NotNumericalSemigroupError):
                    continue
    return out


def param_id(p):
    return f"{p.spec.v1},{p.spec.v2}-n{p.n}-d{p.d}"


@pytest.fixture(scope="session")
def table_cache():
    """Membership tables keyed by generator tuple, built once per session."""
    cache = {}

    def get(params):
        gens = tuple(minimal_generators(params))
        if gens not in cache:
            cache[gens] = build_membership(list(gens))
        return cache[gens]

    return get
