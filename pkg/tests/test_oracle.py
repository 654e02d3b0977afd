"""Brute-force oracle behavior: membership tables, invariants, reduction."""

import pytest

from fibsemi import (
    MembershipTable,
    OracleInfeasibleError,
    build_membership,
    oracle_apery,
    oracle_frobenius,
    oracle_genus,
    oracle_minimal_generators,
)
from fibsemi.oracle import DEFAULT_MAX_BITS, MAX_BITS_ENV


def test_table_members_and_gaps():
    t = build_membership([3, 8])
    assert t.is_member(0)
    assert t.is_member(11)
    assert not t.is_member(13)
    assert set(t.gaps()) == {1, 2, 4, 5, 7, 10, 13}


def test_is_member_range_checked():
    t = build_membership([3, 8])
    with pytest.raises(ValueError):
        t.is_member(-1)
    with pytest.raises(ValueError):
        t.is_member(t.bound + 1)


def test_frobenius_and_genus():
    t = build_membership([3, 8])
    assert oracle_frobenius(t) == 13
    assert oracle_genus(t) == 7


def test_sylvester_sweep():
    # two coprime generators: F = ab - a - b, g = (a-1)(b-1)/2
    for a in range(2, 12):
        for b in range(a + 1, 16):
            import math

            if math.gcd(a, b) != 1:
                continue
            t = build_membership([a, b])
            assert oracle_frobenius(t) == a * b - a - b
            assert oracle_genus(t) == (a - 1) * (b - 1) // 2


def test_accepts_generator_list_or_table():
    t = build_membership([5, 13, 34])
    assert oracle_frobenius([5, 13, 34]) == oracle_frobenius(t) == 42
    assert oracle_genus([5, 13, 34]) == 22


def test_full_semigroup_has_no_gaps():
    t = build_membership([1])
    assert oracle_frobenius(t) == -1
    assert oracle_genus(t) == 0
    assert t.gaps() == []


def test_apery_against_table():
    t = build_membership([5, 13, 34])
    ap = oracle_apery(t, 5)
    assert ap == {0: 0, 1: 26, 2: 47, 3: 13, 4: 34}
    # every entry is a member whose predecessor in its class is not
    for r, x in ap.items():
        assert x % 5 == r
        assert t.is_member(x)
        assert x < 5 or not t.is_member(x - 5)


def test_apery_needs_member_modulus():
    t = build_membership([5, 13])
    with pytest.raises(ValueError):
        oracle_apery(t, 4)


def test_gcd_must_be_one():
    with pytest.raises(ValueError):
        build_membership([4, 6])
    with pytest.raises(ValueError):
        oracle_minimal_generators([10, 15])


def test_generators_must_be_positive():
    with pytest.raises(ValueError):
        build_membership([])
    with pytest.raises(ValueError):
        build_membership([0, 3])


def test_custom_bound_respected():
    t = build_membership([3, 8], bound=100)
    assert t.bound == 100
    with pytest.raises(ValueError):
        build_membership([3, 8], bound=10)  # below the safe default


def test_infeasible_raises():
    with pytest.raises(OracleInfeasibleError):
        build_membership([99991, 99989], max_bits=1 << 20)


def test_env_ceiling(monkeypatch):
    monkeypatch.setenv(MAX_BITS_ENV, str(1 << 12))
    with pytest.raises(OracleInfeasibleError):
        build_membership([97, 89])
    monkeypatch.setenv(MAX_BITS_ENV, str(1 << 16))
    t = build_membership([97, 89])
    assert oracle_frobenius(t) == 97 * 89 - 97 - 89


def test_default_ceiling_is_sane():
    assert DEFAULT_MAX_BITS == 1 << 28


def test_minimal_generator_reduction():
    assert oracle_minimal_generators([5, 13, 34, 89]) == [5, 13, 34]
    assert oracle_minimal_generators([7, 18, 47, 123]) == [7, 18, 47]
    assert oracle_minimal_generators([3, 8, 21]) == [3, 8]
    assert oracle_minimal_generators([1, 5]) == [1]
    assert oracle_minimal_generators([6, 10, 15]) == [6, 10, 15]


def test_reduction_order_and_duplicates():
    assert oracle_minimal_generators([34, 5, 13, 5]) == [5, 13, 34]


def test_table_is_frozen():
    t = build_membership([3, 8])
    assert isinstance(t, MembershipTable)
    with pytest.raises(Exception):
        t.bound = 5
