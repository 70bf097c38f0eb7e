import random

import pytest
from hypothesis import given, strategies as st

from duadic.cosets import (DefiningSet, all_cosets, base2_weight, cyclotomic_coset, duadic_scan,
                           is_splitting, parse_subset, scale_set, units, weight_defining_set)


def naive_coset(s, n):
    out, x = [], s % n
    while x not in out:
        out.append(x)
        x = 2 * x % n
    return sorted(out)


def test_base2_weight():
    assert base2_weight(0) == 0
    assert base2_weight(5) == 2
    assert base2_weight(126) == 6 == 7 - base2_weight(127 - 126)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_weight_complement_identity(m):
    n = (1 << m) - 1
    assert all(base2_weight(i) == m - base2_weight(n - i) for i in range(n + 1))


def test_cosets_small():
    assert cyclotomic_coset(0, 7).members == (0,)
    assert cyclotomic_coset(1, 7).members == (1, 2, 4)
    assert cyclotomic_coset(3, 7).members == (3, 5, 6)
    assert [c.members for c in all_cosets(7)] == [(0,), (1, 2, 4), (3, 5, 6)]
    assert [c.members for c in all_cosets(3)] == [(0,), (1, 2)]
    with pytest.raises(ValueError):
        cyclotomic_coset(1, 8)


@pytest.mark.parametrize("n", [15, 31, 63, 127, 21, 45])
def test_cosets_partition(n):
    cs = all_cosets(n)
    seen = sorted(x for c in cs for x in c.members)
    assert seen == list(range(n))
    m = 1
    while pow(2, m, n) != 1:
        m += 1
    for c in cs:
        assert list(c.members) == naive_coset(c.representative, n)
        assert c.representative == min(c.members)
        assert m % len(c) == 0


def test_weight_defining_set_examples():
    T = weight_defining_set(6, 7, {0, 4, 5})
    assert len(T) == 63 and 15 in T and 1 not in T
    T2 = weight_defining_set(2, 7, {0})
    assert T2.tolist() == [i for i in range(1, 127) if bin(i).count("1") % 2 == 0]
    assert len(T2) == 63
    assert T.is_conjugate_closed()
    for bad in ((), (0, 1, 2, 3, 4, 5)):
        with pytest.raises(ValueError):
            weight_defining_set(6, 7, bad)


def test_scale_set():
    T = weight_defining_set(6, 7, {0, 4, 5})
    assert scale_set(T, 1) == T
    assert scale_set(T, 126) == weight_defining_set(6, 7, {1, 2, 3})
    u = 5
    assert scale_set(scale_set(T, u), pow(u, -1, 127)) == T
    with pytest.raises(ValueError):
        scale_set(DefiningSet(63, [1, 2, 4]), 3)


@pytest.mark.parametrize("m", [7, 13])
def test_minus_identity_case1(m):
    for S, Sb in (((0, 4, 5), (1, 2, 3)), ((0, 2, 3), (1, 4, 5))):
        T = weight_defining_set(6, m, S)
        assert scale_set(T, (1 << m) - 2) == weight_defining_set(6, m, Sb)


def test_is_splitting_examples():
    a, b = weight_defining_set(6, 7, {0, 2, 3}), weight_defining_set(6, 7, {1, 4, 5})
    assert is_splitting(a, b, -1)
    c, d = weight_defining_set(6, 7, {0, 1, 2}), weight_defining_set(6, 7, {3, 4, 5})
    assert not is_splitting(c, d, -1)
    assert not is_splitting(a, a, -1)


@pytest.mark.parametrize("m,listed", [
    (7, {(0, 2, 3), (0, 2, 4), (0, 4, 5), (0, 3, 5)}),
    (9, {(0, 1, 4), (0, 1, 5), (0, 2, 4), (0, 2, 5)}),
    (11, {(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4)}),
    (5, {(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4)}),
])
def test_scan_matches_lists(m, listed):
    res = duadic_scan(6, m)
    assert {r.S for r in res} == listed
    for r in res:
        assert r.mu == (1 << m) - 2
        assert set(r.S) | set(r.S_bar) == set(range(6))


def test_scan_arguments():
    with pytest.raises(ValueError):
        duadic_scan(5, 7)
    with pytest.raises(ValueError):
        duadic_scan(6, 8)


def test_scan_any_unit_superset():
    plain = {r.S for r in duadic_scan(6, 7)}
    anyu = {r.S for r in duadic_scan(6, 7, any_unit=True)}
    assert plain <= anyu


def test_defining_set_ops():
    T = DefiningSet(7, [4, 1, 2, 1])
    assert T.tolist() == [1, 2, 4] and len(T) == 3
    assert T.complement().tolist() == [0, 3, 5, 6]
    assert (T | [0]).tolist() == [0, 1, 2, 4]
    assert (T & DefiningSet(7, [2, 3])).tolist() == [2]
    assert DefiningSet.from_mask(T.mask) == T
    assert not DefiningSet(7, [1]).is_conjugate_closed()
    with pytest.raises(ValueError):
        DefiningSet(7, [1]).cosets()
    assert DefiningSet(7, [9, -1]).tolist() == [2, 6]
    assert [c.members for c in T.cosets()] == [(1, 2, 4)]


@given(st.integers(1, 200))
def test_units(n):
    from math import gcd
    n = 2 * n + 1
    assert units(n).tolist() == [u for u in range(1, n) if gcd(u, n) == 1]


def test_parse_subset():
    assert parse_subset("0,4,5") == (0, 4, 5)
    assert parse_subset(" 5, 0 ,4") == (0, 4, 5)
    assert parse_subset([3, 1]) == (1, 3)
    with pytest.raises(ValueError):
        parse_subset("a,b")


def test_random_unions_closed():
    rng = random.Random(1)
    cs = all_cosets(63)
    for _ in range(20):
        pick = [c for c in cs if rng.random() < 0.5]
        T = DefiningSet(63, [x for c in pick for x in c.members])
        assert T.is_conjugate_closed()
