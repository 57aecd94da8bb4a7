import pytest

from conjclass import catalog, suites, wreath as W
from conjclass.errors import OracleCapError
from conjclass.exactmath import divisors, euler_phi

import oracles

# frozen from oracles.wreath_class_count_direct
DIRECT = {
    ("S3", "C2"): 9,
    ("C2", "C2"): 5,
    ("C3", "C2"): 9,
    ("C2", "S3"): 10,
}


def test_examples():
    assert W.k_wreath_cyclic(3, 2) == 9
    assert W.k_wreath_cyclic(2, 2) == 5
    assert W.k_wreath_generic(3, catalog.symmetric(2)) == 9
    assert W.k_wreath(W.WreathDescriptor(15, 1)) == 15


def test_direct_oracle_small_cases():
    S3, C2, C3 = catalog.symmetric(3), catalog.cyclic(2), catalog.cyclic(3)
    base = {"S3": S3, "C2": C2, "C3": C3}
    top = {"C2": C2, "S3": catalog.symmetric(3)}
    for (a, p), expected in DIRECT.items():
        A, P = base[a], top[p]
        got = oracles.wreath_class_count_direct(A.elements, P.elements, oracles.perm_compose)
        assert got == expected == W.k_wreath_generic(A.k(), P)


def test_generic_matches_tuple_group_oracle():
    for A, P in suites.wreath_oracle_pairs():
        if A.order ** P.degree * P.order > 20000:
            continue
        assert W.k_wreath_generic(A.k(), P) == W.tuple_group(A, P).k(), (A, P)


def test_c5_wr_s4():
    G = W.tuple_group(catalog.cyclic(5), catalog.symmetric(4), cap=20000)
    assert G.order == 15000
    assert G.k() == 190 == W.k_wreath_generic(5, catalog.symmetric(4))


def test_cyclic_fast_path_matches_generic():
    for r in range(1, 11):
        for k in range(1, 8):
            assert W.k_wreath_cyclic(k, r) == W.k_wreath_generic(k, catalog.cyclic(r))


def test_cyclic_formula_by_hand():
    for r in range(1, 30):
        for k in (2, 5, 15):
            s = sum(euler_phi(m) * W.necklaces(r // m, k) for m in divisors(r))
            assert W.k_wreath_cyclic(k, r) == s


def test_necklaces():
    assert [W.necklaces(n, 2) for n in range(1, 8)] == [2, 3, 4, 6, 8, 14, 20]


def test_regular_estimate():
    for P in suites.regular_tops(12):
        for k in range(1, 8):
            assert W.check_regular_estimate(k, P)
    with pytest.raises(ValueError):
        W.check_regular_estimate(3, catalog.symmetric(3))


def test_asymptotic_ratio():
    for r in (20, 30, 40):
        ratio = W.k_wreath_cyclic(15, r) * r / 15**r
        assert abs(ratio - 1) < 1e-5


def test_m12_growth():
    assert W.check_m12_growth(1)
    assert not W.check_m12_growth(2)
    assert W.check_m12_growth(400)
    res = W.m12_threshold_sweep(400)
    assert res["threshold"] == 222
    assert res["true_below_threshold"] == [1]
    with pytest.raises(ValueError):
        W.check_m12_growth(0)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        W.WreathDescriptor(0, 3)
    with pytest.raises(ValueError):
        W.WreathDescriptor(2, 0)


def test_tuple_group_cap():
    with pytest.raises(OracleCapError):
        W.tuple_group(catalog.symmetric(4), catalog.symmetric(4), cap=10000)
