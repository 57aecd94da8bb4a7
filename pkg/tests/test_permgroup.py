from itertools import permutations

import pytest

from conjclass import catalog, permgroup as pg, suites
from conjclass.errors import OracleCapError
from conjclass.permgroup import PermutationGroup

import oracles


def test_compose_is_left_to_right():
    p, q = (1, 2, 0), (1, 0, 2)
    assert pg.compose(p, q) == oracles.perm_compose(p, q)
    assert pg.compose(p, pg.inverse(p)) == pg.identity(3)


def test_cycle_helpers():
    x = pg.from_cycles([(0, 1, 2), (3, 4)], 6)
    assert pg.cycle_type(x) == (3, 2, 1)
    assert pg.parse_cycle_string(pg.to_cycle_string(x), 6) == x
    assert sorted(len(c) for c in pg.cycles(x)) == [1, 2, 3]


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        PermutationGroup([(0, 0, 1)])
    with pytest.raises(ValueError):
        PermutationGroup([(1, 0), (0, 1, 2)])
    with pytest.raises(ValueError):
        PermutationGroup([])


def test_closure_orders():
    for n in range(1, 7):
        assert catalog.symmetric(n).order == len(oracles.symmetric_elements(n))
        assert catalog.cyclic(n).order == n
    assert catalog.alternating(5).order == 60
    assert catalog.dihedral(5).order == 10
    assert catalog.get("M11").order == 7920


def test_alternating_is_even_permutations():
    for n in range(2, 7):
        evens = {p for p in permutations(range(n)) if oracles.sign(p) == 1}
        assert set(catalog.alternating(n).elements) == evens


def test_classes_partition_the_group():
    for G in suites.small_catalog(6):
        classes = G.conjugacy_classes()
        flat = [x for cl in classes for x in cl]
        assert len(flat) == len(set(flat)) == G.order
        for cl in classes:
            assert G.order % len(cl) == 0


def test_s4_examples():
    S4 = catalog.symmetric(4)
    assert S4.k() == 5
    assert sorted(len(c) for c in S4.conjugacy_classes()) == [1, 3, 6, 6, 8]
    x = pg.from_cycles([(0, 1)], 4)
    assert S4.centralizer(x).order == 4
    assert catalog.klein_four_regular().is_regular()
    assert not S4.is_regular()


def test_class_numbers_against_commuting_pair_oracle():
    for G in suites.small_catalog(6):
        assert G.k() == oracles.class_count_by_commuting_pairs(G.elements, oracles.perm_compose)


def test_three_class_counts_agree():
    for G in suites.small_catalog(7):
        if G.order <= 2520:
            assert G.k() == pg.burnside_class_count(G) == pg.commuting_pairs_class_count(G)


def test_stored_group_class_numbers():
    assert catalog.get("M11").k() == 10
    assert catalog.get("M12").k() == 15
    assert catalog.get("PSL2(7)").k() == 6
    assert catalog.get("PGL2(9)").k() == 11


def test_action_on_cycles():
    x = pg.from_cycles([(0, 1), (2, 3)], 4)
    c = pg.from_cycles([(0, 2), (1, 3)], 4)
    img = pg.action_on_cycles(c, x)
    assert sorted(img) == [0, 1] and img != (0, 1)
    with pytest.raises(ValueError):
        pg.action_on_cycles(pg.from_cycles([(0, 1, 2)], 4), x)


def test_subgroup_inequalities():
    for G, H in suites.subgroup_pairs():
        assert H.is_subgroup_of(G)
        assert pg.check_subgroup_inequalities(G, H)
    with pytest.raises(ValueError):
        pg.check_subgroup_inequalities(catalog.cyclic(4), catalog.symmetric(4))


def test_normal_inequalities():
    for G, N in suites.normal_pairs():
        assert N.is_normal_in(G)
        assert pg.check_normal_inequalities(G, N)
    S4 = catalog.symmetric(4)
    assert not catalog.cyclic(4).is_normal_in(S4)
    with pytest.raises(ValueError):
        pg.check_normal_inequalities(S4, catalog.cyclic(4))


def test_quotient_class_counts():
    S4, V = catalog.symmetric(4), catalog.klein_four_regular()
    assert pg.quotient_class_count(S4, V) == 3
    assert pg.quotient_class_count(S4, catalog.alternating(4)) == 2
    assert pg.g_classes_in(S4, V) == 2
    for q in (5, 7):
        assert pg.quotient_class_count(catalog.get(f"PGL2({q})"), catalog.get(f"PSL2({q})")) == 2


def test_pyber_bound_on_catalog():
    for G in suites.small_catalog(8):
        assert pg.check_pyber_bound(G)


def test_cap_raises():
    with pytest.raises(OracleCapError):
        PermutationGroup(catalog.symmetric(8).generators, cap=1000).elements
