import pytest

from hallrad import catalog
from hallrad.permgroup import coset_action


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16])
def test_psl2_order_and_action(q):
    T = catalog.build_psl2(q)
    assert T.order() == catalog.psl2_order(q)
    assert T.degree == q + 1 and T.is_transitive()
    assert T.is_simple()


@pytest.mark.parametrize("q", [2, 3])
def test_psl3(q):
    T, points, lines = catalog.psl3_stabilizers(q)
    assert T.order() == catalog.psl3_order(q)
    n = q * q + q + 1
    assert T.degree == n
    for H in points + lines:
        assert T.order() // H.order() == n
        assert coset_action(T, H).image.is_primitive()


def test_named_groups():
    assert catalog.build_named("A5").order() == 60
    assert catalog.symmetric(5).order() == 120
    assert catalog.dihedral(7).order() == 14
    with pytest.raises(ValueError):
        catalog.build_named("Monster")


def test_case_lists():
    assert [c.case_id for c in catalog.cases_for_prime(5)] == [1]
    assert [c.q for c in catalog.cases_for_prime(2, q_cap=127)] == [7, 31, 127]
    assert [c.q for c in catalog.cases_for_prime(17)] == [16]
    assert catalog.cases_for_prime(11) == []
    assert [c.q for c in catalog.cases_for_prime(257, q_cap=256)] == []
    with pytest.raises(ValueError):
        catalog.cases_for_prime(9)


@pytest.mark.parametrize("p", [5, 3, 7, 13, 17])
def test_verify_small_cases(p):
    for c in catalog.cases_for_prime(p):
        r = catalog.verify_case(c)
        assert r.passed, r.to_dict()


def test_class_counts():
    T, points, lines = catalog.psl3_stabilizers(2)
    assert catalog.count_conjugacy_classes(T, points + lines) == 2
    assert catalog.count_conjugacy_classes(T, points) == 1
