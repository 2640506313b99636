import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import SMALL, group
from hallrad import catalog
from hallrad.config import CapExceeded
from hallrad.perm import Perm, mul
from hallrad.permgroup import (Homomorphism, PermGroup, are_conjugate_subgroups,
                               coset_action, core, right_cosets)


@st.composite
def generated_groups(draw):
    n = draw(st.integers(1, 7))
    k = draw(st.integers(0, 3))
    gens = [tuple(draw(st.permutations(list(range(n))))) for _ in range(k)]
    return n, gens


@settings(max_examples=60, deadline=None)
@given(generated_groups())
def test_order_and_membership_against_closure(data):
    n, gens = data
    G = PermGroup(n, gens)
    E = oracles.closure(n, gens)
    assert G.order() == len(E)
    assert set(G.elements()) == set(E)
    rng = random.Random(len(E))
    for _ in range(20):
        x = list(range(n))
        rng.shuffle(x)
        assert G.contains(tuple(x)) == (tuple(x) in E)


@settings(max_examples=40, deadline=None)
@given(generated_groups(), st.data())
def test_orbit_stabilizer(data, draw):
    n, gens = data
    G = PermGroup(n, gens)
    pt = draw.draw(st.integers(0, n - 1))
    assert len(G.orbit(pt)) * G.point_stabilizer(pt).order() == G.order()


@pytest.mark.parametrize("name", ["Sym4", "Alt5", "D6", "Sym3wrC2", "PSL(2,7)", "V4:S3"])
def test_normal_closure_and_core_against_oracle(name):
    G = SMALL[name]
    E = oracles.closure(G.degree, G.gens)
    rng = random.Random(name)
    elems = sorted(E)
    for _ in range(4):
        x = rng.choice(elems)
        N = G.normal_closure([x])
        assert set(N.elements()) == oracles.normal_closure(E, [x])
        H = G.subgroup([rng.choice(elems), rng.choice(elems)])
        HE = frozenset(H.elements())
        C = core(G, H)
        assert set(C.elements()) == oracles.core(E, HE)
        assert C.is_normal_in(G)


@pytest.mark.parametrize("name", ["Sym4", "Alt5", "Sym5", "PSL(2,8)", "D10"])
def test_coset_action_is_a_homomorphism(name):
    G = SMALL[name]
    H = G.point_stabilizer(0) if G.order() > 20 else G.subgroup([G.gens[0]])
    act = coset_action(G, H)
    assert act.image.degree == G.order() // H.order()
    assert act.image.is_transitive()
    rng = random.Random(1)
    for _ in range(30):
        a, b = rng.choice(G.gens), rng.choice(G.elements())
        assert act(mul(a, b)) == act(a) * act(b)
    assert act.kernel().order() == core(G, H).order()


def test_homomorphism_on_random_words():
    G = catalog.symmetric(5)
    imgs = [(1, 0) if Perm(g).sign() < 0 else (0, 1) for g in G.gens]
    sign = Homomorphism(G, imgs, 2)
    assert sign.kernel().order() == 60
    rng = random.Random(5)
    for _ in range(50):
        word = [rng.choice(G.gens) for _ in range(rng.randrange(1, 12))]
        x = tuple(range(5))
        for w in word:
            x = mul(x, w)
        assert sign(x).images == ((1, 0) if Perm(x).sign() < 0 else (0, 1))
        y = sign.preimage(sign.map_tuple(x))
        assert Perm(y).sign() == Perm(x).sign()


def test_bad_homomorphism_is_rejected():
    G = group(3, "(0 1 2)", "(0 1)")
    with pytest.raises(ValueError):
        Homomorphism(G, [(1, 0), (1, 0)], 2)


def test_wrong_order_hint_is_caught():
    with pytest.raises(ValueError):
        PermGroup(5, [(1, 2, 3, 4, 0), (1, 2, 0, 3, 4)], order=61).order()


def test_structure_queries():
    S4 = SMALL["Sym4"]
    assert [D.order() for D in S4.derived_series()] == [24, 12, 4, 1]
    assert [N.order() for N in S4.minimal_normal_subgroups()] == [4]
    assert SMALL["Alt5"].is_simple() and SMALL["C5"].is_simple()
    assert not SMALL["Alt4"].is_simple()
    assert S4.is_primitive() and not SMALL["D4"].is_primitive()
    assert SMALL["Alt5"].is_perfect() and S4.is_solvable()
    assert SMALL["V4"].is_abelian()


def test_conjugate_subgroups():
    S4 = SMALL["Sym4"]
    a = S4.subgroup([(1, 0, 2, 3)])
    b = S4.subgroup([(1, 0, 3, 2)])
    c = S4.subgroup([(0, 1, 3, 2)])
    assert are_conjugate_subgroups(S4, a, b) is None
    g = are_conjugate_subgroups(S4, a, c)
    assert g is not None and a.conjugate(g).equals(c)


def test_coset_cap():
    with pytest.raises(CapExceeded):
        right_cosets(SMALL["Sym5"], PermGroup(5), cap=100)
