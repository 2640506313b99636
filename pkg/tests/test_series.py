import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import SMALL, group
from hallrad import catalog, constructions, numtheory, series
from hallrad.series import identify


@pytest.mark.parametrize("order, name", [
    (2, "Cyclic(2)"), (13, "Cyclic(13)"), (60, "Alt5"), (168, "PSL3(2)"), (5616, "PSL3(3)"),
    (504, "PSL2(8)"), (360, "PSL2(9)"), (1092, "PSL2(13)"), (20160, "UnknownSimple(20160)"),
])
def test_identify(order, name):
    assert identify(order).name == name


def test_identify_records_psl2_coincidences():
    assert identify(60).psl2_q == (4, 5)
    assert identify(168).psl2_q == (7,)
    assert identify(360).alternating_degree == 6
    assert identify(60).alternating_degree == 5


PRIME_POWERS = [q for q in range(4, 400) if numtheory.prime_power_decompose(q)]


@given(st.sampled_from(PRIME_POWERS))
def test_psl2_orders_identify_back(q):
    f = identify(catalog.psl2_order(q))
    assert q in f.psl2_q
    assert f.order == catalog.psl2_order(q)


@pytest.mark.parametrize("name", ["Sym4", "Sym5", "Alt5xC2", "Alt5xSym3", "Sym3wrC2", "PSL(2,7)"])
def test_radical_against_oracle(name):
    G = SMALL[name]
    E = oracles.closure(G.degree, G.gens)
    R = series.solvable_radical(G)
    assert set(R.elements()) == oracles.radical(E)


def test_sampled_radical_matches_exhaustive(monkeypatch):
    G = SMALL["Alt5xSym3"]
    monkeypatch.setenv("HALLRAD_CAP", "50")
    R, _ = series.radical_with_flag(G)
    assert R.order() == 6 and R.is_normal_in(G)


def _check_invariants(rec):
    assert rec.A_order % rec.rad_order == 0
    assert rec.B_order % rec.A_order == 0
    assert rec.G_order % rec.B_order == 0
    assert rec.k == len(rec.delta)
    assert rec.top_image.order() == rec.G_order // rec.B_order
    assert rec.b_over_a_solvable


@pytest.mark.parametrize("name", list(SMALL))
def test_series_invariants(name):
    _check_invariants(series.radical_series(SMALL[name]))


def test_wreath_series():
    A5 = catalog.alternating(5)
    W, _ = constructions.wreath_top(A5, A5.point_stabilizer(0), catalog.cyclic(2))
    rec = series.radical_series(W)
    _check_invariants(rec)
    assert (rec.rad_order, rec.k, rec.X_order, rec.quotient_order) == (1, 2, 2, 7200)
    assert [d.name for d in rec.delta] == ["Alt5", "Alt5"]


def test_composition_factors():
    names = [f.name for f in series.composition_factors(SMALL["Sym5"])]
    assert names == ["Cyclic(2)", "Alt5"]
    assert series.composition_factors(SMALL["C1"]) == []
    S4wr = group(8, "(0 1 2 3)", "(0 1)", "(0 4)(1 5)(2 6)(3 7)")
    assert sorted(f.order for f in series.composition_factors(S4wr)) == [2] * 7 + [3] * 2


def test_cyclic_factors():
    assert [f.order for f in series.cyclic_factors(360)] == [2, 2, 2, 3, 3, 5]
