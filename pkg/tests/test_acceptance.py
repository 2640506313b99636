"""The eight acceptance criteria, one test each.

Each test records a PASS/FAIL line that is printed in the pytest summary
(and directly when this file is run as a script).
"""

import contextlib
import random
import subprocess
import sys
import time

import pytest

import oracles
from conftest import ACCEPTANCE_LINES, SMALL
from hallrad import catalog, constructions, numtheory, series, theorems
from hallrad.permgroup import are_conjugate_subgroups, core


@contextlib.contextmanager
def criterion(n, title):
    t0 = time.perf_counter()
    detail = []
    try:
        yield detail
    except BaseException as exc:
        line = f"criterion {n} {title}: FAIL ({type(exc).__name__}: {exc})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    extra = "; ".join(detail)
    line = f"criterion {n} {title}: PASS ({time.perf_counter() - t0:.1f}s{'; ' + extra if extra else ''})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def catalog_reports():
    return {(c.case_id, c.q): catalog.verify_case(c) for c in catalog.all_cases(q_cap=257)}


@pytest.fixture(scope="module")
def family_reports():
    return [(f, theorems.analyze_pair(f.W, f.S)) for f in constructions.standard_family()]


def test_1_catalog_suite():
    with criterion(1, "catalog suite") as note:
        expected = {  # (case, q): (index, |H|, class count)
            (1, None): (5, 12, 1), (2, 8): (9, 56, 1),
            (3, 7): (8, 21, 1), (3, 31): (32, 465, 1), (3, 127): (128, 8001, 1),
            (4, 16): (17, 240, 1), (5, 2): (7, 24, 2), (6, 3): (13, 432, 2),
        }
        cases = {(c.case_id, c.q): c for c in catalog.all_cases(q_cap=257)}
        assert set(cases) == set(expected)
        for key, (index, h_order, classes) in expected.items():
            c = cases[key]
            t0 = time.perf_counter()
            r = catalog.verify_case(c)
            elapsed = time.perf_counter() - t0
            assert c.T.order() // c.H.order() == index == c.index
            assert c.H.order() == h_order
            assert r.solvable_ok and r.hall and r.maximal and r.index_ok
            assert r.class_count == classes and r.class_count_ok
            if key == (3, 127):
                assert elapsed <= 60
                note.append(f"PSL(2,127) in {elapsed:.1f}s")
        note.append(f"{len(expected)} cases exact")


def test_2_aut_bound_table(catalog_reports):
    with criterion(2, "aut-bound table") as note:
        table = {(1, None): (480, 625), (2, 8): (6048, 6561), (5, 2): (1344, 2401),
                 (3, 7): (1344, 4096), (4, 16): (65280, 83521), (6, 3): (44928, 371293)}
        for key, (lhs, rhs) in table.items():
            r = catalog_reports[key]
            assert (r.four_aut_T, r.bound_rhs) == (lhs, rhs)
            assert r.four_aut_T <= r.bound_rhs and r.aut_bound_ok
        psl33 = catalog_reports[(6, 3)]
        assert psl33.four_aut_T > 13**4 == 28561 and psl33.exceeds_m4
        assert not any(r.exceeds_m4 for k, r in catalog_reports.items() if k != (6, 3))
        note.append("44928 > 28561 only for PSL(3,3)")


def test_3_family_radical_bound(family_reports):
    with criterion(3, "family |W/rad W| bound") as note:
        assert len(family_reports) >= 20
        for f, r in family_reports:
            q, m = r.series.quotient_order, r.m
            bound = m**5 if r.p == 13 else m**4
            assert q <= bound, f"{f.name}: {q} > {bound}"
        A5 = catalog.alternating(5)
        W, _ = constructions.wreath_top(A5, A5.point_stabilizer(0), catalog.cyclic(2))
        rec = series.radical_series(W)
        assert rec.rad_order == 1 and not rec.probabilistic
        assert rec.quotient_order == 7200 <= 390625 == 25**4
        note.append(f"{len(family_reports)} pairs; Alt5 wr C2: 7200 <= 390625, rad trivial")


def test_4_factor_filter(family_reports):
    with criterion(4, "composition factor filter") as note:
        nonsolvable = [(f, r) for f, r in family_reports if not r.G_is_solvable]
        assert nonsolvable
        for f, r in nonsolvable:
            assert r.factor_check.passed, f"{f.name}: {r.factor_check.diagnostic}"
            assert not r.findings, f"{f.name}: {r.findings}"
        poison = theorems.solvable_prime_power_index_subgroup(catalog.alternating(6), 2)
        assert poison.found is None
        note.append("Alt6 has no solvable subgroup of 2-power index (" + poison.reason + ")")
        # mixing p = 5 and p = 7 pieces: PSL(3,2) is rejected at p = 5
        L, points, _ = catalog.psl3_stabilizers(2)
        A5 = catalog.alternating(5)
        M, _ = constructions.direct_product([(A5, A5.point_stabilizer(0)), (L, points[0])])
        check = theorems.filter_factors(series.composition_factors(M), 5)
        assert not check.passed and check.offending == ["PSL3(2)"]
        note.append(f"{len(nonsolvable)} non-solvable pairs clean; mixed product gives FINDING")


def test_5_consecutive_scan():
    with criterion(5, "consecutive prime-power scan") as note:
        t0 = time.perf_counter()
        scan = numtheory.scan_consecutive(10**6)
        elapsed = time.perf_counter() - t0
        assert scan.anomalies == []
        assert scan.by_case[numtheory.EIGHT_NINE] == [8]
        assert scan.by_case[numtheory.MERSENNE_PAIR][:5] == [3, 7, 31, 127, 8191]
        assert scan.by_case[numtheory.FERMAT_PAIR] == [2, 4, 16, 256, 65536]
        assert elapsed <= 60
        note.append(f"scan {elapsed:.1f}s")


def test_6_conjugacy():
    with criterion(6, "conjugacy of stabilizers"):
        T = catalog.build_psl2(8)
        rng = random.Random(8)
        a, b = rng.sample(range(9), 2)
        H1, H2 = T.point_stabilizer(a), T.point_stabilizer(b)
        g = are_conjugate_subgroups(T, H1, H2)
        assert g is not None and T.contains(g) and H1.conjugate(g).equals(H2)
        for q in (2, 3):
            L, points, lines = catalog.psl3_stabilizers(q)
            assert points[0].order() == lines[0].order()
            assert are_conjugate_subgroups(L, points[0], lines[0]) is None


def test_7_oracle_equivalence():
    with criterion(7, "oracle equivalence") as note:
        t0 = time.perf_counter()
        for name, G in SMALL.items():
            E = oracles.closure(G.degree, G.gens)
            assert len(E) <= 2000
            assert G.order() == len(E), name
            assert set(G.elements()) == E, name
            rng = random.Random(name)
            for _ in range(10):
                x = list(range(G.degree))
                rng.shuffle(x)
                assert G.contains(tuple(x)) == (tuple(x) in E), name
            elems = sorted(E)
            for _ in range(2):
                x = rng.choice(elems)
                assert set(G.normal_closure([x]).elements()) == oracles.normal_closure(E, [x]), name
                H = G.subgroup([rng.choice(elems)])
                assert set(core(G, H).elements()) == oracles.core(E, frozenset(H.elements())), name
            assert set(series.solvable_radical(G).elements()) == oracles.radical(E), name
            got = sorted(f.order for f in series.composition_factors(G))
            assert got == oracles.composition_orders(E), name
        elapsed = time.perf_counter() - t0
        assert elapsed <= 120
        note.append(f"{len(SMALL)} fixtures")


def test_8_determinism(tmp_path):
    with criterion(8, "deterministic catalog report"):
        outs = []
        for _ in range(2):
            proc = subprocess.run([sys.executable, "-m", "hallrad", "--quiet", "verify",
                                   "--suite", "catalog"], capture_output=True)
            assert proc.returncode == 0, proc.stderr
            outs.append(proc.stdout)
        assert outs[0] == outs[1] and outs[0].endswith(b"\n")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
