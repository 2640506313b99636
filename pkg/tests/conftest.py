import pytest

from hallrad import catalog
from hallrad.perm import parse_cycles
from hallrad.permgroup import PermGroup


def group(degree, *cycles):
    return PermGroup(degree, [parse_cycles(c, degree) for c in cycles])


def small_groups():
    """Named fixtures of order at most 2000."""
    out = {}
    for n in range(1, 6):
        out[f"Sym{n}"] = catalog.symmetric(n)
    for n in range(3, 6):
        out[f"Alt{n}"] = catalog.alternating(n)
    for n in (1, 2, 5, 6, 12):
        out[f"C{n}"] = catalog.cyclic(n)
    for n in (3, 4, 5, 6, 10):
        out[f"D{n}"] = catalog.dihedral(n)
    out["V4"] = group(4, "(0 1)(2 3)", "(0 2)(1 3)")
    out["V4:C3"] = group(4, "(0 1)(2 3)", "(0 2)(1 3)", "(0 1 2)")
    out["V4:S3"] = group(4, "(0 1)(2 3)", "(0 2)(1 3)", "(0 1 2)", "(0 1)")
    out["V4xC3"] = group(7, "(0 1)(2 3)", "(0 2)(1 3)", "(4 5 6)")
    out["Alt4xC2"] = group(6, "(0 1 2)", "(1 2 3)", "(4 5)")
    out["Alt5xC2"] = group(7, "(0 1 2 3 4)", "(0 1 2)", "(5 6)")
    out["Alt5xSym3"] = group(8, "(0 1 2 3 4)", "(0 1 2)", "(5 6 7)", "(5 6)")
    out["Sym3wrC2"] = group(6, "(0 1 2)", "(0 1)", "(0 3)(1 4)(2 5)")
    out["Sym4xSym3"] = group(7, "(0 1 2 3)", "(0 1)", "(4 5 6)", "(4 5)")
    out["Alt6"] = catalog.alternating(6)
    out["PSL(2,7)"] = catalog.build_psl2(7)
    out["PSL(2,8)"] = catalog.build_psl2(8)
    out["PSL(2,11)"] = catalog.build_psl2(11)
    out["C2wrC4"] = group(8, "(0 1)", "(0 2 4 6)(1 3 5 7)")
    return out


SMALL = small_groups()


@pytest.fixture(scope="session")
def small():
    return SMALL


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
