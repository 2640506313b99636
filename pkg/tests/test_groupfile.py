import pytest
from hypothesis import given, settings, strategies as st

from hallrad.groupfile import (GroupFileError, digest, format_group, parse_group_file,
                               parse_group_text, write_group_file)
from hallrad.permgroup import PermGroup


def test_alt5_file(tmp_path):
    path = tmp_path / "a5.grp"
    path.write_text("# Alt(5)\ndegree: 5\n\ngen: (0 1 2 3 4)\ngen: (0 1 2)  # 3-cycle\n")
    assert parse_group_file(path).order() == 60


def test_trivial_group():
    G = parse_group_text("degree: 3\n")
    assert G.order() == 1 and G.degree == 3
    assert parse_group_text("degree: 3\ngen: ()\n").order() == 1


@pytest.mark.parametrize("text, message", [
    ("degree: 5\ngen: (0 5)\n", ":2: point out of range"),
    ("degree: 5\ngen: (0 1\n", ":2: malformed"),
    ("gen: (0 1)\n", ":1: gen before degree"),
    ("degree: x\n", ":1: degree must be an integer"),
    ("degree: 0\n", "degree must be positive"),
    ("degree: 3\ndegree: 3\n", ":2: degree given twice"),
    ("degree: 3\nfoo: 1\n", ":2: unknown key"),
    ("degree 3\n", ":1: expected"),
    ("# nothing\n", "missing degree"),
])
def test_errors(text, message):
    with pytest.raises(GroupFileError, match=message):
        parse_group_text(text, "f.grp")


def test_missing_file(tmp_path):
    with pytest.raises(GroupFileError):
        parse_group_file(tmp_path / "nope.grp")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))).map(tuple), max_size=3)
    .map(lambda gs: (n, gs))))
def test_round_trip(data):
    n, gens = data
    G = PermGroup(n, gens)
    H = parse_group_text(format_group(G, "round trip"))
    assert H.degree == n and H.gens == G.gens


def test_write_and_digest(tmp_path):
    G = PermGroup(4, [(1, 2, 3, 0)])
    a, b = tmp_path / "a.grp", tmp_path / "b.grp"
    write_group_file(a, G)
    write_group_file(b, G)
    assert digest(a) == digest(b) and len(digest(a)) == 64
