from itertools import combinations

import pytest
from hypothesis import given

from nakayama.errors import TopPathOnly, UnknownLabel
from nakayama.grid import bottom_path, enumerate_paths, from_steps, leq, top_path
from nakayama.indexset import (
    Diamond,
    Down,
    Label,
    Up,
    chord_label,
    chords_cross,
    compatibility_degree,
    compatibility_matrix,
    compatible,
    incompatible_set,
    index_set,
    parse_label,
)

from strategies import paths

A5 = from_steps(5, "UUDUUUDDDD")  # <alpha_2 alpha_1>


def test_index_set_examples():
    assert set(index_set(top_path(2))) == {Up(1), Up(2), Down(1), Down(2), Diamond(1, 2)}
    assert set(index_set(bottom_path(2))) == {Up(1), Up(2), Down(1), Down(2)}
    iset = index_set(A5)
    assert len(iset) == 17
    assert {x.display for x in iset.diamonds} == {"12", "23", "34", "45", "24", "35", "25"}


def test_label_order_in_index_set():
    labels = index_set(top_path(2)).labels
    assert [x.text for x in labels] == ["u1", "u2", "s1", "s2", "d1.2"]


def test_compatibility_examples():
    iset = index_set(A5)
    inc = incompatible_set(iset, Diamond(2, 4))
    assert inc == (Up(2), Up(3), Diamond(1, 2), Diamond(3, 5), Diamond(4, 5), Down(3), Down(4))
    assert incompatible_set(iset, Up(2)) == (
        Diamond(2, 3), Diamond(2, 4), Diamond(2, 5), Down(1), Down(2)
    )
    assert compatible(iset, Diamond(1, 2), Diamond(1, 2))
    assert incompatible_set(index_set(top_path(1)), Up(1)) == (Down(1),)
    assert incompatible_set(index_set(top_path(2)), Diamond(1, 2)) == (Up(1), Down(2))
    valley = index_set(bottom_path(2))
    assert compatible(valley, Up(2), Down(1))
    assert compatibility_degree(valley, Up(1), Down(1)) == 1


def test_unknown_label_rejected():
    iset = index_set(bottom_path(2))
    with pytest.raises(UnknownLabel):
        compatible(iset, Diamond(1, 2), Up(1))
    with pytest.raises(UnknownLabel):
        parse_label("x3")
    with pytest.raises(ValueError):
        Diamond(2, 2)


@given(paths(1, 6))
def test_symmetric_and_reflexive(d):
    iset = index_set(d)
    m = compatibility_matrix(iset)
    for a in range(len(iset)):
        assert m[a][a] == 0
        for b in range(len(iset)):
            assert m[a][b] == m[b][a]


@given(paths(1, 6))
def test_cardinality(d):
    iset = index_set(d)
    assert len(iset) == 2 * d.n + len(iset.diamonds)
    if d.is_top:
        assert len(iset) == d.n * (d.n + 3) // 2


@pytest.mark.parametrize("n", range(1, 7))
def test_top_path_compatibility_is_non_crossing(n):
    iset = index_set(top_path(n))
    chords = {x: chord_label(iset, x) for x in iset}
    # chords are all the diagonals of the (n+3)-gon
    assert len(set(chords.values())) == n * (n + 3) // 2
    for x, y in combinations(iset.labels, 2):
        assert compatible(iset, x, y) == (not chords_cross(chords[x], chords[y]))


def test_chord_examples():
    iset = index_set(top_path(3))
    assert chord_label(iset, Diamond(1, 2)) == (2, 4)
    assert chord_label(iset, Up(1)) == (1, 3)
    with pytest.raises(TopPathOnly):
        chord_label(index_set(bottom_path(3)), Up(1))


@pytest.mark.parametrize("n", range(2, 6))
def test_verdicts_only_change_on_up_down_pairs(n):
    ps = enumerate_paths(n)
    for a in ps:
        for b in ps:
            if not leq(a, b):
                continue
            ia, ib = index_set(a), index_set(b)
            for x, y in combinations(ia.labels, 2):
                if {x.kind, y.kind} == {"up", "down"}:
                    continue
                assert compatible(ia, x, y) == compatible(ib, x, y)


def test_label_renderings_round_trip():
    for x in index_set(top_path(4)):
        assert parse_label(x.text) == x
        assert Label.from_json(x.to_json()) == x
    assert Down(3).display == "Σ3"
    assert Diamond(2, 4).latex == "u_{24}"
    assert Down(1).latex == "u_{\\Sigma 1}"
