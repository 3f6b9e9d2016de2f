from itertools import product

import pytest
from hypothesis import given

from nakayama.errors import MalformedPath, RankMismatch
from nakayama.grid import (
    GridPoint,
    Valley,
    bottom_path,
    catalan,
    comparable_pairs,
    enumerate_paths,
    from_heights,
    from_steps,
    hasse_edges,
    ideal_generators,
    leq,
    lower_covers,
    modules_below,
    parse_path,
    top_path,
    upper_covers,
    valleys,
    word_contains,
)

from strategies import paths


def brute_paths(n):
    """Every U/D word of length 2n that happens to be a valid path."""
    out = []
    for word in product("UD", repeat=2 * n):
        try:
            out.append(from_steps(n, "".join(word)))
        except MalformedPath:
            pass
    return out


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_brute_force(n):
    fast = enumerate_paths(n)
    assert len(fast) == catalan(n)
    if n <= 5:
        assert fast == brute_paths(n)


def test_catalan_recurrence_up_to_8():
    c = [1]
    for m in range(8):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    assert [len(enumerate_paths(n)) for n in range(9)] == c


def test_enumeration_starts_with_top_path():
    assert enumerate_paths(4)[0] == top_path(4)
    assert enumerate_paths(4)[-1] == bottom_path(4)


def test_from_steps_examples():
    d = from_steps(3, "UUDDUD")
    assert d.k_heights == (2, 2, 3)
    assert modules_below(d) == {GridPoint(1, 1), GridPoint(2, 2), GridPoint(3, 3), GridPoint(1, 2)}
    assert from_steps(1, "UD").is_top and from_steps(1, "UD").is_bottom


@pytest.mark.parametrize(
    "steps,index", [("DUUD", 0), ("UDDU", 2), ("UXUD", 1)]
)
def test_malformed_paths_report_index(steps, index):
    with pytest.raises(MalformedPath) as exc:
        from_steps(2, steps)
    assert exc.value.index == index


def test_wrong_length_and_endpoint():
    with pytest.raises(MalformedPath):
        from_steps(2, "UUD")
    with pytest.raises(MalformedPath):
        from_steps(2, "UUUD")


def test_heights_round_trip_and_parse():
    for d in enumerate_paths(5):
        assert from_heights(d.k_heights) == d
        assert parse_path(",".join(map(str, d.k_heights))) == d
        assert parse_path(d.steps.lower()) == d
    with pytest.raises(MalformedPath):
        from_heights([1, 1, 3])
    with pytest.raises(MalformedPath):
        from_heights([3, 2, 3])
    with pytest.raises(MalformedPath):
        parse_path("UUDD", 3)


def test_j_positions_reconstruct_the_path():
    d = from_steps(5, "UUDUUUDDDD")
    assert d.k_heights == (2, 5, 5, 5, 5)
    assert d.j_positions == (1, 1, 2, 2, 2)
    for d in enumerate_paths(5):
        # up step i happens after j_i - 1 down steps
        for i in range(1, d.n + 1):
            assert d.steps[: d.up_position(i)].count("D") == d.j(i) - 1


def test_leq_examples():
    assert leq(bottom_path(3), top_path(3))
    d = from_steps(3, "UUDDUD")
    assert leq(d, d)
    with pytest.raises(RankMismatch):
        leq(top_path(2), top_path(3))
    p4 = enumerate_paths(4)
    assert any(not leq(a, b) and not leq(b, a) for a in p4 for b in p4)


@pytest.mark.parametrize("n", range(1, 6))
def test_leq_is_inclusion_of_lower_sets(n):
    ps = enumerate_paths(n)
    for a in ps:
        for b in ps:
            assert leq(a, b) == (modules_below(a) <= modules_below(b))


@pytest.mark.parametrize("n", range(1, 6))
def test_hasse_diagram_is_transitive_reduction(n):
    ps = enumerate_paths(n)
    pairs = set(comparable_pairs(ps))
    reduction = {
        (a, b)
        for (a, b) in pairs
        if not any((a, c) in pairs and (c, b) in pairs for c in ps)
    }
    assert set(hasse_edges(ps)) == reduction


def test_fig_one_poset():
    ps = enumerate_paths(3)
    edges = {(a.steps, b.steps) for a, b in hasse_edges(ps)}
    assert edges == {
        ("UDUDUD", "UUDDUD"),
        ("UDUDUD", "UDUUDD"),
        ("UUDDUD", "UUDUDD"),
        ("UDUUDD", "UUDUDD"),
        ("UUDUDD", "UUUDDD"),
    }


def test_covers_examples():
    assert upper_covers(bottom_path(2)) == [top_path(2)]
    assert upper_covers(top_path(4)) == []
    assert len(upper_covers(bottom_path(3))) == 2
    assert lower_covers(top_path(2)) == [bottom_path(2)]


@given(paths(1, 6))
def test_covers_are_inverse(d):
    for c in upper_covers(d):
        assert d in lower_covers(c)
        assert len(modules_below(c)) == len(modules_below(d)) + 1


def test_valleys_examples():
    assert valleys(from_steps(3, "UUDDUD")) == [Valley(3, 2)]
    assert ideal_generators(from_steps(3, "UUDDUD")) == [(2,)]
    assert valleys(top_path(4)) == []
    assert valleys(bottom_path(3)) == [Valley(2, 1), Valley(3, 2)]
    assert ideal_generators(bottom_path(3)) == [(1,), (2,)]
    # <alpha_2 alpha_1> at n = 5
    assert ideal_generators(from_steps(5, "UUDUUUDDDD")) == [(2, 1)]


@given(paths(1, 6))
def test_modules_below_match_valley_rule(d):
    vs = valleys(d)
    rule = {
        GridPoint(i, j)
        for i in range(1, d.n + 1)
        for j in range(i, d.n + 1)
        if all(i >= a or j <= b for (a, b) in ((v.a, v.b) for v in vs))
    }
    assert modules_below(d) == rule


@pytest.mark.parametrize("n", range(1, 6))
def test_order_matches_ideal_containment(n):
    # D <= D' iff I_D contains I_D': each generator of D' extends some generator of D
    ps = enumerate_paths(n)
    for a in ps:
        for b in ps:
            gens_a, gens_b = ideal_generators(a), ideal_generators(b)
            contains = all(any(word_contains(w, v) for v in gens_a) for w in gens_b)
            assert leq(a, b) == contains
