from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nakayama.errors import ChainMismatch, NotComparable
from nakayama.grid import bottom_path, comparable_pairs, enumerate_paths, from_steps, leq, top_path
from nakayama.indexset import Diamond, Down, Up
from nakayama.monomap import (
    chains,
    compose,
    monomial_map,
    partition_invariant,
    pushforward_point,
    satisfies_u_equations,
    verify_functoriality,
    verify_parametrization_compat,
    verify_pushforward,
)
from nakayama.uspace import evaluate_point, parametrization

from strategies import positive_rationals


def test_square_to_pentagon():
    phi = monomial_map(bottom_path(2), top_path(2))
    assert phi.image(Up(1)) == {Up(1): 1}
    assert phi.image(Up(2)) == {Up(2): 1, Diamond(1, 2): 1}
    assert phi.image(Down(1)) == {Diamond(1, 2): 1, Down(1): 1}
    assert phi.image(Down(2)) == {Down(2): 1}
    assert phi.render(Up(2)) == "u~2 -> u2 * d1.2"


def test_two_valley_example():
    phi = monomial_map(from_steps(5, "UUDUUDUDDD"), top_path(5))
    assert phi.image(Down(1)) == {Down(1): 1, Diamond(1, 3): 1, Diamond(1, 4): 1, Diamond(1, 5): 1}
    assert phi.image(Up(5)) == {Up(5): 1, Diamond(1, 5): 1, Diamond(2, 5): 1}


@pytest.mark.parametrize("n", range(1, 5))
def test_identity_iff_equal(n):
    ps = enumerate_paths(n)
    for a in ps:
        for b in ps:
            if leq(a, b):
                assert monomial_map(a, b).is_identity() == (a == b)


def test_errors():
    with pytest.raises(NotComparable):
        monomial_map(top_path(2), bottom_path(2))
    with pytest.raises(NotComparable):
        monomial_map(top_path(2), top_path(3))
    phi = monomial_map(bottom_path(2), top_path(2))
    with pytest.raises(ChainMismatch):
        compose(phi, phi)


def test_compose_with_identity():
    phi = monomial_map(bottom_path(3), top_path(3))
    assert compose(monomial_map(top_path(3), top_path(3)), phi) == phi
    assert compose(phi, monomial_map(bottom_path(3), bottom_path(3))) == phi


def test_fig_one_chain():
    d1, d2, d3 = bottom_path(3), from_steps(3, "UUDUDD"), top_path(3)
    assert verify_functoriality(d1, d2, d3)


@pytest.mark.parametrize("n", range(2, 5))
def test_functoriality_all_chains(n):
    for c in chains(n):
        assert verify_functoriality(*c)


@pytest.mark.parametrize("n", range(1, 5))
def test_partition_and_compat(n):
    for lo, hi in comparable_pairs(enumerate_paths(n)):
        assert partition_invariant(lo, hi)
        rep = verify_parametrization_compat(lo, hi)
        assert rep.passed, rep.failures


def test_symbolic_cancellation_example():
    lo, hi = bottom_path(2), top_path(2)
    big, small = parametrization(hi), parametrization(lo)
    assert big[Up(2)] * big[Diamond(1, 2)] == small[Up(2)]
    assert big[Diamond(1, 2)] * big[Down(1)] == small[Down(1)]


@given(
    st.integers(2, 5).flatmap(
        lambda n: st.tuples(
            st.sampled_from(comparable_pairs(enumerate_paths(n))),
            st.lists(positive_rationals(), min_size=n, max_size=n),
        )
    )
)
def test_pushforward_of_points(case):
    (lo, hi), y = case
    phi = monomial_map(lo, hi)
    pushed = pushforward_point(phi, evaluate_point(hi, y))
    assert pushed == evaluate_point(lo, y)
    assert satisfies_u_equations(lo, pushed)
    assert verify_pushforward(lo, hi, y).passed


def test_pushforward_of_a_boundary_point():
    # u_12 = 0 on the pentagon pushes to the square point with u~2 = s~1 = 0
    pt = {Up(1): Fraction(1), Up(2): Fraction(1, 3), Down(1): Fraction(2, 3),
          Down(2): Fraction(1), Diamond(1, 2): Fraction(0)}
    assert satisfies_u_equations(top_path(2), pt)
    pushed = pushforward_point(monomial_map(bottom_path(2), top_path(2)), pt)
    assert pushed[Up(2)] == 0 and pushed[Down(1)] == 0
    assert satisfies_u_equations(bottom_path(2), pushed)
