import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cqs_milnor.cfrac import DIVISION_BY_ZERO, eval_chain, hj_expand, represents_zero


def slow_eval(chain):
    """Independent right-to-left evaluation with Fraction; None on 1/0."""
    v = Fraction(chain[-1])
    for c in reversed(chain[:-1]):
        if v == 0:
            return None
        v = c - 1 / v
    return v


@pytest.mark.parametrize(
    "x, expected",
    [(Fraction(4, 3), (2, 2, 2)), (Fraction(7), (7,)), (Fraction(5, 3), (2, 3)), (Fraction(1), (1,))],
)
def test_hj_expand_examples(x, expected):
    assert hj_expand(x) == expected
    assert slow_eval(expected) == x


@pytest.mark.parametrize("n", range(2, 12))
def test_integer_expands_to_single_entry(n):
    assert hj_expand(n) == (n,)


@pytest.mark.parametrize("bad", [Fraction(1, 2), Fraction(0), Fraction(-3, 2)])
def test_hj_expand_rejects_below_one(bad):
    with pytest.raises(ValueError):
        hj_expand(bad)


@pytest.mark.parametrize(
    "chain, expected",
    [
        ((1, 1), Fraction(0)),
        ((1, 1, 1), DIVISION_BY_ZERO),
        ((2, 1, 2), Fraction(0)),
        ((2, 2, 2), Fraction(4, 3)),
        ((0,), Fraction(0)),
        ((3, -1), Fraction(4)),
    ],
)
def test_eval_chain_examples(chain, expected):
    assert eval_chain(chain) == expected


def test_eval_chain_agrees_with_fraction_oracle():
    for L in range(1, 5):
        for chain in itertools.product(range(-3, 4), repeat=L):
            ref = slow_eval(chain)
            got = eval_chain(chain)
            assert got == (DIVISION_BY_ZERO if ref is None else ref), chain


@pytest.mark.parametrize(
    "chain, expected",
    [((1, 2, 1), True), ((2, 2), False), ((0,), True), ((1, 1, 1), False), ((1, 1), True), ((3,), False)],
)
def test_represents_zero_examples(chain, expected):
    assert represents_zero(chain) is expected


def test_negative_tail_is_not_a_zero_chain():
    # evaluates to 0 without a zero denominator, but the tail (1, 1, 2) is -1
    assert eval_chain((2, 1, 1, 1, 1, 2)) == 0
    assert not represents_zero((2, 1, 1, 1, 1, 2))


def test_palindrome_closure():
    for L in range(1, 8):
        for chain in itertools.product(range(1, L + 1), repeat=L):
            assert represents_zero(chain) == represents_zero(chain[::-1])


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_round_trip(a, b):
    x = Fraction(max(a, b), min(a, b))
    chain = hj_expand(x)
    assert eval_chain(chain) == x
    if x > 1:
        assert all(c >= 2 for c in chain)
    assert hj_expand(x) == chain


@given(st.lists(st.integers(-(10**6), 10**6), min_size=1, max_size=12))
def test_eval_matches_oracle_large_entries(chain):
    ref = slow_eval(chain)
    assert eval_chain(chain) == (DIVISION_BY_ZERO if ref is None else ref)
