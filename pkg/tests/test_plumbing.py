import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cqs_milnor.cfrac import represents_zero
from cqs_milnor.plumbing import (
    S1_X_S2,
    LensSpace,
    NotRecognized,
    PlumbingError,
    PlumbingGraph,
    StripMode,
    absorb_zero_once,
    blow_down_once,
    blows_down_to_zero,
    chain_with_arrows,
    eligible_moves,
    graphs_equal,
    linear_chain,
    negate,
    recognize_lens,
    reduce,
    strip_arrows,
)
from cqs_milnor.quotient import hj_data
from cqs_milnor.verify import coprime_pairs


def weights(G):
    return G.as_chain()[0]


def test_linear_chain():
    G = linear_chain((2, 2, 2))
    assert weights(G) == (2, 2, 2) and G.edges == ((0, 1), (1, 2)) and not G.arrows
    assert weights(linear_chain((4,))) == (4,)
    assert len(linear_chain((-2, -2))) == 2


def test_negate():
    assert weights(negate(linear_chain((2, 2, 2)))) == (-2, -2, -2)
    assert weights(negate(linear_chain((0,)))) == (0,)
    G = chain_with_arrows((1, 2), (1, 0))
    assert negate(G).arrows == G.arrows


def test_negate_rejects_cycle():
    triangle = PlumbingGraph({0: 1, 1: 1, 2: 1}, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(PlumbingError):
        negate(triangle)


def test_constructor_validation():
    with pytest.raises(PlumbingError):
        PlumbingGraph({})
    with pytest.raises(PlumbingError):
        PlumbingGraph({0: 1}, [(0, 0)])
    with pytest.raises(PlumbingError):
        PlumbingGraph({0: 1, 1: 1}, [(0, 1)], [(0, "x"), (1, "x")])


def test_strip_arrows():
    G = chain_with_arrows((1, 2, 1), (1, 0, 1))
    assert weights(strip_arrows(G, StripMode.DELETE)) == (1, 2, 1)
    assert weights(strip_arrows(G, "absorb")) == (2, 2, 2)
    assert not strip_arrows(G).arrows
    H = linear_chain((3, 1))
    assert strip_arrows(H, StripMode.DELETE) == H == strip_arrows(H, StripMode.ABSORB)


def test_blow_down_examples():
    assert weights(blow_down_once(linear_chain((1, 2, 1)), 0)) == (1, 1)
    assert weights(blow_down_once(linear_chain((2, 1, 2)), 1)) == (1, 1)
    assert weights(blow_down_once(linear_chain((-1, -3)), 0)) == (-2,)


@pytest.mark.parametrize(
    "G, v",
    [
        (linear_chain((2, 1)), 0),  # weight not +-1
        (chain_with_arrows((1, 2), (1, 0)), 0),  # arrow on v
        (PlumbingGraph({0: 1, 1: 2, 2: 2, 3: 2}, [(0, 1), (0, 2), (0, 3)]), 0),  # degree 3
        (linear_chain((1,)), 0),  # last vertex
    ],
)
def test_blow_down_preconditions(G, v):
    with pytest.raises(PlumbingError):
        blow_down_once(G, v)


def test_absorb_zero():
    assert weights(absorb_zero_once(linear_chain((3, 0, 5)), 1)) == (8,)
    for a, b in itertools.product(range(-4, 5), repeat=2):
        assert weights(absorb_zero_once(linear_chain((a, 0, b)), 1)) == (a + b,)
    G = absorb_zero_once(linear_chain((1, 3, 0, 5, 2)), 2)
    assert weights(G) == (1, 8, 2)
    with pytest.raises(PlumbingError):
        absorb_zero_once(linear_chain((0,)), 0)


def test_absorb_keeps_arrows():
    G = chain_with_arrows((2, 0, 3, 4), (0, 0, 2, 1))
    H = absorb_zero_once(G, 1)
    assert H.as_chain() == ((5, 4), (2, 1))


def test_reduce_examples():
    assert weights(reduce(linear_chain((1, 2, 1)))) == (0,)
    assert weights(reduce(linear_chain((2, 1, 2)))) == (0,)
    assert weights(reduce(linear_chain((2, 3)))) == (2, 3)


def test_reduce_rejects_arrows():
    with pytest.raises(PlumbingError):
        reduce(chain_with_arrows((1, 1), (1, 0)))


def test_reduce_terminates_within_vertex_count():
    rng = random.Random(7)
    for _ in range(500):
        w = [rng.randint(-3, 3) for _ in range(rng.randint(1, 8))]
        G = linear_chain(w)
        steps = 0
        while eligible_moves(G):
            kind, v = eligible_moves(G)[0]
            G = (blow_down_once if kind == "blow_down" else absorb_zero_once)(G, v)
            steps += 1
        assert steps <= len(w)
        assert G == reduce(linear_chain(w))


def test_blows_down_to_zero_examples():
    assert blows_down_to_zero(linear_chain((1, 2, 1)))
    assert not blows_down_to_zero(linear_chain((2, 2, 2)))
    assert blows_down_to_zero(linear_chain((0,)))
    # reaches (0) with -1 moves and 0-absorption, but is not a zero chain
    assert weights(reduce(linear_chain((1, 1, 1, 1, 1)))) == (0,)
    assert not blows_down_to_zero(linear_chain((1, 1, 1, 1, 1)))


def test_zero_chain_equivalence_short():
    for L in range(2, 6):
        for k in itertools.product(range(1, L + 1), repeat=L):
            assert blows_down_to_zero(linear_chain(k)) == represents_zero(k), k


@pytest.mark.parametrize(
    "w, expected",
    [
        ((2, 2, 2), LensSpace(4, 1)),
        ((-2, -2, -2), LensSpace(4, 3)),
        ((4,), LensSpace(4, 3)),
        ((-4,), LensSpace(4, 1)),
        ((0,), S1_X_S2),
        ((1,), LensSpace(1, 0)),
        ((-1,), LensSpace(1, 0)),
        ((1, 2, 1), S1_X_S2),
        ((3, -1, 3), LensSpace(15, 11)),
    ],
)
def test_recognize_lens_examples(w, expected):
    assert recognize_lens(linear_chain(w)) == expected


def test_recognize_not_recognized():
    assert isinstance(recognize_lens(linear_chain((2, -2))), NotRecognized)
    assert isinstance(recognize_lens(chain_with_arrows((2,), (1,))), NotRecognized)
    star = PlumbingGraph({0: 2, 1: 2, 2: 2, 3: 2}, [(0, 1), (0, 2), (0, 3)])
    assert isinstance(recognize_lens(star), NotRecognized)


def test_lens_chain_and_negation():
    for X in coprime_pairs(30):
        G = linear_chain(hj_data(X))
        assert recognize_lens(G) == LensSpace(X.n, X.q)
        assert recognize_lens(negate(G)) == LensSpace(X.n, X.n - X.q)
        # reading the chain backwards gives q^-1 mod n: same oriented manifold
        back = recognize_lens(linear_chain(hj_data(X)[::-1]))
        assert back.same_oriented(LensSpace(X.n, X.q))


def test_lens_space_canonical():
    assert LensSpace(5, 2).canonical() == LensSpace(5, 2)
    assert LensSpace(5, 3).canonical() == LensSpace(5, 2)
    assert LensSpace(7, 3).reversed_orientation() == LensSpace(7, 4)
    with pytest.raises(ValueError):
        LensSpace(4, 2)


def test_graphs_equal():
    assert graphs_equal(linear_chain((2, 3)), linear_chain((3, 2)))
    assert not graphs_equal(chain_with_arrows((2, 3), (1, 0)), linear_chain((2, 3)))
    assert graphs_equal(linear_chain((1, 2, 1)), linear_chain((1, 2, 1)))
    assert graphs_equal(chain_with_arrows((1, 2), (0, 1)), chain_with_arrows((2, 1), (1, 0)))
    with pytest.raises(PlumbingError):
        graphs_equal(PlumbingGraph({0: 1, 1: 1, 2: 1, 3: 1}, [(0, 1), (0, 2), (0, 3)]), linear_chain((1,)))


def _same(r1, r2):
    if isinstance(r1, LensSpace) and isinstance(r2, LensSpace):
        return r1.same_oriented(r2)
    return r1 == r2


small_chains = st.lists(st.integers(-3, 3), min_size=1, max_size=6)


@settings(max_examples=400)
@given(small_chains, st.data())
def test_moves_preserve_recognised_manifold(w, data):
    G = linear_chain(w)
    moves = eligible_moves(G)
    if not moves:
        return
    kind, v = data.draw(st.sampled_from(moves))
    H = (blow_down_once if kind == "blow_down" else absorb_zero_once)(G, v)
    before, after = recognize_lens(G), recognize_lens(H)
    if not isinstance(before, NotRecognized) and not isinstance(after, NotRecognized):
        assert _same(before, after)


@settings(max_examples=300)
@given(small_chains, st.integers(0, 2**32))
def test_random_order_fixed_points_present_same_manifold(w, seed):
    greedy = recognize_lens(reduce(linear_chain(w)))
    other = recognize_lens(reduce(linear_chain(w), random.Random(seed)))
    if not isinstance(greedy, NotRecognized) and not isinstance(other, NotRecognized):
        assert _same(greedy, other)


def test_reduce_is_not_confluent_on_small_chains():
    # (1,1,1): blowing down the middle vertex first strands two 0-leaves
    G = linear_chain((1, 1, 1))
    assert weights(reduce(G)) == (-1,)
    assert weights(blow_down_once(G, 1)) == (0, 0)
    assert not eligible_moves(blow_down_once(G, 1))
