from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from setlab.cards import (
    Deck, build_set_hypergraph, enumerate_sets, full_deck, is_generalized_set, is_set, third_card,
)
from setlab.errors import DimensionError, PreconditionError

from strategies import decks

cards = st.integers(1, 6).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(0, 2), min_size=n, max_size=n).map(tuple)] * 2)
)


def scan(deck):
    return [t for t in combinations(range(len(deck)), 3) if is_set(*(deck.cards[i] for i in t))]


@pytest.mark.parametrize("a,b,c,expected", [
    ((0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2), True),
    ((0, 0), (0, 1), (0, 2), True),
    ((0, 0), (0, 1), (1, 2), False),
])
def test_is_set_examples(a, b, c, expected):
    assert is_set(a, b, c) is expected


def test_is_set_rejects_bad_input():
    with pytest.raises(DimensionError):
        is_set((0, 1), (1, 1), (2,))
    with pytest.raises(PreconditionError):
        is_set((0, 1), (0, 1), (0, 1))


@pytest.mark.parametrize("a,b,c", [
    ((0, 1), (1, 1), (2, 1)),
    ((0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2)),
    ((2, 0), (2, 1), (2, 2)),
])
def test_third_card_examples(a, b, c):
    assert third_card(a, b) == c


def test_third_card_needs_two_cards():
    with pytest.raises(PreconditionError):
        third_card((1, 2), (1, 2))


@given(cards)
def test_third_card_completes_a_set(pair):
    a, b = pair
    if a == b:
        return
    c = third_card(a, b)
    assert c not in (a, b)
    assert is_set(a, b, c)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 12), (3, 117)])
def test_full_deck_counts(n, count):
    deck = full_deck(n)
    assert len(enumerate_sets(deck)) == count == 3 ** n * (3 ** n - 1) // 6
    assert enumerate_sets(deck) == scan(deck)


def test_hypergraph_of_deck():
    H = build_set_hypergraph(full_deck(2))
    assert (H.num_vertices, len(H.edges)) == (9, 12)
    H = build_set_hypergraph(Deck(2, ((0, 0), (1, 1), (2, 2))))
    assert H.edges == ((0, 1, 2),)
    assert build_set_hypergraph(Deck(2, ((0, 0), (0, 1), (1, 0)))).edges == ()


def test_deck_validation():
    with pytest.raises(PreconditionError):
        Deck(2, ((0, 1), (0, 1)))
    with pytest.raises(DimensionError):
        Deck(2, ((0, 1, 2),))
    with pytest.raises(PreconditionError):
        Deck(1, ((3,),))


@settings(max_examples=60)
@given(decks(max_n=4, max_m=16))
def test_enumeration_matches_scan(deck):
    found = enumerate_sets(deck)
    assert found == scan(deck)
    assert found == sorted(set(found))


@settings(max_examples=40)
@given(decks(max_n=3, max_m=12), st.randoms(use_true_random=False))
def test_enumeration_ignores_card_order(deck, rnd):
    order = list(range(len(deck)))
    rnd.shuffle(order)
    shuffled = Deck(deck.n, tuple(deck.cards[i] for i in order))
    as_values = lambda d: {frozenset(d.cards[i] for i in t) for t in enumerate_sets(d)}
    assert as_values(deck) == as_values(shuffled)


@pytest.mark.parametrize("rows,expected", [
    (((0, 0), (0, 1), (0, 2)), True),
    (((0, 0), (1, 1), (2, 2)), True),
    (((0, 0), (0, 1), (1, 2)), False),
])
def test_generalized_set_examples(rows, expected):
    assert is_generalized_set(rows, 3) is expected


def test_generalized_set_wrong_count():
    with pytest.raises(PreconditionError):
        is_generalized_set([(0,), (1,)], 3)


def test_generalized_set_agrees_with_sum_zero():
    cards = full_deck(2).cards
    for trio in combinations(cards, 3):
        assert is_generalized_set(trio, 3) == is_set(*trio)
    # order of the cards is irrelevant
    for trio in permutations(cards[:3]):
        assert is_generalized_set(trio, 3) == is_set(*trio)
