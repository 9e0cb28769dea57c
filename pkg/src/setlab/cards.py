"""Cards as vectors over {0,1,2} and the Sets they form.

Three distinct cards form a Set exactly when their vectors sum to zero
componentwise mod 3, which is the same as every attribute being all-equal or
all-different.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DimensionError, PreconditionError
from .hypergraph import Hypergraph3

Card = tuple[int, ...]
SetTriple = tuple[int, int, int]


def as_card(values: Sequence[int]) -> Card:
    card = tuple(int(v) for v in values)
    if not card:
        raise PreconditionError("a card needs at least one attribute")
    if any(v not in (0, 1, 2) for v in card):
        raise PreconditionError(f"card {card} has an entry outside {{0,1,2}}")
    return card


@dataclass(frozen=True)
class Deck:
    """An ordered collection of distinct cards with ``n`` attributes each."""

    n: int
    cards: tuple[Card, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("a deck needs n >= 1 attributes")
        cards = tuple(as_card(c) for c in self.cards)
        for c in cards:
            if len(c) != self.n:
                raise DimensionError(f"card {c} has length {len(c)}, deck declares {self.n}")
        if len(set(cards)) != len(cards):
            raise PreconditionError("deck contains duplicate cards")
        object.__setattr__(self, "cards", cards)

    def __len__(self) -> int:
        return len(self.cards)

    def index(self) -> dict[Card, int]:
        return {c: i for i, c in enumerate(self.cards)}


def _check_same_length(*cards: Card) -> None:
    if len({len(c) for c in cards}) != 1:
        raise DimensionError("cards have different lengths")


def is_set(a: Card, b: Card, c: Card) -> bool:
    _check_same_length(a, b, c)
    if a == b or a == c or b == c:
        raise PreconditionError("a Set needs three distinct cards")
    return all((x + y + z) % 3 == 0 for x, y, z in zip(a, b, c))


def third_card(a: Card, b: Card) -> Card:
    """The unique card completing a Set with ``a`` and ``b``."""
    _check_same_length(a, b)
    if a == b:
        raise PreconditionError("third_card needs two distinct cards")
    return tuple((-x - y) % 3 for x, y in zip(a, b))


def _bitsliced(card: Card) -> tuple[int, int]:
    ones = twos = 0
    for pos, v in enumerate(card):
        if v == 1:
            ones |= 1 << pos
        elif v == 2:
            twos |= 1 << pos
    return ones, twos


def enumerate_sets(deck: Deck) -> list[SetTriple]:
    """Every Set of the deck as a sorted index triple, in lexicographic order.

    Quadratic: for each pair the third card is computed and looked up. Cards
    are bit-sliced into (positions equal to 1, positions equal to 2) so the
    third card costs a few word operations instead of a pass over the vector.
    """
    sliced = [_bitsliced(c) for c in deck.cards]
    where = {s: i for i, s in enumerate(sliced)}
    full = (1 << deck.n) - 1
    found = []
    for i, (p1, q1) in enumerate(sliced):
        z1 = full & ~(p1 | q1)
        for j in range(i + 1, len(sliced)):
            p2, q2 = sliced[j]
            z2 = full & ~(p2 | q2)
            # -(x+y) mod 3 is 1 for (1,1), (0,2), (2,0) and 2 for (2,2), (0,1), (1,0)
            third = ((p1 & p2) | (z1 & q2) | (q1 & z2), (q1 & q2) | (z1 & p2) | (p1 & z2))
            k = where.get(third)
            if k is not None and k > j:
                found.append((i, j, k))
    return found


def build_set_hypergraph(deck: Deck) -> Hypergraph3:
    return Hypergraph3(len(deck), tuple(enumerate_sets(deck)))


def is_generalized_set(cards: Sequence[Sequence[int]], k: int) -> bool:
    """k cards over the alphabet {0..k-1}: every attribute all-equal or all-distinct."""
    if len(cards) != k:
        raise PreconditionError(f"expected exactly {k} cards, got {len(cards)}")
    rows = [tuple(c) for c in cards]
    _check_same_length(*rows)
    if any(v < 0 or v >= k for row in rows for v in row):
        raise PreconditionError(f"card entries must lie in 0..{k - 1}")
    if len(set(rows)) != k:
        raise PreconditionError("cards must be pairwise distinct")
    for column in zip(*rows):
        distinct = len(set(column))
        if distinct != 1 and distinct != k:
            return False
    return True


def full_deck(n: int) -> Deck:
    """All 3**n cards, in lexicographic order."""
    return Deck(n, tuple(product((0, 1, 2), repeat=n)))
