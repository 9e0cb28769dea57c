"""Min r-Set: the IEDS-to-cards reduction and the FPT independent edge
dominating set algorithm for 3-uniform hypergraphs."""

from __future__ import annotations

from typing import Optional

from .cards import Deck, SetTriple, build_set_hypergraph
from .errors import PreconditionError
from .hypergraph import Hypergraph3, SimpleGraph, enumerate_hitting_sets_7way, find_perfect_matching


def reduce_ieds_to_deck(G: SimpleGraph) -> Deck:
    """One unit card per vertex, and per edge (i, j) a card with 2 at i and j.

    Cards are listed vertices first, then edges in the graph's edge order, so
    the Set of edge number ``t`` is ``(i, j, |V| + t)``.
    """
    n = G.num_vertices
    if n == 0:
        raise PreconditionError("the reduction needs at least one vertex (cards need an attribute)")
    cards = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        cards.append(tuple(row))
    for i, j in G.edges:
        row = [0] * n
        row[i] = row[j] = 2
        cards.append(tuple(row))
    return Deck(n, tuple(cards))


def solve_ieds_fpt(H: Hypergraph3, r: int) -> tuple[bool, Optional[list[int]]]:
    """Is there an independent dominating set of exactly ``r`` edges?

    Its vertex set would be a hitting set of size exactly 3r, so every such
    hitting set is listed and the subhypergraph it induces is checked for a
    perfect matching. The witness is a list of edge indices of ``H``.
    """
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    if r == 0:
        return (True, []) if not H.edges else (False, None)
    for S in enumerate_hitting_sets_7way(H, 3 * r):
        sub, _, edge_map = H.induced(S)
        matching = find_perfect_matching(sub)
        if matching is not None:
            return True, sorted(edge_map[i] for i in matching)
    return False, None


def solve_min_ieds(H: Hypergraph3, r: int) -> tuple[bool, Optional[list[int]]]:
    """Smallest r' <= r admitting an independent dominating set of r' edges."""
    for size in range(r + 1):
        ok, witness = solve_ieds_fpt(H, size)
        if ok:
            return True, witness
    return False, None


def solve_min_rset(deck: Deck, r: int) -> tuple[bool, Optional[list[SetTriple]]]:
    """Can at most ``r`` disjoint Sets be removed so that no Set remains?

    The witness lists the removed Sets as card-index triples.
    """
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    H = build_set_hypergraph(deck)
    ok, witness = solve_min_ieds(H, r)
    if not ok:
        return False, None
    return True, [H.edges[i] for i in witness]
