import pytest
from hypothesis import given, settings

from setlab.cards import Deck, build_set_hypergraph, full_deck
from setlab.domination import reduce_ieds_to_deck
from setlab.errors import PreconditionError
from setlab.games import (
    KernelReport, OrderedKaylesGraph, arc_kayles_within, build_ordered_kayles, check_color_structure,
    check_degree_claim, collapse_last_level, engine_move, kernelize, merge_equivalent, reduce_arc_kayles,
    solve_2p_within, solve_game_winner, solve_ordered_kayles,
)
from setlab.hypergraph import Hypergraph3, SimpleGraph, min_hitting_set
from setlab.oracles import GameState, NormalPlaySolver, oracle_win_within

from strategies import decks, graphs

ONE_SET = Deck(1, ((0,), (1,), (2,)))
TWO_SETS = Deck(2, ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)))


def ordered(levels, colors, edges, L, s=3):
    adj = [set() for _ in levels]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return OrderedKaylesGraph(
        L, tuple(levels), tuple(range(len(levels))), tuple(frozenset(c) for c in colors),
        tuple(frozenset(a) for a in adj), s,
    )


def test_build_examples():
    one = Hypergraph3(3, ((0, 1, 2),))
    G = build_ordered_kayles(one, 2, (1,))
    assert G.num_vertices == 2 and G.adj[0] == {1}
    assert G.colors == (frozenset({1}), frozenset({1}))
    two = Hypergraph3(6, ((0, 1, 2), (3, 4, 5)))
    G = build_ordered_kayles(two, 2, (0, 3))
    assert G.num_vertices == 4
    assert [sorted(G.source[u] for u in G.adj[v]) for v in range(4)] == [[0], [1], [0], [1]]


def test_build_requires_hitting_set():
    with pytest.raises(PreconditionError):
        build_ordered_kayles(Hypergraph3(6, ((0, 1, 2), (3, 4, 5))), 2, (0,))


@settings(max_examples=40, deadline=None)
@given(decks(max_n=4, max_m=14))
def test_structure_claims_on_set_instances(deck):
    H = build_set_hypergraph(deck)
    hs = min_hitting_set(H, H.num_vertices)
    for L in (2, 3, 4):
        G = build_ordered_kayles(H, L, hs)
        assert check_degree_claim(G) == []
        assert check_color_structure(G) == []


def test_collapse_threshold():
    # L = 2: a colour-1 class of 2L - 1 = 3 stays, one of 2L = 4 collapses
    small = ordered([1, 2, 2, 2], [{2}, {1}, {1}, {1}], [], 2)
    assert collapse_last_level(small) is small
    big = ordered([1, 2, 2, 2, 2], [{1, 2}, {1}, {1}, {1}, {1}], [], 2)
    out = collapse_last_level(big)
    assert out.level_sizes() == [1, 1]
    assert out.adj[1] == {0}


def test_merge_same_colour_no_higher_neighbours():
    G = ordered([1, 1, 2], [{1}, {1}, {2}], [], 2)
    assert merge_equivalent(G, 1).level_sizes() == [1, 1]


def test_merge_keeps_different_colours():
    G = ordered([1, 1, 2], [{1}, {2}, {3}], [], 2)
    assert merge_equivalent(G, 1).level_sizes() == [2, 1]


def test_merge_does_not_fuse_partly_blocked_class():
    # a and b look alike from above, but only a is blocked by w; fusing them
    # would let player 1 block both with w
    w, a, b, z = range(4)
    G = ordered([1, 2, 2, 3], [{2}, {1}, {1}, {3}], [(w, a)], 3)
    assert not solve_ordered_kayles(G)
    reduced = merge_equivalent(G, 2)
    assert reduced.level_sizes() == [1, 2, 1]
    assert not solve_ordered_kayles(reduced)


def test_merge_truncates_large_class():
    # five colour-1 vertices on level 2, alike from above; each of the first
    # four is blocked by its own level-1 vertex, so no two fuse outright
    levels = [1] * 4 + [2] * 5 + [3]
    colors = [{2}, {3}, {2, 3}, {4}] + [{1}] * 5 + [{5}]
    G = ordered(levels, colors, [(i, 4 + i) for i in range(4)], 3, s=5)
    reduced = merge_equivalent(G, 2)
    assert reduced.level_sizes() == [4, 3, 1]
    assert solve_ordered_kayles(reduced) == solve_ordered_kayles(G)


def test_solve_ordered_examples():
    one = build_ordered_kayles(Hypergraph3(3, ((0, 1, 2),)), 2, (0,))
    assert solve_ordered_kayles(one)
    empty = OrderedKaylesGraph(2, (), (), (), (), 0)
    assert not solve_ordered_kayles(empty)
    two = Hypergraph3(6, ((0, 1, 2), (3, 4, 5)))
    assert not solve_ordered_kayles(build_ordered_kayles(two, 4, (0, 3)))


def test_2p_examples():
    assert solve_2p_within(ONE_SET, 1, "kernel")
    assert solve_2p_within(full_deck(1), 1, "brute")
    assert not solve_2p_within(TWO_SETS, 3, "kernel")
    with pytest.raises(PreconditionError):
        solve_2p_within(ONE_SET, 0)
    with pytest.raises(PreconditionError):
        solve_2p_within(ONE_SET, 1, "magic")


@settings(max_examples=40, deadline=None)
@given(decks(max_n=4, max_m=14))
def test_kernel_matches_brute(deck):
    for r in (1, 2, 3):
        assert solve_2p_within(deck, r, "kernel") == solve_2p_within(deck, r, "brute")


@settings(max_examples=30, deadline=None)
@given(decks(max_n=3, max_m=12))
def test_2p_monotone_in_r(deck):
    answers = [solve_2p_within(deck, r) for r in (1, 2, 3, 4)]
    assert all(not a or b for a, b in zip(answers, answers[1:]))


@settings(max_examples=30, deadline=None)
@given(decks(max_n=4, max_m=14))
def test_kernel_sizes_never_grow(deck):
    report = KernelReport()
    G = kernelize(build_set_hypergraph(deck), 2, report)
    if G is not None:
        assert all(a <= b for a, b in zip(report.final_sizes, report.original_sizes))
        assert check_degree_claim(G) == []


def test_arc_kayles_examples():
    edge = SimpleGraph(2, ((0, 1),))
    assert arc_kayles_within(edge, 1)
    disjoint = SimpleGraph(4, ((0, 1), (2, 3)))
    assert not any(arc_kayles_within(disjoint, r) for r in range(1, 5))
    path = SimpleGraph(3, ((0, 1), (1, 2)))
    assert arc_kayles_within(path, 1, "fpt") and arc_kayles_within(path, 1, "brute")


def test_arc_kayles_twin_truncation():
    # centre 0 with five leaves: the leaves form one class joined to 1 cover vertex
    star = SimpleGraph(6, tuple((0, v) for v in range(1, 6)))
    reduced, kept = reduce_arc_kayles(star, (0,))
    assert kept == [0, 1] and reduced.edges == ((0, 1),)


@settings(max_examples=50, deadline=None)
@given(graphs(max_v=9, max_e=12))
def test_arc_kayles_fpt_matches_brute(G):
    for r in (1, 2, 3):
        assert arc_kayles_within(G, r, "fpt") == arc_kayles_within(G, r, "brute")


@settings(max_examples=30, deadline=None)
@given(graphs(max_v=6, max_e=8))
def test_bridge_to_arc_kayles(G):
    if G.num_vertices == 0:
        return
    deck = reduce_ieds_to_deck(G)
    for r in (1, 2, 3):
        assert arc_kayles_within(G, r, "brute") == solve_2p_within(deck, r, "brute")


def test_game_winner_examples():
    assert solve_game_winner(ONE_SET)
    assert not solve_game_winner(Deck(1, ()))
    assert solve_game_winner(full_deck(2))


def test_engine_prefers_winning_move():
    solver = NormalPlaySolver(build_set_hypergraph(full_deck(2)))
    move = engine_move(solver, 0)
    assert not solver.mover_wins(solver.masks[move])
    solver = NormalPlaySolver(build_set_hypergraph(TWO_SETS))
    assert engine_move(solver, 0) == 0
    assert engine_move(solver, 0b111111) is None
