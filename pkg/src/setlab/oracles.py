"""Brute-force reference solvers.

Everything here is exhaustive and deliberately shares no search code with the
main solvers, so agreement between the two is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Optional

from .cnf import CnfFormula
from .errors import CapacityError
from .hypergraph import Hypergraph3, SimpleGraph, is_independent_dominating_edge_set

if TYPE_CHECKING:
    from .pmdm import PmdmInstance

SAT_GUARD = 25


@dataclass(frozen=True)
class GameState:
    """A position of the Set-removal game.

    ``host`` is a Hypergraph3 (2-player Set) or a SimpleGraph (Arc Kayles); a
    move removes the endpoints of one edge none of whose endpoints is removed.
    """

    host: Hypergraph3 | SimpleGraph
    removed: int = 0
    moves_made: int = 0


def oracle_max_packing(H: Hypergraph3) -> tuple[int, list[int]]:
    """Maximum number of pairwise disjoint edges, with a witness (edge indices).

    Tries k = (star bound), k-1, ... and returns the first k for which an
    include/exclude search finds k disjoint edges. Candidate edges are a
    bitmask. Edges through a common vertex pairwise conflict, so covering the
    candidates by stars (hubs scanned in a fixed order: high degree first,
    then high index) bounds how many more edges fit. The branching edge comes
    from the smallest star, so excluding a forced edge is refuted at once.
    Failed (candidates, need) pairs are remembered across branches and k.
    """
    edges = H.edges
    conflict = []
    incident = [0] * H.num_vertices
    for idx, e in enumerate(edges):
        for v in e:
            incident[v] |= 1 << idx
    for e in edges:
        conflict.append(incident[e[0]] | incident[e[1]] | incident[e[2]])
    hubs = sorted(range(H.num_vertices), key=lambda v: (-incident[v].bit_count(), -v))

    def stars(cands: int) -> tuple[int, int]:
        count, smallest, smallest_size = 0, 0, None
        for v in hubs:
            star = incident[v] & cands
            if star:
                count += 1
                size = star.bit_count()
                if smallest_size is None or size < smallest_size:
                    smallest, smallest_size = star, size
                cands &= ~star
                if not cands:
                    break
        return count, smallest

    failed: dict[int, int] = {}

    def reach(cands: int, chosen: list[int], need: int) -> bool:
        if need == 0:
            return True
        if failed.get(cands, need + 1) <= need:
            return False
        count, smallest = stars(cands)
        if count >= need:
            first = (smallest & -smallest).bit_length() - 1
            chosen.append(first)
            if reach(cands & ~conflict[first], chosen, need - 1):
                return True
            chosen.pop()
            if reach(cands & ~(1 << first), chosen, need):
                return True
        failed[cands] = need
        return False

    everything = (1 << len(edges)) - 1
    for k in range(stars(everything)[0], -1, -1):
        chosen: list[int] = []
        if reach(everything, chosen, k):
            return k, sorted(chosen)
    raise AssertionError("unreachable: the empty packing always exists")


def oracle_min_ieds(H: Hypergraph3) -> tuple[int, list[int]]:
    """Minimum independent edge dominating set by scanning edge subsets by size."""
    for size in range(len(H.edges) + 1):
        for picked in combinations(range(len(H.edges)), size):
            if is_independent_dominating_edge_set(H, picked):
                return size, list(picked)
    raise AssertionError("unreachable: a maximal matching always dominates")


def oracle_min_ieds_graph(G: SimpleGraph) -> tuple[int, list[int]]:
    """Minimum maximal matching of a simple graph (= minimum IEDS)."""
    n_edges = len(G.edges)
    best: list = [n_edges + 1, []]

    def extend(start: int, used: set[int], picked: list[int]) -> None:
        addable = [i for i in range(n_edges) if not used.intersection(G.edges[i])]
        if not addable:
            if len(picked) < best[0]:
                best[0], best[1] = len(picked), list(picked)
            return
        for i in addable:
            if i >= start:
                u, v = G.edges[i]
                picked.append(i)
                extend(i + 1, used | {u, v}, picked)
                picked.pop()

    extend(0, set(), [])
    return best[0], best[1]


def _edge_masks(host: Hypergraph3 | SimpleGraph) -> list[int]:
    return [sum(1 << v for v in e) for e in host.edges]


def oracle_win_within(state: GameState, r: int) -> bool:
    """WIN-WITHIN: can player 1 force player 2 to be stuck after at most ``r`` moves?

    At a position with ``t`` moves made the mover is player ``t % 2 + 1``. A
    stuck mover loses; otherwise a position with ``t == r`` is a failure for
    player 1. The stuck test comes first, so a win on the r-th move counts.
    """
    masks = _edge_masks(state.host)
    memo: dict[int, bool] = {}

    def win(removed: int, t: int) -> bool:
        if removed in memo:
            return memo[removed]
        moves = [m for m in masks if not m & removed]
        if not moves:
            result = t % 2 == 1
        elif t == r:
            result = False
        elif t % 2 == 0:
            result = any(win(removed | m, t + 1) for m in moves)
        else:
            result = all(win(removed | m, t + 1) for m in moves)
        memo[removed] = result
        return result

    return win(state.removed, state.moves_made)


class NormalPlaySolver:
    """Unbounded normal play: the player unable to move loses."""

    def __init__(self, host: Hypergraph3 | SimpleGraph):
        self.host = host
        self.masks = _edge_masks(host)
        self.memo: dict[int, bool] = {}

    def legal(self, removed: int) -> list[int]:
        return [i for i, m in enumerate(self.masks) if not m & removed]

    def mover_wins(self, removed: int) -> bool:
        if removed not in self.memo:
            self.memo[removed] = any(
                not self.mover_wins(removed | self.masks[i]) for i in self.legal(removed)
            )
        return self.memo[removed]


def oracle_game_winner(state: GameState) -> bool:
    """True iff the player to move at ``state`` (player 1 at the start) wins."""
    return NormalPlaySolver(state.host).mover_wins(state.removed)


def oracle_sat(F: CnfFormula) -> Optional[tuple[bool, ...]]:
    """First satisfying assignment in lexicographic order (False < True), or None.

    Walks the full assignment tree variable by variable; a branch is abandoned
    as soon as a clause whose variables are all assigned is false, which skips
    only subtrees containing no model.
    """
    if F.num_vars > SAT_GUARD:
        raise CapacityError(f"oracle_sat handles at most {SAT_GUARD} variables, got {F.num_vars}")
    if any(not c for c in F.clauses):
        return None
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(F.num_vars + 1)]
    for c in F.clauses:
        closing[max(abs(l) for l in c)].append(c)
    values: list[bool] = []

    def extend(v: int) -> bool:
        if v > F.num_vars:
            return True
        for choice in (False, True):
            values.append(choice)
            if all(any(values[abs(l) - 1] == (l > 0) for l in c) for c in closing[v]) and extend(v + 1):
                return True
            values.pop()
        return False

    return tuple(values) if extend(1) else None


def oracle_pmdm(M: "PmdmInstance") -> Optional[list[int]]:
    """A perfect multidimensional matching as sorted multiedge indices, or None.

    Exact cover over (dimension, value) slots, always branching on the first
    uncovered slot.
    """
    dims, values = M.dims, M.values
    used = [[False] * values for _ in range(dims)]
    picked: list[int] = []
    by_slot: dict[tuple[int, int], list[int]] = {}
    for idx, tup in enumerate(M.multiedges):
        for d, v in enumerate(tup):
            by_slot.setdefault((d, v), []).append(idx)

    def solve() -> bool:
        slot = next(((d, v) for d in range(dims) for v in range(values) if not used[d][v]), None)
        if slot is None:
            return True
        for idx in by_slot.get(slot, []):
            tup = M.multiedges[idx]
            if any(used[d][v] for d, v in enumerate(tup)):
                continue
            for d, v in enumerate(tup):
                used[d][v] = True
            picked.append(idx)
            if solve():
                return True
            picked.pop()
            for d, v in enumerate(tup):
                used[d][v] = False
        return False

    return sorted(picked) if solve() else None
