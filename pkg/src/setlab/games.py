"""The two-player Set game bounded by a number of moves, decided either by
plain game-tree search or through a kernel: an ordered Node Kayles instance
on L = r + 1 levels, shrunk by the last-level collapse and the equivalence
rule. Also Arc Kayles via vertex cover and twin-class truncation.

Throughout, WIN-WITHIN(H, r) means player 1 can force player 2 to be the first
player unable to move, after at most r moves in total.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cards import Deck, build_set_hypergraph
from .errors import PreconditionError
from .hypergraph import Hypergraph3, SimpleGraph, min_hitting_set, min_vertex_cover
from .oracles import GameState, NormalPlaySolver, oracle_game_winner, oracle_win_within


@dataclass(frozen=True)
class OrderedKaylesGraph:
    """An L-partite graph whose turn-i move must come from level i.

    Vertex ``v`` lives on ``level[v]`` (1-based), stems from hyperedge
    ``source[v]`` and carries ``colors[v]``, the 1-based positions of the
    hitting-set vertices its hyperedge contains.
    """

    num_levels: int
    level: tuple[int, ...]
    source: tuple[int, ...]
    colors: tuple[frozenset[int], ...]
    adj: tuple[frozenset[int], ...]
    hitting_set_size: int

    @property
    def num_vertices(self) -> int:
        return len(self.level)

    def levels(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_levels + 1)]
        for v, lv in enumerate(self.level):
            out[lv].append(v)
        return out

    def level_sizes(self) -> list[int]:
        return [len(vs) for vs in self.levels()[1:]]

    def rebuild(self, keep: Sequence[int], added: Sequence[tuple[int, int, frozenset[int], set[int]]] = ()) -> "OrderedKaylesGraph":
        """Keep the vertices ``keep`` and append ``added`` ones.

        Each added vertex is ``(level, source, colors, neighbours)`` with the
        neighbours given as old vertex ids; the edges are made symmetric.
        """
        new_id = {old: i for i, old in enumerate(keep)}
        level = [self.level[v] for v in keep]
        source = [self.source[v] for v in keep]
        colors = [self.colors[v] for v in keep]
        adj = [{new_id[u] for u in self.adj[v] if u in new_id} for v in keep]
        for lv, src, cols, nbrs in added:
            me = len(level)
            level.append(lv)
            source.append(src)
            colors.append(cols)
            mine = {new_id[u] for u in nbrs if u in new_id}
            adj.append(mine)
            for u in mine:
                adj[u].add(me)
        return OrderedKaylesGraph(
            self.num_levels,
            tuple(level),
            tuple(source),
            tuple(colors),
            tuple(frozenset(a) for a in adj),
            self.hitting_set_size,
        )


@dataclass
class KernelReport:
    original_sizes: list[int] = field(default_factory=list)
    final_sizes: list[int] = field(default_factory=list)
    events: list[str] = field(default_factory=list)
    hitting_set: Optional[tuple[int, ...]] = None

    def render(self) -> str:
        lines = [
            f"hitting set: {' '.join(map(str, self.hitting_set)) if self.hitting_set is not None else 'none'}",
            f"level sizes before: {' '.join(map(str, self.original_sizes))}",
            f"level sizes after: {' '.join(map(str, self.final_sizes))}",
        ]
        lines.extend(f"rule: {e}" for e in self.events)
        return "\n".join(lines)


def build_ordered_kayles(H: Hypergraph3, L: int, hs: Sequence[int]) -> OrderedKaylesGraph:
    """``L`` copies of every hyperedge, one per level.

    Copies ``e_i`` and ``f_j`` (``i != j``) are adjacent when ``e`` and ``f``
    share a vertex, which includes ``e == f``: a Set cannot be taken twice.
    """
    if L < 1:
        raise PreconditionError("need at least one level")
    hs_pos = {h: i + 1 for i, h in enumerate(hs)}
    edge_colors = []
    for e in H.edges:
        cols = frozenset(hs_pos[v] for v in e if v in hs_pos)
        if not cols:
            raise PreconditionError(f"{tuple(hs)} is not a hitting set: edge {e} is missed")
        edge_colors.append(cols)

    E = len(H.edges)
    touching: list[list[int]] = [[] for _ in range(E)]
    by_vertex: dict[int, list[int]] = defaultdict(list)
    for idx, e in enumerate(H.edges):
        for v in e:
            by_vertex[v].append(idx)
    for idx, e in enumerate(H.edges):
        touching[idx] = sorted({f for v in e for f in by_vertex[v]})

    level, source, colors, adj = [], [], [], []
    for lv in range(1, L + 1):
        for idx in range(E):
            level.append(lv)
            source.append(idx)
            colors.append(edge_colors[idx])
            adj.append(frozenset(
                (other - 1) * E + f for f in touching[idx] for other in range(1, L + 1) if other != lv
            ))
    return OrderedKaylesGraph(L, tuple(level), tuple(source), tuple(colors), tuple(adj), len(hs))


def collapse_last_level(G: OrderedKaylesGraph, report: Optional[KernelReport] = None) -> OrderedKaylesGraph:
    """Replace each big single-colour class of the last level by one vertex.

    If the last-level vertices coloured only ``c`` number at least ``2L``, one
    of them is playable on the last move exactly when no colour-``c`` vertex
    was played before, so a single vertex adjacent to every colour-``c``
    vertex of the other levels is equivalent.
    """
    L = G.num_levels
    classes: dict[int, list[int]] = defaultdict(list)
    for v in G.levels()[L]:
        if len(G.colors[v]) == 1:
            classes[next(iter(G.colors[v]))].append(v)
    doomed: set[int] = set()
    added = []
    for c in sorted(classes):
        members = classes[c]
        if len(members) < 2 * L:
            continue
        doomed.update(members)
        nbrs = {u for u in range(G.num_vertices) if G.level[u] != L and c in G.colors[u]}
        added.append((L, min(G.source[v] for v in members), frozenset({c}), nbrs))
        if report is not None:
            report.events.append(f"collapse level {L} colour {c}: {len(members)} -> 1")
    if not added:
        return G
    keep = [v for v in range(G.num_vertices) if v not in doomed]
    return G.rebuild(keep, added)


def merge_equivalent(G: OrderedKaylesGraph, level: int, report: Optional[KernelReport] = None) -> OrderedKaylesGraph:
    """Shrink classes of equivalent vertices on ``level``.

    Vertices are equivalent when they carry the same colours and see the same
    neighbours on all higher levels: once one of them is playable, which one is
    played does not matter for the rest of the game. Within a class, vertices
    that also agree on lower levels are merged outright. A single-colour class
    is then cut down to ``2 * level - 1`` members: each of the ``level - 1``
    earlier moves either shares the colour (and blocks the whole class) or
    blocks at most two members, so the survivors stay playable exactly when
    some original member was. Representatives are the lowest source ids.
    """
    if not 1 <= level <= G.num_levels:
        raise PreconditionError(f"level {level} out of range")
    members = G.levels()[level]
    higher = [frozenset(u for u in G.adj[v] if G.level[u] > level) for v in members]
    classes: dict[tuple, list[int]] = defaultdict(list)
    for v, up in zip(members, higher):
        classes[G.colors[v], up].append(v)

    keep_at_level: list[int] = []
    for (cols, _), cls in sorted(classes.items(), key=lambda item: min(G.source[v] for v in item[1])):
        cls = sorted(cls, key=lambda v: (G.source[v], v))
        distinct: dict[frozenset[int], int] = {}
        for v in cls:
            distinct.setdefault(G.adj[v], v)
        reps = sorted(distinct.values(), key=lambda v: (G.source[v], v))
        limit = 2 * level - 1
        if len(cols) == 1 and len(reps) > limit:
            reps = reps[:limit]
        if report is not None and len(reps) < len(cls):
            report.events.append(
                f"merge level {level} colours {','.join(map(str, sorted(cols)))}: {len(cls)} -> {len(reps)}"
            )
        keep_at_level.extend(reps)

    if len(keep_at_level) == len(members):
        return G
    kept = set(keep_at_level)
    keep = [v for v in range(G.num_vertices) if G.level[v] != level or v in kept]
    return G.rebuild(keep)


def solve_ordered_kayles(G: OrderedKaylesGraph) -> bool:
    """Does player 1 force player 2 to be stuck on some even level?

    Level ``i`` is played by player 1 when ``i`` is odd. A play that fills all
    levels counts as a failure for player 1.
    """
    by_level = G.levels()
    adj_mask = [sum(1 << u for u in nbrs) for nbrs in G.adj]
    memo: dict[int, bool] = {}

    def win(lv: int, selected: int) -> bool:
        if lv > G.num_levels:
            return False
        if selected in memo:
            return memo[selected]
        options = [v for v in by_level[lv] if not adj_mask[v] & selected]
        if not options:
            result = lv % 2 == 0
        elif lv % 2 == 1:
            result = any(win(lv + 1, selected | (1 << v)) for v in options)
        else:
            result = all(win(lv + 1, selected | (1 << v)) for v in options)
        memo[selected] = result
        return result

    return win(1, 0)


def check_degree_claim(G: OrderedKaylesGraph) -> list[str]:
    """Violations of the degree bound: a vertex lacking colour ``c`` has at most
    two neighbours among the vertices coloured only ``c`` on any other level."""
    only: dict[tuple[int, int], set[int]] = defaultdict(set)
    for v in range(G.num_vertices):
        if len(G.colors[v]) == 1:
            only[G.level[v], next(iter(G.colors[v]))].add(v)
    problems = []
    for w in range(G.num_vertices):
        for (lv, c), cls in only.items():
            if lv != G.level[w] and c not in G.colors[w]:
                hits = len(G.adj[w] & cls)
                if hits > 2:
                    problems.append(f"vertex {w} has {hits} neighbours in level {lv} colour {c}")
    return problems


def check_color_structure(G: OrderedKaylesGraph) -> list[str]:
    problems = []
    for v in range(G.num_vertices):
        if not 1 <= len(G.colors[v]) <= 3:
            problems.append(f"vertex {v} has {len(G.colors[v])} colours")
    pairs: dict[tuple[int, int, int], int] = {}
    for v in range(G.num_vertices):
        cols = sorted(G.colors[v])
        for i in range(len(cols)):
            for j in range(i + 1, len(cols)):
                key = (G.level[v], cols[i], cols[j])
                if key in pairs:
                    problems.append(f"level {key[0]} has two vertices with colours {key[1]},{key[2]}")
                pairs[key] = v
    for v in range(G.num_vertices):
        for u in range(v + 1, G.num_vertices):
            if G.level[u] != G.level[v] and G.colors[u] & G.colors[v] and u not in G.adj[v]:
                problems.append(f"vertices {v} and {u} share a colour but are not adjacent")
    return problems


def kernelize(H: Hypergraph3, r: int, report: Optional[KernelReport] = None) -> Optional[OrderedKaylesGraph]:
    """The reduced ordered instance for WIN-WITHIN(H, r), or ``None`` when no
    hitting set of size at most 3r exists (then player 1 cannot win in time)."""
    hs = min_hitting_set(H, 3 * r)
    if report is not None:
        report.hitting_set = hs
    if hs is None:
        return None
    L = r + 1
    G = build_ordered_kayles(H, L, hs)
    if report is not None:
        report.original_sizes = G.level_sizes()
    G = collapse_last_level(G, report)
    for level in range(L - 1, 0, -1):
        G = merge_equivalent(G, level, report)
    if report is not None:
        report.final_sizes = G.level_sizes()
    return G


def solve_2p_within(deck: Deck, r: int, method: str = "kernel", report: Optional[KernelReport] = None) -> bool:
    if r < 1:
        raise PreconditionError("r must be at least 1")
    H = build_set_hypergraph(deck)
    if method == "brute":
        return oracle_win_within(GameState(H), r)
    if method != "kernel":
        raise PreconditionError(f"unknown method {method!r}")
    G = kernelize(H, r, report)
    return G is not None and solve_ordered_kayles(G)


def reduce_arc_kayles(G: SimpleGraph, cover: Sequence[int]) -> tuple[SimpleGraph, list[int]]:
    """Drop surplus twins outside the vertex cover.

    Vertices outside the cover with the same neighbourhood form a class; a
    class joined to ``t`` cover vertices can have at most ``t`` of its members
    played, and which ones does not matter, so ``t`` members are kept (the
    lowest-numbered). Returns the reduced graph and the kept original ids.
    """
    in_cover = set(cover)
    nbrs = G.neighbors()
    classes: dict[frozenset[int], list[int]] = defaultdict(list)
    for v in range(G.num_vertices):
        if v not in in_cover:
            classes[frozenset(nbrs[v])].append(v)
    keep = set(in_cover)
    for joined, members in classes.items():
        keep.update(sorted(members)[: len(joined)])
    kept = sorted(keep)
    new_id = {v: i for i, v in enumerate(kept)}
    edges = tuple((new_id[u], new_id[v]) for u, v in G.edges if u in new_id and v in new_id)
    return SimpleGraph(len(kept), edges), kept


def arc_kayles_within(G: SimpleGraph, r: int, method: str = "fpt") -> bool:
    if r < 1:
        raise PreconditionError("r must be at least 1")
    if method == "brute":
        return oracle_win_within(GameState(G), r)
    if method != "fpt":
        raise PreconditionError(f"unknown method {method!r}")
    cover = min_vertex_cover(G, 2 * r)
    if cover is None:
        return False
    reduced, _ = reduce_arc_kayles(G, cover)
    return oracle_win_within(GameState(reduced), r)


def solve_game_winner(deck: Deck) -> bool:
    """Unbounded normal play: does the first player win?"""
    return oracle_game_winner(GameState(build_set_hypergraph(deck)))


def engine_move(solver: NormalPlaySolver, removed: int) -> Optional[int]:
    """The engine's choice: the first winning move in Set order, else the first
    legal one; ``None`` when stuck."""
    legal = solver.legal(removed)
    for idx in legal:
        if not solver.mover_wins(removed | solver.masks[idx]):
            return idx
    return legal[0] if legal else None
