"""Graph and 3-uniform hypergraph containers plus the branching primitives
the solvers are built on: hitting sets, vertex covers, perfect matchings and
independent edge domination checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import PreconditionError

Edge = tuple[int, ...]
VertexSet = tuple[int, ...]


def _normalize_edges(num_vertices: int, edges: Iterable[Iterable[int]], arity: int) -> tuple[Edge, ...]:
    seen = set()
    out = []
    for raw in edges:
        e = tuple(sorted(int(v) for v in raw))
        if len(e) != arity or len(set(e)) != arity:
            raise PreconditionError(f"edge {raw!r} must have {arity} distinct endpoints")
        if e[0] < 0 or e[-1] >= num_vertices:
            raise PreconditionError(f"edge {raw!r} out of range for {num_vertices} vertices")
        if e in seen:
            raise PreconditionError(f"duplicate edge {e}")
        seen.add(e)
        out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph3:
    """Vertices ``0..num_vertices-1`` and size-3 hyperedges.

    Each edge is stored as a sorted triple; the edge order given at construction
    is kept, since edge indices are part of the public surface (witnesses,
    tie-breaks).
    """

    num_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.num_vertices < 0:
            raise PreconditionError("num_vertices must be nonnegative")
        object.__setattr__(self, "edges", _normalize_edges(self.num_vertices, self.edges, 3))

    def edge_masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]

    def induced(self, vertices: Iterable[int]) -> tuple["Hypergraph3", list[int], list[int]]:
        """Subhypergraph on ``vertices`` keeping edges with all endpoints inside.

        Returns ``(sub, vertex_map, edge_map)`` where ``vertex_map[i]`` and
        ``edge_map[j]`` give the original index of sub-vertex ``i`` / sub-edge ``j``.
        """
        vmap = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vmap)}
        sub_edges, emap = [], []
        for idx, e in enumerate(self.edges):
            if all(v in pos for v in e):
                sub_edges.append(tuple(pos[v] for v in e))
                emap.append(idx)
        return Hypergraph3(len(vmap), tuple(sub_edges)), vmap, emap


@dataclass(frozen=True)
class SimpleGraph:
    num_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.num_vertices < 0:
            raise PreconditionError("num_vertices must be nonnegative")
        object.__setattr__(self, "edges", _normalize_edges(self.num_vertices, self.edges, 2))

    def neighbors(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def _first_uncovered(edges: Sequence[Edge], chosen) -> Optional[Edge]:
    for e in edges:
        if not any(v in chosen for v in e):
            return e
    return None


def enumerate_hitting_sets_7way(H: Hypergraph3, target: int) -> list[VertexSet]:
    """All hitting sets of ``H`` with exactly ``target`` vertices.

    Branches on the lowest-index uncovered edge, adding each of the 7 nonempty
    subsets of its vertices, and prunes once the set outgrows ``target``. A
    branch that hits every edge while still smaller than ``target`` is padded
    with every combination of further vertices, so each size-``target``
    hitting set is produced (the bare branching would stop short of supersets
    of an already-covering set).
    """
    if target < 0:
        raise PreconditionError("target must be nonnegative")
    found: set[VertexSet] = set()
    visited: set[frozenset[int]] = set()
    all_vertices = range(H.num_vertices)

    def branch(chosen: frozenset[int]) -> None:
        if len(chosen) > target or chosen in visited:
            return
        visited.add(chosen)
        e = _first_uncovered(H.edges, chosen)
        if e is None:
            rest = [v for v in all_vertices if v not in chosen]
            for extra in combinations(rest, target - len(chosen)):
                found.add(tuple(sorted(chosen.union(extra))))
            return
        if len(chosen) == target:
            return
        for size in (1, 2, 3):
            for subset in combinations(e, size):
                branch(chosen.union(subset))

    branch(frozenset())
    return sorted(found)


def min_hitting_set(H: Hypergraph3, bound: int) -> Optional[VertexSet]:
    """A smallest hitting set of size at most ``bound``, or ``None``.

    Plain 3-way branching on an uncovered edge with iterative deepening, so the
    first set found is also minimum.
    """
    if bound < 0:
        raise PreconditionError("bound must be nonnegative")

    def search(chosen: frozenset[int], budget: int) -> Optional[frozenset[int]]:
        e = _first_uncovered(H.edges, chosen)
        if e is None:
            return chosen
        if budget == 0:
            return None
        for v in e:
            hit = search(chosen | {v}, budget - 1)
            if hit is not None:
                return hit
        return None

    for k in range(bound + 1):
        hit = search(frozenset(), k)
        if hit is not None:
            return tuple(sorted(hit))
    return None


def find_perfect_matching(H: Hypergraph3) -> Optional[list[int]]:
    """Edge indices of a perfect matching of ``H`` or ``None``."""
    n = H.num_vertices
    if n % 3:
        return None
    incident: list[list[int]] = [[] for _ in range(n)]
    for idx, e in enumerate(H.edges):
        for v in e:
            incident[v].append(idx)
    covered = [False] * n
    picked: list[int] = []

    def solve(start: int) -> bool:
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            return True
        for idx in incident[v]:
            e = H.edges[idx]
            if any(covered[u] for u in e):
                continue
            for u in e:
                covered[u] = True
            picked.append(idx)
            if solve(v + 1):
                return True
            picked.pop()
            for u in e:
                covered[u] = False
        return False

    return sorted(picked) if solve(0) else None


def has_perfect_matching(H: Hypergraph3) -> bool:
    return find_perfect_matching(H) is not None


def min_vertex_cover(G: SimpleGraph, bound: int) -> Optional[VertexSet]:
    """A smallest vertex cover of size at most ``bound``, or ``None``."""
    if bound < 0:
        raise PreconditionError("bound must be nonnegative")

    def search(chosen: frozenset[int], budget: int) -> Optional[frozenset[int]]:
        e = _first_uncovered(G.edges, chosen)
        if e is None:
            return chosen
        if budget == 0:
            return None
        for v in e:
            cover = search(chosen | {v}, budget - 1)
            if cover is not None:
                return cover
        return None

    for k in range(bound + 1):
        cover = search(frozenset(), k)
        if cover is not None:
            return tuple(sorted(cover))
    return None


def is_independent_dominating_edge_set(H: Hypergraph3 | SimpleGraph, picked: Sequence[int]) -> bool:
    """True iff the picked edges are pairwise disjoint and touch every edge."""
    if len(set(picked)) != len(picked):
        return False
    used: set[int] = set()
    for idx in picked:
        if not 0 <= idx < len(H.edges):
            raise PreconditionError(f"edge index {idx} out of range")
        e = H.edges[idx]
        if used.intersection(e):
            return False
        used.update(e)
    return all(used.intersection(e) for e in H.edges)
