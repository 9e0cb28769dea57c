"""Multicolored clique to perfect multi-dimensional matching, and back."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .cards import is_generalized_set
from .errors import CapacityError, PreconditionError

Vertex = tuple[int, int]  # (part, index within part)

COROLLARY_MAX_EDGES = 10
COROLLARY_MAX_VALUES = 6


@dataclass(frozen=True)
class KPartiteGraph:
    k: int
    n: int
    edges: tuple[tuple[Vertex, Vertex], ...] = ()

    def __post_init__(self):
        if self.k < 1 or self.n < 0:
            raise PreconditionError("need k >= 1 parts and n >= 0 vertices per part")
        seen = set()
        norm = []
        for a, b in self.edges:
            a, b = tuple(a), tuple(b)
            for part, idx in (a, b):
                if not (0 <= part < self.k and 0 <= idx < self.n):
                    raise PreconditionError(f"vertex {(part, idx)} out of range")
            if a[0] == b[0]:
                raise PreconditionError(f"edge {a}-{b} lies inside part {a[0]}")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise PreconditionError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    def adjacent(self, a: Vertex, b: Vertex) -> bool:
        return ((a, b) if a < b else (b, a)) in set(self.edges)


@dataclass(frozen=True)
class PmdmInstance:
    """Multiedges are value tuples of length ``dims``; duplicates are allowed.

    ``provenance[i]`` is ``("vertex", part, idx)`` or
    ``("edge", part_a, idx_a, part_b, idx_b)`` for constructed instances.
    """

    dims: int
    values: int
    multiedges: tuple[tuple[int, ...], ...] = ()
    provenance: Optional[tuple[tuple, ...]] = None

    def __post_init__(self):
        if self.dims < 1:
            raise PreconditionError("dims must be at least 1")
        if self.values < 1:
            raise PreconditionError("values must be at least 1")
        edges = tuple(tuple(int(x) for x in t) for t in self.multiedges)
        for t in edges:
            if len(t) != self.dims:
                raise PreconditionError(f"multiedge {t} does not have {self.dims} entries")
            if any(not 0 <= x < self.values for x in t):
                raise PreconditionError(f"multiedge {t} has a value outside 0..{self.values - 1}")
        object.__setattr__(self, "multiedges", edges)
        if self.provenance is not None:
            prov = tuple(tuple(p) for p in self.provenance)
            if len(prov) != len(edges):
                raise PreconditionError("provenance must have one entry per multiedge")
            object.__setattr__(self, "provenance", prov)

    def is_perfect_matching(self, picked: Sequence[int]) -> bool:
        if len(set(picked)) != len(picked) or len(picked) != self.values:
            return False
        if any(not 0 <= i < len(self.multiedges) for i in picked):
            return False
        return all(
            len({self.multiedges[i][d] for i in picked}) == self.values for d in range(self.dims)
        )


def pair_label(k: int, i: int, j: int) -> int:
    """Value used for the unordered pair {i, j}: k + its rank in lexicographic order."""
    a, b = min(i, j), max(i, j)
    return k + list(combinations(range(k), 2)).index((a, b))


def group_order(k: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(k) if i != j]


def build_mcc_to_pmdm(G: KPartiteGraph) -> PmdmInstance:
    """Dimensions come in groups (i, j), one per ordered pair of parts, each with
    ``n`` dimensions (one per vertex of part i). Vertex-multiedges carry their
    part label, edge-multiedges their pair label, each with a few exceptions
    that make every (dimension, value) slot coverable by exactly one choice of
    a clique's vertices and edges."""
    k, n = G.k, G.n
    if k < 2 or n < 1:
        raise PreconditionError("the construction needs k >= 2 parts with n >= 1 vertices each")
    groups = group_order(k)
    base = {g: t * n for t, g in enumerate(groups)}
    dims = len(groups) * n
    tuples: list[tuple[int, ...]] = []
    prov: list[tuple] = []
    for i in range(k):
        for a in range(n):
            row = [i] * dims
            for j in range(k):
                if j != i:
                    row[base[i, j] + a] = pair_label(k, i, j)
            tuples.append(tuple(row))
            prov.append(("vertex", i, a))
    for (i, a), (j, b) in G.edges:
        row = [pair_label(k, i, j)] * dims
        row[base[i, j] + a] = i
        row[base[j, i] + b] = j
        tuples.append(tuple(row))
        prov.append(("edge", i, a, j, b))
    return PmdmInstance(dims, k + k * (k - 1) // 2, tuple(tuples), tuple(prov))


def extract_clique(instance: PmdmInstance, matching: Sequence[int], G: Optional[KPartiteGraph] = None) -> list[Vertex]:
    """Source vertices of the matching's vertex-multiedges, one per part.

    When ``G`` is given, the result is checked to be pairwise adjacent there.
    """
    if instance.provenance is None:
        raise PreconditionError("instance carries no provenance")
    if not instance.is_perfect_matching(matching):
        raise PreconditionError("not a perfect multi-dimensional matching")
    picked = sorted(
        (p[1], p[2]) for p in (instance.provenance[i] for i in matching) if p[0] == "vertex"
    )
    if G is not None:
        if len({part for part, _ in picked}) != G.k or len(picked) != G.k:
            raise AssertionError(f"matching selects vertices {picked}, not one per part")
        for a, b in combinations(picked, 2):
            if not G.adjacent(a, b):
                raise AssertionError(f"extracted vertices {a} and {b} are not adjacent")
    return picked


def has_multicolored_clique(G: KPartiteGraph) -> Optional[list[Vertex]]:
    """Exhaustive: try every choice of one vertex per part."""
    edges = set(G.edges)
    for choice in product(range(G.n), repeat=G.k):
        vs = [(p, choice[p]) for p in range(G.k)]
        if all((a, b) in edges for a, b in combinations(vs, 2)):
            return vs
    return None


def all_perfect_matchings(instance: PmdmInstance) -> list[tuple[int, ...]]:
    """Every perfect matching by brute force over ``values``-subsets."""
    return [
        c for c in combinations(range(len(instance.multiedges)), instance.values)
        if instance.is_perfect_matching(c)
    ]


def check_set_matching_corollary(instance: PmdmInstance) -> bool:
    """Do the generalized Sets among the multiedges coincide with the perfect
    matchings? Exhaustive, so guarded to small instances."""
    if len(instance.multiedges) > COROLLARY_MAX_EDGES or instance.values > COROLLARY_MAX_VALUES:
        raise CapacityError(
            f"corollary check handles at most {COROLLARY_MAX_EDGES} multiedges and "
            f"{COROLLARY_MAX_VALUES} values"
        )
    k = instance.values
    gen_sets = set()
    for c in combinations(range(len(instance.multiedges)), k):
        rows = [instance.multiedges[i] for i in c]
        if len(set(rows)) == k and is_generalized_set(rows, k):
            gen_sets.add(c)
    return gen_sets == set(all_perfect_matchings(instance))
