"""Seeded instance generators.

Randomness comes from SplitMix64 so that an instance is a pure function of its
parameters and seed on any platform. Probabilities are given per mille
(``p_scaled`` out of 1000); nothing here uses floating point.
"""

from __future__ import annotations

from itertools import combinations, product

from .cards import Deck, full_deck
from .cnf import CnfFormula
from .errors import CapacityError, PreconditionError
from .hypergraph import Hypergraph3, SimpleGraph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise PreconditionError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if bound <= 0:
            raise PreconditionError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p_scaled: int) -> bool:
        return self.below(1000) < p_scaled

    def sample(self, population: int, k: int) -> list[int]:
        """``k`` distinct integers from ``range(population)`` (partial Fisher-Yates)."""
        if k > population:
            raise CapacityError(f"cannot sample {k} items from {population}")
        pool: dict[int, int] = {}
        out = []
        for i in range(k):
            j = i + self.below(population - i)
            out.append(pool.get(j, j))
            pool[j] = pool.get(i, i)
        return out


def _decode(index: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        index, d = divmod(index, 3)
        digits.append(d)
    return tuple(reversed(digits))


def gen_full_deck(n: int) -> Deck:
    return full_deck(n)


def gen_random_deck(n: int, m: int, seed: int) -> Deck:
    """``m`` distinct cards with ``n`` attributes, sorted lexicographically."""
    if n < 1 or m < 0:
        raise PreconditionError("need n >= 1 and m >= 0")
    if m > 3**n:
        raise CapacityError(f"a deck with {n} attributes has at most {3**n} cards")
    rng = SplitMix64(seed)
    return Deck(n, tuple(sorted(_decode(i, n) for i in rng.sample(3**n, m))))


def gen_random_3cnf(num_vars: int, num_clauses: int, seed: int) -> CnfFormula:
    """Clauses of 1 to 3 literals over distinct variables."""
    if num_vars < 1 or num_clauses < 0:
        raise PreconditionError("need at least one variable")
    rng = SplitMix64(seed)
    clauses = []
    for _ in range(num_clauses):
        size = rng.between(1, min(3, num_vars))
        vars_ = sorted(v + 1 for v in rng.sample(num_vars, size))
        clauses.append(tuple(v if rng.chance(500) else -v for v in vars_))
    return CnfFormula(num_vars, tuple(clauses))


def gen_random_graph(num_vertices: int, p_scaled: int, seed: int) -> SimpleGraph:
    rng = SplitMix64(seed)
    edges = [e for e in combinations(range(num_vertices), 2) if rng.chance(p_scaled)]
    return SimpleGraph(num_vertices, tuple(edges))


def gen_random_h3(num_vertices: int, num_edges: int, seed: int) -> Hypergraph3:
    """``num_edges`` distinct triples sampled without replacement, sorted."""
    triples = list(combinations(range(num_vertices), 3))
    if num_edges > len(triples):
        raise CapacityError(f"{num_vertices} vertices admit only {len(triples)} triples")
    rng = SplitMix64(seed)
    return Hypergraph3(num_vertices, tuple(sorted(triples[i] for i in rng.sample(len(triples), num_edges))))


def gen_random_kpartite(k: int, n: int, p_scaled: int, seed: int):
    from .pmdm import KPartiteGraph

    rng = SplitMix64(seed)
    edges = []
    for i, j in combinations(range(k), 2):
        for a, b in product(range(n), repeat=2):
            if rng.chance(p_scaled):
                edges.append(((i, a), (j, b)))
    return KPartiteGraph(k, n, tuple(edges))
