"""Seeded oracle-equivalence suites behind ``setlab verify``.

Each suite draws ``cases`` instances from a SplitMix64 stream seeded with
``seed`` and compares a main solver with its brute-force counterpart. Output
is plain deterministic text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .cards import Deck, build_set_hypergraph, enumerate_sets, full_deck, is_generalized_set, is_set
from .cnf import CnfFormula, expand_unit_clauses
from .domination import reduce_ieds_to_deck, solve_min_ieds
from .formats import (
    emit_cnf, emit_deck, emit_graph, emit_h3, emit_pmdm,
    parse_cnf, parse_deck, parse_graph, parse_h3, parse_pmdm,
)
from .games import (
    arc_kayles_within, build_ordered_kayles, check_degree_claim, kernelize, solve_2p_within,
)
from .generators import (
    SplitMix64, gen_random_3cnf, gen_random_deck, gen_random_graph, gen_random_h3, gen_random_kpartite,
)
from .hypergraph import Hypergraph3, SimpleGraph, is_independent_dominating_edge_set, min_hitting_set
from .oracles import (
    SAT_GUARD, oracle_max_packing, oracle_min_ieds, oracle_min_ieds_graph, oracle_pmdm, oracle_sat,
)
from .packing import build_sat_gadget_deck, normalize_formula, solve_max_rset, verify_gadget_sets
from .pmdm import (
    COROLLARY_MAX_EDGES, COROLLARY_MAX_VALUES, build_mcc_to_pmdm, check_set_matching_corollary,
    extract_clique, has_multicolored_clique,
)


@dataclass
class SuiteResult:
    name: str
    seed: int
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def render(self) -> str:
        lines = [f"suite {self.name} seed {self.seed}: {self.passed} passed, {self.failed} failed"]
        lines += [f"  FAIL {f}" for f in self.failures]
        return "\n".join(lines)


def _seeds(seed: int, cases: int) -> Iterator[tuple[int, SplitMix64, int]]:
    """(case number, per-case parameter stream, instance seed)."""
    master = SplitMix64(seed)
    for case in range(cases):
        yield case, SplitMix64(master.next_u64()), master.next_u64()


def sat_corpus(seed: int, cases: int) -> Iterator[tuple[int, CnfFormula]]:
    """Random formulas with 1..6 variables, 1..8 clauses, unit clauses expanded."""
    for case, rng, inst in _seeds(seed, cases):
        nv, nc = rng.between(1, 6), rng.between(1, 8)
        yield case, expand_unit_clauses(gen_random_3cnf(nv, nc, inst))


def h3_corpus(seed: int, cases: int) -> Iterator[tuple[int, Hypergraph3]]:
    for case, rng, inst in _seeds(seed, cases):
        nv = rng.between(3, 12)
        ne = rng.between(0, min(10, nv * (nv - 1) * (nv - 2) // 6))
        yield case, gen_random_h3(nv, ne, inst)


def deck_corpus(seed: int, cases: int, max_n: int = 4, max_m: int = 12) -> Iterator[tuple[int, Deck]]:
    for case, rng, inst in _seeds(seed, cases):
        n = rng.between(2, max_n)
        m = rng.between(3, min(max_m, 3 ** n))
        yield case, gen_random_deck(n, m, inst)


def graph_corpus(seed: int, cases: int, max_v: int) -> Iterator[tuple[int, SimpleGraph]]:
    for case, rng, inst in _seeds(seed, cases):
        v = rng.between(1, max_v)
        yield case, gen_random_graph(v, rng.between(100, 700), inst)


def kpartite_corpus(seed: int, cases: int):
    for case, rng, inst in _seeds(seed, cases):
        yield case, gen_random_kpartite(3, rng.between(1, 2), rng.between(300, 900), inst)


def suite_sets(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("sets", seed)
    for n in range(1, 4):
        deck = full_deck(n)
        scan = [t for t in combinations(range(len(deck)), 3) if is_set(*(deck.cards[i] for i in t))]
        res.check(enumerate_sets(deck) == scan, f"full deck n={n}")
    for case, deck in deck_corpus(seed, cases, max_n=5, max_m=40):
        scan = [t for t in combinations(range(len(deck)), 3) if is_set(*(deck.cards[i] for i in t))]
        res.check(enumerate_sets(deck) == scan, f"case {case}: enumeration differs from triple scan")
        agree = all(is_set(*c) == is_generalized_set(c, 3) for c in combinations(deck.cards[:8], 3))
        res.check(agree, f"case {case}: generalized Set test disagrees with sum-zero test")
    return res


def suite_maxset(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("maxset", seed)
    for case, F in sat_corpus(seed, cases):
        Fn = normalize_formula(F)
        gd = build_sat_gadget_deck(Fn)
        res.check(verify_gadget_sets(gd), f"case {case}: gadget Sets differ from intended ones")
        sat = oracle_sat(F) is not None
        if Fn.num_vars <= SAT_GUARD:
            res.check((oracle_sat(Fn) is not None) == sat, f"case {case}: normalization changed satisfiability")
        target = Fn.num_vars + len(Fn.clauses)
        best, _ = oracle_max_packing(build_set_hypergraph(gd.deck))
        res.check((best == target) == sat and best <= target, f"case {case}: packing optimum {best}, target {target}")
        found, _ = solve_max_rset(gd.deck, target)
        res.check(found == sat, f"case {case}: solver says {found}, formula satisfiable {sat}")
    return res


def suite_minset(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("minset", seed)
    for case, H in h3_corpus(seed, cases):
        best, _ = oracle_min_ieds(H)
        for r in range(4):
            ok, witness = solve_min_ieds(H, r)
            res.check(ok == (best <= r), f"case {case} r={r}: solver {ok}, optimum {best}")
            if ok:
                res.check(is_independent_dominating_edge_set(H, witness) and len(witness) <= r,
                          f"case {case} r={r}: bad witness {witness}")
    for case, G in graph_corpus(seed, cases, 7):
        if G.num_vertices == 0:
            continue
        deck = reduce_ieds_to_deck(G)
        H = build_set_hypergraph(deck)
        res.check(len(H.edges) == len(G.edges), f"case {case}: {len(H.edges)} Sets for {len(G.edges)} edges")
        res.check(oracle_min_ieds(H)[0] == oracle_min_ieds_graph(G)[0], f"case {case}: reduction changed the optimum")
    return res


def suite_twoplayer(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("twoplayer", seed)
    for case, deck in deck_corpus(seed, cases):
        H = build_set_hypergraph(deck)
        for r in (1, 2, 3):
            hs = min_hitting_set(H, 3 * r)
            if hs is not None:
                G = build_ordered_kayles(H, r + 1, hs)
                res.check(not check_degree_claim(G), f"case {case} r={r}: degree bound violated")
                kern = kernelize(H, r)
                res.check(not check_degree_claim(kern), f"case {case} r={r}: degree bound violated after reduction")
            a = solve_2p_within(deck, r, "kernel")
            b = solve_2p_within(deck, r, "brute")
            res.check(a == b, f"case {case} r={r}: kernel {a}, brute {b}")
    return res


def suite_arckayles(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("arckayles", seed)
    for case, G in graph_corpus(seed, cases, 12):
        for r in (1, 2, 3, 4):
            a = arc_kayles_within(G, r, "fpt")
            b = arc_kayles_within(G, r, "brute")
            res.check(a == b, f"case {case} r={r}: fpt {a}, brute {b}")
    for case, G in graph_corpus(seed ^ 1, cases, 8):
        if G.num_vertices == 0:
            continue
        deck = reduce_ieds_to_deck(G)
        for r in (1, 2, 3):
            a = arc_kayles_within(G, r, "brute")
            b = solve_2p_within(deck, r, "brute")
            res.check(a == b, f"bridge case {case} r={r}: graph {a}, deck {b}")
    return res


def suite_pmdm(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("pmdm", seed)
    for case, G in kpartite_corpus(seed, cases):
        M = build_mcc_to_pmdm(G)
        matching = oracle_pmdm(M)
        clique = has_multicolored_clique(G)
        res.check((matching is None) == (clique is None), f"case {case}: clique {clique}, matching {matching}")
        if matching is not None:
            try:
                extract_clique(M, matching, G)
                res.check(True, "")
            except AssertionError as exc:
                res.check(False, f"case {case}: {exc}")
        if len(M.multiedges) <= COROLLARY_MAX_EDGES and M.values <= COROLLARY_MAX_VALUES:
            res.check(check_set_matching_corollary(M), f"case {case}: Sets and matchings differ")
    return res


def suite_io(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("io", seed)
    for case, rng, inst in _seeds(seed, cases):
        n, nv = rng.between(1, 4), rng.between(3, 9)
        objs = [
            (gen_random_deck(n, rng.between(0, min(9, 3 ** n)), inst), emit_deck, parse_deck),
            (gen_random_h3(nv, rng.between(0, min(10, nv * (nv - 1) * (nv - 2) // 6)), inst), emit_h3, parse_h3),
            (gen_random_graph(rng.between(0, 9), 400, inst), emit_graph, parse_graph),
            (gen_random_3cnf(rng.between(1, 6), rng.between(0, 8), inst), emit_cnf, parse_cnf),
            (build_mcc_to_pmdm(gen_random_kpartite(3, rng.between(1, 2), 500, inst)), emit_pmdm, parse_pmdm),
        ]
        for obj, emit, parse in objs:
            text = emit(obj)
            back = parse(text)
            res.check(back == obj and emit(back) == text, f"case {case}: {type(obj).__name__} round trip")
    return res


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "sets": suite_sets,
    "maxset": suite_maxset,
    "minset": suite_minset,
    "twoplayer": suite_twoplayer,
    "arckayles": suite_arckayles,
    "pmdm": suite_pmdm,
    "io": suite_io,
}


def run_suites(names: list[str], seed: int, cases: int) -> list[SuiteResult]:
    return [SUITES[name](seed, cases) for name in names]
