"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line in
the terminal summary (see conftest.py)."""

import time
from itertools import combinations

from setlab.cards import build_set_hypergraph, enumerate_sets, full_deck, is_set
from setlab.domination import reduce_ieds_to_deck, solve_ieds_fpt, solve_min_ieds
from setlab.games import (
    arc_kayles_within, build_ordered_kayles, check_degree_claim, kernelize, solve_2p_within,
)
from setlab.hypergraph import SimpleGraph, is_independent_dominating_edge_set, min_hitting_set
from setlab.oracles import (
    SAT_GUARD, oracle_max_packing, oracle_min_ieds, oracle_min_ieds_graph, oracle_pmdm, oracle_sat,
)
from setlab.packing import build_sat_gadget_deck, normalize_formula, verify_gadget_sets
from setlab.pmdm import (
    COROLLARY_MAX_EDGES, COROLLARY_MAX_VALUES, build_mcc_to_pmdm, check_set_matching_corollary,
    extract_clique, has_multicolored_clique,
)
from setlab.verify import SUITES, deck_corpus, graph_corpus, h3_corpus, kpartite_corpus, sat_corpus

from test_cli import CASES, GOLDEN, run

SEED = 1


def dpll(clauses, assignment=None):
    """Tiny independent satisfiability check (unit propagation + splitting)."""
    assignment = dict(assignment or {})
    clauses = [list(c) for c in clauses]
    while True:
        simplified, unit = [], None
        for c in clauses:
            if any(assignment.get(abs(l)) == (l > 0) for l in c):
                continue
            rest = [l for l in c if abs(l) not in assignment]
            if not rest:
                return False
            if len(rest) == 1 and unit is None:
                unit = rest[0]
            simplified.append(rest)
        if not simplified:
            return True
        if unit is None:
            break
        assignment[abs(unit)] = unit > 0
        clauses = simplified
    v = abs(simplified[0][0])
    return any(dpll(simplified, {**assignment, v: val}) for val in (True, False))


def test_criterion_1_set_count_closed_form(acceptance):
    start = time.perf_counter()
    counts = []
    ok = True
    for n in range(1, 5):
        deck = full_deck(n)
        found = enumerate_sets(deck)
        scan = [t for t in combinations(range(len(deck)), 3) if is_set(*(deck.cards[i] for i in t))]
        counts.append(len(found))
        ok &= found == scan and len(found) == 3 ** n * (3 ** n - 1) // 6
    elapsed = time.perf_counter() - start
    ok &= counts == [1, 12, 117, 1080] and elapsed < 10
    acceptance("1 Set-count closed form", ok, f"counts {counts}, {elapsed:.2f}s (< 10s)")
    assert ok


def _gadget_corpus():
    return [(case, F, normalize_formula(F)) for case, F in sat_corpus(SEED, 50)]


def test_criterion_2_maxset_end_to_end(acceptance):
    agree = 0
    checked_normalized_by_oracle = 0
    for case, F, Fn in _gadget_corpus():
        gd = build_sat_gadget_deck(Fn)
        best, _ = oracle_max_packing(build_set_hypergraph(gd.deck))
        target = Fn.num_vars + len(Fn.clauses)
        sat = oracle_sat(F) is not None
        sat_normalized = dpll(Fn.clauses)
        if Fn.num_vars <= SAT_GUARD:
            checked_normalized_by_oracle += 1
            assert (oracle_sat(Fn) is not None) == sat_normalized
        agree += sat == sat_normalized and (best == target) == sat_normalized and best <= target
    acceptance("2 Max r-Set end to end", agree == 50,
               f"{agree}/50 agree ({checked_normalized_by_oracle} normalized formulas also within oracle_sat guard)")
    assert agree == 50


def test_criterion_3_gadget_exactness(acceptance):
    exact = 0
    extras = 0
    for case, F, Fn in _gadget_corpus():
        gd = build_sat_gadget_deck(Fn)
        exact += verify_gadget_sets(gd)
        extras += len(gd.mismatch[0])
    acceptance("3 gadget exactness", exact == 50 and extras == 0, f"{exact}/50 exact, {extras} extra Sets")
    assert exact == 50 and extras == 0


def test_criterion_4_ieds_fpt(acceptance):
    start = time.perf_counter()
    agree = total = 0
    for case, H in h3_corpus(SEED, 100):
        assert H.num_vertices <= 12 and len(H.edges) <= 10
        best, _ = oracle_min_ieds(H)
        sizes = {
            k for k in range(len(H.edges) + 1)
            for c in combinations(range(len(H.edges)), k) if is_independent_dominating_edge_set(H, c)
        }
        for r in range(4):
            total += 1
            ok_min, w_min = solve_min_ieds(H, r)
            ok_exact, w_exact = solve_ieds_fpt(H, r)
            good = ok_min == (best <= r) and ok_exact == (r in sizes)
            for w in (w_min if ok_min else None, w_exact if ok_exact else None):
                if w is not None:
                    good &= is_independent_dominating_edge_set(H, w)
            agree += good
    elapsed = time.perf_counter() - start
    ok = agree == total == 400 and elapsed < 60
    acceptance("4 IEDS FPT vs oracle", ok, f"{agree}/{total} agree, {elapsed:.1f}s (< 60s)")
    assert ok


def _connected(n, edges):
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == n


def test_criterion_5_minset_reduction(acceptance):
    graphs = agree = 0
    for n in range(1, 7):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
            if not _connected(n, edges):
                continue
            G = SimpleGraph(n, edges)
            H = build_set_hypergraph(reduce_ieds_to_deck(G))
            graphs += 1
            agree += len(H.edges) == len(edges) and oracle_min_ieds(H)[0] == oracle_min_ieds_graph(G)[0]
    acceptance("5 Min r-Set reduction", agree == graphs, f"{agree}/{graphs} connected graphs on <= 6 vertices")
    assert agree == graphs


def test_criterion_6_kernel_safety(acceptance):
    agree = total = claim_checked = claim_ok = 0
    for case, deck in deck_corpus(SEED, 200):
        assert deck.n <= 4 and len(deck) <= 12
        H = build_set_hypergraph(deck)
        for r in (1, 2, 3):
            hs = min_hitting_set(H, 3 * r)
            if hs is not None:
                for G in (build_ordered_kayles(H, r + 1, hs), kernelize(H, r)):
                    claim_checked += 1
                    claim_ok += not check_degree_claim(G)
            total += 1
            agree += solve_2p_within(deck, r, "kernel") == solve_2p_within(deck, r, "brute")
    ok = agree == total == 600 and claim_ok == claim_checked
    acceptance("6 kernel safety", ok, f"{agree}/{total} agree, degree bound on {claim_ok}/{claim_checked} graphs")
    assert ok


def test_criterion_7_arc_kayles_fpt(acceptance):
    agree = total = 0
    for case, G in graph_corpus(SEED, 200, 12):
        for r in (1, 2, 3, 4):
            total += 1
            agree += arc_kayles_within(G, r, "fpt") == arc_kayles_within(G, r, "brute")
    acceptance("7 Arc Kayles FPT vs brute", agree == total == 800, f"{agree}/{total} agree")
    assert agree == total == 800


def test_criterion_8_arc_kayles_bridge(acceptance):
    agree = total = 0
    for case, G in graph_corpus(SEED + 1, 100, 8):
        deck = reduce_ieds_to_deck(G)
        for r in (1, 2, 3, 4):
            total += 1
            agree += arc_kayles_within(G, r, "brute") == solve_2p_within(deck, r, "brute")
    acceptance("8 Arc Kayles bridge", agree == total == 400, f"{agree}/{total} agree over 100 graphs, r in 1..4")
    assert agree == total == 400


def test_criterion_9_clique_to_pmdm(acceptance):
    agree = cliques_ok = solvable = corollary = corollary_ok = 0
    for case, G in kpartite_corpus(SEED, 100):
        assert G.k == 3 and G.n <= 2
        M = build_mcc_to_pmdm(G)
        matching = oracle_pmdm(M)
        agree += (matching is None) == (has_multicolored_clique(G) is None)
        if matching is not None:
            solvable += 1
            try:
                extract_clique(M, matching, G)
                cliques_ok += 1
            except AssertionError:
                pass
        if len(M.multiedges) <= COROLLARY_MAX_EDGES and M.values <= COROLLARY_MAX_VALUES:
            corollary += 1
            corollary_ok += check_set_matching_corollary(M)
    ok = agree == 100 and cliques_ok == solvable and corollary_ok == corollary
    acceptance("9 clique <=> PMDM", ok,
               f"{agree}/100 agree, {cliques_ok}/{solvable} cliques adjacent, "
               f"corollary {corollary_ok}/{corollary} within guard")
    assert ok


def test_criterion_10_determinism(acceptance):
    same_suites = all(
        SUITES[name](SEED, 4).render() == SUITES[name](SEED, 4).render() for name in sorted(SUITES)
    )
    same_golden = all(
        run(CASES[name].split()) == run(CASES[name].split()) == (GOLDEN / f"{name}.out").read_text()
        for name in sorted(CASES)
    )
    ok = same_suites and same_golden
    acceptance("10 determinism", ok, f"{len(SUITES)} verify suites, {len(CASES)} golden transcripts")
    assert ok
