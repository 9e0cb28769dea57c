"""Max r-Set: the SAT-to-SET gadget construction and an exact packing solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cards import Card, Deck, SetTriple, build_set_hypergraph, enumerate_sets
from .cnf import CnfFormula
from .errors import ConstructionError, PreconditionError
from .hypergraph import Hypergraph3

X_OCC, X_12, X_123, C_LIT, C_M = "x_i", "x_12", "x_123", "c_i", "c_m"


@dataclass(frozen=True)
class Role:
    """What a gadget card stands for.

    ``ref`` is the 1-based variable for variable-gadget cards and the 0-based
    clause index for clause-gadget cards. ``position`` is the occurrence label
    (1, 2, 3) for ``x_i`` cards and the literal position (1-based) for ``c_i``.
    """

    kind: str
    ref: int
    position: Optional[int] = None

    def __str__(self) -> str:
        parts = [self.kind, str(self.ref)]
        if self.position is not None:
            parts.append(str(self.position))
        return " ".join(parts)


@dataclass(frozen=True)
class Occurrence:
    clause: int
    position: int  # 1-based literal position inside the clause
    positive: bool


@dataclass
class GadgetDeck:
    deck: Deck
    roles: dict[int, Role]
    intended_sets: list[SetTriple]
    formula: CnfFormula
    # occurrences[v] = (x_1, x_2, x_3) occurrence records of variable v
    occurrences: dict[int, tuple[Occurrence, Occurrence, Occurrence]] = field(default_factory=dict)
    mismatch: tuple[list[SetTriple], list[SetTriple]] = ([], [])

    def card_of(self, kind: str, ref: int, position: Optional[int] = None) -> int:
        for idx, role in self.roles.items():
            if role == Role(kind, ref, position):
                return idx
        raise KeyError((kind, ref, position))


def _lex_key(clause):
    return tuple(sorted((abs(l), l < 0) for l in clause))


def normalize_formula(F: CnfFormula) -> CnfFormula:
    """Equisatisfiable formula where every variable occurs exactly 3 times.

    Clauses containing a variable with fewer than 4 occurrences are duplicated
    (lexicographically first such clause, repeatedly); every occurrence then
    gets a fresh variable, and each original variable's occurrences are tied
    together by a ring of implications. Unit clauses must be expanded first
    (see ``expand_unit_clauses``).
    """
    for c in F.clauses:
        if len(c) > 3:
            raise PreconditionError(f"clause {c} has more than 3 literals")
        if len(c) == 0:
            raise PreconditionError("empty clause")
        if len(c) == 1:
            raise PreconditionError(f"unit clause {c}: expand unit clauses before normalizing")

    clauses = list(F.clauses)
    occ = F.occurrences()
    for v in range(1, F.num_vars + 1):
        if occ[v] == 0:
            continue
        while occ[v] < 4:
            source = min((c for c in clauses if any(abs(l) == v for l in c)), key=_lex_key)
            clauses.append(source)
            for l in source:
                occ[abs(l)] += 1

    fresh: dict[tuple[int, int], int] = {}  # (clause idx, position) -> new variable
    rings: list[list[int]] = []
    next_var = 0
    for v in range(1, F.num_vars + 1):
        ring = []
        for ci, c in enumerate(clauses):
            for pos, l in enumerate(c):
                if abs(l) == v:
                    next_var += 1
                    fresh[ci, pos] = next_var
                    ring.append(next_var)
        if ring:
            rings.append(ring)

    out = [
        tuple(fresh[ci, pos] if l > 0 else -fresh[ci, pos] for pos, l in enumerate(c))
        for ci, c in enumerate(clauses)
    ]
    for ring in rings:
        for i, u in enumerate(ring):
            out.append((-u, ring[(i + 1) % len(ring)]))
    return CnfFormula(next_var, tuple(out))


def check_normalized(F: CnfFormula) -> list[str]:
    """Violations of the normal form the gadget needs (empty list when fine)."""
    problems = []
    signs: dict[int, list[bool]] = {v: [] for v in range(1, F.num_vars + 1)}
    for c in F.clauses:
        if len(c) not in (2, 3):
            problems.append(f"clause {c} has size {len(c)}")
        for l in c:
            signs[abs(l)].append(l > 0)
    for v, s in signs.items():
        if len(s) != 3:
            problems.append(f"variable {v} occurs {len(s)} times")
        elif all(s) or not any(s):
            problems.append(f"variable {v} occurs with a single sign")
    var_sets = [frozenset(abs(l) for l in c) for c in F.clauses]
    for i in range(len(var_sets)):
        for j in range(i + 1, len(var_sets)):
            if len(var_sets[i] & var_sets[j]) > 1:
                problems.append(f"clauses {i} and {j} share more than one variable")
    return problems


def _occurrences(F: CnfFormula) -> dict[int, tuple[Occurrence, Occurrence, Occurrence]]:
    found: dict[int, list[Occurrence]] = {v: [] for v in range(1, F.num_vars + 1)}
    for ci, c in enumerate(F.clauses):
        for pos, l in enumerate(c, start=1):
            found[abs(l)].append(Occurrence(ci, pos, l > 0))
    labelled = {}
    for v, occs in found.items():
        positives = [o for o in occs if o.positive]
        negatives = [o for o in occs if not o.positive]
        if len(occs) != 3 or len(positives) not in (1, 2):
            raise ConstructionError(f"variable {v} does not occur 2-vs-1 in sign")
        same, odd = (positives, negatives) if len(positives) == 2 else (negatives, positives)
        labelled[v] = (same[0], same[1], odd[0])
    return labelled


def build_sat_gadget_deck(F: CnfFormula) -> GadgetDeck:
    """Cards realizing the variable and clause gadgets of a normalized formula.

    Coordinates: ``0..n-1`` variable part, ``n`` the dummy coordinate used by
    two-literal clauses, ``n+1..n+m`` clause part.
    """
    problems = check_normalized(F)
    if problems:
        raise PreconditionError("formula is not normalized: " + "; ".join(problems[:3]))
    n, m = F.num_vars, len(F.clauses)
    width = n + 1 + m
    occurrences = _occurrences(F)

    def vec(entries: dict[int, int]) -> Card:
        row = [0] * width
        for coord, value in entries.items():
            row[coord] = (row[coord] + value) % 3
        return tuple(row)

    def clause_coord(ci: int) -> int:
        return n + 1 + ci

    cards: list[Card] = []
    roles: dict[int, Role] = {}
    intended: list[SetTriple] = []
    occ_card: dict[tuple[int, int], int] = {}  # (clause, position) -> card index

    def emit(card: Card, role: Role) -> int:
        roles[len(cards)] = role
        cards.append(card)
        return len(cards) - 1

    for v in range(1, n + 1):
        x1, x2, x3 = occurrences[v]
        var_coord = v - 1
        idx = []
        for label, o in enumerate((x1, x2, x3), start=1):
            i = emit(vec({var_coord: 1, clause_coord(o.clause): 1}), Role(X_OCC, v, label))
            occ_card[o.clause, o.position] = i
            idx.append(i)
        c1, c2, c3 = (clause_coord(o.clause) for o in (x1, x2, x3))
        i12 = emit(vec({var_coord: 1, c1: -1, c2: -1}), Role(X_12, v))
        # clause part of x_123 is -(x_3 + x_12) = -x_3 + x_1 + x_2
        i123 = emit(vec({var_coord: 1, c3: -1, c1: 1, c2: 1}), Role(X_123, v))
        intended.append(tuple(sorted((idx[0], idx[1], i12))))
        intended.append(tuple(sorted((idx[2], i12, i123))))

    for ci, clause in enumerate(F.clauses):
        lit_vars = [abs(l) - 1 for l in clause]
        cm_entries = {clause_coord(ci): 1}
        for u in lit_vars:
            cm_entries[u] = 1
        if len(clause) == 2:
            cm_entries[n] = 1
        lit_cards = []
        for pos, u in enumerate(lit_vars, start=1):
            entries = {clause_coord(ci): 1, u: 1}
            for w in lit_vars:
                if w != u:
                    entries[w] = -1
            if len(clause) == 2:
                entries[n] = 2
            lit_cards.append(emit(vec(entries), Role(C_LIT, ci, pos)))
        cm = emit(vec(cm_entries), Role(C_M, ci))
        for pos, card in enumerate(lit_cards, start=1):
            intended.append(tuple(sorted((occ_card[ci, pos], card, cm))))

    if len(set(cards)) != len(cards):
        raise ConstructionError("two gadget cards coincide")
    return GadgetDeck(Deck(width, tuple(cards)), roles, sorted(intended), F, occurrences)


def verify_gadget_sets(gd: GadgetDeck) -> bool:
    """True iff the deck's Sets are exactly the intended ones.

    On failure ``gd.mismatch`` holds ``(extra, missing)`` triples.
    """
    actual = set(enumerate_sets(gd.deck))
    intended = set(gd.intended_sets)
    gd.mismatch = (sorted(actual - intended), sorted(intended - actual))
    return actual == intended


def assignment_from_packing(gd: GadgetDeck, packing: list[SetTriple]) -> tuple[bool, ...]:
    """Read a truth assignment off a packing with one Set per variable gadget.

    Picking {x_1, x_2, x_12} leaves x_3 free, so x_3's literal is made true;
    picking {x_3, x_12, x_123} makes the literal of x_1 and x_2 true.
    """
    chosen = set(packing)
    values = []
    for v in range(1, gd.formula.num_vars + 1):
        x1, _, x3 = gd.occurrences[v]
        first = tuple(sorted((gd.card_of(X_OCC, v, 1), gd.card_of(X_OCC, v, 2), gd.card_of(X_12, v))))
        values.append(x3.positive if first in chosen else x1.positive)
    return tuple(values)


def max_packing_search(hyper: Hypergraph3, r: int) -> Optional[list[int]]:
    """``r`` pairwise disjoint edges of ``hyper`` (edge indices) or ``None``.

    Live edges are kept as a bitmask and split into stars around hub vertices
    (hubs in a fixed order: high degree, then high index). Edges of one star
    pairwise intersect, so fewer stars than edges still needed means failure.
    Otherwise the smallest star is branched on: one of its edges is taken, or,
    when there is slack, the whole star is dropped, which is sound because its
    hub then stays unused.
    """
    if r < 0:
        raise PreconditionError("r must be nonnegative")
    incident = [0] * hyper.num_vertices
    for idx, e in enumerate(hyper.edges):
        for v in e:
            incident[v] |= 1 << idx
    blocks = [incident[a] | incident[b] | incident[c] for a, b, c in hyper.edges]
    order = sorted(range(hyper.num_vertices), key=lambda v: (incident[v].bit_count(), v), reverse=True)

    def split(live: int) -> list[int]:
        groups = []
        for v in order:
            if not live:
                break
            star = incident[v] & live
            if star:
                groups.append(star)
                live &= ~star
        return groups

    def search(live: int, need: int, taken: list[int]) -> bool:
        if need == 0:
            return True
        groups = split(live)
        if len(groups) < need:
            return False
        group = min(groups, key=int.bit_count)
        rest = group
        while rest:
            idx = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            taken.append(idx)
            if search(live & ~blocks[idx], need - 1, taken):
                return True
            taken.pop()
        return len(groups) > need and search(live & ~group, need, taken)

    taken: list[int] = []
    if search((1 << len(hyper.edges)) - 1, r, taken):
        return sorted(taken)
    return None


def solve_max_rset(deck: Deck, r: int) -> tuple[bool, list[SetTriple]]:
    """Are there ``r`` pairwise disjoint Sets? Returns the decision and a witness."""
    hyper = build_set_hypergraph(deck)
    found = max_packing_search(hyper, r)
    if found is None:
        return False, []
    return True, sorted(hyper.edges[i] for i in found)
