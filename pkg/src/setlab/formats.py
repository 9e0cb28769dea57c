"""Line-based text formats for every instance kind setlab reads or writes.

Every parser strips ``#`` comments and blank lines and reports problems as a
``ParseError`` carrying the 1-based line number. Emitters write LF-terminated
canonical text, so ``emit(parse(text))`` is stable.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .cards import Deck
from .cnf import CnfFormula
from .errors import ParseError, SetlabError
from .hypergraph import Hypergraph3, SimpleGraph
from .packing import GadgetDeck
from .pmdm import KPartiteGraph, PmdmInstance


def _significant(text: str, comment: str = "#") -> Iterator[tuple[int, str, str]]:
    """(line number, content without comment, comment text) for non-blank lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, note = raw.partition(comment)
        body = body.strip()
        if body:
            yield lineno, body, note.strip()


def _ints(body: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in body.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {body!r}", lineno) from None


def _header(lines: Iterator[tuple[int, str, str]], keyword: str, arity: int) -> tuple[int, list[int]]:
    first = next(lines, None)
    if first is None:
        raise ParseError(f"missing {keyword} header")
    lineno, body, _ = first
    parts = body.split()
    if parts[0] != keyword or len(parts) != arity + 1:
        raise ParseError(f"expected header '{keyword}' with {arity} number(s), got {body!r}", lineno)
    return lineno, _ints(" ".join(parts[1:]), lineno)


def parse_deck(text: str) -> Deck:
    lines = _significant(text)
    lineno, (n,) = _header(lines, "SETDECK", 1)
    if n < 1:
        raise ParseError("a deck needs at least one attribute", lineno)
    cards: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, body, _ in lines:
        if len(body) != n or any(ch not in "012" for ch in body):
            raise ParseError(f"card {body!r} is not {n} characters from 0,1,2", lineno)
        card = tuple(int(ch) for ch in body)
        if card in seen:
            raise ParseError(f"duplicate card {body} (first on line {seen[card]})", lineno)
        seen[card] = lineno
        cards.append(card)
    return Deck(n, tuple(cards))


def emit_deck(deck: Deck) -> str:
    return "".join([f"SETDECK {deck.n}\n"] + ["".join(map(str, c)) + "\n" for c in deck.cards])


def _parse_edges(text: str, keyword: str, arity: int) -> tuple[int, list[tuple[int, ...]]]:
    lines = _significant(text)
    lineno, (nv,) = _header(lines, keyword, 1)
    if nv < 0:
        raise ParseError("negative vertex count", lineno)
    edges = []
    seen: set[tuple[int, ...]] = set()
    for lineno, body, _ in lines:
        ends = _ints(body, lineno)
        if len(ends) != arity:
            raise ParseError(f"expected {arity} vertices, got {len(ends)}", lineno)
        if any(not 0 <= v < nv for v in ends):
            raise ParseError(f"vertex out of range 0..{nv - 1}", lineno)
        if len(set(ends)) != arity:
            raise ParseError("repeated vertex inside an edge", lineno)
        key = tuple(sorted(ends))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    return nv, edges


def parse_h3(text: str) -> Hypergraph3:
    nv, edges = _parse_edges(text, "H3", 3)
    return Hypergraph3(nv, tuple(edges))


def emit_h3(H: Hypergraph3) -> str:
    return "".join([f"H3 {H.num_vertices}\n"] + [f"{a} {b} {c}\n" for a, b, c in H.edges])


def parse_graph(text: str) -> SimpleGraph:
    nv, edges = _parse_edges(text, "GRAPH", 2)
    return SimpleGraph(nv, tuple(edges))


def emit_graph(G: SimpleGraph, comment: Optional[str] = None) -> str:
    head = [f"# {comment}\n"] if comment else []
    return "".join(head + [f"GRAPH {G.num_vertices}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def graph_as_kpartite(G: SimpleGraph, k: int) -> KPartiteGraph:
    """Read vertex ``p * n + a`` as vertex ``a`` of part ``p``, with ``n = |V| / k``."""
    if k < 1 or G.num_vertices % k:
        raise ParseError(f"{G.num_vertices} vertices cannot be split into {k} equal parts")
    n = G.num_vertices // k
    try:
        return KPartiteGraph(k, n, tuple(((u // n, u % n), (v // n, v % n)) for u, v in G.edges))
    except SetlabError as exc:
        raise ParseError(str(exc)) from None


def kpartite_as_graph(G: KPartiteGraph) -> SimpleGraph:
    return SimpleGraph(G.k * G.n, tuple((a * G.n + i, b * G.n + j) for (a, i), (b, j) in G.edges))


def parse_cnf(text: str) -> CnfFormula:
    """DIMACS: ``c`` comment lines, a ``p cnf V C`` header, 0-terminated clauses."""
    header: Optional[tuple[int, int]] = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.strip()
        if not body or body.startswith("c"):
            continue
        if body.startswith("%"):
            break
        last_line = lineno
        if body.startswith("p"):
            parts = body.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line {body!r}", lineno)
            nv, nc = _ints(" ".join(parts[2:]), lineno)
            if nv < 0 or nc < 0:
                raise ParseError("negative counts in problem line", lineno)
            header = (nv, nc)
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' line", lineno)
        for lit in _ints(body, lineno):
            if lit == 0:
                try:
                    CnfFormula(header[0], (tuple(current),))
                except SetlabError as exc:
                    raise ParseError(str(exc), lineno) from None
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' line")
    if current:
        raise ParseError("last clause is not terminated by 0", last_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}", last_line or None)
    return CnfFormula(header[0], tuple(clauses))


def emit_cnf(F: CnfFormula) -> str:
    lines = [f"p cnf {F.num_vars} {len(F.clauses)}\n"]
    lines += [" ".join(map(str, c)) + " 0\n" for c in F.clauses]
    return "".join(lines)


def _parse_provenance(note: str, lineno: int) -> tuple:
    parts = note.split()
    if parts and parts[0] == "vertex" and len(parts) == 3:
        return ("vertex", *_ints(" ".join(parts[1:]), lineno))
    if parts and parts[0] == "edge" and len(parts) == 5:
        return ("edge", *_ints(" ".join(parts[1:]), lineno))
    raise ParseError(f"unrecognised provenance comment {note!r}", lineno)


def parse_pmdm(text: str) -> PmdmInstance:
    lines = _significant(text)
    lineno, (dims, values) = _header(lines, "PMDM", 2)
    if dims < 1 or values < 1:
        raise ParseError("dims and values must be positive", lineno)
    rows, prov = [], []
    for lineno, body, note in lines:
        row = _ints(body, lineno)
        if len(row) != dims:
            raise ParseError(f"expected {dims} entries, got {len(row)}", lineno)
        if any(not 0 <= x < values for x in row):
            raise ParseError(f"value outside 0..{values - 1}", lineno)
        rows.append(tuple(row))
        prov.append(_parse_provenance(note, lineno) if note else None)
    if all(p is None for p in prov):
        provenance = None
    elif any(p is None for p in prov):
        raise ParseError("provenance comments must be on every multiedge or on none")
    else:
        provenance = tuple(prov)
    return PmdmInstance(dims, values, tuple(rows), provenance)


def emit_pmdm(M: PmdmInstance) -> str:
    lines = [f"PMDM {M.dims} {M.values}\n"]
    for idx, row in enumerate(M.multiedges):
        text = " ".join(map(str, row))
        if M.provenance is not None:
            text += "  # " + " ".join(map(str, M.provenance[idx]))
        lines.append(text + "\n")
    return "".join(lines)


def emit_role_map(gd: GadgetDeck) -> str:
    """One line per card: ``<index> <role> <variable or clause id> [position]``."""
    return "".join(f"{idx} {gd.roles[idx]}\n" for idx in range(len(gd.deck)))
