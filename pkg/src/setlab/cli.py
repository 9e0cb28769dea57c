"""Command-line entry point.

Exit codes: 0 for YES or success, 1 for NO, 2 for usage and input errors,
3 when a capacity guard trips.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .cards import enumerate_sets
from .cnf import expand_unit_clauses
from .domination import reduce_ieds_to_deck, solve_min_ieds, solve_min_rset
from .errors import CapacityError, SetlabError
from .games import KernelReport, arc_kayles_within, solve_2p_within, solve_game_winner
from .generators import (
    gen_full_deck, gen_random_3cnf, gen_random_deck, gen_random_graph, gen_random_h3, gen_random_kpartite,
)
from .oracles import oracle_pmdm
from .packing import build_sat_gadget_deck, normalize_formula, solve_max_rset
from .play import play_repl, scripted_reader
from .pmdm import build_mcc_to_pmdm, extract_clique
from .verify import SUITES, run_suites

EPILOG = """\
output:
  decision commands print YES or NO on the first line; with --witness the
  certificate follows, one Set (card indices i j k) or edge per line.
  enumerate prints every Set as "i j k" and then "total N".
  reduce and gen write the instance to -o (or stdout) and report a summary.
  verify prints one "suite NAME seed S: P passed, F failed" line per suite.

exit codes:
  0 YES / success, 1 NO, 2 usage or input error, 3 capacity guard tripped
"""


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _decision(ok: bool, witness_lines: Sequence[str] = ()) -> int:
    print("YES" if ok else "NO")
    for line in witness_lines:
        print(line)
    return 0 if ok else 1


def _triples(triples) -> list[str]:
    return [" ".join(map(str, t)) for t in triples]


def cmd_enumerate(args) -> int:
    sets = enumerate_sets(formats.parse_deck(_read(args.deck)))
    for line in _triples(sets):
        print(line)
    print(f"total {len(sets)}")
    return 0


def cmd_max_set(args) -> int:
    ok, witness = solve_max_rset(formats.parse_deck(_read(args.deck)), args.r)
    return _decision(ok, _triples(witness) if args.witness else ())


def cmd_min_set(args) -> int:
    ok, witness = solve_min_rset(formats.parse_deck(_read(args.deck)), args.r)
    return _decision(ok, _triples(witness) if ok and args.witness else ())


def cmd_ieds(args) -> int:
    H = formats.parse_h3(_read(args.hypergraph))
    ok, witness = solve_min_ieds(H, args.r)
    return _decision(ok, _triples(H.edges[i] for i in witness) if ok and args.witness else ())


def cmd_two_player(args) -> int:
    deck = formats.parse_deck(_read(args.deck))
    if args.r is None:
        return _decision(solve_game_winner(deck))
    report = KernelReport() if args.report and args.method == "kernel" else None
    code = _decision(solve_2p_within(deck, args.r, args.method, report))
    if report is not None:
        print(report.render())
    return code


def cmd_arc_kayles(args) -> int:
    G = formats.parse_graph(_read(args.graph))
    return _decision(arc_kayles_within(G, args.r, args.method))


def cmd_reduce(args) -> int:
    source = _read(args.input)
    map_text = None
    if args.kind == "sat2set":
        F = normalize_formula(expand_unit_clauses(formats.parse_cnf(source)))
        gd = build_sat_gadget_deck(F)
        text = formats.emit_deck(gd.deck)
        map_text = formats.emit_role_map(gd)
        summary = (f"{len(gd.deck)} cards over {gd.deck.n} attributes, "
                   f"{len(gd.intended_sets)} Sets, target {F.num_vars + len(F.clauses)}")
    elif args.kind == "ieds2set":
        G = formats.parse_graph(source)
        deck = reduce_ieds_to_deck(G)
        text = formats.emit_deck(deck)
        map_text = "".join(
            [f"{i} vertex {i}\n" for i in range(G.num_vertices)]
            + [f"{G.num_vertices + t} edge {u} {v}\n" for t, (u, v) in enumerate(G.edges)]
        )
        summary = f"{len(deck)} cards over {deck.n} attributes, {len(G.edges)} Sets"
    else:
        K = formats.graph_as_kpartite(formats.parse_graph(source), args.parts)
        M = build_mcc_to_pmdm(K)
        text = formats.emit_pmdm(M)
        map_text = "".join(f"{i} {' '.join(map(str, p))}\n" for i, p in enumerate(M.provenance))
        summary = f"{len(M.multiedges)} multiedges, {M.dims} dimensions, {M.values} values"
    _write(args.output, text)
    if args.map:
        _write(args.map, map_text)
    if args.output not in (None, "-"):
        print(summary)
    return 0


def cmd_pmdm(args) -> int:
    M = formats.parse_pmdm(_read(args.instance))
    matching = oracle_pmdm(M)
    lines: list[str] = []
    if matching is not None and args.witness:
        lines = [str(i) for i in matching]
        if M.provenance is not None:
            clique = extract_clique(M, matching)
            lines.append("clique " + " ".join(f"{p}:{a}" for p, a in clique))
    return _decision(matching is not None, lines)


def cmd_gen(args) -> int:
    kind, seed = args.kind, args.seed

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise SetlabError(f"gen {kind} needs " + ", ".join("--" + m for m in missing))

    if kind == "deck":
        need("n", "m")
        text = formats.emit_deck(gen_random_deck(args.n, args.m, seed))
    elif kind == "full-deck":
        need("n")
        text = formats.emit_deck(gen_full_deck(args.n))
    elif kind == "cnf":
        need("vars", "clauses")
        text = formats.emit_cnf(gen_random_3cnf(args.vars, args.clauses, seed))
    elif kind == "graph":
        need("vertices", "p")
        text = formats.emit_graph(gen_random_graph(args.vertices, args.p, seed))
    elif kind == "h3":
        need("vertices", "edges")
        text = formats.emit_h3(gen_random_h3(args.vertices, args.edges, seed))
    else:
        need("k", "n", "p")
        K = gen_random_kpartite(args.k, args.n, args.p, seed)
        text = formats.emit_graph(formats.kpartite_as_graph(K), comment=f"{K.k} parts of {K.n} vertices")
    _write(args.output, text)
    return 0


def cmd_play(args) -> int:
    deck = formats.parse_deck(_read(args.deck))
    if args.script:
        reader = scripted_reader(_read(args.script).splitlines())
        play_repl(deck, reader, sys.stdout, strict=True)
        return 0

    def ask(prompt: str) -> Optional[str]:
        try:
            return input(prompt)
        except EOFError:
            return None

    play_repl(deck, ask, sys.stdout)
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, args.seed, args.cases)
    for res in results:
        print(res.render())
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setlab",
        description="Exact solvers and reductions for the card game SET.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("enumerate", help="list every Set of a deck")
    p.add_argument("--deck", required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("max-set", help="are there r pairwise disjoint Sets?")
    p.add_argument("--deck", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_max_set)

    p = sub.add_parser("min-set", help="can at most r disjoint Sets be removed to leave no Set?")
    p.add_argument("--deck", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_min_set)

    p = sub.add_parser("ieds", help="independent edge dominating set of at most r edges in a 3-uniform hypergraph")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_ieds)

    p = sub.add_parser("two-player", help="does player 1 win (within r moves, if --r is given)?")
    p.add_argument("--deck", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--method", choices=["kernel", "brute"], default="kernel")
    p.add_argument("--report", action="store_true", help="print the kernelization report")
    p.set_defaults(func=cmd_two_player)

    p = sub.add_parser("arc-kayles", help="does player 1 win Arc Kayles within r moves?")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=["fpt", "brute"], default="fpt")
    p.set_defaults(func=cmd_arc_kayles)

    p = sub.add_parser("reduce", help="build a reduction instance")
    p.add_argument("kind", choices=["sat2set", "ieds2set", "mcc2pmdm"])
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--map", help="sidecar file mapping output items to their source")
    p.add_argument("--parts", type=int, default=3, help="mcc2pmdm: number of equal parts (default 3)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("pmdm", help="does a perfect multi-dimensional matching exist?")
    p.add_argument("--instance", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_pmdm)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("kind", choices=["deck", "full-deck", "cnf", "graph", "h3", "kpartite"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, help="attributes (deck) or vertices per part (kpartite)")
    p.add_argument("--m", type=int, help="cards")
    p.add_argument("--vars", type=int)
    p.add_argument("--clauses", type=int)
    p.add_argument("--vertices", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--k", type=int, help="parts")
    p.add_argument("--p", type=int, help="edge probability per mille")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("play", help="play against the engine")
    p.add_argument("--deck", required=True)
    p.add_argument("--script", help="file of selections to replay instead of reading stdin")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("verify", help="run a seeded oracle-equivalence suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"setlab: {exc}", file=sys.stderr)
        return 3
    except (SetlabError, OSError) as exc:
        print(f"setlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
