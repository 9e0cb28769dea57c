"""Play the two-player Set game against the engine in a terminal.

The human is player 1 and moves first. On each turn the available Sets are
listed with an index; the human answers with an index. The engine plays a
winning move when it has one and otherwise the first legal Set.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional, TextIO

from .cards import Deck, build_set_hypergraph
from .errors import PreconditionError
from .games import engine_move
from .oracles import NormalPlaySolver


class ScriptExhausted(PreconditionError):
    pass


def _fmt(triple) -> str:
    return " ".join(map(str, triple))


def play_repl(deck: Deck, read: Callable[[str], Optional[str]], out: TextIO, strict: bool = False) -> int:
    """Run one game. ``read(prompt)`` returns the next answer or ``None`` on EOF.

    With ``strict`` (script mode) a bad selection raises instead of
    re-prompting. Returns the number of the losing player, or 0 when the
    human quits.
    """
    H = build_set_hypergraph(deck)
    solver = NormalPlaySolver(H)
    removed = 0
    player = 1
    sets = "Set" if len(H.edges) == 1 else "Sets"
    out.write(f"deck: {len(deck)} cards, {len(H.edges)} {sets}\n")
    while True:
        legal = solver.legal(removed)
        if not legal:
            out.write(f"player {player} cannot move: player {player} loses\n")
            return player
        if player == 1:
            out.write("available Sets:\n")
            for pos, idx in enumerate(legal):
                out.write(f"  [{pos}] {_fmt(H.edges[idx])}\n")
            choice = None
            while choice is None:
                answer = read("select> ")
                if answer is None:
                    if strict:
                        raise ScriptExhausted("script ended before the game did")
                    out.write("game abandoned\n")
                    return 0
                answer = answer.strip()
                if answer in ("q", "quit"):
                    out.write("game abandoned\n")
                    return 0
                if answer.isdigit() and int(answer) < len(legal):
                    choice = legal[int(answer)]
                elif strict:
                    raise PreconditionError(f"illegal selection {answer!r}")
                else:
                    out.write(f"pick a number from 0 to {len(legal) - 1}\n")
            out.write(f"player 1 takes {_fmt(H.edges[choice])}\n")
        else:
            choice = engine_move(solver, removed)
            out.write(f"player 2 (engine) takes {_fmt(H.edges[choice])}\n")
        removed |= solver.masks[choice]
        player = 3 - player


def scripted_reader(lines: Iterable[str]) -> Callable[[str], Optional[str]]:
    pending = [ln for ln in (l.split("#", 1)[0].strip() for l in lines) if ln]
    it = iter(pending)
    return lambda prompt: next(it, None)
