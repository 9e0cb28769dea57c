"""setlab: exact solvers and reductions around the card game SET."""

from .cards import Deck, build_set_hypergraph, enumerate_sets, full_deck, is_set, third_card
from .cnf import CnfFormula
from .domination import reduce_ieds_to_deck, solve_ieds_fpt, solve_min_rset
from .errors import (
    CapacityError, ConstructionError, DimensionError, ParseError, PreconditionError, SetlabError,
)
from .games import arc_kayles_within, solve_2p_within, solve_game_winner
from .hypergraph import Hypergraph3, SimpleGraph
from .packing import build_sat_gadget_deck, normalize_formula, solve_max_rset
from .pmdm import KPartiteGraph, PmdmInstance, build_mcc_to_pmdm

__version__ = "0.1.0"
