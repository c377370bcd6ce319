"""Graph null players, veto graph partnerships, and the quotient used by reduced consistency."""
from __future__ import annotations

import logging

from coalition_interact import config
from coalition_interact.errors import EmptyCoalition, NotAVetoGraphPartnership, PlayerOutOfRange
from coalition_interact.games.coalition import (
    CoalitionLike,
    as_bits,
    check_cap,
    coalition_key,
    players_of,
    submasks,
)
from coalition_interact.games.game import QuotientMap, quotient_game
from coalition_interact.games.properties import null_mask, veto_partnerships
from coalition_interact.graphs.connectivity import component_masks, essential_intermediaries_mask, intermediaries_mask
from coalition_interact.graphs.graph import quotient_graph
from coalition_interact.restriction.situation import CommunicationSituation

logger = logging.getLogger(__name__)


def _graph_null_in_component(sit: CommunicationSituation, component: int, max_n: int | None) -> int:
    """Graph-null players of one component, judged on (v|_K, Γ_K); returns an original mask."""
    local, members = sit.restrict_to(component)
    local_null = null_mask(local.game)
    out = 0
    for k, player in enumerate(members):
        bit = 1 << k
        if not local_null & bit:
            continue
        ok = True
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if bit in (1 << a, 1 << b):
                    continue
                pair = (1 << a) | (1 << b)
                if local_null & pair:
                    continue
                if intermediaries_mask(local.graph, pair, max_n) & bit:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out |= 1 << (player - 1)
    return out


def graph_null_players(sit: CommunicationSituation, max_n: int | None = None) -> frozenset[int]:
    """D_0^Γ(v): null in the game restricted to the player's component, and never an
    intermediary between two non-null players of that component."""
    check_cap(sit.n, max_n, "graph-null detection", default=config.ENUM_MAX_N)
    whole = (1 << sit.n) - 1
    found = 0
    for comp in component_masks(sit.graph, whole):
        found |= _graph_null_in_component(sit, comp, max_n)
    return frozenset(players_of(found))


def is_graph_null(sit: CommunicationSituation, i: int, max_n: int | None = None) -> bool:
    if not 1 <= i <= sit.n:
        raise PlayerOutOfRange(f"Player {i} outside 1..{sit.n}")
    whole = (1 << sit.n) - 1
    comp = next(c for c in component_masks(sit.graph, whole) if c >> (i - 1) & 1)
    return bool(_graph_null_in_component(sit, comp, max_n) >> (i - 1) & 1)


def veto_graph_witness(sit: CommunicationSituation, GP: CoalitionLike, max_n: int | None = None) -> int | None:
    """Smallest veto partnership P with GP ⊆ P ∪ EB_Γ(P), or None."""
    bits = as_bits(GP, sit.n)
    if not bits:
        raise EmptyCoalition("A veto graph partnership must be non-empty")
    for P in veto_partnerships(sit.game, max_n=max_n):
        if bits & ~P & ~essential_intermediaries_mask(sit.graph, P, max_n) == 0:
            logger.debug("{%s} is a veto graph partnership via P={%s}", coalition_key(bits), coalition_key(P))
            return P
    return None


def is_veto_graph_partnership(sit: CommunicationSituation, GP: CoalitionLike, max_n: int | None = None) -> bool:
    return veto_graph_witness(sit, GP, max_n) is not None


def veto_graph_partnerships(sit: CommunicationSituation, max_n: int | None = None) -> list[int]:
    """Every veto graph partnership, ascending by cardinality then bits."""
    found: set[int] = set()
    for P in veto_partnerships(sit.game, max_n=max_n):
        hull = P | essential_intermediaries_mask(sit.graph, P, max_n)
        found.update(g for g in submasks(hull) if g)
    return sorted(found, key=lambda g: (g.bit_count(), g))


def srvpc_quotient(
    sit: CommunicationSituation, P: CoalitionLike, max_n: int | None = None
) -> tuple[CommunicationSituation, QuotientMap]:
    """(v^Γ_[P], Γ_[P]): the restricted game and the graph, both collapsed at P."""
    bits = as_bits(P, sit.n)
    if not bits or not is_veto_graph_partnership(sit, bits, max_n):
        raise NotAVetoGraphPartnership(f"{{{coalition_key(bits)}}} is not a veto graph partnership")
    qgame, qmap = quotient_game(sit.restricted_game, bits)
    qgraph, _ = quotient_graph(sit.graph, bits)
    return CommunicationSituation(qgame, qgraph, sit.max_n), qmap
