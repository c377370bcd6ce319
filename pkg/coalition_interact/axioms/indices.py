"""Graph interaction indices that can be plugged into the axiom checks.

Besides the Myerson interaction index these are five deliberately flawed
variants, each built to break exactly one characterizing property:

- banzhaf_graph: Banzhaf interaction of the restricted game.
- fgn_modified: Myerson plus a bonus alpha on unanimity carriers that are
  connected and cannot be made a veto graph partnership by cutting boundary edges.
- scaled_essential: Myerson on each unanimity component, scaled by how many
  non-essential intermediaries of the carrier S contains.
- first_order_only: the Myerson value on singletons, 0 above.
- squared_game: Myerson of v^2 above order one whenever v is strictly positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

from coalition_interact import config
from coalition_interact.errors import EmptyCoalition, UnknownKind
from coalition_interact.games.builtins import unanimity
from coalition_interact.games.coalition import CoalitionLike, as_bits, check_cap, players_of
from coalition_interact.graphs.connectivity import (
    connects,
    essential_intermediaries_mask,
    intermediaries_mask,
)
from coalition_interact.graphs.graph import CommGraph
from coalition_interact.restriction.situation import (
    CommunicationSituation,
    mii,
    myerson_value,
    restricted_banzhaf,
)


class GraphIndexKind(str, Enum):
    MYERSON = "myerson"
    BANZHAF_GRAPH = "banzhaf_graph"
    FGN_MODIFIED = "fgn_modified"
    SCALED_ESSENTIAL = "scaled_essential"
    FIRST_ORDER_ONLY = "first_order_only"
    SQUARED_GAME = "squared_game"

    @classmethod
    def parse(cls, value: "str | GraphIndexKind") -> "GraphIndexKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower().replace("-", "_"))
        except ValueError as e:
            options = ", ".join(k.value for k in cls)
            raise UnknownKind(f"Unknown graph index {value!r}. Use one of: {options}") from e


@lru_cache(maxsize=4096)
def _unanimity_situation(graph: CommGraph, T: int) -> CommunicationSituation:
    return CommunicationSituation(unanimity(graph.n, T), graph)


def _unanimity_mii(graph: CommGraph, T: int, S: int) -> float:
    return mii(_unanimity_situation(graph, T), S)


def _boundary(graph: CommGraph, S: int) -> list[tuple[int, int]]:
    """Edges with exactly one endpoint in S."""
    return [(i, j) for i, j in graph.edges() if bool(S >> (i - 1) & 1) != bool(S >> (j - 1) & 1)]


def _is_unanimity_veto_graph_partnership(graph: CommGraph, T: int, S: int) -> bool:
    """S ⊆ P ∪ EB(P) for some non-empty P ⊆ T; the veto partnerships of u_T are exactly those P."""
    P = T
    while P:
        if S & ~(P | essential_intermediaries_mask(graph, P)) == 0:
            return True
        P = (P - 1) & T
    return False


@lru_cache(maxsize=65536)
def _bonus_applies(graph: CommGraph, T: int, S: int) -> bool:
    """|S| >= 2, T ⊆ S, S connected, and no cut of boundary edges makes S a veto graph partnership."""
    if S.bit_count() < 2 or T & ~S or not connects(graph, S, S):
        return False
    boundary = _boundary(graph, S)
    for size in range(len(boundary) + 1):
        for cut in combinations(boundary, size):
            reduced = graph
            for i, j in cut:
                reduced = reduced.remove_edge(i, j)
            if _is_unanimity_veto_graph_partnership(reduced, T, S):
                return False
    return True


def fgn_modified(sit: CommunicationSituation, S: CoalitionLike, alpha: float = 1.0) -> float:
    bits = as_bits(S, sit.n)
    deltas = sit.game.dividends
    support = deltas.support()
    if not support:
        return 0.0
    bonus = sum(deltas.deltas[T] for T in support if T & ~bits == 0 and _bonus_applies(sit.graph, T, bits))
    return mii(sit, bits) + alpha * float(bonus)


@lru_cache(maxsize=65536)
def _essential_scale(graph: CommGraph, T: int, S: int) -> int:
    essential = T | essential_intermediaries_mask(graph, T)
    loose = intermediaries_mask(graph, T) & ~essential_intermediaries_mask(graph, T)
    if S & essential and S & loose:
        return (S & loose).bit_count()
    return 1


def scaled_essential(sit: CommunicationSituation, S: CoalitionLike) -> float:
    bits = as_bits(S, sit.n)
    deltas = sit.game.dividends
    return float(sum(
        deltas.deltas[T] * _essential_scale(sit.graph, T, bits) * _unanimity_mii(sit.graph, T, bits)
        for T in deltas.support()
    ))


def first_order_only(sit: CommunicationSituation, S: CoalitionLike) -> float:
    bits = as_bits(S, sit.n)
    if bits.bit_count() != 1:
        return 0.0
    return float(myerson_value(sit)[players_of(bits)[0] - 1])


@lru_cache(maxsize=1024)
def _squared_situation(sit: CommunicationSituation) -> CommunicationSituation:
    return sit.with_game(sit.game.squared())


def is_strictly_positive(sit: CommunicationSituation) -> bool:
    return bool((sit.game.values[1:] > 0).all())


def squared_game(sit: CommunicationSituation, S: CoalitionLike) -> float:
    bits = as_bits(S, sit.n)
    if bits.bit_count() >= 2 and is_strictly_positive(sit):
        return mii(_squared_situation(sit), bits)
    return mii(sit, bits)


@dataclass(frozen=True)
class GraphIndexFunction:
    """An evaluator (situation, coalition) -> real with a kind tag."""

    kind: GraphIndexKind
    alpha: float = 1.0

    def __call__(self, sit: CommunicationSituation, S: CoalitionLike) -> float:
        return alt_index(self.kind, sit, S, self.alpha)

    @property
    def label(self) -> str:
        if self.kind is GraphIndexKind.FGN_MODIFIED:
            return f"{self.kind.value}(alpha={self.alpha:g})"
        return self.kind.value


def alt_index(
    kind: "str | GraphIndexKind",
    sit: CommunicationSituation,
    S: CoalitionLike,
    alpha: float = 1.0,
) -> float:
    """Evaluate the named graph interaction index at S."""
    kind = GraphIndexKind.parse(kind)
    bits = as_bits(S, sit.n)
    if not bits:
        raise EmptyCoalition("Graph interaction indices are defined on non-empty coalitions")
    if kind in (GraphIndexKind.FGN_MODIFIED, GraphIndexKind.SCALED_ESSENTIAL):
        check_cap(sit.n, None, f"{kind.value} decomposition", default=config.ENUM_MAX_N)
    if kind is GraphIndexKind.MYERSON:
        return mii(sit, bits)
    if kind is GraphIndexKind.BANZHAF_GRAPH:
        return restricted_banzhaf(sit, bits)
    if kind is GraphIndexKind.FGN_MODIFIED:
        return fgn_modified(sit, bits, alpha)
    if kind is GraphIndexKind.SCALED_ESSENTIAL:
        return scaled_essential(sit, bits)
    if kind is GraphIndexKind.FIRST_ORDER_ONLY:
        return first_order_only(sit, bits)
    return squared_game(sit, bits)


ALL_INDICES = tuple(GraphIndexKind)
