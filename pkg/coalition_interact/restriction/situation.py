"""Communication situations, the restricted game, and the Myerson interaction indices."""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field

import numpy as np

from coalition_interact import config
from coalition_interact.errors import SizeMismatch, UnknownKind
from coalition_interact.games.coalition import CoalitionLike, check_cap, lowest_bit
from coalition_interact.games.game import DividendVector, TUGame
from coalition_interact.graphs.connectivity import reach
from coalition_interact.graphs.graph import CommGraph
from coalition_interact.indices.shapley import banzhaf_ii_div, shapley, sii_div
from coalition_interact.indices.table import IndexKind, InteractionTable, build_table

logger = logging.getLogger(__name__)


def build_restricted_game(game: TUGame, graph: CommGraph, max_n: int | None = None) -> TUGame:
    """v^Γ(S) = Σ over components C of Γ_S of v(C).

    Peels off the component of the lowest member: v^Γ(S) = v(K) + v^Γ(S\\K),
    and S\\K < S so the right term is already filled in.
    """
    check_cap(game.n, max_n, "restricted game")
    values = game.values
    out = np.zeros(1 << game.n)
    for S in range(1, 1 << game.n):
        K = reach(graph, lowest_bit(S), S)
        out[S] = values[K] + out[S & ~K]
    return TUGame(game.n, out)


@dataclass(frozen=True, eq=False)
class CommunicationSituation:
    """(N, v, Γ). The restricted game is built on first use, once, under a lock.

    max_n overrides the storage cap for the restricted game and travels with
    every situation derived from this one.
    """

    game: TUGame
    graph: CommGraph
    max_n: int | None = None
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)
    _restricted: TUGame | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.game.n != self.graph.n:
            raise SizeMismatch(f"Game has {self.game.n} players but the graph has {self.graph.n} nodes")

    @classmethod
    def complete(cls, game: TUGame, max_n: int | None = None) -> "CommunicationSituation":
        return cls(game, CommGraph.complete(game.n), max_n)

    @property
    def n(self) -> int:
        return self.game.n

    @property
    def restricted_game(self) -> TUGame:
        cached = self._restricted
        if cached is not None:
            return cached
        with self._lock:
            if self._restricted is None:
                built = build_restricted_game(self.game, self.graph, self.max_n)
                _ = built.dividends
                object.__setattr__(self, "_restricted", built)
                logger.debug("Built restricted game for n=%d, %d edges", self.n, self.graph.edge_count())
            return self._restricted

    @property
    def restricted_dividends(self) -> DividendVector:
        return self.restricted_game.dividends

    def with_graph(self, graph: CommGraph) -> "CommunicationSituation":
        return CommunicationSituation(self.game, graph, self.max_n)

    def with_game(self, game: TUGame) -> "CommunicationSituation":
        return CommunicationSituation(game, self.graph, self.max_n)

    def restrict_to(self, C: CoalitionLike) -> tuple["CommunicationSituation", tuple[int, ...]]:
        """(v|_C, Γ_C) relabeled 1..c, with the original ids."""
        sub_game, members = self.game.restrict_to(C)
        sub_graph, _ = self.graph.induced(C)
        return CommunicationSituation(sub_game, sub_graph, self.max_n), members

    def __repr__(self) -> str:
        return f"CommunicationSituation(n={self.n}, edges={self.graph.edges()})"


def restricted_game(sit: CommunicationSituation) -> TUGame:
    return sit.restricted_game


def myerson_value(sit: CommunicationSituation) -> np.ndarray:
    """Shapley value of the restricted game. Entry i-1 is player i."""
    return shapley(sit.restricted_game)


def mii(sit: CommunicationSituation, S: CoalitionLike) -> float:
    """Myerson interaction index: the Shapley interaction of v^Γ."""
    return sii_div(sit.restricted_game, S)


def nii(sit: CommunicationSituation, S: CoalitionLike) -> float:
    """Network-induced interaction MI - SI."""
    return mii(sit, S) - sii_div(sit.game, S)


def restricted_banzhaf(sit: CommunicationSituation, S: CoalitionLike) -> float:
    return banzhaf_ii_div(sit.restricted_game, S)


def game_centrality(sit: CommunicationSituation) -> np.ndarray:
    """Network-induced interaction of each single player."""
    return myerson_value(sit) - shapley(sit.game)


def is_complete(graph: CommGraph) -> bool:
    return graph.edge_count() == graph.n * (graph.n - 1) // 2


def myerson_table(
    sit: CommunicationSituation,
    kind: "str | IndexKind" = IndexKind.MYERSON,
    max_order: int = config.DEFAULT_MAX_ORDER,
) -> InteractionTable:
    kind = IndexKind.parse(kind)
    if kind is IndexKind.MYERSON:
        return build_table(kind, sit.n, lambda m: mii(sit, m), max_order)
    if kind is IndexKind.NETWORK:
        if is_complete(sit.graph):
            logger.warning("Network-induced interaction on a complete graph is identically 0")
        return build_table(kind, sit.n, lambda m: nii(sit, m), max_order)
    raise UnknownKind(f"myerson_table computes myerson or network tables, not {kind.value}")
