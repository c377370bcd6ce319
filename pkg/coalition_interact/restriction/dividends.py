"""Dividends of the restricted game: the direct transform and two closed-form relations.

The closed forms are cross-checks only. compare_dividend_relations reports how
each one fares against the direct Möbius transform instead of asserting.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from coalition_interact import config
from coalition_interact.errors import EmptyCoalition, NotATree, PreconditionViolated, UnknownKind
from coalition_interact.games.coalition import (
    Coalition,
    CoalitionLike,
    as_bits,
    coalition_key,
    players_of,
    submasks,
)
from coalition_interact.graphs.connectivity import connects, minimal_connecting_masks
from coalition_interact.restriction.situation import CommunicationSituation

logger = logging.getLogger(__name__)


class DividendRelation(str, Enum):
    GENERAL = "general"
    TREE_INDUCED = "tree-induced"
    TREE_HULL = "tree-hull"


def _nonempty(S: CoalitionLike, n: int) -> int:
    bits = as_bits(S, n)
    if not bits:
        raise EmptyCoalition("Dividends are queried on non-empty coalitions")
    return bits


def restricted_dividend_direct(sit: CommunicationSituation, S: CoalitionLike) -> float:
    """Δ_{v^Γ}(S) read off the Möbius transform of the cached restricted game."""
    return float(sit.restricted_dividends.deltas[_nonempty(S, sit.n)])


def _union_sign(sets: list[int], target: int) -> int:
    """Σ of (-1)^{|M|+1} over non-empty index sets M whose union is exactly target."""
    signed = {0: 1}
    for A in sets:
        step = dict(signed)
        for union, count in signed.items():
            step[union | A] = step.get(union | A, 0) - count
        signed = step
    return -signed.get(target, 0)


def restricted_dividend_general(
    sit: CommunicationSituation, S: CoalitionLike, max_n: int | None = None
) -> float:
    """Σ over T ⊆ S and index sets M of minimal T-connecting sets with union S of (-1)^{|M|+1} Δ_v(T).

    Every (T, M) pair counts once. Minimal connecting sets are taken in Γ, which
    agrees with S's component since they never leave it.
    """
    bits = _nonempty(S, sit.n)
    if not connects(sit.graph, bits, bits):
        raise PreconditionViolated(f"{{{coalition_key(bits)}}} is not connected in its induced subgraph")
    deltas = sit.game.dividends.deltas
    total = 0.0
    for T in submasks(bits):
        if not T or abs(deltas[T]) <= config.VALUE_TOL:
            continue
        inside = [R for R in minimal_connecting_masks(sit.graph, T, max_n) if R & ~bits == 0]
        sign = _union_sign(inside, bits)
        if sign:
            total += sign * float(deltas[T])
    return total


def _hull_cut_nodes(sit: CommunicationSituation, S: int) -> int:
    """Members x of S that lie on a path joining the rest of S."""
    out = 0
    for x in players_of(S):
        rest = S & ~(1 << (x - 1))
        if rest and sit.graph.convex_hull(rest).bits >> (x - 1) & 1:
            out |= 1 << (x - 1)
    return out


def restricted_dividend_tree(
    sit: CommunicationSituation,
    S: CoalitionLike,
    reading: "str | DividendRelation" = DividendRelation.TREE_INDUCED,
) -> float:
    """Σ_{L ⊆ C(S)} Δ_v(S \\ L) over the cut nodes C(S), on forests."""
    bits = _nonempty(S, sit.n)
    if not sit.graph.is_forest():
        raise NotATree("The tree dividend relation needs a forest")
    if not connects(sit.graph, bits, bits):
        raise PreconditionViolated(f"{{{coalition_key(bits)}}} is not connected in its induced subgraph")
    reading = DividendRelation(reading)
    if reading is DividendRelation.TREE_HULL:
        cut = _hull_cut_nodes(sit, bits)
    elif reading is DividendRelation.TREE_INDUCED:
        cut = sit.graph.cut_nodes(bits).bits
    else:
        raise UnknownKind(f"{reading.value} is not a tree reading")
    deltas = sit.game.dividends.deltas
    return float(sum(deltas[bits & ~L] for L in submasks(cut)))


@dataclass(frozen=True)
class DividendCheck:
    coalition: Coalition
    direct: float
    formula: float

    @property
    def residual(self) -> float:
        return abs(self.direct - self.formula)

    def agrees(self, tol: float = config.AXIOM_TOL) -> bool:
        return self.residual <= tol


@dataclass(frozen=True)
class DividendReport:
    relation: DividendRelation
    checks: list[DividendCheck] = field(default_factory=list)
    tol: float = config.AXIOM_TOL

    @property
    def agrees(self) -> bool:
        return all(c.agrees(self.tol) for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def disagreements(self) -> list[DividendCheck]:
        return [c for c in self.checks if not c.agrees(self.tol)]


def compare_dividend_relations(
    sit: CommunicationSituation,
    relation: "str | DividendRelation" = DividendRelation.GENERAL,
    tol: float = config.AXIOM_TOL,
    max_n: int | None = None,
) -> DividendReport:
    """Evaluate a closed-form relation on every connected S and compare with the direct transform."""
    relation = DividendRelation(relation)
    checks = []
    for S in range(1, 1 << sit.n):
        if not connects(sit.graph, S, S):
            continue
        if relation is DividendRelation.GENERAL:
            formula = restricted_dividend_general(sit, S, max_n)
        else:
            formula = restricted_dividend_tree(sit, S, relation)
        checks.append(DividendCheck(Coalition(S, sit.n), restricted_dividend_direct(sit, S), formula))
    report = DividendReport(relation, checks, tol)
    for bad in report.disagreements():
        logger.warning(
            "%s relation disagrees at %s: direct=%.12g formula=%.12g",
            relation.value, bad.coalition, bad.direct, bad.formula,
        )
    return report
