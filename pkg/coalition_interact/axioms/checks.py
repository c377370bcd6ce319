"""Finite, replayable checks of the five characterizing properties of graph interaction indices."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

from coalition_interact import config
from coalition_interact.games.coalition import check_cap, coalition_key, players_of, submasks
from coalition_interact.games.game import TUGame
from coalition_interact.graphs.connectivity import component_masks
from coalition_interact.restriction.partnerships import graph_null_players, srvpc_quotient, veto_graph_partnerships
from coalition_interact.restriction.situation import CommunicationSituation
from coalition_interact.axioms.indices import GraphIndexFunction

logger = logging.getLogger(__name__)

GraphIndex = Callable[[CommunicationSituation, int], float]


class Axiom(str, Enum):
    ICE = "ICE"
    IGN = "IGN"
    IF = "IF"
    ISRVPC = "ISRVPC"
    IL = "IL"
    GII = "GII"  # graph-interaction-index admissibility conditions

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    Axiom.ICE: "I-Component Efficiency",
    Axiom.IGN: "I-Graph Null",
    Axiom.IF: "I-Fairness",
    Axiom.ISRVPC: "I-Strong Reduced Veto Partnership Consistency",
    Axiom.IL: "I-Linearity",
    Axiom.GII: "Graph interaction index conditions",
}

AXIOMS = (Axiom.ICE, Axiom.IGN, Axiom.IF, Axiom.ISRVPC, Axiom.IL)


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"


@dataclass(frozen=True)
class Witness:
    """One failing instance. replay() recomputes both sides from scratch."""

    situation: CommunicationSituation
    description: str
    compute: Callable[[], tuple[float, float]] = field(repr=False, compare=False)
    lhs: float = 0.0
    rhs: float = 0.0
    coalitions: tuple[int, ...] = ()
    edge: tuple[int, int] | None = None

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    def replay(self) -> float:
        lhs, rhs = self.compute()
        return abs(lhs - rhs)

    def as_dict(self) -> dict:
        return {
            "description": self.description,
            "n": self.situation.n,
            "edges": [list(e) for e in self.situation.graph.edges()],
            "game": self.situation.game.as_dict(),
            "coalitions": [coalition_key(c) for c in self.coalitions],
            "edge": list(self.edge) if self.edge else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    index: str
    verdict: Verdict
    checked: int
    domain: str
    tol: float = config.AXIOM_TOL
    max_residual: float = 0.0
    witness: Witness | None = None

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def as_dict(self) -> dict:
        return {
            "axiom": self.axiom.value,
            "index": self.index,
            "verdict": self.verdict.value,
            "checked": self.checked,
            "domain": self.domain,
            "tol": self.tol,
            "max_residual": self.max_residual,
            "witness": self.witness.as_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class _Instance:
    situation: CommunicationSituation
    description: str
    compute: Callable[[], tuple[float, float]]
    coalitions: tuple[int, ...] = ()
    edge: tuple[int, int] | None = None


def _label(index: GraphIndex) -> str:
    return index.label if isinstance(index, GraphIndexFunction) else getattr(index, "__name__", "index")


def _ice_instances(index: GraphIndex, sit: CommunicationSituation) -> Iterator[_Instance]:
    for C in component_masks(sit.graph, (1 << sit.n) - 1):
        def compute(C=C):
            return sum(index(sit, 1 << (p - 1)) for p in players_of(C)), float(sit.game.values[C])
        yield _Instance(sit, f"component {{{coalition_key(C)}}}", compute, (C,))


def _ign_instances(index: GraphIndex, sit: CommunicationSituation) -> Iterator[_Instance]:
    whole = (1 << sit.n) - 1
    for i in sorted(graph_null_players(sit)):
        bit = 1 << (i - 1)
        for S in submasks(whole & ~bit):
            def compute(T=S | bit):
                return index(sit, T), 0.0
            yield _Instance(sit, f"graph-null player {i}, S={{{coalition_key(S)}}}", compute, (S | bit,))


def _if_instances(index: GraphIndex, sit: CommunicationSituation) -> Iterator[_Instance]:
    whole = (1 << sit.n) - 1
    for i, j in sit.graph.edges():
        cut = sit.with_graph(sit.graph.remove_edge(i, j))
        pair = (1 << (i - 1)) | (1 << (j - 1))
        for S in submasks(whole & ~pair):
            Si, Sj = S | 1 << (i - 1), S | 1 << (j - 1)

            def compute(Si=Si, Sj=Sj, cut=cut):
                return index(sit, Si) - index(cut, Si), index(sit, Sj) - index(cut, Sj)
            yield _Instance(sit, f"edge ({i},{j}), S={{{coalition_key(S)}}}", compute, (Si, Sj), (i, j))


def _srvpc_instances(index: GraphIndex, sit: CommunicationSituation) -> Iterator[_Instance]:
    whole = (1 << sit.n) - 1
    for P in veto_graph_partnerships(sit):
        quotient, qmap = srvpc_quotient(sit, P)
        for S in submasks(whole & ~P):
            def compute(S=S, quotient=quotient, qmap=qmap):
                return index(sit, P | S), index(quotient, qmap.project(P | S))
            yield _Instance(sit, f"partnership {{{coalition_key(P)}}}, S={{{coalition_key(S)}}}", compute, (P, S))


def _admissibility_instances(index: GraphIndex, sit: CommunicationSituation) -> Iterator[_Instance]:
    whole = (1 << sit.n) - 1
    comps = component_masks(sit.graph, whole)
    locals_ = {C: sit.restrict_to(C) for C in comps}
    for S in range(1, whole + 1):
        home = next((C for C in comps if S & ~C == 0), None)
        if home is None:
            def compute(S=S):
                return index(sit, S), 0.0
            yield _Instance(sit, f"{{{coalition_key(S)}}} spans components", compute, (S,))
            continue
        local, members = locals_[home]
        local_S = sum(1 << k for k, p in enumerate(members) if S >> (p - 1) & 1)

        def compute(S=S, local=local, local_S=local_S):
            return index(sit, S), index(local, local_S)
        yield _Instance(sit, f"{{{coalition_key(S)}}} inside {{{coalition_key(home)}}}", compute, (S,))


def _linearity_instances(
    index: GraphIndex, pairs: Sequence[tuple[TUGame, TUGame, CommunicationSituation, float]]
) -> Iterator[_Instance]:
    for v, w, base, alpha in pairs:
        sv, sw = base.with_game(v), base.with_game(w)
        ssum, sscaled = base.with_game(v + w), base.with_game(v.scale(alpha))
        for S in range(1, 1 << base.n):
            def additive(S=S, sv=sv, sw=sw, ssum=ssum):
                return index(ssum, S), index(sv, S) + index(sw, S)

            def homogeneous(S=S, sv=sv, sscaled=sscaled):
                return index(sscaled, S), alpha * index(sv, S)
            yield _Instance(ssum, f"additivity at {{{coalition_key(S)}}}", additive, (S,))
            yield _Instance(sscaled, f"homogeneity x{alpha:g} at {{{coalition_key(S)}}}", homogeneous, (S,))


_INSTANCES = {
    Axiom.ICE: _ice_instances,
    Axiom.IGN: _ign_instances,
    Axiom.IF: _if_instances,
    Axiom.ISRVPC: _srvpc_instances,
    Axiom.GII: _admissibility_instances,
}


def _cap_for(axiom: Axiom) -> int:
    return config.SRVPC_MAX_N if axiom is Axiom.ISRVPC else config.AXIOM_MAX_N


def _run(axiom: Axiom, label: str, instances: Iterable[_Instance], domain: str, tol: float) -> AxiomReport:
    checked = 0
    worst = 0.0
    for inst in instances:
        lhs, rhs = inst.compute()
        checked += 1
        residual = abs(lhs - rhs)
        worst = max(worst, residual)
        if residual > tol:
            witness = Witness(inst.situation, inst.description, inst.compute, lhs, rhs, inst.coalitions, inst.edge)
            logger.info("%s violates %s at %s: %.12g vs %.12g", label, axiom.value, inst.description, lhs, rhs)
            return AxiomReport(axiom, label, Verdict.VIOLATED, checked, domain, tol, residual, witness)
    return AxiomReport(axiom, label, Verdict.HOLDS, checked, domain, tol, worst)


def check_axiom(
    index: GraphIndex,
    axiom: "str | Axiom",
    sits: Sequence[CommunicationSituation] = (),
    pairs: Sequence[tuple[TUGame, TUGame, CommunicationSituation, float]] | None = None,
    tol: float = config.AXIOM_TOL,
    max_n: int | None = None,
) -> AxiomReport:
    """Check one property over a finite family; stops at the first violation.

    IL uses pairs (v, w, situation carrying the shared graph, alpha); when none
    are given, consecutive situations on the same graph are paired with alpha=2.5.
    """
    axiom = Axiom(axiom)
    label = _label(index)
    if axiom is Axiom.IL:
        if pairs is None:
            pairs = pairs_from_situations(sits)
        for _, _, base, _ in pairs:
            check_cap(base.n, max_n, "linearity check", default=config.AXIOM_MAX_N)
        domain = f"{len(pairs)} game pairs, all non-empty coalitions"
        return _run(axiom, label, _linearity_instances(index, pairs), domain, tol)

    for sit in sits:
        check_cap(sit.n, max_n, f"{axiom.value} check", default=_cap_for(axiom))
    sizes = sorted({s.n for s in sits})
    domain = f"{len(sits)} situations, n in {sizes}, exhaustive per situation"
    make = _INSTANCES[axiom]
    instances = (inst for sit in sits for inst in make(index, sit))
    return _run(axiom, label, instances, domain, tol)


def check_admissibility(
    index: GraphIndex,
    sits: Sequence[CommunicationSituation],
    tol: float = config.AXIOM_TOL,
    max_n: int | None = None,
) -> AxiomReport:
    """Zero on component-spanning coalitions and unchanged when restricted to a component."""
    return check_axiom(index, Axiom.GII, sits, tol=tol, max_n=max_n)


def pairs_from_situations(
    sits: Sequence[CommunicationSituation], alpha: float = 2.5
) -> list[tuple[TUGame, TUGame, CommunicationSituation, float]]:
    out = []
    for a, b in zip(sits, sits[1:]):
        if a.n == b.n and a.graph == b.graph:
            out.append((a.game, b.game, a, alpha))
    return out
