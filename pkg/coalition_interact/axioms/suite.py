"""Situation families for the axiom checks and the independence harness.

Every game produced here is either strictly positive or zero on singletons.
squared_game gates on positivity of the whole game, so mixing the two kinds
inside one game would break its component-restriction condition.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from coalition_interact import config
from coalition_interact.errors import PreconditionViolated
from coalition_interact.games.builtins import messages, unanimity
from coalition_interact.games.coalition import lattice_indices, popcounts
from coalition_interact.games.game import TUGame
from coalition_interact.graphs.graph import CommGraph
from coalition_interact.restriction.situation import CommunicationSituation
from coalition_interact.axioms.checks import (
    AXIOMS,
    Axiom,
    AxiomReport,
    Verdict,
    check_admissibility,
    check_axiom,
)
from coalition_interact.axioms.indices import GraphIndexFunction, GraphIndexKind

logger = logging.getLogger(__name__)

LinearityPair = tuple[TUGame, TUGame, CommunicationSituation, float]

APPENDIX_EDGES = ((1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5))

COUNTEREXAMPLES = (
    GraphIndexKind.BANZHAF_GRAPH,
    GraphIndexKind.FGN_MODIFIED,
    GraphIndexKind.SCALED_ESSENTIAL,
    GraphIndexKind.FIRST_ORDER_ONLY,
    GraphIndexKind.SQUARED_GAME,
)

EXPECTED_VIOLATIONS = {
    GraphIndexKind.MYERSON: None,
    GraphIndexKind.BANZHAF_GRAPH: Axiom.ICE,
    GraphIndexKind.FGN_MODIFIED: Axiom.IGN,
    GraphIndexKind.SCALED_ESSENTIAL: Axiom.IF,
    GraphIndexKind.FIRST_ORDER_ONLY: Axiom.ISRVPC,
    GraphIndexKind.SQUARED_GAME: Axiom.IL,
}

KNOWN_DISCREPANCIES = {
    (GraphIndexKind.FGN_MODIFIED, Axiom.ISRVPC): (
        "The bonus is tested against the boundary of the queried coalition, which differs "
        "between a situation and its quotient. On u_{1,5} with edges 12,13,14,25,35,45, "
        "partnership {1} and S={2,3,5}, the bonus counts once on the left and twice on the right."
    ),
    (GraphIndexKind.SCALED_ESSENTIAL, Axiom.ISRVPC): (
        "The scale factor counts non-essential intermediaries, and collapsing a partnership "
        "changes which players are intermediaries. On u_{1,5} with edges 12,13,14,25,35,45, "
        "partnership {1,5} and S={3,4}, the two sides are -1 and -1/2."
    ),
}


def _game(n: int, values: np.ndarray) -> TUGame:
    values = np.asarray(values, dtype=np.float64).copy()
    values[0] = 0.0
    return TUGame(n, values)


def fixed_games(n: int) -> list[TUGame]:
    """Ten games on n >= 2 players: six zero on singletons, four strictly positive."""
    if n < 2:
        raise PreconditionViolated(f"fixed_games needs at least two players, got n={n}")
    idx = lattice_indices(n)
    s = popcounts(n).astype(np.float64)
    pair = 0b11
    with_pair = ((idx & pair) == pair).astype(np.float64)
    grand = (1 << n) - 1
    return [
        unanimity(n, pair),
        unanimity(n, grand),
        messages(n),
        _game(n, 3 * with_pair - unanimity(n, grand).values) if n > 2 else unanimity(n, pair).scale(2),
        _game(n, (s >= 2).astype(np.float64)),
        _game(n, np.maximum(s - 1, 0) ** 2),
        _game(n, s ** 2),
        _game(n, sum(((idx >> k) & 1) * (k + 1) for k in range(n)) + 2 * with_pair),
        _game(n, s),
        _game(n, 1 + s * (s - 1)),
    ]


def all_graphs(n: int) -> list[CommGraph]:
    """Every labelled graph on n nodes, in edge-subset order."""
    pairs = list(combinations(range(1, n + 1), 2))
    return [
        CommGraph.from_edges(n, [p for k, p in enumerate(pairs) if chosen >> k & 1])
        for chosen in range(1 << len(pairs))
    ]


def exhaustive_small_suite(max_nodes: int = 4) -> list[CommunicationSituation]:
    """All graphs on 2..max_nodes nodes, each paired with the ten fixed games."""
    out = []
    for n in range(2, max_nodes + 1):
        games = fixed_games(n)
        out.extend(CommunicationSituation(g, graph) for graph in all_graphs(n) for g in games)
    logger.debug("Exhaustive suite up to %d nodes: %d situations", max_nodes, len(out))
    return out


def _random_game(rng: np.random.Generator, n: int, flavour: int) -> TUGame:
    idx = lattice_indices(n)
    s = popcounts(n)
    if flavour == 0:
        values = np.where(s >= 2, rng.integers(0, 10, size=1 << n), 0)
    elif flavour == 1:
        values = rng.integers(1, 10, size=1 << n)
    else:
        # worth only on coalitions containing {1,2}, so {1,2} is a veto partnership
        values = np.where((idx & 0b11) == 0b11, rng.integers(1, 10, size=1 << n), 0)
    return _game(n, values)


def _random_graph(rng: np.random.Generator, n: int) -> CommGraph:
    pairs = combinations(range(1, n + 1), 2)
    return CommGraph.from_edges(n, [p for p in pairs if rng.random() < 0.5])


def random_suite(
    count: int = 200, n_range: tuple[int, int] = (2, 5), seed: int = 0
) -> list[CommunicationSituation]:
    """Seeded random situations with integer worths and Erdős–Rényi graphs (p=1/2), n inclusive in n_range."""
    lo, hi = n_range
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(lo, hi + 1))
        out.append(CommunicationSituation(_random_game(rng, n, k % 3), _random_graph(rng, n)))
    return out


def linearity_pairs(
    count: int = config.LINEARITY_PAIRS, n_range: tuple[int, int] = (2, 4), seed: int = 0
) -> list[LinearityPair]:
    """Random (v, w, situation on the shared graph, alpha); both games share a flavour."""
    lo, hi = n_range
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(lo, hi + 1))
        graph = _random_graph(rng, n)
        v, w = _random_game(rng, n, k % 3), _random_game(rng, n, k % 3)
        alpha = float(rng.integers(-6, 7)) / 2
        out.append((v, w, CommunicationSituation(v, graph), alpha))
    return out


def companion_pairs(sit: CommunicationSituation, count: int = 5, seed: int = 0) -> list[LinearityPair]:
    """Pair one situation's game with random partners on its own graph."""
    rng = np.random.default_rng(seed)
    positive = bool((sit.game.values[1:] > 0).all())
    out = []
    for _ in range(count):
        w = _random_game(rng, sit.n, 1 if positive else 0)
        out.append((sit.game, w, sit, float(rng.integers(-6, 7)) / 2))
    return out


@dataclass(frozen=True)
class IndependenceWitness:
    """An instance on which a counterexample index breaks its targeted property."""

    kind: GraphIndexKind
    axiom: Axiom
    situations: tuple[CommunicationSituation, ...] = ()
    pairs: tuple[LinearityPair, ...] = ()
    note: str = ""


def independence_witnesses() -> list[IndependenceWitness]:
    path3 = CommGraph.from_edges(3, [(1, 2), (2, 3)])
    appendix = CommGraph.from_edges(5, APPENDIX_EDGES)
    ones = _game(2, np.ones(4))
    return [
        IndependenceWitness(
            GraphIndexKind.BANZHAF_GRAPH, Axiom.ICE,
            (CommunicationSituation(unanimity(3, [1, 2, 3]), CommGraph.complete(3)),),
            note="u_{1,2,3} on the complete graph: singletons sum to 3/4, v(N)=1 (chosen instance)",
        ),
        IndependenceWitness(
            GraphIndexKind.FGN_MODIFIED, Axiom.IGN,
            (CommunicationSituation(unanimity(3, [1, 2]), path3),),
            note="u_{1,2} on the path 1-2-3: player 3 is graph-null yet GI(N) = alpha",
        ),
        IndependenceWitness(
            GraphIndexKind.SCALED_ESSENTIAL, Axiom.IF,
            (CommunicationSituation(unanimity(5, [1, 5]), appendix),),
            note="u_{1,5}: 1/3 and -1/3 at {2,3,4} and {3,4,5}; 0 and -1 after removing edge 25",
        ),
        IndependenceWitness(
            GraphIndexKind.FIRST_ORDER_ONLY, Axiom.ISRVPC,
            (CommunicationSituation(unanimity(2, [1, 2]), CommGraph.complete(2)),),
            note="u_{1,2} on the edge 12: GI({1,2}) = 0 but the collapsed value is 1",
        ),
        IndependenceWitness(
            GraphIndexKind.SQUARED_GAME, Axiom.IL,
            pairs=((ones, ones, CommunicationSituation(ones, CommGraph.complete(2)), 1.0),),
            note="v1 = v2 = 1 on every non-empty coalition: (v1+v2)^2 differs from v1^2 + v2^2",
        ),
    ]


def _witness_situations() -> list[CommunicationSituation]:
    return [sit for w in independence_witnesses() for sit in w.situations]


def _witness_pairs() -> list[LinearityPair]:
    return [pair for w in independence_witnesses() for pair in w.pairs]


def independence_suite(
    alpha: float = 1.0,
    count: int = 60,
    n_range: tuple[int, int] = (2, 4),
    seed: int = 0,
    max_n: int | None = None,
) -> list[AxiomReport]:
    """For each counterexample index: admissibility, then the five properties.

    Every property is checked on the witness instances followed by a seeded
    random suite; IL uses the witness pairs followed by random pairs.
    """
    sits = _witness_situations() + random_suite(count, n_range, seed)
    pairs = _witness_pairs() + linearity_pairs(config.LINEARITY_PAIRS, n_range, seed)
    reports = []
    for kind in COUNTEREXAMPLES:
        index = GraphIndexFunction(kind, alpha)
        reports.append(check_admissibility(index, sits, max_n=max_n))
        for axiom in AXIOMS:
            reports.append(check_axiom(index, axiom, sits, pairs=pairs, max_n=max_n))
    return reports


@dataclass(frozen=True)
class Mismatch:
    kind: GraphIndexKind
    axiom: Axiom
    expected: Verdict
    actual: Verdict
    explanation: str | None = None

    @property
    def documented(self) -> bool:
        return self.explanation is not None


def expected_verdict(kind: GraphIndexKind, axiom: Axiom) -> Verdict:
    return Verdict.VIOLATED if EXPECTED_VIOLATIONS.get(kind) is axiom else Verdict.HOLDS


def compare_to_appendix(reports: list[AxiomReport]) -> list[Mismatch]:
    """Reports whose verdict differs from EXPECTED_VIOLATIONS, with the documented reason if any."""
    out = []
    for report in reports:
        kind = GraphIndexKind.parse(report.index.split("(")[0])
        expected = expected_verdict(kind, report.axiom)
        if report.verdict is expected:
            continue
        out.append(Mismatch(kind, report.axiom, expected, report.verdict, KNOWN_DISCREPANCIES.get((kind, report.axiom))))
    return out
