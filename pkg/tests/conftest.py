"""Shared fixtures: the worked-example games and graphs, and seeded random factories."""
import numpy as np
import pytest

from coalition_interact.games import TUGame, horse_market, messages
from coalition_interact.graphs import CommGraph
from coalition_interact.restriction import CommunicationSituation

FIGURE_EDGES = [(1, 2), (1, 3), (2, 4), (3, 4), (3, 5)]
APPENDIX_EDGES = [(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]


@pytest.fixture
def figure_graph():
    return CommGraph.from_edges(5, FIGURE_EDGES)


@pytest.fixture
def appendix_graph():
    return CommGraph.from_edges(5, APPENDIX_EDGES)


@pytest.fixture
def messages_sit(figure_graph):
    return CommunicationSituation(messages(5), figure_graph)


@pytest.fixture
def horse_sit(figure_graph):
    return CommunicationSituation(horse_market(), figure_graph)


@pytest.fixture
def random_game():
    """Factory: random_game(n, seed) with integer worths in [-5, 5]."""

    def make(n: int, seed: int = 0) -> TUGame:
        rng = np.random.default_rng(seed)
        values = rng.integers(-5, 6, size=1 << n).astype(np.float64)
        values[0] = 0.0
        return TUGame(n, values)

    return make


@pytest.fixture
def random_tree():
    """Factory: random_tree(n, seed), each node k >= 2 attached to a random earlier node."""

    def make(n: int, seed: int = 0) -> CommGraph:
        rng = np.random.default_rng(seed)
        return CommGraph.from_edges(n, [(int(rng.integers(1, k)), k) for k in range(2, n + 1)])

    return make


@pytest.fixture
def data_dir():
    from coalition_interact import config

    return config.DATA_DIR
