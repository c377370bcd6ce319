import logging

import numpy as np
import pytest

from coalition_interact import config
from coalition_interact.axioms import exhaustive_small_suite, random_suite
from coalition_interact.errors import (
    NotATree,
    NotAVetoGraphPartnership,
    PreconditionViolated,
    SizeCapExceeded,
    SizeMismatch,
)
from coalition_interact.games import (
    example1a,
    example2,
    horse_market,
    is_veto_partnership,
    messages,
    null_players,
    quotient_game,
    unanimity,
)
from coalition_interact.graphs import CommGraph, components, quotient_graph
from coalition_interact.indices import IndexKind, shapley
from coalition_interact.reporting.commands import PRINTED_DISCREPANCIES
from coalition_interact.restriction import (
    CommunicationSituation,
    DividendRelation,
    compare_dividend_relations,
    game_centrality,
    graph_null_players,
    is_graph_null,
    is_veto_graph_partnership,
    mii,
    myerson_table,
    myerson_value,
    nii,
    restricted_dividend_direct,
    restricted_dividend_general,
    restricted_dividend_tree,
    restricted_game,
    srvpc_quotient,
    veto_graph_partnerships,
    veto_graph_witness,
)

# print precision of the published tables
TABLE_TOL = 0.005

PATH_12_23 = [(1, 2), (2, 3)]
STAR_12_13 = [(1, 2), (1, 3)]


def sit_of(game, edges):
    return CommunicationSituation(game, CommGraph.from_edges(game.n, edges))


class TestRestrictedGame:
    def test_star_turns_pair_into_grand_coalition(self):
        g = restricted_game(sit_of(unanimity(3, [2, 3]), STAR_12_13))
        assert np.allclose(g.values, unanimity(3, [1, 2, 3]).values)

    def test_broken_carrier_gives_null_game(self):
        g = restricted_game(sit_of(unanimity(4, [2, 3, 4]), PATH_12_23))
        assert not g.values.any()

    def test_complete_graph_is_identity(self, random_game):
        v = random_game(5, seed=7)
        assert np.allclose(CommunicationSituation.complete(v).restricted_game.values, v.values)

    def test_sum_over_components(self, messages_sit):
        cut = messages_sit.with_graph(messages_sit.graph.remove_edge(3, 5))
        # {3,5} now splits into two singletons worth 0
        assert cut.restricted_game.value(0b10100) == 0
        assert cut.restricted_game.value(0b11111) == messages(5).value(0b01111)

    def test_size_mismatch(self, figure_graph):
        with pytest.raises(SizeMismatch):
            CommunicationSituation(messages(4), figure_graph)

    def test_restricted_game_is_cached(self, horse_sit):
        assert horse_sit.restricted_game is horse_sit.restricted_game

    def test_max_n_travels_with_situation(self, messages_sit, monkeypatch):
        sit = CommunicationSituation(messages_sit.game, messages_sit.graph, max_n=8)
        monkeypatch.setattr(config, "MAX_N", 3)
        with pytest.raises(SizeCapExceeded):
            _ = messages_sit.with_graph(messages_sit.graph.remove_edge(3, 5)).restricted_game
        cut = sit.with_graph(sit.graph.remove_edge(3, 5))
        assert cut.max_n == 8
        assert cut.restricted_game.value(0b11111) == messages(5).value(0b01111)
        assert sit.with_game(horse_market()).max_n == 8


class TestMyerson:
    def test_messages_values(self, messages_sit):
        expected = [3.77, 3.60, 5.93, 3.77, 2.93]
        assert np.allclose(myerson_value(messages_sit), expected, atol=TABLE_TOL)

    def test_horse_values(self, horse_sit):
        expected = [48.33, 7.5, 18.33, 15, 10.83]
        assert np.allclose(myerson_value(horse_sit), expected, atol=TABLE_TOL)

    def test_interaction_values(self, messages_sit, horse_sit):
        assert mii(messages_sit, 0b10100) == pytest.approx(4.83, abs=TABLE_TOL)
        assert mii(horse_sit, 0b00110) == pytest.approx(-30, abs=TABLE_TOL)

    def test_network_induced_values(self, messages_sit, horse_sit):
        assert nii(messages_sit, 0b00100) == pytest.approx(1.93, abs=TABLE_TOL)
        assert nii(messages_sit, 0b00110) == pytest.approx(-0.50, abs=TABLE_TOL)
        assert nii(horse_sit, 0b10001) == pytest.approx(-35, abs=TABLE_TOL)
        assert nii(horse_sit, 0b10000) == pytest.approx(-9.17, abs=TABLE_TOL)

    def test_messages_pairs_that_differ_from_print(self, messages_sit):
        exact = {0b01001: (1 / 6, -11 / 6), 0b10001: (7 / 6, -5 / 6), 0b11000: (7 / 6, -5 / 6)}
        for S, (mi, ni) in exact.items():
            assert mii(messages_sit, S) == pytest.approx(mi, abs=1e-12)
            assert nii(messages_sit, S) == pytest.approx(ni, abs=1e-12)
            printed_mi, _ = PRINTED_DISCREPANCIES[("messages", "table2", "Myerson", S)]
            printed_ni, _ = PRINTED_DISCREPANCIES[("messages", "table2", "Network", S)]
            assert abs(printed_mi - mi) > TABLE_TOL
            assert abs(printed_ni - ni) > TABLE_TOL
        # players 1 and 4 are interchangeable on this graph
        assert mii(messages_sit, 0b10001) == pytest.approx(mii(messages_sit, 0b11000))

    def test_centrality_is_singleton_network_interaction(self, horse_sit):
        cent = game_centrality(horse_sit)
        assert all(cent[i] == pytest.approx(nii(horse_sit, 1 << i)) for i in range(5))

    def test_zero_across_components(self):
        sit = sit_of(messages(3), [(1, 2)])
        assert mii(sit, 0b101) == 0
        assert mii(sit, 0b011) == pytest.approx(2)

    def test_complete_graph_has_no_network_interaction(self, random_game):
        sit = CommunicationSituation.complete(random_game(4, seed=2))
        assert all(abs(nii(sit, S)) < 1e-9 for S in range(1, 16))

    def test_component_efficiency(self):
        for sit in random_suite(count=40, n_range=(2, 6), seed=11):
            mu = myerson_value(sit)
            for comp in components(sit.graph, (1 << sit.n) - 1):
                total = sum(mu[p - 1] for p in comp.members())
                assert total == pytest.approx(sit.game.value(comp), abs=1e-9)

    def test_table_kinds(self, horse_sit, caplog):
        table = myerson_table(horse_sit, "myerson", max_order=1)
        assert len(table) == 5
        complete = CommunicationSituation.complete(horse_market())
        with caplog.at_level(logging.WARNING):
            myerson_table(complete, IndexKind.NETWORK, max_order=1)
        assert "complete graph" in caplog.text


class TestGraphNull:
    def test_path_keeps_intermediary_out(self):
        sit = sit_of(example1a(), [(1, 2), (2, 3), (3, 4)])
        assert not is_graph_null(sit, 2)
        assert 2 in null_players(sit.restricted_game)

    def test_everyone_graph_null_when_carrier_is_cut(self):
        sit = sit_of(unanimity(4, [2, 3, 4]), PATH_12_23)
        assert graph_null_players(sit) == {1, 2, 3, 4}

    def test_broker_is_not_graph_null(self):
        sit = sit_of(unanimity(3, [2, 3]), STAR_12_13)
        assert not is_graph_null(sit, 1)
        assert graph_null_players(sit) == frozenset()

    def test_graph_null_players_are_null_in_restricted_game(self):
        for sit in exhaustive_small_suite(4):
            restricted_null = null_players(sit.restricted_game)
            assert graph_null_players(sit) <= restricted_null


class TestVetoGraphPartnership:
    def test_example2_converse_fails(self):
        sit = sit_of(example2(), [(1, 2), (2, 3), (3, 4)])
        assert not is_veto_graph_partnership(sit, 0b0111)
        assert is_veto_partnership(sit.restricted_game, 0b0111)

    def test_pair_on_an_edge(self):
        assert is_veto_graph_partnership(sit_of(unanimity(2, [1, 2]), [(1, 2)]), 0b11)

    def test_essential_intermediary_joins(self, figure_graph):
        sit = CommunicationSituation(unanimity(5, [1, 5]), figure_graph)
        assert veto_graph_witness(sit, 0b10101) == 0b10001
        assert 0b10101 in veto_graph_partnerships(sit)
        assert veto_graph_witness(sit, 0b00010) is None

    def test_partnerships_survive_restriction(self):
        for sit in exhaustive_small_suite(4):
            for GP in veto_graph_partnerships(sit):
                assert is_veto_partnership(sit.restricted_game, GP)


class TestQuotientSituation:
    def test_pair_collapses_to_one_player(self):
        qsit, qmap = srvpc_quotient(sit_of(unanimity(2, [1, 2]), [(1, 2)]), 0b11)
        assert qsit.n == 1
        assert qsit.game.value(0b1) == 1
        assert mii(qsit, 1 << (qmap.proxy_id - 1)) == pytest.approx(1)

    def test_hull_partnership(self, figure_graph):
        sit = CommunicationSituation(unanimity(5, [1, 5]), figure_graph)
        qsit, qmap = srvpc_quotient(sit, 0b10101)
        assert qsit.n == 3
        proxy = 1 << (qmap.proxy_id - 1)
        assert mii(qsit, proxy) == pytest.approx(mii(sit, 0b10101))

    def test_connected_partnership_commutes(self, figure_graph):
        sit = CommunicationSituation(unanimity(5, [1, 5]), figure_graph)
        qsit, _ = srvpc_quotient(sit, 0b10101)
        qgame, _ = quotient_game(sit.game, 0b10101)
        qgraph, _ = quotient_graph(figure_graph, 0b10101)
        other = CommunicationSituation(qgame, qgraph).restricted_game
        assert np.allclose(qsit.game.values, other.values)

    def test_rejects_non_partnership(self, horse_sit):
        with pytest.raises(NotAVetoGraphPartnership):
            srvpc_quotient(horse_sit, 0b00110)


class TestDividendRelations:
    def test_direct(self):
        sit = sit_of(unanimity(3, [2, 3]), STAR_12_13)
        assert restricted_dividend_direct(sit, 0b111) == pytest.approx(1)
        assert restricted_dividend_direct(sit, 0b110) == 0

    def test_general_on_star(self):
        sit = sit_of(unanimity(3, [2, 3]), STAR_12_13)
        assert restricted_dividend_general(sit, 0b111) == pytest.approx(1)
        with pytest.raises(PreconditionViolated):
            restricted_dividend_general(sit, 0b110)

    def test_tree_on_path(self):
        sit = sit_of(unanimity(3, [1, 3]), PATH_12_23)
        for reading in (DividendRelation.TREE_INDUCED, DividendRelation.TREE_HULL):
            assert restricted_dividend_tree(sit, 0b111, reading) == pytest.approx(1)

    def test_tree_needs_forest(self, messages_sit):
        with pytest.raises(NotATree):
            restricted_dividend_tree(messages_sit, 0b00011)

    @pytest.mark.parametrize("seed", range(6))
    def test_all_relations_agree_on_trees(self, random_game, random_tree, seed):
        n = 4 + seed % 4
        sit = CommunicationSituation(random_game(n, seed), random_tree(n, seed))
        for relation in DividendRelation:
            report = compare_dividend_relations(sit, relation)
            assert report.agrees, report.disagreements()[:3]

    @pytest.mark.parametrize("seed", range(50))
    def test_tree_relation_on_random_trees(self, random_game, random_tree, seed):
        n = 2 + seed % 7
        sit = CommunicationSituation(random_game(n, 100 + seed), random_tree(n, seed))
        for relation in (DividendRelation.TREE_INDUCED, DividendRelation.TREE_HULL):
            report = compare_dividend_relations(sit, relation, tol=1e-9)
            assert report.agrees, report.disagreements()[:3]

    def test_general_relation_agrees_with_cycles(self, random_game, appendix_graph, figure_graph):
        for k, graph in enumerate((appendix_graph, figure_graph)):
            sit = CommunicationSituation(random_game(5, 20 + k), graph)
            report = compare_dividend_relations(sit, DividendRelation.GENERAL)
            assert report.agrees
            assert report.max_residual <= 1e-9

    def test_shapley_of_restricted_dividends(self, horse_sit):
        # Shapley of v^Γ rebuilt from the direct dividends
        d = horse_sit.restricted_dividends.deltas
        phi5 = sum(d[T] / bin(T).count("1") for T in range(32) if T & 0b10000)
        assert phi5 == pytest.approx(myerson_value(horse_sit)[4])
        assert phi5 != pytest.approx(shapley(horse_market())[4])
