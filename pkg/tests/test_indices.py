import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coalition_interact.errors import (
    EmptyCoalition,
    OrderOutOfRange,
    OverlappingArguments,
    PreconditionViolated,
    UnknownKind,
)
from coalition_interact.games import TUGame, horse_market, messages, unanimity
from coalition_interact.indices import (
    IndexKind,
    InteractionTable,
    banzhaf_ii,
    banzhaf_ii_deriv,
    banzhaf_ii_div,
    banzhaf_value,
    build_table,
    coalitions_up_to,
    interaction_table,
    s_derivative,
    shapley,
    shapley_marginal,
    sii_deriv,
    sii_div,
)


@st.composite
def games(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    values = draw(st.lists(st.integers(-10, 10), min_size=1 << n, max_size=1 << n))
    values[0] = 0
    return TUGame(n, np.array(values, dtype=np.float64))


class TestShapley:
    def test_messages_is_symmetric(self):
        assert np.allclose(shapley(messages(5)), [4, 4, 4, 4, 4])

    def test_horse_market(self):
        assert np.allclose(shapley(horse_market()), [65, 0, 0, 15, 20])

    def test_efficiency(self, random_game):
        g = random_game(5, seed=3)
        assert shapley(g).sum() == pytest.approx(g.values[-1])

    @settings(max_examples=40)
    @given(games())
    def test_marginal_form_matches_dividend_form(self, game):
        assert np.allclose(shapley_marginal(game), shapley(game), atol=1e-9)

    def test_banzhaf_value_of_unanimity(self):
        assert np.allclose(banzhaf_value(unanimity(3, [1, 2])), [0.5, 0.5, 0])


class TestInteraction:
    def test_horse_pairs(self):
        h = horse_market()
        assert sii_div(h, 0b10001) == pytest.approx(55)
        assert sii_div(h, 0b11000) == pytest.approx(-45)
        assert sii_div(h, 0b01001) == pytest.approx(45)
        assert sii_div(h, 0b00110) == 0

    def test_messages_pairs(self):
        table = interaction_table(messages(5), IndexKind.SHAPLEY, max_order=2)
        pairs = table.by_order()[2]
        assert len(pairs) == 10
        assert all(v == pytest.approx(2) for _, v in pairs)

    def test_singletons_are_shapley(self, random_game):
        g = random_game(4, seed=1)
        for i in range(1, 5):
            assert sii_div(g, 1 << (i - 1)) == pytest.approx(shapley(g)[i - 1])

    @pytest.mark.parametrize("t_bits,s_bits", [(0b111, 0b001), (0b111, 0b011), (0b1101, 0b0101), (0b1111, 0b1111)])
    def test_unanimity_closed_form(self, t_bits, s_bits):
        g = unanimity(4, t_bits)
        expected = 1 / (t_bits.bit_count() - s_bits.bit_count() + 1)
        assert sii_div(g, s_bits) == pytest.approx(expected)
        assert banzhaf_ii_div(g, s_bits) == pytest.approx(0.5 ** (t_bits.bit_count() - s_bits.bit_count()))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_unanimity_closed_form_exhaustive(self, n):
        full = (1 << n) - 1
        for T in range(1, full + 1):
            g = unanimity(n, T)
            t = T.bit_count()
            for S in range(1, full + 1):
                inside = S & ~T == 0
                expected_sii = 1 / (t - S.bit_count() + 1) if inside else 0.0
                expected_bii = 0.5 ** (t - S.bit_count()) if inside else 0.0
                assert sii_div(g, S) == pytest.approx(expected_sii, abs=1e-12)
                assert banzhaf_ii_div(g, S) == pytest.approx(expected_bii, abs=1e-12)

    def test_unanimity_outside_carrier(self):
        assert sii_div(unanimity(4, 0b0011), 0b0101) == 0

    @settings(max_examples=60)
    @given(games(), st.data())
    def test_derivative_form_matches_dividend_form(self, game, data):
        S = data.draw(st.integers(1, (1 << game.n) - 1))
        assert sii_deriv(game, S) == pytest.approx(sii_div(game, S), abs=1e-9)
        assert banzhaf_ii_deriv(game, S) == pytest.approx(banzhaf_ii_div(game, S), abs=1e-9)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_derivative_form_on_random_suite(self, random_game, n):
        for seed in range(100):
            g = random_game(n, seed)
            for S in range(1, 1 << n):
                assert abs(sii_deriv(g, S) - sii_div(g, S)) <= 1e-9
                assert abs(banzhaf_ii_deriv(g, S) - banzhaf_ii_div(g, S)) <= 1e-9

    def test_banzhaf_form_dispatch(self):
        h = horse_market()
        assert banzhaf_ii(h, 0b11000, form="derivative") == pytest.approx(banzhaf_ii(h, 0b11000))
        with pytest.raises(UnknownKind):
            banzhaf_ii(h, 0b11000, form="matrix")

    def test_s_derivative(self):
        h = horse_market()
        assert s_derivative(h, 0b10000, 0b00001) == 100
        assert s_derivative(h, 0b11000, 0b00001) == -90
        with pytest.raises(OverlappingArguments):
            s_derivative(h, 0b00011, 0b00010)

    def test_empty_coalition(self):
        with pytest.raises(EmptyCoalition):
            sii_div(messages(3), 0)


class TestTables:
    def test_coalitions_up_to_order(self):
        masks = coalitions_up_to(4, 2)
        assert len(masks) == 10
        assert masks[:4] == [1, 2, 4, 8]
        with pytest.raises(OrderOutOfRange):
            coalitions_up_to(4, 5)
        with pytest.raises(OrderOutOfRange):
            coalitions_up_to(4, 0)

    def test_rows_and_merge(self):
        a = build_table(IndexKind.SHAPLEY, 3, lambda m: m, coalitions=[0b011, 0b001])
        b = build_table(IndexKind.SHAPLEY, 3, lambda m: -m, coalitions=[0b100])
        merged = a.merge(b)
        assert [c.bits for c, _ in merged.rows()] == [0b001, 0b100, 0b011]
        assert merged.value(0b100) == -4
        assert merged.max_order == 2
        with pytest.raises(PreconditionViolated):
            a.merge(build_table(IndexKind.BANZHAF, 3, lambda m: 0, coalitions=[1]))

    def test_empty_coalition_rejected(self):
        with pytest.raises(PreconditionViolated):
            InteractionTable(IndexKind.SHAPLEY, 2, {0: 1.0})

    def test_graph_kinds_need_a_graph(self):
        with pytest.raises(UnknownKind):
            interaction_table(messages(3), "myerson")
        with pytest.raises(UnknownKind):
            IndexKind.parse("owen")
        assert IndexKind.parse(" Banzhaf ") is IndexKind.BANZHAF
