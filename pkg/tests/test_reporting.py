import json

import numpy as np
import pytest

from coalition_interact.errors import DuplicateEdge, NonZeroEmptyCoalition, ParseError, SizeCapExceeded
from coalition_interact.games import horse_market, messages
from coalition_interact.indices import IndexKind, build_table, interaction_table
from coalition_interact.reporting.html_export import md_to_html
from coalition_interact.reporting.loaders import game_from_dict, graph_from_dict, parse_game, parse_graph
from coalition_interact.reporting.outputs import (
    format_value,
    game_to_json,
    get_output_filename_with_ext,
    render_table,
    save_output,
    table_to_csv,
    wide_table_csv,
    wide_table_markdown,
)


class TestLoaders:
    def test_bundled_games(self, data_dir):
        assert np.allclose(parse_game(data_dir / "messages.json").values, messages(5).values)
        assert np.allclose(parse_game(data_dir / "horse.json").values, horse_market().values)

    def test_bundled_graphs(self, data_dir, figure_graph, appendix_graph):
        assert parse_graph(data_dir / "figure_graph.json") == figure_graph
        assert parse_graph(data_dir / "appendix_graph.json") == appendix_graph

    def test_sparse_values(self):
        g = game_from_dict({"n": 3, "values": {"1,2": 4, "3": 1.5}})
        assert g.value(0b011) == 4
        assert g.value(0b100) == 1.5
        assert g.value(0b111) == 0

    def test_dense_roundtrip(self, tmp_path):
        path = tmp_path / "game.json"
        path.write_text(game_to_json(horse_market()))
        assert np.array_equal(parse_game(path).values, horse_market().values)

    @pytest.mark.parametrize(
        "doc,field",
        [
            ({"n": "3", "dense": []}, "n"),
            ({"n": 0, "dense": [0]}, "n"),
            ({"n": 2, "dense": [0, 1, 2]}, "dense"),
            ({"n": 2, "dense": [0, "a", 1, 2]}, "dense"),
            ({"n": 2, "values": [1, 2]}, "values"),
            ({"n": 2, "values": {"": 1}}, "values."),
            ({"n": 2, "values": {"1,4": 1}}, "values.1,4"),
            ({"n": 2, "values": {"1": "x"}}, "values.1"),
        ],
    )
    def test_bad_game_documents(self, doc, field):
        with pytest.raises(ParseError) as exc:
            game_from_dict(doc, "bad.json")
        assert exc.value.field == field
        assert "bad.json" in str(exc.value)

    def test_needs_exactly_one_encoding(self):
        with pytest.raises(ParseError):
            game_from_dict({"n": 2})
        with pytest.raises(ParseError):
            game_from_dict({"n": 1, "dense": [0, 1], "values": {"1": 1}})

    def test_nonzero_empty_coalition_propagates(self):
        with pytest.raises(NonZeroEmptyCoalition):
            game_from_dict({"n": 1, "dense": [1, 1]})

    def test_size_cap(self):
        with pytest.raises(SizeCapExceeded):
            game_from_dict({"n": 9, "values": {}}, max_n=8)

    def test_bad_json_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "n": 2,\n  "dense": [0, 1,\n}')
        with pytest.raises(ParseError) as exc:
            parse_game(path)
        assert exc.value.line is not None

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            parse_game(tmp_path / "absent.json")

    def test_bad_graph_documents(self):
        with pytest.raises(ParseError) as exc:
            graph_from_dict({"n": 3, "edges": [[1, 2, 3]]})
        assert exc.value.field == "edges[0]"
        with pytest.raises(ParseError):
            graph_from_dict({"n": 3})
        with pytest.raises(DuplicateEdge):
            graph_from_dict({"n": 3, "edges": [[1, 2], [2, 1]]})


class TestOutputs:
    def test_format_value(self):
        assert format_value(-1e-15) == "0.000000"
        assert format_value(-9.1666666, 2) == "-9.17"
        assert format_value(2) == "2.000000"

    def test_table_csv(self):
        table = interaction_table(horse_market(), IndexKind.SHAPLEY, max_order=1)
        lines = table_to_csv(table).splitlines()
        assert lines[0] == "coalition,order,shapley"
        assert lines[1] == "1,1,65.000000"
        assert len(lines) == 6

    def test_table_json(self):
        table = build_table(IndexKind.MYERSON, 2, lambda m: 0.5, coalitions=[0b11])
        doc = json.loads(render_table(table, "json"))
        assert doc == {"kind": "myerson", "n": 2, "rows": [{"coalition": "1,2", "order": 2, "value": 0.5}]}

    def test_wide_tables(self):
        rows = [("Shapley", [65.0, 0.0]), ("Network", [-16.666, 7.5])]
        csv_text = wide_table_csv([0b1, 0b10], rows)
        assert csv_text.splitlines() == ["index,1,2", "Shapley,65.00,0.00", "Network,-16.67,7.50"]
        md = wide_table_markdown([0b1, 0b10], rows, marks={("Network", 0b10): "¹"})
        assert "| Network | -16.67 | 7.50¹ |" in md

    def test_filenames(self):
        assert get_output_filename_with_ext("myerson", "Horse Market!", "csv") == "Myerson-horse_market.csv"
        assert get_output_filename_with_ext("axiom_report", "", ".JSON") == "AxiomReport-output.json"
        assert get_output_filename_with_ext("network", "x", "csv", version=3) == "Network-x-v3.csv"

    def test_save_output_overwrites_unless_versioned(self, tmp_path):
        first = save_output("a", "shapley", "messages", outputs_dir=tmp_path)
        again = save_output("b", "shapley", "messages", outputs_dir=tmp_path)
        assert first == again and again.read_text() == "b"
        versioned = save_output("c", "shapley", "messages", outputs_dir=tmp_path, auto_version=True)
        assert versioned.name == "Shapley-messages-v2.csv"


class TestHtmlExport:
    def test_wraps_theme_and_renders_tables(self):
        md = "# Tables\n\n| | {1} |\n|---|---:|\n| Myerson | 3.77 |\n"
        html = md_to_html(md, title="Messages & horse")
        assert html.startswith("<!DOCTYPE html>")
        assert "<title>Messages &amp; horse</title>" in html
        assert 'class="theme-report"' in html
        assert "<table>" in html
        assert "3.77</td>" in html

    def test_empty_body(self):
        assert "theme-content" in md_to_html("")
