import csv
import io
import json

import pytest

from coalition_interact import config
from coalition_interact.errors import VERDICT_MISMATCH_EXIT_CODE
from coalition_interact.main import main


@pytest.fixture
def horse(data_dir):
    return str(data_dir / "horse.json")


@pytest.fixture
def messages_game(data_dir):
    return str(data_dir / "messages.json")


@pytest.fixture
def figure(data_dir):
    return str(data_dir / "figure_graph.json")


def _row(csv_text, label):
    return next(line for line in csv_text.splitlines() if line.startswith(label + ","))


def _cells(csv_text):
    """Rows of a wide table as {label: {coalition key: cell}}."""
    header, *body = csv.reader(io.StringIO(csv_text))
    return {row[0]: dict(zip(header[1:], row[1:])) for row in body}


class TestCompute:
    def test_shapley_singletons(self, horse, tmp_path, capsys):
        out = tmp_path / "shapley.csv"
        assert main(["compute", "--game", horse, "--order", "1", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "coalition,order,shapley"
        assert lines[1:] == ["1,1,65.000000", "2,1,0.000000", "3,1,0.000000", "4,1,15.000000", "5,1,20.000000"]
        assert capsys.readouterr().out == out.read_text()

    def test_network_single_coalition_json(self, horse, figure, tmp_path):
        out = tmp_path / "ni.json"
        code = main([
            "compute", "--game", horse, "--graph", figure,
            "--index", "network", "--coalition", "1,5", "--format", "json", "--out", str(out),
        ])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["kind"] == "network"
        assert doc["rows"][0]["coalition"] == "1,5"
        assert doc["rows"][0]["value"] == pytest.approx(-35)

    def test_default_output_location(self, horse, tmp_path, monkeypatch):
        monkeypatch.setattr(config, "GENERATED_DIR", tmp_path)
        assert main(["compute", "--game", horse, "--index", "banzhaf"]) == 0
        assert (tmp_path / "Banzhaf-horse.csv").exists()

    def test_size_cap_exit_code(self, horse, tmp_path):
        assert main(["compute", "--game", horse, "--max-n", "4", "--out", str(tmp_path / "x.csv")]) == 3

    def test_missing_file_exit_code(self, tmp_path, capsys):
        assert main(["compute", "--game", str(tmp_path / "absent.json")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_coalition_exit_code(self, horse, tmp_path):
        assert main(["compute", "--game", horse, "--coalition", "1,9", "--out", str(tmp_path / "x.csv")]) == 2

    def test_max_n_reaches_restricted_game(self, tmp_path, monkeypatch):
        monkeypatch.setattr(config, "MAX_N", 3)
        game = tmp_path / "four.json"
        game.write_text(json.dumps({"n": 4, "values": {"1,2": 1, "3,4": 2, "1,2,3,4": 5}}))
        graph = tmp_path / "path.json"
        graph.write_text(json.dumps({"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}))
        args = ["compute", "--game", str(game), "--graph", str(graph), "--index", "myerson"]
        assert main([*args, "--out", str(tmp_path / "capped.csv")]) == 3
        assert main([*args, "--max-n", "6", "--out", str(tmp_path / "mi.csv")]) == 0
        assert (tmp_path / "mi.csv").read_text().startswith("coalition,order,myerson")


class TestReproduce:
    def test_writes_all_tables(self, tmp_path):
        assert main(["reproduce", "--out", str(tmp_path)]) == 0
        names = {p.name for p in tmp_path.iterdir()}
        assert {"table1.csv", "table2.csv", "table3.csv", "table4.csv", "report.md", "report.html"} <= names

    def test_messages_table(self, tmp_path):
        main(["reproduce", "--case", "messages", "--out", str(tmp_path)])
        table1 = (tmp_path / "table1.csv").read_text()
        assert table1.splitlines()[0] == "index,1,2,3,4,5"
        assert _row(table1, "Myerson") == "Myerson,3.77,3.60,5.93,3.77,2.93"
        assert _row(table1, "Shapley") == "Shapley,4.00,4.00,4.00,4.00,4.00"
        table2 = (tmp_path / "table2.csv").read_text()
        header = next(csv.reader(io.StringIO(table2)))
        assert header == ["index", "1,2", "1,3", "1,4", "1,5", "2,3", "2,4", "2,5", "3,4", "3,5", "4,5"]
        assert not (tmp_path / "table3.csv").exists()

    def test_messages_pair_cells_and_printed_notes(self, tmp_path):
        main(["reproduce", "--case", "messages", "--out", str(tmp_path)])
        cells = _cells((tmp_path / "table2.csv").read_text())
        assert [cells["Myerson"][k] for k in ("1,4", "1,5", "4,5")] == ["0.17", "1.17", "1.17"]
        assert [cells["Network"][k] for k in ("1,4", "1,5", "4,5")] == ["-1.83", "-0.83", "-0.83"]
        assert cells["Myerson"]["1,2"] == "2.83"
        assert cells["Network"]["3,5"] == "2.83"
        report = (tmp_path / "report.md").read_text()
        assert "0.17 [1]" in report
        assert "-0.83 [6]" in report
        assert "> [1] table2, Myerson {1,4}:" in report
        assert "The printed table lists 1.33." in report
        assert "The printed table lists -1.50." in report
        assert "singleton {1}" in report
        assert "[1]" in (tmp_path / "report.html").read_text()

    def test_horse_table_and_footnote(self, tmp_path):
        main(["reproduce", "--case", "horse", "--out", str(tmp_path)])
        table3 = (tmp_path / "table3.csv").read_text()
        assert _row(table3, "Myerson") == "Myerson,48.33,7.50,18.33,15.00,10.83"
        assert _row(table3, "Network") == "Network,-16.67,7.50,18.33,0.00,-9.17"
        report = (tmp_path / "report.md").read_text()
        assert "-9.62" in report
        assert "-9.17 [1]" in report

    def test_output_is_deterministic(self, tmp_path):
        main(["reproduce", "--out", str(tmp_path / "a")])
        main(["reproduce", "--out", str(tmp_path / "b")])
        for name in ("table1.csv", "table4.csv", "report.md"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


class TestCounterfactual:
    def test_toggle_twice_is_identity(self, messages_game, figure, tmp_path):
        out = tmp_path / "cf.csv"
        code = main([
            "counterfactual", "--game", messages_game, "--graph", figure,
            "--toggle-edge", "3,5", "--toggle-edge", "3,5", "--out", str(out),
        ])
        assert code == 0
        rows = out.read_text().splitlines()[1:]
        assert rows and all(r.endswith(",0.000000") for r in rows)

    def test_isolating_player_five(self, horse, figure, tmp_path):
        out = tmp_path / "cf.csv"
        code = main([
            "counterfactual", "--game", horse, "--graph", figure,
            "--order", "1", "--remove-edge", "3,5", "--out", str(out),
        ])
        assert code == 0
        text = out.read_text()
        assert text.splitlines()[0] == "coalition,order,before,after,delta"
        assert _row(text, "5").split(",")[3] == "0.000000"

    def test_new_link_between_two_and_three(self, messages_game, figure, tmp_path):
        out = tmp_path / "cf.json"
        main([
            "counterfactual", "--game", messages_game, "--graph", figure, "--index", "network",
            "--coalition", "2,3", "--toggle-edge", "+2,3", "--format", "json", "--out", str(out),
        ])
        (row,) = json.loads(out.read_text())["rows"]
        assert row["before"] == pytest.approx(-0.5)
        assert row["after"] == pytest.approx(1 / 3)
        assert row["delta"] > 0

    def test_json_carries_toggles(self, horse, figure, tmp_path):
        out = tmp_path / "cf.json"
        main([
            "counterfactual", "--game", horse, "--graph", figure,
            "--order", "1", "--toggle-edge", "+4,5", "--format", "json", "--out", str(out),
        ])
        doc = json.loads(out.read_text())
        assert doc["kind"] == "myerson"
        assert doc["toggles"] == ["+4,5"]
        deltas = [round(abs(r["delta"]), 9) for r in doc["rows"]]
        assert deltas == sorted(deltas, reverse=True)

    def test_edge_flag_spellings_agree(self, horse, figure, tmp_path):
        spellings = {
            "remove": ["--remove-edge", "3,5"],
            "toggle": ["--toggle-edge=-3,5"],
            "add": ["--add-edge", "4,5"],
            "toggle_add": ["--toggle-edge=+4,5"],
        }
        for name, flags in spellings.items():
            code = main([
                "counterfactual", "--game", horse, "--graph", figure, "--order", "1",
                *flags, "--format", "json", "--out", str(tmp_path / f"{name}.json"),
            ])
            assert code == 0
        doc = {name: json.loads((tmp_path / f"{name}.json").read_text()) for name in spellings}
        assert doc["remove"]["toggles"] == doc["toggle"]["toggles"] == ["-3,5"]
        assert doc["add"]["toggles"] == doc["toggle_add"]["toggles"] == ["+4,5"]
        assert doc["remove"]["rows"] == doc["toggle"]["rows"]
        assert doc["add"]["rows"] == doc["toggle_add"]["rows"]

    def test_adding_existing_edge_fails(self, horse, figure, tmp_path):
        code = main([
            "counterfactual", "--game", horse, "--graph", figure,
            "--toggle-edge", "+1,2", "--out", str(tmp_path / "cf.csv"),
        ])
        assert code == 2

    def test_malformed_toggle(self, horse, figure, tmp_path):
        code = main([
            "counterfactual", "--game", horse, "--graph", figure,
            "--toggle-edge", "1-2", "--out", str(tmp_path / "cf.csv"),
        ])
        assert code == 2


class TestVerify:
    def test_myerson_on_horse(self, horse, figure, tmp_path):
        out = tmp_path / "verify.txt"
        assert main(["verify", "--game", horse, "--graph", figure, "--out", str(out)]) == 0
        text = out.read_text()
        assert "VIOLATED" not in text
        assert text.splitlines()[0].split()[:3] == ["index", "GII", "ICE"]

    def test_targeted_violation_still_exits_zero(self, tmp_path, data_dir):
        out = tmp_path / "verify.json"
        code = main([
            "verify", "--game", str(data_dir / "messages.json"), "--graph", str(data_dir / "figure_graph.json"),
            "--index", "banzhaf_graph", "--format", "json", "--out", str(out),
        ])
        assert code == 0
        doc = json.loads(out.read_text())
        verdicts = {r["axiom"]: r["verdict"] for r in doc["rows"]}
        assert verdicts["ICE"] == "violated"

    def test_independence_matrix(self, tmp_path):
        out = tmp_path / "independence.json"
        assert main(["independence", "--format", "json", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert {(m["index"], m["axiom"]) for m in doc["mismatches"]} == {
            ("fgn_modified", "ISRVPC"),
            ("scaled_essential", "ISRVPC"),
        }
        assert all(m["explanation"] for m in doc["mismatches"])

    def test_unexpected_violation_exit_code(self, horse, figure, tmp_path):
        code = main(["verify", "--game", horse, "--graph", figure, "--tol=-1", "--out", str(tmp_path / "v.txt")])
        assert code == VERDICT_MISMATCH_EXIT_CODE
        assert VERDICT_MISMATCH_EXIT_CODE not in (0, 1, 2, 3)
        assert "VIOLATED" in (tmp_path / "v.txt").read_text()

    def test_cap_on_large_games(self, tmp_path):
        game = tmp_path / "seven.json"
        game.write_text(json.dumps({"n": 7, "values": {"1,2,3,4,5,6,7": 1}}))
        assert main(["verify", "--game", str(game)]) == 3
