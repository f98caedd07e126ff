import json

import pytest

from hatkit.census import (
    builtin_entries,
    build_builtin_entries,
    census_json_text,
    load_census,
)
from hatkit.cli import main, analyze_graph
from hatkit.graphs import is_connected, is_regular
from hatkit.graph6 import parse_graph6
from hatkit.autgroup import automorphism_group


MINI = {
    "entries": [
        {"name": "k4", "graph6": "C~",
         "expected": {"vertices": 4, "valence": 3, "aut_order": 24}},
        {"name": "k33", "graph6": "EFz_",
         "expected": {"vertices": 6, "valence": 3, "bipartite": True}},
    ]
}


@pytest.fixture()
def mini_census(tmp_path):
    path = tmp_path / "mini.json"
    path.write_text(json.dumps(MINI), encoding="utf-8")
    return str(path)


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items()
                if k != "elapsed_seconds"}
    if isinstance(obj, list):
        return [_strip_timing(x) for x in obj]
    return obj


def test_builtin_matches_regenerated():
    stored = [e.to_json_dict() for e in builtin_entries()]
    rebuilt = [e.to_json_dict() for e in build_builtin_entries()]
    assert stored == rebuilt


def test_data_file_is_committed_serialization():
    from importlib.resources import files
    text = files("hatkit").joinpath("data/census.json").read_text("utf-8")
    assert text == census_json_text()


def test_all_entries_parse_and_connect():
    names = set()
    for entry in builtin_entries():
        g = entry.graph()
        names.add(entry.name)
        assert is_connected(g)
        assert is_regular(g, entry.expected["valence"])
        assert g.n == entry.expected["vertices"]
    assert {"k4", "k33", "cube", "petersen", "heawood", "mobius_kantor",
            "pappus", "desargues", "dodecahedron", "nauru", "coxeter",
            "holt"} <= names


def test_expected_aut_orders_rederived():
    for entry in builtin_entries():
        if entry.name in ("k4", "petersen", "holt"):
            g = entry.graph()
            assert automorphism_group(g).order == entry.expected["aut_order"]


def test_load_census_graph6_lines(tmp_path):
    path = tmp_path / "plain.g6"
    path.write_text("C~\nEFz_\n", encoding="ascii")
    entries = load_census(str(path))
    assert [e.name for e in entries] == ["line1", "line2"]
    assert entries[0].graph().n == 4


def test_analyze_graph_holt(holt):
    record = analyze_graph("holt", holt)
    assert record["aut_order"] == "54"
    assert record["transitivity"]["half_arc_transitive"]
    alt = record["alternating"]
    assert alt["radius"] == 9 and alt["attachment"] == 9
    assert alt["divisibility"]["odd_radius_rule_applicable"]
    assert alt["divisibility"]["odd_radius_rule_satisfied"]
    assert alt["alt_action_arc_transitive"] is False
    assert alt["open_question_notes"] == []


def test_cli_analyze_census_name(capsys):
    assert main(["analyze", "petersen"]) == 0
    data = json.loads(capsys.readouterr().out)
    entry = data["entries"][0]
    assert entry["aut_order"] == "120"
    assert entry["transitivity"]["arc_transitive"]
    assert entry["alternating"] is None


def test_cli_analyze_file_input(tmp_path, capsys):
    path = tmp_path / "one.g6"
    path.write_text("C~\n", encoding="ascii")
    assert main(["analyze", str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["entries"][0]["order"] == 4


def test_cli_analyze_unknown_input(capsys):
    assert main(["analyze", "no_such_entry"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_dart_k4(capsys, tmp_path):
    out = tmp_path / "dart.json"
    assert main(["dart", "k4", "--out", str(out)]) == 0
    printed = capsys.readouterr().out.strip().splitlines()
    g = parse_graph6(printed[0])
    assert g.n == 12 and is_regular(g, 4)
    report = json.loads(out.read_text())
    assert report["entries"][0]["report"]["radius"] == 3


def test_cli_analyze_out_file(tmp_path, capsys):
    out = tmp_path / "analysis.json"
    assert main(["analyze", "k4", "--out", str(out)]) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert data["entries"][0]["cubic_two_arc_transitive"] is True


def test_cli_verify_plain_graph6_census(tmp_path, capsys):
    path = tmp_path / "plain.g6"
    path.write_text("C~\n", encoding="ascii")
    assert main(["verify", "divisibility", "--census", str(path)]) == 0
    out = capsys.readouterr().out
    assert "[PASS] line1: div:a_divides_2r" in out


def test_cli_dart_petersen(capsys):
    assert main(["dart", "petersen"]) == 0
    printed = capsys.readouterr().out.strip().splitlines()
    assert parse_graph6(printed[0]).n == 30


def test_cli_dart_rejects_non_cubic(tmp_path, capsys):
    path = tmp_path / "c5.g6"
    path.write_text("Dhc\n", encoding="ascii")  # the 5-cycle
    assert main(["dart", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_verify_mini_passes(mini_census, capsys, tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "all", "--census", mini_census, "--out", str(out)])
    captured = capsys.readouterr().out
    assert code == 0
    assert "[PASS]" in captured and "[FAIL]" not in captured
    report = json.loads(out.read_text())
    assert report["passed"] and report["failures"] == []
    assert [e["name"] for e in report["entries"]] == ["k33", "k4"]


def test_cli_verify_detects_false_expectation(tmp_path, capsys):
    bad = {"entries": [{"name": "k4", "graph6": "C~",
                        "expected": {"aut_order": 25}}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad), encoding="utf-8")
    code = main(["verify", "divisibility", "--census", str(path)])
    captured = capsys.readouterr().out
    assert code == 1
    assert "[FAIL] k4: expected:aut_order" in captured


def test_cli_verify_malformed_census(tmp_path, capsys):
    path = tmp_path / "broken.g6"
    path.write_text("C~\nC\n", encoding="ascii")
    assert main(["verify", "all", "--census", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_verify_deterministic_report(mini_census, capsys):
    outputs = []
    for _ in range(2):
        code = main(["verify", "dart-theorem", "--census", mini_census,
                     "--json"])
        assert code == 0
        text = capsys.readouterr().out
        json_start = text.index("{")
        json_end = text.rindex("}") + 1
        outputs.append(json.dumps(
            _strip_timing(json.loads(text[json_start:json_end])),
            sort_keys=True))
    assert outputs[0] == outputs[1]


def test_cli_verify_parallel_jobs(mini_census, capsys):
    assert main(["verify", "divisibility", "--census", mini_census,
                 "--jobs", "2"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_cli_verify_strict_mode(mini_census, capsys):
    assert main(["verify", "divisibility", "--census", mini_census,
                 "--strict"]) == 0
    out = capsys.readouterr().out
    assert "div:open_questions" in out
