import importlib.resources
import json

import pytest

from posetlab import LabeledPoset, from_cover_relations
from posetlab import posetfile
from posetlab.cli import main
from posetlab.errors import ParseError


def figure1_path():
    return str(importlib.resources.files("posetlab") / "data" / "figure1.json")


def test_round_trip_is_byte_identical():
    text = open(figure1_path(), encoding="utf-8").read()
    obj = posetfile.parse(text)
    assert posetfile.dumps(obj) == text
    assert posetfile.dumps(posetfile.parse(posetfile.dumps(obj))) == text


def test_round_trip_epsilon_labeling():
    poset = from_cover_relations("ab", [("a", "b")])
    lp = LabeledPoset.with_epsilon(poset, [("a", "b", -1)])
    again = posetfile.parse(posetfile.dumps(lp))
    assert again.sign_items() == lp.sign_items()


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        posetfile.parse('{"elements": [,]}')
    assert "line 1" in str(err.value)


def test_cli_analyze_figure1(capsys):
    assert main(["analyze", figure1_path()]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["grading"]["graded"] is True
    assert report["grading"]["rank"] == 1
    assert report["w_polynomial"]["coefficients"] == [0, 0, 9, 85, 167, 85, 9]
    assert report["symmetric_expansion"]["nonnegative"] is True
    assert report["real_nonpositive_roots"] is True


def test_cli_analyze_pretty(capsys):
    assert main(["analyze", "--pretty", figure1_path()]) == 0
    out = capsys.readouterr().out
    assert "graded: True" in out and "W(t) =" in out


def test_cli_wpoly_and_cd(tmp_path, capsys):
    path = tmp_path / "anti3.json"
    poset = from_cover_relations("abc", [])
    lp = LabeledPoset.with_omega(poset, {"a": 1, "b": 2, "c": 3})
    posetfile.save(lp, path)

    assert main(["wpoly", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["coefficients"] == [1, 4, 1]

    assert main(["cd", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["charney_davis"] == 2


def test_cli_decompose(tmp_path, capsys):
    path = tmp_path / "split.json"
    poset = from_cover_relations("abc", [("a", "b")])
    posetfile.save(LabeledPoset.with_omega(poset, {"a": 1, "b": 2, "c": 3}), path)
    assert main(["decompose", str(path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["count"] == 2


def test_cli_verify_pass_and_exit_codes(capsys):
    assert main(["verify", "--suite", "T5.2", "--max-size", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True and report["suite"] == "T5.2"


def test_cli_verify_conjecture_flag(capsys):
    assert main(["verify", "--suite", "NS", "--max-size", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["conjecture"] is True


def test_cli_gen_emits_json_lines(capsys):
    assert main(["gen", "--size", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    for line in lines:
        parsed = posetfile.parse(line)
        assert parsed.poset.p == 3


def test_cli_gen_random(capsys):
    assert main(["gen", "--size", "4", "--random", "3", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--size", "4", "--random", "3", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first


def test_cli_usage_and_parse_errors(tmp_path, capsys):
    assert main(["analyze"]) == 2                       # missing argument
    assert main(["verify", "--suite", "nope"]) == 2     # unknown suite
    bad = tmp_path / "bad.json"
    bad.write_text("{broken", encoding="utf-8")
    capsys.readouterr()
    assert main(["analyze", str(bad)]) == 2
    assert main(["analyze", str(tmp_path / "missing.json")]) == 2
