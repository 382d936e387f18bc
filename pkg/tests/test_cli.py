import json

import pytest

from airframe import cli
from airframe.diagram import GraphPairDiagram
from airframe.words import parse_word, pretty, flatten, WordSyntaxError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_identity(capsys):
    code, out, _ = run(capsys, "eval", "d b d b d b", "--json")
    assert code == 0
    data = json.loads(out)
    assert all(a == b for a, b in data["map"].items())


def test_eval_roundtrips_json(capsys, A):
    code, out, _ = run(capsys, "eval", "a e' [b, g]", "--json")
    assert code == 0
    from airframe.cli import _word_diagram
    f = _word_diagram("a e' [b, g]")
    assert GraphPairDiagram.from_json(f.system, json.loads(out)).equals(f)


def test_derivative_report(capsys):
    code, out, _ = run(capsys, "d", "e^-2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["abs_log2"] == 2


def test_commutator_report(capsys):
    code, out, _ = run(capsys, "commutator", "[d, e]", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["in_commutator"] and data["epsilon_exponent"] == 0


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "(0,1/2)", "central",
                       "--max-len", "2", "--json")
    assert code == 0
    assert json.loads(out)["word"] == "a'"


def test_transitivity(capsys):
    code, out, _ = run(capsys, "transitivity", "--k", "1",
                       "--depth-bound", "1", "--json")
    assert code == 0
    assert json.loads(out)["ok"]


def test_circularize(capsys):
    code, out, _ = run(capsys, "circularize", "d")
    assert code == 0
    assert json.loads(out)["system"] == "circular_airplane"


def test_intertwine(capsys):
    code, out, _ = run(capsys, "intertwine", "--depth", "1",
                       "--bound", "2", "--json")
    assert code == 0
    assert json.loads(out)["ok"]


def test_systems_listing(capsys):
    code, out, _ = run(capsys, "systems", "--json")
    assert code == 0
    names = [r["name"] for r in json.loads(out)]
    assert "airplane" in names and "basilica" in names


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "a (")
    assert code == 1
    assert "offset" in err


def test_unknown_generator_exit_code(capsys):
    code, _, err = run(capsys, "eval", "q")
    assert code == 1


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "transitivity", "--k", "7")
    assert code == 1


def test_dot_output(capsys):
    code, out, _ = run(capsys, "eval", "a", "--dot")
    assert code == 0
    assert out.startswith("digraph")


def test_word_pretty_reparse():
    for s in ["a", "a b' g^3", "[e, d] [e^-1, a^-2]", "b^e",
              "(a b)^-2 e'"]:
        expr = parse_word(s)
        assert parse_word(pretty(expr)) == expr


def test_long_names():
    assert flatten(parse_word("alpha beta'")) == [("a", 1), ("b", -1)]


def test_parse_diagnostics_have_offsets():
    with pytest.raises(WordSyntaxError) as ei:
        parse_word("a [b, ")
    assert ei.value.pos == 6
