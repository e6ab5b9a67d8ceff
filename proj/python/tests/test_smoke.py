import os
from fractions import Fraction

import pytest

import gsquare as gs

RULES = os.path.join(os.path.dirname(__file__), "..", "..", "rules")


def test_mad_of_small_graphs():
    value, witness = gs.mad(gs.cycle(5))
    assert value == Fraction(2)
    assert sorted(witness) == [0, 1, 2, 3, 4]
    assert gs.mad(gs.petersen())[0] == Fraction(3)


def test_thresholds():
    assert gs.main_threshold(6) == Fraction(1, 2)
    assert gs.main_threshold(7) == Fraction(20, 37)
    assert gs.mad_threshold(5) == 2 + Fraction(12, 29)
    assert gs.min_girth_for_delta(6) == 10


def test_coloring_of_squares():
    c5 = gs.square(gs.cycle(5))
    assert gs.chromatic_number(c5) == 5
    assert gs.chromatic_number(gs.square(gs.petersen())) == 10
    assert not gs.is_choosable(c5, 4)
    assert gs.is_choosable(c5, 5)
    coloring = gs.list_color(gs.cycle(4), [[0, 1]] * 4)
    assert coloring is not None and coloring[0] != coloring[1]
    assert gs.list_color(gs.complete(3), [[0, 1]] * 3) is None


def test_graph_text_round_trip():
    g, header = gs.parse_graph("# hi\n3 2\n0 1\n1 2\n")
    assert header == [" hi"]
    assert g.n == 3 and g.m == 2
    assert gs.parse_graph(gs.format_graph(g, header))[0] == g


def test_errors_map_to_python():
    with pytest.raises(gs.ParseError) as info:
        gs.parse_graph("3 1\n0 x\n")
    assert info.value.line == 2 and info.value.column == 3
    with pytest.raises(gs.Error):
        gs.Graph(2, [(0, 0)])
    with pytest.raises(gs.GuardError):
        gs.is_choosable(gs.cycle(13), 3)


def test_example_discharges():
    g, recipe = gs.example2(8, 3, seed=1, contracted=True)
    assert recipe["kind"] == "example2" and recipe["contracted"]
    assert gs.detect(g, 8) == []
    assert gs.detect_local(g, "deltaK", 8) == []
    rules = gs.builtin_ruleset("deltaK", 8)
    result = gs.verify(g, rules)
    assert result["passed"]
    assert result["min_charge"] >= 2 + Fraction(4, 7)
    assert sum(result["final_charge"]) == 2 * g.m
    assert gs.discharge_report(g, rules).rstrip().endswith("PASS: min charge 2+4/7")


def test_rules_files_match_builtins():
    assert gs.load_rules(os.path.join(RULES, "deltaK.rules"), 8) == gs.builtin_ruleset("deltaK", 8)
    assert gs.load_rules(os.path.join(RULES, "delta6.rules"), 6) == gs.builtin_ruleset("delta6")
    with open(os.path.join(RULES, "delta5.rules"), encoding="utf-8") as f:
        text = gs.roundtrip_rules(f.read())
    assert gs.roundtrip_rules(text) == text


def test_detects_configurations():
    g, _ = gs.example1(4, seed=1)
    kinds = {inst["kind"] for inst in gs.detect(g, 5, relaxed=True)}
    assert "C4" in kinds
