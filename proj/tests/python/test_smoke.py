"""Smoke tests for the dflpy module against the bundled fixtures."""

import os
import pathlib

import pytest

dflpy = pytest.importorskip("dflpy")

FIXTURES = pathlib.Path(os.environ.get("DFL_FIXTURES", "fixtures"))


def read(name: str) -> str:
    return (FIXTURES / name).read_text()


def test_extend_plain_theory():
    out = dflpy.extend("fact a. rule r1: a => b. rule r2: => ~b.")
    assert out["dialect"] == "argumentation"
    ext = out["extension"]
    assert ext["a"] == {"delta": "+", "partial": "+"}
    # two applicable rules for complementary literals, no superiority
    assert ext["b"]["partial"] == "-"
    assert ext["~b"]["partial"] == "-"


def test_extend_agent_theory():
    out = dflpy.extend(read("sociality.dfl"))
    assert out["dialect"] == "agent"
    ext = out["extension"]
    assert ext["INT q"]["partial"] == "+"
    assert ext["OBL ~q"]["partial"] == "-"


def test_flatten_round_trips_through_extend():
    flattened = dflpy.flatten(read("sociality.dfl"))
    assert "rule r_s: -> int_s." in flattened
    ext = dflpy.extend(flattened)["extension"]
    assert ext["int_q"]["partial"] == "+"
    assert ext["~obl_q"]["partial"] == "-"


def test_validate_reports_violations():
    assert dflpy.validate(read("sociality.dfl")) == []
    bad = dflpy.validate("rule r1: => a. sup r1 > r1.")
    assert any("irreflexive" in v for v in bad)


def test_move_and_play_on_example_two():
    game = read("ex2.game")
    move = dflpy.move(game, player="pr", order="minimal")
    assert move["found"] and move["witness"] == ["p1"]
    played = dflpy.play(game, pr="exhaustive", op="exhaustive")
    assert played["result"] == "won_by_Pr"
    assert played["transcript"]["moves"][0]["move"] == ["p1"]


def test_sociality_solvers_agree():
    theory = read("sociality.dfl")
    direct = dflpy.sociality(theory, obligation="~q")
    assert direct["well_posed"] and direct["found"]
    assert direct["kept_intentions"] == ["s"]
    via = dflpy.sociality(theory, obligation="~q", via_game=True)
    assert via["found"] and via["witness"] == ["r_s"]


def test_reduce_emits_a_playable_game():
    game_text = dflpy.reduce(read("sociality.dfl"), obligation="~q")
    assert "goal ~obl_q." in game_text
    assert "@proponent" in game_text
    # the common theory already proves the goal, so the opponent opens,
    # has nothing to play, and passes
    played = dflpy.play(game_text, pr="exhaustive", op="exhaustive")
    assert played["result"] == "won_by_Pr"
    assert played["transcript"]["moves"][0]["move"] == "pass"


def test_theory_size():
    assert dflpy.theory_size("fact a. rule r1: a => b.") == 3
