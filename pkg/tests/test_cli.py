import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from mixsat.cli import main
from mixsat.formulas import phi

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


class TestDigits:
    def test_base10(self):
        assert run("digits", "24", "--base", "10") == (0, "[4,2] ord=0\n")

    def test_zero(self):
        assert run("digits", "0") == (0, "[] ord=inf\n")

    def test_mixed(self):
        assert run("digits", "54", "--base", "3,2,5,4") == (0, "[0,0,4,1] ord=2\n")

    @pytest.mark.parametrize("argv", [("digits", "3", "--base", "1"), ("digits", "-3"), ("digits", "x")])
    def test_parse_errors(self, argv):
        assert run(*argv)[0] == 2


class TestGrundy:
    def test_misere_sat(self):
        assert run("grundy", "2,3", "--game", "misere-sat", "--base", "2") == (0, "0\n")

    def test_misere_brute(self):
        assert run("grundy", "2,2", "--game", "misere", "--method", "brute") == (0, "0\n")
        assert run("grundy", "2,2", "--game", "misere") == (0, "0\n")

    def test_nim_sat(self):
        assert run("grundy", "16,27", "--game", "nim-sat", "--base", "3,2,5,4") == (0, "7\n")
        assert run("grundy", "16,27", "--game", "nim-sat", "--base", "3,2,5,4", "--digits") == (0, "7 [1,0,1]\n")

    def test_welter(self):
        assert run("grundy", "1,4", "--game", "welter-sat", "--base", "3") == (0, "1\n")
        assert run("grundy", "1,4", "--game", "welter-sat", "--base", "3", "--method", "brute") == (0, "1\n")

    def test_formula_and_brute_agree(self):
        for game in ("nim", "nim-sat", "misere-sat", "welter"):
            a = run("grundy", "5,3,6", "--game", game, "--base", "3", "--method", "formula")
            b = run("grundy", "5,3,6", "--game", game, "--base", "3", "--method", "brute")
            assert a == b and a[0] == 0

    def test_out_of_domain(self):
        assert run("grundy", "0,0", "--game", "misere")[0] == 3
        assert run("grundy", "2,2", "--game", "welter")[0] == 3

    def test_no_formula(self):
        assert run("grundy", "2,2", "--game", "misere", "--method", "formula")[0] == 4
        assert run("grundy", "2,2", "--game", "misere-sat", "--max-weight", "1", "--method", "formula")[0] == 4

    def test_welter_sat_needs_constant_base(self):
        assert run("grundy", "1,4", "--game", "welter-sat", "--base", "3,2")[0] == 2


class TestTable:
    def test_misere_grid_left(self):
        code, out = run("table", "--game", "misere", "--bounds", "9,9")
        assert code == 0 and out == (FIXTURES / "grid_misere_unit.tsv").read_text()

    def test_misere_grid_right(self):
        code, out = run("table", "--game", "misere-sat", "--base", "2", "--bounds", "9,9")
        assert code == 0 and out == (FIXTURES / "grid_misere_ord2.tsv").read_text()

    def test_trivial(self):
        assert run("table", "--game", "nim", "--bounds", "1,1") == (0, "0\n")

    def test_json(self):
        code, out = run("table", "--game", "misere-sat", "--bounds", "3,3,3", "--format", "json")
        d = json.loads(out)
        assert code == 0 and d["bounds"] == [3, 3, 3] and len(d["values"]) == 27
        assert d["values"][0] == d["absent"]

    def test_bad_bounds(self):
        assert run("table", "--game", "nim", "--bounds", "0,3")[0] == 2
        assert run("table", "--game", "nim", "--bounds", "3,3,3")[0] == 2

    def test_deterministic(self):
        assert run("table", "--game", "misere", "--bounds", "6,6") == run("table", "--game", "misere", "--bounds", "6,6")


class TestVerify:
    def test_pass(self):
        code, out = run("verify", "--base", "2", "--k", "2", "--bounds", "9",
                        "--checks", "sg1,sg2", "--max-weight", "2")
        d = json.loads(out)
        assert code == 0 and d["verdict"] is True
        assert [r["check"] for r in d["reports"]] == ["sg1", "sg2"]

    def test_misere_not_saturated(self):
        code, out = run("verify", "--game", "misere", "--base", "2", "--k", "2", "--bounds", "9",
                        "--checks", "saturation")
        assert code == 1 and json.loads(out)["verdict"] is False

    def test_weight_too_small(self):
        code, _ = run("verify", "--base", "2", "--k", "2", "--bounds", "9", "--checks", "sg2", "--max-weight", "1")
        assert code == 1

    def test_k1(self):
        assert run("verify", "--base", "2", "--k", "1", "--bounds", "9")[0] == 0

    def test_unknown_check(self):
        assert run("verify", "--k", "2", "--bounds", "3", "--checks", "sg3")[0] == 2


class TestMoveAndWeight:
    def test_weight(self):
        assert run("weight", "--base", "6,2", "--k", "3")[1].startswith("w=3 ")
        assert run("weight", "--base", "2", "--k", "2")[1].startswith("w=2 ")

    def test_move(self):
        code, out = run("move", "2,2", "--base", "2", "--target", "0")
        d = json.loads(out)
        assert code == 0 and d["phi_after"] == 0 and phi(d["resulting"], 2) == 0
        assert [a - b for a, b in zip((2, 2), d["resulting"])] == d["move"]
        assert d["weight"] <= 2

    def test_no_such_option(self, capsys):
        assert run("move", "2,3", "--base", "2", "--target", "0")[0] == 5
        assert "no such option (SG1)" in capsys.readouterr().err

    def test_origin(self):
        assert run("move", "0,0", "--target", "0")[0] == 3


class TestPlay:
    def test_terminal_start(self):
        code, out = run("play", "1,0", "--game", "misere")
        assert code == 0 and out.endswith("you have no move: engine wins\n")

    def test_engine_wins_as_second_player(self):
        # Human tries every kind of first move from (2,2); the engine always wins.
        for first in ("0 1", "0 2", "1 1", "1 2"):
            code, out = run("play", "2,2", "--game", "misere", stdin=f"{first}\n0 1\n1 1\n0 1\n1 1\n")
            assert out.endswith("engine wins\n"), out

    def test_illegal_move_reprompts(self):
        code, out = run("play", "2,2", "--game", "misere-sat", stdin="1,1\n0 5\nfoo\n0 2\n")
        assert out.count("illegal move") == 2 and "invalid" in out
        assert "position: 0,2" in out

    def test_engine_terminal(self):
        code, out = run("play", "0,1", "--game", "misere-sat", "--engine-first")
        assert out.endswith("engine has no move: you win\n")

    def test_quit(self):
        code, out = run("play", "5,5", "--game", "nim", stdin="q\n")
        assert code == 0 and out.endswith("quit\n")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "mixsat", "digits", "24", "--base", "10"],
                       capture_output=True, text=True, check=True)
    assert r.stdout == "[4,2] ord=0\n"
