import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from symgb.cli import main

MATRIX_4_2 = """\
    x12  x13  x14  x23  x24  x34
t1    1    1    1    0    0    0
t2    1    0    0    1    1    0
t3    0    1    0    1    0    1
t4    0    0    1    0    1    1
"""


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


class TestOrderCommands:
    def test_cmp(self, runner):
        out = invoke(runner, "order", "cmp", "x[1]^2", "x[1]*x[2]^2")
        assert out.output.strip() == "less"
        assert out.exit_code == 0

    def test_cmp_permuted(self, runner):
        out = invoke(runner, "order", "cmp", "--permute", "(1 2)", "x[1]", "x[2]")
        assert out.output.strip() == "greater"

    def test_witness_positive(self, runner):
        out = invoke(runner, "--format", "json", "order", "witness", "x[1]^2", "x[1]*x[2]^2")
        doc = json.loads(out.output)
        assert doc["status"] == "ok"
        assert doc["sigma"] == "(1 2)"
        assert doc["cofactor"] == "x[1]"
        assert doc["verified"] is True

    def test_witness_negative_exit(self, runner):
        out = runner.invoke(main, ["order", "witness", "x[2]", "x[1]"])
        assert out.exit_code == 1
        assert "not related" in out.output


class TestWqoCommands:
    def test_scan_good(self, runner):
        out = invoke(runner, "wqo", "scan", "x[1]^2", "x[1]*x[2]^2", "x[1]^3*x[2]*x[3]^2")
        assert "good pair: (1, 2)" in out.output

    def test_scan_bad_sequence_from_file(self, runner, tmp_path):
        from symgb import Polynomial, bad_sequence_element, render_polynomial

        path = tmp_path / "seq.txt"
        lines = ["# the arity-2 antichain"]
        lines += [
            render_polynomial(Polynomial.from_monomial(bad_sequence_element(n)))
            for n in range(3, 7)
        ]
        path.write_text("\n".join(lines), encoding="utf-8")
        out = runner.invoke(main, ["wqo", "scan", "--relation", "injection", "--file", str(path)])
        assert out.exit_code == 1
        assert "absent" in out.output

    def test_badseq(self, runner):
        out = invoke(runner, "badseq", "4")
        assert out.output.strip() == "x[1,2]*x[3,2]*x[4,3]*x[4,5]"

    def test_divides_upto_injection(self, runner):
        out = invoke(runner, "divides-upto-injection", "x[1,2]", "x[3,2]*x[3,4]")
        assert out.exit_code == 0
        negative = runner.invoke(
            main, ["divides-upto-injection", "x[1,2]*x[3,2]*x[3,4]",
                   "x[1,2]*x[3,2]*x[4,3]*x[4,5]"]
        )
        assert negative.exit_code == 1


class TestReduction:
    def test_reduce_step(self, runner):
        out = invoke(
            runner, "--format", "json", "reduce",
            "--by", "x[1]*x[2]^2 + x[2] + x[1]^2",
            "x[1]^3*x[2]*x[3]^2 + x[3]^2 + x[1]^4*x[3]",
        )
        doc = json.loads(out.output)
        assert doc["step"]["sigma"] == "(1 2 3)"
        assert doc["step"]["cofactor"] == "x[1]^3"

    def test_normal_form(self, runner):
        out = invoke(
            runner, "normal-form",
            "--by", "x[1]*x[2]^2 + x[2] + x[1]^2",
            "x[1]^3*x[2]*x[3]^2 + x[3]^2 + x[1]^4*x[3]",
        )
        assert "steps: 1" in out.output
        assert "trace verified: yes" in out.output

    def test_irreducible_exit(self, runner):
        out = runner.invoke(main, ["reduce", "--by", "x[1]^2", "x[1]"])
        assert out.exit_code == 1


class TestGbCommands:
    def test_buchberger(self, runner):
        out = invoke(runner, "gb", "buchberger", "x[1]", "x[1]+x[2]")
        assert out.output.splitlines() == ["x[1]", "x[2]"]

    def test_membership_exit_codes(self, runner):
        ok = runner.invoke(main, ["gb", "membership", "-g", "x[1]", "x[1]*x[2]"])
        assert ok.exit_code == 0
        no = runner.invoke(main, ["gb", "membership", "-g", "x[1]", "1"])
        assert no.exit_code == 1

    def test_equal(self, runner):
        out = runner.invoke(
            main, ["gb", "equal", "-l", "x[1]", "-l", "x[1]+x[2]", "-r", "x[1]", "-r", "x[2]"]
        )
        assert out.exit_code == 0

    def test_eliminate(self, runner):
        out = invoke(
            runner, "gb", "eliminate", "-d", "t[1]", "-d", "t[2]",
            "x[1]-t[1]^2", "x[2]-t[2]^2", "x[3]-t[1]*t[2]",
        )
        assert out.output.strip() == "x[3]^2 - x[1]*x[2]"

    def test_truncate_check(self, runner):
        out = runner.invoke(
            main,
            ["gb", "truncate-check", "-b", "x[1]", "-g", "x[1]", "-g", "x[2]", "-g", "x[3]",
             "--n", "3"],
        )
        assert out.exit_code == 0

    def test_universal_check(self, runner):
        ok = runner.invoke(
            main, ["gb", "universal-check", "--n", "3", "x[1]", "x[2]", "x[3]"]
        )
        assert ok.exit_code == 0
        no = runner.invoke(main, ["gb", "universal-check", "--n", "2", "x[1]"])
        assert no.exit_code == 1


class TestChainsAndToric:
    def test_symmetrize_count(self, runner):
        out = invoke(runner, "--format", "json", "symmetrize", "--m", "4", "x[1]*x[2]-x[3]^2")
        doc = json.loads(out.output)
        assert doc["count"] == 12

    def test_project(self, runner):
        out = invoke(runner, "project", "--n", "1", "--m", "2", "x[1]", "x[2]")
        assert out.output.strip() == "x[1]"

    def test_chain_check_from_spec_file(self, runner, tmp_path):
        doc = {
            "kind": "explicit",
            "levels": {
                "1": ["x[1]"],
                "2": ["x[1]", "x[2]"],
                "3": ["x[1]", "x[2]", "x[3]"],
            },
        }
        path = tmp_path / "chain.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        out = runner.invoke(main, ["chain", "check", "--spec", str(path), "--window", "1", "3"])
        assert out.exit_code == 0
        assert "invariant chain on window: yes" in out.output

    def test_chain_stabilize_toric(self, runner):
        out = runner.invoke(
            main, ["chain", "stabilize", "--f", "t[1]*t[2]", "--k", "2", "--n-hi", "4"]
        )
        assert out.exit_code == 0
        assert "N = 3" in out.output

    def test_toric_matrix_golden(self, runner):
        out = invoke(runner, "toric", "matrix", "--n", "4", "--k", "2")
        assert out.output == MATRIX_4_2

    def test_toric_kernel_bindings(self, runner):
        out = invoke(
            runner, "toric", "kernel", "--n", "2",
            "-b", "x[1]=t[1]^2", "-b", "x[2]=t[2]^2", "-b", "x[3]=t[1]*t[2]",
        )
        assert out.output.strip() == "x[3]^2 - x[1]*x[2]"

    def test_toric_squarefree(self, runner):
        out = invoke(runner, "--format", "json", "toric", "squarefree", "--n", "3", "--k", "2")
        doc = json.loads(out.output)
        assert len(doc["generators"]) == 3

    def test_toric_probe(self, runner):
        out = runner.invoke(
            main, ["toric", "probe", "--f", "t[1]", "--k", "1", "--n-hi", "3"]
        )
        assert out.exit_code == 0


class TestCliContract:
    def test_polynomials_from_file_argument(self, runner, tmp_path):
        path = tmp_path / "gens.txt"
        path.write_text("# generators\nx[1]\nx[1] + x[2]\n", encoding="utf-8")
        out = invoke(runner, "gb", "buchberger", f"@{path}")
        assert out.output.splitlines() == ["x[1]", "x[2]"]

    def test_deterministic_output(self, runner):
        args = ["--format", "json", "symmetrize", "--m", "4", "x[1]*x[2]-x[3]^2"]
        first = invoke(runner, *args).output
        second = invoke(runner, *args).output
        assert first == second

    def test_emitted_polynomials_reparse(self, runner):
        from symgb import parse_polynomial

        out = invoke(runner, "--format", "json", "toric", "squarefree", "--n", "4", "--k", "2")
        for text in json.loads(out.output)["generators"]:
            parse_polynomial(text)

    def test_parse_error_reports_position(self):
        proc = subprocess.run(
            [sys.executable, "-m", "symgb.cli", "order", "cmp", "x[1", "x[2]"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
        assert "line 1" in proc.stderr

    def test_cap_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "symgb.cli", "--max-pairs", "2", "gb", "buchberger",
             "x[1]^2*x[2]-x[3]^2", "x[2]^2*x[3]-x[1]", "x[3]^2*x[1]-x[2]"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 3
        assert "max-pairs" in proc.stderr

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "symgb.cli", "chain", "check", "--window", "1", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
