import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from wordlab.cli import main


def run_cli(*argv: str) -> tuple[int, str]:
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue()


class TestExitCodes:
    def test_unknown_subcommand(self):
        code, _ = run_cli("frobnicate")
        assert code == 1

    def test_malformed_word(self):
        code, _ = run_cli("divide", "--word", "a#b")
        assert code == 2

    def test_domain_error(self):
        code, _ = run_cli("bounds", "--which", "phi", "--n", "2", "--l", "1")
        assert code == 2

    def test_budget_exhaustion(self):
        code, _ = run_cli("oracle", "--n", "3", "--d", "3", "--l", "2", "--budget", "300")
        assert code == 3

    def test_success(self):
        code, _ = run_cli("bounds", "--which", "q-n", "--n", "5")
        assert code == 0


class TestSpecExamples:
    def test_count_catalan(self):
        code, out = run_cli("count", "--n", "4", "--k", "2", "--method", "enumerate")
        assert code == 0 and "14" in out

    def test_bounds_upsilon(self):
        code, out = run_cli("bounds", "--n", "3", "--l", "2", "--which", "upsilon")
        assert code == 0 and "8748" in out

    def test_divide_witness(self):
        code, out = run_cli("divide", "--word", "cba", "--n", "3", "--sense", "ordinary")
        assert code == 0 and "c|b|a" in out


class TestFormats:
    def test_jsonl_is_parseable(self):
        code, out = run_cli(
            "count", "--n", "3", "--k", "2", "--method", "all", "--format", "jsonl"
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert {r["method"] for r in records} == {"enumerate", "tableaux", "genfun"}
        assert {r["value"] for r in records} == {5}

    def test_csv_header_and_lf(self):
        code, out = run_cli("rsk", "--n", "3", "--format", "csv")
        assert code == 0
        assert "\r" not in out
        assert out.splitlines()[0].startswith("n,permutations,roundtrip_ok")

    def test_table_alignment(self):
        code, out = run_cli("bounds", "--which", "p-nd", "--n", "3", "--d", "3")
        assert code == 0
        header, row = out.splitlines()
        assert header.index("value") == row.index("72")


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("posets", "--random", "25", "--size", "9", "--seed", "11", "--format", "jsonl"),
            ("count", "--n", "5", "--k", "3", "--method", "all", "--sweep", "--format", "csv"),
            ("oracle", "--n", "2", "--d", "2", "--l", "2", "--format", "jsonl"),
            ("growth", "--forbidden", "ba", "--n", "8", "--format", "csv"),
        ],
    )
    def test_byte_identical_across_processes(self, argv):
        import os

        cmd = [sys.executable, "-m", "wordlab.cli", *argv]
        first = subprocess.run(
            cmd, capture_output=True, env=dict(os.environ, PYTHONHASHSEED="0")
        )
        second = subprocess.run(
            cmd, capture_output=True, env=dict(os.environ, PYTHONHASHSEED="424242")
        )
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout


class TestSubcommandSurfaces:
    def test_reduce(self):
        code, out = run_cli("reduce", "--word", "aba", "--n", "2", "--d", "2", "--format", "jsonl")
        assert code == 0
        rec = json.loads(out)
        assert rec["reducible"] is False

    def test_oracle_report_fields(self):
        code, out = run_cli("oracle", "--n", "2", "--d", "2", "--l", "2", "--format", "jsonl")
        rec = json.loads(out)
        assert rec["oracle_value"] == 3 and rec["witness"] == "aba"
        assert "psi" in rec["bound_values"] and rec["nodes_explored"] > 0

    def test_process_oracle(self):
        code, out = run_cli(
            "oracle", "--which", "process", "--p", "2", "--k", "3", "--format", "jsonl"
        )
        rec = json.loads(out)
        assert rec["oracle_value"] == 3 == rec["bound_value"]

    def test_height(self):
        code, out = run_cli("height", "--word", "abba", "--y", "ab,b,a", "--format", "jsonl")
        assert json.loads(out)["height"] == 3

    def test_selective(self):
        code, out = run_cli(
            "selective", "--word", "ababababababababab", "--period", "2",
            "--n", "2", "--format", "jsonl",
        )
        rec = json.loads(out)
        assert rec["small"] == 1

    def test_selective_edges(self):
        code, out = run_cli("selective", "--edges", "--n", "4", "--l", "12", "--format", "jsonl")
        rec = json.loads(out)
        assert rec["count"] == rec["alpha"] == 4

    def test_posets_file(self, tmp_path):
        path = tmp_path / "poset.txt"
        path.write_text("3\n1 2\n2 3\n")
        code, out = run_cli("posets", "--in", str(path), "--format", "jsonl")
        rec = json.loads(out)
        assert rec["max_antichain"] == 1

    def test_posets_remark(self):
        code, out = run_cli("posets", "--remark", "--format", "jsonl")
        rec = json.loads(out)
        assert rec["max_antichain"] == 3 and rec["pairs_isomorphic"] is False

    def test_morphism_file(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("a -> ab\nb -> ba\n")
        code, out = run_cli("morphism", "--in", str(path), "--word", "ab", "--format", "jsonl")
        assert json.loads(out)["image"] == "abba"

    def test_morphism_check(self):
        code, out = run_cli(
            "morphism", "--builtin", "thue-morse", "--iterate", "a", "--k", "6",
            "--check", "cube", "--format", "jsonl",
        )
        assert json.loads(out)["repetition_free"] is True

    def test_growth_report(self):
        code, out = run_cli(
            "growth", "--forbidden", "ba", "--n", "5",
            "--estimate-at", "100", "--format", "jsonl",
        )
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines[-1]["v"] == "polynomial" and lines[-1]["degree"] == 2
        assert lines[3]["v"] == 10

    def test_complexity(self):
        code, out = run_cli("complexity", "--word", "ababab", "--n", "4", "--format", "jsonl")
        lines = [json.loads(line) for line in out.splitlines()]
        assert [r["p"] for r in lines[:-1]] == [2, 2, 2, 2]
