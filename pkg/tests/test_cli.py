import json
import re
import subprocess
import sys

import pytest

from sumsetcover.cli import parse_instance, run_command
from sumsetcover.errors import ParseError, ValidationError


def write_instance(tmp_path, name="inst.json", **payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run_json(capsys, argv):
    code = run_command(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestParseInstance:
    def test_well_formed(self, tmp_path):
        path = write_instance(tmp_path, q=3, n=2, S=[[0, 0], [1, 2]], T=[[2, 1]])
        inst = parse_instance(path)
        assert inst.q == 3 and inst.n == 2
        assert len(inst.s_set) == 2 and len(inst.t_set) == 1
        assert [v.coords for v in inst.s_order] == [(0, 0), (1, 2)]

    def test_out_of_range_coordinate(self, tmp_path):
        path = write_instance(tmp_path, q=3, n=1, S=[[3]])
        with pytest.raises(ValidationError):
            parse_instance(path)

    def test_composite_q(self, tmp_path):
        path = write_instance(tmp_path, q=6, n=1, S=[[0]])
        with pytest.raises(ValidationError):
            parse_instance(path)

    def test_duplicates(self, tmp_path):
        path = write_instance(tmp_path, q=3, n=1, S=[[0], [0]])
        with pytest.raises(ValidationError):
            parse_instance(path)

    def test_missing_field(self, tmp_path):
        path = write_instance(tmp_path, q=3, n=1)
        with pytest.raises(ParseError):
            parse_instance(path)

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            parse_instance(str(path))

    def test_wrong_length_tuple(self, tmp_path):
        path = write_instance(tmp_path, q=3, n=2, S=[[0]])
        with pytest.raises(ValidationError):
            parse_instance(path)

    def test_explicit_orders(self, tmp_path):
        path = write_instance(
            tmp_path, q=5, n=1, S=[[0], [1]], T=[[0], [1]],
            S_order=[[1], [0]], T_order=[[0], [1]],
        )
        inst = parse_instance(path)
        assert [v.coords for v in inst.s_order] == [(1,), (0,)]


class TestBoundCommand:
    def test_known_table(self, capsys):
        code, report = run_json(capsys, ["bound", "--q", "3", "--n", "2"])
        assert code == 0
        out = report["outputs"]
        assert out["chosen_degree"] == 3
        assert out["chosen_bound"] == 7
        assert out["capset_bound"] == 9
        assert out["degree_table"][0] == {"d": 0, "m_d": 1, "bound_at_d": 10}
        assert report["ok"]

    def test_growth_flag(self, capsys):
        code, report = run_json(capsys, ["bound", "--q", "3", "--n", "1", "--growth-to", "6"])
        assert code == 0
        growth = report["outputs"]["growth"]
        assert growth[0] == "3"
        assert float(growth[5]) < 3.0

    def test_composite_q_exit_two(self, capsys):
        assert run_command(["bound", "--q", "4", "--n", "1"]) == 2


class TestDecomposeCommand:
    def test_singletons(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=2, n=1, S=[[0]], T=[[1]])
        code, report = run_json(capsys, ["decompose", "--input", path])
        assert code == 0
        assert report["ok"]
        assert report["outputs"]["witness_total"] == 1

    def test_round_trip_with_verify(self, tmp_path, capsys):
        path = write_instance(
            tmp_path, q=3, n=2,
            S=[[0, 0], [1, 0], [2, 2], [1, 2]], T=[[0, 1], [2, 0], [1, 1]],
        )
        witness_path = str(tmp_path / "witness.json")
        code, report = run_json(
            capsys, ["decompose", "--input", path, "--output", witness_path]
        )
        assert code == 0 and report["ok"]
        code2, report2 = run_json(
            capsys, ["verify", "--input", path, "--witness", witness_path]
        )
        assert code2 == 0
        assert report2["outputs"]["verified"]

    def test_bogus_witness_fails(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=1, S=[[0], [1]], T=[[0], [1]])
        witness = tmp_path / "bad.json"
        witness.write_text(json.dumps({"S_witness": [], "T_witness": []}))
        code, report = run_json(
            capsys, ["verify", "--input", path, "--witness", str(witness)]
        )
        assert code == 1
        assert not report["outputs"]["verified"]

    def test_forced_degree(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=1, S=[[0], [1]], T=[[0], [2]])
        code, report = run_json(capsys, ["decompose", "--input", path, "--d", "2"])
        assert code == 0
        assert report["outputs"]["degree"] == 2
        assert report["outputs"]["degree_source"] == "forced"

    def test_certify_rank(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=1, S=[[0], [1], [2]], T=[[0], [1], [2]])
        code, report = run_json(capsys, ["decompose", "--input", path, "--certify-rank"])
        assert code == 0
        certs = report["outputs"]["rank_certificates"]
        assert certs["max_term_count"] <= certs["rank_bound"]
        assert certs["max_rank"] <= certs["max_term_count"]

    def test_cap_refusal_exit_three(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=2, S=[[0, 0]], T=[[1, 1]])
        assert run_command(["decompose", "--input", path, "--cap", "8"]) == 3

    def test_empty_sets(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=2, S=[], T=[[1, 1]])
        code, report = run_json(capsys, ["decompose", "--input", path])
        assert code == 0
        assert report["outputs"]["witness_total"] == 0

    def test_missing_t_exit_two(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=1, S=[[0]])
        assert run_command(["decompose", "--input", path]) == 2

    def test_human_output_includes_json_block(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=2, n=1, S=[[0]], T=[[1]])
        code = run_command(["decompose", "--input", path])
        out = capsys.readouterr().out
        assert code == 0
        assert "--- report (json) ---" in out
        blob = out.split("--- report (json) ---", 1)[1]
        assert json.loads(blob)["ok"]


class TestSymmetricCommand:
    def test_rigid_interval(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=1, S=[[0], [1]])
        code, report = run_json(capsys, ["symmetric", "--input", path])
        assert code == 0
        assert report["outputs"]["witness_size"] == 2


class TestCapsetCommand:
    def test_capset_passes(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=2, S=[[0, 0], [0, 1], [1, 0], [1, 1]])
        code, report = run_json(capsys, ["check-capset", "--input", path])
        assert code == 0
        assert report["outputs"]["applicable"] and report["outputs"]["passed"]

    def test_non_capset_not_applicable(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=3, n=1, S=[[0], [1], [2]])
        code, report = run_json(capsys, ["check-capset", "--input", path])
        assert code == 0
        assert not report["outputs"]["applicable"]


class TestSumfreeCommand:
    def test_f5_family(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=5, n=1, S=[[0], [1]], T=[[0], [1]])
        code, report = run_json(capsys, ["check-sumfree", "--input", path])
        assert code == 0
        assert report["outputs"]["matching_sumfree"]
        assert report["outputs"]["passed"]

    def test_f2_collision_fails(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=2, n=1, S=[[0], [1]], T=[[0], [1]])
        code, report = run_json(capsys, ["check-sumfree", "--input", path])
        assert code == 1
        assert not report["outputs"]["matching_sumfree"]


class TestOracleCommand:
    def test_small_instance(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=2, n=2,
                              S=[[0, 0], [0, 1], [1, 0], [1, 1]],
                              T=[[0, 0], [0, 1], [1, 0], [1, 1]])
        code, report = run_json(capsys, ["oracle", "--input", path])
        assert code == 0
        out = report["outputs"]
        assert out["best_total"] == 1
        assert out["best_total"] <= out["greedy_total"] <= out["bound"]

    def test_search_cap_exit_three(self, tmp_path, capsys):
        path = write_instance(tmp_path, q=2, n=2,
                              S=[[0, 0], [0, 1], [1, 0], [1, 1]],
                              T=[[0, 0], [0, 1], [1, 0], [1, 1]])
        assert run_command(["oracle", "--input", path, "--search-cap", "4"]) == 3


class TestTrialsCommand:
    def strip_timing(self, text):
        return re.sub(r'^\s*"timing_ms": .*$', "", text, flags=re.MULTILINE)

    def test_deterministic_reports(self, capsys):
        argv = ["trials", "--q", "2", "--n", "2", "--count", "20", "--seed", "7", "--json"]
        assert run_command(argv) == 0
        first = capsys.readouterr().out
        assert run_command(argv) == 0
        second = capsys.readouterr().out
        assert self.strip_timing(first) == self.strip_timing(second)

    def test_oracle_comparison(self, capsys):
        argv = [
            "trials", "--q", "2", "--n", "1", "--count", "10", "--seed", "3",
            "--oracle", "--json",
        ]
        code, report = run_json(capsys, argv[:-1])
        assert code == 0
        assert report["outputs"]["max_witness_total"] <= report["outputs"]["bound"]
        for row in report["outputs"]["trials"]:
            assert row["ok"]

    def test_bad_probability_exit_two(self, capsys):
        argv = ["trials", "--q", "2", "--n", "1", "--count", "1", "--seed", "0", "--p", "1.5"]
        assert run_command(argv) == 2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "sumsetcover.cli", "bound", "--q", "2", "--n", "1", "--json"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["outputs"]["chosen_bound"] == 2

    def test_unknown_subcommand_exit_two(self):
        proc = subprocess.run(
            [sys.executable, "-m", "sumsetcover.cli", "frobnicate"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 2
