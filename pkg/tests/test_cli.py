# tests/test_cli.py
"""End-to-end runs of the domset-lab command line."""

import csv
import json

import pytest

from src.cli import EXIT_CAPPED, EXIT_ERROR, EXIT_OK, main
from src.core.schemas import Regime
from src.core.seeding import derive_seed
from src.graphs import gnp_sample, parse_graph, write_graph
from src.harness import sweep, trial_seed, write_csv


@pytest.fixture
def path_file(tmp_path, path3):
    path = tmp_path / "path3.txt"
    write_graph(path3, path)
    return path


def _stdout_json(capsys):
    out = capsys.readouterr().out
    return [json.loads(line) for line in out.splitlines() if line.strip()]


class TestGen:

    def test_writes_graph_to_stdout(self, capsys):
        assert main(["gen", "--n", "6", "--p", "0.5", "--seed", "3"]) == EXIT_OK
        captured = capsys.readouterr()
        assert parse_graph(captured.out) == gnp_sample(6, 0.5, 3)
        resolved = json.loads(captured.err.splitlines()[0])
        assert resolved["args"]["seed"] == 3
        assert "solver" in resolved["config"]

    def test_seed_is_required(self):
        with pytest.raises(SystemExit) as info:
            main(["gen", "--n", "6", "--p", "0.5"])
        assert info.value.code == EXIT_ERROR

    def test_invalid_probability(self):
        assert main(["gen", "--n", "6", "--p", "2", "--seed", "3"]) == EXIT_ERROR


class TestSolve:

    @pytest.mark.parametrize("algo", ["bb", "exhaustive", "oracle"])
    def test_solves_path(self, algo, path_file, capsys):
        assert main(["solve", "--in", str(path_file), "--algo", algo]) == EXIT_OK
        [report] = _stdout_json(capsys)
        assert report["opt_set"] == [1]
        assert report["algorithm"] == algo

    def test_capped_exit_code(self, path_file, capsys):
        assert main(["solve", "--in", str(path_file), "--cap", "1"]) == EXIT_CAPPED
        [report] = _stdout_json(capsys)
        assert report["capped"] is True
        assert report["cap_reason"] == "cap"

    def test_random_tie_rule(self, path_file, capsys):
        assert main(["solve", "--in", str(path_file), "--tie", "rand", "--seed", "8"]) == EXIT_OK
        [report] = _stdout_json(capsys)
        assert report["tie_rule"] == "rand" and report["seed"] == 8

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("3 1\n0 5\n", encoding="utf-8")
        assert main(["solve", "--in", str(bad)]) == EXIT_ERROR
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["solve", "--in", str(tmp_path / "none.txt")]) == EXIT_ERROR


class TestBounds:

    def test_gplus(self, capsys):
        assert main(["bounds", "gplus", "--j", "1"]) == EXIT_OK
        [record] = _stdout_json(capsys)
        assert record["name"] == "g_plus"
        assert record["value"] == pytest.approx(1.5417, abs=1e-3)

    def test_table_with_text_row(self, capsys):
        assert main(["bounds", "feps-table", "--with-text-row"]) == EXIT_OK
        records = _stdout_json(capsys)
        assert len(records) == 9
        assert all(r["extra"]["pass"] for r in records)

    def test_domain_error(self, capsys):
        assert main(["bounds", "lambertw", "--x", "-1"]) == EXIT_ERROR

    def test_unknown_bound(self):
        with pytest.raises(SystemExit) as info:
            main(["bounds", "nonsense"])
        assert info.value.code == EXIT_ERROR


class TestExperiment:

    def test_writes_csv_and_summary(self, tmp_path, capsys):
        out = tmp_path / "exp.csv"
        code = main(["experiment", "--regime", "fixed_p", "--param", "0.5", "--n-list", "6,8,10",
                     "--trials", "3", "--seed", "4", "--out", str(out), "--workers", "2"])
        assert code == EXIT_OK
        with open(out, newline="") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 9
        assert {row["n"] for row in rows} == {"6", "8", "10"}
        assert "slope=" in capsys.readouterr().out

    def test_unknown_regime(self, tmp_path):
        code = main(["experiment", "--regime", "cubic", "--param", "1", "--n-list", "5",
                     "--trials", "1", "--seed", "1", "--out", str(tmp_path / "x.csv")])
        assert code == EXIT_ERROR

    def test_bad_n_list(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(["experiment", "--regime", "fixed_p", "--param", "0.5", "--n-list", "a,b",
                  "--trials", "1", "--out", str(tmp_path / "x.csv")])
        assert info.value.code == EXIT_ERROR


class TestVerify:

    def test_small_run(self, capsys):
        assert main(["verify", "--max-n", "3", "--battery", "5"]) == EXIT_OK
        summary = json.loads(capsys.readouterr().out)
        assert summary["failures"] == []
        assert summary["graphs_per_n"] == {"1": 1, "2": 2, "3": 8}

    def test_guard(self):
        assert main(["verify", "--max-n", "6", "--battery", "0"]) == EXIT_ERROR


class TestDeterminism:

    def test_gen_files_are_byte_identical(self, tmp_path, capsys):
        for name in ("a.txt", "b.txt"):
            assert main(["gen", "--n", "12", "--p", "0.3", "--seed", "9", "--out", str(tmp_path / name)]) == EXIT_OK
        assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()
        assert capsys.readouterr().out.splitlines()[0].startswith("n=12 m=")

    def test_gen_extremes(self, tmp_path):
        main(["gen", "--n", "5", "--p", "0", "--seed", "1", "--out", str(tmp_path / "e.txt")])
        assert (tmp_path / "e.txt").read_text() == "5 0\n"

    def test_experiment_csv_is_byte_identical(self, tmp_path):
        for name in ("a.csv", "b.csv"):
            main(["experiment", "--regime", "c-over-n", "--param", "2", "--n-list", "10", "--trials", "2",
                  "--seed", "6", "--out", str(tmp_path / name)])
        data = (tmp_path / "a.csv").read_bytes()
        assert data == (tmp_path / "b.csv").read_bytes()
        assert len(data.splitlines()) == 3

    def test_solve_stdout_is_byte_identical(self, tmp_path, capsys):
        graph = tmp_path / "g.txt"
        write_graph(gnp_sample(18, 0.3, 21), graph)
        capsys.readouterr()
        outputs = []
        for _ in range(2):
            assert main(["solve", "--in", str(graph), "--algo", "bb", "--tie", "det"]) == EXIT_OK
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert json.loads(outputs[0])["opt_size"] >= 1

    def test_experiment_csv_matches_a_shuffled_sweep(self, tmp_path):
        """Verifies:
        - the CLI's CSV equals one written from a sweep run in a permuted job order
        """
        cli_out = tmp_path / "cli.csv"
        assert main(["experiment", "--regime", "fixed_p", "--param", "0.4", "--n-list", "8,10",
                     "--trials", "4", "--seed", "13", "--out", str(cli_out), "--workers", "1"]) == EXIT_OK
        records = sweep(Regime(kind="fixed_p", param=0.4), [8, 10], 4, 13, workers=3, shuffle_seed=5)
        write_csv(records, tmp_path / "sweep.csv")
        assert cli_out.read_bytes() == (tmp_path / "sweep.csv").read_bytes()

    def test_experiment_echoes_derived_seeds(self, tmp_path, capsys):
        assert main(["experiment", "--regime", "c_over_n", "--param", "2", "--n-list", "6,7",
                     "--trials", "2", "--seed", "3", "--tie", "rand", "--out", str(tmp_path / "x.csv")]) == EXIT_OK
        resolved = json.loads(capsys.readouterr().err.splitlines()[0])
        regime = Regime(kind="c_over_n", param=2.0)
        expected = []
        for n in (6, 7):
            for t in range(2):
                seed = trial_seed(3, regime, n, t)
                expected.append({"n": n, "trial": t, "seed": seed, "tie_seed": derive_seed(seed, "tie")})
        assert resolved["trial_seeds"] == expected
        with open(tmp_path / "x.csv", newline="") as f:
            assert [int(row["seed"]) for row in csv.DictReader(f)] == [e["seed"] for e in expected]

    def test_experiment_needs_seed(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(["experiment", "--regime", "fixed_p", "--param", "0.5", "--n-list", "5",
                  "--trials", "1", "--out", str(tmp_path / "x.csv")])
        assert info.value.code == EXIT_ERROR

    def test_rand_tie_needs_seed(self, path_file):
        assert main(["solve", "--in", str(path_file), "--tie", "rand"]) == EXIT_ERROR
