import numpy as np
import pytest

from spkmeans import cli, corpus_io, engine
from spkmeans.datagen import random_sparse_rows


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    p = tmp_path_factory.mktemp("cli") / "corpus.svml"
    corpus_io.write_svmlight(random_sparse_rows(120, 40, 4, seed=10), p)
    return p


def run_cli(capsys, args):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def summary_rows(stdout):
    lines = [l for l in stdout.splitlines()
             if l and not l.startswith("#") and l != cli.SUMMARY_HEADER]
    return [l.split(",") for l in lines]


class TestExitCodes:
    def test_success(self, corpus, capsys):
        code, out, _ = run_cli(capsys, ["--input", str(corpus), "--k", "3"])
        assert code == 0
        assert out.startswith(cli.SUMMARY_HEADER)

    def test_unknown_variant_is_config_error(self, corpus, capsys):
        code, _, err = run_cli(
            capsys, ["--input", str(corpus), "--k", "3", "--variant", "bogus"]
        )
        assert code == 1
        assert "variant" in err

    @pytest.mark.parametrize(
        "extra",
        [
            ["--k", "0"],
            ["--k", "3", "--alpha", "0.5"],
            ["--k", "3", "--alpha", "2.5"],
            ["--k", "3", "--chain-length", "0"],
            ["--k", "3", "--repeats", "0"],
            ["--k", "3", "--max-iter", "0"],
        ],
    )
    def test_bad_values_are_config_errors(self, corpus, capsys, extra):
        code, _, err = run_cli(capsys, ["--input", str(corpus)] + extra)
        assert code == 1
        assert err.startswith("configuration error")

    def test_missing_file_is_data_error(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, ["--input", str(tmp_path / "nope.svml"), "--k", "2"]
        )
        assert code == 2
        assert err.startswith("data error")

    def test_malformed_file_reports_line(self, capsys, tmp_path):
        p = tmp_path / "bad.svml"
        p.write_text("1 0:1.0\n1 zap\n")
        code, _, err = run_cli(capsys, ["--input", str(p), "--k", "1"])
        assert code == 2
        assert "line 2" in err

    def test_k_exceeding_rows_is_data_error(self, corpus, capsys):
        code, _, err = run_cli(capsys, ["--input", str(corpus), "--k", "500"])
        assert code == 2


class TestSummary:
    def test_one_line_per_repeat_with_consecutive_seeds(self, corpus, capsys):
        code, out, _ = run_cli(
            capsys,
            ["--input", str(corpus), "--k", "4", "--seed", "42",
             "--repeats", "3", "--variant", "elkan", "--init", "kmpp"],
        )
        assert code == 0
        rows = summary_rows(out)
        assert [r[0] for r in rows] == ["42", "43", "44"]
        for r in rows:
            assert r[1] == "elkan" and r[2] == "4"
            assert int(r[4]) > 0  # total_sims
            assert int(r[5]) > 0  # total_cc_sims

    def test_objective_matches_reloaded_assignments(self, corpus, capsys,
                                                    tmp_path):
        out_a = tmp_path / "assign.csv"
        code, out, _ = run_cli(
            capsys,
            ["--input", str(corpus), "--k", "4", "--seed", "3",
             "--out-assignments", str(out_a)],
        )
        assert code == 0
        row = summary_rows(out)[0]
        data = corpus_io.load_dataset(corpus)
        a = np.array(
            [int(l.split(",")[1]) for l in out_a.read_text().splitlines()]
        )
        cs = engine.CentroidSet.from_data_rows(data, range(4))
        engine.update_centers(data, a, cs)
        assert float(row[6]) == pytest.approx(
            engine.compute_objective(data, a, cs), rel=1e-12
        )

    def test_audit_lines(self, corpus, capsys):
        code, out, _ = run_cli(
            capsys,
            ["--input", str(corpus), "--k", "4", "--variant", "hamerly",
             "--audit"],
        )
        assert code == 0
        audit = [l for l in out.splitlines() if l.startswith("# audit")]
        assert len(audit) == 1
        assert "pass=True" in audit[0]


class TestOutputsAndDeterminism:
    def test_per_seed_output_files(self, corpus, capsys, tmp_path):
        code, _, _ = run_cli(
            capsys,
            ["--input", str(corpus), "--k", "3", "--repeats", "2",
             "--seed", "5", "--out-assignments", str(tmp_path / "a.csv"),
             "--out-stats", str(tmp_path / "s.csv")],
        )
        assert code == 0
        for seed in (5, 6):
            assert (tmp_path / f"a.seed{seed}.csv").exists()
            assert (tmp_path / f"s.seed{seed}.csv").exists()

    def test_repeated_run_byte_identical(self, corpus, capsys, tmp_path):
        args = ["--input", str(corpus), "--k", "4", "--variant", "simp_elkan",
                "--init", "afkmc2", "--seed", "9"]
        outputs = []
        for run in range(2):
            a = tmp_path / f"a{run}.csv"
            code, out, _ = run_cli(capsys, args + ["--out-assignments", str(a)])
            assert code == 0
            row = summary_rows(out)[0]
            outputs.append((a.read_bytes(), row[:7]))  # drop wall_ns
        assert outputs[0] == outputs[1]

    def test_tfidf_flag_changes_clustering_input(self, corpus, capsys):
        _, out_plain, _ = run_cli(
            capsys, ["--input", str(corpus), "--k", "4", "--seed", "2"]
        )
        _, out_tfidf, _ = run_cli(
            capsys, ["--input", str(corpus), "--k", "4", "--seed", "2",
                     "--tfidf"]
        )
        assert summary_rows(out_plain)[0][6] != summary_rows(out_tfidf)[0][6]


class TestBenchCompare:
    def test_grid_rows_and_standard_accounting(self, corpus, tmp_path):
        data = corpus_io.load_dataset(corpus)
        rows = cli.bench_compare(
            data, ["standard", "elkan"], [2, 4], seed=1, repeats=2
        )
        assert len(rows) == 4
        for row in rows:
            if row["variant"] == "standard":
                expect = row["mean_iterations"] * data.n * row["k"]
                assert row["mean_total_sims"] == pytest.approx(expect)
        # identical objectives across variants for a fixed (k, seeds)
        by_k = {}
        for row in rows:
            by_k.setdefault(row["k"], []).append(row["mean_objective"])
        for k, objs in by_k.items():
            assert objs[0] == pytest.approx(objs[1], rel=1e-9)

        out = tmp_path / "bench.csv"
        cli.write_bench_csv(rows, out)
        header = out.read_text().splitlines()[0]
        assert header == ",".join(cli.BENCH_HEADER)
