import json

import pytest
from conftest import DEMO_ROWS

from trendcontrast.cli import main


@pytest.fixture
def demo_tsv(tmp_path):
    path = tmp_path / "demo.tsv"
    path.write_text("\n".join("\t".join(row) for row in DEMO_ROWS) + "\n")
    return path


def run_cli(*args):
    return main([str(a) for a in args])


BASE = ["--positive-labels", "+"]


class TestTransform:
    def test_compresses_rows(self, demo_tsv, tmp_path):
        out = tmp_path / "shrunk.tsv"
        assert run_cli("transform", "--input", demo_tsv, *BASE, "--out", out) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 6
        last = lines[5].split("\t")
        assert last[0] == "-"
        assert [float(v) for v in last[1:]] == [9.0, 5.0, 8.0]

    def test_stdout_default(self, demo_tsv, capsys):
        assert run_cli("transform", "--input", demo_tsv, *BASE) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 6

    def test_csv_roundtrip(self, tmp_path):
        src = tmp_path / "demo.csv"
        lines = ["label,v1,v2,v3,v4,v5,v6"] + [",".join(r) for r in DEMO_ROWS]
        src.write_text("\n".join(lines) + "\n")
        out = tmp_path / "shrunk.csv"
        assert run_cli("transform", "--input", src, *BASE, "--out", out) == 0
        rows = out.read_text().splitlines()
        assert rows[0].startswith("label,")
        assert rows[6].split(",")[0] == "-"


class TestMine:
    def test_json_document(self, demo_tsv, tmp_path):
        out = tmp_path / "topk.json"
        code = run_cli("mine", "--input", demo_tsv, *BASE,
                       "--minden", "0.1", "--k", "3", "--out", out)
        assert code == 0
        payload = json.loads(out.read_text())
        assert [e["pattern"] for e in payload] == [[1, 3, 2], [1, 3, 2, 4], [2, 1, 3]]
        assert [e["contrast"] for e in payload] == [1.0, 1.0, 0.666667]
        assert {e["direction"] for e in payload} == {"forward"}
        assert set(payload[0]) == {"pattern", "direction", "r_plus", "r_minus", "contrast"}

    def test_output_is_byte_stable(self, demo_tsv, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for out in (a, b):
            run_cli("mine", "--input", demo_tsv, *BASE,
                    "--minden", "0.1", "--k", "3", "--out", out)
        assert a.read_bytes() == b.read_bytes()

    def test_prune_none_and_all_pairs_agree(self, demo_tsv, tmp_path):
        base = tmp_path / "base.json"
        run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                "--max-len", "6", "--out", base)
        for variant in (["--prune", "none"], ["--fusion", "all-pairs"]):
            out = tmp_path / "variant.json"
            run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                    "--max-len", "6", *variant, "--out", out)
            assert out.read_bytes() == base.read_bytes()

    def test_no_epe_on_pretransformed_input_reproduces_default(self, demo_tsv, tmp_path):
        shrunk = tmp_path / "shrunk.tsv"
        run_cli("transform", "--input", demo_tsv, *BASE, "--out", shrunk)
        default_out = tmp_path / "default.json"
        run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                "--out", default_out)
        noepe_out = tmp_path / "noepe.json"
        run_cli("mine", "--input", shrunk, *BASE, "--minden", "0.1", "--k", "3",
                "--no-epe", "--out", noepe_out)
        assert noepe_out.read_bytes() == default_out.read_bytes()

    def test_report_dir_writes_csv_and_figures(self, demo_tsv, tmp_path):
        report_dir = tmp_path / "report"
        run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                "--out", tmp_path / "q.json", "--report-dir", report_dir)
        names = sorted(p.name for p in report_dir.iterdir())
        assert names == [
            "candidates_per_level.png",
            "pruning_per_level.png",
            "report.csv",
            "topk_contrasts.png",
        ]
        header = (report_dir / "report.csv").read_text().splitlines()[0]
        assert header.split(",")[:3] == ["direction", "length", "group1"]
        for name in names:
            if name.endswith(".png"):
                assert (report_dir / name).stat().st_size > 0

    def test_dataset_error_exits_nonzero(self, tmp_path, capsys):
        path = tmp_path / "one_class.tsv"
        path.write_text("+\t1\t2\n+\t2\t1\n")
        assert run_cli("mine", "--input", path, *BASE) == 1
        assert "error" in capsys.readouterr().err

    def test_config_error_exits_nonzero(self, demo_tsv, capsys):
        assert run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "3.0") == 1
        assert "minden" in capsys.readouterr().err

    def test_missing_file_exits_nonzero(self, tmp_path, capsys):
        assert run_cli("mine", "--input", tmp_path / "nope.tsv", *BASE) == 1
        assert "error" in capsys.readouterr().err


class TestOracle:
    def test_same_schema_as_mine(self, demo_tsv, tmp_path):
        out = tmp_path / "oracle.json"
        code = run_cli("oracle", "--input", demo_tsv, *BASE,
                       "--minden", "0.1", "--k", "3", "--max-len", "6", "--out", out)
        assert code == 0
        payload = json.loads(out.read_text())
        assert sorted(e["contrast"] for e in payload) == [0.666667, 1.0, 1.0]
        assert set(payload[0]) == {"pattern", "direction", "r_plus", "r_minus", "contrast"}

    def test_agrees_with_mine_on_demo(self, demo_tsv, tmp_path):
        mine_out, oracle_out = tmp_path / "m.json", tmp_path / "o.json"
        run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                "--out", mine_out)
        run_cli("oracle", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                "--max-len", "6", "--out", oracle_out)
        assert oracle_out.read_bytes() == mine_out.read_bytes()


class TestFeatures:
    def test_matrix_csv(self, demo_tsv, tmp_path):
        patterns = tmp_path / "p.json"
        run_cli("mine", "--input", demo_tsv, *BASE, "--minden", "0.1", "--k", "3",
                "--out", patterns)
        out = tmp_path / "features.csv"
        code = run_cli("features", "--input", demo_tsv, *BASE, "--minden", "0.1",
                       "--patterns", patterns, "--out", out)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == 'id,label,"(1,3,2)","(1,3,2,4)","(2,1,3)"'
        first = lines[1].split(",")
        assert first[0] == "t1"
        assert lines[1].endswith("0.333333,0.166667,0.333333")

    def test_inline_mining_when_no_pattern_file(self, demo_tsv, capsys):
        code = run_cli("features", "--input", demo_tsv, *BASE,
                       "--minden", "0.1", "--k", "2")
        assert code == 0
        header = capsys.readouterr().out.splitlines()[0]
        assert header == 'id,label,"(1,3,2)","(1,3,2,4)"'

    def test_bad_pattern_file(self, demo_tsv, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"not": "patterns"}\n')
        assert run_cli("features", "--input", demo_tsv, *BASE, "--patterns", bad) == 1


class TestEvaluate:
    def test_prints_accuracy_and_writes_folds(self, demo_tsv, tmp_path, capsys):
        out = tmp_path / "eval.json"
        code = run_cli("evaluate", "--input", demo_tsv, *BASE, "--minden", "0.1",
                       "--k", "3", "--mode", "count", "--folds", "3",
                       "--neighbors", "1", "--seed", "0", "--out", out)
        assert code == 0
        assert capsys.readouterr().out.strip() == "1.000000"
        payload = json.loads(out.read_text())
        assert payload["accuracy"] == 1.0
        assert len(payload["folds"]) == 3
        assert all("test_ids" in fold for fold in payload["folds"])

    def test_evaluation_error_exit(self, demo_tsv, capsys):
        assert run_cli("evaluate", "--input", demo_tsv, *BASE, "--folds", "5") == 1
        assert "class" in capsys.readouterr().err
