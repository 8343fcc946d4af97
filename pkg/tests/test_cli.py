"""CLI smoke tests and the pipeline determinism contract."""

import csv
import json

import pytest
from click.testing import CliRunner

from planrank.cli import main
from planrank.datasets import generate_dataset, save_dataset
from planrank.pipeline import PipelineConfig, run_pipeline


@pytest.fixture
def dataset_path(tmp_path):
    ds = generate_dataset((6, 1, 3, 1, 10), seed=31, dataset_id="mission-01")
    path = tmp_path / "mission-01.json"
    save_dataset(ds, path)
    return path


@pytest.fixture
def runner():
    return CliRunner()


class TestRank:
    def test_writes_ranking_csv(self, runner, dataset_path, tmp_path):
        out = tmp_path / "ranking.csv"
        res = runner.invoke(main, ["rank", "--dataset", str(dataset_path),
                                   "--method", "wsm", "--output", str(out)])
        assert res.exit_code == 0, res.output
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 10
        assert rows[0]["rank"] == "1"
        assert rows[0]["method"] == "wsm"
        assert {"rank", "plan", "score", "method"} == set(rows[0])

    def test_byte_identical_reruns(self, runner, dataset_path, tmp_path):
        outs = []
        for name in ("a.csv", "b.csv"):
            out = tmp_path / name
            res = runner.invoke(main, ["rank", "--dataset", str(dataset_path),
                                       "--method", "fuzzy_vikor", "--output", str(out)])
            assert res.exit_code == 0, res.output
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]


class TestFilter:
    def test_filtered_output_subsequence(self, runner, dataset_path, tmp_path):
        out = tmp_path / "filtered.json"
        res = runner.invoke(main, ["filter", "--dataset", str(dataset_path),
                                   "--threshold", "1.0", "--output", str(out)])
        assert res.exit_code == 0, res.output
        doc = json.loads(out.read_text())
        assert doc["threshold"] == 1.0
        assert 1 <= len(doc["kept"]) <= 10

    def test_zero_threshold_keeps_distinct(self, runner, dataset_path, tmp_path):
        out = tmp_path / "filtered.json"
        res = runner.invoke(main, ["filter", "--dataset", str(dataset_path),
                                   "--threshold", "0", "--output", str(out)])
        assert res.exit_code == 0, res.output
        assert len(json.loads(out.read_text())["kept"]) == 10


class TestSweep:
    def test_full_grid_row_count(self, runner, dataset_path, tmp_path):
        out = tmp_path / "sweep.csv"
        plot = tmp_path / "sweep.json"
        res = runner.invoke(main, ["sweep-threshold", "--dataset", str(dataset_path),
                                   "--grid", "0:5:0.1", "--output", str(out),
                                   "--plot-json", str(plot)])
        assert res.exit_code == 0, res.output
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 51
        assert rows[0]["threshold"] == "0.0" and rows[-1]["threshold"] == "5.0"
        doc = json.loads(plot.read_text())
        assert len(doc["thresholds"]) == 51

    def test_bad_grid_rejected(self, runner, dataset_path, tmp_path):
        res = runner.invoke(main, ["sweep-threshold", "--dataset", str(dataset_path),
                                   "--grid", "nope", "--output", str(tmp_path / "x.csv")])
        assert res.exit_code != 0


class TestScoreAndCompare:
    @pytest.fixture
    def with_decisions(self, tmp_path, dataset_path):
        ds_dir = dataset_path.parent
        log = tmp_path / "decisions.jsonl"
        cfg = PipelineConfig(method="wsm", profile="Balanced")
        from planrank.datasets import ingest
        ranking = run_pipeline(ingest(dataset_path), cfg).ranking
        best = ranking.entries[0].alternative
        worst = ranking.entries[-1].alternative
        lines = [
            {"operator": "op1", "profile": "Balanced", "mission": "mission-01",
             "plan": best, "ts": ""},
            {"operator": "op2", "profile": "Risk", "mission": "mission-01",
             "plan": worst, "ts": ""},
        ]
        log.write_text("".join(json.dumps(x) + "\n" for x in lines))
        return ds_dir, log

    def test_score_csv(self, runner, with_decisions, tmp_path):
        ds_dir, log = with_decisions
        out = tmp_path / "scores.csv"
        res = runner.invoke(main, ["score", "--data-dir", str(ds_dir),
                                   "--decisions", str(log),
                                   "--method", "wsm", "--output", str(out)])
        assert res.exit_code == 0, res.output
        rows = list(csv.DictReader(out.open()))
        assert rows[0]["method"] == "wsm"
        assert rows[0]["count"] == "2"

    def test_compare_line(self, runner, with_decisions):
        ds_dir, log = with_decisions
        res = runner.invoke(main, ["compare", "--data-dir", str(ds_dir),
                                   "--decisions", str(log),
                                   "--a", "fuzzy_vikor", "--b", "vikor"])
        assert res.exit_code == 0, res.output
        assert "mean_diff=" in res.output and "p=" in res.output

    def test_empty_decisions_error(self, runner, dataset_path, tmp_path):
        log = tmp_path / "empty.jsonl"
        log.write_text("")
        res = runner.invoke(main, ["compare", "--data-dir", str(dataset_path.parent),
                                   "--decisions", str(log),
                                   "--a", "wsm", "--b", "wpm"])
        assert res.exit_code != 0


class TestGenSynthetic:
    def test_emits_twelve_datasets(self, runner, tmp_path):
        out = tmp_path / "data"
        res = runner.invoke(main, ["gen-synthetic", "--output-dir", str(out), "--seed", "4"])
        assert res.exit_code == 0, res.output
        files = sorted(out.glob("*.json"))
        assert len(files) == 12

    def test_seeded_determinism(self, runner, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            res = runner.invoke(main, ["gen-synthetic", "--output-dir", str(out), "--seed", "4"])
            assert res.exit_code == 0
        for fa, fb in zip(sorted(a.glob("*.json")), sorted(b.glob("*.json"))):
            assert fa.read_bytes() == fb.read_bytes()


class TestPipeline:
    def test_filtered_is_subsequence_of_ranking(self, dataset_path):
        from planrank.datasets import ingest

        ds = ingest(dataset_path)
        for method in ("wsm", "fuzzy_vikor", "electre3"):
            result = run_pipeline(ds, PipelineConfig(method=method, threshold=0.8))
            order = result.ranking.ordered_ids()
            it = iter(order)
            assert all(p.id in it for p in result.filtered)

    def test_persisted_artifacts(self, dataset_path, tmp_path):
        from planrank.datasets import ingest

        ds = ingest(dataset_path)
        cfg = PipelineConfig(output_dir=str(tmp_path / "out"))
        run_pipeline(ds, cfg)
        files = sorted(p.name for p in (tmp_path / "out").iterdir())
        assert files == ["mission-01_fuzzy_vikor_Balanced_filtered.json",
                         "mission-01_fuzzy_vikor_Balanced_ranking.csv"]


class TestMethodParamsBlock:
    def test_block_selects_fuzzy_variant(self, runner, dataset_path, tmp_path):
        params = tmp_path / "params.json"
        params.write_text(json.dumps({"method": "topsis", "norm": "linear", "fuzzy": True}))
        out = tmp_path / "r.csv"
        res = runner.invoke(main, ["rank", "--dataset", str(dataset_path),
                                   "--params", str(params), "--output", str(out)])
        assert res.exit_code == 0, res.output
        rows = list(csv.DictReader(out.open()))
        assert rows[0]["method"] == "fuzzy_topsis_linear"

    def test_block_parses_thresholds_and_rim(self):
        from planrank.pipeline import method_params_from_json

        block = method_params_from_json({
            "method": "electre3", "v": 0.4,
            "thresholds": {"c0": [0, 1, 2], "c1": {"q": 0.5, "p": 2, "v": 4}},
        })
        assert block.method == "electre3"
        assert block.thresholds.per_criterion["c1"].p == 2
        block = method_params_from_json({
            "method": "rim",
            "rim": {"c0": [0, 10, 0, 2], "c1": {"range": [0, 8], "ideal": [6, 8]}},
        })
        assert block.rim_params.per_criterion["c1"].ideal_min == 6

    def test_block_rejects_topsis_without_norm(self):
        from planrank.errors import ParameterError
        from planrank.pipeline import method_params_from_json

        with pytest.raises(ParameterError, match="norm"):
            method_params_from_json({"method": "topsis"})

    def test_defaults_from_paper_parameters(self):
        from planrank.pipeline import method_params_from_json

        block = method_params_from_json({"method": "vikor"})
        assert block.v == 0.5 and block.lam == 0.5
