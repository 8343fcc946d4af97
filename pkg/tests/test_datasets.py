"""Dataset schema validation, codec round-trip and the synthetic generator."""

import json

import pytest

from planrank.datasets import (
    DATASET_SHAPES,
    dataset_from_json,
    dataset_to_json,
    generate_all,
    generate_dataset,
    ingest,
    save_dataset,
)
from planrank.errors import DatasetError
from planrank.model import CANONICAL_CRITERION_IDS


@pytest.fixture
def table_row_one(tmp_path):
    ds = generate_dataset((6, 1, 3, 1, 17), seed=42, dataset_id="mission-01")
    path = tmp_path / "mission-01.json"
    save_dataset(ds, path)
    return ds, path


class TestIngest:
    def test_loads_first_bundled_shape(self, table_row_one):
        ds, path = table_row_one
        loaded = ingest(path)
        assert loaded == ds
        assert len(loaded.plans) == 17
        assert loaded.meta.tasks == 6 and loaded.meta.uavs == 3 and loaded.meta.gcss == 1

    def test_empty_plan_list_rejected(self, tmp_path):
        doc = {"id": "x", "meta": {"tasks": 1, "multi_uav_tasks": 0, "uavs": 1, "gcss": 1},
               "plans": []}
        path = tmp_path / "x.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DatasetError, match="/plans"):
            ingest(path)

    def test_duplicate_plan_id_named(self, table_row_one, tmp_path):
        ds, _ = table_row_one
        doc = dataset_to_json(ds)
        doc["plans"][1]["id"] = doc["plans"][0]["id"]
        path = tmp_path / "dup.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DatasetError, match=doc["plans"][0]["id"]):
            ingest(path)

    def test_missing_criterion_pointer(self, table_row_one, tmp_path):
        ds, _ = table_row_one
        doc = dataset_to_json(ds)
        del doc["plans"][2]["criteria"]["fuel"]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DatasetError, match="/plans/2/criteria"):
            ingest(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(DatasetError, match="invalid JSON"):
            ingest(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DatasetError, match="no such dataset"):
            ingest(tmp_path / "absent.json")

    def test_stray_order_key_pointer(self, table_row_one, tmp_path):
        ds, _ = table_row_one
        doc = dataset_to_json(ds)
        doc["plans"][0]["orders"]["T999"] = {"U1": 1}
        path = tmp_path / "stray.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(DatasetError, match="/plans/0"):
            ingest(path)


class TestCodec:
    def test_roundtrip_all_shapes(self):
        for i, ds in enumerate(generate_all(seed=5)):
            assert dataset_from_json(dataset_to_json(ds)) == ds

    def test_json_is_deterministic(self, tmp_path):
        a = generate_dataset(DATASET_SHAPES[0], seed=1, dataset_id="m")
        b = generate_dataset(DATASET_SHAPES[0], seed=1, dataset_id="m")
        pa, pb = tmp_path / "a.json", tmp_path / "b.json"
        save_dataset(a, pa)
        save_dataset(b, pb)
        assert pa.read_bytes() == pb.read_bytes()


class TestGenerator:
    def test_shapes_match_bundled_table(self):
        datasets = generate_all(seed=0)
        assert len(datasets) == 12
        got = [(ds.meta.tasks, ds.meta.multi_uav_tasks, ds.meta.uavs, ds.meta.gcss,
                len(ds.plans)) for ds in datasets]
        assert got == list(DATASET_SHAPES)

    def test_solution_counts_span_table(self):
        counts = sorted(len(ds.plans) for ds in generate_all(seed=0))
        assert counts[0] == 3 and counts[-1] == 38

    def test_plans_cover_canonical_criteria(self):
        ds = generate_dataset((6, 1, 3, 1, 5), seed=9, dataset_id="m")
        for p in ds.plans:
            assert set(p.criteria) == set(CANONICAL_CRITERION_IDS)
            assert all(v > 0 for v in p.criteria.values())

    def test_counts_are_consistent_with_assignments(self):
        ds = generate_dataset((8, 2, 5, 2, 10), seed=3, dataset_id="m")
        for p in ds.plans:
            used_uavs = {u for us in p.task_uavs.values() for u in us}
            assert p.criteria["num_uavs"] == len(used_uavs)
            assert p.criteria["num_gcss"] == len(set(p.gcs_assign.values()))

    def test_decision_matrix_shape(self):
        ds = generate_dataset((6, 1, 3, 1, 5), seed=9, dataset_id="m")
        m = ds.decision_matrix()
        assert m.alternatives == tuple(p.id for p in ds.plans)
        assert len(m.criteria) == 11
