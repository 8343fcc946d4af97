"""Record real API responses as JSON fixtures for the UI contract tests.

Run from the repository root after installing the Python package:

    python3 frontend/record_fixtures.py

The script spins up the service in-process over two seeded synthetic
missions, captures every endpoint the UI consumes, submits the rank-1
decision for mission-01 and records the resulting scores, so the fixtures
form one coherent evaluation session.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from planrank.datasets import generate_dataset
from planrank.service import create_app

FIXTURES = Path(__file__).parent / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def main() -> None:
    datasets = {
        "mission-01": generate_dataset((6, 1, 3, 1, 6), seed=21, dataset_id="mission-01"),
        "mission-02": generate_dataset((6, 1, 4, 2, 4), seed=22, dataset_id="mission-02"),
    }
    log = FIXTURES / "_scratch_decisions.jsonl"
    if log.exists():
        log.unlink()
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app(datasets=datasets, decisions_path=log))

    dump("criteria.json", client.get("/api/v1/criteria").json())
    dump("profiles.json", client.get("/api/v1/profiles").json())
    dump("methods.json", client.get("/api/v1/methods").json())
    dump("missions.json", client.get("/api/v1/missions").json())
    dump("solutions_unranked.json",
         client.get("/api/v1/missions/mission-01/solutions").json())
    ranked = client.get("/api/v1/missions/mission-01/solutions",
                        params={"profile": "Balanced", "method": "fuzzy_vikor"}).json()
    dump("solutions_ranked.json", ranked)
    dump("solutions_mission02.json",
         client.get("/api/v1/missions/mission-02/solutions").json())

    best_plan = ranked["solutions"][0]["plan"]
    posted = client.post("/api/v1/decisions", json={
        "operator": "op-1", "profile": "Balanced",
        "mission": "mission-01", "plan": best_plan,
    })
    assert posted.status_code == 201, posted.text
    dump("decision_post.json", posted.json())
    dump("decisions.json", client.get("/api/v1/decisions").json())
    dump("scores_after_decision.json",
         client.get("/api/v1/scores",
                    params={"group_by": "method", "method": "fuzzy_vikor"}).json())
    bad = client.post("/api/v1/decisions", json={"operator": "op-1"})
    assert bad.status_code == 422
    dump("decision_error.json", bad.json())
    log.unlink()
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
