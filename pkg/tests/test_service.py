import pytest
from fastapi.testclient import TestClient

from fmk.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    resp = client.get("/v1/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_classify_endpoint_default_family(client):
    resp = client.post("/v1/classify", json={"n": 3, "k_max": 4})
    assert resp.status_code == 200
    records = resp.json()["records"]
    assert len(records) == 5  # identity row plus four operator rows
    assert records[0]["family"] == "identity"
    assert [r["k"] for r in records] == [0, 1, 2, 3, 4]
    r4 = records[4]
    assert r4["lambda"] == "-3" and r4["nu"] == "3" and r4["homDim"] == 1


def test_classify_endpoint_all_families(client):
    resp = client.post("/v1/classify", json={"n": 3, "k_max": 2, "family": "all"})
    rows = resp.json()["records"]
    assert {r["family"] for r in rows} == {"identity", "Lambda_G", "Lambda_gP", "Lambda_g"}
    verma = [r for r in rows if r["family"] == "Lambda_gP" and r["k"] == 2][0]
    assert verma["s"] == "1" and verma["r"] == "-2"


def test_classify_validation(client):
    resp = client.post("/v1/classify", json={"n": 1, "k_max": 2})
    assert resp.status_code == 422
    resp = client.post("/v1/classify", json={"n": 3, "k_max": 2, "alpha": "x"})
    assert resp.status_code == 422


def test_operator_endpoint(client):
    resp = client.post("/v1/operator", json={"n": 2, "k": 3})
    assert resp.status_code == 200
    data = resp.json()
    assert data["lam"] == "-2" and data["nu"] == "4"
    assert data["operator"]["components"] == [
        {"label": [3], "terms": [{"deriv": [3], "coeff": "1"}]}
    ]
    assert data["hom"]["components"][0]["label"] == [3]


def test_verify_endpoint_pass_and_fail(client):
    ok = client.post("/v1/verify", json={"n": 3, "k": 2})
    assert ok.status_code == 200 and ok.json()["passed"]
    bad = client.post("/v1/verify", json={"n": 3, "k": 2, "lam": "0", "max_deg": 3})
    assert bad.status_code == 200
    body = bad.json()
    assert not body["passed"]
    assert body["report"]["counterexample"] is not None


def test_verify_rejects_bad_rational(client):
    resp = client.post("/v1/verify", json={"n": 3, "k": 1, "lam": "1.5x"})
    assert resp.status_code == 422


def test_ktypes_endpoint(client):
    resp = client.post("/v1/ktypes", json={"n": 3, "k": 3, "alpha": "+"})
    assert resp.status_code == 200
    data = resp.json()
    assert data["table"]["kernel"]["total_dim"] == 6
    assert data["finite_model"]["passed"]
    zero = client.post("/v1/ktypes", json={"n": 3, "k": 2, "alpha": "+"})
    assert zero.json()["table"]["kernel"]["kind"] == "zero"
    assert zero.json()["finite_model"] is None


def test_ktypes_rank_two_is_client_error(client):
    resp = client.post("/v1/ktypes", json={"n": 2, "k": 1, "alpha": "+"})
    assert resp.status_code == 400
    assert "n >= 3" in resp.json()["detail"]


def test_composition_endpoint(client):
    resp = client.post("/v1/composition", json={"n": 3, "lam": "-2", "alpha": "+"})
    data = resp.json()["table"]
    assert data["case"] == "A" and not data["irreducible"]
    irr = client.post("/v1/composition", json={"n": 3, "lam": "1/2", "alpha": "+"})
    assert irr.json()["table"]["irreducible"]


def test_standardness_endpoint(client):
    resp = client.post("/v1/standardness", json={"n": 3, "k_max": 5})
    assert resp.status_code == 200
    data = resp.json()
    assert data["all_standard"] and len(data["rows"]) == 6
    two = client.post("/v1/standardness", json={"n": 2, "k_max": 1})
    assert two.status_code == 400


def test_reducibility_endpoint(client):
    resp = client.post("/v1/reducibility", json={
        "n": 4, "s_values": ["-1", "0", "1/2", "2"],
    })
    verdicts = resp.json()["verdicts"]
    assert [v["reducible"] for v in verdicts] == [False, True, False, True]
    assert verdicts[3]["witness_degree"] == 3
