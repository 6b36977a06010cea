import pytest
from fastapi.testclient import TestClient

from skewring.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_autos(client):
    resp = client.get("/autos", params={"prime": 5})
    assert resp.status_code == 200
    doc = resp.json()
    assert [row["id"] for row in doc["automorphisms"]] == [1, 2, 3, 4, 5, 6]
    assert doc["oracle"] is None


def test_autos_brute_force(client):
    resp = client.get("/autos", params={"prime": 7, "brute_force": True})
    assert resp.json()["oracle"] == "OK"


def test_autos_bad_prime(client):
    resp = client.get("/autos", params={"prime": 2})
    assert resp.status_code == 422


def test_endos(client):
    doc = client.get("/endos", params={"prime": 5}).json()
    assert doc["count"] == 27
    assert sum(1 for c in doc["candidates"] if not c["injective"]) == 21


def test_table(client):
    doc = client.get("/table", params={"prime": 5}).json()
    assert doc["table"][0] == [1, 2, 3, 4, 5, 6]
    assert len(doc["table"]) == 6


def test_elem_mul(client):
    resp = client.post("/elem/mul", json={
        "prime": 5,
        "x": {"a": 2, "b": 1, "c": 0},
        "y": {"a": 3, "b": 3, "c": 1},
    })
    assert resp.json()["result"] == {"a": 1, "b": 0, "c": 0}


def test_elem_inv(client):
    resp = client.post("/elem/inv", json={
        "prime": 5, "z": {"a": 2, "b": 1, "c": 0}})
    assert resp.json()["result"] == {"a": 3, "b": 3, "c": 1}


def test_elem_inv_zero_divisor_is_400(client):
    resp = client.post("/elem/inv", json={
        "prime": 5, "z": {"a": 0, "b": 1, "c": 0}})
    assert resp.status_code == 400
    assert resp.json()["error"] == "NotInvertible"


def test_elem_classify(client):
    resp = client.post("/elem/classify", json={
        "prime": 5, "z": {"a": 1, "b": 4, "c": 0}})
    doc = resp.json()
    assert doc["kind"] == "zero divisor"
    assert "a+b+c=0" in doc["conditions"]


def test_poly_mul(client):
    resp = client.post("/poly/mul", json={
        "prime": 3,
        "theta": 2,
        "f": {"coeffs": [{"a": 0, "b": 0, "c": 0}, {"a": 1, "b": 0, "c": 0}]},
        "g": {"coeffs": [{"a": 0, "b": 1, "c": 0}]},
    })
    assert resp.json()["result"]["coeffs"] == [
        {"a": 0, "b": 0, "c": 0}, {"a": 0, "b": 2, "c": 0}]


def test_poly_divmod(client):
    resp = client.post("/poly/divmod", json={
        "prime": 3,
        "theta": 2,
        "f": {"coeffs": [{"a": 2, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0},
                          {"a": 0, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0},
                          {"a": 1, "b": 0, "c": 0}]},
        "g": {"coeffs": [{"a": 1, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0},
                          {"a": 1, "b": 0, "c": 0}]},
    })
    doc = resp.json()
    assert doc["r"]["coeffs"] == []
    assert doc["q"]["coeffs"] == [
        {"a": 2, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0},
        {"a": 1, "b": 0, "c": 0}]


GEN_X2_PLUS_1 = {"coeffs": [{"a": 1, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0},
                             {"a": 1, "b": 0, "c": 0}]}


def test_code_build(client):
    resp = client.post("/code/build", json={
        "prime": 3, "theta": 2, "n": 4,
        "generator": GEN_X2_PLUS_1, "min_distance": True})
    doc = resp.json()
    assert (doc["n"], doc["k"], doc["cardinality"]) == (4, 2, 729)
    assert doc["q"] == "3^6"
    assert doc["min_distance"] == 2


def test_code_build_order_mismatch_is_400(client):
    resp = client.post("/code/build", json={
        "prime": 3, "theta": 2, "n": 3,
        "generator": {"coeffs": [{"a": 2, "b": 0, "c": 0},
                                  {"a": 1, "b": 0, "c": 0}]}})
    assert resp.status_code == 400
    assert resp.json()["error"] == "OrderMismatch"


def test_code_shift(client):
    resp = client.post("/code/shift", json={
        "prime": 3, "theta": 2,
        "codeword": [{"a": 1, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0},
                     {"a": 1, "b": 0, "c": 0}, {"a": 0, "b": 0, "c": 0}]})
    assert resp.json()["result"] == [
        {"a": 0, "b": 0, "c": 0}, {"a": 1, "b": 0, "c": 0},
        {"a": 0, "b": 0, "c": 0}, {"a": 1, "b": 0, "c": 0}]


def test_theta_out_of_range_is_422(client):
    resp = client.post("/poly/mul", json={
        "prime": 3, "theta": 9,
        "f": {"coeffs": []}, "g": {"coeffs": []}})
    assert resp.status_code == 422
