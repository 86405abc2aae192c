from fastapi.testclient import TestClient

from cylknot.service import app

from conftest import KNOWN_NONSLICE_WORD, TREFOIL

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_invariant_endpoint():
    response = client.post("/invariant", json={"gauss_code": TREFOIL})
    assert response.status_code == 200
    body = response.json()
    assert body["word"] == "a a a a a a"
    assert body["trivial"] is True
    assert body["verdict"] == "inconclusive"
    assert body["canonical_pair"] == ["", ""]


def test_invariant_endpoint_ref_out_of_range():
    response = client.post("/invariant", json={"gauss_code": TREFOIL, "ref": 99})
    assert response.status_code == 400
    assert "IndexOutOfRange" in response.json()["detail"]


def test_invariant_endpoint_bad_code():
    response = client.post("/invariant", json={"gauss_code": "O1+U2+O1+"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert "UnmatchedChord(2)" in detail
    assert "DuplicatePassage(1)" in detail


def test_reduce_endpoint():
    response = client.post("/reduce", json={"word": KNOWN_NONSLICE_WORD})
    assert response.status_code == 200
    body = response.json()
    assert body["normal_form"] == "S(4,4)"
    assert body["z2"] == {"raw": [4, 4], "basis": [2, 2]}
    assert body["verdict"] == "not_slice"


def test_reduce_endpoint_bad_letter():
    response = client.post("/reduce", json={"word": "b q"})
    assert response.status_code == 400
    assert "BadLetter" in response.json()["detail"]


def test_equal_endpoint():
    response = client.post("/equal", json={"word1": "a b", "word2": "b'^-1 a"})
    assert response.status_code == 200
    assert response.json()["equal"] is True


def test_orbit_endpoint():
    response = client.post(
        "/orbit", json={"code1": TREFOIL, "code2": "O1+U2+U1+O2+"}
    )
    assert response.status_code == 200
    assert response.json()["equal"] is True


def test_fuzz_endpoint():
    response = client.post(
        "/fuzz", json={"trials": 20, "max_chords": 6, "steps": 8, "seed": 3}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert len(body["records"]) == 20
    assert body["records"][0]["trial"] == 0
    assert all(r["pass"] for r in body["records"])


def test_fuzz_endpoint_rejects_oversized_request():
    response = client.post("/fuzz", json={"trials": 10**9})
    assert response.status_code == 422


def test_selfcheck_endpoint():
    response = client.get("/selfcheck")
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert {c["name"] for c in body["checks"]} >= {
        "relators",
        "model_derivation",
        "oracle_agreement",
    }
