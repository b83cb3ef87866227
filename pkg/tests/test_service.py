"""HTTP endpoint tests via the in-process test client."""

import json

import pytest
from fastapi.testclient import TestClient

from omegalang.service import app

V2 = "xxpzppzpyxpzzppzzpyy"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


# ---------------------------------------------------------------------------
# /check
# ---------------------------------------------------------------------------

def test_check_omega_member_reports_shape(client):
    r = client.post("/check", json={"language": "omega", "word": V2})
    assert r.status_code == 200
    body = r.json()
    assert body["member"] is True
    assert body["word_length"] == len(V2)
    assert body["height"] == 2
    assert body["z_count"] == 6


def test_check_omega_non_member_has_no_shape(client):
    r = client.post("/check", json={"language": "omega", "word": "xpzpy"})
    body = r.json()
    assert body == {
        "language": "omega",
        "word_length": 5,
        "member": False,
        "height": None,
        "z_count": None,
    }


@pytest.mark.parametrize(
    "language,word,member",
    [
        ("enw", "xpzppzpy", True),
        ("enw", "pzp", False),
        ("balanced", "pzppzp", True),
        ("balanced", "xpzpy", False),
        ("grammar-enw", "xpzppzzpy", True),
        ("grammar-balanced", "pzppzp", True),
        ("grammar-balanced", "xzy", False),
    ],
)
def test_check_all_languages(client, language, word, member):
    r = client.post("/check", json={"language": language, "word": word})
    assert r.status_code == 200
    assert r.json()["member"] is member


def test_check_invalid_letter_is_400_with_position(client):
    r = client.post("/check", json={"language": "enw", "word": "xpzqy"})
    assert r.status_code == 400
    assert "position 3" in r.json()["detail"]


def test_check_unknown_language_is_400(client):
    r = client.post("/check", json={"language": "nope", "word": "x"})
    assert r.status_code == 400
    assert "nope" in r.json()["detail"]


# ---------------------------------------------------------------------------
# /generate
# ---------------------------------------------------------------------------

def test_generate_default_builds_one_word(client):
    r = client.post("/generate", json={"z_count": 4})
    assert r.json() == {"z_count": 4, "count": 1, "words": ["xpzzppzzpy"]}


def test_generate_all_words_sorted(client):
    r = client.post("/generate", json={"z_count": 4, "all_words": True})
    assert r.json() == {
        "z_count": 4,
        "count": 2,
        "words": ["xpzzppzzpy", "xxpzppzpyxpzppzpyy"],
    }


def test_generate_enumeration_guard(client):
    r = client.post("/generate", json={"z_count": 48, "all_words": True})
    assert r.status_code == 400
    assert "exceed" in r.json()["detail"]


def test_generate_small_z_count_is_422(client):
    r = client.post("/generate", json={"z_count": 1})
    assert r.status_code == 422


# ---------------------------------------------------------------------------
# /count
# ---------------------------------------------------------------------------

def test_count_enw_leaves_matches_formula(client):
    r = client.post("/count", json={"kind": "enw-leaves", "value": 4})
    assert r.json() == {"kind": "enw-leaves", "value": 4, "enumerated": 80, "formula": 80}


def test_count_omega(client):
    r = client.post("/count", json={"kind": "omega", "value": 3})
    body = r.json()
    assert body["enumerated"] == 2
    assert body["formula"] is None


def test_count_bad_requests_are_400(client):
    assert client.post("/count", json={"kind": "enw-leaves", "value": 9}).status_code == 400
    assert client.post("/count", json={"kind": "nope", "value": 4}).status_code == 400


# ---------------------------------------------------------------------------
# /dissect
# ---------------------------------------------------------------------------

def test_dissect_builtin_pow2(client):
    r = client.post("/dissect", json={"builtin": "pow2", "ratio": "2", "cap": "2^41"})
    assert r.status_code == 200
    body = json.loads(r.content)
    assert body["alpha"] == 1
    assert body["g"] == 2
    assert body["cap"] == "2199023255552"
    assert body["in_count"] == 30
    assert body["out_count"] == 10
    assert body["samples_out"] == ["8", "128", "2048", "32768", "524288"]


def test_dissect_explicit_lengths(client):
    r = client.post("/dissect", json={"lengths": [4, 8, 16, 32], "ratio": "2", "cap": "32"})
    body = json.loads(r.content)
    assert (body["in_count"], body["out_count"]) == (3, 1)


def test_dissect_requires_exactly_one_source(client):
    both = {"builtin": "pow2", "lengths": [4, 8], "ratio": "2", "cap": "100"}
    neither = {"ratio": "2", "cap": "100"}
    assert client.post("/dissect", json=both).status_code == 400
    assert client.post("/dissect", json=neither).status_code == 400


def test_dissect_single_member_is_400(client):
    r = client.post("/dissect", json={"lengths": [5], "ratio": "2", "cap": "100"})
    assert r.status_code == 400
    assert "2 members" in r.json()["detail"]


def test_dissect_unknown_builtin_is_400(client):
    r = client.post("/dissect", json={"builtin": "pow7", "ratio": "2", "cap": "100"})
    assert r.status_code == 400
    assert "pow7" in r.json()["detail"]


def test_dissect_violated_growth_is_400(client):
    r = client.post("/dissect", json={"builtin": "pow3", "ratio": "2", "cap": "100"})
    assert r.status_code == 400
    assert "violated" in r.json()["detail"]


# ---------------------------------------------------------------------------
# /witness
# ---------------------------------------------------------------------------

def test_witness_found(client):
    r = client.post("/witness", json={"z_count": 4, "g": 1})
    assert r.json() == {
        "z_count": 4,
        "g": 1,
        "member": True,
        "word": "xxpzppzpyxpzppzpyy",
        "height": 2,
    }


def test_witness_absent(client):
    r = client.post("/witness", json={"z_count": 5, "g": 2})
    body = r.json()
    assert body["member"] is False
    assert body["word"] is None


def test_witness_validation(client):
    assert client.post("/witness", json={"z_count": 1, "g": 1}).status_code == 422
    assert client.post("/witness", json={"z_count": 4, "g": 0}).status_code == 422


# ---------------------------------------------------------------------------
# /grammars
# ---------------------------------------------------------------------------

def test_grammars_bnf(client):
    r = client.get("/grammars")
    body = r.json()
    assert [g["name"] for g in body] == ["enw", "balanced"]
    assert body[0]["bnf"] == "S -> x P P y\nP -> S | p z p | p z z p"
    assert body[1]["bnf"].startswith("S -> x S y | p Z V Z p\n")
