import pytest

from app import app


@pytest.fixture
def client():
    app.config["TESTING"] = True
    with app.test_client() as client:
        yield client


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.get_json()["status"] == "healthy"


def test_verbs_listing(client):
    verbs = client.get("/api/verbs").get_json()
    assert "eq" in verbs
    assert verbs == sorted(verbs)


def test_eq_answers_like_the_cli(client):
    response = client.post("/api/eq", json={"words": ["A:n=2: s1 s2 s1", "A:n=2: s2 s1 s2"]})
    assert response.status_code == 200
    assert response.get_json()["result"] is True


def test_false_predicates_are_still_ok(client):
    response = client.post("/api/member", json={"words": ["B:n=2: t"]})
    assert response.status_code == 200
    assert response.get_json()["result"] == {"affine": False, "t_sum": 1}


def test_options_are_passed_through(client):
    response = client.post("/api/map", json={"words": ["AT:n=2: a3"], "options": {"m": "beta", "n": 2}})
    assert response.get_json()["result"] == "A:n=2: s2^-1 s1 s2"


def test_parse_error_is_400(client):
    response = client.post("/api/eq", json={"words": ["A:n=2: s9", "A:n=2:"]})
    assert response.status_code == 400
    assert response.get_json()["kind"] != "budget"


def test_budget_error_is_422(client):
    response = client.post("/api/bracket", json={"words": ["A:n=2: s1"], "budgets": {"max_strands": 2}})
    assert response.status_code == 422
    assert response.get_json()["kind"] == "budget"


@pytest.mark.parametrize("body", [
    {"words": "A:n=2: s1"},
    {"words": ["A:n=2: s1"], "budgets": {"max_cpu": 3}},
    {"words": []},
])
def test_malformed_bodies_are_400(client, body):
    assert client.post("/api/bracket", json=body).status_code == 400


def test_unknown_verb_is_404(client):
    assert client.post("/api/frobnicate", json={"words": []}).status_code == 404
