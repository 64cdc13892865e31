import pytest

from app.antiplex.fixtures import fixture_path

EXAMPLE_LINE = "L=[0,1,2,3] R=[4,5,6,7]"


@pytest.fixture
def example_text():
    with open(fixture_path("example_plex")) as f:
        return f.read()


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    data = response.get_json()
    assert data["status"] == "ok"
    assert data["version"]


def test_selftest(client):
    response = client.get("/api/health/selftest")
    assert response.status_code == 200
    data = response.get_json()
    assert data["status"] == "ok"
    assert data["results"] == 1


@pytest.mark.parametrize("algo", ["bape", "sanc", "sape"])
def test_enumerate_from_text(client, example_text, algo):
    response = client.post("/api/enumerate", json={"edges": example_text, "k": 2, "t": 4, "algo": algo})
    assert response.status_code == 200
    data = response.get_json()
    assert data["success"] is True
    assert data["results"] == [EXAMPLE_LINE]
    assert data["stats"]["algo"] == algo
    assert data["load"]["comments"] == 3


def test_enumerate_from_triples(client):
    edges = [[10, 11, 1], [12, 13, "+"], [10, 12, -1], [10, 13, -1], [11, 12, "-"], [11, 13, -1]]
    response = client.post("/api/enumerate", json={"edges": edges, "k": 1, "t": 2})
    assert response.status_code == 200
    assert response.get_json()["results"] == ["L=[10,11] R=[12,13]"]


def test_enumerate_count(client, example_text):
    response = client.post("/api/enumerate", json={"edges": example_text, "k": 2, "t": 4, "mode": "count"})
    data = response.get_json()
    assert data["count"] == 1
    assert "results" not in data


@pytest.mark.parametrize(
    "payload, message",
    [
        ({"edges": "0 1 1\n", "t": 1}, "k is required"),
        ({"edges": "0 1 1\n", "k": "two", "t": 1}, "must be integers"),
        ({"edges": "0 1 1\n", "k": 3, "t": 2}, "2k-1"),
        ({"k": 1, "t": 1}, "edges is required"),
        ({"edges": [[0, 1]], "k": 1, "t": 1}, "triples"),
        ({"edges": "0 1 x\n", "k": 1, "t": 1}, "line 1"),
        ({"edges": "0 1 1\n", "k": 1, "t": 1, "algo": "fast"}, "unknown value"),
        ({"edges": "0 1 1\n", "k": 1, "t": 1, "mode": "stream"}, "stream mode"),
        ({"edges": "0 1 1\n", "k": 1, "t": 1, "timeout": "soon"}, "timeout"),
        ({"edges": "0 1 1\n", "k": 1, "t": 1, "timeout": 0}, "timeout"),
    ],
)
def test_enumerate_rejects_bad_requests(client, payload, message):
    response = client.post("/api/enumerate", json=payload)
    assert response.status_code == 400
    data = response.get_json()
    assert data["success"] is False
    assert message in data["error"]


def test_oracle(client, example_text):
    response = client.post("/api/oracle", json={"edges": example_text, "k": 2, "t": 4})
    assert response.status_code == 200
    assert response.get_json()["results"] == [EXAMPLE_LINE]


def test_oracle_refuses_large_graph(client):
    text = "".join(f"{i} {i + 1} -1\n" for i in range(25))
    response = client.post("/api/oracle", json={"edges": text, "k": 1, "t": 1})
    assert response.status_code == 400
    assert "refuses" in response.get_json()["error"]


def test_cli_is_registered_on_app(app):
    assert "antiplex" in app.cli.commands
