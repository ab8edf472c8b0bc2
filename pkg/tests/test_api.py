"""
Tests for the HTTP API.
"""

import pytest
from fastapi.testclient import TestClient

from momentcone.api.server import app


@pytest.fixture
def client():
    """Test client for the app."""
    return TestClient(app)


@pytest.fixture
def line_request():
    """A_{1,2} on {-1, 0, 1} with s = delta_{-1} + delta_1."""
    return {
        "system": {"kind": "affine-monomial", "n": 1, "d": 2},
        "ground": {"points": [[-1], [0], [1]]},
        "sequence": {"values": [2, 0, 2]},
    }


class TestAPIServer:
    """Test cases for the API endpoints."""

    def test_health_check(self, client):
        """Test the health endpoint."""
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "healthy"}

    def test_moments(self, client):
        """Test moments of an exact measure."""
        response = client.post(
            "/moments",
            json={
                "system": {"n": 1, "d": 2},
                "measure": {"atoms": [{"mass": 1, "point": [0]}, {"mass": 1, "point": [-2]}]},
            },
        )
        assert response.status_code == 200
        assert response.json() == {"values": ["2", "-2", "4"]}

    def test_reduce(self, client):
        """Test five atoms shrink to at most three."""
        atoms = [{"mass": 1, "point": [v]} for v in range(5)]
        response = client.post("/reduce", json={"system": {"n": 1, "d": 2}, "measure": {"atoms": atoms}})
        assert response.status_code == 200
        assert len(response.json()["atoms"]) <= 3

    def test_membership(self, client, line_request):
        """Test a member with its measure."""
        response = client.post("/membership", json=line_request)
        assert response.status_code == 200
        data = response.json()
        assert data["verdict"] == "member"
        assert sorted(a["point"][0] for a in data["measure"]["atoms"]) == ["-1", "1"]

    def test_non_member(self, client, line_request):
        """Test a separator comes back."""
        line_request["sequence"] = {"values": [1, 0, -1]}
        data = client.post("/membership", json=line_request).json()
        assert data["verdict"] == "non-member"
        assert data["separator"]

    def test_faces(self, client, line_request):
        """Test the face report."""
        data = client.post("/faces", json=line_request).json()
        assert data["atoms"] == [["-1"], ["1"]]
        assert data["zeros"] == [["-1"], ["1"]]
        assert data["face_dimension"] == 2
        assert data["gamma_basis"] == [["1", "0", "-1"]]

    def test_maxmass(self, client):
        """Test the piecewise catalog instance."""
        response = client.post(
            "/maxmass",
            json={
                "system": {"kind": "catalog", "name": "kappa"},
                "ground": {"points": [[-2], [0], [1]]},
                "sequence": {"values": [2, -2, 0]},
                "point": [-2],
            },
        )
        assert response.status_code == 200
        data = response.json()
        assert data["rho"] == data["kappa"] == "1"
        assert data["outside_atoms"] and data["outside_zeros"]

    def test_table2(self, client):
        """Test one grid cell."""
        data = client.get("/table2", params={"n": 3, "d": 4}).json()
        assert data["rank"] == 63
        assert data["w"] == "21/55"
        assert data["z"] == "63/64"

    def test_na(self, client):
        """Test the formula with a sampled witness."""
        data = client.get("/na", params={"n": 2, "d": 2, "estimate": True, "seed": 1}).json()
        assert data["formula"] == 3
        assert data["estimate"] == 3
        assert len(data["witness"]["atoms"]) == 3

    def test_bounds(self, client):
        """Test bounds on the cube."""
        data = client.get("/bounds", params={"n": 10, "d": 2, "space": "cube"}).json()
        assert data["lower"] == 56
        assert data["upper"] == 65
        assert all(entry["source"] for entry in data["entries"])


class TestAPIErrors:
    """Test cases for error responses."""

    def test_domain_error(self, client, line_request):
        """Test a wrong-length sequence is a 422 with the error code."""
        line_request["sequence"] = {"values": [1, 2]}
        response = client.post("/membership", json=line_request)
        assert response.status_code == 422
        assert response.json()["error"] == "invalid_argument"

    def test_budget_error(self, client):
        """Test oversized grids are a 413."""
        response = client.get("/table2", params={"n": 10, "d": 2, "budget": 100})
        assert response.status_code == 413
        assert response.json()["error"] == "budget_exceeded"

    def test_validation_error(self, client):
        """Test malformed bodies are rejected by validation."""
        response = client.post("/moments", json={"system": {"n": 1, "d": 2}})
        assert response.status_code == 422


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
