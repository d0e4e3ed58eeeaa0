import json

import pytest

from strongcompat import io
from strongcompat.algebra import cyclic_group
from strongcompat.errors import InvalidParameter
from strongcompat.pipeline import corollary20_pipeline, example10_pipeline, example12_pipeline, revalidate


@pytest.mark.parametrize("n, vertices", [(1, 8), (2, 26), (3, 80)])
def test_corollary20_certificates(n, vertices, tmp_path):
    cert = corollary20_pipeline(n)
    assert cert.status == "certified", [c for c in cert.checks if not c.passed]
    assert cert.results["vertices"] == vertices and cert.results["chi_upper"] == n + 1
    path = cert.write(tmp_path)
    assert all(c.passed for c in revalidate(path))
    data = io.load_json(path)
    assert data["status"] == "certified"
    assert io.load_dimacs(tmp_path / data["artifacts"]["graph"]).vertex_count == vertices


def test_certificates_are_byte_stable(tmp_path):
    a = corollary20_pipeline(2).write(tmp_path / "a")
    b = corollary20_pipeline(2).write(tmp_path / "b")
    assert a.read_bytes() == b.read_bytes()


def test_corollary20_with_tiny_budget_is_partial():
    cert = corollary20_pipeline(4, budget_ms=1)
    assert cert.status == "partial"
    assert cert.results["chi_lower"] <= 5 <= cert.results["chi_upper"]


def test_tampered_coloring_fails_revalidation(tmp_path):
    path = corollary20_pipeline(2).write(tmp_path)
    data = io.load_json(path)
    (tmp_path / data["artifacts"]["coloring"]).write_text(json.dumps([1] * 26))
    checks = {c.name: c.passed for c in revalidate(path)}
    assert not checks["coloring_proper"]


def test_example10_certificate():
    cert = example10_pipeline(cyclic_group(3), 5)
    assert cert.status == "certified"
    assert cert.results["chi"] == cert.results["expected"] == [1, 2, 3, 3, 3]


@pytest.mark.parametrize("r, n", [(4, 3), (4, 4)])
def test_example12_certificate(r, n, tmp_path):
    cert = example12_pipeline(r, n)
    assert cert.status == "certified", [c for c in cert.checks if not c.passed]
    path = cert.write(tmp_path)
    assert all(c.passed for c in revalidate(path))


def test_example12_cap_gives_partial_certificate():
    cert = example12_pipeline(4, 4, cap=10)
    assert cert.status == "partial"
    assert cert.results["cap_reached_at"] == 11
    assert {c.name for c in cert.checks} == {"chain_valid", "chain_length"}


def test_pipeline_parameter_validation():
    with pytest.raises(InvalidParameter):
        corollary20_pipeline(0)
    with pytest.raises(InvalidParameter):
        example10_pipeline(cyclic_group(2), 0)
    with pytest.raises(InvalidParameter):
        example12_pipeline(5, 4)
