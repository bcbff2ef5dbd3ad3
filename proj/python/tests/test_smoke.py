import json
from fractions import Fraction

import pytest

import tdpair

REFERENCE = {
    "ell": [1], "theta0": "0", "theta0_star": "0", "h": "1", "h_star": "1",
    "omega": "0", "omega_star": "0", "a": ["1"],
}


def matmul(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


@pytest.fixture
def reference():
    return tdpair.Parameters.from_json(json.dumps(REFERENCE))


def test_reference_tables(reference):
    assert tdpair.overlap_T(reference) == [[1, 3], [1, 4]]
    assert tdpair.overlap_U(reference, "linear_solve") == [[4, -1], [-3, 1]]


def test_validate_names_failed_clause():
    bad = tdpair.Parameters.from_json(json.dumps(dict(REFERENCE, h="0")))
    report = tdpair.validate(bad)
    assert not report.passed
    assert [c["check"] for c in report.checks if c["status"] == "FAIL"] == ["cond1"]


def test_suite_passes_on_random_draws():
    for shape in ([2], [1, 1], [2, 1]):
        p = tdpair.random_parameters(shape, seed=5)
        report = tdpair.run_suite(p)
        assert report.passed, report.to_text()


def test_beta_override_detected():
    p = tdpair.random_parameters([2], seed=1)
    report = tdpair.run_suite(p, checks=["td_relations"], beta="3")
    assert not report.passed


def test_routes_agree_and_biorthogonal():
    p = tdpair.random_parameters([1, 1], seed=2)
    T = tdpair.overlap_T(p)
    for m in ("matrix_product", "shift_operator"):
        assert tdpair.overlap_T(p, m) == T
    U = tdpair.overlap_U(p)
    for m in ("shift_operator", "linear_solve"):
        assert tdpair.overlap_U(p, m) == U
    Ut = [list(col) for col in zip(*U)]
    assert matmul(T, Ut) == identity(p.dimension)


def test_change_of_basis_inverse_and_eigenbasis():
    p = tdpair.random_parameters([2, 1], seed=3)
    C = tdpair.build_operator(p, "C")
    Cbar = tdpair.build_operator(p, "Cbar")
    assert matmul(C, Cbar) == identity(p.dimension)
    diag = tdpair.build_operator(p, "A", basis="eigA")
    assert all(diag[i][j] == 0 for i in range(p.dimension) for j in range(p.dimension) if i != j)


def test_basis_and_profile():
    p = tdpair.random_parameters([2, 1], seed=4)
    basis = p.basis()
    assert len(basis) == 6 and basis[0] == [0, 0]
    levels = [sum(n) for n in basis]
    assert levels == sorted(levels)
    assert tdpair.shape_profile([2, 1]) == [levels.count(k) for k in range(4)]


def test_errors_map_to_exceptions():
    with pytest.raises(tdpair.ParseError):
        tdpair.Parameters.from_json("{")
    with pytest.raises(tdpair.Error):
        tdpair.build_operator(tdpair.random_parameters([1], seed=1), "C", basis="eigA")
