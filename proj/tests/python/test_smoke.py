"""End-to-end smoke checks of the python bindings."""

import math

import smirnovlab as sl


def test_operator_on_monomial():
    # (1 + a z) p' - n a p on z^3 collapses to 3 z^2 for every a
    out = sl.smirnov_modified([0, 0, 0, 1], 0.25 + 0.5j, 3)
    assert len(out) == 3
    assert abs(out[0]) < 1e-14
    assert abs(out[1]) < 1e-14
    assert abs(out[2] - 3) < 1e-14


def test_composite_transform_worked_instance():
    # p = z^2 at (R, alpha, beta, a) = (2, 0.3, 0.7, 0.4): T[p] = 10.13 z
    out = sl.composite_transform([0, 0, 1], 2, 2.0, 0.3, 0.7, 0.4)
    assert abs(out[1] - 10.13) < 1e-12
    assert abs(out[0]) < 1e-12

    rep = sl.check_pointwise("M1", [0, 0, 1], 1.0 + 0j, R=2.0, alpha=0.3, beta=0.7, a=0.4)
    assert abs(rep["lhs"] - 10.13) < 1e-10
    assert abs(rep["rhs"] - 10.13) < 1e-10
    assert rep["margin"] >= -1e-10
    assert rep["hypothesis_ok"]


def test_roots_and_circle_max():
    roots = sorted(sl.find_roots([1, 0, 1]), key=lambda z: z.imag)
    assert abs(roots[0] + 1j) < 1e-12
    assert abs(roots[1] - 1j) < 1e-12

    lo, hi, theta = sl.max_modulus_on_circle([1, 0, 0, 1], 1.0, 1e-9)
    assert lo <= 2.0 <= hi
    assert hi - lo <= 1e-8
    assert 0 <= theta < 2 * math.pi


def test_certify_and_generate():
    coeffs = sl.generate(4, "outside", seed=11)
    assert len(coeffs) == 5
    assert coeffs == sl.generate(4, "outside", seed=11)

    rep = sl.certify_on_circle("M5", coeffs, 1.0, R=1.5, alpha=0.2, beta=0.3, a=0.1)
    assert rep["hypothesis_ok"]
    assert rep["relative_margin"] >= -1e-9
    assert rep["ineq"] == "M5"


def test_inequality_catalog_and_search():
    ids = sl.inequality_ids()
    assert "M1" in ids and "DOM-B" in ids and len(ids) == 28

    res = sl.violation_search("C1", budget=40, seed=3)
    assert res["evaluations"] == 40
    assert res["best_margin"] >= -1e-6
