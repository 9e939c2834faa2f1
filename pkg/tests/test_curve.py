"""Tests for curve evaluation and the Bezier baselines."""

import numpy as np
import pytest

from gtbezier import (
    GTBezierCurve,
    bernstein_reference,
    classical_bezier,
    curve_points,
    eval_curve,
    rational_bezier,
    sample_polyline,
    validate_node_set,
)
from gtbezier import datasets


def _convex_hull(points):
    """Monotone-chain hull, counterclockwise."""
    pts = sorted(map(tuple, points))
    if len(pts) <= 2:
        return pts

    def half(iterable):
        out = []
        for p in iterable:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) > 0:
                    break
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def _in_hull(point, hull, tol=1e-9):
    for (ax, ay), (bx, by) in zip(hull, hull[1:] + hull[:1]):
        if (bx - ax) * (point[1] - ay) - (by - ay) * (point[0] - ax) < -tol:
            return False
    return True


def _linear_curve():
    ns = validate_node_set([0, 1])
    return GTBezierCurve(ns, np.ones(2), np.array([[0.0, 0.0], [1.0, 1.0]]))


def _circle_curve():
    prob = datasets.circle_problem()
    return GTBezierCurve(prob.nodeset, prob.weights, prob.data)


def test_linear_midpoint():
    np.testing.assert_allclose(eval_curve(_linear_curve(), 0.5), [0.5, 0.5], atol=1e-15)


def test_endpoint_interpolation_exact():
    for curve in (_linear_curve(), _circle_curve()):
        a0, an = curve.nodeset.domain
        np.testing.assert_array_equal(eval_curve(curve, a0), curve.control[0])
        np.testing.assert_array_equal(eval_curve(curve, an), curve.control[-1])


def test_sample_polyline_counts():
    curve = _linear_curve()
    np.testing.assert_array_equal(sample_polyline(curve, 2), [[0.0, 0.0], [1.0, 1.0]])
    np.testing.assert_allclose(
        sample_polyline(curve, 3), [[0.0, 0.0], [0.5, 0.5], [1.0, 1.0]], atol=1e-15
    )
    with pytest.raises(ValueError, match="two samples"):
        sample_polyline(curve, 1)


def test_polyline_stays_in_control_hull():
    curve = _circle_curve()
    hull = _convex_hull(curve.control)
    for p in sample_polyline(curve, 101):
        assert _in_hull(p, hull)


def test_construction_errors():
    ns = validate_node_set([0, 1, 2])
    with pytest.raises(ValueError, match="match node count"):
        GTBezierCurve(ns, np.ones(3), np.array([[0.0, 0.0], [1.0, 1.0]]))
    with pytest.raises(ValueError, match="R\\^2 or R\\^3"):
        GTBezierCurve(ns, np.ones(3), np.ones((3, 4)))
    with pytest.raises(ValueError, match="at least two"):
        GTBezierCurve(ns, np.ones(3), np.ones((1, 2)))
    with pytest.raises(ValueError, match="finite"):
        GTBezierCurve(ns, np.ones(3), np.array([[0, 0], [1, np.inf], [2, 0]]))


def test_classical_bezier_line_segment():
    curve = classical_bezier([[0.0, 0.0], [1.0, 0.0]])
    np.testing.assert_allclose(eval_curve(curve, 0.5), [0.5, 0.0], atol=1e-15)


def test_classical_bezier_quadratic_midpoint():
    # de Casteljau midpoint of [(0,0), (1,2), (2,0)] is (1, 1); x=0.5 -> t=1
    curve = classical_bezier([[0.0, 0.0], [1.0, 2.0], [2.0, 0.0]])
    np.testing.assert_allclose(eval_curve(curve, 1.0), [1.0, 1.0], atol=1e-14)


def _de_casteljau(control, x):
    b = np.array(control, dtype=float)
    while b.shape[0] > 1:
        b = (1.0 - x) * b[:-1] + x * b[1:]
    return b[0]


def test_classical_bezier_matches_de_casteljau():
    rng = np.random.default_rng(19)
    control = rng.normal(size=(5, 2))
    curve = classical_bezier(control)
    for x in np.linspace(0.0, 1.0, 100):
        np.testing.assert_allclose(eval_curve(curve, 4 * x), _de_casteljau(control, x), atol=1e-12)


def test_classical_bezier_matches_bernstein_sum():
    rng = np.random.default_rng(20)
    control = rng.normal(size=(5, 3))
    curve = classical_bezier(control)
    xs = np.linspace(0.0, 1.0, 100)
    got = curve_points(curve, 4 * xs)
    oracle = np.array(
        [sum(bernstein_reference(4, i, x) * control[i] for i in range(5)) for x in xs]
    )
    assert np.max(np.abs(got - oracle)) < 1e-12


def test_rational_bezier_unit_weights_is_classical():
    rng = np.random.default_rng(21)
    control = rng.normal(size=(4, 2))
    ts = np.linspace(0.0, 3.0, 50)
    np.testing.assert_allclose(
        curve_points(rational_bezier(control, np.ones(4)), ts),
        curve_points(classical_bezier(control), ts),
        atol=1e-14,
    )


def test_rational_bezier_matches_direct_formula():
    control = np.array([[0.0, 0.0], [1.0, 2.0], [2.0, 0.0]])
    weights = np.array([1.0, 2.0, 1.0])
    curve = rational_bezier(control, weights)
    for x in (0.25, 0.5, 0.75):
        b = np.array([bernstein_reference(2, i, x) for i in range(3)])
        oracle = (weights * b) @ control / (weights * b).sum()
        np.testing.assert_allclose(eval_curve(curve, 2 * x), oracle, atol=1e-14)
    # the x=0.5 point is pulled toward the middle control point
    mid_classical = _de_casteljau(control, 0.5)
    mid_rational = eval_curve(curve, 1.0)
    assert mid_rational[1] > mid_classical[1]


def test_rational_bezier_example_weights():
    curve = rational_bezier(datasets.circle_samples(), np.array(datasets.CIRCLE_WEIGHTS))
    assert curve.dim == 2
    with pytest.raises(ValueError, match="length"):
        rational_bezier(datasets.circle_samples(), np.ones(4))


def test_affine_invariance():
    rng = np.random.default_rng(22)
    curve = _circle_curve()
    a = rng.normal(size=(2, 2))
    b = rng.normal(size=2)
    mapped = GTBezierCurve(curve.nodeset, curve.weights, curve.control @ a.T + b)
    ts = np.linspace(*curve.nodeset.domain, 40)
    np.testing.assert_allclose(
        curve_points(curve, ts) @ a.T + b, curve_points(mapped, ts), atol=1e-10
    )


def test_eval_out_of_domain():
    with pytest.raises(ValueError, match="domain"):
        eval_curve(_linear_curve(), 2.0)
