"""Curves blended from rational toric Bernstein bases, plus the classical
and rational Bezier constructions used as fitting baselines."""

from dataclasses import dataclass

import numpy as np

from .basis import (
    NodeSet,
    bernstein_equivalent_nodeset,
    rational_basis_matrix,
    validate_weights,
)


def as_control_polygon(points) -> np.ndarray:
    """Validate an ordered list of 2D or 3D points as an (m, d) array."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim != 2 or arr.shape[0] < 2:
        raise ValueError("control polygon needs at least two points")
    if arr.shape[1] not in (2, 3):
        raise ValueError("points must live in R^2 or R^3")
    if not np.all(np.isfinite(arr)):
        raise ValueError("control points must be finite")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class GTBezierCurve:
    """A rational-basis curve: sum of control points times basis values.

    Control point count, node count, and weight count must all agree.
    """

    nodeset: NodeSet
    weights: np.ndarray
    control: np.ndarray

    def __post_init__(self):
        w = validate_weights(self.nodeset, self.weights)
        ctrl = as_control_polygon(self.control)
        if ctrl.shape[0] != self.nodeset.size:
            raise ValueError("control point count must match node count")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "control", ctrl)

    @property
    def dim(self) -> int:
        return self.control.shape[1]


def curve_points(curve: GTBezierCurve, ts) -> np.ndarray:
    """Curve points at each parameter, as an (m, d) array."""
    return rational_basis_matrix(curve.nodeset, curve.weights, ts) @ curve.control


def eval_curve(curve: GTBezierCurve, t: float) -> np.ndarray:
    """Point on the curve at t: a convex combination of the control points."""
    return curve_points(curve, [t])[0]


def sample_polyline(curve: GTBezierCurve, count: int) -> np.ndarray:
    """Evaluate at count uniformly spaced parameters, endpoints included."""
    if count < 2:
        raise ValueError("polyline needs at least two samples")
    a0, an = curve.nodeset.domain
    return curve_points(curve, np.linspace(a0, an, count))


def classical_bezier(control) -> GTBezierCurve:
    """Degree-(m-1) Bezier curve as a node-set curve on 0..m-1 with unit
    weights; evaluating at t = n*x reproduces the classical curve at x."""
    ctrl = as_control_polygon(control)
    n = ctrl.shape[0] - 1
    return GTBezierCurve(bernstein_equivalent_nodeset(n), np.ones(n + 1), ctrl)


def rational_bezier(control, weights) -> GTBezierCurve:
    """Rational Bezier baseline: Bernstein-equivalent nodes, given weights."""
    ctrl = as_control_polygon(control)
    return GTBezierCurve(bernstein_equivalent_nodeset(ctrl.shape[0] - 1), weights, ctrl)
