"""Toric Bernstein basis functions on arbitrary real node sets.

A node set is a non-decreasing sequence of real numbers a_0 <= ... <= a_n
(a_0 < a_n) carrying one positive coefficient per node and a positive scale
l. The basis function attached to node a_i is

    beta_i(t) = c_i * h0(t)**h0(a_i) * h1(t)**h1(a_i)

with h0(t) = l*(t - a_0) and h1(t) = l*(a_n - t). Exponents are real, so
all interior evaluation happens in the log domain; the endpoint cases use
the convention 0**0 == 1, which makes exactly the matching endpoint basis
function survive at t = a_0 and t = a_n.
"""

import math
from dataclasses import dataclass

import numpy as np


def _as_float_vector(values, name):
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a one-dimensional sequence")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must contain only finite values")
    return arr


@dataclass(frozen=True)
class NodeSet:
    """Sorted real nodes with per-node coefficients and a positive scale."""

    nodes: np.ndarray
    coefficients: np.ndarray
    scale: float

    def __post_init__(self):
        nodes = _as_float_vector(self.nodes, "nodes")
        if nodes.size < 2:
            raise ValueError("need at least two nodes")
        if np.any(np.diff(nodes) < 0):
            raise ValueError("nodes must be non-decreasing")
        if nodes[0] == nodes[-1]:
            raise ValueError("degenerate node range: first and last node coincide")
        coeffs = _as_float_vector(self.coefficients, "coefficients")
        if coeffs.shape != nodes.shape:
            raise ValueError("coefficients must match nodes in length")
        if np.any(coeffs <= 0):
            raise ValueError("coefficients must all be positive")
        scale = float(self.scale)
        if not math.isfinite(scale) or scale <= 0:
            raise ValueError("scale must be positive")
        nodes = nodes.copy()
        coeffs = coeffs.copy()
        nodes.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "scale", scale)

    @property
    def size(self) -> int:
        """Number of nodes, n + 1."""
        return self.nodes.size

    @property
    def domain(self) -> tuple[float, float]:
        """The parameter interval [a_0, a_n]."""
        return float(self.nodes[0]), float(self.nodes[-1])


def validate_node_set(nodes, coefficients=None, scale=1.0) -> NodeSet:
    """Validate raw node data and return an immutable NodeSet.

    Coefficients default to 1 for every node when not supplied. Invalid
    input raises ValueError; nothing is silently repaired.
    """
    nodes = _as_float_vector(nodes, "nodes")
    if coefficients is None:
        coefficients = np.ones_like(nodes)
    return NodeSet(nodes, coefficients, scale)


def validate_weights(ns: NodeSet, weights=None) -> np.ndarray:
    """Check a weight vector against its node set (positive, matching length)."""
    if weights is None:
        w = np.ones(ns.size)
    else:
        w = _as_float_vector(weights, "weights")
        if w.size != ns.size:
            raise ValueError("weights must match nodes in length")
        if np.any(w <= 0):
            raise ValueError("weights must all be positive")
        w = w.copy()
    w.setflags(write=False)
    return w


def _check_domain(ns: NodeSet, ts: np.ndarray):
    a0, an = ns.domain
    if np.any(ts < a0) or np.any(ts > an):
        raise ValueError(f"parameter out of domain [{a0}, {an}]")


def log_basis_matrix(ns: NodeSet, ts) -> np.ndarray:
    """Log of every basis function at every parameter.

    Returns an (m, n+1) array with entry (i, j) = log beta_j(t_i), where
    -inf marks an exactly-zero basis value. A zero exponent contributes
    log 1 = 0 regardless of its base (the 0**0 == 1 endpoint convention),
    so endpoint rows come out exact.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    _check_domain(ns, ts)
    a0, an = ns.domain
    h0 = ns.scale * (ts - a0)
    h1 = ns.scale * (an - ts)
    e0 = ns.scale * (ns.nodes - a0)
    e1 = ns.scale * (an - ns.nodes)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_h0 = np.log(h0)[:, None]
        log_h1 = np.log(h1)[:, None]
        term0 = np.where(e0[None, :] == 0.0, 0.0, e0[None, :] * log_h0)
        term1 = np.where(e1[None, :] == 0.0, 0.0, e1[None, :] * log_h1)
    return np.log(ns.coefficients)[None, :] + term0 + term1


def eval_gt_basis(ns: NodeSet, i: int, t: float) -> float:
    """Raw (unnormalized) value of the i-th basis function at t."""
    if not 0 <= i < ns.size:
        raise IndexError(f"basis index {i} out of range 0..{ns.size - 1}")
    return float(np.exp(log_basis_matrix(ns, t)[0, i]))


def rational_basis_matrix(ns: NodeSet, weights: np.ndarray, ts) -> np.ndarray:
    """Weight-normalized basis values at each parameter; rows sum to one.

    Stabilized softmax: the largest log term of each row is subtracted
    before exponentiation, so huge exponents (large scale times node range)
    never overflow.
    """
    logits = log_basis_matrix(ns, ts) + np.log(weights)[None, :]
    top = np.max(logits, axis=1, keepdims=True)
    raw = np.exp(logits - top)
    denom = raw.sum(axis=1, keepdims=True)
    if not np.all(np.isfinite(denom)) or np.any(denom == 0.0):
        raise ArithmeticError("zero denominator in rational basis; underflow bug")
    return raw / denom


@dataclass(frozen=True)
class BasisValues:
    """Basis values at one parameter; normalized means they sum to one."""

    values: np.ndarray
    parameter: float
    normalized: bool


def eval_rational_basis(ns: NodeSet, weights, t: float) -> BasisValues:
    """All rational basis values at t: non-negative and summing to one."""
    w = validate_weights(ns, weights)
    row = rational_basis_matrix(ns, w, [t])[0]
    return BasisValues(row, float(t), True)


def bernstein_reference(n: int, i: int, x: float) -> float:
    """Classical Bernstein polynomial B_i^n(x); used as a test oracle."""
    if not 0 <= i <= n:
        raise IndexError(f"index {i} out of range 0..{n}")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    return float(math.comb(n, i) * x**i * (1.0 - x) ** (n - i))


def bernstein_equivalent_nodeset(n: int) -> NodeSet:
    """Node set on 0..n that reproduces the degree-n Bernstein basis.

    With nodes a_i = i, coefficients C(n, i)/n**n, and scale 1, the raw
    basis satisfies beta_i(n*x) == B_i^n(x) for x in [0, 1].
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    nodes = np.arange(n + 1, dtype=float)
    coeffs = np.array([math.comb(n, i) for i in range(n + 1)], dtype=float)
    return NodeSet(nodes, coeffs / float(n) ** n, 1.0)
