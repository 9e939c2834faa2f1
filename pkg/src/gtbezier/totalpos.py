"""Total-positivity machinery: collocation matrices, power reduction,
generalized Vandermonde builders, and minor-enumeration TP checks.

A matrix is totally positive (TP) when every minor, of every order and
index selection, is non-negative; strictly totally positive (STP) when
every minor is positive. Verdicts here are numerical: a minor counts as
non-negative when it is >= -tol * scale, where scale is the product of
the Euclidean norms of the submatrix rows (a Hadamard-style bound), so
the tolerance tracks the wildly varying magnitude of the minors.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .basis import NodeSet, log_basis_matrix, rational_basis_matrix, validate_weights

# Exhaustive enumeration touches sum_k C(d,k)^2 minors; 8 keeps that instant.
EXHAUSTIVE_LIMIT = 8
DEFAULT_REL_TOL = 1e-9

BOUNDARY_CASES = ("interior", "left", "right", "both")


def _checked_params(ns: NodeSet, params, strict_interior=False) -> np.ndarray:
    p = np.asarray(params, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("params must be a non-empty one-dimensional sequence")
    if np.any(np.diff(p) <= 0):
        raise ValueError("params must be strictly increasing")
    a0, an = ns.domain
    if strict_interior:
        if p[0] <= a0 or p[-1] >= an:
            raise ValueError(f"params must lie strictly inside ({a0}, {an})")
    elif p[0] < a0 or p[-1] > an:
        raise ValueError(f"params out of domain [{a0}, {an}]")
    return p


def collocation_matrix(ns: NodeSet, params) -> np.ndarray:
    """Raw basis collocation matrix with entry (i, j) = beta_j(t_i)."""
    p = _checked_params(ns, params)
    return np.exp(log_basis_matrix(ns, p))


def rational_collocation_matrix(ns: NodeSet, weights, params) -> np.ndarray:
    """Collocation matrix of the rational basis; every row sums to one."""
    w = validate_weights(ns, weights)
    p = _checked_params(ns, params)
    return rational_basis_matrix(ns, w, p)


def power_reduction(ns: NodeSet, params, strict_interior=False) -> np.ndarray:
    """Power matrix that is TP exactly when the collocation matrix is.

    Entry (i, j) = x_i ** (l * k_j) with x_i = (t_i - a_0)/(a_n - t_i) and
    k_j = a_j - a_0; the collocation matrix differs from it only by positive
    row and column scalings. A parameter equal to an endpoint yields the
    exact 0/1 border row of the bordered variants.
    """
    p = _checked_params(ns, params, strict_interior)
    a0, an = ns.domain
    expo = ns.scale * (ns.nodes - a0)
    out = np.empty((p.size, ns.size))
    for r, t in enumerate(p):
        if t == a0:
            out[r] = (ns.nodes == a0).astype(float)
        elif t == an:
            out[r] = (ns.nodes == an).astype(float)
        else:
            x = (t - a0) / (an - t)
            out[r] = np.exp(expo * np.log(x))
    return out


@dataclass(frozen=True)
class GenVandermondeSpec:
    """Positive abscissas t, strictly increasing real exponents alpha, and
    one above-diagonal sign per column after the first.

    A sign of +1 requires t_i > t_{i-1}; a sign of -1 relaxes that to >=.
    """

    t: np.ndarray
    alpha: np.ndarray
    signs: np.ndarray | None = None

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        alpha = np.asarray(self.alpha, dtype=float)
        if t.ndim != 1 or t.size < 2 or alpha.shape != t.shape:
            raise ValueError("t and alpha must be matching vectors of length >= 2")
        if np.any(t <= 0):
            raise ValueError("all t values must be positive")
        if np.any(np.diff(alpha) <= 0):
            raise ValueError("alpha must be strictly increasing")
        signs = self.signs
        if signs is None:
            signs = np.ones(t.size - 1)
        signs = np.asarray(signs, dtype=float)
        if signs.shape != (t.size - 1,) or not np.all(np.isin(signs, (-1.0, 1.0))):
            raise ValueError("signs must be n values from {-1, +1}")
        dt = np.diff(t)
        if np.any(dt[signs == 1.0] <= 0) or np.any(dt[signs == -1.0] < 0):
            raise ValueError("t ordering violates the sign chain")
        for name, arr in (("t", t), ("alpha", alpha), ("signs", signs)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def generalized_vandermonde(spec: GenVandermondeSpec) -> np.ndarray:
    """Matrix with entry (i, j) = s_j * t_i**alpha_j above the diagonal and
    t_i**alpha_j on or below it; all signs +1 gives the plain power matrix."""
    powers = spec.t[:, None] ** spec.alpha[None, :]
    colsign = np.concatenate(([1.0], spec.signs))
    mat = powers.copy()
    above = np.triu_indices(spec.t.size, k=1)
    mat[above] = (powers * colsign[None, :])[above]
    return mat


def _checked_index(idx, bound, name) -> np.ndarray:
    arr = np.asarray(idx, dtype=np.intp)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} index set must be a non-empty sequence")
    if np.any(np.diff(arr) <= 0):
        raise ValueError(f"{name} index set must be strictly increasing")
    if arr[0] < 0 or arr[-1] >= bound:
        raise ValueError(f"{name} index set out of bounds")
    return arr


def _det_stack(subs: np.ndarray) -> np.ndarray:
    """Determinants of an (..., k, k) stack: closed-form expansion for
    k <= 3, LAPACK LU with partial pivoting above."""
    k = subs.shape[-1]
    if k == 1:
        return subs[..., 0, 0].copy()
    if k == 2:
        return subs[..., 0, 0] * subs[..., 1, 1] - subs[..., 0, 1] * subs[..., 1, 0]
    if k == 3:
        return (
            subs[..., 0, 0] * (subs[..., 1, 1] * subs[..., 2, 2] - subs[..., 1, 2] * subs[..., 2, 1])
            - subs[..., 0, 1] * (subs[..., 1, 0] * subs[..., 2, 2] - subs[..., 1, 2] * subs[..., 2, 0])
            + subs[..., 0, 2] * (subs[..., 1, 0] * subs[..., 2, 1] - subs[..., 1, 1] * subs[..., 2, 0])
        )
    return np.linalg.det(subs)


def minor_det(m, row_idx, col_idx) -> float:
    """Determinant of the submatrix on strictly increasing index sets."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    rows = _checked_index(row_idx, m.shape[0], "row")
    cols = _checked_index(col_idx, m.shape[1], "column")
    if rows.size != cols.size:
        raise ValueError("row and column index sets must have equal length")
    return float(_det_stack(m[np.ix_(rows, cols)]))


@lru_cache(maxsize=None)
def _combo_array(n: int, k: int) -> np.ndarray:
    return np.array(list(combinations(range(n), k)), dtype=np.intp)


@lru_cache(maxsize=None)
def _window_array(n: int, k: int) -> np.ndarray:
    starts = np.arange(n - k + 1, dtype=np.intp)
    return starts[:, None] + np.arange(k, dtype=np.intp)[None, :]


def _minor_batch(m, row_sets, col_sets):
    """All minors indexed by the cross product of row and column sets.

    Returns (dets, scales, rows, cols) flattened over the cross product;
    scales are the per-minor products of submatrix row norms.
    """
    subs = m[row_sets[:, None, :, None], col_sets[None, :, None, :]]
    nr, nc, k, _ = subs.shape
    subs = subs.reshape(nr * nc, k, k)
    dets = _det_stack(subs)
    scales = np.prod(np.linalg.norm(subs, axis=2), axis=1)
    rows = np.repeat(np.arange(nr), nc)
    cols = np.tile(np.arange(nc), nr)
    return dets, scales, row_sets[rows], col_sets[cols]


@dataclass(frozen=True)
class TpReport:
    """Verdict of a total-positivity check.

    witness records the minor with the smallest acceptance margin as
    (row indices, column indices, determinant value). The contiguous
    method certifies STP; its TP verdict is advisory (exhaustive
    enumeration is the TP certificate).
    """

    is_tp: bool
    is_stp: bool
    min_contiguous_minor: float
    witness: tuple | None
    method: str


def is_totally_positive(m, tol: float = DEFAULT_REL_TOL, method: str = "exhaustive") -> TpReport:
    """Check total positivity of a matrix by minor enumeration.

    method="exhaustive" enumerates every minor up to order min(rows, cols);
    only feasible for dimensions up to EXHAUSTIVE_LIMIT. method="contiguous"
    checks minors on consecutive row/column windows only. A minor passes as
    non-negative when det >= -tol*scale and counts as strictly positive when
    det > tol*scale, with scale the product of the submatrix row norms.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.size == 0:
        raise ValueError("matrix must be two-dimensional and non-empty")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    if method not in ("exhaustive", "contiguous"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exhaustive" and max(m.shape) > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"matrix of shape {m.shape} too large for exhaustive minor "
            f"enumeration (limit {EXHAUSTIVE_LIMIT}); use method='contiguous'"
        )

    all_ok = True
    all_strict = True
    min_contig = np.inf
    worst_margin = np.inf
    witness = None
    for k in range(1, min(m.shape) + 1):
        win_dets, _, _, _ = _minor_batch(m, _window_array(m.shape[0], k), _window_array(m.shape[1], k))
        min_contig = min(min_contig, float(win_dets.min()))
        if method == "exhaustive":
            rows, cols = _combo_array(m.shape[0], k), _combo_array(m.shape[1], k)
        else:
            rows, cols = _window_array(m.shape[0], k), _window_array(m.shape[1], k)
        dets, scales, rset, cset = _minor_batch(m, rows, cols)
        margins = dets + tol * scales
        all_ok = all_ok and bool(np.all(margins >= 0.0))
        all_strict = all_strict and bool(np.all(dets > tol * scales))
        i = int(np.argmin(margins))
        if margins[i] < worst_margin:
            worst_margin = float(margins[i])
            witness = (tuple(int(r) for r in rset[i]), tuple(int(c) for c in cset[i]), float(dets[i]))
    return TpReport(all_ok, all_strict, min_contig, witness, method)


@dataclass(frozen=True)
class NtpSuiteReport:
    """Aggregate outcome of the randomized NTP verification trials."""

    trials: int
    failures: int
    worst_minor: float
    worst_witness: tuple | None
    worst_case: str | None
    failed_trials: tuple

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _draw_params(rng, case: str, a0: float, an: float, eps: float, count: int) -> np.ndarray:
    """Strictly increasing parameter sequence for one boundary case."""
    fixed_low = case in ("left", "both")
    fixed_high = case in ("right", "both")
    free = count - int(fixed_low) - int(fixed_high)
    while True:
        inner = np.sort(rng.uniform(a0 + eps, an - eps, size=free))
        if free < 2 or np.all(np.diff(inner) > 0):
            break
    parts = []
    if fixed_low:
        parts.append([a0])
    parts.append(inner)
    if fixed_high:
        parts.append([an])
    return np.concatenate(parts)


def verify_ntp_suite(ns: NodeSet, weights, trials: int, seed: int = 0) -> NtpSuiteReport:
    """Randomized check that every rational collocation matrix is TP.

    Trials cycle through the four boundary cases (all-interior parameters,
    left endpoint touched, right endpoint touched, both touched), draw a
    strictly increasing parameter sequence, build the rational collocation
    matrix, and verify total positivity (exhaustively when the dimension
    allows, by contiguous windows otherwise). Deterministic for a fixed
    seed: each trial's RNG stream derives from (seed, trial index), so
    trials could run in any order or concurrently.
    """
    w = validate_weights(ns, weights)
    if trials < 1:
        raise ValueError("need at least one trial")
    a0, an = ns.domain
    eps = 1e-6 * (an - a0)
    method = "exhaustive" if ns.size <= EXHAUSTIVE_LIMIT else "contiguous"
    failures = 0
    failed = []
    worst = (np.inf, None, None)  # (witness det, witness, case)
    for trial in range(trials):
        case = BOUNDARY_CASES[trial % len(BOUNDARY_CASES)]
        rng = np.random.default_rng([seed, trial])
        params = _draw_params(rng, case, a0, an, eps, ns.size)
        report = is_totally_positive(rational_collocation_matrix(ns, w, params), method=method)
        if not report.is_tp:
            failures += 1
            failed.append((trial, case))
        if report.witness is not None and report.witness[2] < worst[0]:
            worst = (report.witness[2], report.witness, case)
    return NtpSuiteReport(
        trials=trials,
        failures=failures,
        worst_minor=worst[0],
        worst_witness=worst[1],
        worst_case=worst[2],
        failed_trials=tuple(failed),
    )
