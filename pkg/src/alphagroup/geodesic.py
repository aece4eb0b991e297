"""Discrete curve lengths and geodesic paths under a metric tensor.

Curves are polylines; each segment contributes the square root of the
squared line element taken at the segment midpoint with the finite
endpoint difference as displacement (midpoint rule, second-order
accurate in the segment count).

Geodesics between two points are found by direct length minimisation:
the interior points of an initially straight polyline are moved by
gradient descent with central finite-difference gradients and
backtracking step control.  Only the real (Riemannian) length is
optimised; the generalised length is reported for the final path but is
never an objective, since the four-component values carry no order.

Each solver job owns its polyline; the metric tensor is shared
read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import ZERO, AlphaNumber
from .errors import NegativeSquaredLengthError, NotRiemannianError, ParseError
from .metric import (Displacement4, MetricKind, MetricTensor, Point4, classify,
                     eval_ds2_grouped, riemannian_ds2)

LENGTH_MODES = ("riemannian", "alpha")

#: Consecutive points closer than this (max-norm) are treated as
#: coincident; a polyline may only contain them when it is one repeated
#: endpoint (a zero-length request).
_COINCIDENT_TOL = 1e-15


@dataclass(frozen=True)
class Polyline4:
    """An ordered run of points; endpoints stay fixed during optimisation."""

    points: tuple[Point4, ...]
    fixed_endpoints: bool = True

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a polyline needs at least two points")
        first = self.points[0]
        if all(p == first for p in self.points):
            return  # zero-length request: one repeated endpoint
        for a, b in zip(self.points, self.points[1:]):
            gap = max(abs(u - v) for u, v in zip(a.as_tuple(), b.as_tuple()))
            if gap <= _COINCIDENT_TOL:
                raise ValueError(f"consecutive points coincide at {a}")

    @classmethod
    def straight(cls, start: Point4, end: Point4, segments: int) -> "Polyline4":
        """The straight coordinate chord sampled at ``segments`` segments."""
        if segments < 1:
            raise ValueError("segments must be >= 1")
        a = np.asarray(start.as_tuple(), dtype=float)
        b = np.asarray(end.as_tuple(), dtype=float)
        interior = [Point4(*(a + (k / segments) * (b - a)))
                    for k in range(1, segments)]
        return cls((start, *interior, end))

    def segment_count(self) -> int:
        return len(self.points) - 1

    def reverse(self) -> "Polyline4":
        return Polyline4(tuple(reversed(self.points)), self.fixed_endpoints)


@dataclass(frozen=True)
class SolverOptions:
    max_iterations: int = 10_000
    gradient_step: float = 1e-5
    learning_rate: float = 0.1
    backtrack_factor: float = 0.5
    convergence_tol: float = 1e-10
    negative_tol: float = 1e-12


@dataclass(frozen=True)
class GeodesicResult:
    path: Polyline4
    length: AlphaNumber      # generalised length of the final path
    real_length: float
    iterations: int
    converged: bool


def _midpoint(a: Point4, b: Point4) -> Point4:
    return Point4(0.5 * (a.x + b.x), 0.5 * (a.y + b.y),
                  0.5 * (a.z + b.z), 0.5 * (a.t + b.t))


def _delta(a: Point4, b: Point4) -> Displacement4:
    return Displacement4(b.x - a.x, b.y - a.y, b.z - a.z, b.t - a.t)


def _segment_length(g: MetricTensor, a: Point4, b: Point4,
                    negative_tol: float) -> float:
    ds2 = riemannian_ds2(g, _midpoint(a, b), _delta(a, b))
    if ds2 < -negative_tol:
        raise NegativeSquaredLengthError(
            f"ds^2 = {ds2:g} at segment midpoint {_midpoint(a, b)}")
    return math.sqrt(max(ds2, 0.0))


def curve_length(g: MetricTensor, path: Polyline4, mode: str = "riemannian",
                 negative_tol: float = 1e-12):
    """Length of ``path`` under ``g``.

    ``riemannian`` mode sums real segment lengths and requires a
    nonnegative squared line element at every segment midpoint (values
    below ``-negative_tol`` raise, the rest clamp to zero).  ``alpha``
    mode sums the per-projection principal square roots of the grouped
    evaluation and returns an :class:`AlphaNumber`.
    """
    if mode not in LENGTH_MODES:
        raise ValueError(f"mode must be one of {LENGTH_MODES}, got {mode!r}")
    if mode == "riemannian":
        total = 0.0
        for a, b in zip(path.points, path.points[1:]):
            total += _segment_length(g, a, b, negative_tol)
        return total
    total = ZERO
    for a, b in zip(path.points, path.points[1:]):
        total = total + eval_ds2_grouped(g, _midpoint(a, b), _delta(a, b)).sqrt()
    return total


def find_geodesic(g: MetricTensor, start: Point4, end: Point4, segments: int,
                  options: SolverOptions | None = None) -> GeodesicResult:
    """Locally length-minimising polyline from ``start`` to ``end``.

    The metric must classify as the Riemannian or Euclidean pattern;
    general metrics are refused because their lengths are not real.
    On hitting the iteration cap the best path so far is still returned
    with ``converged`` false.
    """
    if segments < 1:
        raise ValueError("segments must be >= 1")
    opts = options or SolverOptions()

    label = classify(g)
    if label.kind is MetricKind.GENERAL_ALPHA:
        raise NotRiemannianError(
            "metric does not reduce to a real quadratic form "
            f"(offending components: {', '.join(label.offenders)})")

    if start == end:
        path = Polyline4.straight(start, end, segments)
        return GeodesicResult(path, ZERO, 0.0, 0, True)

    coords = np.array([p.as_tuple()
                       for p in Polyline4.straight(start, end, segments).points],
                      dtype=float)

    def seg_len(a: np.ndarray, b: np.ndarray) -> float:
        return _segment_length(g, Point4(*a), Point4(*b), opts.negative_tol)

    def total_length(arr: np.ndarray) -> float:
        return sum(seg_len(arr[k], arr[k + 1]) for k in range(len(arr) - 1))

    def gradient(arr: np.ndarray) -> np.ndarray:
        h = opts.gradient_step
        grad = np.zeros_like(arr)
        for i in range(1, len(arr) - 1):
            for j in range(4):
                saved = arr[i, j]
                arr[i, j] = saved + h
                plus = seg_len(arr[i - 1], arr[i]) + seg_len(arr[i], arr[i + 1])
                arr[i, j] = saved - h
                minus = seg_len(arr[i - 1], arr[i]) + seg_len(arr[i], arr[i + 1])
                arr[i, j] = saved
                grad[i, j] = (plus - minus) / (2.0 * h)
        return grad

    current = total_length(coords)
    rate = opts.learning_rate
    iterations = 0
    converged = False
    for _ in range(opts.max_iterations):
        grad = gradient(coords)
        accepted = False
        trial = rate
        while trial > 1e-18:
            candidate = coords.copy()
            candidate[1:-1] -= trial * grad[1:-1]
            try:
                cand_length = total_length(candidate)
            except NegativeSquaredLengthError:
                trial *= opts.backtrack_factor
                continue
            if cand_length < current:
                accepted = True
                break
            trial *= opts.backtrack_factor
        if not accepted:
            converged = True
            break
        # Grow the step back after backtracking so progress is not
        # throttled by one cautious iteration.
        rate = min(trial * 2.0, opts.learning_rate * 1e3)
        drop = current - cand_length
        coords = candidate
        previous, current = current, cand_length
        iterations += 1
        if drop < opts.convergence_tol * max(previous, 1e-300):
            converged = True
            break

    points = (start, *(Point4(*row) for row in coords[1:-1]), end)
    path = Polyline4(points)
    return GeodesicResult(path, curve_length(g, path, "alpha"), current,
                          iterations, converged)


# -- CSV interchange ---------------------------------------------------------

_CSV_HEADER = "x,y,z,t"


def path_to_csv(path: Polyline4) -> str:
    """Render a polyline as CSV with columns x, y, z, t."""
    lines = [_CSV_HEADER]
    for p in path.points:
        lines.append(",".join(format(v, ".17g") for v in p.as_tuple()))
    return "\n".join(lines) + "\n"


def path_from_csv(text: str) -> Polyline4:
    """Parse CSV produced by :func:`path_to_csv` (header optional)."""
    points: list[Point4] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if not points and line.replace(" ", "").lower() == _CSV_HEADER:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 4:
            raise ParseError(f"expected 4 comma-separated values, got {len(parts)}",
                             line=lineno)
        try:
            values = [float(p) for p in parts]
        except ValueError as exc:
            raise ParseError(f"invalid number in row: {line!r}", line=lineno) from exc
        if not all(math.isfinite(v) for v in values):
            raise ParseError("coordinates must be finite", line=lineno)
        points.append(Point4(*values))
    if len(points) < 2:
        raise ParseError("a path needs at least two points")
    return Polyline4(tuple(points))
