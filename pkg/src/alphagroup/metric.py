"""Line-element evaluation over 4x4 grids of scalar fields.

The squared line element assigns an :class:`AlphaNumber` to a point and a
displacement: term (r, c) of the expanded form is

    g[r][c](p) * d[r] * d[c] * basis(r) * basis(c)

with basis (1, i, mu, i*mu) indexed by row/column.  The basis factors are
computed through the algebra's multiplication, not hard-coded, so the
signs of the simplified form are a consequence, not an input.  The
grouped evaluation computes the four collected coefficients directly and
must agree with the expanded sum identically.

Metrics whose fourth row and column vanish reduce to a real quadratic
form in (dx, dy, dz); with a unit diagonal that form is the squared
Euclidean distance.  ``classify`` detects these patterns by sampling,
``reduce_to_riemannian`` performs the reduction (zeroing the fourth
row/column and absorbing the sign of g[2][2]).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .algebra import IMU, MU, ONE, ZERO, I, AlphaNumber
from .errors import EvalError
from .fields import Neg, ScalarField, ZERO_FIELD, MetricDefinition

DEFAULT_CLASSIFY_TOL = 1e-9

_BASIS = (ONE, I, MU, IMU)
# basis(r) * basis(c) for every grid slot, via the algebra's product.
_BASIS_PRODUCTS = tuple(tuple(_BASIS[r] * _BASIS[c] for c in range(4))
                        for r in range(4))

# Components that must vanish for the metric to reduce to a real
# quadratic form (fourth row and column).
_REDUCTION_ZEROED = ((1, 4), (2, 4), (3, 4), (4, 1), (4, 2), (4, 3), (4, 4))
_UNIT_DIAGONAL = ((1, 1), (2, 2), (3, 3))
_SPATIAL_OFF_DIAGONAL = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))


@dataclass(frozen=True)
class Point4:
    """A coordinate point (x, y, z, t); all coordinates finite."""

    x: float
    y: float
    z: float
    t: float

    def __post_init__(self):
        for name in ("x", "y", "z", "t"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coordinate {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.z, self.t)


@dataclass(frozen=True)
class Displacement4:
    """A displacement (dx, dy, dz, dt); all components finite."""

    dx: float
    dy: float
    dz: float
    dt: float

    def __post_init__(self):
        for name in ("dx", "dy", "dz", "dt"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"component {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.dx, self.dy, self.dz, self.dt)


class MetricKind(Enum):
    GENERAL_ALPHA = "GENERAL_ALPHA"
    RIEMANNIAN_PATTERN = "RIEMANNIAN_PATTERN"
    EUCLIDEAN_PATTERN = "EUCLIDEAN_PATTERN"


@dataclass(frozen=True)
class MetricClass:
    """Result of :func:`classify`: the detected pattern, the tolerance it
    was detected at, and the offending components when general."""

    kind: MetricKind
    tol: float
    offenders: tuple[str, ...] = ()


@dataclass(frozen=True)
class MetricTensor:
    """An immutable 4x4 grid of scalar fields g[r][c](x, y, z, t)."""

    grid: tuple[tuple[ScalarField, ...], ...]

    def __post_init__(self):
        if len(self.grid) != 4 or any(len(row) != 4 for row in self.grid):
            raise ValueError("metric grid must be 4x4")

    @classmethod
    def from_definition(cls, definition: MetricDefinition) -> "MetricTensor":
        return cls(tuple(tuple(definition.field_at(r, c) for c in range(1, 5))
                         for r in range(1, 5)))

    @classmethod
    def from_components(
            cls, components: Mapping[tuple[int, int], ScalarField]) -> "MetricTensor":
        for row, col in components:
            if not (1 <= row <= 4 and 1 <= col <= 4):
                raise ValueError(f"component index g[{row}][{col}] outside 1..4")
        return cls(tuple(tuple(components.get((r, c), ZERO_FIELD)
                               for c in range(1, 5))
                         for r in range(1, 5)))

    def component(self, row: int, col: int) -> ScalarField:
        if not (1 <= row <= 4 and 1 <= col <= 4):
            raise ValueError(f"component index g[{row}][{col}] outside 1..4")
        return self.grid[row - 1][col - 1]

    def component_value(self, row: int, col: int, p: Point4) -> float:
        try:
            return self.component(row, col).evaluate(p.x, p.y, p.z, p.t)
        except EvalError as exc:
            raise EvalError(f"g[{row}][{col}]: {exc}") from exc

    def evaluate(self, p: Point4) -> tuple[tuple[float, ...], ...]:
        """All sixteen component values at ``p`` (row-major)."""
        return tuple(tuple(self.component_value(r, c, p) for c in range(1, 5))
                     for r in range(1, 5))


def eval_ds2_expanded(g: MetricTensor, p: Point4, d: Displacement4) -> AlphaNumber:
    """Sum of the sixteen terms g[r][c] * d[r] * d[c] * basis(r) * basis(c)."""
    values = g.evaluate(p)
    disp = d.as_tuple()
    total = ZERO
    for r in range(4):
        for c in range(4):
            coeff = values[r][c] * disp[r] * disp[c]
            total = total + _BASIS_PRODUCTS[r][c] * coeff
    return total


def eval_ds2_grouped(g: MetricTensor, p: Point4, d: Displacement4) -> AlphaNumber:
    """The four collected coefficients, computed directly.

    Identical (up to float reassociation) to :func:`eval_ds2_expanded`;
    the equivalence is enforced by the test-suite.
    """
    v = g.evaluate(p)
    dx, dy, dz, dt = d.as_tuple()
    real = v[0][0] * dx * dx - v[1][1] * dy * dy
    i_part = (v[0][1] + v[1][0]) * (dx * dy)
    mu_part = (v[0][2] * (dx * dz) - v[1][3] * (dy * dt) + v[2][0] * (dz * dx)
               + v[2][2] * (dz * dz) - v[3][1] * (dt * dy) - v[3][3] * (dt * dt))
    imu_part = (v[0][3] * (dt * dx) + v[1][2] * (dy * dz) + v[2][1] * (dz * dy)
                + v[2][3] * (dz * dt) + v[3][0] * (dt * dx) + v[3][2] * (dt * dz))
    return AlphaNumber(real, i_part, mu_part, imu_part)


def riemannian_ds2(g: MetricTensor, p: Point4, d: Displacement4) -> float:
    """Real quadratic form over the spatial 3x3 block of ``g``."""
    g11 = g.component_value(1, 1, p)
    g12 = g.component_value(1, 2, p)
    g13 = g.component_value(1, 3, p)
    g21 = g.component_value(2, 1, p)
    g22 = g.component_value(2, 2, p)
    g23 = g.component_value(2, 3, p)
    g31 = g.component_value(3, 1, p)
    g32 = g.component_value(3, 2, p)
    g33 = g.component_value(3, 3, p)
    dx, dy, dz = d.dx, d.dy, d.dz
    return (g11 * dx * dx + (g12 + g21) * (dx * dy) + (g13 + g31) * (dx * dz)
            + g22 * dy * dy + (g23 + g32) * (dy * dz) + g33 * dz * dz)


def euclidean_ds2(d: Displacement4) -> float:
    """Squared Euclidean distance dx^2 + dy^2 + dz^2 (t does not contribute)."""
    return d.dx * d.dx + d.dy * d.dy + d.dz * d.dz


def default_classification_grid() -> tuple[Point4, ...]:
    """81 sample points: the lattice {-1, 0, 1}^4."""
    return tuple(Point4(*coords)
                 for coords in itertools.product((-1.0, 0.0, 1.0), repeat=4))


def classify(g: MetricTensor, samples: Sequence[Point4] | None = None,
             tol: float = DEFAULT_CLASSIFY_TOL) -> MetricClass:
    """Detect whether ``g`` matches the Riemannian or Euclidean pattern.

    Fields are opaque functions, so the zero pattern is checked by
    sampling: the fourth row/column must vanish (within ``tol``) at every
    sample for the Riemannian pattern; additionally a unit diagonal and
    vanishing spatial off-diagonals give the Euclidean pattern.
    """
    if samples is None:
        samples = default_classification_grid()
    if not samples:
        raise ValueError("samples must be non-empty")

    def max_deviation(row: int, col: int, target: float = 0.0) -> float:
        return max(abs(g.component_value(row, col, p) - target) for p in samples)

    offenders = tuple(f"g[{r}][{c}]" for r, c in _REDUCTION_ZEROED
                      if max_deviation(r, c) > tol)
    if offenders:
        return MetricClass(MetricKind.GENERAL_ALPHA, tol, offenders)
    euclidean = (all(max_deviation(r, c, 1.0) <= tol for r, c in _UNIT_DIAGONAL)
                 and all(max_deviation(r, c) <= tol
                         for r, c in _SPATIAL_OFF_DIAGONAL))
    kind = MetricKind.EUCLIDEAN_PATTERN if euclidean else MetricKind.RIEMANNIAN_PATTERN
    return MetricClass(kind, tol)


def reduce_to_riemannian(g: MetricTensor) -> MetricTensor:
    """Zero the fourth row/column and negate g[2][2]; other slots untouched.

    Collapsing the expanded evaluation of the reduced tensor (every basis
    element replaced by 1) reproduces :func:`riemannian_ds2` of the
    original tensor.
    """
    zeroed = set(_REDUCTION_ZEROED)
    rows = []
    for r in range(1, 5):
        row = []
        for c in range(1, 5):
            if (r, c) in zeroed:
                row.append(ZERO_FIELD)
            elif (r, c) == (2, 2):
                row.append(Neg(g.component(2, 2)))
            else:
                row.append(g.component(r, c))
        rows.append(tuple(row))
    return MetricTensor(tuple(rows))
