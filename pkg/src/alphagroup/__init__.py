"""Four-component hypercomplex arithmetic and its tensorial line element.

Numbers have the form a + b*i + c*mu + d*i*mu where the commuting units
satisfy i*i = -1 and mu*mu = mu.  Metric tensors are 4x4 grids of scalar
fields over the coordinates (x, y, z, t); the package evaluates the
squared line element they induce, detects when a metric reduces to a
real (Riemannian or Euclidean) quadratic form, and finds geodesic paths
between points by discrete length minimisation.
"""

from .algebra import (DEFAULT_SINGULARITY_TOL, IMU, MU, ONE, ZERO,
                      AlphaNumber, ComplexPair, I)
from .errors import (AlphaGroupError, ComponentIndexError,
                     DuplicateComponentError, EvalError,
                     NegativeSquaredLengthError, NotRiemannianError,
                     ParseError, UnknownIdentifierError, ZeroDivisorError)
from .fields import (MetricDefinition, ScalarField, eval_field, parse_field,
                     parse_metric_file)
from .geodesic import (GeodesicResult, Polyline4, SolverOptions, curve_length,
                       find_geodesic, path_from_csv, path_to_csv)
from .metric import (Displacement4, MetricClass, MetricKind, MetricTensor,
                     Point4, classify, default_classification_grid,
                     euclidean_ds2, eval_ds2_expanded, eval_ds2_grouped,
                     reduce_to_riemannian, riemannian_ds2)
from .selftest import CheckResult, run_selftest

__version__ = "0.1.0"

__all__ = [
    "AlphaGroupError", "AlphaNumber", "CheckResult", "ComplexPair",
    "ComponentIndexError", "DEFAULT_SINGULARITY_TOL", "Displacement4",
    "DuplicateComponentError", "EvalError", "GeodesicResult", "I", "IMU",
    "MetricClass", "MetricDefinition", "MetricKind", "MetricTensor", "MU",
    "NegativeSquaredLengthError", "NotRiemannianError", "ONE", "ParseError",
    "Point4", "Polyline4", "ScalarField", "SolverOptions",
    "UnknownIdentifierError", "ZERO", "ZeroDivisorError", "classify",
    "curve_length", "default_classification_grid", "euclidean_ds2",
    "eval_ds2_expanded", "eval_ds2_grouped", "eval_field", "find_geodesic",
    "parse_field", "parse_metric_file", "path_from_csv", "path_to_csv",
    "reduce_to_riemannian", "riemannian_ds2", "run_selftest",
]
